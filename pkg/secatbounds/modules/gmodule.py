# secatbounds/modules/gmodule.py
from __future__ import annotations

import logging
from typing import Callable, Optional, Sequence

import numpy as np

from secatbounds.config import Caps, resolve_caps
from secatbounds.errors import InvalidGroupError
from secatbounds.groups.finite_group import FiniteGroup

logger = logging.getLogger(__name__)

ActionFn = Callable[[int], np.ndarray]


class GModule:
    """Free abelian group Z^rank with a left G-action by integer matrices.

    The action is kept per group element. Derived modules (tensor and Hom
    modules) pass ``action_fn`` and their matrices are built on first use.
    """

    def __init__(
        self,
        group: FiniteGroup,
        rank: int,
        actions: Optional[np.ndarray] = None,
        *,
        action_fn: Optional[ActionFn] = None,
        labels: Optional[Sequence[str]] = None,
        name: str = "M",
    ):
        if (actions is None) == (action_fn is None):
            raise ValueError("pass exactly one of actions / action_fn")
        self.group = group
        self.rank = int(rank)
        self.name = name
        self.labels = tuple(labels) if labels is not None else tuple(str(i) for i in range(self.rank))
        self._cache: dict[int, np.ndarray] = {}
        self._sparse: dict[int, list[list[tuple[int, int]]]] = {}
        if actions is not None:
            arr = np.asarray(actions, dtype=np.int64).reshape(group.order, self.rank, self.rank)
            for g in group.elements:
                m = arr[g]
                m.setflags(write=False)
                self._cache[g] = m
            self._action_fn = None
        else:
            self._action_fn = action_fn

    def matrix(self, g: int) -> np.ndarray:
        m = self._cache.get(g)
        if m is None:
            m = np.asarray(self._action_fn(g), dtype=np.int64).reshape(self.rank, self.rank)
            m.setflags(write=False)
            self._cache[g] = m
        return m

    @property
    def actions(self) -> np.ndarray:
        return np.stack([self.matrix(g) for g in self.group.elements]) if self.rank else \
            np.zeros((self.group.order, 0, 0), dtype=np.int64)

    def sparse(self, g: int) -> list[list[tuple[int, int]]]:
        """Per column j, the nonzero (i, value) entries of action(g)."""
        cols = self._sparse.get(g)
        if cols is None:
            m = self.matrix(g)
            cols = []
            for j in range(self.rank):
                nz = np.nonzero(m[:, j])[0]
                cols.append([(int(i), int(m[i, j])) for i in nz])
            self._sparse[g] = cols
        return cols

    def apply(self, g: int, v: Sequence[int]) -> list[int]:
        out = [0] * self.rank
        for j, x in enumerate(v):
            if x:
                for i, a in self.sparse(g)[j]:
                    out[i] += a * x
        return out

    @property
    def is_trivial_action(self) -> bool:
        eye = np.eye(self.rank, dtype=np.int64)
        return all(np.array_equal(self.matrix(g), eye) for g in self.group.generators)

    def validate(self, caps: Optional[Caps] = None) -> None:
        """Action is a homomorphism into GL(rank, Z).

        ρ(s·h) = ρ(s)ρ(h) for generators s and all h already forces it for all pairs.
        """
        caps = resolve_caps(caps)
        G = self.group
        eye = np.eye(self.rank, dtype=np.int64)
        if not np.array_equal(self.matrix(G.identity), eye):
            raise InvalidGroupError(f"{self.name}: identity does not act trivially", field=self.name)
        if G.order > caps.full_check_order:
            logger.debug("%s: order %d above full-check bound, checking generators only", self.name, G.order)
        for s in G.generators:
            ms = self.matrix(s)
            for h in G.elements:
                if not np.array_equal(self.matrix(G.mul(s, h)), ms @ self.matrix(h)):
                    raise InvalidGroupError(
                        f"{self.name}: action is not multiplicative at ({G.label(s)}, {G.label(h)})",
                        field=self.name,
                    )

    def __repr__(self) -> str:
        return f"GModule({self.name}, rank={self.rank}, group={self.group.name})"


class GMap:
    """Equivariant map given by a target.rank × source.rank integer matrix."""

    def __init__(self, source: GModule, target: GModule, matrix, name: str = "f"):
        self.source = source
        self.target = target
        self.matrix = np.asarray(matrix, dtype=np.int64).reshape(target.rank, source.rank)
        self.matrix.setflags(write=False)
        self.name = name

    @property
    def rows(self) -> list[list[int]]:
        return [[int(v) for v in row] for row in self.matrix.tolist()]

    def apply(self, v: Sequence[int]) -> list[int]:
        out = [0] * self.target.rank
        m = self.matrix
        for j, x in enumerate(v):
            if x:
                for i in np.nonzero(m[:, j])[0]:
                    out[int(i)] += int(m[i, j]) * x
        return out

    def compose(self, first: "GMap") -> "GMap":
        """self ∘ first"""
        return GMap(first.source, self.target, self.matrix @ first.matrix, name=f"{self.name}.{first.name}")

    def is_equivariant(self) -> bool:
        G = self.source.group
        return all(
            np.array_equal(self.matrix @ self.source.matrix(g), self.target.matrix(g) @ self.matrix)
            for g in G.generators
        )

    def is_zero(self) -> bool:
        return not self.matrix.any()

    def __repr__(self) -> str:
        return f"GMap({self.name}: {self.source.name} -> {self.target.name})"
