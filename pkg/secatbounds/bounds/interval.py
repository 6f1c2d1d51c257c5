# secatbounds/bounds/interval.py
"""
Integer intervals with derivation trails.

``None`` stands for -inf as a lower end and +inf as an upper end.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from secatbounds.errors import InconsistentBoundsError

Bound = Optional[int]


def _fmt_lower(v: Bound) -> str:
    return "-inf" if v is None else str(v)


def _fmt_upper(v: Bound) -> str:
    return "+inf" if v is None else str(v)


@dataclass(frozen=True)
class DerivationStep:
    """One rule firing: which quantity it tightened and from what."""
    rule: str
    anchor: str
    quantity: str
    premises: tuple[tuple[str, str], ...] = ()
    conclusion: str = ""

    def to_dict(self) -> dict:
        return {
            "rule": self.rule,
            "anchor": self.anchor,
            "quantity": self.quantity,
            "premises": {label: value for label, value in self.premises},
            "conclusion": self.conclusion,
        }


@dataclass(frozen=True)
class BoundInterval:
    lower: Bound = 0
    upper: Bound = None
    derivation: tuple[DerivationStep, ...] = field(default=(), compare=False)

    def __post_init__(self):
        if self.is_empty:
            raise InconsistentBoundsError(f"empty interval [{self.lower}, {self.upper}]")

    @classmethod
    def unknown(cls) -> "BoundInterval":
        """[0, +inf): every quantity here is a non-negative integer."""
        return cls(0, None)

    @classmethod
    def top(cls) -> "BoundInterval":
        return cls(None, None)

    @classmethod
    def point(cls, value: int) -> "BoundInterval":
        return cls(value, value)

    @classmethod
    def at_least(cls, value: Bound) -> "BoundInterval":
        return cls(value, None)

    @classmethod
    def at_most(cls, value: Bound) -> "BoundInterval":
        return cls(None, value)

    @classmethod
    def from_range(cls, lower: Bound, upper: Bound) -> "BoundInterval":
        return cls(lower, upper)

    @property
    def is_empty(self) -> bool:
        return self.lower is not None and self.upper is not None and self.lower > self.upper

    @property
    def exact(self) -> bool:
        return self.lower is not None and self.lower == self.upper

    @property
    def value(self) -> Optional[int]:
        return self.lower if self.exact else None

    @property
    def bounded(self) -> bool:
        return self.upper is not None

    def contains(self, v: int) -> bool:
        return (self.lower is None or self.lower <= v) and (self.upper is None or v <= self.upper)

    def contains_interval(self, other: "BoundInterval") -> bool:
        lo_ok = self.lower is None or (other.lower is not None and self.lower <= other.lower)
        hi_ok = self.upper is None or (other.upper is not None and other.upper <= self.upper)
        return lo_ok and hi_ok

    def same_bounds(self, other: "BoundInterval") -> bool:
        return self.lower == other.lower and self.upper == other.upper

    def meet(self, other: "BoundInterval") -> "BoundInterval":
        """Intersection; raises ``InconsistentBoundsError`` when it is empty."""
        lo = _max_lower(self.lower, other.lower)
        hi = _min_upper(self.upper, other.upper)
        if lo is not None and hi is not None and lo > hi:
            raise InconsistentBoundsError(
                f"{self.text()} and {other.text()} do not intersect"
            )
        return BoundInterval(lo, hi, self.derivation + other.derivation)

    def with_derivation(self, steps) -> "BoundInterval":
        return BoundInterval(self.lower, self.upper, tuple(steps))

    # interval arithmetic; derivations are not carried through
    def __add__(self, other: "BoundInterval | int") -> "BoundInterval":
        other = _coerce(other)
        return BoundInterval(_add(self.lower, other.lower), _add(self.upper, other.upper))

    def __sub__(self, other: "BoundInterval | int") -> "BoundInterval":
        other = _coerce(other)
        return BoundInterval(_sub(self.lower, other.upper), _sub(self.upper, other.lower))

    def scale(self, k: int) -> "BoundInterval":
        if k < 0:
            raise ValueError("scale factor must be non-negative")
        if k == 0:
            return BoundInterval.point(0)
        return BoundInterval(None if self.lower is None else k * self.lower,
                             None if self.upper is None else k * self.upper)

    def maximum(self, other: "BoundInterval") -> "BoundInterval":
        return BoundInterval(_max_lower(self.lower, other.lower),
                             None if self.upper is None or other.upper is None else max(self.upper, other.upper))

    def lower_only(self) -> "BoundInterval":
        return BoundInterval(self.lower, None)

    def upper_only(self) -> "BoundInterval":
        return BoundInterval(None, self.upper)

    def text(self) -> str:
        if self.exact:
            return f"= {self.lower}"
        return f"[{_fmt_lower(self.lower)}, {_fmt_upper(self.upper)}]"

    def to_dict(self) -> dict:
        return {
            "lower": _fmt_lower(self.lower) if self.lower is None else self.lower,
            "upper": _fmt_upper(self.upper) if self.upper is None else self.upper,
            "exact": self.exact,
            "text": self.text(),
            "derivation": [step.to_dict() for step in self.derivation],
        }

    def __str__(self) -> str:
        return self.text()


def _coerce(v) -> BoundInterval:
    return BoundInterval.point(v) if isinstance(v, int) else v


def _add(a: Bound, b: Bound) -> Bound:
    return None if a is None or b is None else a + b


def _sub(a: Bound, b: Bound) -> Bound:
    return None if a is None or b is None else a - b


def _max_lower(a: Bound, b: Bound) -> Bound:
    if a is None:
        return b
    if b is None:
        return a
    return max(a, b)


def _min_upper(a: Bound, b: Bound) -> Bound:
    if a is None:
        return b
    if b is None:
        return a
    return min(a, b)


def maximum_of(intervals) -> BoundInterval:
    """Interval of max(x_1, ..., x_k); the empty maximum is 0."""
    result = BoundInterval.point(0)
    for iv in intervals:
        result = result.maximum(iv)
    return result


def sum_of(intervals) -> BoundInterval:
    result = BoundInterval.point(0)
    for iv in intervals:
        result = result + iv
    return result
