import pytest

from secatbounds.linalg import (
    AbelianInvariants,
    column_echelon,
    kernel_basis,
    lattice_contains,
    lattice_equal,
    quotient_invariants,
    smith,
    solve,
    subquotient_invariants,
    xgcd,
)
from secatbounds.linalg.smith import matmul, matvec


@pytest.mark.parametrize("a, b", [(12, 18), (7, 5), (0, 4), (-6, 9)])
def test_xgcd_bezout(a, b):
    g, s, t = xgcd(a, b)
    assert g >= 0
    assert s * a + t * b == g
    if a or b:
        assert a % g == 0 and b % g == 0


@pytest.mark.parametrize("matrix, diagonal", [
    ([[2, 4], [6, 8]], (2, 4)),
    ([[1, 0], [0, 0]], (1,)),
    ([[0, 0], [0, 0]], ()),
    ([[2, 0, 0], [0, 3, 0]], (1, 6)),
    ([[4, 6, 8]], (2,)),
])
def test_smith_diagonal(matrix, diagonal):
    assert smith(matrix).diagonal == diagonal


def test_smith_transforms_reproduce_d():
    a = [[3, 1, 4], [1, 5, 9], [2, 6, 5], [3, 5, 8]]
    dec = smith(a)
    assert [list(r) for r in matmul(matmul(dec.U, a), dec.V)] == [list(r) for r in dec.D]
    m = len(a)
    product = matmul(dec.U, dec.U_inv)
    assert [list(r) for r in product] == [[int(i == j) for j in range(m)] for i in range(m)]
    for i, d in enumerate(dec.diagonal[:-1]):
        assert dec.diagonal[i + 1] % d == 0


def test_smith_solve():
    dec = smith([[2, 0], [0, 3]])
    assert dec.solve([4, 9]) == [2, 3]
    assert dec.solve([1, 0]) is None


def test_kernel_basis_is_annihilated():
    a = [[1, 2, 3], [2, 4, 6]]
    basis = kernel_basis(a)
    assert len(basis) == 2
    for k in basis:
        assert matvec(a, k) == [0, 0]


def test_echelon_solve_and_membership():
    a = [[2, 0], [0, 2]]
    assert solve(a, [4, 6]) == [2, 3]
    assert solve(a, [1, 0]) is None
    ech = column_echelon(a)
    assert ech.rank == 2
    assert ech.contains([2, 2]) and not ech.contains([1, 1])


def test_abelian_invariants_normalize():
    assert AbelianInvariants.from_divisors(0, [2, 3]) == AbelianInvariants(0, (6,))
    assert AbelianInvariants.from_divisors(1, [0, 4, 2, 1]) == AbelianInvariants(2, (2, 4))
    assert str(AbelianInvariants(1, (2,))) == "Z + Z/2"
    assert AbelianInvariants().is_zero


def test_quotient_and_subquotient():
    assert quotient_invariants(2, [[2, 0], [0, 3]]) == AbelianInvariants(0, (6,))
    assert quotient_invariants(3, [[1, 1, 0]]) == AbelianInvariants(2, ())
    # 2Z ⊂ Z: the subquotient 2Z / 4Z is Z/2
    assert subquotient_invariants(1, [[2]], [[4]]) == AbelianInvariants(0, (2,))


def test_lattice_helpers():
    assert lattice_contains(2, [[1, 1], [0, 2]], [3, 5])
    assert not lattice_contains(2, [[1, 1], [0, 2]], [0, 1])
    assert lattice_equal(2, [[1, 0], [0, 1]], [[1, 1], [0, 1]])
    assert not lattice_equal(2, [[2, 0]], [[1, 0]])
