import pytest

from secatbounds.bounds import (
    AmalgamEdge,
    BoundInterval,
    EpimorphismDescriptor,
    GroupDescriptor,
    RULES,
    Relation,
    SpaceHypotheses,
    SubgroupDescriptor,
    bound_report,
    cd_of,
    k_of,
    secat_subgroup,
    tc_of_epi,
    tc_r,
    tc_r_space,
)
from secatbounds.bounds.interval import maximum_of, sum_of
from secatbounds.errors import InconsistentBoundsError, InputError

Z = GroupDescriptor.free_abelian
F = GroupDescriptor.free
S = GroupDescriptor.surface


def bounds(interval):
    return interval.lower, interval.upper


# ---------------------------------------------------------------- intervals

def test_empty_interval_rejected():
    with pytest.raises(InconsistentBoundsError):
        BoundInterval(3, 1)


def test_meet():
    assert BoundInterval.point(2).meet(BoundInterval.at_least(1)) == BoundInterval.point(2)
    assert bounds(BoundInterval(0, 5).meet(BoundInterval(2, 9))) == (2, 5)
    with pytest.raises(InconsistentBoundsError):
        BoundInterval.point(1).meet(BoundInterval.point(2))


def test_arithmetic():
    assert bounds(BoundInterval(1, 3) - BoundInterval(0, 1)) == (0, 3)
    assert bounds(BoundInterval(1, 3) + 2) == (3, 5)
    assert bounds(BoundInterval.at_least(1).scale(2)) == (2, None)
    assert BoundInterval(4, 7).scale(0) == BoundInterval.point(0)
    assert bounds(BoundInterval(1, 2).maximum(BoundInterval(0, None))) == (1, None)
    assert maximum_of([]) == BoundInterval.point(0)
    assert bounds(sum_of([BoundInterval(1, 1), BoundInterval(0, 2)])) == (1, 3)


def test_text():
    assert BoundInterval.point(3).text() == "= 3"
    assert BoundInterval.at_least(2).text() == "[2, +inf]"
    assert BoundInterval.unknown().to_dict()["upper"] == "+inf"


# ---------------------------------------------------------------- descriptors

@pytest.mark.parametrize("build", [
    lambda: F(1),
    lambda: S(1),
    lambda: Z(0),
    lambda: GroupDescriptor.generic(cd=(3, 1)),
    lambda: GroupDescriptor.generic(k=(-1, 2)),
    lambda: GroupDescriptor.product(Z(1)),
    lambda: F(2, edge=AmalgamEdge()),
    lambda: F(2, abelian=True),
    lambda: GroupDescriptor.trivial(cd=(1, 1)),
])
def test_descriptor_validation(build):
    with pytest.raises(InputError):
        build()


def test_epimorphism_validation():
    with pytest.raises(InputError):
        EpimorphismDescriptor(source=Z(2), target=GroupDescriptor.trivial(), kernel=GroupDescriptor.trivial())
    with pytest.raises(InputError):
        EpimorphismDescriptor(source=F(2), target=Z(1), kernel=F(2), central_kernel=True)
    with pytest.raises(InputError):
        EpimorphismDescriptor(source=Z(2), target=Z(1), kernel=Z(1), cd_phi=1)


def test_labels():
    assert Z(1).label() == "Z"
    assert GroupDescriptor.product(Z(2), F(3)).label() == "Z^2 × F_3"
    assert SubgroupDescriptor.diagonal(S(2), 3).subgroup_label == "Δ_3(Σ_2)"


def test_rule_names_are_unique():
    names = RULES.names()
    assert len(names) == len(set(names))


# ---------------------------------------------------------------- cd and k

def test_cd_values():
    assert cd_of(Z(4)).value == 4
    assert cd_of(GroupDescriptor.product(Z(2), F(2))).value == 3
    assert bounds(cd_of(GroupDescriptor.generic())) == (0, None)
    assert cd_of(GroupDescriptor.generic(cd=(2, 3))).to_dict()["lower"] == 2


def test_cd_of_amalgam():
    equal = GroupDescriptor.amalgam(F(2), F(2))
    assert bounds(cd_of(equal)) == (1, 2)
    unequal = GroupDescriptor.amalgam(Z(3), F(2))
    assert cd_of(unequal).value == 3
    finite_index = GroupDescriptor.amalgam(Z(2), Z(2), AmalgamEdge(finite_index_in_left=True, finite_index_in_right=True, factors_fp_infinity=True))
    assert cd_of(finite_index).value == 3


def test_k_values():
    assert k_of(GroupDescriptor.trivial()).value == 0
    assert k_of(Z(3)).value == 3
    assert k_of(F(2)).value == 1
    assert k_of(S(3)).value == 1


def test_inconsistent_metadata():
    with pytest.raises(InconsistentBoundsError):
        cd_of(Z(2, cd=(3, 3)))
    with pytest.raises(InconsistentBoundsError):
        secat_subgroup(Z(2), SubgroupDescriptor(Relation.TRIVIAL, kappa=(1, 1)))


# ---------------------------------------------------------------- TC_r

@pytest.mark.parametrize("n", range(1, 6))
@pytest.mark.parametrize("r", range(2, 6))
def test_tc_free_abelian(n, r):
    assert tc_r(Z(n), r).value == (r - 1) * n


@pytest.mark.parametrize("r", range(2, 6))
def test_tc_hyperbolic(r):
    assert tc_r(F(3), r).value == r
    assert tc_r(S(2), r).value == 2 * r
    assert tc_r(GroupDescriptor.hyperbolic(3), r).value == 3 * r


def test_tc_trivial_and_r_check():
    assert tc_r(GroupDescriptor.trivial(), 3).value == 0
    with pytest.raises(InputError):
        tc_r(Z(1), 1)


@pytest.mark.parametrize("r", [2, 3])
def test_tc_malnormal_amalgam(r):
    amalgam = GroupDescriptor.amalgam(F(2), F(2), AmalgamEdge(malnormal_in_left=True), cd=(2, 2))
    assert bounds(tc_r(amalgam, r)) == (2 * r - 1, 2 * r)


def test_tc_monotone_in_r():
    for d in (Z(2), F(2), S(2)):
        values = [tc_r(d, r).value for r in range(2, 6)]
        assert values == sorted(values)


def test_tc_has_derivation():
    interval = tc_r(Z(2), 3)
    assert "tc_free_abelian" in [step.rule for step in interval.derivation]
    assert all(step.anchor for step in interval.derivation)


# ---------------------------------------------------------------- secat

@pytest.mark.parametrize("pi", [Z(2), S(2), F(2)])
@pytest.mark.parametrize("r", [2, 3])
def test_diagonal_secat_is_tc(pi, r):
    assert secat_subgroup(pi.power(r), SubgroupDescriptor.diagonal(pi, r)).same_bounds(tc_r(pi, r))


def test_secat_trivial_and_whole():
    assert secat_subgroup(Z(2), SubgroupDescriptor(Relation.TRIVIAL)).value == 2
    assert secat_subgroup(GroupDescriptor.generic(), SubgroupDescriptor(Relation.WHOLE)).value == 0


def test_secat_normal_with_free_top_cohomology():
    sub = SubgroupDescriptor(Relation.NORMAL, group=Z(1), quotient=Z(1), top_cohomology_z_free=True)
    assert secat_subgroup(Z(2), sub).value == 1


def test_secat_malnormal_subgroup():
    sub = SubgroupDescriptor(Relation.GENERAL, group=Z(1), malnormal=True)
    assert secat_subgroup(S(2), sub).value == 2


# ---------------------------------------------------------------- TC[ρ]

def test_epi_injective():
    e = EpimorphismDescriptor(source=Z(2), target=Z(2), kernel=GroupDescriptor.trivial())
    assert tc_of_epi(e).value == 0


def test_epi_trivial_target_is_tc2():
    e = EpimorphismDescriptor(source=F(2), target=GroupDescriptor.trivial(), kernel=F(2))
    assert tc_of_epi(e).value == tc_r(F(2), 2).value == 2


def test_epi_sandwich():
    e = EpimorphismDescriptor(
        source=S(2), target=F(2), kernel=GroupDescriptor.generic("K", cd=(1, 1)),
        kernel_top_cohomology_z_free=True, k_rho=(1, 1),
    )
    assert bounds(tc_of_epi(e)) == (2, 3)


def test_epi_central_kernel():
    e = EpimorphismDescriptor(source=Z(3), target=Z(1), kernel=Z(2), central_kernel=True)
    assert tc_of_epi(e).value == 2


# ---------------------------------------------------------------- TC_r(X)

def test_space_aspherical():
    assert tc_r_space(Z(2), 2, SpaceHypotheses(dimension=2, aspherical=True)).value == 2


def test_space_maximality():
    interval = tc_r_space(F(2), 2, SpaceHypotheses(dimension=3, top_power_nonzero=True))
    assert interval.value == 6
    interval = tc_r_space(F(2), 2, SpaceHypotheses(dimension=3, top_power_nonzero=False))
    assert bounds(interval) == (1, 5)


def test_space_canonical_height():
    interval = tc_r_space(GroupDescriptor.generic(), 2, SpaceHypotheses(dimension=4, canonical_height=3))
    assert bounds(interval) == (3, 8)


def test_space_connectivity_threshold():
    # cd(Σ_2) = 2 needs a simply connected universal cover
    below = tc_r_space(S(2), 2, SpaceHypotheses(dimension=4, cover_connectivity=0))
    at = tc_r_space(S(2), 2, SpaceHypotheses(dimension=4, cover_connectivity=1))
    assert below.lower < 3
    assert bounds(at) == (3, 8)


def test_space_inconsistent_maximality():
    with pytest.raises(InconsistentBoundsError):
        tc_r_space(Z(2), 2, SpaceHypotheses(dimension=2, top_power_nonzero=True))


def test_space_hypotheses_validation():
    with pytest.raises(InputError):
        SpaceHypotheses(dimension=-1)


# ---------------------------------------------------------------- reports

def test_bound_report():
    report = bound_report("tc", Z(3), 4).to_dict()
    assert report["query"] == "TC_4(Z^3)"
    assert report["exact"]
    assert report["interval"]["lower"] == report["interval"]["upper"] == 9


def test_bound_report_space_note():
    report = bound_report("tc_space", F(2), 2, space=SpaceHypotheses(dimension=3))
    assert report.notes and "6" in report.notes[0]


def test_bound_report_errors():
    with pytest.raises(InputError):
        bound_report("volume", Z(1))
    with pytest.raises(InputError):
        bound_report("tc", Z(1))
