import pytest
from hypothesis import given, settings, strategies as st

from cospan.setcore import GroundSet, InputError, SetFamily, complement_family
from cospan.operators import is_uniquely_generated
from cospan.cospanning import partition_from_operator
from cospan.structures import (
    antimatroid_basis,
    build_convex_geometry,
    build_greedoid,
    check_convex_geometry,
    check_greedoid,
    classify_family,
    closed_sets,
    closure_from_closed_sets,
    duality_suite,
    feasible_from_operator,
    rank_table,
)
from cospan.instances import (
    chain_antimatroid,
    paper_example_operator,
    random_poset_antimatroid,
    uniform_matroid,
)


def test_check_greedoid_witnesses():
    g = GroundSet.of_size(2)
    missing_empty = check_greedoid(SetFamily(g, (0b01,)))
    assert not missing_empty.holds and missing_empty.witness == (g.empty(),)
    # {∅, {1,2}} breaks augmentation: |{1,2}| > |∅| but neither extension helps
    no_aug = check_greedoid(SetFamily(g, (0, 0b11)))
    assert not no_aug.holds
    assert no_aug.witness[0].members() == ("1", "2")
    assert check_greedoid(SetFamily(g, (0, 0b01, 0b11))).holds


def test_rank_and_sigma_of_pex3_bases(pex3):
    fam = feasible_from_operator(pex3)
    assert {s.members() for s in fam} == {
        (), ("1",), ("2",), ("3",), ("1", "2"), ("2", "3"), ("1", "2", "3")
    }
    ranks = rank_table(fam)
    assert ranks[0b101] == 1  # largest feasible subset of {1,3} is a singleton
    assert ranks[0b111] == 3
    greedoid = build_greedoid(fam)
    assert greedoid.sigma.table == (0, 0b101, 0b010, 0b011, 0b101, 0b101, 0b110, 0b111)
    assert greedoid.gamma(fam.ground.subset(["2"])).members() == ("1", "3")
    assert not is_uniquely_generated(greedoid.sigma).holds
    with pytest.raises(InputError):
        build_greedoid(SetFamily(fam.ground, (0b001,)))


def test_classify_family(chain3):
    assert classify_family(chain3) == classify_family(chain3)
    c = classify_family(chain3)
    assert c.greedoid and c.antimatroid and not c.matroid
    u = classify_family(uniform_matroid(3, 2))
    assert u.greedoid and u.matroid and not u.antimatroid
    pex_bases = feasible_from_operator(paper_example_operator())
    p = classify_family(pex_bases)
    assert p.greedoid and not p.antimatroid and not p.matroid


def test_closure_from_closed_sets():
    g = GroundSet.of_size(2)
    tau = closure_from_closed_sets(SetFamily(g, (0, 0b01, 0b11)))
    assert tau.table == (0, 0b01, 0b11, 0b11)
    assert closed_sets(tau).masks == (0, 0b01, 0b11)
    with pytest.raises(InputError):
        closure_from_closed_sets(SetFamily(g, (0, 0b01)))  # E missing
    with pytest.raises(InputError):
        # {∅,{1},{2},E} minus ∅ is not intersection-closed
        closure_from_closed_sets(SetFamily(g, (0b01, 0b10, 0b11)))


def test_check_convex_geometry_from_family(chain3):
    geometry = check_convex_geometry(complement_family(chain3))
    assert geometry.holds
    assert [r.property for r in geometry.axioms] == ["C1", "C2", "C3", "AE"]
    assert geometry.accessibility.holds and geometry.chain.holds
    built = build_convex_geometry(complement_family(chain3))
    assert built.closed_sets == complement_family(chain3)


def test_check_convex_geometry_rejects_non_ae(square_seb):
    report = check_convex_geometry(square_seb)
    assert not report.holds
    assert not next(r for r in report.axioms if r.property == "AE").holds
    # K = {∅, E} at n = 2: closure space, but AE fails between the two elements
    with pytest.raises(InputError, match="AE"):
        build_convex_geometry(SetFamily(GroundSet.of_size(2), (0, 0b11)))


def test_antimatroid_basis(chain3):
    g = chain3.ground
    basis = antimatroid_basis(chain3, g.subset(["1", "3"]))
    assert basis.members() == ("1",)
    assert antimatroid_basis(chain3, g.full()) == g.full()
    with pytest.raises(InputError):
        antimatroid_basis(uniform_matroid(3, 2), g.full())


def test_duality_suite_chain(chain3):
    report = duality_suite(chain3)
    assert report.holds
    with pytest.raises(InputError):
        duality_suite(uniform_matroid(3, 2))


def test_duality_class_counts(chain3, chain3_sigma):
    from cospan.cospanning import complement_partition

    tau = closure_from_closed_sets(complement_family(chain3))
    p_sigma = partition_from_operator(chain3_sigma)
    p_tau = partition_from_operator(tau)
    assert complement_partition(p_sigma) == p_tau
    assert len(p_sigma) == len(p_tau) == 4


@given(st.randoms(use_true_random=False))
@settings(max_examples=30, deadline=None)
def test_random_poset_antimatroids_are_antimatroids(rng):
    fam = random_poset_antimatroid(4, rng)
    c = classify_family(fam)
    assert c.greedoid and c.antimatroid
    assert duality_suite(fam).holds


@given(st.sets(st.integers(min_value=0, max_value=15)))
def test_hereditary_families_are_accessible(masks):
    # downward closure of any family is hereditary, hence accessible
    from cospan.setcore import family_predicate, submasks

    g = GroundSet.of_size(4)
    closed = {sub for m in masks for sub in submasks(m)} | {0}
    fam = SetFamily(g, tuple(closed))
    assert family_predicate(fam, "hereditary").holds
    assert family_predicate(fam, "accessible").holds
