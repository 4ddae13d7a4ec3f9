import pytest
from hypothesis import given, strategies as st

from cospan.setcore import GroundSet, InputError, Subset
from cospan.operators import (
    AXIOM_SCANS,
    SetOperator,
    basis_by_intersection,
    check_axiom,
    classify_space,
    dual_interior,
    extreme_points,
    generators_and_bases,
    is_uniquely_generated,
    scan_v1,
    scan_v2,
    scan_vv2,
)
from cospan.instances import constant_full_operator, identity_operator


def test_operator_construction_contract():
    g = GroundSet.of_size(2)
    with pytest.raises(InputError):
        SetOperator(g)  # neither table nor fn
    with pytest.raises(InputError):
        SetOperator(g, table=(0, 1, 2), fn=lambda m: m)
    with pytest.raises(InputError):
        SetOperator.from_table(g, (0, 1, 2))  # wrong length
    with pytest.raises(InputError):
        SetOperator.from_table(g, (0, 1, 2, 8))  # output off the ground set


def test_callback_backend_memoizes_and_tabulates():
    g = GroundSet.of_size(2)
    calls = []

    def fn(mask):
        calls.append(mask)
        return mask

    op = SetOperator.from_callable(g, fn, name="probe")
    assert op.apply(0b01) == 0b01
    assert op.apply(0b01) == 0b01
    assert calls == [0b01]
    assert op.table == (0, 1, 2, 3)
    assert op == identity_operator(g)
    bad = SetOperator.from_callable(g, lambda m: 9)
    with pytest.raises(InputError):
        bad.apply(0)


def test_operator_call_wraps_subsets(pex3):
    x = pex3.ground.subset(["1"])
    assert pex3(x).members() == ("1", "3")
    with pytest.raises(InputError):
        pex3(GroundSet.of_size(2).subset(["1"]))


def test_identity_classification():
    op = identity_operator(GroundSet.of_size(3))
    spaces = classify_space(op)
    assert spaces.violator and spaces.co_violator and spaces.closure
    assert spaces.convex_geometry
    assert is_uniquely_generated(op).holds


def test_constant_full_classification():
    op = constant_full_operator(GroundSet.of_size(3))
    spaces = classify_space(op)
    assert spaces.violator and spaces.closure
    assert not spaces.co_violator  # CV1 fails on ∅
    assert spaces.convex_geometry  # AE holds vacuously: nothing is outside φ(X)


def test_pex3_axioms(pex3):
    assert check_axiom(pex3, "V1").holds
    assert check_axiom(pex3, "V2").holds
    assert is_uniquely_generated(pex3).holds
    g3 = check_axiom(pex3, "G3")
    assert not g3.holds
    assert g3.witness == (pex3.ground.empty(), "3", "1")
    with pytest.raises(InputError):
        check_axiom(pex3, "Z9")


def test_pex3_generators_bases_extremes(pex3):
    g = pex3.ground
    gens, bases = generators_and_bases(pex3, g.subset(["1"]))
    assert {s.members() for s in gens} == {("1",), ("1", "3")}
    assert {s.members() for s in bases} == {("1",)}
    assert extreme_points(pex3, g.subset(["1", "3"])).members() == ("1",)
    bi = basis_by_intersection(pex3, g.subset(["1", "3"]))
    assert bi.subset.members() == ("1",) and bi.is_generator


def test_pex3_dual_interior(pex3):
    dual = dual_interior(pex3)
    assert dual.table == (0, 1, 2, 3, 4, 5, 2, 7)  # identity except c({2,3}) = {2}
    assert check_axiom(dual, "CV1").holds
    assert check_axiom(dual, "CV2").holds
    assert dual_interior(dual) == pex3


def test_axiom_scan_names_cover_the_glossary():
    assert set(AXIOM_SCANS) == {"V1", "V2", "VV2", "C2", "C3", "CV1", "CV2", "AE", "EX", "G3"}


@st.composite
def extensive_tables(draw, n=3):
    full = (1 << n) - 1
    table = []
    for x in range(1 << n):
        extra = draw(st.integers(min_value=0, max_value=full)) & full & ~x
        table.append(x | extra)
    return tuple(table)


@given(extensive_tables())
def test_extensive_tables_pass_v1(table):
    assert scan_v1(3, table) is None


@given(extensive_tables())
def test_v2_iff_vv2_on_random_tables(table):
    assert (scan_v2(3, table) is None) == (scan_vv2(3, table) is None)


@given(extensive_tables())
def test_dual_interior_is_an_involution(table):
    op = SetOperator.from_table(GroundSet.of_size(3), table)
    assert dual_interior(dual_interior(op)) == op


def test_witnesses_are_rejectable(square_seb):
    ae = check_axiom(square_seb, "AE")
    assert not ae.holds
    x, p, q = ae.witness
    assert isinstance(x, Subset) and x.members() == ("p1", "p2")
    assert (p, q) == ("p3", "p4")
    # re-check the witness by hand: p ∈ φ(X∪q) and q ∈ φ(X∪p), both outside φ(X)
    phi_x = square_seb(x)
    assert p not in phi_x and q not in phi_x
    assert p in square_seb(x.with_element(q))
    assert q in square_seb(x.with_element(p))
