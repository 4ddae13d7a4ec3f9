import pytest
from hypothesis import given, strategies as st

from cospan.setcore import (
    CapacityError,
    GroundMismatchError,
    GroundSet,
    InputError,
    PropertyReport,
    SetFamily,
    Subset,
    bit_indices,
    canonical_masks,
    complement_family,
    enumerate_subsets,
    family_predicate,
    max_dense_n,
    require_dense,
    submasks,
    subset_algebra,
)


def test_ground_set_labels_and_index():
    g = GroundSet.of_size(3)
    assert g.labels == ("1", "2", "3")
    assert g.n == 3 and g.full_mask == 0b111
    assert g.index("2") == 1
    with pytest.raises(InputError):
        g.index("9")
    with pytest.raises(InputError):
        GroundSet(("a", "a"))


def test_subset_algebra_and_membership():
    g = GroundSet.of_size(3)
    a = g.subset(["1", "3"])
    b = g.subset(["2", "3"])
    assert (a | b).mask == 0b111
    assert (a & b).members() == ("3",)
    assert (a - b).members() == ("1",)
    assert a.complement().members() == ("2",)
    assert not a <= b and a <= g.full()
    assert "3" in a and "2" not in a
    assert repr(a) == "{1,3}"
    assert a.with_element("2") == g.full()
    assert a.without_element("1").members() == ("3",)
    assert subset_algebra(a, b, "union") == a | b
    assert subset_algebra(a, None, "complement") == a.complement()
    with pytest.raises(InputError):
        subset_algebra(a, None, "union")
    with pytest.raises(InputError):
        subset_algebra(a, b, "frobnicate")


def test_ground_mismatch_is_detected():
    a = GroundSet.of_size(2).subset(["1"])
    b = GroundSet(("x", "y")).subset(["x"])
    with pytest.raises(GroundMismatchError):
        a | b


def test_submasks_descending_and_bit_indices():
    assert list(submasks(0b101)) == [0b101, 0b100, 0b001, 0b000]
    assert list(submasks(0)) == [0]
    assert list(bit_indices(0b1010)) == [1, 3]


def test_canonical_family_order():
    g = GroundSet.of_size(3)
    fam = SetFamily(g, (0b110, 0b001, 0b001, 0b011, 0))
    assert fam.masks == (0, 0b001, 0b011, 0b110)
    assert canonical_masks([3, 3, 1]) == (1, 3)
    assert g.subset(["1", "2"]) in fam
    assert len(fam) == 4


def test_family_predicates():
    g = GroundSet.of_size(3)
    # {∅, {1}, {2}, {1,2}, {1,3}, {1,2,3}}
    fam = SetFamily(g, (0, 0b001, 0b010, 0b011, 0b101, 0b111))
    assert family_predicate(fam, "union-closed").holds
    # every pairwise intersection is a member, so the scan must say so
    assert family_predicate(fam, "intersection-closed").holds
    hereditary = family_predicate(fam, "hereditary")
    assert not hereditary.holds
    assert hereditary.witness[0].members() == ("1", "3")
    assert family_predicate(fam, "accessible").holds
    assert family_predicate(fam, "contains-empty").holds
    assert family_predicate(fam, "contains-ground").holds
    with pytest.raises(InputError):
        family_predicate(fam, "prime")


def test_enumerate_subsets_counts():
    g = GroundSet.of_size(3)
    subs = list(enumerate_subsets(g))
    assert len(subs) == 8
    assert subs[0] == g.empty() and subs[-1] == g.full()


def test_capacity_cap(monkeypatch):
    monkeypatch.setenv("COSPAN_MAX_N", "2")
    assert max_dense_n() == 2
    with pytest.raises(CapacityError):
        require_dense(3)
    monkeypatch.setenv("COSPAN_MAX_N", "99")
    assert max_dense_n() == 20  # the env var can lower but never raise the cap
    monkeypatch.setenv("COSPAN_MAX_N", "many")
    with pytest.raises(InputError):
        max_dense_n()


def test_property_report_witness_contract():
    PropertyReport("p", True)
    PropertyReport("p", False, ("w",))
    with pytest.raises(InputError):
        PropertyReport("p", True, ("w",))
    with pytest.raises(InputError):
        PropertyReport("p", False)


@given(st.sets(st.integers(min_value=0, max_value=15)))
def test_complement_family_involution(masks):
    g = GroundSet.of_size(4)
    fam = SetFamily(g, tuple(masks))
    assert complement_family(complement_family(fam)) == fam


@given(st.integers(min_value=0, max_value=255))
def test_submasks_are_exactly_the_subsets(mask):
    subs = list(submasks(mask))
    assert len(subs) == 1 << mask.bit_count()
    assert all(s & ~mask == 0 for s in subs)
    assert subs == sorted(subs, reverse=True)
