import pytest
from hypothesis import given, settings, strategies as st

from cospan.setcore import GroundSet, InputError
from cospan.operators import SetOperator, scan_cv1, scan_cv2, scan_v1, scan_v2
from cospan.cospanning import (
    RELATION_PROPERTIES,
    CospanningPartition,
    IntervalPartition,
    check_relation_property,
    complement_partition,
    extremal_sets,
    interval_form,
    operator_from_partition,
    partition_dot,
    partition_from_operator,
)
from cospan.instances import identity_operator, random_hypercube_partition
from cospan.structures import build_greedoid, feasible_from_operator


def test_partition_validation():
    g = GroundSet.of_size(2)
    with pytest.raises(InputError):
        CospanningPartition.from_classes(g, [[0, 1]])  # misses 2 and 3
    with pytest.raises(InputError):
        CospanningPartition.from_classes(g, [[0, 1], [1, 2, 3]])  # 1 twice
    p = CospanningPartition.from_classes(g, [[3, 1], [0, 2]])
    assert p.classes == ((0, 2), (1, 3))  # numbered by smallest member
    assert p.same_class(0, 2) and not p.same_class(0, 1)
    assert len(p) == 2


def test_interval_partition_validation():
    g = GroundSet.of_size(2)
    with pytest.raises(InputError):
        IntervalPartition(g, ((0b10, 0b01),))  # lo not below hi
    with pytest.raises(InputError):
        IntervalPartition(g, ((0, 0b11), (0b01, 0b01)))  # overlap
    ip = IntervalPartition(g, ((0, 0b10), (0b01, 0b11)))
    p = ip.as_partition()
    assert p.classes == ((0, 2), (1, 3))


def test_pex3_partition(pex3):
    p = partition_from_operator(pex3)
    assert len(p.classes) == 7
    assert p.same_class(0b001, 0b101)
    ip = interval_form(p)
    assert (0b001, 0b101) in ip.intervals
    assert all(lo == hi for lo, hi in ip.intervals if lo != 0b001)
    r4g = check_relation_property(p, "R4G")
    assert not r4g.holds
    assert r4g.witness == (pex3.ground.empty(), "3", "1")


def test_identity_partition_all_properties_hold():
    op = identity_operator(GroundSet.of_size(2))
    p = partition_from_operator(op)
    assert len(p.classes) == 4
    for prop in RELATION_PROPERTIES:
        assert check_relation_property(p, prop).holds, prop
    with pytest.raises(InputError):
        check_relation_property(p, "R9")


def test_chain_sigma_partition(chain3_sigma):
    p = partition_from_operator(chain3_sigma)
    assert len(p.classes) == 4
    assert check_relation_property(p, "EqAN").holds
    r5 = check_relation_property(p, "R5")
    assert not r5.holds
    assert r5.witness[0].members() == ("1", "2")


def test_non_interval_class_is_reported(pex3):
    fam = feasible_from_operator(pex3)
    p = partition_from_operator(build_greedoid(fam).sigma)
    with pytest.raises(InputError, match="not an interval"):
        interval_form(p)
    with pytest.raises(InputError):
        check_relation_property(p, "EqCL")  # EqCL needs the interval form


def test_extremal_sets(pex3):
    p = partition_from_operator(pex3)
    minima = extremal_sets(p, "min")
    maxima = extremal_sets(p, "max")
    assert 0b001 in minima and 0b101 not in minima
    assert 0b101 in maxima and 0b001 not in maxima
    two_max = CospanningPartition.from_classes(
        GroundSet.of_size(2), [[0, 1, 2], [3]]
    )
    with pytest.raises(InputError):
        extremal_sets(two_max, "max")  # class {∅,{1},{2}} has two maxima


def test_reconstruction_round_trip(pex3):
    p = partition_from_operator(pex3)
    assert operator_from_partition(p, "max") == pex3
    bad = CospanningPartition.from_classes(GroundSet.of_size(2), [[1, 2], [0, 3]])
    with pytest.raises(InputError):
        operator_from_partition(bad, "max")  # {1}∪{2} is in another class


def test_min_reconstruction_single_class():
    g = GroundSet.of_size(2)
    p = CospanningPartition.from_classes(g, [list(range(4))])
    op = operator_from_partition(p, "min")
    assert op.table == (0, 0, 0, 0)
    assert scan_cv1(2, op.table) is None and scan_cv2(2, op.table) is None


def test_partition_dot_is_deterministic(pex3):
    p = partition_from_operator(pex3)
    dot = partition_dot(p)
    assert dot == partition_dot(p)
    assert dot.startswith("graph hypercube {")
    assert 'label="{1,3}"' in dot and "class_id=" in dot
    assert dot.count(" -- ") == 3 * 4  # n * 2^(n-1) hypercube edges


@given(st.integers(min_value=0, max_value=2**31), st.integers(min_value=1, max_value=4))
@settings(max_examples=40, deadline=None)
def test_random_interval_partitions_reconstruct_to_ug_violators(seed, n):
    ip = random_hypercube_partition(n, seed)
    p = ip.as_partition()
    op = operator_from_partition(p, "max")
    assert scan_v1(n, op.table) is None and scan_v2(n, op.table) is None
    assert partition_from_operator(op) == p
    assert complement_partition(complement_partition(p)) == p


@given(st.integers(min_value=0, max_value=2**31))
@settings(max_examples=20, deadline=None)
def test_random_partitions_deterministic_per_seed(seed):
    assert random_hypercube_partition(4, seed) == random_hypercube_partition(4, seed)
