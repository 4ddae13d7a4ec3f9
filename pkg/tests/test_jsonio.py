import json

import pytest

from cospan.setcore import GroundSet, InputError, PropertyReport, SetFamily
from cospan.cospanning import interval_form, partition_from_operator
from cospan import jsonio


def test_family_round_trip(chain3):
    obj = jsonio.family_to_json(chain3)
    assert obj == {"ground": ["1", "2", "3"], "sets": [[], ["1"], ["1", "2"], ["1", "2", "3"]]}
    assert jsonio.family_from_json(obj) == chain3
    assert jsonio.family_from_json({"ground": ["1"], "sets": [["1"], ["1"]]}).masks == (1,)


def test_family_errors():
    with pytest.raises(InputError):
        jsonio.family_from_json({"ground": [1, 2], "sets": []})
    with pytest.raises(InputError):
        jsonio.family_from_json({"ground": ["1"]})
    with pytest.raises(InputError):
        jsonio.family_from_json({"ground": ["1"], "sets": [["2"]]})


def test_operator_round_trip(pex3):
    obj = jsonio.operator_to_json(pex3)
    assert len(obj["map"]) == 8
    assert {"in": ["1"], "out": ["1", "3"]} in obj["map"]
    assert jsonio.operator_from_json(obj) == pex3


def test_operator_map_must_be_total_and_duplicate_free():
    base = {"ground": ["1"], "map": [{"in": [], "out": []}, {"in": ["1"], "out": ["1"]}]}
    assert jsonio.operator_from_json(base).table == (0, 1)
    with pytest.raises(InputError, match="missing"):
        jsonio.operator_from_json({"ground": ["1"], "map": [{"in": [], "out": []}]})
    with pytest.raises(InputError, match="duplicate"):
        jsonio.operator_from_json(
            {"ground": ["1"], "map": [{"in": [], "out": []}, {"in": [], "out": ["1"]},
                                      {"in": ["1"], "out": ["1"]}]}
        )
    with pytest.raises(InputError):
        jsonio.operator_from_json({"ground": ["1"], "map": [{"in": []}]})


def test_partition_and_intervals_round_trip(pex3):
    p = partition_from_operator(pex3)
    obj = jsonio.partition_to_json(p)
    assert jsonio.partition_from_json(obj) == p
    ip = interval_form(p)
    intervals = jsonio.intervals_to_json(ip)
    assert {"lo": ["1"], "hi": ["1", "3"]} in intervals["intervals"]


def test_points_and_poset_parsing():
    pts = jsonio.points_from_json({"labels": ["a", "b"], "points": [[0, 0], [1, 2]]})
    assert pts.points == ((0, 0), (1, 2))
    with pytest.raises(InputError):
        jsonio.points_from_json({"labels": ["a"], "points": [[0, 0, 0]]})
    ground, order = jsonio.poset_from_json({"ground": ["a", "b"], "less_than": [["a", "b"]]})
    assert ground.labels == ("a", "b") and order == [("a", "b")]
    with pytest.raises(InputError):
        jsonio.poset_from_json({"ground": ["a"], "less_than": [["a"]]})


def test_report_serialization(pex3):
    g = GroundSet.of_size(2)
    report = PropertyReport("demo", False, (g.subset(["1"]), "2", SetFamily(g, (0, 3))))
    obj = jsonio.report_to_json(report)
    assert obj == {
        "property": "demo",
        "holds": False,
        "witness": [["1"], "2", [[], ["1", "2"]]],
    }
    assert jsonio.report_to_json(PropertyReport("ok", True))["witness"] is None
    # operators and partitions embedded in witnesses stay JSON-serializable
    nested = jsonio.witness_to_json((pex3, partition_from_operator(pex3)))
    json.dumps(nested)


def test_load_json_file(tmp_path):
    path = tmp_path / "x.json"
    path.write_text('{"ground": ["1"], "sets": []}')
    assert jsonio.load_json_file(str(path))["ground"] == ["1"]
    path.write_text("[1, 2]")
    with pytest.raises(InputError):
        jsonio.load_json_file(str(path))
    path.write_text("{nope")
    with pytest.raises(InputError):
        jsonio.load_json_file(str(path))
    with pytest.raises(InputError):
        jsonio.load_json_file(str(tmp_path / "absent.json"))
