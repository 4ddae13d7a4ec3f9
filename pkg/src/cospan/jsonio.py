"""JSON (de)serialization for families, operators, partitions, points, posets.

Element labels are strings everywhere; set member order is irrelevant on
input and canonical (ground order) on output.
"""
from __future__ import annotations

import json
from typing import Any

from .setcore import GroundSet, InputError, PropertyReport, SetFamily, Subset
from .operators import SetOperator
from .cospanning import CospanningPartition, IntervalPartition
from .instances import PointSet2D


def _ground_from(obj: Any) -> GroundSet:
    labels = obj.get("ground")
    if not isinstance(labels, list) or not all(isinstance(x, str) for x in labels):
        raise InputError('"ground" must be a list of strings')
    return GroundSet(tuple(labels))


def _mask_from(ground: GroundSet, members: Any, where: str) -> int:
    if not isinstance(members, list):
        raise InputError(f"{where}: each set must be a list of labels")
    mask = 0
    for label in members:
        mask |= 1 << ground.index(label)
    return mask


def _labels(ground: GroundSet, mask: int) -> list[str]:
    return list(Subset(ground, mask).members())


def family_to_json(fam: SetFamily) -> dict:
    return {
        "ground": list(fam.ground.labels),
        "sets": [_labels(fam.ground, m) for m in fam.masks],
    }


def family_from_json(obj: dict) -> SetFamily:
    ground = _ground_from(obj)
    sets = obj.get("sets")
    if not isinstance(sets, list):
        raise InputError('family JSON needs a "sets" list')
    return SetFamily(ground, tuple(_mask_from(ground, s, "sets") for s in sets))


def operator_to_json(op: SetOperator) -> dict:
    ground = op.ground
    return {
        "ground": list(ground.labels),
        "map": [
            {"in": _labels(ground, x), "out": _labels(ground, out)}
            for x, out in enumerate(op.table)
        ],
    }


def operator_from_json(obj: dict) -> SetOperator:
    ground = _ground_from(obj)
    entries = obj.get("map")
    if not isinstance(entries, list):
        raise InputError('operator JSON needs a "map" list')
    size = 1 << ground.n
    table: list[int | None] = [None] * size
    for entry in entries:
        if not isinstance(entry, dict) or "in" not in entry or "out" not in entry:
            raise InputError('each map entry needs "in" and "out" lists')
        x = _mask_from(ground, entry["in"], "map.in")
        if table[x] is not None:
            raise InputError(f"duplicate map input {entry['in']}")
        table[x] = _mask_from(ground, entry["out"], "map.out")
    missing = [x for x in range(size) if table[x] is None]
    if missing:
        raise InputError(
            f"operator map must list all {size} inputs; missing {_labels(ground, missing[0])}"
        )
    return SetOperator.from_table(ground, table)


def partition_to_json(p: CospanningPartition) -> dict:
    return {
        "ground": list(p.ground.labels),
        "classes": [
            [_labels(p.ground, m) for m in members] for members in p.classes
        ],
    }


def partition_from_json(obj: dict) -> CospanningPartition:
    ground = _ground_from(obj)
    classes = obj.get("classes")
    if not isinstance(classes, list):
        raise InputError('partition JSON needs a "classes" list')
    mask_classes = []
    for members in classes:
        if not isinstance(members, list):
            raise InputError("each class must be a list of sets")
        mask_classes.append([_mask_from(ground, s, "classes") for s in members])
    return CospanningPartition.from_classes(ground, mask_classes)


def intervals_to_json(ip: IntervalPartition) -> dict:
    return {
        "ground": list(ip.ground.labels),
        "intervals": [
            {"lo": _labels(ip.ground, lo), "hi": _labels(ip.ground, hi)}
            for lo, hi in ip.intervals
        ],
    }


def points_from_json(obj: dict) -> PointSet2D:
    labels = obj.get("labels")
    points = obj.get("points")
    if not isinstance(labels, list) or not isinstance(points, list):
        raise InputError('points JSON needs "labels" and "points" lists')
    pts = []
    for p in points:
        if not isinstance(p, list) or len(p) != 2:
            raise InputError("each point must be an [x, y] pair")
        pts.append((int(p[0]), int(p[1])))
    return PointSet2D(tuple(pts), tuple(labels))


def poset_from_json(obj: dict) -> tuple[GroundSet, list[tuple[str, str]]]:
    ground = _ground_from(obj)
    pairs = obj.get("less_than", [])
    if not isinstance(pairs, list):
        raise InputError('"less_than" must be a list of [a, b] pairs')
    order = []
    for pair in pairs:
        if not isinstance(pair, list) or len(pair) != 2:
            raise InputError("each order relation must be an [a, b] pair")
        order.append((pair[0], pair[1]))
    return ground, order


def witness_to_json(witness: tuple | None):
    if witness is None:
        return None
    out = []
    for item in witness:
        if isinstance(item, Subset):
            out.append(list(item.members()))
        elif isinstance(item, SetFamily):
            out.append([_labels(item.ground, m) for m in item.masks])
        elif isinstance(item, SetOperator):
            out.append(operator_to_json(item))
        elif isinstance(item, CospanningPartition):
            out.append(partition_to_json(item))
        else:
            out.append(item)
    return out


def report_to_json(report: PropertyReport) -> dict:
    return {
        "property": report.property,
        "holds": report.holds,
        "witness": witness_to_json(report.witness),
    }


def load_json_file(path: str) -> dict:
    try:
        with open(path) as handle:
            obj = json.load(handle)
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    if not isinstance(obj, dict):
        raise InputError(f"{path}: top-level JSON value must be an object")
    return obj
