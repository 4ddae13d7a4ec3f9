"""Command-line front end: check instances, partition, reconstruct, verify.

All reports are machine-parseable JSON on stdout.  Exit codes: 0 every
requested check holds, 1 a property failed, 2 malformed input, 3 a capacity
cap was hit.
"""
from __future__ import annotations

import argparse
import json
import sys

from .setcore import CapacityError, CospanError, InputError, PropertyReport, family_predicate
from .operators import (
    AXIOM_SCANS,
    check_axiom,
    classify_space,
    is_uniquely_generated,
)
from .cospanning import (
    RELATION_PROPERTIES,
    check_relation_property,
    complement_partition,
    interval_form,
    operator_from_partition,
    partition_dot,
    partition_from_operator,
)
from .structures import check_convex_geometry, check_greedoid
from .verify import run_suite
from . import jsonio

OPERATOR_KINDS = ("violator", "co-violator", "closure", "convex-geometry")
FAMILY_KINDS = ("greedoid", "antimatroid", "matroid")


def _run_report(command: list[str], reports: list[PropertyReport], counts: dict,
                requested: list[PropertyReport]) -> dict:
    status = 0 if all(r.holds for r in requested) else 1
    return {
        "command": command,
        "reports": [jsonio.report_to_json(r) for r in reports],
        "counts": counts,
        "exit_status": status,
    }


def _emit(obj: dict) -> int:
    print(json.dumps(obj, indent=2, sort_keys=False))
    return obj["exit_status"]


def cmd_check(args, command: list[str]) -> int:
    obj = jsonio.load_json_file(args.input)
    reports: list[PropertyReport] = []
    counts: dict = {}

    if args.kind in OPERATOR_KINDS:
        op = jsonio.operator_from_json(obj)
        counts["ground_size"] = op.ground.n
        if args.axioms:
            for axiom in args.axioms.split(","):
                axiom = axiom.strip()
                if axiom == "UG":
                    reports.append(is_uniquely_generated(op))
                elif axiom in AXIOM_SCANS:
                    reports.append(check_axiom(op, axiom))
                else:
                    raise InputError(f"unknown axiom {axiom!r}; choose from {sorted(AXIOM_SCANS) + ['UG']}")
            requested = list(reports)
        elif args.kind == "convex-geometry":
            geometry = check_convex_geometry(op)
            reports.extend(geometry.axioms)
            reports.append(geometry.accessibility)
            reports.append(geometry.chain)
            verdict = PropertyReport("convex-geometry", geometry.holds,
                                     None if geometry.holds else ("see axiom reports",))
            reports.append(verdict)
            requested = [verdict]
        else:
            spaces = classify_space(op)
            if args.kind == "violator":
                reports.append(check_axiom(op, "V1"))
                reports.append(check_axiom(op, "V2"))
                verdict = PropertyReport("violator", spaces.violator,
                                         None if spaces.violator else ("see axiom reports",))
                reports.append(verdict)
                reports.append(is_uniquely_generated(op))
                reports.append(check_axiom(op, "G3"))
            elif args.kind == "co-violator":
                reports.append(check_axiom(op, "CV1"))
                reports.append(check_axiom(op, "CV2"))
                verdict = PropertyReport("co-violator", spaces.co_violator,
                                         None if spaces.co_violator else ("see axiom reports",))
                reports.append(verdict)
            else:  # closure
                reports.append(check_axiom(op, "V1"))
                reports.append(check_axiom(op, "C2"))
                reports.append(check_axiom(op, "C3"))
                verdict = PropertyReport("closure", spaces.closure,
                                         None if spaces.closure else ("see axiom reports",))
                reports.append(verdict)
            requested = [verdict]
    else:
        fam = jsonio.family_from_json(obj)
        counts["ground_size"] = fam.ground.n
        counts["sets"] = len(fam.masks)
        greedoid = check_greedoid(fam)
        reports.append(greedoid)
        if args.kind == "greedoid":
            verdict = greedoid
        else:
            extra = "union-closed" if args.kind == "antimatroid" else "hereditary"
            extra_report = family_predicate(fam, extra)
            reports.append(extra_report)
            holds = greedoid.holds and extra_report.holds
            failed = greedoid if not greedoid.holds else extra_report
            verdict = PropertyReport(args.kind, holds, None if holds else failed.witness)
            reports.append(verdict)
        requested = [verdict]

    return _emit(_run_report(command, reports, counts, requested))


def cmd_partition(args, command: list[str]) -> int:
    op = jsonio.operator_from_json(jsonio.load_json_file(args.input))
    p = partition_from_operator(op)
    counts = {"ground_size": op.ground.n, "classes": len(p.classes)}
    reports: list[PropertyReport] = []

    try:
        ip = interval_form(p)
        intervals = jsonio.intervals_to_json(ip)["intervals"]
        counts["intervals"] = len(ip.intervals)
    except InputError:
        ip = None
        intervals = None

    props = [s.strip() for s in args.props.split(",")] if args.props else []
    for prop in props:
        if prop not in RELATION_PROPERTIES:
            raise InputError(f"unknown relation property {prop!r}; choose from {RELATION_PROPERTIES}")
        reports.append(check_relation_property(p, prop))

    if args.json:
        with open(args.json, "w") as handle:
            json.dump(jsonio.partition_to_json(p), handle, indent=2)
    if args.dot:
        with open(args.dot, "w") as handle:
            handle.write(partition_dot(p))

    report = _run_report(command, reports, counts, reports)
    report["partition"] = jsonio.partition_to_json(p)
    report["interval_form"] = intervals
    return _emit(report)


def cmd_reconstruct(args, command: list[str]) -> int:
    if args.from_partition:
        p = jsonio.partition_from_json(jsonio.load_json_file(args.from_partition))
        op = operator_from_partition(p, args.mode)
        round_trip = partition_from_operator(op) == p
        output = jsonio.operator_to_json(op)
        note = PropertyReport("round-trip", round_trip,
                              None if round_trip else (op.ground.full(),))
        reports = [note]
        counts = {"ground_size": p.ground.n, "classes": len(p.classes)}
    else:
        obj = jsonio.load_json_file(args.complement)
        if "sets" in obj:
            fam = jsonio.family_from_json(obj)
            from .setcore import complement_family

            output = jsonio.family_to_json(complement_family(fam))
            counts = {"ground_size": fam.ground.n, "sets": len(fam.masks)}
        elif "classes" in obj:
            p = jsonio.partition_from_json(obj)
            output = jsonio.partition_to_json(complement_partition(p))
            counts = {"ground_size": p.ground.n, "classes": len(p.classes)}
        else:
            raise InputError('complement input must be family JSON ("sets") or partition JSON ("classes")')
        reports = []

    if args.out:
        with open(args.out, "w") as handle:
            json.dump(output, handle, indent=2)

    report = _run_report(command, reports, counts, reports)
    report["output"] = output
    return _emit(report)


def cmd_verify(args, command: list[str]) -> int:
    results = run_suite(args.suite, args.n, args.samples, args.seed)
    reports = [r.report for r in results]
    counts: dict = {}
    for r in results:
        for key, value in r.counts.items():
            counts[f"{r.report.property}:{key}"] = value
    return _emit(_run_report(command, reports, counts, reports))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cospan", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p_check = sub.add_parser("check", help="classify an operator or family")
    p_check.add_argument("input")
    p_check.add_argument("--kind", required=True, choices=OPERATOR_KINDS + FAMILY_KINDS)
    p_check.add_argument("--axioms", help="comma-separated axiom list (operator inputs only)")

    p_part = sub.add_parser("partition", help="cospanning partition of an operator")
    p_part.add_argument("input")
    p_part.add_argument("--dot", help="write a DOT rendering of the partitioned hypercube")
    p_part.add_argument("--json", help="write the partition as JSON")
    p_part.add_argument("--props", help="comma-separated relation properties to check")

    p_rec = sub.add_parser("reconstruct", help="rebuild an operator from a partition, or complement")
    group = p_rec.add_mutually_exclusive_group(required=True)
    group.add_argument("--from-partition")
    group.add_argument("--complement")
    p_rec.add_argument("--mode", choices=("max", "min"), default="max")
    p_rec.add_argument("--out", help="write the result to a file")

    p_ver = sub.add_parser("verify", help="run the enumeration-backed theorem oracles")
    p_ver.add_argument("--n", type=int, default=None)
    p_ver.add_argument("--suite", default="all",
                       choices=("all", "violator", "greedoid", "antimatroid", "matroid",
                                "convex-geometry", "duality"))
    p_ver.add_argument("--samples", type=int, default=None)
    p_ver.add_argument("--seed", type=int, default=0)

    return parser


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    args = build_parser().parse_args(argv)
    command = ["cospan"] + argv
    handlers = {
        "check": cmd_check,
        "partition": cmd_partition,
        "reconstruct": cmd_reconstruct,
        "verify": cmd_verify,
    }
    try:
        return handlers[args.command](args, command)
    except CapacityError as exc:
        print(f"cospan: capacity: {exc}", file=sys.stderr)
        return 3
    except InputError as exc:
        print(f"cospan: input error: {exc}", file=sys.stderr)
        return 2
    except CospanError as exc:
        print(f"cospan: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
