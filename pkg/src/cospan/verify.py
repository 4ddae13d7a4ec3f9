"""Enumeration-backed theorem oracles.

Every check sweeps an exhaustive enumeration when the ground size is within
its bound (operators and hypercube partitions at n = 3, set families at
n = 4) and falls back to seeded random sampling beyond it.  A check returns
a PropertyReport (holding, or failing with the offending structure as
witness) plus the enumeration counts.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache

from .setcore import (
    GroundSet,
    InputError,
    PropertyReport,
    SetFamily,
    Subset,
    bit_indices,
    submasks,
)
from .operators import (
    SetOperator,
    dual_interior,
    scan_ae,
    scan_c2,
    scan_c3,
    scan_cv1,
    scan_cv2,
    scan_ex,
    scan_g3,
    scan_v1,
    scan_v2,
    scan_vv2,
)
from .cospanning import (
    CospanningPartition,
    IntervalPartition,
    _scan_r1,
    _scan_r2,
    _scan_r3,
    _scan_r33,
    _scan_r4g,
    _scan_r5,
    _scan_eqan,
    _scan_eqcl,
    complement_partition,
    interval_form,
    operator_from_partition,
    partition_from_operator,
)
from .structures import build_greedoid, check_greedoid, classify_family
from .instances import (
    _enumerate_extensive_tables,
    _set_partitions,
    random_greedoid,
    random_hypercube_partition,
    random_matroid,
    random_poset_antimatroid,
)


@dataclass(frozen=True)
class OracleResult:
    report: PropertyReport
    counts: dict


def _fail(name: str, witness: tuple, counts: dict) -> OracleResult:
    return OracleResult(PropertyReport(name, False, witness), counts)


def _ok(name: str, counts: dict) -> OracleResult:
    return OracleResult(PropertyReport(name, True), counts)


# --- raw table helpers ---

def _ex_mask(n: int, table, x: int) -> int:
    out = 0
    for i in bit_indices(x):
        bit = 1 << i
        if not table[x & ~bit] & bit:
            out |= bit
    return out


def _ex_table(n: int, table) -> list[int]:
    return [_ex_mask(n, table, x) for x in range(1 << n)]


def _ug_witness(n: int, table):
    size = 1 << n
    for x in range(size):
        tx = table[x]
        for y in range(x + 1, size):
            if table[y] == tx and table[x & y] != tx:
                return (x, y)
    return None


def _fiber_signature(table) -> tuple[int, ...]:
    first: dict[int, int] = {}
    sig = []
    for x, out in enumerate(table):
        sig.append(first.setdefault(out, x))
    return tuple(sig)


def _partition_signature(p: CospanningPartition) -> tuple[int, ...]:
    mins = [min(members) for members in p.classes]
    return tuple(mins[cid] for cid in p.class_of)


def _operator_of(n: int, table) -> SetOperator:
    return SetOperator.from_table(GroundSet.of_size(n), table)


# --- cached enumerations ---

@lru_cache(maxsize=None)
def _extensive_tables(n: int) -> tuple:
    if n > 3:
        raise InputError(f"exhaustive operator enumeration needs n <= 3, got {n}")
    return tuple(_enumerate_extensive_tables(n))


@lru_cache(maxsize=None)
def _violator_tables(n: int) -> tuple:
    return tuple(t for t in _extensive_tables(n) if scan_v2(n, t) is None)


@lru_cache(maxsize=None)
def _closure_tables(n: int) -> tuple:
    return tuple(
        t
        for t in _extensive_tables(n)
        if scan_c2(n, t) is None and scan_c3(n, t) is None
    )


@lru_cache(maxsize=None)
def _all_partitions(n: int) -> tuple:
    if n > 3:
        raise InputError(f"exhaustive partition enumeration needs n <= 3, got {n}")
    ground = GroundSet.of_size(n)
    return tuple(
        CospanningPartition.from_classes(ground, part)
        for part in _set_partitions(list(range(1 << n)))
    )


@lru_cache(maxsize=None)
def _greedoid_families(n: int) -> tuple:
    if n > 4:
        raise InputError(f"exhaustive family enumeration needs n <= 4, got {n}")
    ground = GroundSet.of_size(n)
    out = []
    for bits in range(1 << (1 << n)):
        if not bits & 1:  # ∅ must be a member
            continue
        fam = SetFamily(ground, tuple(m for m in range(1 << n) if bits >> m & 1))
        if check_greedoid(fam).holds:
            out.append(fam)
    return tuple(out)


def _random_partition(n: int, rng: random.Random) -> CospanningPartition:
    """Uniform-ish random equivalence partition via a restricted growth string."""
    ground = GroundSet.of_size(n)
    classes: list[list[int]] = []
    for mask in range(1 << n):
        slot = rng.randrange(len(classes) + 1)
        if slot == len(classes):
            classes.append([mask])
        else:
            classes[slot].append(mask)
    return CospanningPartition.from_classes(ground, classes)


def _sampled(make, samples: int, seed: int):
    rng = random.Random(seed)
    for _ in range(samples):
        yield make(rng)


def _violator_stream(n: int, samples: int | None, seed: int):
    """Exhaustive violator tables at n <= 3, else tables of reconstructed
    uniquely generated violator spaces from random interval partitions."""
    if samples is None:
        yield from _violator_tables(n)
        return

    def make(rng: random.Random):
        ip = random_hypercube_partition(n, rng.randrange(1 << 30))
        return operator_from_partition(ip.as_partition(), "max").table

    yield from _sampled(make, samples, seed)


def _greedoid_stream(n: int, samples: int | None, seed: int):
    if samples is None:
        yield from _greedoid_families(n)
        return
    yield from _sampled(lambda rng: random_greedoid(n, rng), samples, seed)


def _antimatroid_stream(n: int, samples: int | None, seed: int):
    if samples is None:
        for fam in _greedoid_families(n):
            if classify_family(fam).antimatroid:
                yield fam
        return
    yield from _sampled(lambda rng: random_poset_antimatroid(n, rng), samples, seed)


def _matroid_stream(n: int, samples: int | None, seed: int):
    if samples is None:
        for fam in _greedoid_families(n):
            if classify_family(fam).matroid:
                yield fam
        return
    yield from _sampled(lambda rng: random_matroid(n, rng), samples, seed)


def _partition_stream(n: int, samples: int | None, seed: int):
    if samples is None:
        yield from _all_partitions(n)
        return
    yield from _sampled(lambda rng: _random_partition(n, rng), samples, seed)


# --- violator-space oracles ---

def oracle_unique_generation_anti_exchange(n: int = 3, samples=None, seed=0) -> OracleResult:
    """Unique generation <=> anti-exchange over all violator spaces."""
    total = 0
    for table in _violator_stream(n, samples, seed):
        total += 1
        ug = _ug_witness(n, table) is None
        ae = scan_ae(n, table) is None
        if ug != ae:
            return _fail("TH-unique-generation-iff-AE", (_operator_of(n, table),), {"violator_spaces": total})
    return _ok("TH-unique-generation-iff-AE", {"violator_spaces": total})


def oracle_self_convexity_variants(n: int = 3, samples=None, seed=0) -> OracleResult:
    """V2 <=> VV2 for every extensive operator."""
    if samples is not None:
        raise InputError("SC_G oracle is exhaustive-only (n <= 3)")
    total = 0
    for table in _extensive_tables(n):
        total += 1
        if (scan_v2(n, table) is None) != (scan_vv2(n, table) is None):
            return _fail("SC_G-V2-iff-VV2", (_operator_of(n, table),), {"extensive_operators": total})
    return _ok("SC_G-V2-iff-VV2", {"extensive_operators": total})


def oracle_violator_relation(n: int = 3, samples=None, seed=0) -> OracleResult:
    """T_rel: R1∧R2 <=> reconstructable-as-violator with round-trip."""
    total = satisfying = 0
    for p in _partition_stream(n, samples, seed):
        total += 1
        lhs = _scan_r1(p) is None and _scan_r2(p) is None
        try:
            op = operator_from_partition(p, "max")
            table = op.table
            rhs = (
                scan_v1(len(p.ground.labels), table) is None
                and scan_v2(len(p.ground.labels), table) is None
                and _fiber_signature(table) == _partition_signature(p)
            )
        except InputError:
            rhs = False
        if lhs != rhs:
            return _fail("T_rel-violator-relation", (p,), {"partitions": total})
        satisfying += lhs
    return _ok("T_rel-violator-relation", {"partitions": total, "satisfying_R1_R2": satisfying})


def oracle_coviolator_relation(n: int = 3, samples=None, seed=0) -> OracleResult:
    """cv_rel: R3∧R2 <=> reconstructable-as-co-violator with round-trip."""
    total = satisfying = 0
    for p in _partition_stream(n, samples, seed):
        total += 1
        lhs = _scan_r3(p) is None and _scan_r2(p) is None
        try:
            op = operator_from_partition(p, "min")
            table = op.table
            nn = len(p.ground.labels)
            rhs = (
                scan_cv1(nn, table) is None
                and scan_cv2(nn, table) is None
                and _fiber_signature(table) == _partition_signature(p)
            )
        except InputError:
            rhs = False
        if lhs != rhs:
            return _fail("cv_rel-co-violator-relation", (p,), {"partitions": total})
        satisfying += lhs
    return _ok("cv_rel-co-violator-relation", {"partitions": total, "satisfying_R3_R2": satisfying})


def oracle_r3_iff_r33(n: int = 3, samples=None, seed=0) -> OracleResult:
    """Over partitions with R1∧R2, the verdicts of R3 and R33 agree."""
    total = 0
    for p in _partition_stream(n, samples, seed):
        if _scan_r1(p) is not None or _scan_r2(p) is not None:
            continue
        total += 1
        if (_scan_r3(p) is None) != (_scan_r33(p) is None):
            return _fail("R3-iff-R33", (p,), {"partitions_R1_R2": total})
    return _ok("R3-iff-R33", {"partitions_R1_R2": total})


def oracle_interval_classes(n: int = 3, samples: int | None = None, seed: int = 0,
                            random_n: int = 5, random_samples: int = 1000) -> OracleResult:
    """Clarkson: UG violator classes are the intervals [ex(A), φ(A)], and every
    random hypercube partition reconstructs to a UG violator space."""
    counts = {"ug_violator_spaces": 0, "random_partitions": 0}
    if samples is None:
        for table in _violator_tables(n):
            if _ug_witness(n, table) is not None:
                continue
            counts["ug_violator_spaces"] += 1
            op = _operator_of(n, table)
            p = partition_from_operator(op)
            try:
                ip = interval_form(p)
            except InputError:
                return _fail("Clarkson-interval-classes", (op,), counts)
            spans = {lo: hi for lo, hi in ip.intervals}
            for x in range(1 << n):
                ex = _ex_mask(n, table, x)
                if spans.get(ex) != table[x]:
                    return _fail("Clarkson-interval-classes", (op, Subset(op.ground, x)), counts)
    rng = random.Random(seed)
    if samples is not None:
        random_n = max(n, 4)
    for _ in range(random_samples if samples is None else samples):
        counts["random_partitions"] += 1
        ip = random_hypercube_partition(random_n, rng.randrange(1 << 30))
        p = ip.as_partition()
        op = operator_from_partition(p, "max")
        table = op.table
        ok = (
            scan_v1(random_n, table) is None
            and scan_v2(random_n, table) is None
            and _ug_witness(random_n, table) is None
            and _fiber_signature(table) == _partition_signature(p)
        )
        if not ok:
            return _fail("Clarkson-interval-classes", (op,), counts)
    return _ok("Clarkson-interval-classes", counts)


def oracle_outcast_equivalences(n: int = 3, samples=None, seed=0) -> OracleResult:
    """UG, X5, X6, X7 are simultaneously true or false for violator spaces."""
    total = 0
    for table in _violator_stream(n, samples, seed):
        total += 1
        ex = _ex_table(n, table)
        ug = _ug_witness(n, table) is None
        x5 = True
        for x in range(1 << n):
            room = x & ~ex[x]
            for extra in submasks(room):
                if ex[ex[x] | extra] != ex[x]:
                    x5 = False
                    break
            if not x5:
                break
        x6 = all(table[ex[x]] == table[x] for x in range(1 << n))
        x7 = all(ex[table[x]] == ex[x] for x in range(1 << n))
        if not ug == x5 == x6 == x7:
            return _fail("outcast-equivalences", (_operator_of(n, table),), {"violator_spaces": total})
    return _ok("outcast-equivalences", {"violator_spaces": total})


def oracle_violator_lemmas(n: int = 3, samples=None, seed=0) -> OracleResult:
    """lemma2, the corollary, un, exp, exp-vs, idempotence, and X1-X4 on
    uniquely generated spaces, over every violator space."""
    size = 1 << n
    total = 0
    for table in _violator_stream(n, samples, seed):
        total += 1
        counts = {"violator_spaces": total}

        def failing(tag: str):
            return _fail(f"violator-lemmas:{tag}", (_operator_of(n, table),), counts)

        for a in range(size):
            ta = table[a]
            for b in range(size):
                if (b & ~ta == 0) != (ta == table[a | b]):
                    return failing("lemma2")
            if table[ta] != ta:
                return failing("idempotence")
        for x in range(size):
            for i in range(n):
                bit = 1 << i
                if bool(table[x] & bit) != (table[x] == table[x | bit]):
                    return failing("corollary")
        for x in range(size):
            tx = table[x]
            for y in range(size):
                if table[y] == tx and table[x | y] != tx:
                    return failing("un-union")
            # sandwich: X ⊆ Y ⊆ Z with equal ends; Z ranges over the class
            for z in range(size):
                if x & ~z or table[z] != tx:
                    continue
                for extra in submasks(z & ~x):
                    if table[x | extra] != tx:
                        return failing("un-sandwich")
        ex = _ex_table(n, table)
        for x in range(size):
            meet = (1 << n) - 1
            for b in submasks(x):
                if table[b] == table[x]:
                    meet &= b
            if ex[x] != meet:
                return failing("exp-intersection")
            if ex[table[x]] & ~ex[x]:
                return failing("exp-vs")
        if _ug_witness(n, table) is None:
            for x in range(size):
                if ex[ex[x]] != ex[x]:
                    return failing("X1")
                for y in range(size):
                    if ex[y] == ex[x]:
                        if ex[x | y] != ex[x]:
                            return failing("X2")
                        if ex[x & y] != ex[x]:
                            return failing("X4")
                    if x & ~y == 0 and ex[x] == ex[y]:
                        for extra in submasks(y & ~x):
                            if ex[x | extra] != ex[x]:
                                return failing("X3")
    return _ok("violator-lemmas", {"violator_spaces": total})


def oracle_coviolator_lemmas(n: int = 3, samples=None, seed=0) -> OracleResult:
    """Prop co-operator plus co-un and idempotence on the dual interiors."""
    size = 1 << n
    full = size - 1
    total = 0
    if samples is None:
        tables = _extensive_tables(n)
    else:
        tables = list(_violator_stream(n, samples, seed))
    for table in tables:
        total += 1
        counts = {"operators": total}
        dual = tuple(full & ~table[full & ~x] for x in range(size))
        violator = scan_v1(n, table) is None and scan_v2(n, table) is None
        co_violator = scan_cv1(n, dual) is None and scan_cv2(n, dual) is None
        if violator != co_violator:
            return _fail("co-operator-duality", (_operator_of(n, table),), counts)
        if not co_violator:
            continue
        for x in range(size):
            cx = dual[x]
            if dual[cx] != cx:
                return _fail("co-violator-idempotence", (_operator_of(n, table),), counts)
            for y in range(size):
                if dual[y] == cx and dual[x & y] != cx:
                    return _fail("co-un-intersection", (_operator_of(n, table),), counts)
            for z in range(size):
                if x & ~z or dual[z] != cx:
                    continue
                for extra in submasks(z & ~x):
                    if dual[x | extra] != cx:
                        return _fail("co-un-sandwich", (_operator_of(n, table),), counts)
    return _ok("co-violator-lemmas", {"operators": total})


def oracle_complement_partitions(n: int = 3, samples=None, seed=0) -> OracleResult:
    """Prop co-co: the dual interior's partition is the complemented partition."""
    total = 0
    for table in _violator_stream(n, samples, seed):
        total += 1
        op = _operator_of(n, table)
        left = partition_from_operator(dual_interior(op))
        right = complement_partition(partition_from_operator(op))
        if left != right:
            return _fail("co-co-complement-partition", (op,), {"violator_spaces": total})
    return _ok("co-co-complement-partition", {"violator_spaces": total})


# --- greedoid oracles ---

def _sigma_table(fam: SetFamily) -> tuple[int, ...]:
    return build_greedoid(fam).sigma.table


def oracle_greedoid_sigma_axioms(n: int = 4, samples=None, seed=0) -> OracleResult:
    """L_Gr (i)-(iii) and G3 for the rank closure of every greedoid."""
    total = 0
    for fam in _greedoid_stream(n, samples, seed):
        total += 1
        nn = fam.ground.n
        counts = {"greedoids": total}
        table = _sigma_table(fam)
        if scan_v1(nn, table) is not None or scan_vv2(nn, table) is not None:
            return _fail("L_Gr-sigma-axioms", (fam,), counts)
        if scan_v2(nn, table) is not None or scan_g3(nn, table) is not None:
            return _fail("G3-sigma", (fam,), counts)
        member_set = set(fam.masks)
        for x in range(1 << nn):
            for xi in bit_indices(fam.ground.full_mask & ~x):
                if x | 1 << xi not in member_set:
                    continue
                for yi in bit_indices(fam.ground.full_mask & ~x):
                    if yi == xi:
                        continue
                    if table[x | 1 << yi] >> xi & 1 and not table[x | 1 << xi] >> yi & 1:
                        return _fail("L_Gr-property-iii", (fam,), counts)
    return _ok("greedoid-sigma-axioms", {"greedoids": total})


def oracle_greedoid_feasible_sets(n: int = 4, samples=None, seed=0) -> OracleResult:
    """Lemma BB: F = minimal class members = {X : ex(X) = X}; the minimal
    members of each class share one cardinality; σ(X) = E − Γ(X) on F."""
    total = 0
    for fam in _greedoid_stream(n, samples, seed):
        total += 1
        nn = fam.ground.n
        counts = {"greedoids": total}
        greedoid = build_greedoid(fam)
        table = greedoid.sigma.table
        ex = _ex_table(nn, table)
        by_ex = set(x for x in range(1 << nn) if ex[x] == x)
        if by_ex != set(fam.masks):
            return _fail("BB-feasible-sets", (fam,), counts)
        p = partition_from_operator(greedoid.sigma)
        minima = []
        for cid in range(len(p.classes)):
            mins = p.minima(cid)
            if len({m.bit_count() for m in mins}) != 1:
                return _fail("aug_p-equal-cardinality", (fam,), counts)
            minima.extend(mins)
        if set(minima) != set(fam.masks):
            return _fail("BB-minimal-members", (fam,), counts)
        member_set = set(fam.masks)
        full = fam.ground.full_mask
        for x in fam.masks:
            gamma = 0
            for i in bit_indices(full & ~x):
                if x | 1 << i in member_set:
                    gamma |= 1 << i
            if table[x] != full & ~gamma:
                return _fail("sigma-equals-complement-gamma", (fam, Subset(fam.ground, x)), counts)
    return _ok("greedoid-feasible-sets", {"greedoids": total})


def oracle_greedoid_operator_characterization(n: int = 3, samples=None, seed=0) -> OracleResult:
    """G1-G3 characterize rank closures: every V1∧V2∧G3 operator arises from
    its own feasible sets, and every greedoid σ satisfies V1∧V2∧G3."""
    if samples is not None:
        raise InputError("G1-G3 characterization oracle is exhaustive-only (n <= 3)")
    ops = 0
    for table in _violator_tables(n):
        if scan_g3(n, table) is not None:
            continue
        ops += 1
        ex = _ex_table(n, table)
        fam = SetFamily(GroundSet.of_size(n), tuple(x for x in range(1 << n) if ex[x] == x))
        if not check_greedoid(fam).holds:
            return _fail("G1-G3-characterization", (_operator_of(n, table),), {"operators": ops})
        if _sigma_table(fam) != tuple(table):
            return _fail("G1-G3-characterization", (_operator_of(n, table),), {"operators": ops})
    greedoids = 0
    for fam in _greedoid_families(n):
        greedoids += 1
        table = _sigma_table(fam)
        if scan_v1(n, table) is not None or scan_v2(n, table) is not None or scan_g3(n, table) is not None:
            return _fail("G1-G3-characterization", (fam,), {"greedoids": greedoids})
    return _ok("G1-G3-characterization", {"v1v2g3_operators": ops, "greedoids": greedoids})


def oracle_greedoid_relation(n: int = 4, samples=None, seed=0, partition_n: int = 3) -> OracleResult:
    """T_Gr: greedoid partitions satisfy R1∧R2∧R4G; over all partitions at
    partition_n, R1∧R2∧R4G holds iff the minimal sets form a greedoid whose
    σ-partition is the input."""
    greedoids = 0
    for fam in _greedoid_stream(n, samples, seed):
        greedoids += 1
        p = partition_from_operator(build_greedoid(fam).sigma)
        if _scan_r1(p) is not None or _scan_r2(p) is not None or _scan_r4g(p) is not None:
            return _fail("T_Gr-greedoid-relation", (fam,), {"greedoids": greedoids})
    partitions = 0
    for p in _partition_stream(partition_n, samples, seed + 1):
        partitions += 1
        lhs = _scan_r1(p) is None and _scan_r2(p) is None and _scan_r4g(p) is None
        masks: list[int] = []
        for cid in range(len(p.classes)):
            masks.extend(p.minima(cid))
        fam = SetFamily(p.ground, tuple(masks))
        rhs = False
        if check_greedoid(fam).holds:
            table = _sigma_table(fam)
            rhs = _fiber_signature(table) == _partition_signature(p)
        if lhs != rhs:
            return _fail("T_Gr-greedoid-relation", (p,), {"greedoids": greedoids, "partitions": partitions})
    return _ok("T_Gr-greedoid-relation", {"greedoids": greedoids, "partitions": partitions})


# --- antimatroid / matroid oracles ---

def oracle_antimatroid_unique_generation(n: int = 4, samples=None, seed=0) -> OracleResult:
    """UG_A: antimatroid <=> uniquely generated σ <=> σ has anti-exchange."""
    total = antimatroids = 0
    for fam in _greedoid_stream(n, samples, seed):
        total += 1
        nn = fam.ground.n
        table = _sigma_table(fam)
        is_anti = classify_family(fam).antimatroid
        ug = _ug_witness(nn, table) is None
        ae = scan_ae(nn, table) is None
        if not is_anti == ug == ae:
            return _fail("UG_A-antimatroid-iff-UG", (fam,), {"greedoids": total})
        antimatroids += is_anti
    return _ok("UG_A-antimatroid-iff-UG", {"greedoids": total, "antimatroids": antimatroids})


def oracle_antimatroid_relation(n: int = 4, samples=None, seed=0) -> OracleResult:
    """Antimatroid σ-partitions satisfy R1-R3, R4G and EqAN in interval form;
    EqAN agrees with the augmentation property of the minimal-set family."""
    total = 0
    for fam in _antimatroid_stream(n, samples, seed):
        total += 1
        counts = {"antimatroids": total}
        p = partition_from_operator(build_greedoid(fam).sigma)
        for scan in (_scan_r1, _scan_r2, _scan_r3, _scan_r4g):
            if scan(p) is not None:
                return _fail("antimatroid-relation", (fam,), counts)
        try:
            ip = interval_form(p)
        except InputError:
            return _fail("antimatroid-relation", (fam,), counts)
        if _scan_eqan(ip) is not None:
            return _fail("antimatroid-relation-EqAN", (fam,), counts)
        if not _augmentation_property(ip):
            return _fail("antimatroid-relation-aug_p", (fam,), counts)
    return _ok("antimatroid-relation", {"antimatroids": total})


def _augmentation_property(ip: IntervalPartition) -> bool:
    """aug_p for the minimal-set family: A ∈ F, (A, A∪a) ∉ R ⇒ A∪a ∈ F."""
    nn = ip.ground.n
    lows = {lo for lo, _ in ip.intervals}
    for lo, hi in ip.intervals:
        for a in bit_indices(((1 << nn) - 1) & ~lo):
            grown = lo | 1 << a
            # grown ∈ [lo, hi] iff grown ⊆ hi (lo ⊆ grown by construction)
            if grown & ~hi and grown not in lows:
                return False
    return True


def oracle_matroid_relation(n: int = 4, samples=None, seed=0) -> OracleResult:
    """Matroid σ-partitions satisfy R1, R2, R4G, R5; σ satisfies Steinitz EX."""
    total = 0
    for fam in _matroid_stream(n, samples, seed):
        total += 1
        nn = fam.ground.n
        counts = {"matroids": total}
        table = _sigma_table(fam)
        if scan_ex(nn, table) is not None:
            return _fail("matroid-steinitz-exchange", (fam,), counts)
        p = partition_from_operator(build_greedoid(fam).sigma)
        for scan in (_scan_r1, _scan_r2, _scan_r4g, _scan_r5):
            if scan(p) is not None:
                return _fail("matroid-relation", (fam,), counts)
    return _ok("matroid-relation", {"matroids": total})


# --- closure / convex-geometry oracles ---

def oracle_closure_is_violator(n: int = 3, samples=None, seed=0) -> OracleResult:
    """cltov plus lem2: every closure space satisfies V1∧V2."""
    if samples is not None:
        raise InputError("closure-space oracle is exhaustive-only (n <= 3)")
    total = 0
    for table in _closure_tables(n):
        total += 1
        if scan_v1(n, table) is not None or scan_v2(n, table) is not None:
            return _fail("cltov-closure-is-violator", (_operator_of(n, table),), {"closure_spaces": total})
    return _ok("cltov-closure-is-violator", {"closure_spaces": total})


def oracle_closed_set_accessibility(n: int = 3, samples=None, seed=0) -> OracleResult:
    """Augm_CS: for closed X, (X−x, X) ∉ R <=> X−x is closed."""
    if samples is not None:
        raise InputError("Augm_CS oracle is exhaustive-only (n <= 3)")
    total = 0
    for table in _closure_tables(n):
        total += 1
        closed = {x for x in range(1 << n) if table[x] == x}
        for x in closed:
            for i in bit_indices(x):
                smaller = x & ~(1 << i)
                if (table[smaller] != table[x]) != (smaller in closed):
                    return _fail(
                        "Augm_CS-accessibility",
                        (_operator_of(n, table), Subset(GroundSet.of_size(n), x)),
                        {"closure_spaces": total},
                    )
    return _ok("Augm_CS-accessibility", {"closure_spaces": total})


def oracle_convex_geometry_partition(n: int = 3, samples=None, seed=0) -> OracleResult:
    """Eq_CL theorem: convex-geometry partitions are interval partitions with
    EqCL, and every interval partition with EqCL reconstructs to a convex
    geometry; lem_cg holds on every such partition."""
    geometries = 0
    if samples is None:
        for table in _closure_tables(n):
            if scan_ae(n, table) is not None:
                continue
            geometries += 1
            p = partition_from_operator(_operator_of(n, table))
            try:
                ip = interval_form(p)
            except InputError:
                return _fail("EqCL-convex-geometry-partition", (_operator_of(n, table),), {"convex_geometries": geometries})
            if _scan_eqcl(ip) is not None:
                return _fail("EqCL-convex-geometry-partition", (_operator_of(n, table),), {"convex_geometries": geometries})
    partitions = eqcl_partitions = 0
    for p in _partition_stream(n, samples, seed):
        partitions += 1
        try:
            ip = interval_form(p)
        except InputError:
            continue
        if _scan_eqcl(ip) is not None:
            continue
        eqcl_partitions += 1
        counts = {
            "convex_geometries": geometries,
            "interval_partitions_EqCL": eqcl_partitions,
            "partitions": partitions,
        }
        op = operator_from_partition(p, "max")
        table = op.table
        nn = p.ground.n
        ok = (
            scan_v1(nn, table) is None
            and scan_c2(nn, table) is None
            and scan_c3(nn, table) is None
            and scan_ae(nn, table) is None
            and _fiber_signature(table) == _partition_signature(p)
        )
        if not ok:
            return _fail("EqCL-reconstruction", (p,), counts)
        highs = {hi for _, hi in ip.intervals}
        for lo, hi in ip.intervals:
            for extra in submasks(hi):
                c = extra
                if c & ~hi:
                    continue
                inside = lo & ~c == 0
                if inside:
                    continue
                if not any(hi & ~(1 << x) in highs for x in bit_indices(hi & ~c)):
                    return _fail("lem_cg-chain-step", (p, Subset(p.ground, c)), counts)
    return _ok(
        "EqCL-convex-geometry-partition",
        {
            "convex_geometries": geometries,
            "interval_partitions_EqCL": eqcl_partitions,
            "partitions": partitions,
        },
    )


# --- duality oracles ---

def oracle_antimatroid_duality(n: int = 4, samples=None, seed=0) -> OracleResult:
    """The six antimatroid <-> convex-geometry duality checks."""
    from .structures import duality_suite

    total = 0
    for fam in _antimatroid_stream(n, samples, seed):
        total += 1
        report = duality_suite(fam)
        if not report.holds:
            return _fail("antimatroid-duality", (fam,) + tuple(report.witness or ()), {"antimatroids": total})
    return _ok("antimatroid-duality", {"antimatroids": total})


# --- suites ---

SUITES = {
    "violator": (
        oracle_unique_generation_anti_exchange,
        oracle_self_convexity_variants,
        oracle_violator_relation,
        oracle_coviolator_relation,
        oracle_r3_iff_r33,
        oracle_interval_classes,
        oracle_outcast_equivalences,
        oracle_violator_lemmas,
        oracle_coviolator_lemmas,
        oracle_complement_partitions,
    ),
    "greedoid": (
        oracle_greedoid_sigma_axioms,
        oracle_greedoid_feasible_sets,
        oracle_greedoid_operator_characterization,
        oracle_greedoid_relation,
    ),
    "antimatroid": (
        oracle_antimatroid_unique_generation,
        oracle_antimatroid_relation,
    ),
    "matroid": (oracle_matroid_relation,),
    "convex-geometry": (
        oracle_closure_is_violator,
        oracle_closed_set_accessibility,
        oracle_convex_geometry_partition,
    ),
    "duality": (
        oracle_antimatroid_duality,
        oracle_complement_partitions,
    ),
}
SUITES["all"] = tuple(fn for suite in ("violator", "greedoid", "antimatroid", "matroid", "convex-geometry", "duality") for fn in SUITES[suite])

_EXHAUSTIVE_ONLY = {
    oracle_self_convexity_variants,
    oracle_greedoid_operator_characterization,
    oracle_closure_is_violator,
    oracle_closed_set_accessibility,
}

_OPERATOR_LEVEL = {
    oracle_unique_generation_anti_exchange,
    oracle_self_convexity_variants,
    oracle_violator_relation,
    oracle_coviolator_relation,
    oracle_r3_iff_r33,
    oracle_interval_classes,
    oracle_outcast_equivalences,
    oracle_violator_lemmas,
    oracle_coviolator_lemmas,
    oracle_complement_partitions,
    oracle_greedoid_operator_characterization,
    oracle_closure_is_violator,
    oracle_closed_set_accessibility,
    oracle_convex_geometry_partition,
}


def run_suite(suite: str, n: int | None = None, samples: int | None = None, seed: int = 0):
    """Run every oracle of a suite; returns the list of OracleResults."""
    if suite not in SUITES:
        raise InputError(f"unknown suite {suite!r}; choose from {sorted(SUITES)}")
    results = []
    for fn in SUITES[suite]:
        bound = 3 if fn in _OPERATOR_LEVEL else 4
        fn_n = n if n is not None else bound
        fn_samples = samples
        if fn_n > bound and fn_samples is None:
            raise InputError(
                f"{fn.__name__} is exhaustive only up to n = {bound}; pass --samples for n = {fn_n}"
            )
        if fn in _EXHAUSTIVE_ONLY:
            if fn_n > bound:
                continue  # no sampled variant; skip rather than mislead
            results.append(fn(fn_n))
        else:
            results.append(fn(fn_n, fn_samples, seed))
    return results
