"""Concrete operators and families: worked examples, classic
constructions, exact 2D geometry, exhaustive enumerators, and seeded
random generators that power the theorem oracles."""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

from .setcore import (
    GroundSet,
    InputError,
    SetFamily,
    Subset,
    bit_indices,
    require_dense,
    submasks,
)
from .operators import (
    SetOperator,
    scan_ae,
    scan_c2,
    scan_c3,
    scan_v2,
)
from .cospanning import CospanningPartition, IntervalPartition, _scan_r1, _scan_r2
from .structures import check_greedoid, classify_family

COORD_BOUND = 1 << 20


@dataclass(frozen=True)
class PointSet2D:
    """Distinct integer points in the plane, one per ground-set element."""

    points: tuple[tuple[int, int], ...]
    labels: tuple[str, ...]

    def __post_init__(self) -> None:
        if len(self.points) != len(self.labels):
            raise InputError("points and labels must have equal length")
        if len(set(self.points)) != len(self.points):
            raise InputError("points must be distinct")
        for x, y in self.points:
            if abs(x) > COORD_BOUND or abs(y) > COORD_BOUND:
                raise InputError(f"coordinate out of range at ({x},{y})")

    @classmethod
    def of(cls, points) -> "PointSet2D":
        pts = tuple((int(x), int(y)) for x, y in points)
        return cls(pts, tuple(f"p{i + 1}" for i in range(len(pts))))

    @property
    def ground(self) -> GroundSet:
        return GroundSet(self.labels)


# --- named built-in instances ---

def identity_operator(ground: GroundSet) -> SetOperator:
    return SetOperator.from_table(ground, tuple(range(1 << ground.n)), name="identity")


def constant_full_operator(ground: GroundSet) -> SetOperator:
    return SetOperator.from_table(
        ground, (ground.full_mask,) * (1 << ground.n), name="constant-full"
    )


def paper_example_operator() -> SetOperator:
    """Identity on 2^{1,2,3} except {1} and {1,3} both map to {1,3}."""
    ground = GroundSet.of_size(3)
    table = list(range(8))
    table[0b001] = 0b101
    return SetOperator.from_table(ground, table, name="pex3")


def uniform_matroid(n: int, k: int) -> SetFamily:
    if not 0 <= k <= n:
        raise InputError(f"uniform matroid needs 0 <= k <= n, got k={k}, n={n}")
    ground = GroundSet.of_size(n)
    masks = [m for m in range(1 << n) if m.bit_count() <= k]
    return SetFamily(ground, tuple(masks))


def poset_antimatroid(ground: GroundSet, less_than) -> SetFamily:
    """Feasible sets = down-sets (order ideals) of the given strict order."""
    n = ground.n
    below = [0] * n  # below[i]: elements required before i
    edges = [(ground.index(a), ground.index(b)) for a, b in less_than]
    # transitive closure over the DAG; reject cycles
    adj = [[False] * n for _ in range(n)]
    for a, b in edges:
        adj[a][b] = True
    for k in range(n):
        for i in range(n):
            if adj[i][k]:
                for j in range(n):
                    if adj[k][j]:
                        adj[i][j] = True
    for i in range(n):
        if adj[i][i]:
            raise InputError("poset order contains a cycle")
    for i in range(n):
        for j in range(n):
            if adj[i][j]:
                below[j] |= 1 << i
    require_dense(n)
    masks = [m for m in range(1 << n) if all(below[i] & ~m == 0 for i in bit_indices(m))]
    return SetFamily(ground, tuple(masks))


def chain_antimatroid(n: int) -> SetFamily:
    ground = GroundSet.of_size(n)
    order = [(str(i), str(i + 1)) for i in range(1, n)]
    return poset_antimatroid(ground, order)


def builtin_instance(name: str, **params):
    """Look up a named structure; see BUILTINS for the accepted names."""
    if name == "identity":
        return identity_operator(GroundSet.of_size(int(params.get("n", 3))))
    if name == "full":
        return constant_full_operator(GroundSet.of_size(int(params.get("n", 3))))
    if name == "paper_example_3":
        if params.get("bases"):
            from .structures import feasible_from_operator

            return feasible_from_operator(paper_example_operator())
        return paper_example_operator()
    if name == "uniform_matroid":
        return uniform_matroid(int(params["n"]), int(params["k"]))
    if name == "chain_antimatroid":
        return chain_antimatroid(int(params.get("n", 3)))
    if name == "poset_antimatroid":
        ground = GroundSet(tuple(params["ground"]))
        return poset_antimatroid(ground, params.get("less_than", ()))
    raise InputError(f"unknown builtin instance {name!r}")


BUILTINS = (
    "identity",
    "full",
    "paper_example_3",
    "uniform_matroid",
    "chain_antimatroid",
    "poset_antimatroid",
)


# --- exact 2D geometry ---

def _orient(a, b, c) -> int:
    return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])


def _on_segment(a, b, r) -> bool:
    if _orient(a, b, r) != 0:
        return False
    return (
        min(a[0], b[0]) <= r[0] <= max(a[0], b[0])
        and min(a[1], b[1]) <= r[1] <= max(a[1], b[1])
    )


def _in_triangle(a, b, c, r) -> bool:
    d = _orient(a, b, c)
    if d == 0:
        return False
    s1 = _orient(a, b, r)
    s2 = _orient(b, c, r)
    s3 = _orient(c, a, r)
    if d < 0:
        s1, s2, s3 = -s1, -s2, -s3
    return s1 >= 0 and s2 >= 0 and s3 >= 0


def _in_hull(selected, r) -> bool:
    """Membership in conv(selected) via exhaustive point/segment/triangle tests."""
    if r in selected:
        return True
    for a, b in itertools.combinations(selected, 2):
        if _on_segment(a, b, r):
            return True
    for a, b, c in itertools.combinations(selected, 3):
        if _in_triangle(a, b, c, r):
            return True
    return False


def convex_hull_geometry(pts: PointSet2D) -> SetOperator:
    """τ(X) = {p ∈ E : p ∈ conv(X)}; a convex geometry by construction."""
    if len(pts.points) > 20:
        raise InputError("convex_hull_geometry needs at most 20 points")
    ground = pts.ground
    points = pts.points

    def tau(mask: int) -> int:
        selected = [points[i] for i in bit_indices(mask)]
        out = mask
        for i, p in enumerate(points):
            if not mask >> i & 1 and _in_hull(selected, p):
                out |= 1 << i
        return out

    return SetOperator.from_callable(ground, tau, name="convex-hull")


def _sq_dist(center, p) -> Fraction:
    dx = Fraction(p[0]) - center[0]
    dy = Fraction(p[1]) - center[1]
    return dx * dx + dy * dy


def _circumcenter(a, b, c):
    d = 2 * (a[0] * (b[1] - c[1]) + b[0] * (c[1] - a[1]) + c[0] * (a[1] - b[1]))
    if d == 0:
        return None
    a2 = a[0] * a[0] + a[1] * a[1]
    b2 = b[0] * b[0] + b[1] * b[1]
    c2 = c[0] * c[0] + c[1] * c[1]
    ux = Fraction(a2 * (b[1] - c[1]) + b2 * (c[1] - a[1]) + c2 * (a[1] - b[1]), d)
    uy = Fraction(a2 * (c[0] - b[0]) + b2 * (a[0] - c[0]) + c2 * (b[0] - a[0]), d)
    return (ux, uy)


def _min_enclosing_ball(selected):
    """Exact smallest enclosing ball; the optimum is supported by <= 3 points."""
    best = None
    candidates = []
    for p in selected:
        candidates.append(((Fraction(p[0]), Fraction(p[1])), Fraction(0)))
    for a, b in itertools.combinations(selected, 2):
        center = (Fraction(a[0] + b[0], 2), Fraction(a[1] + b[1], 2))
        candidates.append((center, _sq_dist(center, a)))
    for a, b, c in itertools.combinations(selected, 3):
        center = _circumcenter(a, b, c)
        if center is not None:
            candidates.append((center, _sq_dist(center, a)))
    for center, r2 in candidates:
        if all(_sq_dist(center, p) <= r2 for p in selected):
            if best is None or r2 < best[1]:
                best = (center, r2)
    return best


def seb_violator(pts: PointSet2D) -> SetOperator:
    """φ(X) = points within the smallest enclosing ball of X; φ(∅) = ∅."""
    if len(pts.points) > 16:
        raise InputError("seb_violator needs at most 16 points")
    ground = pts.ground
    points = pts.points

    def phi(mask: int) -> int:
        if mask == 0:
            return 0
        selected = [points[i] for i in bit_indices(mask)]
        center, r2 = _min_enclosing_ball(selected)
        out = 0
        for i, p in enumerate(points):
            if _sq_dist(center, p) <= r2:
                out |= 1 << i
        return out

    return SetOperator.from_callable(ground, phi, name="seb")


# --- exhaustive enumerators ---

SPACE_KINDS = (
    "extensive",
    "violator",
    "closure",
    "convex-geometry",
    "relationR1R2",
    "family",
    "greedoid",
    "antimatroid",
    "matroid",
)


def _enumerate_extensive_tables(n: int) -> Iterator[tuple[int, ...]]:
    size = 1 << n
    full = size - 1
    per_input = [[x | extra for extra in sorted(submasks(full & ~x))] for x in range(size)]
    yield from itertools.product(*per_input)


def _set_partitions(items: list[int]) -> Iterator[list[list[int]]]:
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in _set_partitions(rest):
        for i in range(len(part)):
            yield part[:i] + [[first] + part[i]] + part[i + 1:]
        yield [[first]] + part


def enumerate_spaces(n: int, kind: str) -> Iterator:
    """Duplicate-free exhaustive stream of the requested structures."""
    if kind not in SPACE_KINDS:
        raise InputError(f"unknown enumeration kind {kind!r}")
    operator_kinds = ("extensive", "violator", "closure", "convex-geometry")
    if kind in operator_kinds or kind == "relationR1R2":
        if n > 3:
            raise InputError(f"exhaustive {kind} enumeration needs n <= 3, got {n}")
    else:
        if n > 4:
            raise InputError(f"exhaustive {kind} enumeration needs n <= 4, got {n}")
    ground = GroundSet.of_size(n)

    if kind in operator_kinds:
        for table in _enumerate_extensive_tables(n):
            if kind == "violator" and scan_v2(n, table) is not None:
                continue
            if kind in ("closure", "convex-geometry"):
                if scan_c2(n, table) is not None or scan_c3(n, table) is not None:
                    continue
                if kind == "convex-geometry" and scan_ae(n, table) is not None:
                    continue
            yield SetOperator.from_table(ground, table)
        return

    if kind == "relationR1R2":
        for part in _set_partitions(list(range(1 << n))):
            p = CospanningPartition.from_classes(ground, part)
            if _scan_r1(p) is None and _scan_r2(p) is None:
                yield p
        return

    for bits in range(1 << (1 << n)):
        masks = tuple(m for m in range(1 << n) if bits >> m & 1)
        fam = SetFamily(ground, masks)
        if kind == "family":
            yield fam
            continue
        cls = classify_family(fam)
        if kind == "greedoid" and cls.greedoid:
            yield fam
        elif kind == "antimatroid" and cls.antimatroid:
            yield fam
        elif kind == "matroid" and cls.matroid:
            yield fam


# --- seeded random generators ---

def random_hypercube_partition(n: int, seed: int) -> IntervalPartition:
    """Peel random intervals off the hypercube, top-down; seed-deterministic."""
    if n > 6:
        raise InputError(f"random_hypercube_partition needs n <= 6, got {n}")
    ground = GroundSet.of_size(n)
    rng = random.Random(seed)
    unassigned = set(range(1 << n))
    intervals = []
    while unassigned:
        maximal = sorted(
            m
            for m in unassigned
            if not any(o != m and m & ~o == 0 for o in unassigned)
        )
        hi = rng.choice(maximal)
        candidates = []
        for lo in submasks(hi):
            if all(lo | extra in unassigned for extra in submasks(hi & ~lo)):
                candidates.append(lo)
        lo = rng.choice(sorted(candidates))
        for extra in submasks(hi & ~lo):
            unassigned.remove(lo | extra)
        intervals.append((lo, hi))
    return IntervalPartition(ground, tuple(intervals))


def random_poset_antimatroid(n: int, rng: random.Random) -> SetFamily:
    """Antimatroid of down-sets of a random partial order."""
    ground = GroundSet.of_size(n)
    order = list(range(n))
    rng.shuffle(order)
    less_than = []
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < 0.4:
                less_than.append((str(order[i] + 1), str(order[j] + 1)))
    return poset_antimatroid(ground, less_than)


def random_greedoid(n: int, rng: random.Random, attempts: int = 200) -> SetFamily:
    """Rejection-sample a greedoid from random accessible growth."""
    require_dense(n)
    for _ in range(attempts):
        masks = {0}
        steps = rng.randrange(1, 2 << n)
        for _ in range(steps):
            base = rng.choice(sorted(masks))
            outside = [i for i in range(n) if not base >> i & 1]
            if not outside:
                continue
            masks.add(base | 1 << rng.choice(outside))
        fam = SetFamily(GroundSet.of_size(n), tuple(masks))
        if check_greedoid(fam).holds:
            return fam
    raise InputError(f"failed to sample a greedoid on n={n} after {attempts} attempts")


def random_matroid(n: int, rng: random.Random, attempts: int = 500) -> SetFamily:
    """Rejection-sample a matroid: hereditary closure of random k-sets."""
    require_dense(n)
    for _ in range(attempts):
        k = rng.randrange(0, n + 1)
        ksets = [m for m in range(1 << n) if m.bit_count() == k]
        chosen = rng.sample(ksets, rng.randrange(1, len(ksets) + 1)) if ksets else [0]
        masks = set()
        for m in chosen:
            for sub in submasks(m):
                masks.add(sub)
        fam = SetFamily(GroundSet.of_size(n), tuple(masks))
        cls = classify_family(fam)
        if cls.matroid:
            return fam
    raise InputError(f"failed to sample a matroid on n={n} after {attempts} attempts")
