"""Cospanning partitions of the hypercube and their relation properties.

A partition stores, for every mask in 2^E, a class id; classes are numbered
by their smallest member mask.  Relation properties R1..R5 / R33 / EqCL /
EqAN are exhaustive scans producing concrete witnesses.
"""
from __future__ import annotations

from dataclasses import dataclass

from .setcore import (
    GroundSet,
    InputError,
    PropertyReport,
    SetFamily,
    Subset,
    bit_indices,
    canonical_masks,
    require_dense,
    submasks,
)
from .operators import SetOperator


@dataclass(frozen=True)
class CospanningPartition:
    """Partition of 2^E into equivalence classes [A] = {X : op(X) = op(A)}."""

    ground: GroundSet
    class_of: tuple[int, ...]
    classes: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        size = 1 << self.ground.n
        if len(self.class_of) != size:
            raise InputError(f"class_of has {len(self.class_of)} entries, expected {size}")
        seen = [False] * size
        for cid, members in enumerate(self.classes):
            if not members:
                raise InputError(f"class {cid} is empty")
            for mask in members:
                if self.class_of[mask] != cid or seen[mask]:
                    raise InputError(f"mask {mask:#x} misassigned in class {cid}")
                seen[mask] = True
        if not all(seen):
            raise InputError("some subsets belong to no class")

    @classmethod
    def from_classes(cls, ground: GroundSet, classes) -> "CospanningPartition":
        require_dense(ground.n)
        ordered = sorted(
            (canonical_masks(members) for members in classes),
            key=lambda members: min(members),
        )
        class_of = [-1] * (1 << ground.n)
        for cid, members in enumerate(ordered):
            for mask in members:
                class_of[mask] = cid
        return cls(ground, tuple(class_of), tuple(ordered))

    def same_class(self, a: int, b: int) -> bool:
        return self.class_of[a] == self.class_of[b]

    def class_members(self, subset: Subset) -> SetFamily:
        return SetFamily(self.ground, self.classes[self.class_of[subset.mask]])

    def minima(self, cid: int) -> tuple[int, ...]:
        members = self.classes[cid]
        return tuple(m for m in members if not any(o != m and o & ~m == 0 for o in members))

    def maxima(self, cid: int) -> tuple[int, ...]:
        members = self.classes[cid]
        return tuple(m for m in members if not any(o != m and m & ~o == 0 for o in members))

    def unique_max(self, cid: int) -> int | None:
        maxima = self.maxima(cid)
        return maxima[0] if len(maxima) == 1 else None

    def __len__(self) -> int:
        return len(self.classes)


@dataclass(frozen=True)
class IntervalPartition:
    """Partition of 2^E into disjoint intervals [lo, hi]."""

    ground: GroundSet
    intervals: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "intervals", tuple(sorted(self.intervals)))
        seen = 0
        count = 0
        for lo, hi in self.intervals:
            if lo & ~hi:
                raise InputError(f"interval [{lo:#x},{hi:#x}] has lo ⊄ hi")
            count += 1 << (hi & ~lo).bit_count()
        if count != 1 << self.ground.n:
            raise InputError("intervals do not cover 2^E exactly")
        for lo, hi in self.intervals:
            for extra in submasks(hi & ~lo):
                mask = lo | extra
                if seen >> mask & 1:
                    raise InputError(f"subset {mask:#x} covered by two intervals")
                seen |= 1 << mask
        # count + disjointness imply full coverage

    def as_partition(self) -> CospanningPartition:
        classes = []
        for lo, hi in self.intervals:
            classes.append([lo | extra for extra in submasks(hi & ~lo)])
        return CospanningPartition.from_classes(self.ground, classes)

    def __len__(self) -> int:
        return len(self.intervals)


def partition_from_operator(op: SetOperator) -> CospanningPartition:
    """The fibers of op: X ~ Y iff op(X) = op(Y)."""
    require_dense(op.ground.n)
    fibers: dict[int, list[int]] = {}
    for mask, out in enumerate(op.table):
        fibers.setdefault(out, []).append(mask)
    return CospanningPartition.from_classes(op.ground, fibers.values())


RELATION_PROPERTIES = ("R1", "R2", "R3", "R33", "R4G", "R4CG", "R5", "EqCL", "EqAN")


def _scan_r1(p: CospanningPartition):
    for cid, members in enumerate(p.classes):
        for i, a in enumerate(members):
            for b in members[i + 1:]:
                if p.class_of[a | b] != cid:
                    return (a, b)
    return None


def _scan_r2(p: CospanningPartition):
    for cid, members in enumerate(p.classes):
        for a in members:
            for b in members:
                if a == b or a & ~b:
                    continue
                for extra in submasks(b & ~a):
                    mid = a | extra
                    if p.class_of[mid] != cid:
                        return (a, mid, b)
    return None


def _scan_r3(p: CospanningPartition):
    for cid, members in enumerate(p.classes):
        for i, a in enumerate(members):
            for b in members[i + 1:]:
                if p.class_of[a & b] != cid:
                    return (a, b)
    return None


def _scan_r33(p: CospanningPartition):
    n = p.ground.n
    for x in range(1 << n):
        outside = list(bit_indices(((1 << n) - 1) & ~x))
        for pi in outside:
            xp = x | 1 << pi
            if p.same_class(x, xp):
                continue
            for qi in outside:
                if qi == pi:
                    continue
                xq = x | 1 << qi
                if p.same_class(x, xq):
                    continue
                xpq = xp | 1 << qi
                if p.same_class(xp, xpq) and p.same_class(xq, xpq):
                    return (x, pi, qi)
    return None


def _scan_r4g(p: CospanningPartition):
    n = p.ground.n
    for x in range(1 << n):
        outside = list(bit_indices(((1 << n) - 1) & ~x))
        for xi in outside:
            xx = x | 1 << xi
            for yi in outside:
                if yi == xi:
                    continue
                xxy = xx | 1 << yi
                if not p.same_class(x | 1 << yi, xxy) or p.same_class(xx, xxy):
                    continue
                if not any(p.same_class(xx & ~(1 << z), xx) for z in bit_indices(xx)):
                    return (x, xi, yi)
    return None


def _scan_r4cg(p: CospanningPartition):
    # Quantifier repair: x ranges over X, y over E − X.
    n = p.ground.n
    full = (1 << n) - 1
    for x in range(1 << n):
        outside = list(bit_indices(full & ~x))
        if any(p.same_class(x, x | 1 << z) for z in outside):
            continue
        for xi in bit_indices(x):
            xr = x & ~(1 << xi)
            if p.same_class(x, xr):
                continue
            for yi in outside:
                if p.same_class(xr, xr | 1 << yi):
                    return (x, xi, yi)
    return None


def _scan_r5(p: CospanningPartition):
    n = p.ground.n
    for x in range(1 << n):
        if any(p.same_class(x, x & ~(1 << xi)) for xi in bit_indices(x)):
            continue
        for xi in bit_indices(x):
            xr = x & ~(1 << xi)
            for zi in bit_indices(xr):
                if p.same_class(xr & ~(1 << zi), xr):
                    return (x, xi, zi)
    return None


def _scan_eqcl(ip: IntervalPartition):
    highs = {hi for _, hi in ip.intervals}
    for lo, hi in ip.intervals:
        for xi in bit_indices(lo):
            if hi & ~(1 << xi) not in highs:
                return (lo, hi, xi)
    return None


def _scan_eqan(ip: IntervalPartition):
    n = ip.ground.n
    lows = {lo for lo, _ in ip.intervals}
    for lo, hi in ip.intervals:
        for xi in bit_indices(((1 << n) - 1) & ~hi):
            if lo | 1 << xi not in lows:
                return (lo, hi, xi)
    return None


def check_relation_property(p: CospanningPartition, prop: str) -> PropertyReport:
    """Exhaustively check one relation property of the partition."""
    ground = p.ground

    def sub(mask: int) -> Subset:
        return Subset(ground, mask)

    if prop in ("EqCL", "EqAN"):
        ip = interval_form(p)  # raises InputError on a non-interval partition
        raw = _scan_eqcl(ip) if prop == "EqCL" else _scan_eqan(ip)
        if raw is None:
            return PropertyReport(prop, True)
        lo, hi, xi = raw
        return PropertyReport(prop, False, (sub(lo), sub(hi), ground.labels[xi]))

    scans = {
        "R1": _scan_r1,
        "R2": _scan_r2,
        "R3": _scan_r3,
        "R33": _scan_r33,
        "R4G": _scan_r4g,
        "R4CG": _scan_r4cg,
        "R5": _scan_r5,
    }
    if prop not in scans:
        raise InputError(f"unknown relation property {prop!r}")
    raw = scans[prop](p)
    if raw is None:
        return PropertyReport(prop, True)
    if prop in ("R1", "R3"):
        witness = (sub(raw[0]), sub(raw[1]))
    elif prop == "R2":
        witness = (sub(raw[0]), sub(raw[1]), sub(raw[2]))
    else:  # R33, R4G, R4CG, R5: (X, element, element)
        witness = (sub(raw[0]), ground.labels[raw[1]], ground.labels[raw[2]])
    return PropertyReport(prop, False, witness)


def extremal_sets(p: CospanningPartition, side: str) -> SetFamily:
    """Inclusion-minimal members of every class, or the unique maxima."""
    if side == "min":
        masks: list[int] = []
        for cid in range(len(p.classes)):
            masks.extend(p.minima(cid))
        return SetFamily(p.ground, tuple(masks))
    if side == "max":
        masks = []
        for cid in range(len(p.classes)):
            top = p.unique_max(cid)
            if top is None:
                raise InputError(
                    f"class of {Subset(p.ground, p.classes[cid][0])!r} has no unique maximal member"
                )
            masks.append(top)
        return SetFamily(p.ground, tuple(masks))
    raise InputError(f"side must be 'min' or 'max', got {side!r}")


def operator_from_partition(p: CospanningPartition, mode: str) -> SetOperator:
    """Map every subset to the unique max (or min) of its class."""
    if mode not in ("max", "min"):
        raise InputError(f"mode must be 'max' or 'min', got {mode!r}")
    rep: list[int] = []
    for cid, members in enumerate(p.classes):
        if mode == "max":
            joined = 0
            for m in members:
                joined |= m
        else:
            joined = p.ground.full_mask
            for m in members:
                joined &= m
        if p.class_of[joined] != cid:
            kind = "union" if mode == "max" else "intersection"
            raise InputError(
                f"class of {Subset(p.ground, members[0])!r} does not contain its {kind}"
            )
        rep.append(joined)
    table = tuple(rep[p.class_of[mask]] for mask in range(1 << p.ground.n))
    return SetOperator.from_table(p.ground, table, name=f"from-partition-{mode}")


def interval_form(p: CospanningPartition) -> IntervalPartition:
    """Succeeds iff every class is the full interval [its min, its max]."""
    intervals = []
    for cid, members in enumerate(p.classes):
        lo = p.ground.full_mask
        hi = 0
        for m in members:
            lo &= m
            hi |= m
        span = hi & ~lo
        ok = (
            lo in members
            and hi in members
            and len(members) == 1 << span.bit_count()
        )
        if not ok:
            raise InputError(
                f"class {SetFamily(p.ground, members)!r} is not an interval"
            )
        intervals.append((lo, hi))
    return IntervalPartition(p.ground, tuple(intervals))


def complement_partition(p: CospanningPartition) -> CospanningPartition:
    """Classes become elementwise complements; an involution."""
    full = p.ground.full_mask
    classes = [[full & ~m for m in members] for members in p.classes]
    return CospanningPartition.from_classes(p.ground, classes)


_DOT_PALETTE = (
    "#a6cee3", "#b2df8a", "#fb9a99", "#fdbf6f", "#cab2d6", "#ffff99",
    "#1f78b4", "#33a02c", "#e31a1c", "#ff7f00", "#6a3d9a", "#b15928",
)


def partition_dot(p: CospanningPartition) -> str:
    """DOT graph: one node per subset, colored by class, hypercube edges."""
    ground = p.ground
    lines = ["graph hypercube {", "  node [style=filled];"]
    for mask in range(1 << ground.n):
        label = "{%s}" % ",".join(Subset(ground, mask).members())
        cid = p.class_of[mask]
        color = _DOT_PALETTE[cid % len(_DOT_PALETTE)]
        lines.append(f'  s{mask} [label="{label}", class_id={cid}, fillcolor="{color}"];')
    for mask in range(1 << ground.n):
        for i in range(ground.n):
            if not mask >> i & 1:
                lines.append(f"  s{mask} -- s{mask | 1 << i};")
    lines.append("}")
    return "\n".join(lines) + "\n"
