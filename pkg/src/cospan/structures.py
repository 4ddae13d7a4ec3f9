"""Greedoids, antimatroids, matroids, convex geometries, and their duality.

Rank is computed directly as r(X) = max{|A| : A ∈ F, A ⊆ X} by scanning the
family against each subset mask; the rank closure is σ(X) = {x : r(X∪x) = r(X)}
(which contains X by construction).
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
    family_predicate,
    require_dense,
    submasks,
)
from .operators import (
    SetOperator,
    extreme_points,
    scan_ae,
    scan_c2,
    scan_c3,
    scan_v1,
)
from .cospanning import complement_partition, partition_from_operator


def check_greedoid(fam: SetFamily) -> PropertyReport:
    """∅ ∈ F plus the augmentation axiom over all member pairs."""
    member_set = set(fam.masks)
    if 0 not in member_set:
        return PropertyReport("greedoid", False, (fam.ground.empty(),))
    for x in fam.masks:
        cx = x.bit_count()
        for y in fam.masks:
            if cx <= y.bit_count():
                continue
            if not any(y | 1 << i in member_set for i in bit_indices(x & ~y)):
                return PropertyReport(
                    "greedoid", False, (Subset(fam.ground, x), Subset(fam.ground, y))
                )
    return PropertyReport("greedoid", True)


@dataclass(frozen=True)
class Greedoid:
    """A greedoid with its rank table and rank-closure operator."""

    family: SetFamily
    rank: tuple[int, ...]
    sigma: SetOperator

    def gamma(self, subset: Subset) -> Subset:
        """Γ(X) = {x ∈ E − X : X ∪ x ∈ F}."""
        member_set = set(self.family.masks)
        mask = 0
        for i in bit_indices(self.family.ground.full_mask & ~subset.mask):
            if subset.mask | 1 << i in member_set:
                mask |= 1 << i
        return Subset(self.family.ground, mask)


def rank_table(fam: SetFamily) -> tuple[int, ...]:
    require_dense(fam.ground.n)
    size = 1 << fam.ground.n
    ranks = [0] * size
    for x in range(size):
        best = 0
        for a in fam.masks:
            if a & ~x == 0:
                c = a.bit_count()
                if c > best:
                    best = c
        ranks[x] = best
    return tuple(ranks)


def build_greedoid(fam: SetFamily) -> Greedoid:
    verdict = check_greedoid(fam)
    if not verdict.holds:
        raise InputError(f"not a greedoid, witness {verdict.witness!r}")
    ranks = rank_table(fam)
    n = fam.ground.n
    table = []
    for x in range(1 << n):
        sigma = x
        for i in range(n):
            if not x >> i & 1 and ranks[x | 1 << i] == ranks[x]:
                sigma |= 1 << i
        table.append(sigma)
    op = SetOperator.from_table(fam.ground, table, name="rank-closure")
    return Greedoid(fam, ranks, op)


def feasible_from_operator(op: SetOperator) -> SetFamily:
    """{X : X = ex(X)} — the subsets all of whose elements are extreme."""
    require_dense(op.ground.n)
    masks = []
    for x in range(1 << op.ground.n):
        if extreme_points(op, Subset(op.ground, x)).mask == x:
            masks.append(x)
    return SetFamily(op.ground, tuple(masks))


@dataclass(frozen=True)
class FamilyClassification:
    greedoid: bool
    antimatroid: bool
    matroid: bool


def classify_family(fam: SetFamily) -> FamilyClassification:
    greedoid = check_greedoid(fam).holds
    antimatroid = greedoid and family_predicate(fam, "union-closed").holds
    matroid = greedoid and family_predicate(fam, "hereditary").holds
    return FamilyClassification(greedoid, antimatroid, matroid)


def closure_from_closed_sets(closed: SetFamily) -> SetOperator:
    """τ_K(X) = ⋂{A ∈ K : X ⊆ A}; requires E ∈ K and K intersection-closed."""
    ground = closed.ground
    if ground.full_mask not in set(closed.masks):
        raise InputError("closed-set family must contain the full ground set")
    inter = family_predicate(closed, "intersection-closed")
    if not inter.holds:
        raise InputError(f"closed-set family not intersection-closed, witness {inter.witness!r}")
    require_dense(ground.n)
    table = []
    for x in range(1 << ground.n):
        meet = ground.full_mask
        for a in closed.masks:
            if x & ~a == 0:
                meet &= a
        table.append(meet)
    return SetOperator.from_table(ground, table, name="tau")


def closed_sets(op: SetOperator) -> SetFamily:
    """Fixed points of the operator."""
    require_dense(op.ground.n)
    return SetFamily(op.ground, tuple(x for x, out in enumerate(op.table) if out == x))


def _chain_property(fam: SetFamily):
    """For X ⊂ Y in fam there is a one-element-at-a-time chain inside fam."""
    member_set = set(fam.masks)
    for x in fam.masks:
        for y in fam.masks:
            if x == y or x & ~y:
                continue
            reached = {x}
            frontier = [x]
            while frontier:
                cur = frontier.pop()
                if cur == y:
                    break
                for i in bit_indices(y & ~cur):
                    nxt = cur | 1 << i
                    if nxt in member_set and nxt not in reached:
                        reached.add(nxt)
                        frontier.append(nxt)
            if y not in reached:
                return (Subset(fam.ground, x), Subset(fam.ground, y))
    return None


@dataclass(frozen=True)
class ConvexGeometryReport:
    holds: bool
    axioms: tuple[PropertyReport, ...]
    accessibility: PropertyReport
    chain: PropertyReport


@dataclass(frozen=True)
class ConvexGeometry:
    closure: SetOperator
    closed_sets: SetFamily


def check_convex_geometry(source: SetOperator | SetFamily) -> ConvexGeometryReport:
    """C1∧C2∧C3∧AE plus the closed-set accessibility and chain properties."""
    if isinstance(source, SetFamily):
        op = closure_from_closed_sets(source)
    else:
        op = source

    n, table = op.ground.n, op.table
    require_dense(n)

    def wrap(mask: int) -> Subset:
        return Subset(op.ground, mask)

    axioms = []
    for name, scan in (("C1", scan_v1), ("C2", scan_c2), ("C3", scan_c3), ("AE", scan_ae)):
        raw = scan(n, table)
        if raw is None:
            axioms.append(PropertyReport(name, True))
        elif name == "AE":
            x, p, q = raw
            axioms.append(
                PropertyReport(name, False, (wrap(x), op.ground.labels[p], op.ground.labels[q]))
            )
        else:
            axioms.append(PropertyReport(name, False, tuple(wrap(m) for m in raw)))
    closed = closed_sets(op)
    member_set = set(closed.masks)

    acc_witness = None
    for x in closed.masks:
        ex_mask = extreme_points(op, Subset(op.ground, x)).mask
        for i in bit_indices(x):
            if bool(ex_mask >> i & 1) != (x & ~(1 << i) in member_set):
                acc_witness = (Subset(op.ground, x), op.ground.labels[i])
                break
        if acc_witness:
            break
    accessibility = PropertyReport("closed-set-accessibility", acc_witness is None, acc_witness)

    chain_witness = _chain_property(closed)
    chain = PropertyReport("chain-property", chain_witness is None, chain_witness)

    holds = all(r.holds for r in axioms)
    return ConvexGeometryReport(holds, tuple(axioms), accessibility, chain)


def build_convex_geometry(closed: SetFamily) -> ConvexGeometry:
    report = check_convex_geometry(closed)
    if not report.holds:
        failed = next(r for r in report.axioms if not r.holds)
        raise InputError(f"not a convex geometry: {failed.property} fails at {failed.witness!r}")
    return ConvexGeometry(closure_from_closed_sets(closed), closed)


def antimatroid_basis(fam: SetFamily, subset: Subset) -> Subset:
    """B_X = ⋃{A ∈ F : A ⊆ X}, the unique σ-basis of X in an antimatroid."""
    if not classify_family(fam).antimatroid:
        raise InputError("antimatroid_basis needs an antimatroid family")
    mask = 0
    for a in fam.masks:
        if a & ~subset.mask == 0:
            mask |= a
    return Subset(fam.ground, mask)


def duality_suite(fam: SetFamily) -> PropertyReport:
    """The antimatroid <-> complementary convex geometry checks, exhaustively.

    Sub-checks, tagged in the witness: "geometry" (the complement family is
    a convex geometry), "tau-basis" (τ(X̄) = complement of ex_σ(X)),
    "ex-sigma" (ex_τ(X̄) = complement of σ(X)), "class-bijection",
    "monotone-ex", "union-basis" (B_X = ⋃{A ∈ F : A ⊆ X} is the basis).
    """
    if not classify_family(fam).antimatroid:
        raise InputError("duality_suite needs an antimatroid family")
    ground = fam.ground
    if ground.n > 16:
        raise InputError("duality_suite holds two full partitions; needs n <= 16")
    require_dense(ground.n)
    full = ground.full_mask
    greedoid = build_greedoid(fam)
    sigma = greedoid.sigma
    complement = SetFamily(ground, tuple(full & ~m for m in fam.masks))

    geom = check_convex_geometry(complement)
    if not geom.holds:
        failed = next(r for r in geom.axioms if not r.holds)
        return PropertyReport("duality", False, ("geometry",) + tuple(failed.witness or ()))

    tau = closure_from_closed_sets(complement)
    member_set = set(fam.masks)
    for x in range(1 << ground.n):
        xc = full & ~x
        ex_sigma = extreme_points(sigma, Subset(ground, x)).mask
        if tau.apply(xc) != full & ~ex_sigma:
            return PropertyReport("duality", False, ("tau-basis", Subset(ground, x)))
        ex_tau = extreme_points(tau, Subset(ground, xc)).mask
        if ex_tau != full & ~sigma.apply(x):
            return PropertyReport("duality", False, ("ex-sigma", Subset(ground, x)))
        union_basis = 0
        for a in fam.masks:
            if a & ~x == 0:
                union_basis |= a
        if union_basis != ex_sigma or sigma.apply(union_basis) != sigma.apply(x):
            return PropertyReport("duality", False, ("union-basis", Subset(ground, x)))
        for i in bit_indices(full & ~x):
            bigger = extreme_points(sigma, Subset(ground, x | 1 << i)).mask
            if ex_sigma & ~bigger:
                return PropertyReport(
                    "duality", False, ("monotone-ex", Subset(ground, x), ground.labels[i])
                )

    p_sigma = partition_from_operator(sigma)
    p_tau = partition_from_operator(tau)
    if complement_partition(p_sigma) != p_tau:
        return PropertyReport("duality", False, ("class-bijection", ground.full()))
    return PropertyReport("duality", True)
