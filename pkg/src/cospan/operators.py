"""Set operators 2^E -> 2^E and executable checkers for their axioms.

The raw scanners work on plain (n, table) data where table[mask] is the
output mask; the public API wraps verdicts into PropertyReport with Subset
witnesses.  Axiom names follow the glossary: V1/V2 (violator), VV2
(self-convexity variant), C2/C3 (closure), CV1/CV2 (co-violator), AE
(anti-exchange), EX (Steinitz-MacLane exchange), G3 (greedoid closure).
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, NamedTuple, Sequence

from .setcore import (
    GroundSet,
    InputError,
    PropertyReport,
    SetFamily,
    Subset,
    bit_indices,
    require_dense,
    submasks,
)


class SetOperator:
    """A total map 2^E -> 2^E, table-backed or callback-backed with a memo."""

    __slots__ = ("ground", "name", "_fn", "_table", "_memo")

    def __init__(
        self,
        ground: GroundSet,
        table: Sequence[int] | None = None,
        fn: Callable[[int], int] | None = None,
        name: str = "",
    ):
        if (table is None) == (fn is None):
            raise InputError("SetOperator needs exactly one of table or fn")
        if table is not None:
            table = tuple(table)
            if len(table) != 1 << ground.n:
                raise InputError(
                    f"operator table has {len(table)} entries, expected {1 << ground.n}"
                )
            full = ground.full_mask
            for out in table:
                if out < 0 or out > full:
                    raise InputError(f"operator output {out:#x} outside the ground set")
        self.ground = ground
        self.name = name
        self._fn = fn
        self._table = table
        self._memo: dict[int, int] = {}

    @classmethod
    def from_table(cls, ground: GroundSet, table: Sequence[int], name: str = "") -> "SetOperator":
        return cls(ground, table=table, name=name)

    @classmethod
    def from_callable(cls, ground: GroundSet, fn: Callable[[int], int], name: str = "") -> "SetOperator":
        return cls(ground, fn=fn, name=name)

    def apply(self, mask: int) -> int:
        """Evaluate on a raw mask, memoizing callback backends."""
        if self._table is not None:
            return self._table[mask]
        out = self._memo.get(mask)
        if out is None:
            out = self._fn(mask)
            if out < 0 or out > self.ground.full_mask:
                raise InputError(f"operator callback returned {out:#x} outside the ground set")
            self._memo[mask] = out
        return out

    @property
    def table(self) -> tuple[int, ...]:
        """Dense table over all of 2^E; tabulated once for callback backends."""
        if self._table is None:
            require_dense(self.ground.n)
            self._table = tuple(self.apply(m) for m in range(1 << self.ground.n))
        return self._table

    def __call__(self, subset: Subset) -> Subset:
        if subset.ground != self.ground:
            raise InputError("operator applied to a subset of a different ground set")
        return Subset(self.ground, self.apply(subset.mask))

    def __eq__(self, other) -> bool:
        if not isinstance(other, SetOperator):
            return NotImplemented
        return self.ground == other.ground and self.table == other.table

    def __hash__(self) -> int:
        return hash((self.ground, self.table))

    def __repr__(self) -> str:
        return f"SetOperator({self.name or 'unnamed'}, n={self.ground.n})"


# --- raw axiom scanners: witness tuple of masks/element indices, or None ---

def scan_v1(n: int, table: Sequence[int]):
    for x in range(1 << n):
        if x & ~table[x]:
            return (x,)
    return None


def scan_v2(n: int, table: Sequence[int]):
    for x in range(1 << n):
        room = table[x] & ~x
        for extra in submasks(room):
            if extra and table[x | extra] != table[x]:
                return (x, x | extra)
    return None


def scan_vv2(n: int, table: Sequence[int]):
    size = 1 << n
    for x in range(size):
        tx = table[x]
        for y in range(x + 1, size):
            if x & ~table[y] == 0 and y & ~tx == 0 and table[y] != tx:
                return (x, y)
    return None


def scan_c2(n: int, table: Sequence[int]):
    # Isotonicity over single-element extensions implies full isotonicity.
    for x in range(1 << n):
        for i in range(n):
            bit = 1 << i
            if x & bit:
                continue
            if table[x] & ~table[x | bit]:
                return (x, x | bit)
    return None


def scan_c3(n: int, table: Sequence[int]):
    for x in range(1 << n):
        if table[table[x]] != table[x]:
            return (x,)
    return None


def scan_cv1(n: int, table: Sequence[int]):
    for x in range(1 << n):
        if table[x] & ~x:
            return (x,)
    return None


def scan_cv2(n: int, table: Sequence[int]):
    for x in range(1 << n):
        c = table[x]
        if c & ~x:
            continue  # no Y with c(X) ⊆ Y ⊆ X
        room = x & ~c
        for extra in submasks(room):
            if extra != room and table[c | extra] != c:
                return (x, c | extra)
    return None


def scan_ae(n: int, table: Sequence[int]):
    for x in range(1 << n):
        outside = ((1 << n) - 1) & ~table[x]
        out_bits = list(bit_indices(outside))
        for p in out_bits:
            for q in out_bits:
                if p == q:
                    continue
                if table[x | 1 << q] >> p & 1 and table[x | 1 << p] >> q & 1:
                    return (x, p, q)
    return None


def scan_ex(n: int, table: Sequence[int]):
    for x in range(1 << n):
        tx = table[x]
        for p in range(n):
            if tx >> p & 1:
                continue
            for q in range(n):
                if q == p:
                    continue
                if table[x | 1 << q] >> p & 1 and not table[x | 1 << p] >> q & 1:
                    return (x, p, q)
    return None


def scan_g3(n: int, table: Sequence[int]):
    for x in range(1 << n):
        outside = list(bit_indices(((1 << n) - 1) & ~x))
        for p in outside:
            xp = x | 1 << p
            for q in outside:
                if q == p:
                    continue
                xpq = xp | 1 << q
                if table[x | 1 << q] != table[xpq] or table[xp] == table[xpq]:
                    continue
                if not any(table[xp & ~(1 << z)] == table[xp] for z in bit_indices(xp)):
                    return (x, p, q)
    return None


AXIOM_SCANS = {
    "V1": scan_v1,
    "V2": scan_v2,
    "VV2": scan_vv2,
    "C2": scan_c2,
    "C3": scan_c3,
    "CV1": scan_cv1,
    "CV2": scan_cv2,
    "AE": scan_ae,
    "EX": scan_ex,
    "G3": scan_g3,
}

# How to wrap raw witness entries: "s" = subset mask, "e" = element index.
_WITNESS_SHAPE = {
    "V1": "s",
    "V2": "ss",
    "VV2": "ss",
    "C2": "ss",
    "C3": "s",
    "CV1": "s",
    "CV2": "ss",
    "AE": "see",
    "EX": "see",
    "G3": "see",
}


def _wrap_witness(ground: GroundSet, shape: str, raw: tuple) -> tuple:
    out = []
    for kind, value in zip(shape, raw):
        out.append(Subset(ground, value) if kind == "s" else ground.labels[value])
    return tuple(out)


def check_axiom(op: SetOperator, axiom: str) -> PropertyReport:
    """Exhaustively check one operator axiom over all of 2^E."""
    if axiom not in AXIOM_SCANS:
        raise InputError(f"unknown axiom {axiom!r}")
    raw = AXIOM_SCANS[axiom](op.ground.n, op.table)
    if raw is None:
        return PropertyReport(axiom, True)
    return PropertyReport(axiom, False, _wrap_witness(op.ground, _WITNESS_SHAPE[axiom], raw))


@dataclass(frozen=True)
class SpaceClassification:
    violator: bool
    co_violator: bool
    closure: bool
    convex_geometry: bool


def classify_space(op: SetOperator) -> SpaceClassification:
    n, table = op.ground.n, op.table
    violator = scan_v1(n, table) is None and scan_v2(n, table) is None
    co_violator = scan_cv1(n, table) is None and scan_cv2(n, table) is None
    closure = (
        scan_v1(n, table) is None
        and scan_c2(n, table) is None
        and scan_c3(n, table) is None
    )
    convex_geometry = closure and scan_ae(n, table) is None
    return SpaceClassification(violator, co_violator, closure, convex_geometry)


def dual_interior(op: SetOperator) -> SetOperator:
    """The interior operator c(X) = E − op(E − X); an involution on operators."""
    full = op.ground.full_mask
    table = op.table
    dual = tuple(full & ~table[full & ~x] for x in range(full + 1))
    return SetOperator.from_table(op.ground, dual, name=f"dual({op.name})" if op.name else "dual")


def extreme_points(op: SetOperator, subset: Subset) -> Subset:
    """ex(X) = {x ∈ X : x ∉ op(X − x)}."""
    ex_mask = 0
    for i in bit_indices(subset.mask):
        bit = 1 << i
        if not op.apply(subset.mask & ~bit) & bit:
            ex_mask |= bit
    return Subset(op.ground, ex_mask)


def generators_and_bases(op: SetOperator, subset: Subset) -> tuple[SetFamily, SetFamily]:
    """All Y with op(Y) = op(X), and the inclusion-minimal ones."""
    require_dense(op.ground.n)
    table = op.table
    target = table[subset.mask]
    gens = [y for y in range(len(table)) if table[y] == target]
    bases = [g for g in gens if not any(h != g and h & ~g == 0 for h in gens)]
    return SetFamily(op.ground, tuple(gens)), SetFamily(op.ground, tuple(bases))


def is_uniquely_generated(op: SetOperator) -> PropertyReport:
    """Intersection property: op(X)=op(Y) ⇒ op(X∩Y)=op(X), over all pairs."""
    require_dense(op.ground.n)
    table = op.table
    size = len(table)
    for x in range(size):
        tx = table[x]
        for y in range(x + 1, size):
            if table[y] == tx and table[x & y] != tx:
                return PropertyReport(
                    "uniquely-generated",
                    False,
                    (Subset(op.ground, x), Subset(op.ground, y)),
                )
    return PropertyReport("uniquely-generated", True)


class BasisIntersection(NamedTuple):
    subset: Subset
    is_generator: bool


def basis_by_intersection(op: SetOperator, subset: Subset) -> BasisIntersection:
    """Intersection of all generators of X; the unique basis when one exists."""
    require_dense(op.ground.n)
    table = op.table
    target = table[subset.mask]
    meet = op.ground.full_mask
    for y in range(len(table)):
        if table[y] == target:
            meet &= y
    return BasisIntersection(Subset(op.ground, meet), table[meet] == target)
