"""Ground sets, bitmask subsets, set families, and hypercube enumeration."""
from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Iterator, Sequence

HARD_MAX_N = 20


class CospanError(Exception):
    """Base class for all library errors."""


class CapacityError(CospanError):
    """An operation would materialize a dense 2^n structure for too-large n."""


class InputError(CospanError):
    """Malformed input: bad JSON, violated precondition, unknown name."""


class GroundMismatchError(InputError):
    """Two values built over different ground sets were combined."""


def max_dense_n() -> int:
    """Capacity cap for dense 2^n structures; COSPAN_MAX_N may lower it."""
    env = os.environ.get("COSPAN_MAX_N")
    if env is None:
        return HARD_MAX_N
    try:
        value = int(env)
    except ValueError as exc:
        raise InputError(f"COSPAN_MAX_N must be an integer, got {env!r}") from exc
    return min(value, HARD_MAX_N)


def require_dense(n: int) -> None:
    cap = max_dense_n()
    if n > cap:
        raise CapacityError(f"dense enumeration needs n <= {cap}, got n = {n}")


def submasks(mask: int) -> Iterator[int]:
    """All submasks of `mask`, descending, including `mask` and 0."""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def bit_indices(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class GroundSet:
    """A labeled finite universe E; elements are indexed 0..n-1."""

    labels: tuple[str, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "labels", tuple(self.labels))
        if len(set(self.labels)) != len(self.labels):
            raise InputError(f"ground-set labels must be distinct: {self.labels}")

    @classmethod
    def of_size(cls, n: int) -> "GroundSet":
        """Ground set with default labels "1".."n"."""
        if n < 0:
            raise InputError(f"ground-set size must be >= 0, got {n}")
        return cls(tuple(str(i + 1) for i in range(n)))

    @property
    def n(self) -> int:
        return len(self.labels)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def index(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError as exc:
            raise InputError(f"unknown element {label!r} for ground {self.labels}") from exc

    def subset(self, labels: Sequence[str] = ()) -> "Subset":
        mask = 0
        for label in labels:
            mask |= 1 << self.index(label)
        return Subset(self, mask)

    def from_mask(self, mask: int) -> "Subset":
        return Subset(self, mask)

    def empty(self) -> "Subset":
        return Subset(self, 0)

    def full(self) -> "Subset":
        return Subset(self, self.full_mask)


@dataclass(frozen=True)
class Subset:
    """A member set X ⊆ E as a bitmask over a shared GroundSet."""

    ground: GroundSet
    mask: int

    def __post_init__(self) -> None:
        if self.mask < 0 or self.mask > self.ground.full_mask:
            raise InputError(f"mask {self.mask:#x} has members outside 0..{self.ground.n - 1}")

    def _require_same_ground(self, other: "Subset") -> None:
        if self.ground != other.ground:
            raise GroundMismatchError(
                f"subsets over different grounds: {self.ground.labels} vs {other.ground.labels}"
            )

    def members(self) -> tuple[str, ...]:
        return tuple(self.ground.labels[i] for i in bit_indices(self.mask))

    def cardinality(self) -> int:
        return self.mask.bit_count()

    def __len__(self) -> int:
        return self.cardinality()

    def __contains__(self, label: str) -> bool:
        return bool(self.mask >> self.ground.index(label) & 1)

    def union(self, other: "Subset") -> "Subset":
        self._require_same_ground(other)
        return Subset(self.ground, self.mask | other.mask)

    def intersection(self, other: "Subset") -> "Subset":
        self._require_same_ground(other)
        return Subset(self.ground, self.mask & other.mask)

    def difference(self, other: "Subset") -> "Subset":
        self._require_same_ground(other)
        return Subset(self.ground, self.mask & ~other.mask)

    def complement(self) -> "Subset":
        return Subset(self.ground, self.ground.full_mask & ~self.mask)

    def is_subset_of(self, other: "Subset") -> bool:
        self._require_same_ground(other)
        return self.mask & ~other.mask == 0

    __or__ = union
    __and__ = intersection
    __sub__ = difference
    __le__ = is_subset_of

    def with_element(self, label: str) -> "Subset":
        return Subset(self.ground, self.mask | 1 << self.ground.index(label))

    def without_element(self, label: str) -> "Subset":
        return Subset(self.ground, self.mask & ~(1 << self.ground.index(label)))

    def __repr__(self) -> str:
        return "{%s}" % ",".join(self.members())


def subset_algebra(a: Subset, b: Subset | None, kind: str):
    """Dispatch basic set algebra by name; `complement` ignores `b`."""
    if kind == "complement":
        return a.complement()
    if b is None:
        raise InputError(f"operation {kind!r} needs two subsets")
    ops = {
        "union": Subset.union,
        "intersection": Subset.intersection,
        "difference": Subset.difference,
        "is-subset": Subset.is_subset_of,
    }
    if kind not in ops:
        raise InputError(f"unknown set operation {kind!r}")
    return ops[kind](a, b)


def canonical_masks(masks) -> tuple[int, ...]:
    """Deduplicate and sort by (cardinality, mask value)."""
    return tuple(sorted(set(masks), key=lambda m: (m.bit_count(), m)))


@dataclass(frozen=True)
class SetFamily:
    """A finite collection of subsets of one ground set, canonically ordered."""

    ground: GroundSet
    masks: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "masks", canonical_masks(self.masks))
        full = self.ground.full_mask
        for mask in self.masks:
            if mask < 0 or mask > full:
                raise InputError(f"family member {mask:#x} outside ground of size {self.ground.n}")

    @classmethod
    def of(cls, ground: GroundSet, subsets) -> "SetFamily":
        masks = [s.mask if isinstance(s, Subset) else int(s) for s in subsets]
        return cls(ground, tuple(masks))

    def members(self) -> tuple[Subset, ...]:
        return tuple(Subset(self.ground, m) for m in self.masks)

    def __len__(self) -> int:
        return len(self.masks)

    def __iter__(self) -> Iterator[Subset]:
        return iter(self.members())

    def __contains__(self, item) -> bool:
        mask = item.mask if isinstance(item, Subset) else int(item)
        return mask in set(self.masks)

    def __repr__(self) -> str:
        return "{%s}" % ", ".join(repr(s) for s in self.members())


@dataclass(frozen=True)
class PropertyReport:
    """Verdict of a property check; a failing verdict carries a re-checkable witness."""

    property: str
    holds: bool
    witness: tuple | None = None

    def __post_init__(self) -> None:
        if self.holds and self.witness is not None:
            raise InputError(f"{self.property}: witness given for a holding property")
        if not self.holds and self.witness is None:
            raise InputError(f"{self.property}: failing property needs a witness")


def enumerate_subsets(ground: GroundSet) -> Iterator[Subset]:
    """All 2^n subsets in ascending mask order."""
    require_dense(ground.n)
    for mask in range(1 << ground.n):
        yield Subset(ground, mask)


FAMILY_PREDICATES = (
    "union-closed",
    "intersection-closed",
    "hereditary",
    "accessible",
    "contains-empty",
    "contains-ground",
)


def family_predicate(fam: SetFamily, kind: str) -> PropertyReport:
    """Exhaustively check a family predicate, reporting the first violation."""
    if kind not in FAMILY_PREDICATES:
        raise InputError(f"unknown family predicate {kind!r}")
    ground = fam.ground
    member_set = set(fam.masks)
    witness: tuple | None = None

    if kind == "union-closed" or kind == "intersection-closed":
        for i, a in enumerate(fam.masks):
            for b in fam.masks[i + 1:]:
                combined = a | b if kind == "union-closed" else a & b
                if combined not in member_set:
                    witness = (Subset(ground, a), Subset(ground, b))
                    break
            if witness:
                break
    elif kind == "hereditary":
        for a in fam.masks:
            for sub in submasks(a):
                if sub not in member_set:
                    witness = (Subset(ground, a), Subset(ground, sub))
                    break
            if witness:
                break
    elif kind == "accessible":
        for a in fam.masks:
            if a == 0:
                continue
            if not any(a & ~(1 << i) in member_set for i in bit_indices(a)):
                witness = (Subset(ground, a),)
                break
    elif kind == "contains-empty":
        if 0 not in member_set:
            witness = (ground.empty(),)
    elif kind == "contains-ground":
        if ground.full_mask not in member_set:
            witness = (ground.full(),)

    return PropertyReport(kind, witness is None, witness)


def complement_family(fam: SetFamily) -> SetFamily:
    """{E − X : X ∈ fam}; an involution."""
    full = fam.ground.full_mask
    return SetFamily(fam.ground, tuple(full & ~m for m in fam.masks))
