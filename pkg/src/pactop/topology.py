"""Finite topological spaces with explicit open-set families.

Subsets of the carrier ``range(size)`` are bitmask integers throughout.
A finite topology is fully determined by the minimal open neighborhood
of each point (any family closed under union and intersection is the
up-set family of its specialization preorder), so the operations below
lean on minimal neighborhoods internally while the stored ``opens``
tuple stays the source of truth for equality and iteration.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Iterable, Sequence

from .errors import InvalidSubset
from .relations import EqRel

# Constructions that enumerate candidate subsets refuse to go past this
# many points; the engine targets desk-scale instances only.
_ENUM_LIMIT = 20


def iter_bits(mask: int):
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(points: Iterable[int]) -> int:
    out = 0
    for p in points:
        out |= 1 << p
    return out


@dataclass(frozen=True)
class FinTop:
    """Topology on ``range(size)``; ``opens`` is the full open-set family.

    The constructor normalizes ``opens`` to a sorted deduplicated tuple
    and insists on the empty set and the whole carrier being present.
    Closure under union/intersection is the caller's contract; use
    ``make_topology`` to close an arbitrary generating family.
    """

    size: int
    opens: tuple[int, ...]

    def __post_init__(self):
        if self.size < 0:
            raise ValueError("size must be nonnegative")
        full = (1 << self.size) - 1
        for u in self.opens:
            if u < 0 or u > full:
                raise ValueError(f"open set {u:#x} outside the carrier")
        normalized = tuple(sorted(set(self.opens)))
        object.__setattr__(self, "opens", normalized)
        if 0 not in self.opens or full not in self.opens:
            raise ValueError("opens must contain the empty set and the carrier")

    @property
    def full(self) -> int:
        return (1 << self.size) - 1

    def points(self) -> range:
        return range(self.size)


@dataclass(frozen=True)
class SetFamily:
    """A plain family of subsets of ``range(size)``, canonically sorted."""

    size: int
    members: tuple[int, ...]

    def __post_init__(self):
        full = (1 << self.size) - 1
        for m in self.members:
            if m < 0 or m > full:
                raise ValueError(f"member {m:#x} outside the carrier")
        object.__setattr__(self, "members", tuple(sorted(set(self.members))))

    def __contains__(self, mask: int) -> bool:
        return mask in set(self.members)

    def __len__(self) -> int:
        return len(self.members)


@dataclass(frozen=True)
class SeparationFlags:
    t0: bool
    t1: bool
    t2: bool


def _check_subset(t: FinTop, mask: int, what: str) -> None:
    if mask < 0 or mask > t.full:
        raise InvalidSubset(f"{what} {mask:#x} is not within the point range", (mask,))


@lru_cache(maxsize=None)
def minimal_neighborhoods(t: FinTop) -> tuple[int, ...]:
    """Minimal open neighborhood of each point.

    Doubles as the specialization preorder: ``y`` is in the minimal
    neighborhood of ``x`` exactly when ``x`` lies in the closure of
    ``{y}``.
    """
    nbrs = []
    for x in t.points():
        acc = t.full
        bit = 1 << x
        for u in t.opens:
            if u & bit:
                acc &= u
        nbrs.append(acc)
    return tuple(nbrs)


def is_open(t: FinTop, mask: int) -> bool:
    _check_subset(t, mask, "set")
    nbrs = minimal_neighborhoods(t)
    return all(nbrs[x] & ~mask == 0 for x in iter_bits(mask))


def is_closed(t: FinTop, mask: int) -> bool:
    _check_subset(t, mask, "set")
    return is_open(t, t.full & ~mask)


def interior(t: FinTop, mask: int) -> int:
    """Largest open subset: points whose minimal neighborhood fits."""
    _check_subset(t, mask, "set")
    nbrs = minimal_neighborhoods(t)
    return mask_of(x for x in iter_bits(mask) if nbrs[x] & ~mask == 0)


def closure(t: FinTop, mask: int) -> int:
    """Smallest closed superset, via the complement of an interior."""
    _check_subset(t, mask, "set")
    return t.full & ~interior(t, t.full & ~mask)


def is_gdelta(t: FinTop, mask: int) -> bool:
    """Countable intersections of opens collapse to opens on a finite
    carrier, so this is literally ``is_open``."""
    return is_open(t, mask)


def _sub_interior(nbrs: Sequence[int], ambient: int, mask: int) -> int:
    # Interior within the subspace on ``ambient``; minimal neighborhoods
    # there are the ambient traces of the parent ones.
    return mask_of(x for x in iter_bits(mask) if nbrs[x] & ambient & ~mask == 0)


@lru_cache(maxsize=None)
def _meager_cached(t: FinTop, a: int, s: int) -> bool:
    nbrs = minimal_neighborhoods(t)
    for x in iter_bits(a):
        # closure of {x} inside the subspace on s
        cl = mask_of(y for y in iter_bits(s) if nbrs[y] & s & (1 << x))
        if _sub_interior(nbrs, s, cl):
            return False
    return True


def is_meager_in(t: FinTop, a: int, s: int) -> bool:
    """Whether ``a`` is meager in the subspace on ``s``.

    On a finite carrier a set is meager exactly when each of its
    singletons is nowhere dense in the subspace; the empty set is meager
    in the empty subspace (a union over nothing).
    """
    _check_subset(t, s, "subspace")
    if a & ~s:
        raise InvalidSubset(f"set {a:#x} is not contained in the subspace", (a, s))
    return _meager_cached(t, a, s)


def separation(t: FinTop) -> SeparationFlags:
    """T0/T1/T2 flags, each decided from minimal neighborhoods."""
    nbrs = minimal_neighborhoods(t)
    t0 = t1 = t2 = True
    for x in t.points():
        for y in range(x + 1, t.size):
            if nbrs[x] == nbrs[y]:
                t0 = False
            if nbrs[x] & (1 << y) or nbrs[y] & (1 << x):
                t1 = False
            if nbrs[x] & nbrs[y]:
                t2 = False
    return SeparationFlags(t0, t1, t2)


def subspace(t: FinTop, s: int) -> FinTop:
    """Subspace on the points of ``s``, reindexed densely in sorted order."""
    _check_subset(t, s, "subspace carrier")
    points = list(iter_bits(s))
    pos = {p: i for i, p in enumerate(points)}
    traces = set()
    for u in t.opens:
        traces.add(mask_of(pos[p] for p in iter_bits(u & s)))
    return FinTop(len(points), tuple(traces))


def product_with_discrete(t: FinTop, k: int) -> FinTop:
    """Product of a k-point discrete space with ``t``.

    Point ``(j, x)`` is encoded as ``j * t.size + x``; the opens are
    exactly the sets whose every slice is open in ``t``.
    """
    if k < 1:
        raise ValueError("the discrete factor needs at least one point")
    count = len(t.opens) ** k
    if count > 2_000_000:
        raise ValueError("product open family too large for desk scale")
    opens = []
    for combo in itertools.product(t.opens, repeat=k):
        acc = 0
        for j, u in enumerate(combo):
            acc |= u << (j * t.size)
        opens.append(acc)
    return FinTop(k * t.size, tuple(opens))


def product(a: FinTop, b: FinTop) -> FinTop:
    """Product topology; point ``(x, y)`` is encoded as ``x * b.size + y``."""
    n = a.size * b.size
    if n > _ENUM_LIMIT:
        raise ValueError("product carrier too large for desk scale")
    na = minimal_neighborhoods(a)
    nb = minimal_neighborhoods(b)
    nbrs = []
    for x in a.points():
        for y in b.points():
            acc = 0
            for x2 in iter_bits(na[x]):
                acc |= nb[y] << (x2 * b.size)
            nbrs.append(acc)
    opens = [s for s in range(1 << n)
             if all(nbrs[p] & ~s == 0 for p in iter_bits(s))]
    return FinTop(n, tuple(opens))


def quotient(t: FinTop, e: EqRel) -> FinTop:
    """Quotient topology on the classes of ``e``.

    A class set is open exactly when its preimage is open in ``t``.
    """
    if e.size != t.size:
        raise ValueError("relation carrier does not match the space")
    masks = e.classes()
    c = len(masks)
    if c > _ENUM_LIMIT:
        raise ValueError("too many classes for desk scale")
    opens = []
    for b in range(1 << c):
        pre = 0
        for i in iter_bits(b):
            pre |= masks[i]
        if is_open(t, pre):
            opens.append(b)
    return FinTop(c, tuple(opens))


def borel_atoms(t: FinTop) -> tuple[int, ...]:
    """Atoms of the algebra generated by the opens.

    Two points sit in the same atom exactly when every open contains
    both or neither, i.e. when their minimal neighborhoods coincide.
    """
    nbrs = minimal_neighborhoods(t)
    groups: dict[int, int] = {}
    for x in t.points():
        groups[nbrs[x]] = groups.get(nbrs[x], 0) | (1 << x)
    return tuple(sorted(groups.values()))


def is_borel(t: FinTop, mask: int) -> bool:
    _check_subset(t, mask, "set")
    return all(atom & mask in (0, atom) for atom in borel_atoms(t))


def borel_algebra(t: FinTop) -> SetFamily:
    """All members of the algebra generated by the opens (finite Borel)."""
    atoms = borel_atoms(t)
    if len(atoms) > 16:
        raise ValueError("Borel algebra too large for desk scale")
    members = []
    for pick in range(1 << len(atoms)):
        acc = 0
        for i in iter_bits(pick):
            acc |= atoms[i]
        members.append(acc)
    return SetFamily(t.size, tuple(members))


def is_continuous(f: Sequence[int], src: FinTop, dst: FinTop) -> bool:
    """Whether the preimage of every open of ``dst`` is open in ``src``."""
    if len(f) != src.size:
        raise ValueError("map length does not match the source carrier")
    for u in dst.opens:
        pre = mask_of(x for x in src.points() if u & (1 << f[x]))
        if not is_open(src, pre):
            return False
    return True


def is_open_map(f: Sequence[int], src: FinTop, dst: FinTop) -> bool:
    """Whether the image of every open of ``src`` is open in ``dst``."""
    if len(f) != src.size:
        raise ValueError("map length does not match the source carrier")
    for u in src.opens:
        img = mask_of(f[x] for x in iter_bits(u))
        if not is_open(dst, img):
            return False
    return True


def make_topology(size: int, generators: Iterable[int]) -> FinTop:
    """Close a generating family under union and intersection.

    The empty set and the whole carrier are always included.  Raises
    InvalidSubset when a generator sticks out of the point range.
    """
    if size > _ENUM_LIMIT:
        raise ValueError("carrier too large for desk scale")
    full = (1 << size) - 1
    family = {0, full}
    for g in generators:
        if g < 0 or g > full:
            raise InvalidSubset(f"generator {g:#x} not within the point range", (g,))
        family.add(g)
    # Fixpoint closure; the family is bounded by the powerset.
    grew = True
    while grew:
        grew = False
        snapshot = list(family)
        for i, u in enumerate(snapshot):
            for v in snapshot[i + 1:]:
                for w in (u | v, u & v):
                    if w not in family:
                        family.add(w)
                        grew = True
    return FinTop(size, tuple(family))


def discrete(size: int) -> FinTop:
    if size > _ENUM_LIMIT:
        raise ValueError("carrier too large for desk scale")
    return FinTop(size, tuple(range(1 << size)))


def indiscrete(size: int) -> FinTop:
    return FinTop(size, (0, (1 << size) - 1))


def family_is_topology(size: int, members: Iterable[int]) -> str | None:
    """Check a family for the topology axioms; None when it passes,
    otherwise a human-readable reason."""
    fam = set(members)
    full = (1 << size) - 1
    if 0 not in fam:
        return "missing the empty set"
    if full not in fam:
        return "missing the full carrier"
    for u in fam:
        if u < 0 or u > full:
            return f"member {u:#x} outside the carrier"
        for v in fam:
            if u | v not in fam:
                return f"union of {u:#x} and {v:#x} missing"
            if u & v not in fam:
                return f"intersection of {u:#x} and {v:#x} missing"
    return None


def homeomorphisms(t: FinTop) -> list[tuple[int, ...]]:
    """All self-homeomorphisms, as point permutations."""
    out = []
    for perm in itertools.permutations(t.points()):
        if is_continuous(perm, t, t) and is_open_map(perm, t, t):
            out.append(tuple(perm))
    return out


def all_topologies(size: int) -> list[FinTop]:
    """Every topology on ``range(size)``, one per preorder.

    Enumerates reflexive transitive relations and takes their up-set
    families; on a finite carrier this hits each topology exactly once.
    """
    if size == 0:
        return [FinTop(0, (0,))]
    if size > 4:
        raise ValueError("exhaustive enumeration capped at 4 points")
    pairs = [(x, y) for x in range(size) for y in range(size) if x != y]
    seen = []
    for bits in range(1 << len(pairs)):
        rel = [[x == y for y in range(size)] for x in range(size)]
        for i, (x, y) in enumerate(pairs):
            if (bits >> i) & 1:
                rel[x][y] = True
        if any(rel[x][y] and rel[y][z] and not rel[x][z]
               for x in range(size) for y in range(size) for z in range(size)):
            continue
        nbrs = [mask_of(y for y in range(size) if rel[x][y]) for x in range(size)]
        opens = [s for s in range(1 << size)
                 if all(nbrs[x] & ~s == 0 for x in iter_bits(s))]
        seen.append(FinTop(size, tuple(opens)))
    return seen


def transported(t: FinTop, f: Callable[[int], int], size: int) -> FinTop:
    """Push the topology forward along a bijection onto ``range(size)``."""
    opens = []
    for u in t.opens:
        opens.append(mask_of(f(x) for x in iter_bits(u)))
    return FinTop(size, tuple(opens))
