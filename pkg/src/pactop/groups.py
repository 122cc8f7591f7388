"""Finite groups as explicit multiplication tables."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidOrder, NoIdentity, NoInverse, NotAssociative


@dataclass(frozen=True)
class FiniteGroup:
    """Group on elements ``0..order-1`` with a verified Cayley table."""

    order: int
    mul: tuple[tuple[int, ...], ...]
    identity: int
    inv: tuple[int, ...]

    def op(self, g: int, h: int) -> int:
        return self.mul[g][h]

    def elements(self) -> range:
        return range(self.order)


def make_group(table: list[list[int]] | tuple[tuple[int, ...], ...]) -> FiniteGroup:
    """Validate a Cayley table and wrap it as a FiniteGroup.

    Checks run in order: shape, identity, associativity, inverses.  Each
    failure names its witness: NoIdentity, NotAssociative with the triple
    (g, h, k), NoInverse with the element.
    """
    n = len(table)
    if n == 0:
        raise InvalidOrder("group order must be at least 1")
    rows = tuple(tuple(row) for row in table)
    for g, row in enumerate(rows):
        if len(row) != n:
            raise ValueError(f"row {g} has length {len(row)}, expected {n}")
        for h, v in enumerate(row):
            if not (isinstance(v, int) and 0 <= v < n):
                raise ValueError(f"entry ({g}, {h}) = {v!r} out of range")

    identity = -1
    for e in range(n):
        if all(rows[e][g] == g and rows[g][e] == g for g in range(n)):
            identity = e
            break
    if identity == -1:
        raise NoIdentity("no two-sided identity element")

    # Exhaustive: n^3 triples, fine for desk-scale orders.
    for g in range(n):
        for h in range(n):
            gh = rows[g][h]
            for k in range(n):
                if rows[gh][k] != rows[g][rows[h][k]]:
                    raise NotAssociative(
                        f"(g*h)*k != g*(h*k) at ({g}, {h}, {k})", (g, h, k)
                    )

    inv = [-1] * n
    for g in range(n):
        for h in range(n):
            if rows[g][h] == identity and rows[h][g] == identity:
                inv[g] = h
                break
        if inv[g] == -1:
            raise NoInverse(f"element {g} has no inverse", (g,))

    return FiniteGroup(n, rows, identity, tuple(inv))


def cyclic(k: int) -> FiniteGroup:
    """The cyclic group of order ``k`` with addition mod k."""
    if not isinstance(k, int) or k < 1:
        raise InvalidOrder(f"order must be a positive integer, got {k!r}")
    table = [[(g + h) % k for h in range(k)] for g in range(k)]
    return make_group(table)


def is_subgroup(group: FiniteGroup, members: int) -> bool:
    """Whether the bitmask ``members`` is a subgroup of ``group``."""
    if members >> group.order:
        return False
    if not (members >> group.identity) & 1:
        return False
    elems = [g for g in group.elements() if (members >> g) & 1]
    for g in elems:
        if not (members >> group.inv[g]) & 1:
            return False
        for h in elems:
            if not (members >> group.mul[g][h]) & 1:
                return False
    return True
