"""Partial actions of finite groups on finite topological spaces.

A partial action stores, for every group element ``g``, the open set
``dom[g]`` it maps onto and a point table ``maps[g]`` holding the
partial map whose domain is ``dom[inv(g)]`` (entries ``-1`` mean
undefined).  ``validate`` checks the pair-style axioms and the
bijection-style axioms independently and reports both verdicts; they
must agree on every well-formed table.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from typing import Sequence

from . import topology as topo
from .errors import AxiomViolation, InvalidSubset, NotAnAction, NotASubgroup
from .groups import FiniteGroup, is_subgroup
from .relations import EqRel, from_relation
from .reports import Report, ReportBuilder
from .topology import FinTop, iter_bits, mask_of


def pair_index(size: int, g: int, x: int) -> int:
    """Encode the product point (g, x) with the group coordinate major."""
    return g * size + x


def pair_split(size: int, p: int) -> tuple[int, int]:
    return divmod(p, size)


@dataclass(frozen=True)
class PartialAction:
    """Tables for a candidate partial action; validity is checked by
    ``validate``, never assumed by the constructor."""

    group: FiniteGroup
    space: FinTop
    dom: tuple[int, ...]
    maps: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        n = self.group.order
        size = self.space.size
        if len(self.dom) != n or len(self.maps) != n:
            raise ValueError("dom and maps must have one entry per group element")
        for g, mask in enumerate(self.dom):
            if mask < 0 or mask > self.space.full:
                raise ValueError(f"dom[{g}] outside the carrier")
        for g, row in enumerate(self.maps):
            if len(row) != size:
                raise ValueError(f"maps[{g}] must have one entry per point")
            for x, y in enumerate(row):
                if y < -1 or y >= size:
                    raise ValueError(f"maps[{g}][{x}] = {y} out of range")

    def defined(self, g: int, x: int) -> bool:
        return self.maps[g][x] >= 0

    def act(self, g: int, x: int) -> int:
        y = self.maps[g][x]
        if y < 0:
            raise KeyError(f"element {g} does not act on point {x}")
        return y


def acting_set(pa: PartialAction, x: int) -> int:
    """Bitmask of group elements defined at ``x`` (those with x in
    dom[inv(g)])."""
    out = 0
    for g in pa.group.elements():
        if pa.dom[pa.group.inv[g]] & (1 << x):
            out |= 1 << g
    return out


def stabilizer(pa: PartialAction, x: int) -> int:
    out = 0
    for g in iter_bits(acting_set(pa, x)):
        if pa.act(g, x) == x:
            out |= 1 << g
    return out


def orbit(pa: PartialAction, x: int) -> int:
    return mask_of(pa.act(g, x) for g in iter_bits(acting_set(pa, x)))


def orbit_equivalence(pa: PartialAction) -> EqRel:
    """The reachability relation; on a valid partial action it is an
    equivalence, otherwise AxiomViolation names the broken axiom."""
    orbits = [orbit(pa, x) for x in pa.space.points()]
    try:
        return from_relation(
            pa.space.size, lambda x, y: bool(orbits[x] & (1 << y))
        )
    except ValueError as exc:
        raise AxiomViolation(f"orbit relation is not an equivalence: {exc}") from exc


def _well_formed(pa: PartialAction, rb: ReportBuilder) -> bool:
    ok = True
    for g in pa.group.elements():
        expected = pa.dom[pa.group.inv[g]]
        actual = mask_of(x for x in pa.space.points() if pa.maps[g][x] >= 0)
        if actual != expected:
            bad = tuple(iter_bits(actual ^ expected))
            ok = rb.check(
                f"map of element {g} defined exactly on dom(inv(g))",
                False,
                (g,) + bad,
            ) and ok
    rb.check("tables well-formed", ok)
    return ok


def _pair_axioms(pa: PartialAction) -> Report:
    rb = ReportBuilder("pair-axioms")
    group, size = pa.group, pa.space.size
    e = group.identity

    bad = [x for x in range(size) if not (pa.defined(e, x) and pa.act(e, x) == x)]
    rb.check("identity acts everywhere as the identity", not bad, tuple(bad))

    bad_undo = []
    for g in group.elements():
        gi = group.inv[g]
        for x in range(size):
            if pa.defined(g, x):
                y = pa.act(g, x)
                if not (pa.defined(gi, y) and pa.act(gi, y) == x):
                    bad_undo.append((g, x))
    rb.check("inverse undoes every defined move", not bad_undo, tuple(bad_undo))

    bad_comp = []
    for g in group.elements():
        for h in group.elements():
            gh = group.mul[g][h]
            for x in range(size):
                if pa.defined(h, x) and pa.defined(g, pa.act(h, x)):
                    if not (
                        pa.defined(gh, x)
                        and pa.act(g, pa.act(h, x)) == pa.act(gh, x)
                    ):
                        bad_comp.append((g, h, x))
    rb.check(
        "composed moves extend to the product element", not bad_comp, tuple(bad_comp)
    )
    return rb.build()


def _bijection_axioms(pa: PartialAction) -> Report:
    rb = ReportBuilder("bijection-axioms")
    group, size = pa.group, pa.space.size
    e = group.identity

    bad_bij = []
    for g in group.elements():
        src = pa.dom[group.inv[g]]
        seen: dict[int, int] = {}
        image = 0
        for x in iter_bits(src):
            y = pa.maps[g][x]
            if y < 0:
                bad_bij.append((g, x))
                continue
            if y in seen:
                bad_bij.append((g, seen[y], x))
            seen[y] = x
            image |= 1 << y
        if image != pa.dom[g]:
            bad_bij.append((g,) + tuple(iter_bits(image ^ pa.dom[g])))
    rb.check("each map is a bijection onto its range set", not bad_bij, tuple(bad_bij))

    id_ok = pa.dom[e] == pa.space.full and all(
        pa.maps[e][x] == x for x in range(size)
    )
    rb.check("identity element has full domain and identity map", id_ok)

    bad_ranges = []
    for g in group.elements():
        for h in group.elements():
            src = pa.dom[group.inv[g]] & pa.dom[h]
            img = 0
            for x in iter_bits(src):
                y = pa.maps[g][x]
                if y < 0:
                    img = -1
                    break
                img |= 1 << y
            if img != pa.dom[g] & pa.dom[group.mul[g][h]]:
                bad_ranges.append((g, h))
    rb.check(
        "maps carry domain intersections onto range intersections",
        not bad_ranges,
        tuple(bad_ranges),
    )

    bad_comp = []
    for g in group.elements():
        for h in group.elements():
            gh = group.mul[g][h]
            region = pa.dom[group.inv[h]] & pa.dom[group.inv[gh]]
            for x in iter_bits(region):
                y = pa.maps[h][x]
                if y < 0 or pa.maps[g][y] < 0 or pa.maps[g][y] != pa.maps[gh][x]:
                    bad_comp.append((g, h, x))
    rb.check(
        "composition agrees with the product element on its region",
        not bad_comp,
        tuple(bad_comp),
    )
    return rb.build()


def _topological(pa: PartialAction, algebra_ok: bool) -> Report:
    rb = ReportBuilder("topological")
    group, space = pa.group, pa.space

    bad_open = [g for g in group.elements() if not topo.is_open(space, pa.dom[g])]
    rb.check("every domain set is open", not bad_open, tuple(bad_open))

    if not algebra_ok:
        rb.na("each map is a homeomorphism between its domains",
              "skipped: maps are not bijections between the domain sets")
    else:
        bad_homeo = []
        for g in group.elements():
            src_mask = pa.dom[group.inv[g]]
            sub_src = topo.subspace(space, src_mask)
            sub_dst = topo.subspace(space, pa.dom[g])
            src_pts = list(iter_bits(src_mask))
            dst_pos = {p: i for i, p in enumerate(iter_bits(pa.dom[g]))}
            f = [dst_pos[pa.maps[g][x]] for x in src_pts]
            if not (
                topo.is_continuous(f, sub_src, sub_dst)
                and topo.is_open_map(f, sub_src, sub_dst)
            ):
                bad_homeo.append(g)
        rb.check(
            "each map is a homeomorphism between its domains",
            not bad_homeo,
            tuple(bad_homeo),
        )

    graph = 0
    for g in group.elements():
        graph |= pa.dom[group.inv[g]] << (g * space.size)
    prod = topo.product_with_discrete(space, group.order)
    graph_open = topo.is_open(prod, graph)
    rb.info("definedness graph open in the product", (graph_open,))
    rb.info(
        "definedness graph is a countable intersection of opens",
        (topo.is_gdelta(prod, graph),),
        "finite carrier: such intersections collapse to opens",
    )
    return rb.build()


def validate(pa: PartialAction) -> Report:
    """Full validation report.

    Sections: table well-formedness, the pair-style axioms, the
    bijection-style axioms, topological conditions, and an agreement
    check between the two axiom formulations.  Violations are collected
    with witnesses; nothing raises.
    """
    rb = ReportBuilder("partial-action-validation")
    wf = ReportBuilder("well-formedness")
    well_formed = _well_formed(pa, wf)
    rb.section(wf.build())

    if not well_formed:
        rb.na("pair-axioms", "skipped: tables ill-formed")
        rb.na("bijection-axioms", "skipped: tables ill-formed")
        rb.na("formulations agree", "skipped: tables ill-formed")
        rb.section(_topological(pa, algebra_ok=False))
        return rb.build()

    pair = rb.section(_pair_axioms(pa))
    bij = rb.section(_bijection_axioms(pa))
    rb.section(_topological(pa, algebra_ok=bij.ok))
    rb.check(
        "both axiom formulations give the same verdict",
        pair.ok == bij.ok,
        (pair.ok, bij.ok),
        "disagreement would mean an engine bug",
    )
    return rb.build()


def _check_total_action(
    group: FiniteGroup, space: FinTop, u: Sequence[Sequence[int]]
) -> None:
    n, size = group.order, space.size
    if len(u) != n:
        raise NotAnAction("action table needs one row per group element")
    for g in range(n):
        row = u[g]
        if len(row) != size or sorted(row) != list(range(size)):
            raise NotAnAction(f"row of element {g} is not a permutation", (g,))
    if tuple(u[group.identity]) != tuple(range(size)):
        raise NotAnAction("identity row is not the identity map", (group.identity,))
    for g in range(n):
        for h in range(n):
            gh = group.mul[g][h]
            for y in range(size):
                if u[g][u[h][y]] != u[gh][y]:
                    raise NotAnAction(
                        f"rows do not compose at ({g}, {h}, {y})", (g, h, y)
                    )
    for g in range(n):
        if not topo.is_continuous(u[g], space, space):
            raise NotAnAction(f"row of element {g} is not continuous", (g,))


def induced(
    group: FiniteGroup, space: FinTop, u: Sequence[Sequence[int]], carrier: int
) -> PartialAction:
    """Restrict a continuous total action to an arbitrary carrier subset.

    The result lives on the subspace over ``carrier`` (densely
    reindexed); element ``g`` maps onto carrier ∩ u_g(carrier).
    """
    _check_total_action(group, space, u)
    if carrier < 0 or carrier > space.full:
        raise InvalidSubset("carrier is not within the point range", (carrier,))

    points = list(iter_bits(carrier))
    pos = {p: i for i, p in enumerate(points)}
    sub = topo.subspace(space, carrier)
    dom = []
    for g in group.elements():
        hit = mask_of(u[g][p] for p in points) & carrier
        dom.append(mask_of(pos[p] for p in iter_bits(hit)))
    maps = []
    for g in group.elements():
        row = [-1] * len(points)
        for i in iter_bits(dom[group.inv[g]]):
            row[i] = pos[u[g][points[i]]]
        maps.append(tuple(row))
    return PartialAction(group, sub, tuple(dom), tuple(maps))


def subgroup_restriction(
    group: FiniteGroup,
    members: int,
    space: FinTop,
    action: dict[int, Sequence[int]],
) -> PartialAction:
    """Spread a total action of a subgroup into a partial action of the
    whole group: full domains on subgroup members, empty elsewhere."""
    if not is_subgroup(group, members):
        raise NotASubgroup(f"element set {members:#x} is not a subgroup", (members,))
    if set(action) != set(iter_bits(members)):
        raise NotAnAction("action rows must cover exactly the subgroup members")
    size = space.size
    sub_elems = sorted(iter_bits(members))
    sub_index = {g: i for i, g in enumerate(sub_elems)}
    sub_mul = tuple(
        tuple(sub_index[group.mul[g][h]] for h in sub_elems) for g in sub_elems
    )
    sub_group = FiniteGroup(
        len(sub_elems),
        sub_mul,
        sub_index[group.identity],
        tuple(sub_index[group.inv[g]] for g in sub_elems),
    )
    _check_total_action(
        sub_group, space, [tuple(action[g]) for g in sub_elems]
    )
    dom = []
    maps = []
    for g in group.elements():
        if (members >> g) & 1:
            dom.append(space.full)
            maps.append(tuple(action[g]))
        else:
            dom.append(0)
            maps.append(tuple([-1] * size))
    return PartialAction(group, space, tuple(dom), tuple(maps))


def orbit_consistency_report(pa: PartialAction) -> Report:
    """Orbit bookkeeping facts used throughout the engine: translation
    of acting sets along moves, openness and continuity of the class
    map, and closure of acting sets under stabilizer right-shifts."""
    rb = ReportBuilder("orbit-consistency")
    group = pa.group

    bad_translate = []
    for g in group.elements():
        gi = group.inv[g]
        for x in iter_bits(pa.dom[g]):
            moved = pa.act(gi, x)
            shifted = mask_of(group.mul[h][g] for h in iter_bits(acting_set(pa, x)))
            if shifted != acting_set(pa, moved):
                bad_translate.append((g, x))
    rb.check(
        "acting set translates along each move", not bad_translate, tuple(bad_translate)
    )

    e = orbit_equivalence(pa)
    q = topo.quotient(pa.space, e)
    cmap = [e.class_of(x) for x in pa.space.points()]
    rb.check("class map continuous", topo.is_continuous(cmap, pa.space, q))
    rb.check("class map open", topo.is_open_map(cmap, pa.space, q))

    bad_closure = []
    for x in pa.space.points():
        gx = acting_set(pa, x)
        st = stabilizer(pa, x)
        for g in iter_bits(gx):
            gi = group.inv[g]
            for h in group.elements():
                if (st >> group.mul[gi][h]) & 1 and not (gx >> h) & 1:
                    bad_closure.append((x, g, h))
    rb.check(
        "acting set absorbs stabilizer right-shifts",
        not bad_closure,
        tuple(bad_closure),
    )
    return rb.build()


def lifted_action(pa: PartialAction) -> PartialAction:
    """Lift to the group-indexed product: ``g`` sends (h, x) to
    (h * inv(g), g.x) on the slices where the original action is
    defined.  The lift's orbits present the enveloping space."""
    group, space = pa.group, pa.space
    size = space.size
    prod = topo.product_with_discrete(space, group.order)
    dom = []
    for g in group.elements():
        mask = 0
        for h in group.elements():
            mask |= pa.dom[g] << (h * size)
        dom.append(mask)
    maps = []
    for g in group.elements():
        gi = group.inv[g]
        row = [-1] * (group.order * size)
        for h in group.elements():
            for x in iter_bits(pa.dom[gi]):
                row[pair_index(size, h, x)] = pair_index(
                    size, group.mul[h][gi], pa.act(g, x)
                )
        maps.append(tuple(row))
    return PartialAction(group, prod, tuple(dom), tuple(maps))


@functools.lru_cache(maxsize=64)
def pair_action(pa: PartialAction) -> PartialAction:
    """Act on ordered pairs through the second coordinate only; the
    first coordinate just comes along for the ride.

    Memoized: the ideal-section sweep calls this once per pair set and
    rebuilding the product topology dominates everything else."""
    group, space = pa.group, pa.space
    size = space.size
    prod = topo.product(space, space)
    dom = []
    for g in group.elements():
        mask = 0
        for x in space.points():
            mask |= pa.dom[g] << (x * size)
        dom.append(mask)
    maps = []
    for g in group.elements():
        gi = group.inv[g]
        row = [-1] * (size * size)
        for x in space.points():
            for y in iter_bits(pa.dom[gi]):
                row[x * size + y] = x * size + pa.act(g, y)
        maps.append(tuple(row))
    return PartialAction(group, prod, tuple(dom), tuple(maps))
