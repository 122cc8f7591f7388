"""Selectors, transversals and the transversal topology.

A selector maps every point of the product carrier to a canonical
member of its class under the lifted-action orbit relation.  The
normalized selector routes every pair (g, x) with g defined at x to the
identity-slice representative (identity, g.x); its fixed points form a
transversal whose subspace topology, pushed through the class map,
refines the quotient topology while generating the same Borel algebra.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import topology as topo
from .errors import AxiomViolation
from .globalize import Globalization
from .paction import (
    PartialAction,
    acting_set,
    lifted_action,
    orbit_equivalence,
    pair_index,
    pair_split,
)
from .relations import EqRel, from_relation
from .reports import Report, ReportBuilder
from .topology import FinTop, SetFamily, iter_bits, mask_of


@dataclass(frozen=True)
class SelectorMap:
    """Idempotent point map on ``range(size)``; classes are the fibers."""

    size: int
    image: tuple[int, ...]

    def __post_init__(self):
        if len(self.image) != self.size:
            raise ValueError("image must assign a value to every point")
        for x, y in enumerate(self.image):
            if not 0 <= y < self.size:
                raise ValueError(f"image[{x}] = {y} out of range")
        for x in range(self.size):
            if self.image[self.image[x]] != self.image[x]:
                raise ValueError(f"not idempotent at {x}")

    def fixed_points(self) -> int:
        return mask_of(x for x in range(self.size) if self.image[x] == x)


def is_selector_for(sel: SelectorMap, rel: EqRel) -> bool:
    """Selector laws: values stay in class, and two points share a value
    exactly when they share a class."""
    if sel.size != rel.size:
        return False
    for x in range(sel.size):
        if not rel.same(x, sel.image[x]):
            return False
    for x in range(sel.size):
        for y in range(sel.size):
            if rel.same(x, y) != (sel.image[x] == sel.image[y]):
                return False
    return True


def min_selector(rel: EqRel) -> SelectorMap:
    """Send every point to the least member of its class."""
    least = [min(iter_bits(mask)) for mask in rel.classes()]
    return SelectorMap(rel.size, tuple(least[rel.class_of(x)] for x in range(rel.size)))


def transversal(sel: SelectorMap) -> int:
    """Fixed-point set; idempotency makes it one point per fiber."""
    fixed = sel.fixed_points()
    assert fixed == mask_of(set(sel.image))
    return fixed


def normalized_selector(pa: PartialAction) -> SelectorMap:
    """Selector for the lifted orbit relation, normalized onto the
    identity slice wherever the group element is defined.

    Verifies the identity-slice description of the lifted orbits first:
    (identity, x) is related to (g, y) exactly when g is defined at y
    and moves it to x.  Falls back to the least-member selector on
    classes that never meet the identity slice.
    """
    group, space = pa.group, pa.space
    size = space.size
    e = group.identity
    lifted = lifted_action(pa)
    rel = orbit_equivalence(lifted)

    for x in space.points():
        for g in group.elements():
            for y in space.points():
                related = rel.same(pair_index(size, e, x), pair_index(size, g, y))
                direct = bool(
                    (acting_set(pa, y) >> g) & 1 and pa.act(g, y) == x
                )
                if related != direct:
                    raise AxiomViolation(
                        "identity-slice description of lifted orbits failed",
                        (x, g, y),
                    )

    base = min_selector(rel)
    image = list(base.image)
    for g in group.elements():
        for x in space.points():
            if (acting_set(pa, x) >> g) & 1:
                image[pair_index(size, g, x)] = pair_index(size, e, pa.act(g, x))
    sel = SelectorMap(rel.size, tuple(image))
    if not is_selector_for(sel, rel):
        raise AxiomViolation("normalized map is not a selector for the lifted orbits")
    return sel


@dataclass(frozen=True)
class BorelReport:
    """Transversal topology with the two Borel-structure families and
    the clause-by-clause report."""

    tau: FinTop
    quotient_borel: SetFamily
    tau_borel: SetFamily
    report: Report


def _class_order(glob: Globalization, sel: SelectorMap) -> list[int]:
    # Transversal points sorted; entry i is the class of the i-th one.
    return [glob.relation.class_of(p) for p in iter_bits(transversal(sel))]


def transversal_topology(glob: Globalization, sel: SelectorMap) -> BorelReport:
    """Push the transversal's subspace topology through the class map
    and compare Borel structures with the quotient."""
    pa = glob.source
    space = pa.space
    size = space.size
    n_classes = glob.num_classes

    t_mask = transversal(sel)
    classes_of_t = _class_order(glob, sel)
    if sorted(classes_of_t) != list(range(n_classes)):
        raise AxiomViolation(
            "transversal does not meet every class exactly once",
            tuple(classes_of_t),
        )

    sub = topo.subspace(glob.product, t_mask)
    tau_opens = []
    for u in sub.opens:
        tau_opens.append(mask_of(classes_of_t[i] for i in iter_bits(u)))
    tau = FinTop(n_classes, tuple(tau_opens))

    rb = ReportBuilder("transversal-topology")
    tau_open_set = set(tau.opens)
    missing = [u for u in glob.topology.opens if u not in tau_open_set]
    rb.check(
        "transversal topology extends the quotient topology",
        not missing,
        tuple(missing[:8]),
    )
    rb.info(
        "open-set counts (quotient vs transversal)",
        (len(glob.topology.opens), len(tau.opens)),
        "strictness of the extension is not asserted",
    )

    class_masks = glob.relation.classes()
    quotient_borel_members = []
    for b in range(1 << n_classes):
        pre = 0
        for c in iter_bits(b):
            pre |= class_masks[c]
        if topo.is_borel(glob.product, pre):
            quotient_borel_members.append(b)
    quotient_borel = SetFamily(n_classes, tuple(quotient_borel_members))
    tau_borel = topo.borel_algebra(tau)
    rb.check(
        "quotient Borel structure equals the transversal Borel algebra",
        quotient_borel == tau_borel,
        (len(quotient_borel), len(tau_borel)),
    )

    image = glob.embedded_classes()
    rb.check("embedded image is Borel", topo.is_borel(tau, image), (image,))
    graph = 0
    for g in pa.group.elements():
        graph |= pa.dom[pa.group.inv[g]] << (g * size)
    pullback = mask_of(
        p for p in iter_bits(t_mask)
        if (image >> glob.relation.class_of(p)) & 1
    )
    rb.check(
        "transversal part of the image equals the definedness graph part",
        pullback == graph & t_mask,
        (pullback, graph & t_mask),
    )

    img_positions = {c: i for i, c in enumerate(iter_bits(image))}
    tau_on_image = topo.subspace(tau, image)
    image_borel = topo.borel_algebra(tau_on_image)
    transported = SetFamily(
        tau_on_image.size,
        tuple(
            mask_of(img_positions[glob.embedding[x]] for x in iter_bits(m))
            for m in topo.borel_algebra(space).members
        ),
    )
    rb.check(
        "Borel algebra of the embedded image matches the carrier's",
        image_borel == transported,
        (len(image_borel.members), len(transported.members)),
    )

    tau_borel_set = set(tau_borel.members)
    bad_meas = []
    for g in pa.group.elements():
        for b in tau_borel.members:
            pre = mask_of(
                c for c in range(n_classes) if (b >> glob.action[g][c]) & 1
            )
            if pre not in tau_borel_set:
                bad_meas.append((g, b))
    rb.check(
        "every translation is Borel measurable for the transversal topology",
        not bad_meas,
        tuple(bad_meas[:8]),
    )

    return BorelReport(tau, quotient_borel, tau_borel, rb.build())


def action_continuity_table(
    glob: Globalization, brep: BorelReport
) -> tuple[tuple[tuple[bool, ...], ...], Report]:
    """Where each translation is continuous for the transversal
    topology; failures are facts about the instance, not errors."""
    tau = brep.tau
    nbrs = topo.minimal_neighborhoods(tau)
    rows = []
    rb = ReportBuilder("translation-continuity")
    for g in glob.source.group.elements():
        row = []
        for c in range(glob.num_classes):
            moved = mask_of(glob.action[g][d] for d in iter_bits(nbrs[c]))
            row.append(moved & ~nbrs[glob.action[g][c]] == 0)
        rows.append(tuple(row))
        failures = tuple(c for c, ok in enumerate(row) if not ok)
        if failures:
            rb.info(
                f"translation by {g} discontinuous at classes",
                failures,
            )
    rb.info(
        "continuity failures localized",
        (sum(1 for row in rows for ok in row if not ok),),
    )
    return tuple(rows), rb.build()


def bireducibility_report(glob: Globalization, sel: SelectorMap) -> Report:
    """Orbit equivalence on the carrier and class equivalence on the
    envelope reduce to each other: the embedding one way, the selector's
    second coordinate the other way."""
    pa = glob.source
    size = pa.space.size
    rb = ReportBuilder("bireducibility")
    carrier = orbit_equivalence(pa)
    envelope = from_relation(
        glob.num_classes,
        lambda c, d: any(glob.action[g][c] == d for g in pa.group.elements()),
    )

    bad_fwd = [
        (x, y)
        for x in pa.space.points()
        for y in pa.space.points()
        if carrier.same(x, y)
        != envelope.same(glob.embedding[x], glob.embedding[y])
    ]
    rb.check(
        "embedding reduces carrier orbits to envelope classes",
        not bad_fwd,
        tuple(bad_fwd[:8]),
    )

    values = [set() for _ in range(glob.num_classes)]
    for p in range(glob.relation.size):
        _, x = pair_split(size, sel.image[p])
        values[glob.relation.class_of(p)].add(x)
    multi = [c for c, vals in enumerate(values) if len(vals) != 1]
    if multi:
        raise AxiomViolation(
            "selector second coordinate is not constant on classes", tuple(multi)
        )
    back = [vals.pop() for vals in values]

    bad_bwd = [
        (c, d)
        for c in range(glob.num_classes)
        for d in range(glob.num_classes)
        if envelope.same(c, d) != carrier.same(back[c], back[d])
    ]
    rb.check(
        "selector coordinate reduces envelope classes to carrier orbits",
        not bad_bwd,
        tuple(bad_bwd[:8]),
    )
    return rb.build()


def orbit_homeomorphism_report(pa: PartialAction) -> Report:
    """Each lifted orbit is enumerated by the acting set of its base
    point: h goes to (g * inv(h), h.x), with inverse (j, y) going to
    inv(j) * g, and the enumeration is a homeomorphism onto the orbit's
    subspace (both sides are discrete at finite scale)."""
    group, space = pa.group, pa.space
    size = space.size
    rb = ReportBuilder("orbit-enumeration")
    lifted = lifted_action(pa)
    rel = orbit_equivalence(lifted)
    group_top = topo.discrete(group.order)
    class_masks = rel.classes()
    orbit_subs: dict[int, FinTop] = {}

    bad_bij: list[tuple] = []
    bad_inv: list[tuple] = []
    bad_homeo: list[tuple] = []
    for g in group.elements():
        for x in space.points():
            gx = acting_set(pa, x)
            o_mask = class_masks[rel.class_of(pair_index(size, g, x))]
            rho = {
                h: pair_index(size, group.mul[g][group.inv[h]], pa.act(h, x))
                for h in iter_bits(gx)
            }
            if mask_of(rho.values()) != o_mask or len(set(rho.values())) != len(rho):
                bad_bij.append((g, x))
                continue
            ok_inv = True
            for p in iter_bits(o_mask):
                j, _ = pair_split(size, p)
                h = group.mul[group.inv[j]][g]
                if not (gx >> h) & 1 or rho[h] != p:
                    ok_inv = False
                    bad_inv.append((g, x, p))
            if not ok_inv:
                continue
            if o_mask not in orbit_subs:
                orbit_subs[o_mask] = topo.subspace(lifted.space, o_mask)
            sub_o = orbit_subs[o_mask]
            sub_g = topo.subspace(group_top, gx)
            pos = {p: i for i, p in enumerate(iter_bits(o_mask))}
            f = [pos[rho[h]] for h in iter_bits(gx)]
            if not (
                topo.is_continuous(f, sub_g, sub_o)
                and topo.is_open_map(f, sub_g, sub_o)
            ):
                bad_homeo.append((g, x))
    rb.check("enumeration is a bijection onto the orbit", not bad_bij, tuple(bad_bij))
    rb.check("stated inverse really inverts it", not bad_inv, tuple(bad_inv[:8]))
    rb.check(
        "enumeration is a homeomorphism for the subspace topologies",
        not bad_homeo,
        tuple(bad_homeo),
    )
    return rb.build()
