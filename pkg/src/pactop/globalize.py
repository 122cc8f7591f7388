"""Enveloping space of a partial action.

The carrier is the group-indexed product glued along the reachability
relation: (g, x) is identified with (h, y) when the element inv(h)*g
carries x to y.  The quotient inherits the product topology, the group
translates classes, and the original space embeds as the identity
slice.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import topology as topo
from .errors import AxiomViolation, NotAnAction
from .paction import (
    PartialAction,
    induced,
    lifted_action,
    orbit,
    orbit_equivalence,
    pair_index,
    pair_split,
)
from .relations import EqRel, from_relation
from .reports import Report, ReportBuilder
from .topology import FinTop, iter_bits, mask_of


def enveloping_relation(pa: PartialAction) -> EqRel:
    """Gluing relation on the group-indexed product.

    (g, x) ~ (h, y) when x lies in the domain of inv(g)*h and the
    element inv(h)*g moves x to y.  On a valid partial action this is an
    equivalence; otherwise AxiomViolation reports the broken axiom.
    """
    group, size = pa.group, pa.space.size

    def related(p: int, q: int) -> bool:
        g, x = pair_split(size, p)
        h, y = pair_split(size, q)
        k = group.mul[group.inv[g]][h]
        if not (pa.dom[k] >> x) & 1:
            return False
        return pa.act(group.mul[group.inv[h]][g], x) == y

    try:
        return from_relation(group.order * size, related)
    except ValueError as exc:
        raise AxiomViolation(f"gluing relation is not an equivalence: {exc}") from exc


@dataclass(frozen=True)
class Globalization:
    """Enveloping space with its quotient topology and total action.

    ``action[g]`` permutes class indices, ``embedding`` sends carrier
    points to classes of the identity slice, ``reps`` holds the
    lexicographically least (g, x) pair of each class.
    """

    source: PartialAction
    product: FinTop
    relation: EqRel
    topology: FinTop
    action: tuple[tuple[int, ...], ...]
    embedding: tuple[int, ...]
    reps: tuple[tuple[int, int], ...]

    @property
    def num_classes(self) -> int:
        return self.relation.num_classes

    def class_of(self, g: int, x: int) -> int:
        return self.relation.class_of(pair_index(self.source.space.size, g, x))

    def embedded_classes(self) -> int:
        return mask_of(self.embedding)


def build(pa: PartialAction) -> Globalization:
    """Construct the enveloping space, verifying on the way that the
    translation action is well defined on classes form by form and that
    the identity-slice embedding is injective."""
    group, space = pa.group, pa.space
    size = space.size
    relation = enveloping_relation(pa)
    product = topo.product_with_discrete(space, max(group.order, 1))

    classes = relation.classes()
    action_rows = []
    for g in group.elements():
        row = []
        for c, members in enumerate(classes):
            targets = set()
            for p in iter_bits(members):
                h, x = pair_split(size, p)
                targets.add(relation.class_of(pair_index(size, group.mul[g][h], x)))
            if len(targets) > 1:
                raise AxiomViolation(
                    f"translation by {g} is not well defined on class {c}",
                    (g, c) + tuple(sorted(targets)),
                )
            row.append(targets.pop())
        action_rows.append(tuple(row))

    embedding = tuple(
        relation.class_of(pair_index(size, group.identity, x))
        for x in space.points()
    )
    if len(set(embedding)) != size:
        dup = [
            (x, y)
            for x in range(size)
            for y in range(x + 1, size)
            if embedding[x] == embedding[y]
        ]
        raise AxiomViolation("identity-slice embedding is not injective", tuple(dup))

    e = group.identity
    if action_rows and action_rows[e] != tuple(range(len(classes))):
        raise AxiomViolation("identity translation is not the identity")
    for g in group.elements():
        for h in group.elements():
            gh = group.mul[g][h]
            for c in range(len(classes)):
                if action_rows[g][action_rows[h][c]] != action_rows[gh][c]:
                    raise AxiomViolation(
                        "translations do not compose", (g, h, c)
                    )

    quotient = topo.quotient(product, relation)
    reps = tuple(
        pair_split(size, min(iter_bits(members))) for members in classes
    )
    return Globalization(
        pa, product, relation, quotient, tuple(action_rows), embedding, reps
    )


def embedding_report(glob: Globalization) -> Report:
    """Checks that the identity slice embeds homeomorphically and
    equivariantly, that its image is open under the openness hypothesis
    on the definedness graph, that the enveloping translations are
    homeomorphisms, and that restricting them back to the image
    reproduces the original partial action."""
    pa = glob.source
    group, space = pa.group, pa.space
    size = space.size
    rb = ReportBuilder("embedding")

    image = glob.embedded_classes()
    positions = {c: i for i, c in enumerate(iter_bits(image))}
    sub = topo.subspace(glob.topology, image)
    emb = [positions[glob.embedding[x]] for x in space.points()]
    rb.check("embedding continuous", topo.is_continuous(emb, space, sub))
    rb.check("embedding open onto its image", topo.is_open_map(emb, space, sub))

    bad_eq = []
    for g in group.elements():
        for x in iter_bits(pa.dom[group.inv[g]]):
            if glob.action[g][glob.embedding[x]] != glob.embedding[pa.act(g, x)]:
                bad_eq.append((g, x))
    rb.check(
        "translation matches the original moves on the image",
        not bad_eq,
        tuple(bad_eq),
    )

    graph = 0
    for g in group.elements():
        graph |= pa.dom[group.inv[g]] << (g * size)
    if topo.is_open(glob.product, graph):
        rb.check(
            "embedded image open (definedness graph open)",
            topo.is_open(glob.topology, image),
        )
    else:
        rb.na(
            "embedded image open (definedness graph open)",
            "hypothesis failed: definedness graph not open",
        )

    bad_homeo = [
        g
        for g in group.elements()
        if not (
            topo.is_continuous(glob.action[g], glob.topology, glob.topology)
            and topo.is_open_map(glob.action[g], glob.topology, glob.topology)
        )
    ]
    rb.check(
        "every translation is a homeomorphism of the quotient",
        not bad_homeo,
        tuple(bad_homeo),
    )

    try:
        ind = induced(group, glob.topology, glob.action, image)
    except NotAnAction as exc:
        rb.check("restriction to the image is a partial action", False, exc.witness,
                 str(exc))
        return rb.build()

    iso_ok = True
    bad: list[tuple] = []
    if not (
        topo.is_continuous(emb, space, ind.space)
        and topo.is_open_map(emb, space, ind.space)
    ):
        iso_ok = False
        bad.append(("space",))
    for g in group.elements():
        if mask_of(emb[x] for x in iter_bits(pa.dom[g])) != ind.dom[g]:
            iso_ok = False
            bad.append(("dom", g))
        for x in iter_bits(pa.dom[group.inv[g]]):
            if ind.maps[g][emb[x]] != emb[pa.act(g, x)]:
                iso_ok = False
                bad.append(("map", g, x))
    rb.check(
        "restriction to the image reproduces the original action",
        iso_ok,
        tuple(bad),
    )
    return rb.build()


def hat_relation_report(glob: Globalization) -> Report:
    """The gluing relation must coincide exactly with the orbit
    relation of the lifted action on the product."""
    rb = ReportBuilder("lift-orbit-relation")
    lifted = lifted_action(glob.source)
    lifted_orbits = orbit_equivalence(lifted)
    same = glob.relation == lifted_orbits
    witness: tuple = ()
    if not same:
        n = glob.relation.size
        witness = next(
            (p, q)
            for p in range(n)
            for q in range(n)
            if glob.relation.same(p, q) != lifted_orbits.same(p, q)
        )
    rb.check("gluing relation equals lifted orbit relation", same, witness)
    rb.info("class count", (glob.num_classes,))
    return rb.build()


def effros_report(pa: PartialAction) -> Report:
    """The three class-structure conditions at finite scale: orbit
    relation a countable intersection of opens in the square, every
    orbit one in the space, and the orbit quotient T0.  Their three-way
    equivalence is asserted only on discrete carriers; elsewhere the
    flags are stated without interpretation."""
    rb = ReportBuilder("orbit-class-structure")
    space = pa.space
    size = space.size
    e = orbit_equivalence(pa)

    square = topo.product(space, space)
    pairs = 0
    for x in space.points():
        pairs |= orbit(pa, x) << (x * size)
    rel_open = topo.is_gdelta(square, pairs)
    orb_open = all(topo.is_gdelta(space, orbit(pa, x)) for x in space.points())
    t0 = topo.separation(topo.quotient(space, e)).t0

    rb.info("orbit relation open in the square", (rel_open,))
    rb.info("every orbit open", (orb_open,))
    rb.info("orbit quotient T0", (t0,))

    if space == topo.discrete(size):
        rb.check(
            "three conditions agree on a discrete carrier",
            rel_open == orb_open == t0,
            (rel_open, orb_open, t0),
        )
    else:
        rb.na(
            "three conditions agree on a discrete carrier",
            "carrier not discrete; flags stated without interpretation",
        )
    return rb.build()
