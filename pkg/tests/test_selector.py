from __future__ import annotations

import pytest

from pactop import (
    EqRel,
    PartialAction,
    SelectorMap,
    action_continuity_table,
    bireducibility_report,
    build,
    cyclic,
    discrete,
    example_k3,
    is_selector_for,
    lifted_action,
    min_selector,
    normalized_selector,
    orbit_equivalence,
    orbit_homeomorphism_report,
    transversal,
    transversal_topology,
)

SWAP = PartialAction(cyclic(2), discrete(2), (0b11, 0b11), ((0, 1), (1, 0)))
K3 = example_k3()


def test_selector_map_validation():
    with pytest.raises(ValueError):
        SelectorMap(2, (0,))
    with pytest.raises(ValueError):
        SelectorMap(2, (0, 2))
    with pytest.raises(ValueError):
        SelectorMap(2, (1, 0))
    sel = SelectorMap(3, (0, 0, 2))
    assert sel.fixed_points() == 0b101


def test_min_selector_laws():
    rel = EqRel(4, (0, 1, 0, 1))
    sel = min_selector(rel)
    assert sel.image == (0, 1, 0, 1)
    assert transversal(sel) == 0b0011
    assert is_selector_for(sel, rel)
    assert not is_selector_for(sel, EqRel(4, (0, 0, 0, 1)))
    assert not is_selector_for(sel, EqRel(3, (0, 1, 0)))


def test_normalized_selector_frozen():
    # pairs are encoded element * 2 + point; every pair with a defined
    # element routes to the identity slice, the two undefined-slice
    # classes keep their least member
    sel = normalized_selector(K3)
    assert sel.image == (0, 1, 2, 1, 4, 1)
    assert transversal(sel) == 0b10111


def test_normalized_selector_across_family(valid_family):
    for pa in valid_family[::5]:
        sel = normalized_selector(pa)
        rel = orbit_equivalence(lifted_action(pa))
        assert is_selector_for(sel, rel)


def test_transversal_topology_frozen():
    # the transversal meets the identity slice in both carrier points
    # and the two undefined slices in one point each; its subspace
    # topology is (carrier) x (one-point discrete) x (one-point
    # discrete), i.e. 3 * 2 * 2 = 12 traces, pushed to class masks with
    # class bits 0,1 from the identity slice and free bits 2,3
    glob = build(K3)
    brep = transversal_topology(glob, normalized_selector(K3))
    assert brep.report.ok, brep.report.failures()
    assert brep.tau.opens == (0, 2, 3, 4, 6, 7, 8, 10, 11, 12, 14, 15)
    assert len(brep.tau_borel) == 16
    assert brep.quotient_borel == brep.tau_borel
    # strictly finer than the quotient topology on this instance
    assert len(glob.topology.opens) < len(brep.tau.opens)


def test_transversal_topology_across_family(valid_globs):
    for pa, glob in valid_globs:
        brep = transversal_topology(glob, normalized_selector(pa))
        assert brep.report.ok, (pa, brep.report.failures())


def test_continuity_table_frozen():
    glob = build(K3)
    brep = transversal_topology(glob, normalized_selector(K3))
    rows, rep = action_continuity_table(glob, brep)
    assert rep.ok
    assert rows == (
        (True, True, True, True),
        (False, True, True, True),
        (False, True, True, True),
    )


def test_continuity_table_identity_row(valid_globs):
    for pa, glob in valid_globs:
        brep = transversal_topology(glob, normalized_selector(pa))
        rows, _ = action_continuity_table(glob, brep)
        assert all(rows[pa.group.identity])


def test_continuity_table_total_discrete():
    glob = build(SWAP)
    brep = transversal_topology(glob, normalized_selector(SWAP))
    rows, _ = action_continuity_table(glob, brep)
    assert all(all(row) for row in rows)


def test_bireducibility_across_family(valid_globs):
    for pa, glob in valid_globs:
        rep = bireducibility_report(glob, normalized_selector(pa))
        assert rep.ok, (pa, rep.failures())


def test_orbit_enumeration_across_family(valid_family):
    for pa in valid_family:
        rep = orbit_homeomorphism_report(pa)
        assert rep.ok, (pa, rep.failures())


def test_orbit_enumeration_frozen_rotation():
    rot = PartialAction(
        cyclic(3), discrete(3), (0b111,) * 3, ((0, 1, 2), (1, 2, 0), (2, 0, 1))
    )
    assert orbit_homeomorphism_report(rot).ok
