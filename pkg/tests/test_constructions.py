from __future__ import annotations

import pytest

from spatialdigraph import constructions as con
from spatialdigraph.digraph import GraphError, directed_cycles, has_disjoint_directed_cycles


def test_dbar4_shape():
    g = con.dbar4()
    assert len(g.vertices) == 4 and len(g.edges) == 8
    assert set(g.meta["bigons"]) == {"C1", "C2", "C3", "C4"}
    # each of the 16 arc choices gives one Hamiltonian directed cycle
    assert len(directed_cycles(g)) == 16


def test_graph_H_and_H_prime():
    h = con.graph_H()
    assert len(h.vertices) == 8 and len(h.edges) == 31
    assert not h.arcs_between("b", "a")
    hp = con.graph_H_prime()
    assert len(hp.edges) == 16
    through = [c for c in directed_cycles(hp) if "a>b" in c.edge_ids]
    assert through and all(len(c) == 4 for c in through)


@pytest.mark.parametrize("make", [con.three_link_gadget, con.eleven_ring, con.four_link_gadget,
                                  lambda: con.ring_gadget(6), lambda: con.ring_gadget(4, True)])
def test_wirings_validate(make):
    g, w = make()
    w.validate(g)
    assert len(w.preferred_edges) == len(w.copies)


def test_wiring_validation_catches_damage():
    g, w = con.three_link_gadget()
    w.preferred_edges = w.preferred_edges[1:]
    with pytest.raises(GraphError):
        w.validate(g)


def test_three_link_gadget_counts():
    g, w = con.three_link_gadget()
    assert (len(g.vertices), len(g.edges), len(w.copies)) == (21, 93, 3)


def test_four_link_gadget_counts():
    g, w = con.four_link_gadget()
    assert len(w.copies) == 2 * 55 - 11 == 99
    assert (len(g.vertices), len(g.edges)) == (605, 3069)


@pytest.mark.parametrize("k", [2, 4, 6, 10])
def test_ring_gadget_arithmetic(k):
    g, w = con.ring_gadget(k)
    assert len(g.vertices) == 6 * k + k
    assert len(g.edges) == 31 * k
    z = con.preferred_arc_digraph(g, w)
    assert len(directed_cycles(z)) == 1


def test_odd_ring_rejected():
    with pytest.raises(ValueError):
        con.ring_gadget(5)


def test_link_threshold():
    assert con.link_threshold(3, 2) and not con.link_threshold(2, 2)
    assert con.link_threshold(11, 4)


@pytest.mark.parametrize("n", range(2, 13))
def test_apex_tournament_edge_formula(n):
    assert len(con.apex_tournament(n).edges) == (n + 2) * (n - 1) // 2


@pytest.mark.parametrize("n", range(1, 10))
def test_transitive_tournament_edges(n):
    assert len(con.transitive_tournament(n).edges) == n * (n - 1) // 2


def test_knotted11_variants():
    wide = con.knotted11()
    narrow = con.knotted11(False)
    both = con.knotted11(True, True)
    assert len(wide.vertices) == 11
    assert len(wide.edges) - len(narrow.edges) == 6
    assert len(both.edges) == len(wide.edges) + 1
    assert has_disjoint_directed_cycles(wide)[0]


def test_fig1_is_marked_as_reconstruction():
    g = con.reconstruct_fig1()
    assert g.meta["reconstruction"] is True
    assert len(g.vertices) == 7 and len(g.edges) == 9 + 6 + 8


def test_random_digraph_is_seeded():
    assert con.random_digraph(8, 0.4, 3) == con.random_digraph(8, 0.4, 3)
    assert con.random_digraph(8, 0.4, 3) != con.random_digraph(8, 0.4, 4)


def test_registry_builds_everything():
    for name, make in con.REGISTRY.items():
        out = make()
        g = out[0] if isinstance(out, tuple) else out
        assert g.vertices, name


def test_bad_parameters():
    with pytest.raises(ValueError):
        con.transitive_tournament(0)
    with pytest.raises(ValueError):
        con.apex_tournament(1)


def test_knotted11_arc_count_under_default_reading():
    g = con.knotted11()
    assert len(g.edges) == 63
    a = ["a1", "a2", "a3"]
    assert len(g.subgraph(a).edges) == 6
