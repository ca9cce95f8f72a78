from __future__ import annotations

import random
from itertools import combinations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from spatialdigraph.census import (
    bigon_decomposition,
    brute_force_link_count,
    chain_identity_terms,
    connected_linking_graph,
    knot_census,
    link_census,
    links_containing_edge,
    pairwise_disjoint,
    repair_cycle,
    verify_doubling_counts,
)
from spatialdigraph.constructions import complete_symmetric, graph_H, random_digraph
from spatialdigraph.digraph import Digraph, GraphError, cycle_from_steps, directed_cycles, symmetric_double, undirected_cycles
from spatialdigraph.embedding import CrossingForm, double_embedding, linking_number, spatial_realize
from spatialdigraph.fixtures import load_fixture
from spatialdigraph.verify import complete_graph


def test_split_circles_have_no_links():
    rep = link_census(load_fixture("split_circles"), consistent_only=False)
    assert rep.links == [] and rep.counts == {2: 0} and not rep.truncated


def test_hopf_census_and_report_schema():
    rep = link_census(load_fixture("hopf_triangles"))
    assert rep.counts == {2: 1}
    d = rep.to_dict()
    (link,) = d["links"]
    assert abs(link["linking_matrix"][0][1]) == 1
    assert link["linking_matrix"][0][1] == link["linking_matrix"][1][0]
    assert [len(c["vertices"]) for c in link["components"]] == [3, 3]


@pytest.mark.parametrize("name, base, up", [("hopf_triangles", 1, 4), ("double_hopf", 2, 8), ("split_circles", 0, 0)])
def test_doubled_fixture_counts(name, base, up):
    r = verify_doubling_counts(load_fixture(name))
    assert r.ok
    assert r.base.counts[2] == base and r.doubled.counts[2] == up


def test_trefoil_doubles_to_two_knots():
    r = verify_doubling_counts(load_fixture("trefoil_hexagon"))
    assert r.ok and len(r.base_knots.knots) == 1 and len(r.doubled_knots.knots) == 2


@given(st.integers(0, 10**6), st.booleans())
def test_two_link_census_matches_brute_force(seed, consistent):
    g = random_digraph(6, 0.5, seed)
    emb = spatial_realize(g, seed)
    rep = link_census(emb, 2, 4, consistent)
    assert rep.counts[2] == brute_force_link_count(emb, 2, 4, consistent)
    assert len({frozenset(c.key() for c in link.components) for link in rep.links}) == len(rep.links)


@pytest.mark.parametrize("seed", range(4))
def test_three_link_census_matches_brute_force(seed):
    base = complete_graph(6) if seed % 2 else Digraph(*_sparse8(seed))
    emb = double_embedding(spatial_realize(base, seed))
    rep = link_census(emb, 3, 3, True)
    assert rep.counts[3] == brute_force_link_count(emb, 3, 3, True)
    assert rep.counts[2] == brute_force_link_count(emb, 2, 3, True)
    for link in rep.links_of_size(3):
        assert connected_linking_graph(link) and pairwise_disjoint(link.components)


def _sparse8(seed):
    rng = random.Random(seed)
    vs = [str(i) for i in range(1, 9)]
    es = [(f"{u}~{v}", u, v) for u, v in combinations(vs, 2) if rng.random() < 0.45]
    return vs, es


def test_keep_bounds_storage_but_not_counts():
    emb = double_embedding(spatial_realize(complete_graph(6), 1))
    full = link_census(emb, 2, 4)
    part = link_census(emb, 2, 4, keep=3)
    assert part.counts == full.counts and len(part.links) == 3
    assert full.complete and not part.complete


def test_truncation_is_reported():
    emb = spatial_realize(complete_symmetric(6))
    rep = link_census(emb, 2, None, cap=50)
    assert rep.truncated and rep.cycles == 50


@given(st.integers(0, 10**6))
def test_doubled_lower_bound(seed):
    base = complete_graph(6)
    r = verify_doubling_counts(spatial_realize(base, seed), len_max=4)
    assert r.ok
    # every spatial K6 has a linked pair of triangles, so the double has >= 4 consistent 2-links
    assert r.base.counts[2] >= 1 and r.doubled.counts[2] >= 4


def test_knot_census_of_fixtures():
    assert len(knot_census(load_fixture("trefoil_hexagon")).knots) == 1
    rep = knot_census(load_fixture("convex_planar"))
    assert rep.knots == [] and rep.unresolved == 1


def test_knot_census_on_d4_fixture():
    emb = load_fixture("d4_fixture")
    c = {i: emb.named_cycle(f"C{i}") for i in range(1, 5)}
    assert linking_number(emb, c[1], c[3]) % 2 == 1
    assert linking_number(emb, c[2], c[4]) % 2 == 1
    rep = knot_census(emb)
    assert rep.cycles == 16
    assert any(k.arf == 1 for k in rep.knots)


# -- bigons ------------------------------------------------------------------------------

def _identity_holds(emb, rng, tries=40):
    form = CrossingForm(emb)
    cycles = directed_cycles(emb.graph, 5)
    longs = [c for c in cycles if len(c) >= 3]
    seen = 0
    for c in rng.sample(longs, min(tries, len(longs))):
        for x in cycles:
            if x.vertex_set & c.vertex_set:
                continue
            lc, lr, lb = chain_identity_terms(emb, x, c, form)
            rev, _ = bigon_decomposition(emb.graph, c)
            # consistent reversal adds; the reversal run along c subtracts
            assert lc + lr == lb
            assert lc - form.lk(x, rev.reversed()) == lb
            seen += lc != 0
    return seen


@given(st.integers(0, 10**6))
def test_chain_identity_on_doubled_embeddings(seed):
    rng = random.Random(seed)
    emb = double_embedding(spatial_realize(complete_graph(6), seed))
    _identity_holds(emb, rng, tries=10)


def test_chain_identity_on_straight_realizations_of_symmetric_doubles():
    # no tube structure here: the antiparallel arcs are a chord and a bent arc
    linked = 0
    for seed in range(6):
        emb = spatial_realize(symmetric_double(complete_graph(6)), seed)
        linked += _identity_holds(emb, random.Random(seed), tries=15)
    assert linked > 0


def test_bigon_decomposition_shape_and_errors():
    dg = symmetric_double(complete_graph(4))
    c = cycle_from_steps(dg, [("1~2+", True), ("2~3+", True), ("1~3-", True)])
    rev, bigons = bigon_decomposition(dg, c)
    assert rev.consistent and len(bigons) == 3 and all(len(b) == 2 for b in bigons)
    assert set(rev.edge_ids) == {"1~2-", "2~3-", "1~3+"}
    with pytest.raises(GraphError):
        bigon_decomposition(dg, c.reversed())
    with pytest.raises(GraphError):
        bigon_decomposition(dg, cycle_from_steps(dg, [("1~2+", True), ("1~2-", True)]))
    tri = Digraph("123", [("a", "1", "2"), ("b", "2", "3"), ("c", "3", "1")])
    with pytest.raises(GraphError):
        bigon_decomposition(tri, cycle_from_steps(tri, [("a", True), ("b", True), ("c", True)]))


def test_repair_fixture_cases():
    dbl = double_embedding(load_fixture("hopf_triangles"))
    g = dbl.graph
    c1 = cycle_from_steps(g, [("c1.0>c1.1+", True), ("c1.1>c1.2+", True), ("c1.2>c1.0+", True)])
    c2 = cycle_from_steps(g, [("c2.0>c2.1+", True), ("c2.1>c2.2+", True), ("c2.2>c2.0-", False)])
    r = repair_cycle(dbl, c1, c2)
    assert r.kind == "repaired" and r.cycle.consistent and r.lk == linking_number(dbl, c1, c2) != 0
    same = repair_cycle(dbl, c1, r.cycle)
    assert same.kind == "unchanged" and same.cycle == r.cycle
    emb = load_fixture("clasp_fixture")
    r = repair_cycle(emb, emb.named_cycle("c1"), emb.named_cycle("c2"))
    assert r.kind == "bigon" and r.cycle.consistent and r.lk == -1
    with pytest.raises(GraphError):
        repair_cycle(dbl, c2, c1)
    with pytest.raises(GraphError):
        repair_cycle(dbl, c1, c1)


def test_repair_missing_twin():
    g = Digraph("abcxyz", [("ab", "a", "b"), ("bc", "b", "c"), ("ca", "c", "a"),
                           ("xy", "x", "y"), ("yz", "y", "z"), ("xz", "x", "z")])
    emb = spatial_realize(g)
    c1 = cycle_from_steps(g, [("ab", True), ("bc", True), ("ca", True)])
    c2 = cycle_from_steps(g, [("xy", True), ("yz", True), ("xz", False)])
    with pytest.raises(GraphError):
        repair_cycle(emb, c1, c2, require_nonzero=False)


@given(st.integers(0, 10**6))
def test_repair_property(seed):
    rng = random.Random(seed)
    emb = double_embedding(spatial_realize(complete_graph(6), seed))
    form = CrossingForm(emb)
    cons = [c for c in directed_cycles(emb.graph, 3) if len(c) == 3]
    mixed = [c for c in undirected_cycles(emb.graph, 3) if not c.consistent]
    rng.shuffle(cons)
    rng.shuffle(mixed)
    done = 0
    for c1 in cons[:30]:
        for c2 in mixed[:200]:
            if c1.vertex_set & c2.vertex_set:
                continue
            r = repair_cycle(emb, c1, c2, require_nonzero=False, form=form)
            r.cycle.validate(emb.graph)
            assert r.cycle.consistent
            if r.kind == "bigon":
                assert len(r.cycle) == 2 and r.lk != 0
            else:
                assert r.lk == form.lk(c1, c2) == form.lk(c1, r.cycle)
            done += 1
            if done >= 5:
                return


@pytest.mark.parametrize("seed", range(3))
def test_links_through_the_preferred_arc_of_H(seed):
    emb = spatial_realize(graph_H(), seed)
    links = links_containing_edge(emb, "a>b", len_max=4)
    assert links
    for link in links:
        i = next(k for k, c in enumerate(link.components) if "a>b" in c.edge_ids)
        assert len(link.components[i]) == 4
        assert sorted(link.shape(), reverse=True) in ([4, 4], [4, 2])


def test_links_containing_edge_other_fixtures():
    emb = load_fixture("split_circles")
    assert links_containing_edge(emb, "c1.0>c1.1") == []
    with pytest.raises(GraphError):
        links_containing_edge(emb, "nope")
    dbl = double_embedding(load_fixture("hopf_triangles"))
    links = links_containing_edge(dbl, "c1.0>c1.1+")
    assert links
    for link in links:
        names = [{v.split(".")[0] for v in c.vertices} for c in link.components]
        assert sorted(map(sorted, names)) == [["c1"], ["c2"]]
