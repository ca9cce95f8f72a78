from __future__ import annotations

import random
from itertools import permutations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from spatialdigraph.constructions import apex_tournament, complete_symmetric, random_digraph, reconstruct_fig1
from spatialdigraph.digraph import Digraph, GraphError, GraphFormatError, directed_cycles
from spatialdigraph.minors import (
    ContractionError,
    MinorWitness,
    Partition,
    PatternTooLarge,
    WitnessError,
    check_minor_witness,
    consistent_contract,
    dense_threshold_arcs,
    density_certificate,
    expansion_failure,
    find_subdigraph,
    is_consistent_expansion,
    is_subdigraph_map,
    legal_expansions,
    merge_witness,
    random_dense_digraph,
    vertex_expand,
)
from spatialdigraph.verify import digraph_classes


def brute_subdigraph(g: Digraph, pattern: Digraph) -> bool:
    for img in permutations(g.vertices, len(pattern.vertices)):
        if is_subdigraph_map(g, pattern, dict(zip(pattern.vertices, img))):
            return True
    return False


@pytest.mark.parametrize("n, count", [(1, 1), (2, 3), (3, 16), (4, 218)])
def test_isomorphism_class_counts(n, count):
    # number of digraphs on n unlabeled vertices
    assert len(digraph_classes(n)) == count


@given(st.integers(2, 6), st.floats(0.1, 0.6), st.integers(0, 10**6))
def test_expand_contract_round_trip_and_cycle_bijection(n, p, seed):
    rng = random.Random(seed)
    g = random_digraph(n, p, seed)
    v = rng.choice(g.vertices)
    split = rng.choice(list(legal_expansions(g, v)))
    h, e = vertex_expand(g, v, split)
    assert is_consistent_expansion(h, e)
    back, m = consistent_contract(h, e, merged=v)
    assert back == g and m == v
    before, after = directed_cycles(g), directed_cycles(h)
    assert len(before) == len(after)
    assert sorted(len(c) for c in before) == sorted(len(c) - (e in c.edge_ids) for c in after)


def test_legal_expansions_are_exactly_the_consistent_ones():
    g = complete_symmetric(3)
    inc = g.incident("1")
    legal = {tuple(sorted(s.items())) for s in legal_expansions(g, "1")}
    for mask in range(1 << len(inc)):
        split = {a.id: 1 + ((mask >> i) & 1) for i, a in enumerate(inc)}
        h, e = vertex_expand(g, "1", split)
        assert is_consistent_expansion(h, e) == (tuple(sorted(split.items())) in legal)


def test_inconsistent_expansion_can_create_cycles():
    # splitting a vertex with in- and out-arcs on both sides breaks the cycle correspondence
    g = Digraph("abv", [("av", "a", "v"), ("va", "v", "a"), ("bv", "b", "v"), ("vb", "v", "b")])
    h, e = vertex_expand(g, "v", {"av": 1, "va": 2, "bv": 2, "vb": 1})
    assert expansion_failure(h, e) is not None
    before = sorted(len(c) for c in directed_cycles(g))
    after = sorted(len(c) - (e in c.edge_ids) for c in directed_cycles(h))
    assert before != after
    with pytest.raises(ContractionError):
        consistent_contract(h, e)


def test_fig1_has_a_vertex_with_an_inconsistent_split():
    g = reconstruct_fig1()
    inc = g.incident("x")
    legal = list(legal_expansions(g, "x"))
    assert 0 < len(legal) < 2 ** len(inc)


def test_expansion_argument_errors():
    g = complete_symmetric(3)
    with pytest.raises(GraphError):
        vertex_expand(g, "9", {})
    with pytest.raises(GraphError):
        vertex_expand(g, "1", {})
    split = {a.id: 1 for a in g.incident("1")}
    with pytest.raises(GraphError):
        vertex_expand(g, "1", {**split, "2>3": 1})
    with pytest.raises(GraphError):
        vertex_expand(g, "1", {k: 3 for k in split})
    with pytest.raises(GraphError):
        vertex_expand(g, "1", split, names=("2", "1.2"))


def test_backward_expansion_arc():
    g = complete_symmetric(2)
    h, e = vertex_expand(g, "1", {"1>2": 1, "2>1": 2}, forward=False)
    a = h.edge(e)
    assert (a.tail, a.head) == ("1.2", "1.1")


def test_contraction_keeps_parallel_arcs_and_drops_loops():
    g = Digraph("abc", [("ab", "a", "b"), ("ac", "a", "c"), ("bc", "b", "c"), ("ca", "c", "a")])
    h, m = consistent_contract(g, "ab")
    assert m == "a"
    assert len(h.arcs_between("a", "c")) == 2 and not h.has_edge("ab")


def test_partition_validation():
    with pytest.raises(WitnessError):
        Partition([["1"], []])
    with pytest.raises(WitnessError):
        Partition([["1", "2"], ["2"]])
    with pytest.raises(GraphFormatError):
        Partition.from_dict({"blocks": [[1]]})
    with pytest.raises(GraphFormatError):
        Partition.from_dict([])
    p = Partition.from_dict({"blocks": [["2", "1"], ["3"]]})
    assert Partition.from_dict(p.to_dict()) == p
    with pytest.raises(WitnessError):
        p.covers(complete_symmetric(4))


def test_witness_modes_on_a_hand_example():
    g = Digraph("1234", [("12", "1", "2"), ("21", "2", "1"), ("23", "2", "3"), ("34", "3", "4"), ("43", "4", "3")])
    pat = Digraph("ab", [("ab", "a", "b")])
    w = MinorWitness(Partition([["1", "2"], ["3", "4"]]), pat)
    for mode in ("weak", "strong", "hcyclic"):
        r = check_minor_witness(g, w, mode)
        assert r.ok and r.realization == {"ab": "23"}
    assert {i: c.vertex_set for i, c in check_minor_witness(g, w, "hcyclic").hamiltonian.items()} == \
        {0: frozenset("12"), 1: frozenset("34")}
    path = Digraph("123", [("12", "1", "2"), ("23", "2", "3")])
    w2 = MinorWitness(Partition([["1", "2", "3"]]), Digraph(["x"], []))
    assert check_minor_witness(path, w2, "weak").ok
    r = check_minor_witness(path, w2, "strong")
    assert not r and "strongly" in r.failure


def test_witness_failures_name_the_arc():
    g = complete_symmetric(2)
    pat = Digraph("ab", [("ab", "a", "b")])
    w = MinorWitness(Partition([["1"], ["2"]]), pat, {"ab": "2>1"})
    r = check_minor_witness(g, w)
    assert not r.ok and "2>1" in r.failure
    with pytest.raises(WitnessError):
        check_minor_witness(g, MinorWitness(Partition([["1"], ["2"]]), pat, {"zz": "1>2"}))
    with pytest.raises(WitnessError):
        check_minor_witness(g, MinorWitness(Partition([["1", "2"]]), pat))
    with pytest.raises(WitnessError):
        check_minor_witness(g, MinorWitness(Partition([["1"], ["2"]]), pat), "bogus")


@given(st.integers(2, 7), st.floats(0.1, 0.7), st.integers(0, 10**6))
def test_mode_monotonicity(n, p, seed):
    rng = random.Random(seed)
    g = random_digraph(n, p, seed)
    vs = list(g.vertices)
    rng.shuffle(vs)
    cut = sorted(rng.sample(range(1, n), rng.randint(0, n - 1)))
    blocks = [vs[i:j] for i, j in zip([0] + cut, cut + [n])]
    w = merge_witness(g, blocks)
    weak, strong, hc = (check_minor_witness(g, w, m).ok for m in ("weak", "strong", "hcyclic"))
    assert not hc or strong
    assert not strong or weak


@given(st.integers(2, 7), st.integers(0, 10**6))
def test_antiparallel_pair_merge_is_hcyclic(n, seed):
    g = random_digraph(n, 0.5, seed)
    for a in g.edges:
        if g.arcs_between(a.head, a.tail):
            assert check_minor_witness(g, merge_witness(g, [[a.tail, a.head]]), "hcyclic").ok
            break


@given(st.integers(3, 6), st.integers(2, 4), st.integers(0, 10**6))
def test_find_subdigraph_matches_brute_force(n, k, seed):
    g = random_digraph(n, 0.5, seed)
    pat = random_digraph(k, 0.5, seed + 1)
    m = find_subdigraph(g, pat)
    assert (m is not None) == brute_subdigraph(g, pat)
    if m is not None:
        assert is_subdigraph_map(g, pat, m)


def test_find_subdigraph_respects_multiplicity():
    pat = Digraph("ab", [("x", "a", "b"), ("y", "a", "b")])
    assert find_subdigraph(Digraph("12", [("e", "1", "2")]), pat) is None
    assert find_subdigraph(Digraph("12", [("e", "1", "2"), ("f", "1", "2")]), pat) == {"a": "1", "b": "2"}
    with pytest.raises(PatternTooLarge):
        find_subdigraph(complete_symmetric(10), complete_symmetric(9))


def test_density_below_threshold_for_simple_digraphs_up_to_ten():
    for n in range(2, 11):
        assert n * (n - 1) < dense_threshold_arcs(n)
        with pytest.raises(ValueError):
            random_dense_digraph(n, dense_threshold_arcs(n))
        assert density_certificate(complete_symmetric(n)).kind == "below_threshold"


@pytest.mark.parametrize("n", [11, 12, 13])
def test_density_certificate_above_threshold(n):
    for seed in range(5):
        g = random_dense_digraph(n, dense_threshold_arcs(n), seed)
        v = density_certificate(g)
        assert v.kind == "dk6_found"
        assert is_subdigraph_map(g, complete_symmetric(6), v.mapping)
        assert v.density > v.threshold / (n * n)


def test_parallel_arcs_do_not_count_towards_density():
    # three copies of each tournament arc exceed 9/10 n^2 arcs but give no symmetric pair
    t = apex_tournament(6)
    tt = Digraph(t.vertices, [(f"{a.id}#{k}", a.tail, a.head) for a in t.edges for k in range(3)])
    v = density_certificate(tt)
    assert v.kind == "below_threshold"


def test_subdigraph_search_examples():
    m = find_subdigraph(complete_symmetric(6), complete_symmetric(6))
    assert m is not None and sorted(m.values()) == sorted(complete_symmetric(6).vertices)
    from spatialdigraph.constructions import transitive_tournament

    assert find_subdigraph(transitive_tournament(20), complete_symmetric(6)) is None
    tri = Digraph("xyz", [("xy", "x", "y"), ("yz", "y", "z"), ("zx", "z", "x")])
    assert find_subdigraph(complete_symmetric(3), tri) is not None


def test_density_examples():
    v = density_certificate(apex_tournament(10))
    assert v.kind == "below_threshold" and v.arcs == 54
    v = density_certificate(complete_symmetric(6))
    assert v.kind == "below_threshold" and v.arcs == 30


def test_dk8_minus_four_arcs_is_below_threshold_yet_contains_dk6():
    # 56 - 4 = 52 arcs, under 9/10 * 64; the certificate is one-sided
    g = complete_symmetric(8).without_edges(["1>2", "1>3", "1>4", "1>5"])
    v = density_certificate(g)
    assert v.kind == "below_threshold" and v.arcs == 52
    assert find_subdigraph(g, complete_symmetric(6)) is not None
