"""Named verification suites, one per acceptance criterion.

Each suite returns a :class:`SuiteResult` listing its individual checks.
A suite passes when every check passes and it finished inside its time
budget.  All randomness derives from the ``seed`` argument.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations
from typing import Callable

import numpy as np

from . import census as cen
from . import constructions as con
from .diagram import DegenerateProjection, direction_schedule, knot_diagram, polygon_linking_number
from .digraph import (
    Digraph,
    directed_cycles,
    has_disjoint_directed_cycles,
    undirected_cycles,
)
from .embedding import (
    CrossingForm,
    EmbeddingError,
    contract_path_embedding,
    double_embedding,
    knot_certificate,
    moment,
    spatial_realize,
)
from .fixtures import load_fixture, polygon_embedding
from .geometry import lerp
from .minors import (
    check_minor_witness,
    consistent_contract,
    dense_threshold_arcs,
    density_certificate,
    find_subdigraph,
    is_consistent_expansion,
    is_subdigraph_map,
    legal_expansions,
    merge_witness,
    random_dense_digraph,
    vertex_expand,
)


@dataclass
class Check:
    name: str
    ok: bool
    detail: str = ""


@dataclass
class SuiteResult:
    suite: str
    criterion: int
    title: str
    budget: float
    checks: list[Check] = field(default_factory=list)
    seconds: float = 0.0

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks) and self.seconds <= self.budget

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.ok]

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "criterion": self.criterion,
            "title": self.title,
            "ok": self.ok,
            "seconds": round(self.seconds, 3),
            "budget_seconds": self.budget,
            "checks": [{"name": c.name, "ok": c.ok, "detail": c.detail} for c in self.checks],
        }


class _Recorder:
    def __init__(self, res: SuiteResult):
        self.res = res

    def __call__(self, name: str, ok, detail: str = "") -> bool:
        self.res.checks.append(Check(name, bool(ok), detail))
        return bool(ok)


# -- 1 ---------------------------------------------------------------------------

def suite_construction(check: _Recorder, seed: int) -> None:
    g, w = con.three_link_gadget()
    check("three_link_gadget vertices = 21", len(g.vertices) == 21, str(len(g.vertices)))
    check("three_link_gadget edges = 93", len(g.edges) == 93, str(len(g.edges)))
    z = con.preferred_arc_digraph(g, w)
    check("three_link_gadget preferred arcs form a directed triangle",
          len(directed_cycles(z)) == 1 and len(directed_cycles(z)[0]) == 3)
    g, w = con.four_link_gadget()
    check("four_link_gadget copies = 99", len(w.copies) == 99, str(len(w.copies)))
    check("four_link_gadget vertices = 605", len(g.vertices) == 605, str(len(g.vertices)))
    check("four_link_gadget edges = 3069", len(g.edges) == 3069, str(len(g.edges)))
    pref = con.preferred_arc_digraph(g, w)
    pairs = [(a.tail, a.head) for a in pref.edges]
    b = [(str(i), str(i % 11 + 1)) for i in range(1, 12)]
    dk11 = {(a.tail, a.head) for a in con.complete_symmetric(11).edges}
    check("preferred arcs plus B equal DK11", len(set(pairs)) == len(pairs) == 99
          and set(pairs) | set(b) == dk11 and not set(pairs) & set(b))
    check("reversal of B present", all((str(i % 11 + 1), str(i)) in set(pairs) for i in range(1, 12)))
    for n in range(2, 13):
        m = len(con.apex_tournament(n).edges)
        check(f"apex_tournament({n}) edges = (n+2)(n-1)/2", m == (n + 2) * (n - 1) // 2, str(m))


# -- 2 ---------------------------------------------------------------------------

def suite_acyclicity(check: _Recorder, seed: int) -> None:
    for n in range(1, 9):
        k = len(directed_cycles(con.transitive_tournament(n)))
        check(f"transitive_tournament({n}) has no directed cycle", k == 0, str(k))
    for n in range(2, 9):
        found, wit = has_disjoint_directed_cycles(con.apex_tournament(n))
        check(f"apex_tournament({n}) has no disjoint directed cycles", not found, str(wit))
        g = con.apex_tournament(n)
        check(f"apex_tournament({n}): every directed cycle passes through v",
              all("v" in c.vertex_set for c in directed_cycles(g)))


# -- 3 ---------------------------------------------------------------------------

def _density_round(check: _Recorder, n: int, seed: int, label: str) -> None:
    arcs = dense_threshold_arcs(n)
    for k in range(20):
        s = seed * 1000 + 100 * n + k
        try:
            g = random_dense_digraph(n, arcs, s)
        except ValueError as exc:
            check(f"{label} n={n} instance {k}: random digraph with {arcs} > 9/10 n^2 arcs", False, str(exc))
            continue
        v = density_certificate(g)
        dk6 = con.complete_symmetric(6)
        ok = v.kind == "dk6_found" and is_subdigraph_map(g, dk6, v.mapping)
        check(f"{label} n={n} instance {k}: verified DK6 witness", ok, v.kind)
        check(f"{label} n={n} instance {k}: find_subdigraph agrees", find_subdigraph(g, dk6) is not None)


def suite_density(check: _Recorder, seed: int) -> None:
    for n in (8, 9, 10):
        _density_round(check, n, seed, "density")


def suite_density_beyond(check: _Recorder, seed: int) -> None:
    """The same pipeline where the threshold is attainable (n = 11..13), plus one-sidedness checks."""
    for n in (11, 12, 13):
        _density_round(check, n, seed, "density")
    v = density_certificate(con.apex_tournament(10))
    check("apex_tournament(10) below threshold", v.kind == "below_threshold", v.kind)
    v = density_certificate(con.complete_symmetric(6))
    check("DK6 below threshold (certificate is one-sided)", v.kind == "below_threshold", v.kind)
    rng = random.Random(seed)
    for k in range(20):
        n = rng.randint(6, 12)
        g = random_dense_digraph(n, rng.randint(n, n * (n - 1)), rng.randrange(10 ** 9))
        v = density_certificate(g)
        has = find_subdigraph(g, con.complete_symmetric(6)) is not None
        check(f"soundness on random digraph {k} (n={n})", v.kind == "below_threshold" or has)


# -- 4 ---------------------------------------------------------------------------

def _generic_directions(P, Q, count: int) -> list[tuple]:
    out = []
    for d in direction_schedule():
        try:
            out.append((d, polygon_linking_number(P, Q, d)))
        except DegenerateProjection:
            continue
        if len(out) == count:
            break
    return out


def _subdivide(P):
    out = []
    for i, p in enumerate(P):
        out += [p, lerp(p, P[(i + 1) % len(P)], Fraction(1, 2))]
    return out


def random_moment_pair(rng: random.Random) -> tuple[list, list]:
    """Two vertex-disjoint polygons with corners at distinct moment-curve points."""
    k1, k2 = rng.randint(3, 6), rng.randint(3, 6)
    ts = rng.sample(range(-12, 13), k1 + k2)
    return [moment(t) for t in ts[:k1]], [moment(t) for t in ts[k1:]]


def suite_linking(check: _Recorder, seed: int) -> None:
    for name, want in (("hopf_triangles", {1, -1}), ("split_circles", {0})):
        emb = load_fixture(name)
        v = polygon_linking_number(emb.polygon(emb.named_cycle("c1")), emb.polygon(emb.named_cycle("c2")))
        check(f"{name} lk in {sorted(want)}", v in want, str(v))
    rng = random.Random(seed)
    linked = 0
    for k in range(100):
        P, Q = random_moment_pair(rng)
        vals = _generic_directions(P, Q, 3)
        base = vals[0][1]
        linked += base != 0
        check(f"pair {k}: three directions agree", len(vals) == 3 and len({v for _, v in vals}) == 1,
              str([v for _, v in vals]))
        check(f"pair {k}: symmetric", polygon_linking_number(Q, P) == base)
        check(f"pair {k}: antisymmetric under reversal", polygon_linking_number(P, Q[::-1]) == -base
              and polygon_linking_number(P[::-1], Q) == -base)
        over, total = polygon_linking_number(P, Q, both_sides=True)
        check(f"pair {k}: one-sided count equals half the total", total == 2 * over == 2 * base)
        check(f"pair {k}: subdivision invariant", polygon_linking_number(_subdivide(P), _subdivide(Q)) == base)
    check("some random pairs are linked", linked > 0, f"{linked} of 100 linked")


# -- 5 ---------------------------------------------------------------------------

def random_polygon(rng: random.Random, sticks: int, box: int = 6) -> list:
    while True:
        pts = [tuple(rng.randint(-box, box) for _ in range(3)) for _ in range(sticks)]
        if len(set(pts)) < sticks:
            continue
        try:
            polygon_embedding({"k": pts}).validate()
        except EmbeddingError:
            continue
        return pts


def suite_knots(check: _Recorder, seed: int) -> None:
    for name, det, arf in (("trefoil_hexagon", 3, 1), ("figure_eight", 5, 1), ("convex_planar", 1, 0)):
        emb = load_fixture(name)
        k = knot_certificate(emb, emb.named_cycle("k"))
        check(f"{name}: determinant {det}, arf {arf}", (k.determinant, k.arf) == (det, arf),
              f"det={k.determinant} arf={k.arf}")
    rng = random.Random(seed)
    for i in range(60):
        P = random_polygon(rng, rng.randint(5, 9))
        dets = []
        for d in direction_schedule():
            try:
                dets.append(knot_diagram(P, d).determinant())
            except DegenerateProjection:
                continue
            if len(dets) == 2:
                break
        check(f"random polygon {i}: determinant odd", dets[0] % 2 == 1, str(dets))
        check(f"random polygon {i}: determinant independent of direction", len(set(dets)) == 1, str(dets))


# -- 6 ---------------------------------------------------------------------------

def suite_d4(check: _Recorder, seed: int) -> None:
    emb = load_fixture("d4_fixture")
    c = {k: emb.named_cycle(k) for k in ("C1", "C2", "C3", "C4")}
    from .embedding import linking_number

    l13, l24 = linking_number(emb, c["C1"], c["C3"]), linking_number(emb, c["C2"], c["C4"])
    check("lk(C1, C3) odd", l13 % 2 == 1, str(l13))
    check("lk(C2, C4) odd", l24 % 2 == 1, str(l24))
    ham = [h for h in directed_cycles(emb.graph) if len(h) == 4]
    check("16 Hamiltonian cycles, all consistent", len(ham) == 16 and all(h.consistent for h in ham), str(len(ham)))
    certs = [knot_certificate(emb, h) for h in ham]
    odd = [k for k in certs if k.arf == 1]
    check("some Hamiltonian cycle has Arf 1", bool(odd),
          ", ".join(f"{'/'.join(k.cycle.edge_ids)} det={k.determinant}" for k in odd))


# -- 7 ---------------------------------------------------------------------------

def complete_graph(n: int) -> Digraph:
    vs = [str(i) for i in range(1, n + 1)]
    return Digraph(vs, [(f"{u}~{v}", u, v) for i, u in enumerate(vs) for v in vs[i + 1:]])


def suite_doubling(check: _Recorder, seed: int) -> None:
    cases = [("hopf_triangles", {2: 1}, {2: 4}, None), ("double_hopf", {2: 2}, {2: 8}, None),
             ("trefoil_hexagon", None, None, (1, 2))]
    for name, base, up, knots in cases:
        r = cen.verify_doubling_counts(load_fixture(name))
        check(f"{name}: doubled counts equal k_n 2^n", r.ok, str(r.to_dict()))
        if base is not None:
            check(f"{name}: base counts {base}, doubled {up}", r.base.counts == base and r.doubled.counts == up,
                  f"{r.base.counts} -> {r.doubled.counts}")
        if knots is not None:
            got = (len(r.base_knots.knots), len(r.doubled_knots.knots))
            check(f"{name}: {knots[0]} knot -> {knots[1]} consistent knots", got == knots, str(got))
    embs = [(n, load_fixture(n)) for n in ("hopf_triangles", "double_hopf", "split_circles")]
    embs += [(f"K6 seed {s}", spatial_realize(complete_graph(6), seed + s)) for s in range(3)]
    for name, emb in embs:
        r = cen.verify_doubling_counts(emb)
        check(f"{name}: doubling verdict", r.ok, str(r.to_dict()))
        if r.base.counts.get(2, 0) > 0:
            check(f"{name}: doubled census has >= 4 two-component links", r.doubled.counts[2] >= 4,
                  str(r.doubled.counts))


# -- 8 ---------------------------------------------------------------------------

def _pick_pair(rng, cycles, form, need_cycle_len=3):
    """A consistent cycle c (length >= 3) and a disjoint cycle x, preferring linked pairs."""
    long_ = [c for c in cycles if len(c) >= need_cycle_len]
    rng.shuffle(long_)
    fallback = None
    for c in long_[:200]:
        others = [x for x in cycles if not x.vertex_set & c.vertex_set]
        rng.shuffle(others)
        for x in others:
            if form.lk(x, c) != 0:
                return c, x
            fallback = fallback or (c, x)
    return fallback


def bigon_instances(seed: int, count: int):
    """Seeded doubled embeddings of K6 (always linked) and of dense random graphs on 7 vertices."""
    rng = random.Random(seed)
    out = []
    for k in range(count):
        if k % 2 == 0:
            base = complete_graph(6)
        else:
            g = con.random_digraph(7, rng.uniform(0.6, 0.9), rng.randrange(10 ** 9))
            base = Digraph(g.vertices, [(a.id, a.tail, a.head) for a in g.edges if a.tail < a.head])
        out.append((rng.randrange(10 ** 9), double_embedding(spatial_realize(base, rng.randrange(10 ** 9)))))
    return out


def suite_bigons(check: _Recorder, seed: int) -> None:
    for k, (s, emb) in enumerate(bigon_instances(seed, 50)):
        rng = random.Random(s)
        form = CrossingForm(emb)
        cycles = directed_cycles(emb.graph, 6)
        pair = _pick_pair(rng, cycles, form)
        if pair is None:
            check(f"instance {k}: found a cycle with a disjoint partner", False)
            continue
        c, x = pair
        rev, bigons = cen.bigon_decomposition(emb.graph, c)
        lc, lr, lb = form.lk(x, c), form.lk(x, rev), sum(form.lk(x, b) for b in bigons)
        along = form.lk(x, rev.reversed())
        check(f"instance {k}: lk(x,c) - lk(x,rev c) = sum lk(x,bigon) (rev c run along c)", lc - along == lb,
              f"{lc} - {along} vs {lb}")
        check(f"instance {k}: lk(x,c) + lk(x,rev c) = sum lk(x,bigon) (rev c consistent)", lc + lr == lb,
              f"{lc} + {lr} vs {lb}")
        check(f"instance {k}: decomposition cycles are directed", rev.consistent and all(b.consistent for b in bigons))
        _repair_round(check, f"instance {k}", emb, form, rng)
    _repair_fixtures(check)


def _repair_round(check, label, emb, form, rng) -> None:
    cons = [c for c in directed_cycles(emb.graph, 4) if len(c) >= 3]
    mixed = [c for c in undirected_cycles(emb.graph, 4) if not c.consistent and len(c) >= 3]
    rng.shuffle(cons)
    rng.shuffle(mixed)
    for c1 in cons[:60]:
        for c2 in mixed[:400]:
            if c1.vertex_set & c2.vertex_set or form.lk(c1, c2) == 0:
                continue
            r = cen.repair_cycle(emb, c1, c2, form=form)
            ok = r.cycle.consistent and (
                (r.kind == "repaired" and r.lk == form.lk(c1, c2)) or (r.kind == "bigon" and r.lk != 0))
            check(f"{label}: repair gives an equal-lk consistent cycle or a linked bigon", ok, r.kind)
            return


def _repair_fixtures(check) -> None:
    dbl = double_embedding(load_fixture("hopf_triangles"))
    g = dbl.graph
    c1 = directed_cycles(g.subgraph(v for v in g.vertices if v.startswith("c1")))
    c1 = next(c for c in c1 if len(c) == 3)
    c2 = cen.cycle_from_steps(g, [("c2.0>c2.1+", True), ("c2.1>c2.2+", True), ("c2.2>c2.0-", False)])
    form = CrossingForm(dbl)
    r = cen.repair_cycle(dbl, c1, c2, form=form)
    check("doubled Hopf: one reversed arc is repaired with equal lk",
          r.kind == "repaired" and r.cycle.consistent and r.lk == form.lk(c1, c2) != 0, f"{r.kind} {r.lk}")
    same = cen.repair_cycle(dbl, c1, r.cycle, form=form)
    check("consistent c2 returned unchanged", same.kind == "unchanged" and same.cycle == r.cycle)
    emb = load_fixture("clasp_fixture")
    r = cen.repair_cycle(emb, emb.named_cycle("c1"), emb.named_cycle("c2"))
    check("clasp fixture: linked bigon returned", r.kind == "bigon" and r.lk != 0 and r.cycle.consistent,
          f"{r.kind} {r.lk}")


# -- 9 ---------------------------------------------------------------------------

def digraph_classes(n: int) -> list[Digraph]:
    """One simple digraph per isomorphism class on ``n`` vertices (n <= 5)."""
    pairs = [(i, j) for i in range(n) for j in range(n) if i != j]
    m = len(pairs)
    bit = {p: k for k, p in enumerate(pairs)}
    codes = np.arange(1 << m, dtype=np.int64)
    chunks = [(lo, min(lo + 10, m)) for lo in range(0, m, 10)]
    best = None
    for perm in permutations(range(n)):
        img = np.zeros_like(codes)
        for lo, hi in chunks:
            table = np.zeros(1 << (hi - lo), dtype=np.int64)
            for x in range(1 << (hi - lo)):
                y = 0
                for k in range(hi - lo):
                    if x >> k & 1:
                        i, j = pairs[lo + k]
                        y |= 1 << bit[(perm[i], perm[j])]
                table[x] = y
            img |= table[(codes >> lo) & ((1 << (hi - lo)) - 1)]
        best = img if best is None else np.minimum(best, img)
    out = []
    for code in np.unique(best).tolist():
        vs = [str(i + 1) for i in range(n)]
        out.append(Digraph(vs, [(f"{i + 1}>{j + 1}", str(i + 1), str(j + 1))
                                for (i, j), k in bit.items() if code >> k & 1]))
    return out


def _expansion_checks(check, g: Digraph, v: str, split: dict, label: str) -> None:
    h, e = vertex_expand(g, v, split)
    back, _ = consistent_contract(h, e, merged=v)
    before, after = directed_cycles(g), directed_cycles(h)
    lens_before = sorted(len(c) for c in before)
    lens_after = sorted(len(c) - (e in c.edge_ids) for c in after)
    ok = is_consistent_expansion(h, e) and back == g and len(before) == len(after) and lens_before == lens_after
    if not ok:
        check(f"{label}: expansion at {v} {split}", False,
              f"roundtrip={back == g} cycles {len(before)} -> {len(after)}")
    return ok


def _mode_checks(check, g: Digraph, rng, label: str) -> bool:
    vs = list(g.vertices)
    rng.shuffle(vs)
    blocks, i = [], 0
    while i < len(vs):
        k = rng.randint(1, 3)
        blocks.append(vs[i:i + k])
        i += k
    w = merge_witness(g, blocks)
    weak, strong, hcyc = (check_minor_witness(g, w, m).ok for m in ("weak", "strong", "hcyclic"))
    ok = (not hcyc or strong) and (not strong or weak)
    if not ok:
        check(f"{label}: mode monotonicity", False, f"weak={weak} strong={strong} hcyclic={hcyc} {blocks}")
    return ok


def _antiparallel_check(check, g: Digraph, label: str) -> bool:
    for a in g.edges:
        if g.arcs_between(a.head, a.tail):
            w = merge_witness(g, [[a.tail, a.head]])
            r = check_minor_witness(g, w, "hcyclic")
            if not r.ok:
                check(f"{label}: antiparallel pair {a.tail},{a.head} merge is H-cyclic", False, r.failure or "")
            return r.ok
    return True


def suite_minors(check: _Recorder, seed: int) -> None:
    rng = random.Random(seed)
    for n in range(1, 6):
        classes = digraph_classes(n)
        bad = total = 0
        modes_bad = anti_bad = 0
        for idx, g in enumerate(classes):
            label = f"n={n} class {idx}"
            for v in g.vertices:
                splits = list(legal_expansions(g, v))
                if n == 5:
                    splits = [rng.choice(splits)]
                for split in splits:
                    total += 1
                    bad += not _expansion_checks(check, g, v, split, label)
            modes_bad += not _mode_checks(check, g, rng, label)
            anti_bad += not _antiparallel_check(check, g, label)
        check(f"all {len(classes)} digraph classes on {n} vertices: round trip and cycle bijection",
              bad == 0, f"{total} expansions, {bad} failures")
        check(f"all {len(classes)} digraph classes on {n} vertices: mode monotonicity", modes_bad == 0)
        check(f"all {len(classes)} digraph classes on {n} vertices: antiparallel merge is H-cyclic", anti_bad == 0)
    bad = total = 0
    for k in range(100):
        n = rng.randint(5, 7)
        g = con.random_digraph(n, rng.uniform(0.15, 0.5), rng.randrange(10 ** 9))
        v = rng.choice(g.vertices)
        splits = list(legal_expansions(g, v))
        rng.shuffle(splits)
        for split in splits[:8]:
            total += 1
            bad += not _expansion_checks(check, g, v, split, f"random {k}")
        _mode_checks(check, g, rng, f"random {k}")
        _antiparallel_check(check, g, f"random {k}")
    check("100 random digraphs (n <= 7): round trip and cycle bijection", bad == 0,
          f"{total} expansions, {bad} failures")


# -- 10 --------------------------------------------------------------------------

def suite_gadget(check: _Recorder, seed: int) -> None:
    h = con.graph_H()
    for s in range(5):
        emb = spatial_realize(h, seed + s)
        links = cen.links_containing_edge(emb, "a>b", len_max=4)
        shapes = {tuple(sorted(link.shape(), reverse=True)) for link in links}
        check(f"graph_H seed {seed + s}: a->b lies on a consistent linked pair", bool(links), f"{len(links)} links")
        check(f"graph_H seed {seed + s}: shapes within (4,4), (4,2)", shapes <= {(4, 4), (4, 2)}, str(sorted(shapes)))
    g, _ = con.three_link_gadget()
    emb = spatial_realize(g, seed)
    rep = cen.link_census(emb, n_max=3, len_max=9, keep=2000)
    check("three_link_gadget census not truncated", not rep.truncated, f"{rep.cycles} cycles")
    check("three_link_gadget has a consistent 3-link", rep.counts.get(3, 0) >= 1, str(rep.counts))
    threes = rep.links_of_size(3)
    check("stored 3-links have connected linking graphs and disjoint components",
          bool(threes) and all(cen.connected_linking_graph(k) and cen.pairwise_disjoint(k.components) for k in threes))


# -- 11 --------------------------------------------------------------------------

def suite_contraction(check: _Recorder, seed: int) -> None:
    rng = random.Random(seed)
    found = tries = 0
    while found < 20 and tries < 2000:
        tries += 1
        n = rng.randint(6, 7)
        g = con.random_digraph(n, rng.uniform(0.25, 0.45), rng.randrange(10 ** 9))
        cycles = directed_cycles(g)
        if not cycles:
            continue
        emb = spatial_realize(g, rng.randrange(10 ** 9))
        if cen.link_census(emb, 2, n).counts[2] != 0:
            continue
        c0 = rng.choice(cycles)
        path = list(c0.edge_ids[:-1])
        out = contract_path_embedding(emb, path)
        after = cen.link_census(out, 2, n).counts[2]
        block = sorted(c0.vertex_set)
        w = merge_witness(g, [block])
        hc = check_minor_witness(g, w, "hcyclic").ok
        check(f"instance {found}: block {block} is H-cyclic; contracted census has no linked pair",
              hc and after == 0, f"{after} linked pairs")
        found += 1
    check("20 instances without consistent linked pairs found", found == 20, f"{found} after {tries} draws")


# -- registry ------------------------------------------------------------------------

SUITES: dict[str, tuple[int, str, float, Callable]] = {
    "construction": (1, "Construction arithmetic", 1.0, suite_construction),
    "acyclicity": (2, "Acyclicity and disjointness", 10.0, suite_acyclicity),
    "density": (3, "Density theorem at n = 8, 9, 10", 60.0, suite_density),
    "linking": (4, "Linking-number engine", 30.0, suite_linking),
    "knots": (5, "Knot invariants", 10.0, suite_knots),
    "d4": (6, "D4 ring corollary", 5.0, suite_d4),
    "doubling": (7, "Doubling counts", 60.0, suite_doubling),
    "bigons": (8, "Bigon homology and repair", 60.0, suite_bigons),
    "minors": (9, "Minor calculus", 120.0, suite_minors),
    "gadget": (10, "Gadget census", 600.0, suite_gadget),
    "contraction": (11, "Embedding contraction", 120.0, suite_contraction),
    "density_beyond": (0, "Density pipeline at n = 11, 12, 13 (supplementary)", 60.0, suite_density_beyond),
}


def run_suite(name: str, seed: int = 0) -> SuiteResult:
    if name not in SUITES:
        raise KeyError(name)
    crit, title, budget, fn = SUITES[name]
    res = SuiteResult(name, crit, title, budget)
    t0 = time.perf_counter()
    try:
        fn(_Recorder(res), seed)
    except Exception as exc:  # a crash is a failed check, not a silent pass
        res.checks.append(Check("suite raised", False, f"{type(exc).__name__}: {exc}"))
    res.seconds = time.perf_counter() - t0
    return res
