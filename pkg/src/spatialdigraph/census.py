"""Censuses of consistently oriented knots and links in a fixed embedding,
the doubling counts, bigon decomposition and cycle repair."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, Sequence

import numpy as np

from .digraph import (
    DEFAULT_CYCLE_CAP,
    Cycle,
    Digraph,
    GraphError,
    cycle_from_steps,
    iter_directed_cycles,
    iter_undirected_cycles,
)
from .embedding import CrossingForm, KnotCertificate, PLEmbedding, double_embedding, knot_certificate

_CHUNK = 1024


@dataclass(frozen=True)
class Link:
    components: tuple[Cycle, ...]
    matrix: tuple[tuple[int, ...], ...]

    @property
    def n(self) -> int:
        return len(self.components)

    def uses_edge(self, eid: str) -> bool:
        return any(eid in c.edge_ids for c in self.components)

    def shape(self) -> tuple[int, ...]:
        return tuple(len(c) for c in self.components)

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "components": [{"vertices": list(c.vertices),
                            "steps": [[e, f] for e, f in c.steps]} for c in self.components],
            "linking_matrix": [list(r) for r in self.matrix],
        }


@dataclass
class CensusReport:
    """Knots and links found in one embedding.

    ``counts[n]`` is the number of n-component links whose linking graph
    (components joined when their linking number is nonzero) is connected.
    """

    len_max: int | None
    n_max: int
    consistent_only: bool
    cycles: int = 0
    links: list[Link] = field(default_factory=list)
    knots: list[KnotCertificate] = field(default_factory=list)
    unresolved: int = 0
    truncated: bool = False
    source: str | None = None
    found: dict[int, int] | None = None

    @property
    def counts(self) -> dict[int, int]:
        """Links per component count; exact even when ``keep`` limited the stored list."""
        if self.found is not None:
            return dict(self.found)
        c = {n: 0 for n in range(2, self.n_max + 1)}
        for link in self.links:
            c[link.n] = c.get(link.n, 0) + 1
        return c

    @property
    def complete(self) -> bool:
        """Whether every counted link is also stored in ``links``."""
        return sum(self.counts.values()) == len(self.links)

    def links_of_size(self, n: int) -> list[Link]:
        return [link for link in self.links if link.n == n]

    def to_dict(self) -> dict:
        return {
            "source": self.source,
            "len_max": self.len_max,
            "n_max": self.n_max,
            "flags": "consistent_only" if self.consistent_only else "all_cycles",
            "cycles": self.cycles,
            "truncated": self.truncated,
            "links_complete": self.complete,
            "counts": {str(k): v for k, v in self.counts.items()},
            "links": [link.to_dict() for link in self.links],
            "knots": [{"vertices": list(k.cycle.vertices), "steps": [[e, f] for e, f in k.cycle.steps],
                       "determinant": k.determinant, "arf": k.arf, "crossings": k.crossing_count}
                      for k in self.knots],
            "unresolved_knots": self.unresolved,
        }


def _take(it: Iterator[Cycle], cap: int) -> tuple[list[Cycle], bool]:
    out = []
    for c in it:
        if len(out) >= cap:
            return out, True
        out.append(c)
    return out, False


def census_cycles(g: Digraph, len_max: int | None, consistent_only: bool,
                  cap: int = DEFAULT_CYCLE_CAP) -> tuple[list[Cycle], bool]:
    """Cycles the census ranges over, and whether the cap cut them short."""
    it = iter_directed_cycles(g, len_max) if consistent_only else iter_undirected_cycles(g, len_max)
    return _take(it, cap)


def _esu(adj: list[set[int]], masks: list[int], size: int) -> Iterator[tuple[int, ...]]:
    """Connected vertex sets of ``size`` in the linking graph with pairwise-disjoint cycles.

    Wernicke's ESU yields every connected set once; candidates meeting the
    current set in a vertex are skipped, which is safe because disjointness
    passes to subsets.
    """
    for v in range(len(adj)):
        if size == 1:
            yield (v,)
            continue
        ext = {u for u in adj[v] if u > v}
        yield from _extend([v], masks[v], set(adj[v]) | {v}, ext, v, adj, masks, size)


def _extend(sub, mask, closed, ext, root, adj, masks, size):
    if len(sub) == size - 1:
        for w in ext:
            if not masks[w] & mask:
                yield tuple(sub) + (w,)
        return
    ext = set(ext)
    while ext:
        w = ext.pop()
        if masks[w] & mask:
            continue
        new_ext = ext | {u for u in adj[w] if u > root and u not in closed}
        yield from _extend(sub + [w], mask | masks[w], closed | adj[w], new_ext, root, adj, masks, size)


def link_census(emb: PLEmbedding, n_max: int = 2, len_max: int | None = None,
                consistent_only: bool = True, cap: int = DEFAULT_CYCLE_CAP,
                form: CrossingForm | None = None, keep: int | None = None) -> CensusReport:
    """All sets of 2..n_max pairwise-disjoint cycles with connected linking graph.

    Cycles are the directed cycles (``consistent_only``) or all cycles of
    the underlying graph, up to ``len_max`` arcs.  Links whose components
    are pairwise unlinked in the linking-number sense are not seen.  With
    ``keep`` only the first ``keep`` links of each size are stored; the
    counts stay exact.
    """
    g = emb.graph
    cycles, truncated = census_cycles(g, len_max, consistent_only, cap)
    rep = CensusReport(len_max, n_max, consistent_only, len(cycles), truncated=truncated)
    if len(cycles) < 2 or n_max < 2:
        return rep
    form = form or CrossingForm(emb)
    vindex = {v: i for i, v in enumerate(g.vertices)}
    X = np.stack([form.vector(c) for c in cycles]).astype(np.float64)
    B = np.zeros((len(cycles), len(g.vertices)), dtype=np.float64)
    masks = []
    for i, c in enumerate(cycles):
        m = 0
        for v in c.vertices:
            B[i, vindex[v]] = 1
            m |= 1 << vindex[v]
        masks.append(m)
    XM = X @ form.matrix.astype(np.float64)
    adj: list[set[int]] = [set() for _ in cycles]
    lk: dict[tuple[int, int], int] = {}
    for s in range(0, len(cycles), _CHUNK):
        L = XM[s:s + _CHUNK] @ X.T
        overlap = B[s:s + _CHUNK] @ B.T
        rows, cols = np.nonzero((overlap == 0) & (np.rint(L) != 0))
        for r, j in zip(rows.tolist(), cols.tolist()):
            i = s + r
            if i < j:
                adj[i].add(j)
                adj[j].add(i)
                lk[(i, j)] = int(round(L[r, j]))
    rep.found = {}
    for n in range(2, n_max + 1):
        count = 0
        for idx in _esu(adj, masks, n):
            count += 1
            if keep is not None and count > keep:
                continue
            idx = tuple(sorted(idx))
            mat = tuple(tuple(0 if a == b else lk.get((min(a, b), max(a, b)), 0) for b in idx) for a in idx)
            rep.links.append(Link(tuple(cycles[i] for i in idx), mat))
        rep.found[n] = count
    return rep


def knot_census(emb: PLEmbedding, len_max: int | None = None, consistent_only: bool = True,
                cap: int = DEFAULT_CYCLE_CAP) -> CensusReport:
    """Cycles whose knot determinant is not 1 (certified knots)."""
    cycles, truncated = census_cycles(emb.graph, len_max, consistent_only, cap)
    rep = CensusReport(len_max, 1, consistent_only, len(cycles), truncated=truncated)
    for c in cycles:
        k = knot_certificate(emb, c)
        if k.nontrivial:
            rep.knots.append(k)
        else:
            rep.unresolved += 1
    return rep


@dataclass
class DoublingReport:
    base: CensusReport
    doubled: CensusReport
    base_knots: CensusReport
    doubled_knots: CensusReport
    expected: dict[int, int]
    ok: bool
    truncated: bool

    def to_dict(self) -> dict:
        return {
            "ok": self.ok,
            "truncated": self.truncated,
            "base_counts": {str(k): v for k, v in self.base.counts.items()},
            "doubled_counts": {str(k): v for k, v in self.doubled.counts.items()},
            "expected_doubled_counts": {str(k): v for k, v in self.expected.items()},
            "base_knots": len(self.base_knots.knots),
            "doubled_knots": len(self.doubled_knots.knots),
        }


def verify_doubling_counts(emb: PLEmbedding, len_max: int | None = None, n_max: int = 2,
                           cap: int = DEFAULT_CYCLE_CAP) -> DoublingReport:
    """Compare the census of ``emb`` (all cycles) with the consistent census of its double.

    Each n-component link downstairs should give exactly 2^n consistent
    links upstairs and each knot exactly two consistent knots.  A truncated
    census makes the verdict false.
    """
    dbl = double_embedding(emb)
    base = link_census(emb, n_max, len_max, consistent_only=False, cap=cap)
    up = link_census(dbl, n_max, len_max, consistent_only=True, cap=cap)
    bk = knot_census(emb, len_max, consistent_only=False, cap=cap)
    uk = knot_census(dbl, len_max, consistent_only=True, cap=cap)
    expected = {n: k * 2 ** n for n, k in base.counts.items()}
    truncated = any(r.truncated for r in (base, up, bk, uk))
    ok = (not truncated and up.counts == expected and len(uk.knots) == 2 * len(bk.knots))
    return DoublingReport(base, up, bk, uk, expected, ok, truncated)


# -- bigons and repair ----------------------------------------------------------------

def twin_arc(g: Digraph, eid: str) -> str:
    """The antiparallel partner of an arc: the recorded twin, else the unique reverse arc."""
    t = g.reverse_twin(eid)
    if t is not None:
        return t
    a = g.edge(eid)
    back = g.arcs_between(a.head, a.tail)
    if len(back) != 1:
        raise GraphError(f"arc {eid!r} has {len(back)} reverse arcs; cannot pick a twin")
    return back[0].id


def bigon(g: Digraph, eid: str) -> Cycle:
    return cycle_from_steps(g, [(eid, True), (twin_arc(g, eid), True)])


def bigon_decomposition(dg: Digraph, c: Cycle) -> tuple[Cycle, list[Cycle]]:
    """The twin-arc reversal of a consistent cycle and the bigons along it.

    As edge chains ``c + reversal = sum of bigons``.
    """
    if not c.consistent:
        raise GraphError("bigon decomposition needs a consistent cycle")
    if len(c) < 3:
        raise GraphError("a 2-cycle is its own bigon; decomposition needs length >= 3")
    twins = [twin_arc(dg, e) for e in c.edge_ids]
    rev = cycle_from_steps(dg, [(t, True) for t in reversed(twins)])
    return rev, [bigon(dg, e) for e in c.edge_ids]


@dataclass(frozen=True)
class Repair:
    cycle: Cycle
    kind: str  # "unchanged", "repaired" or "bigon"
    lk: int


def repair_cycle(emb: PLEmbedding, c1: Cycle, c2: Cycle, require_nonzero: bool = True,
                 form: CrossingForm | None = None) -> Repair:
    """Make ``c2`` consistent without changing its linking number with ``c1``.

    Each backward arc of ``c2`` is swapped for its twin.  If the bigon of
    some swapped arc links ``c1``, that bigon is returned instead.
    """
    g = emb.graph
    if not c1.consistent:
        raise GraphError("c1 must be consistent")
    if c1.vertex_set & c2.vertex_set:
        raise GraphError("c1 and c2 share a vertex")
    form = form or CrossingForm(emb)
    base = form.lk(c1, c2)
    if require_nonzero and base == 0:
        raise GraphError("lk(c1, c2) is 0")
    if c2.consistent:
        return Repair(c2, "unchanged", base)
    steps = []
    for eid, fwd in c2.steps:
        if fwd:
            steps.append((eid, True))
            continue
        t = twin_arc(g, eid)
        b = cycle_from_steps(g, [(t, True), (eid, True)])
        val = form.lk(c1, b)
        if val != 0:
            return Repair(b, "bigon", val)
        steps.append((t, True))
    out = cycle_from_steps(g, steps)
    val = form.lk(c1, out)
    if val != base:
        raise AssertionError(f"repair changed the linking number from {base} to {val}")
    return Repair(out, "repaired", val)


def links_containing_edge(emb: PLEmbedding, e: str, len_max: int | None = None, n_max: int = 2,
                          consistent_only: bool = True, report: CensusReport | None = None) -> list[Link]:
    """Links of the census with a component running through arc ``e``."""
    emb.graph.edge(e)
    report = report or link_census(emb, n_max, len_max, consistent_only)
    return [link for link in report.links if link.uses_edge(e)]


def brute_force_link_count(emb: PLEmbedding, n: int, len_max: int | None = None,
                           consistent_only: bool = True) -> int:
    """Reference count: every n-subset of cycles, checked directly with polygon linking numbers."""
    from itertools import combinations

    from .embedding import linking_number

    cycles, _ = census_cycles(emb.graph, len_max, consistent_only)
    total = 0
    for combo in combinations(cycles, n):
        if any(a.vertex_set & b.vertex_set for a, b in combinations(combo, 2)):
            continue
        edges = {(i, j) for i, j in combinations(range(n), 2)
                 if linking_number(emb, combo[i], combo[j]) != 0}
        seen = {0}
        frontier = [0]
        while frontier:
            i = frontier.pop()
            for a, b in edges:
                for x, y in ((a, b), (b, a)):
                    if x == i and y not in seen:
                        seen.add(y)
                        frontier.append(y)
        total += len(seen) == n
    return total


def connected_linking_graph(link: Link) -> bool:
    n = link.n
    seen = {0}
    frontier = [0]
    while frontier:
        i = frontier.pop()
        for j in range(n):
            if j not in seen and link.matrix[i][j] != 0:
                seen.add(j)
                frontier.append(j)
    return len(seen) == n


def pairwise_disjoint(cycles: Sequence[Cycle]) -> bool:
    seen: set[str] = set()
    for c in cycles:
        if seen & c.vertex_set:
            return False
        seen |= c.vertex_set
    return True


def chain_identity_terms(emb: PLEmbedding, x: Cycle, c: Cycle, form: CrossingForm | None = None) -> tuple[int, int, int]:
    """(lk(x, c), lk(x, reversal), sum of lk(x, bigon)) for the bigon decomposition of ``c``."""
    form = form or CrossingForm(emb)
    rev, bigons = bigon_decomposition(emb.graph, c)
    return form.lk(x, c), form.lk(x, rev), sum(form.lk(x, b) for b in bigons)
