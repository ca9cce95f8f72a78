"""Digraph minors: consistent expansion and contraction, witnessed subcontractions,
small-pattern subdigraph search and the edge-density certificate."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .constructions import complete_symmetric
from .digraph import (
    Cycle,
    Digraph,
    GraphError,
    GraphFormatError,
    hamiltonian_directed_cycle,
    is_strongly_connected,
    is_weakly_connected,
    vkey,
)

MAX_PATTERN = 8
DENSITY_RATIO = Fraction(9, 10)
TURAN_RATIO = Fraction(4, 5)


class ContractionError(GraphError):
    """The arc is not a consistent contraction candidate."""


class WitnessError(ValueError):
    """A minor witness does not fit its host or pattern."""


# -- expansion and contraction ---------------------------------------------------

def vertex_expand(g: Digraph, v: str, edge_split: Mapping[str, int], forward: bool = True,
                  names: tuple[str, str] | None = None, arc_id: str | None = None) -> tuple[Digraph, str]:
    """Split ``v`` into two vertices joined by a new arc.

    ``edge_split`` sends each arc incident to ``v`` to side 1 or 2.  The new
    arc runs from side 1 to side 2, or back when ``forward`` is false.
    Returns the expanded digraph and the new arc's id.
    """
    if v not in g:
        raise GraphError(f"no vertex {v!r}")
    v1, v2 = names or (f"{v}.1", f"{v}.2")
    if arc_id is None:
        arc_id = f"{v1}>{v2}" if forward else f"{v2}>{v1}"
    eid = arc_id
    for x in (v1, v2):
        if x in g and x != v:
            raise GraphError(f"vertex name {x!r} already in use")
    if g.has_edge(eid):
        raise GraphError(f"arc id {eid!r} already in use")
    incident = {a.id for a in g.incident(v)}
    missing = sorted(incident - set(edge_split), key=vkey)
    if missing:
        raise GraphError(f"incident arcs not assigned to a side: {missing}")
    extra = sorted(set(edge_split) - incident, key=vkey)
    if extra:
        raise GraphError(f"arcs not incident to {v!r}: {extra}")
    side = {}
    for a, s in edge_split.items():
        if s not in (1, 2):
            raise GraphError(f"arc {a!r} assigned to side {s!r}; expected 1 or 2")
        side[a] = v1 if s == 1 else v2
    arcs = []
    for a in g.edges:
        t = side[a.id] if a.tail == v else a.tail
        h = side[a.id] if a.head == v else a.head
        arcs.append((a.id, t, h))
    arcs.append((eid, v1, v2) if forward else (eid, v2, v1))
    verts = [x for x in g.vertices if x != v] + [v1, v2]
    return Digraph(verts, arcs), eid


def expansion_failure(g: Digraph, e: str) -> str | None:
    """Why ``e`` is not a consistent expansion arc, or None when it is."""
    a = g.edge(e)
    out1 = [b.id for b in g.out_arcs(a.tail) if b.id != e]
    in2 = [b.id for b in g.in_arcs(a.head) if b.id != e]
    if out1 and in2:
        return (f"tail {a.tail!r} is not a sink without {e!r} (out-arcs {out1}) and "
                f"head {a.head!r} is not a source without {e!r} (in-arcs {in2})")
    return None


def is_consistent_expansion(g: Digraph, e: str) -> bool:
    """True iff, without ``e``, its tail has out-degree 0 or its head has in-degree 0."""
    return expansion_failure(g, e) is None


def consistent_contract(g: Digraph, e: str, merged: str | None = None) -> tuple[Digraph, str]:
    """Contract a consistent arc; returns the new digraph and the merged vertex.

    Arcs that would become loops are dropped, parallel arcs are kept.  The
    merged vertex is named ``merged`` or keeps the tail's name.
    """
    why = expansion_failure(g, e)
    if why is not None:
        raise ContractionError(f"arc {e!r} is not a consistent contraction: {why}")
    a = g.edge(e)
    m = merged or a.tail
    if m in g and m not in (a.tail, a.head):
        raise GraphError(f"vertex name {m!r} already in use")

    def rename(x):
        return m if x in (a.tail, a.head) else x

    arcs = []
    for b in g.edges:
        t, h = rename(b.tail), rename(b.head)
        if t != h:
            arcs.append((b.id, t, h))
    verts = [x for x in g.vertices if x not in (a.tail, a.head)] + [m]
    return Digraph(verts, arcs), m


def legal_expansions(g: Digraph, v: str) -> Iterable[dict[str, int]]:
    """Every side assignment at ``v`` whose forward expansion is consistent.

    Consistent means side 1 gets no out-arcs (v.1 a sink) or side 2 gets
    no in-arcs (v.2 a source).
    """
    inc = g.incident(v)
    seen = set()
    for mask in range(1 << len(inc)):
        split = {a.id: 1 + ((mask >> i) & 1) for i, a in enumerate(inc)}
        sink1 = all(split[a.id] == 2 for a in g.out_arcs(v))
        source2 = all(split[a.id] == 1 for a in g.in_arcs(v))
        key = tuple(sorted(split.items()))
        if (sink1 or source2) and key not in seen:
            seen.add(key)
            yield split


# -- partitions and witnesses ----------------------------------------------------

@dataclass(frozen=True)
class Partition:
    """Blocks V_0..V_r of a host vertex set."""

    blocks: tuple[frozenset, ...]
    block_map: Mapping[str, int] = field(compare=False, default_factory=dict)

    def __init__(self, blocks: Iterable[Iterable[str]]):
        bl = tuple(frozenset(b) for b in blocks)
        bm: dict[str, int] = {}
        for i, b in enumerate(bl):
            if not b:
                raise WitnessError(f"block {i} is empty")
            for v in b:
                if v in bm:
                    raise WitnessError(f"vertex {v!r} lies in blocks {bm[v]} and {i}")
                bm[v] = i
        object.__setattr__(self, "blocks", bl)
        object.__setattr__(self, "block_map", bm)

    def covers(self, g: Digraph) -> None:
        extra = set(self.block_map) - set(g.vertices)
        if extra:
            raise WitnessError(f"partition names vertices not in the host: {sorted(extra, key=vkey)}")
        missing = set(g.vertices) - set(self.block_map)
        if missing:
            raise WitnessError(f"partition misses host vertices: {sorted(missing, key=vkey)}")

    def to_dict(self) -> dict:
        return {"blocks": [sorted(b, key=vkey) for b in self.blocks]}

    @classmethod
    def from_dict(cls, data: Mapping) -> "Partition":
        if not isinstance(data, Mapping) or not isinstance(data.get("blocks"), list):
            raise GraphFormatError("partition needs a 'blocks' list", "$")
        for i, b in enumerate(data["blocks"]):
            if not isinstance(b, list) or not all(isinstance(v, str) for v in b):
                raise GraphFormatError("block must be a list of vertex strings", f"$.blocks[{i}]")
        try:
            return cls(data["blocks"])
        except WitnessError as exc:
            raise GraphFormatError(str(exc), "$.blocks") from None


@dataclass
class MinorWitness:
    """A partition of the host plus, per pattern arc, a host arc realizing it.

    Block ``i`` stands for ``pattern.vertices[i]``.  Pattern arcs missing
    from ``edge_realization`` are realized by the first suitable host arc.
    """

    partition: Partition
    pattern: Digraph
    edge_realization: dict[str, str] = field(default_factory=dict)


@dataclass
class MinorCheck:
    ok: bool
    mode: str
    failure: str | None
    realization: dict[str, str]
    hamiltonian: dict[int, Cycle]

    def __bool__(self) -> bool:
        return self.ok


MODES = ("weak", "strong", "hcyclic")


def check_minor_witness(g: Digraph, w: MinorWitness, mode: str = "weak") -> MinorCheck:
    """Check a witnessed weak, strong or H-cyclic subcontraction of ``g`` onto ``w.pattern``.

    Blocks must induce weakly connected, strongly connected, or
    Hamiltonian-cyclic subdigraphs respectively; every pattern arc must be
    realized by a host arc between the right blocks.  ``failure`` names the
    first failing block or arc; for ``hcyclic`` the Hamiltonian directed
    cycle of each multi-vertex block is returned.
    """
    if mode not in MODES:
        raise WitnessError(f"unknown mode {mode!r}")
    part, pat = w.partition, w.pattern
    part.covers(g)
    if len(part.blocks) != len(pat.vertices):
        raise WitnessError(f"{len(part.blocks)} blocks for a pattern on {len(pat.vertices)} vertices")
    block_of = {v: i for i, v in enumerate(pat.vertices)}
    for pe, he in w.edge_realization.items():
        if not pat.has_edge(pe) or not g.has_edge(he):
            raise WitnessError(f"realization {pe!r} -> {he!r} names a missing arc")

    failure = None
    hams: dict[int, Cycle] = {}
    for i, block in enumerate(part.blocks):
        if len(block) == 1:
            continue
        sub = g.subgraph(block)
        if mode == "weak" and not is_weakly_connected(sub):
            failure = f"block {i} ({pat.vertices[i]}) is not weakly connected"
        elif mode == "strong" and not is_strongly_connected(sub):
            failure = f"block {i} ({pat.vertices[i]}) is not strongly connected"
        elif mode == "hcyclic":
            c = hamiltonian_directed_cycle(sub)
            if c is None:
                failure = f"block {i} ({pat.vertices[i]}) has no Hamiltonian directed cycle"
            else:
                hams[i] = c
        if failure:
            break

    real: dict[str, str] = {}
    if failure is None:
        for pa in pat.edges:
            bi, bj = block_of[pa.tail], block_of[pa.head]
            he = w.edge_realization.get(pa.id)
            if he is None:
                he = next((a.id for a in g.edges
                           if part.block_map[a.tail] == bi and part.block_map[a.head] == bj), None)
                if he is None:
                    failure = f"pattern arc {pa.id!r} has no host arc from block {bi} to block {bj}"
                    break
            a = g.edge(he)
            if part.block_map[a.tail] != bi or part.block_map[a.head] != bj:
                failure = f"host arc {he!r} does not run from block {bi} to block {bj}"
                break
            real[pa.id] = he
    return MinorCheck(failure is None, mode, failure, real, hams)


def merge_witness(g: Digraph, blocks: Sequence[Iterable[str]]) -> MinorWitness:
    """Witness for contracting each listed block to one vertex; the pattern is the quotient.

    Quotient arcs keep the id of the first host arc between two blocks;
    arcs inside a block disappear.  Pattern vertex ``i`` is named by the
    smallest host vertex in block ``i``.
    """
    covered = set().union(*map(set, blocks)) if blocks else set()
    full = [sorted(b, key=vkey) for b in blocks] + [[v] for v in g.vertices if v not in covered]
    full.sort(key=lambda b: vkey(b[0]))
    part = Partition(full)
    names = [b[0] for b in full]
    seen = {}
    for a in g.edges:
        i, j = part.block_map[a.tail], part.block_map[a.head]
        if i != j and (i, j) not in seen:
            seen[(i, j)] = a.id
    pat = Digraph(names, [(eid, names[i], names[j]) for (i, j), eid in seen.items()])
    # Digraph sorts its vertices; blocks must follow the same order
    order = [names.index(v) for v in pat.vertices]
    part = Partition([full[k] for k in order])
    return MinorWitness(part, pat, {eid: eid for eid in seen.values()})


# -- subdigraph search -------------------------------------------------------------

class PatternTooLarge(ValueError):
    pass


def find_subdigraph(g: Digraph, pattern: Digraph) -> dict[str, str] | None:
    """Injective vertex map carrying every pattern arc onto a host arc, or None.

    Parallel pattern arcs need as many parallel host arcs.  Exact
    backtracking with degree pruning; the pattern may have at most
    ``MAX_PATTERN`` vertices.
    """
    if len(pattern.vertices) > MAX_PATTERN:
        raise PatternTooLarge(f"pattern has {len(pattern.vertices)} vertices; the limit is {MAX_PATTERN}")
    if len(pattern.vertices) > len(g.vertices):
        return None

    def mult(h: Digraph) -> dict[tuple[str, str], int]:
        m: dict[tuple[str, str], int] = {}
        for a in h.edges:
            m[(a.tail, a.head)] = m.get((a.tail, a.head), 0) + 1
        return m

    hm, pm = mult(g), mult(pattern)
    hout = {v: len(g.successors(v)) for v in g.vertices}
    hin = {v: len(g.predecessors(v)) for v in g.vertices}
    pout = {v: len(pattern.successors(v)) for v in pattern.vertices}
    pin = {v: len(pattern.predecessors(v)) for v in pattern.vertices}

    # place high-degree pattern vertices first, each next one adjacent to the placed ones when possible
    order: list[str] = []
    rest = set(pattern.vertices)
    while rest:
        def score(x):
            links = sum(1 for y in order if (x, y) in pm or (y, x) in pm)
            return (-links, -(pout[x] + pin[x]), vkey(x))
        x = min(rest, key=score)
        order.append(x)
        rest.discard(x)

    assign: dict[str, str] = {}
    used: set[str] = set()

    def fits(x: str, v: str) -> bool:
        if hout[v] < pout[x] or hin[v] < pin[x]:
            return False
        for y, w in assign.items():
            if pm.get((x, y), 0) > hm.get((v, w), 0) or pm.get((y, x), 0) > hm.get((w, v), 0):
                return False
        return True

    def search(k: int) -> bool:
        if k == len(order):
            return True
        x = order[k]
        for v in g.vertices:
            if v not in used and fits(x, v):
                assign[x] = v
                used.add(v)
                if search(k + 1):
                    return True
                del assign[x]
                used.discard(v)
        return False

    return dict(assign) if search(0) else None


def is_subdigraph_map(g: Digraph, pattern: Digraph, m: Mapping[str, str]) -> bool:
    if len(set(m.values())) != len(m) or set(m) != set(pattern.vertices):
        return False
    need: dict[tuple[str, str], int] = {}
    for a in pattern.edges:
        k = (m[a.tail], m[a.head])
        need[k] = need.get(k, 0) + 1
    return all(len(g.arcs_between(u, v)) >= c for (u, v), c in need.items())


# -- density -------------------------------------------------------------------------

@dataclass
class DensityVerdict:
    """``kind`` is ``below_threshold`` or ``dk6_found``; ``mapping`` sends DK6 vertices to host vertices."""

    kind: str
    n: int
    arcs: int
    threshold: Fraction
    symmetric_pairs: int | None = None
    mapping: dict[str, str] | None = None

    @property
    def density(self) -> Fraction:
        return Fraction(self.arcs, self.n * self.n) if self.n else Fraction(0)

    def to_dict(self) -> dict:
        return {
            "verdict": self.kind,
            "n": self.n,
            "arcs": self.arcs,
            "threshold": str(self.threshold),
            "density": str(self.density),
            "symmetric_pairs": self.symmetric_pairs,
            "mapping": self.mapping,
        }


def distinct_arc_count(g: Digraph) -> int:
    """Number of ordered vertex pairs joined by at least one arc."""
    return len({(a.tail, a.head) for a in g.edges})


def symmetric_pair_graph(g: Digraph) -> Digraph:
    """Symmetric digraph on the pairs joined by arcs in both directions."""
    pairs = {(a.tail, a.head) for a in g.edges}
    arcs = []
    for u, v in sorted(pairs, key=lambda p: (vkey(p[0]), vkey(p[1]))):
        if (v, u) in pairs:
            arcs.append((f"{u}>{v}", u, v))
    return Digraph(g.vertices, arcs)


def density_certificate(g: Digraph) -> DensityVerdict:
    """Above 9/10 n^2 arcs, exhibit a symmetric six-clique; otherwise say so.

    Arcs are counted as distinct ordered pairs, so parallel copies add
    nothing.  Above the threshold the symmetric pairs number more than
    (4/5) n^2 / 2, and by Turan's bound they contain a K6, which is found
    by exact search and returned as a DK6 vertex map.
    """
    n = len(g.vertices)
    m = distinct_arc_count(g)
    thr = DENSITY_RATIO * n * n
    if m <= thr:
        return DensityVerdict("below_threshold", n, m, thr)
    sym = symmetric_pair_graph(g)
    pairs = len(sym.edges) // 2
    if not pairs > TURAN_RATIO * n * n / 2:
        raise AssertionError(f"{pairs} symmetric pairs do not exceed (4/5) n^2 / 2 for n = {n}")
    dk6 = complete_symmetric(6)
    mp = find_subdigraph(sym, dk6)
    if mp is None or not is_subdigraph_map(g, dk6, mp):
        raise AssertionError("Turan's bound promised a symmetric six-clique that the search did not find")
    return DensityVerdict("dk6_found", n, m, thr, pairs, mp)


def random_dense_digraph(n: int, arcs: int, seed: int = 0) -> Digraph:
    """Uniformly random simple digraph on vertices "1".."n" with exactly ``arcs`` arcs."""
    cap = n * (n - 1)
    if arcs > cap:
        raise ValueError(f"a simple digraph on {n} vertices has at most {cap} arcs; {arcs} requested")
    rng = random.Random(seed)
    pairs = [(str(i), str(j)) for i in range(1, n + 1) for j in range(1, n + 1) if i != j]
    chosen = rng.sample(pairs, arcs)
    return Digraph([str(i) for i in range(1, n + 1)], [(f"{u}>{v}", u, v) for u, v in chosen])


def dense_threshold_arcs(n: int) -> int:
    """Fewest arcs strictly above 9/10 n^2."""
    return int(DENSITY_RATIO * n * n) + 1
