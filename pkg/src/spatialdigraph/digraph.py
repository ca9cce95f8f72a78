"""Directed multigraphs, cycles, and cycle enumeration.

Vertex and edge identifiers are strings.  Vertices are ordered with a
natural sort (``"v2" < "v10"``) so canonical cycle forms and JSON exports
are deterministic.
"""

from __future__ import annotations

import json
import re
from collections import deque
from dataclasses import dataclass
from itertools import combinations, product
from typing import Iterable, Iterator, Mapping, NamedTuple, Sequence

DEFAULT_CYCLE_CAP = 10**6

_CHUNK = re.compile(r"(\d+)")


class GraphError(ValueError):
    """Structural error in a digraph (bad ids, self-loops, missing members)."""


class CycleLimitError(RuntimeError):
    """Raised when a cycle enumeration exceeds its configured cap."""

    def __init__(self, cap: int):
        super().__init__(f"cycle enumeration exceeded cap of {cap} cycles")
        self.cap = cap


class GraphFormatError(ValueError):
    """Malformed graph JSON.  ``location`` names the offending line or JSON path."""

    def __init__(self, message: str, location: str | None = None):
        super().__init__(f"{location}: {message}" if location else message)
        self.location = location


def vkey(v: str) -> tuple:
    """Natural sort key for vertex and edge identifiers."""
    return tuple((0, int(c), "") if c.isdigit() else (1, 0, c) for c in _CHUNK.split(str(v)) if c)


class Arc(NamedTuple):
    id: str
    tail: str
    head: str


class Digraph:
    """Immutable directed multigraph.

    Parallel arcs and antiparallel pairs are allowed, self-loops are not.
    ``meta`` carries constructor annotations (twin tables, labels, flags)
    and is exported with the graph.
    """

    __slots__ = ("vertices", "edges", "meta", "_by_id", "_out", "_in", "_index")

    def __init__(self, vertices: Iterable[str], edges: Iterable[tuple[str, str, str]],
                 meta: Mapping | None = None):
        verts = sorted(set(vertices), key=vkey)
        vset = set(verts)
        arcs: list[Arc] = []
        by_id: dict[str, Arc] = {}
        out: dict[str, list[Arc]] = {v: [] for v in verts}
        inc: dict[str, list[Arc]] = {v: [] for v in verts}
        for eid, tail, head in edges:
            if eid in by_id:
                raise GraphError(f"duplicate edge id {eid!r}")
            if tail not in vset or head not in vset:
                raise GraphError(f"edge {eid!r} has an endpoint outside the vertex set")
            if tail == head:
                raise GraphError(f"edge {eid!r} is a self-loop at {tail!r}")
            arc = Arc(eid, tail, head)
            arcs.append(arc)
            by_id[eid] = arc
            out[tail].append(arc)
            inc[head].append(arc)
        self.vertices: tuple[str, ...] = tuple(verts)
        self.edges: tuple[Arc, ...] = tuple(arcs)
        self.meta: dict = dict(meta or {})
        self._by_id = by_id
        self._out = {v: tuple(a) for v, a in out.items()}
        self._in = {v: tuple(a) for v, a in inc.items()}
        self._index = {v: i for i, v in enumerate(verts)}

    def __repr__(self) -> str:
        return f"Digraph(|V|={len(self.vertices)}, |E|={len(self.edges)})"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Digraph):
            return NotImplemented
        return self.vertices == other.vertices and set(self.edges) == set(other.edges)

    def __hash__(self) -> int:
        return hash((self.vertices, frozenset(self.edges)))

    def __contains__(self, v: str) -> bool:
        return v in self._index

    def edge(self, eid: str) -> Arc:
        try:
            return self._by_id[eid]
        except KeyError:
            raise GraphError(f"no edge {eid!r}") from None

    def has_edge(self, eid: str) -> bool:
        return eid in self._by_id

    def out_arcs(self, v: str) -> tuple[Arc, ...]:
        return self._out[v]

    def in_arcs(self, v: str) -> tuple[Arc, ...]:
        return self._in[v]

    def incident(self, v: str) -> tuple[Arc, ...]:
        return self._out[v] + self._in[v]

    def arcs_between(self, u: str, v: str) -> list[Arc]:
        """Arcs with tail ``u`` and head ``v``."""
        return [a for a in self._out[u] if a.head == v]

    def order(self, v: str) -> int:
        return self._index[v]

    def successors(self, v: str) -> set[str]:
        return {a.head for a in self._out[v]}

    def predecessors(self, v: str) -> set[str]:
        return {a.tail for a in self._in[v]}

    def subgraph(self, vertices: Iterable[str]) -> "Digraph":
        """Induced subdigraph."""
        keep = set(vertices)
        return Digraph(keep, [a for a in self.edges if a.tail in keep and a.head in keep])

    def edge_subgraph(self, edge_ids: Iterable[str]) -> "Digraph":
        ids = set(edge_ids)
        return Digraph(self.vertices, [a for a in self.edges if a.id in ids])

    def without_edges(self, edge_ids: Iterable[str]) -> "Digraph":
        drop = set(edge_ids)
        return Digraph(self.vertices, [a for a in self.edges if a.id not in drop], self.meta)

    def reverse_twin(self, eid: str) -> str | None:
        """The antiparallel twin recorded by :func:`symmetric_double`, if any."""
        return self.meta.get("twins", {}).get(eid)

    def underlying_edges(self) -> set[frozenset]:
        """Undirected simple edge set obtained by forgetting orientation."""
        return {frozenset((a.tail, a.head)) for a in self.edges}

    # -- JSON ---------------------------------------------------------------
    def to_dict(self) -> dict:
        d: dict = {
            "vertices": list(self.vertices),
            "edges": [{"id": a.id, "tail": a.tail, "head": a.head} for a in self.edges],
        }
        if self.meta:
            d["meta"] = self.meta
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=1, sort_keys=True)

    @classmethod
    def from_dict(cls, data: Mapping) -> "Digraph":
        if not isinstance(data, Mapping):
            raise GraphFormatError("top level must be an object", "$")
        for key in ("vertices", "edges"):
            if key not in data:
                raise GraphFormatError(f"missing key {key!r}", "$")
        verts = data["vertices"]
        if not isinstance(verts, list):
            raise GraphFormatError("must be a list", "$.vertices")
        seen: set[str] = set()
        for i, v in enumerate(verts):
            if not isinstance(v, str):
                raise GraphFormatError("vertex ids must be strings", f"$.vertices[{i}]")
            if v in seen:
                raise GraphFormatError(f"duplicate vertex id {v!r}", f"$.vertices[{i}]")
            seen.add(v)
        edges = []
        if not isinstance(data["edges"], list):
            raise GraphFormatError("must be a list", "$.edges")
        for i, e in enumerate(data["edges"]):
            loc = f"$.edges[{i}]"
            if not isinstance(e, Mapping) or not all(isinstance(e.get(k), str) for k in ("id", "tail", "head")):
                raise GraphFormatError("edge needs string fields id, tail, head", loc)
            edges.append((e["id"], e["tail"], e["head"]))
        try:
            return cls(verts, edges, data.get("meta"))
        except GraphError as exc:
            raise GraphFormatError(str(exc), "$.edges") from None

    @classmethod
    def from_json(cls, text: str) -> "Digraph":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise GraphFormatError(exc.msg, f"line {exc.lineno} column {exc.colno}") from None
        return cls.from_dict(data)


@dataclass(frozen=True)
class Cycle:
    """A simple closed walk: ``steps[i] = (edge_id, forward)`` leaves ``vertices[i]``.

    A cycle is consistent when every step follows its arc direction.
    """

    steps: tuple[tuple[str, bool], ...]
    vertices: tuple[str, ...]

    def __len__(self) -> int:
        return len(self.steps)

    @property
    def consistent(self) -> bool:
        return all(fwd for _, fwd in self.steps)

    @property
    def edge_ids(self) -> tuple[str, ...]:
        return tuple(e for e, _ in self.steps)

    @property
    def vertex_set(self) -> frozenset[str]:
        return frozenset(self.vertices)

    def reversed(self) -> "Cycle":
        """Same edges traversed the other way round (flags flip)."""
        n = len(self.steps)
        steps = tuple((e, not f) for e, f in reversed(self.steps))
        verts = tuple(self.vertices[-i % n] for i in range(n))
        return Cycle(steps, verts)

    def rotated_to_min(self) -> "Cycle":
        i = min(range(len(self.vertices)), key=lambda j: vkey(self.vertices[j]))
        return Cycle(self.steps[i:] + self.steps[:i], self.vertices[i:] + self.vertices[:i])

    def key(self, identify_reversal: bool = False) -> tuple:
        """Canonical hashable form; optionally identifies a cycle with its reversal."""
        a = self.rotated_to_min()
        ka = (tuple(map(vkey, a.vertices)), a.steps)
        if not identify_reversal:
            return ka
        b = self.reversed().rotated_to_min()
        kb = (tuple(map(vkey, b.vertices)), tuple((e, True) for e, _ in b.steps))
        ka = (ka[0], tuple((e, True) for e, _ in a.steps))
        return min(ka, kb)

    def validate(self, g: Digraph) -> None:
        n = len(self.steps)
        if n < 2 or len(self.vertices) != n:
            raise GraphError("a cycle needs at least two steps, one vertex per step")
        if len(set(self.vertices)) != n:
            raise GraphError("cycle repeats a vertex")
        if len(set(self.edge_ids)) != n:
            raise GraphError("cycle repeats an edge")
        for i, (eid, fwd) in enumerate(self.steps):
            a = g.edge(eid)
            start, end = (a.tail, a.head) if fwd else (a.head, a.tail)
            if start != self.vertices[i] or end != self.vertices[(i + 1) % n]:
                raise GraphError(f"step {i} ({eid}) does not join {self.vertices[i]} to the next vertex")


def cycle_from_steps(g: Digraph, steps: Sequence[tuple[str, bool]]) -> Cycle:
    """Build and validate a cycle from ``(edge_id, forward)`` pairs."""
    verts = []
    for eid, fwd in steps:
        a = g.edge(eid)
        verts.append(a.tail if fwd else a.head)
    c = Cycle(tuple((e, bool(f)) for e, f in steps), tuple(verts))
    c.validate(g)
    return c


def cycle_from_arcs(g: Digraph, edge_ids: Sequence[str]) -> Cycle:
    """Consistent cycle through the given arcs, in order."""
    return cycle_from_steps(g, [(e, True) for e in edge_ids])


def cycle_from_vertices(g: Digraph, vertices: Sequence[str]) -> Cycle:
    """Consistent cycle through ``vertices`` using the first arc found for each hop."""
    steps = []
    n = len(vertices)
    for i, v in enumerate(vertices):
        arcs = g.arcs_between(v, vertices[(i + 1) % n])
        if not arcs:
            raise GraphError(f"no arc {v} -> {vertices[(i + 1) % n]}")
        steps.append((arcs[0].id, True))
    return cycle_from_steps(g, steps)


# -- construction -------------------------------------------------------------

def symmetric_double(g) -> Digraph:
    """Replace every undirected edge by an antiparallel arc pair.

    ``g`` is a networkx graph, an iterable ``(vertices, edges)`` pair with
    2-tuples for edges, or a :class:`Digraph` whose orientations are
    forgotten.  Arc ``<id>+`` runs tail to head (or the listed order), its
    twin ``<id>-`` runs back; the pairing is stored in ``meta["twins"]``.
    """
    if isinstance(g, Digraph):
        verts = list(g.vertices)
        und = [(a.id, a.tail, a.head) for a in g.edges]
    elif hasattr(g, "nodes") and hasattr(g, "edges"):
        verts = [str(v) for v in g.nodes]
        und = [(f"{min(str(u), str(v), key=vkey)}~{max(str(u), str(v), key=vkey)}",) + tuple(sorted((str(u), str(v)), key=vkey))
               for u, v in g.edges]
    else:
        vs, es = g
        verts = [str(v) for v in vs]
        und = []
        for u, v in es:
            u, v = sorted((str(u), str(v)), key=vkey)
            und.append((f"{u}~{v}", u, v))
    seen = set()
    for _, u, v in und:
        if u == v:
            raise GraphError("undirected input has a loop")
        seen.add(frozenset((u, v)))
    arcs = []
    twins = {}
    for eid, u, v in sorted(und, key=lambda t: vkey(t[0])):
        arcs.append((f"{eid}+", u, v))
        arcs.append((f"{eid}-", v, u))
        twins[f"{eid}+"] = f"{eid}-"
        twins[f"{eid}-"] = f"{eid}+"
    return Digraph(verts, arcs, {"twins": twins})


# -- cycle enumeration ----------------------------------------------------------

def _dist_to(start: str, allowed_adj: dict[str, set[str]]) -> dict[str, int]:
    """BFS distances *to* ``start`` along reversed adjacency."""
    dist = {start: 0}
    q = deque([start])
    while q:
        v = q.popleft()
        for u in allowed_adj.get(v, ()):
            if u not in dist:
                dist[u] = dist[v] + 1
                q.append(u)
    return dist


def _vertex_cycles(g: Digraph, directed: bool, max_len: int | None) -> Iterator[list[str]]:
    """Yield simple vertex cycles, rotated to start at their minimal vertex.

    Directed mode yields every cycle of length >= 2 once.  Undirected mode
    yields cycles of length >= 3 once up to reversal.
    """
    order = g.order
    if directed:
        adj = {v: g.successors(v) for v in g.vertices}
        radj = {v: g.predecessors(v) for v in g.vertices}
    else:
        adj = {v: g.successors(v) | g.predecessors(v) for v in g.vertices}
        radj = adj
    min_len = 2 if directed else 3
    limit = max_len if max_len is not None else len(g.vertices)
    for s in g.vertices:
        si = order(s)
        sub_r = {v: {u for u in radj[v] if order(u) >= si} for v in g.vertices if order(v) >= si}
        dist = _dist_to(s, sub_r)
        path = [s]
        on_path = {s}
        stack = [iter(sorted((w for w in adj[s] if order(w) > si and w in dist), key=order))]
        while stack:
            w = next(stack[-1], None)
            if w is None:
                stack.pop()
                on_path.discard(path.pop())
                continue
            path.append(w)
            on_path.add(w)
            depth = len(path)
            closes = s in adj[w] and depth >= min_len
            if closes and (directed or order(path[1]) < order(w)):
                yield list(path)
            if depth < limit:
                nxt = [x for x in adj[w]
                       if x not in on_path and order(x) > si and x in dist and depth + dist[x] <= limit]
                stack.append(iter(sorted(nxt, key=order)))
            else:
                stack.append(iter(()))


def _expand(g: Digraph, vcycle: list[str], directed: bool) -> Iterator[Cycle]:
    n = len(vcycle)
    choices = []
    for i, u in enumerate(vcycle):
        v = vcycle[(i + 1) % n]
        opts = [(a.id, True) for a in g.arcs_between(u, v)]
        if not directed:
            opts += [(a.id, False) for a in g.arcs_between(v, u)]
        choices.append(opts)
    for steps in product(*choices):
        yield Cycle(tuple(steps), tuple(vcycle))


def iter_directed_cycles(g: Digraph, max_len: int | None = None) -> Iterator[Cycle]:
    for vc in _vertex_cycles(g, True, max_len):
        yield from _expand(g, vc, True)


def directed_cycles(g: Digraph, max_len: int | None = None, cap: int = DEFAULT_CYCLE_CAP) -> list[Cycle]:
    """Every simple directed cycle of length <= ``max_len``, once up to rotation.

    Cycles start at their minimal vertex.  Antiparallel pairs give 2-cycles.

    Raises:
        CycleLimitError: more than ``cap`` cycles were produced.
    """
    out = []
    for c in iter_directed_cycles(g, max_len):
        out.append(c)
        if len(out) > cap:
            raise CycleLimitError(cap)
    return out


def iter_undirected_cycles(g: Digraph, max_len: int | None = None) -> Iterator[Cycle]:
    if max_len is None or max_len >= 2:
        for u in g.vertices:
            for v in g.vertices:
                if g.order(v) <= g.order(u):
                    continue
                between = [(a.id, True) for a in g.arcs_between(u, v)] + [(a.id, False) for a in g.arcs_between(v, u)]
                for s1, s2 in combinations(between, 2):
                    # second step leaves v, so its flag is relative to v
                    yield Cycle((s1, (s2[0], not s2[1])), (u, v))
    for vc in _vertex_cycles(g, False, max_len):
        yield from _expand(g, vc, False)


def undirected_cycles(g: Digraph, max_len: int | None = None, cap: int = DEFAULT_CYCLE_CAP) -> list[Cycle]:
    """Every simple cycle of the underlying multigraph, once up to rotation and reversal.

    Step flags record whether each arc is traversed along its direction.

    Raises:
        CycleLimitError: more than ``cap`` cycles were produced.
    """
    out: list[Cycle] = []
    for c in iter_undirected_cycles(g, max_len):
        out.append(c)
        if len(out) > cap:
            raise CycleLimitError(cap)
    return out


def has_disjoint_directed_cycles(g: Digraph) -> tuple[bool, tuple[Cycle, Cycle] | None]:
    """Whether two vertex-disjoint directed cycles exist, with a witness pair."""
    for c in iter_directed_cycles(g):
        rest = g.subgraph(v for v in g.vertices if v not in c.vertex_set)
        other = next(iter_directed_cycles(rest), None)
        if other is not None:
            return True, (c, other)
    return False, None


def sources_and_sinks(g: Digraph) -> tuple[set[str], set[str]]:
    """Vertices of in-degree 0 and of out-degree 0."""
    sources = {v for v in g.vertices if not g.in_arcs(v)}
    sinks = {v for v in g.vertices if not g.out_arcs(v)}
    return sources, sinks


def _reach(start: str, adj) -> set[str]:
    seen = {start}
    stack = [start]
    while stack:
        v = stack.pop()
        for w in adj(v):
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return seen


def is_strongly_connected(g: Digraph) -> bool:
    if not g.vertices:
        return True
    v = g.vertices[0]
    n = len(g.vertices)
    return len(_reach(v, g.successors)) == n and len(_reach(v, g.predecessors)) == n


def is_weakly_connected(g: Digraph) -> bool:
    if not g.vertices:
        return True
    return len(_reach(g.vertices[0], lambda v: g.successors(v) | g.predecessors(v))) == len(g.vertices)


def hamiltonian_directed_cycle(g: Digraph) -> Cycle | None:
    """A directed cycle through every vertex, or None.  Backtracking; small graphs only."""
    n = len(g.vertices)
    if n < 2:
        return None
    s = g.vertices[0]
    path = [s]
    used = {s}

    def extend() -> list[str] | None:
        if len(path) == n:
            return list(path) if s in g.successors(path[-1]) else None
        for w in sorted(g.successors(path[-1]), key=g.order):
            if w not in used:
                path.append(w)
                used.add(w)
                found = extend()
                if found:
                    return found
                used.discard(path.pop())
        return None

    vc = extend()
    return None if vc is None else next(_expand(g, vc, True))
