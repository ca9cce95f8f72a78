"""Piecewise-linear spatial embeddings with exact rational coordinates."""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Sequence

import numpy as np

from .diagram import (
    DegenerateProjection,
    Direction,
    NonGeneric,
    arf_from_determinant,
    crossing,
    direction_schedule,
    knot_diagram,
    polygon_linking_number,
    shear,
)
from .digraph import Cycle, Digraph, GraphError, GraphFormatError, symmetric_double
from .geometry import (
    _on_segment_collinear,
    add,
    collinear,
    coplanar_candidates,
    cross,
    dot,
    fmt_rational,
    lerp,
    normalize,
    scale,
    segment_sqdist,
    segments_intersect,
    sub,
    touch_only_at,
)


class EmbeddingError(ValueError):
    """The polylines do not form a valid embedding."""


def moment(t) -> tuple:
    return (t, t * t, t * t * t)


@dataclass
class PLEmbedding:
    """Vertices at rational points, edges as polylines from tail to head."""

    graph: Digraph
    vertex_pos: dict[str, tuple]
    edge_path: dict[str, tuple]
    named_cycles: dict[str, list] = field(default_factory=dict)

    def segments(self) -> list[tuple[str, int, tuple, tuple]]:
        out = []
        for a in self.graph.edges:
            pts = self.edge_path[a.id]
            for i in range(len(pts) - 1):
                out.append((a.id, i, pts[i], pts[i + 1]))
        return out

    def validate(self) -> None:
        """Exact check that distinct segments meet only at shared graph vertices.

        Raises:
            EmbeddingError: naming the first offending edge or segment pair.
        """
        g = self.graph
        posset: dict[tuple, str] = {}
        for v in g.vertices:
            if v not in self.vertex_pos:
                raise EmbeddingError(f"vertex {v} has no position")
            p = self.vertex_pos[v]
            if p in posset:
                raise EmbeddingError(f"vertices {posset[p]} and {v} share a position")
            posset[p] = v
        for a in g.edges:
            pts = self.edge_path.get(a.id)
            if pts is None or len(pts) < 2:
                raise EmbeddingError(f"edge {a.id} has no polyline")
            if pts[0] != self.vertex_pos[a.tail] or pts[-1] != self.vertex_pos[a.head]:
                raise EmbeddingError(f"edge {a.id} polyline does not run from its tail to its head")
            for p in pts[1:-1]:
                if p in posset:
                    raise EmbeddingError(f"edge {a.id} passes through vertex {posset[p]}")
            for i in range(len(pts) - 1):
                if pts[i] == pts[i + 1]:
                    raise EmbeddingError(f"edge {a.id} has a zero-length segment")
        segs = self.segments()
        lonely = [v for v in g.vertices if not g.incident(v)]
        for v in lonely:
            p = self.vertex_pos[v]
            for e, i, a, b in segs:
                if collinear(a, b, p) and _on_segment_collinear(p, a, b):
                    raise EmbeddingError(f"edge {e} passes through vertex {v}")
        n = len(segs)
        if n < 2:
            return
        pid: dict[tuple, int] = {}
        ends = np.array([[pid.setdefault(s[2], len(pid)), pid.setdefault(s[3], len(pid))] for s in segs])
        P0 = np.array([[float(c) for c in s[2]] for s in segs])
        P1 = np.array([[float(c) for c in s[3]] for s in segs])
        lo, hi = np.minimum(P0, P1), np.maximum(P0, P1)
        slack = 1e-9 * (1.0 + np.abs(hi).max())
        for i in range(n - 1):
            j = np.arange(i + 1, n)
            box = np.all((lo[j] <= hi[i] + slack) & (hi[j] >= lo[i] - slack), axis=1)
            shared = (ends[j, 0] == ends[i, 0]) | (ends[j, 0] == ends[i, 1]) | \
                     (ends[j, 1] == ends[i, 0]) | (ends[j, 1] == ends[i, 1])
            k = j[box]
            if not len(k):
                continue
            unsure = coplanar_candidates(np.repeat(P0[i:i + 1], len(k), 0), np.repeat(P1[i:i + 1], len(k), 0),
                                         P0[k], P1[k])
            for jj in k[unsure | shared[box]]:
                self._check_pair(segs[i], segs[jj], posset)

    @staticmethod
    def _check_pair(s, t, posset) -> None:
        e1, i1, p0, p1 = s
        e2, i2, q0, q1 = t
        common = {p0, p1} & {q0, q1}
        where = f"segments {e1}[{i1}] and {e2}[{i2}]"
        if len(common) == 2:
            raise EmbeddingError(f"{where} coincide")
        if len(common) == 1:
            c = next(iter(common))
            joint = e1 == e2 and abs(i1 - i2) == 1
            if c not in posset and not joint:
                raise EmbeddingError(f"{where} meet at a point that is not a graph vertex")
            if not touch_only_at(p0, p1, q0, q1, c):
                raise EmbeddingError(f"{where} overlap")
            return
        if segments_intersect(p0, p1, q0, q1):
            raise EmbeddingError(f"{where} intersect")

    def polygon(self, c: Cycle) -> list[tuple]:
        """The closed polygon traced by a cycle, as its list of corner points."""
        pts: list[tuple] = []
        for eid, fwd in c.steps:
            path = self.edge_path[eid]
            if not fwd:
                path = path[::-1]
            pts.extend(path[:-1])
        return pts

    # -- JSON ---------------------------------------------------------------
    def to_dict(self) -> dict:
        d = {
            "vertices": {v: [fmt_rational(x) for x in self.vertex_pos[v]] for v in self.graph.vertices},
            "edges": {a.id: [[fmt_rational(x) for x in p] for p in self.edge_path[a.id]] for a in self.graph.edges},
        }
        if self.named_cycles:
            d["cycles"] = self.named_cycles
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=1, sort_keys=True)

    @classmethod
    def from_dict(cls, data: Mapping, graph: Digraph | None = None) -> "PLEmbedding":
        """Load an embedding; without ``graph`` the arcs are read off the polyline endpoints."""
        try:
            pos = {v: normalize(p) for v, p in data["vertices"].items()}
            paths = {e: tuple(normalize(p) for p in pts) for e, pts in data["edges"].items()}
        except (KeyError, TypeError, ValueError, ZeroDivisionError, AttributeError) as exc:
            raise GraphFormatError(f"bad embedding data: {exc}", "$") from None
        if graph is None:
            at = {p: v for v, p in pos.items()}
            arcs = []
            for e, pts in paths.items():
                if pts[0] not in at or pts[-1] not in at:
                    raise GraphFormatError(f"edge {e} does not start and end at vertices", f"$.edges.{e}")
                arcs.append((e, at[pts[0]], at[pts[-1]]))
            try:
                graph = Digraph(pos, arcs)
            except GraphError as exc:
                raise GraphFormatError(str(exc), "$.edges") from None
        missing = [a.id for a in graph.edges if a.id not in paths]
        if missing:
            raise GraphFormatError(f"no polyline for edges {missing[:5]}", "$.edges")
        return cls(graph, pos, paths, dict(data.get("cycles", {})))

    @classmethod
    def from_json(cls, text: str, graph: Digraph | None = None) -> "PLEmbedding":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise GraphFormatError(exc.msg, f"line {exc.lineno} column {exc.colno}") from None
        return cls.from_dict(data, graph)

    def named_cycle(self, name: str) -> Cycle:
        """A cycle stored in the fixture under ``name``, or given as ``"e1,-e2,e3"``."""
        from .digraph import cycle_from_steps

        signed = self.named_cycles.get(name, name.split(",") if isinstance(name, str) else name)
        steps = [(s[1:], False) if s.startswith("-") else (s, True) for s in signed]
        return cycle_from_steps(self.graph, steps)


# -- construction -----------------------------------------------------------------

def spatial_realize(g: Digraph, seed: int = 0, check: bool = True) -> PLEmbedding:
    """Straight-line embedding with every point on the moment curve (t, t^2, t^3).

    Vertices get the parameters 0..n-1 in a seeded random order.  The first
    arc between two vertices is a straight chord; every further arc between
    the same pair (parallel or antiparallel) bends once at a fresh curve
    point.  Distinct points on the moment curve have no four coplanar, so
    the result is always a valid embedding.
    """
    rng = random.Random(seed)
    params = list(range(len(g.vertices)))
    rng.shuffle(params)
    pos = {v: moment(t) for v, t in zip(g.vertices, params)}
    paths = {}
    used: set[frozenset] = set()
    bend = len(params)
    for a in g.edges:
        pair = frozenset((a.tail, a.head))
        if pair in used:
            paths[a.id] = (pos[a.tail], moment(bend), pos[a.head])
            bend += 1
        else:
            used.add(pair)
            paths[a.id] = (pos[a.tail], pos[a.head])
    emb = PLEmbedding(g, pos, paths)
    if check:
        emb.validate()
    return emb


def _clearance_sq(emb: PLEmbedding) -> Fraction:
    """Smallest squared distance between two segments that share no endpoint."""
    segs = emb.segments()
    best = None
    for i in range(len(segs)):
        for j in range(i + 1, len(segs)):
            s, t = segs[i], segs[j]
            if {s[2], s[3]} & {t[2], t[3]}:
                continue
            d = segment_sqdist(s[2], s[3], t[2], t[3])
            if best is None or d < best:
                best = d
    return Fraction(1) if best is None else best


def _offset_step(limit_sq: Fraction) -> Fraction:
    """Largest power of two strictly below sqrt(limit_sq)."""
    d = Fraction(1)
    while d * d >= limit_sq:
        d /= 2
    while (2 * d) * (2 * d) < limit_sq:
        d *= 2
    return d


_AXES = [(0, 0, 1), (0, 1, 0), (1, 0, 0), (1, 2, 3), (3, -1, 2), (-2, 3, 1), (1, -3, 5)]


def double_embedding(emb: PLEmbedding, max_halvings: int = 40) -> PLEmbedding:
    """Embed the symmetric double of ``emb``'s underlying graph inside thin tubes.

    Each edge becomes two polylines displaced by +-offset from its own
    polyline (straight edges first get their midpoint as a corner), so each
    antiparallel pair bounds a thin disk inside the tube.  The offset is
    below half the clearance between non-adjacent segments and is halved
    until exact validation passes.
    """
    g = emb.graph
    dg = symmetric_double(g)
    base = {}
    for a in g.edges:
        pts = emb.edge_path[a.id]
        if len(pts) == 2:
            pts = (pts[0], lerp(pts[0], pts[1], Fraction(1, 2)), pts[1])
        base[a.id] = pts
    dirs = {}
    for a in g.edges:
        pts = base[a.id]
        for u in _AXES:
            if all(cross(sub(pts[i + 1], pts[i]), u) != (0, 0, 0) for i in range(len(pts) - 1)):
                dirs[a.id] = u
                break
    limit = _clearance_sq(emb) / 4
    delta = _offset_step(limit / max(dot(u, u) for u in dirs.values())) if dirs else Fraction(1)
    for _ in range(max_halvings):
        paths = {}
        for a in g.edges:
            pts, u = base[a.id], dirs[a.id]
            plus = (pts[0],) + tuple(add(p, scale(delta, u)) for p in pts[1:-1]) + (pts[-1],)
            minus = (pts[0],) + tuple(sub(p, scale(delta, u)) for p in pts[1:-1]) + (pts[-1],)
            paths[f"{a.id}+"] = plus
            paths[f"{a.id}-"] = minus[::-1]
        out = PLEmbedding(dg, dict(emb.vertex_pos), paths)
        try:
            out.validate()
            return out
        except EmbeddingError:
            delta /= 2
    raise EmbeddingError("could not find a valid tube offset")


def contract_path_embedding(emb: PLEmbedding, path: Sequence[str], max_halvings: int = 40) -> PLEmbedding:
    """Contract a directed path (given by its arc ids) to its first vertex.

    Arcs with both ends on the path are dropped.  Every other arc meeting
    the path at v_i is rerouted along a translate of the path polyline from
    v_i back to v_0, each arc with its own small offset, which mirrors
    shrinking the path by an ambient isotopy.  Curves missing the path are
    untouched.
    """
    g = emb.graph
    if not path:
        return PLEmbedding(g, dict(emb.vertex_pos), dict(emb.edge_path), dict(emb.named_cycles))
    arcs = [g.edge(e) for e in path]
    verts = [arcs[0].tail]
    for a in arcs:
        if a.tail != verts[-1]:
            raise GraphError(f"arc {a.id} does not continue the path")
        verts.append(a.head)
    if len(set(verts)) != len(verts):
        raise GraphError("path repeats a vertex")
    on_path = set(verts)
    v0 = verts[0]
    # corner points of the path polyline and where each path vertex sits on it
    trace = [emb.vertex_pos[v0]]
    where = {v0: 0}
    for a in arcs:
        trace.extend(emb.edge_path[a.id][1:])
        where[a.head] = len(trace) - 1
    pos = {v: p for v, p in emb.vertex_pos.items() if v not in on_path or v == v0}
    new_arcs = []
    moved = []
    for a in g.edges:
        t_in, h_in = a.tail in on_path, a.head in on_path
        if t_in and h_in:
            continue
        tail = v0 if t_in else a.tail
        head = v0 if h_in else a.head
        new_arcs.append((a.id, tail, head))
        if (t_in and a.tail != v0) or (h_in and a.head != v0):
            moved.append(a)
    ng = Digraph(pos, new_arcs)
    segs = [(trace[i], trace[i + 1]) for i in range(len(trace) - 1)]
    u = _path_offset_axis(segs)
    limit = _clearance_sq(emb) / 4
    delta = _offset_step(limit / (dot(u, u) * (len(moved) + 1) ** 2))
    for _ in range(max_halvings):
        paths = {a.id: emb.edge_path[a.id] for a in g.edges if ng.has_edge(a.id)}
        for j, a in enumerate(moved, start=1):
            off = scale(j * delta, u)
            pts = emb.edge_path[a.id]
            if a.head in on_path:
                k = where[a.head]
                detour = tuple(add(trace[i], off) for i in range(k, 0, -1))
                paths[a.id] = tuple(pts[:-1]) + detour + (trace[0],)
            else:
                k = where[a.tail]
                detour = tuple(add(trace[i], off) for i in range(1, k + 1))
                paths[a.id] = (trace[0],) + detour + tuple(pts[1:])
        out = PLEmbedding(ng, pos, paths)
        try:
            out.validate()
            return out
        except EmbeddingError:
            delta /= 2
    raise EmbeddingError("could not reroute arcs along the contracted path")


def _path_offset_axis(segs) -> tuple:
    for u in _AXES:
        if any(cross(sub(b, a), u) == (0, 0, 0) for a, b in segs):
            continue
        if any(dot(cross(sub(segs[i][1], segs[i][0]), sub(segs[i + 1][1], segs[i + 1][0])), u) == 0
               for i in range(len(segs) - 1)):
            continue
        return u
    raise EmbeddingError("no offset direction avoids the path's planes")


# -- invariants -----------------------------------------------------------------

def linking_number(emb: PLEmbedding, c1: Cycle, c2: Cycle, direction: Direction | None = None) -> int:
    """Linking number of two vertex-disjoint cycles of the embedding.

    Raises:
        ValueError: the cycles share a vertex.
        DegenerateProjection: no generic direction was found.
    """
    if c1.vertex_set & c2.vertex_set:
        raise ValueError("linking number needs vertex-disjoint cycles")
    return polygon_linking_number(emb.polygon(c1), emb.polygon(c2), direction)


@dataclass(frozen=True)
class KnotCertificate:
    cycle: Cycle
    determinant: int
    arf: int
    crossing_count: int

    @property
    def nontrivial(self) -> bool:
        """Determinant other than 1 proves the cycle is knotted; 1 settles nothing."""
        return self.determinant != 1

    @property
    def status(self) -> str:
        return "knotted" if self.nontrivial else "unresolved"


def knot_certificate(emb: PLEmbedding, c: Cycle, direction: Direction | None = None) -> KnotCertificate:
    diag = knot_diagram(emb.polygon(c), direction)
    det = diag.determinant()
    return KnotCertificate(c, det, arf_from_determinant(det), len(diag.crossings))


class CrossingForm:
    """Linking numbers as a bilinear form on signed edge chains.

    ``matrix[e, f]`` is the signed number of crossings where arc ``e`` (run
    tail to head) passes over arc ``f`` in one projection that is generic
    for every pair of vertex-disjoint arcs.  For disjoint cycles with
    signed incidence vectors x, y the linking number is x @ matrix @ y.
    """

    def __init__(self, emb: PLEmbedding, direction: Direction | None = None):
        self.emb = emb
        self.index = {a.id: i for i, a in enumerate(emb.graph.edges)}
        directions = [direction] if direction is not None else direction_schedule()
        for d in directions:
            try:
                self.matrix = self._build(d)
                self.direction = d
                return
            except NonGeneric:
                continue
        raise DegenerateProjection("no direction is generic for all disjoint arc pairs")

    def _build(self, d) -> np.ndarray:
        g = self.emb.graph
        segs = []
        for a in g.edges:
            pts = [shear(p, d) for p in self.emb.edge_path[a.id]]
            for i in range(len(pts) - 1):
                if pts[i][:2] == pts[i + 1][:2]:
                    raise NonGeneric("segment projects to a point")
                segs.append((self.index[a.id], a.tail, a.head, pts[i], pts[i + 1]))
        m = np.zeros((len(g.edges), len(g.edges)), dtype=np.int64)
        for i in range(len(segs)):
            ei, ti, hi, p0, p1 = segs[i]
            for j in range(i + 1, len(segs)):
                ej, tj, hj, q0, q1 = segs[j]
                if ti in (tj, hj) or hi in (tj, hj):
                    continue
                c = crossing((p0, p1), (q0, q1))
                if c is None:
                    continue
                if c[2]:
                    m[ei, ej] += c[3]
                else:
                    m[ej, ei] += c[3]
        return m

    def vector(self, c: Cycle) -> np.ndarray:
        x = np.zeros(len(self.index), dtype=np.int64)
        for eid, fwd in c.steps:
            x[self.index[eid]] += 1 if fwd else -1
        return x

    def lk(self, c1: Cycle, c2: Cycle) -> int:
        return int(self.vector(c1) @ self.matrix @ self.vector(c2))
