"""Deterministic constructors for the graph families used in the experiments.

Gadgets are glued from copies of ``H`` (the symmetric K4,4 with the arc
b->a removed) or of its 16-arc subdigraph ``H'``.  Copy ``i`` keeps its
non-preferred vertices private (``d.i``, ``c.i``, ...) and maps its ``a``
and ``b`` to shared vertices, so the preferred arcs ``a.i -> b.i`` live
between shared vertices.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import permutations

from .digraph import Digraph, GraphError, vkey

H_LEFT = ("a", "d", "f", "h")
H_RIGHT = ("b", "c", "e", "g")
H_VERTICES = tuple(sorted(H_LEFT + H_RIGHT))
PREFERRED = ("a", "b")


def _arc_id(t: str, h: str) -> str:
    return f"{t}>{h}"


def _simple(vertices, pairs, meta=None) -> Digraph:
    return Digraph(vertices, [(_arc_id(t, h), t, h) for t, h in pairs], meta)


def dbar4() -> Digraph:
    """Four vertices in a ring, each side a pair of parallel arcs v_i -> v_{i+1}.

    ``meta["bigons"]["C1"]`` lists the two arcs between v1 and v2, and so on.
    """
    verts = [f"v{i}" for i in range(1, 5)]
    edges = []
    bigons = {}
    for i in range(1, 5):
        t, h = f"v{i}", f"v{i % 4 + 1}"
        ids = [f"C{i}a", f"C{i}b"]
        bigons[f"C{i}"] = ids
        edges += [(ids[0], t, h), (ids[1], t, h)]
    return Digraph(verts, edges, {"bigons": bigons})


def _dk44_pairs():
    return [(u, v) for u in H_LEFT for v in H_RIGHT] + [(v, u) for u in H_LEFT for v in H_RIGHT]


def graph_H() -> Digraph:
    """Symmetric K4,4 on {a,d,f,h} | {b,c,e,g} with the arc b->a removed."""
    pairs = [p for p in _dk44_pairs() if p != ("b", "a")]
    return _simple(H_VERTICES, pairs, {"preferred_edge": _arc_id(*PREFERRED)})


def graph_H_prime() -> Digraph:
    """The 16-arc orientation of K4,4 in which a->b lies only on directed 4-cycles."""
    pairs = [(u, v) for u in "dfh" for v in "ceg"]
    pairs += [("b", u) for u in "dfh"] + [(v, "a") for v in "ceg"] + [("a", "b")]
    return _simple(H_VERTICES, pairs, {"preferred_edge": _arc_id(*PREFERRED)})


@dataclass
class GadgetWiring:
    """How copies of ``H`` (or ``H'``) sit inside a glued gadget.

    ``copies`` maps copy ids to ``(kind, relabel)`` with ``kind`` in
    ``{"H", "H_prime"}`` and ``relabel`` sending the 8 template vertices to
    host vertices.  ``identification`` maps each shared host vertex to the
    ``(copy_id, role)`` pairs glued there, role being ``"a"`` or ``"b"``.
    """

    copies: dict[str, tuple[str, dict[str, str]]]
    preferred_edges: list[str]
    identification: dict[str, list[tuple[str, str]]] = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "copies": {cid: {"kind": k, "relabel": r} for cid, (k, r) in self.copies.items()},
            "preferred_edges": list(self.preferred_edges),
            "identification": {v: [list(p) for p in roles] for v, roles in self.identification.items()},
        }

    def validate(self, g: Digraph) -> None:
        """Check injectivity, copy images, preferred arcs, and that only a/b endpoints are shared."""
        templates = {"H": graph_H(), "H_prime": graph_H_prime()}
        if len(set(self.preferred_edges)) != len(self.preferred_edges):
            raise GraphError("preferred edges are not distinct")
        host_arcs = {(a.tail, a.head): a.id for a in g.edges}
        owner: dict[str, set[str]] = {}
        for cid, (kind, relabel) in self.copies.items():
            if sorted(relabel) != list(H_VERTICES) or len(set(relabel.values())) != 8:
                raise GraphError(f"copy {cid}: relabeling is not injective on the 8 template vertices")
            for a in templates[kind].edges:
                if (relabel[a.tail], relabel[a.head]) not in host_arcs:
                    raise GraphError(f"copy {cid}: image of {a.id} missing")
            for v in relabel.values():
                owner.setdefault(v, set()).add(cid)
        want = {host_arcs[(r["a"], r["b"])] for _, r in self.copies.values()}
        if want != set(self.preferred_edges):
            raise GraphError("preferred edges are not exactly the images of a->b")
        for v, cids in owner.items():
            if len(cids) < 2:
                continue
            roles = self.identification.get(v)
            if roles is None or {c for c, _ in roles} != cids:
                raise GraphError(f"vertex {v} is shared but not recorded in the identification")
            if any(role not in ("a", "b") or self.copies[c][1][role] != v for c, role in roles):
                raise GraphError(f"vertex {v}: only a/b endpoints may be identified")
            if not ({r for _, r in roles} >= {"a", "b"}):
                raise GraphError(f"vertex {v}: identification must merge an a-endpoint with a b-endpoint")


def _glue(copies: list[tuple[str, str, str, str]], name: str) -> tuple[Digraph, GadgetWiring]:
    """Glue copies given as ``(copy_id, kind, a_vertex, b_vertex)``."""
    templates = {"H": graph_H(), "H_prime": graph_H_prime()}
    verts: set[str] = set()
    edges = []
    wiring = GadgetWiring({}, [], {})
    for cid, kind, av, bv in copies:
        relabel = {x: f"{x}.{cid}" for x in H_VERTICES}
        relabel["a"], relabel["b"] = av, bv
        wiring.copies[cid] = (kind, relabel)
        wiring.identification.setdefault(av, []).append((cid, "a"))
        wiring.identification.setdefault(bv, []).append((cid, "b"))
        verts.update(relabel.values())
        for a in templates[kind].edges:
            eid = f"{a.id}.{cid}"
            edges.append((eid, relabel[a.tail], relabel[a.head]))
            if (a.tail, a.head) == PREFERRED:
                wiring.preferred_edges.append(eid)
    g = Digraph(verts, edges, {"name": name, "preferred_edges": list(wiring.preferred_edges)})
    return g, wiring


def link_threshold(k: int, n: int) -> bool:
    """Whether a ring of ``k`` copies is long enough to force an (n+1)-component link: k > 2(n-1)."""
    return k > 2 * (n - 1)


def _ring(k: int, kinds: list[str], name: str) -> tuple[Digraph, GadgetWiring]:
    copies = [(str(i), kinds[i], f"z{i}", f"z{(i + 1) % k}") for i in range(k)]
    return _glue(copies, name)


def ring_gadget(k: int, use_prime_for_half: bool = False) -> tuple[Digraph, GadgetWiring]:
    """``k`` copies in a ring whose preferred arcs z0 -> z1 -> ... -> z0 form a directed k-cycle.

    With ``use_prime_for_half`` the copies alternate H, H', H, H', ...
    """
    if k < 2 or k % 2:
        raise ValueError(f"ring size must be even and >= 2, got {k}")
    kinds = ["H_prime" if use_prime_for_half and i % 2 else "H" for i in range(k)]
    return _ring(k, kinds, f"ring_gadget_{k}")


def three_link_gadget() -> tuple[Digraph, GadgetWiring]:
    """Three copies of H with b1=a2, b2=a3, b3=a1; the preferred arcs form a directed triangle."""
    return _ring(3, ["H"] * 3, "three_link_gadget")


def eleven_ring() -> tuple[Digraph, GadgetWiring]:
    """Eleven copies of H glued in a ring; the preferred arcs form a directed 11-cycle."""
    return _ring(11, ["H"] * 11, "eleven_ring")


def four_link_gadget() -> tuple[Digraph, GadgetWiring]:
    """99 copies of H whose preferred arcs form DK11 minus the Hamiltonian cycle 1->2->...->11->1.

    Shared vertices are ``"1"`` .. ``"11"``; the copy with preferred arc i->j is ``"i-j"``.
    """
    removed = {(i, i % 11 + 1) for i in range(1, 12)}
    copies = [(f"{i}-{j}", "H", str(i), str(j))
              for i, j in permutations(range(1, 12), 2) if (i, j) not in removed]
    g, w = _glue(copies, "four_link_gadget")
    g.meta["removed_cycle"] = [str(i) for i in range(1, 12)]
    return g, w


def preferred_arc_digraph(g: Digraph, wiring: GadgetWiring) -> Digraph:
    """The preferred arcs alone, on the shared vertices."""
    shared = sorted(wiring.identification, key=vkey)
    return Digraph(shared, [(e, g.edge(e).tail, g.edge(e).head) for e in wiring.preferred_edges])


def knotted11(b4_in_B_to_A: bool = True, a45_both_ways: bool = False) -> Digraph:
    """The 11-vertex digraph built around two copies of K3,3,1.

    Choices the construction leaves open: the b-triangle runs b1->b2->b3->b1;
    ``b4_in_B_to_A`` lets b4 take part in the arcs b_i -> a_j and b_i -> w;
    the a4-a5 edge is the arc a4->a5, plus a5->a4 when ``a45_both_ways``.
    """
    A = [f"a{i}" for i in range(1, 6)]
    B = [f"b{i}" for i in range(1, 5)]
    pairs = [(a, b) for a in A[:3] for b in B[:3]]
    pairs += [(a, "v") for a in A[:3]] + [("v", b) for b in B[:3]]
    pairs += [("b1", "b2"), ("b2", "b3"), ("b3", "b1")]
    pairs += [(b, "b4") for b in B[:3]]
    bs = B if b4_in_B_to_A else B[:3]
    pairs += [(b, a) for b in bs for a in A]
    pairs += [(b, "w") for b in bs] + [("w", a) for a in A]
    pairs += [(x, y) for x in A[:3] for y in A[:3] if x != y]
    pairs += [("a4", "a5")] + ([("a5", "a4")] if a45_both_ways else [])
    pairs += [(x, y) for x in ("a4", "a5") for y in A[:3]]
    return _simple(A + B + ["v", "w"], pairs, {"name": "knotted11"})


def transitive_tournament(n: int) -> Digraph:
    """Vertices "1".."n" with the arc i->j exactly when i < j."""
    if n < 1:
        raise ValueError("n must be >= 1")
    vs = [str(i) for i in range(1, n + 1)]
    return _simple(vs, [(str(i), str(j)) for i in range(1, n + 1) for j in range(i + 1, n + 1)])


def apex_tournament(n: int) -> Digraph:
    """Transitive tournament on n-1 vertices plus an apex "v" joined to all by antiparallel pairs."""
    if n < 2:
        raise ValueError("n must be >= 2")
    tt = transitive_tournament(n - 1)
    pairs = [(a.tail, a.head) for a in tt.edges]
    pairs += [p for u in tt.vertices for p in (("v", u), (u, "v"))]
    return _simple(list(tt.vertices) + ["v"], pairs)


def complete_symmetric(n: int) -> Digraph:
    """DK_n on vertices "1".."n"."""
    vs = [str(i) for i in range(1, n + 1)]
    return _simple(vs, [(u, v) for u in vs for v in vs if u != v])


def reconstruct_fig1() -> Digraph:
    """Reconstruction of the vertex-expansion counterexample (K3,3,1 with apex x).

    Arcs a_i -> b_j (all 9), x -> a_i, b_j -> x, and b_i -> a_j for every
    pair except b2 -> a2.  The apex orientations are inferred, not read off
    a figure, and ``meta["reconstruction"]`` says so.
    """
    A = ["a1", "a2", "a3"]
    B = ["b1", "b2", "b3"]
    pairs = [(a, b) for a in A for b in B]
    pairs += [("x", a) for a in A] + [(b, "x") for b in B]
    pairs += [(b, a) for b in B for a in A if (b, a) != ("b2", "a2")]
    return _simple(["x"] + A + B, pairs, {"name": "fig1", "reconstruction": True})


def random_digraph(n: int, p: float = 0.3, seed: int = 0) -> Digraph:
    """Each ordered pair of "1".."n" becomes an arc with probability ``p``."""
    import random

    rng = random.Random(seed)
    vs = [str(i) for i in range(1, n + 1)]
    return _simple(vs, [(u, v) for u in vs for v in vs if u != v and rng.random() < p])


REGISTRY = {
    "dbar4": lambda **kw: dbar4(),
    "graph_H": lambda **kw: graph_H(),
    "graph_H_prime": lambda **kw: graph_H_prime(),
    "three_link_gadget": lambda **kw: three_link_gadget(),
    "ring_gadget": lambda n=None, prime=False, **kw: ring_gadget(n if n is not None else 6, prime),
    "eleven_ring": lambda **kw: eleven_ring(),
    "four_link_gadget": lambda **kw: four_link_gadget(),
    "knotted11": lambda narrow=False, a45_both=False, **kw: knotted11(not narrow, a45_both),
    "transitive_tournament": lambda n=None, **kw: transitive_tournament(n if n is not None else 5),
    "apex_tournament": lambda n=None, **kw: apex_tournament(n if n is not None else 5),
    "complete_symmetric": lambda n=None, **kw: complete_symmetric(n if n is not None else 6),
    "fig1": lambda **kw: reconstruct_fig1(),
    "random_digraph": lambda n=None, p=0.3, seed=0, **kw: random_digraph(n if n is not None else 6, p, seed),
}
