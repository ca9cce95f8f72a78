"""Hand-built embeddings used as fixtures.

Each builder returns a :class:`PLEmbedding` whose named cycles (``c1``,
``c2``, ...) are stored alongside; the same data ships as JSON under
``spatialdigraph/data``.
"""

from __future__ import annotations

from .digraph import Digraph
from .embedding import PLEmbedding


def polygon_embedding(loops: dict[str, list[tuple]], straight: bool = True) -> PLEmbedding:
    """Disjoint directed polygons, one per name, each corner a vertex."""
    verts, edges, pos, paths, cycles = [], [], {}, {}, {}
    for name, pts in loops.items():
        n = len(pts)
        names = [f"{name}.{i}" for i in range(n)]
        cycles[name] = []
        for i, v in enumerate(names):
            w = names[(i + 1) % n]
            eid = f"{v}>{w}"
            verts.append(v)
            edges.append((eid, v, w))
            pos[v] = tuple(pts[i])
            paths[eid] = (tuple(pts[i]), tuple(pts[(i + 1) % n]))
            cycles[name].append(eid)
    return PLEmbedding(Digraph(verts, edges), pos, paths, cycles)


def _translate(pts, dx=0, dy=0, dz=0):
    return [(x + dx, y + dy, z + dz) for x, y, z in pts]


HOPF_C1 = [(-2, 0, -1), (2, 0, -1), (0, 0, 2)]
HOPF_C2 = [(0, -1, 0), (0, 1, 0), (5, 1, 1)]


def hopf_triangles() -> PLEmbedding:
    """Two triangles forming a Hopf link: c2's first side pierces the disk of c1."""
    return polygon_embedding({"c1": HOPF_C1, "c2": HOPF_C2})


def split_circles() -> PLEmbedding:
    """Two triangles separated by the plane x = 5."""
    return polygon_embedding({"c1": HOPF_C1, "c2": _translate(HOPF_C2, dx=10, dz=5)})


def double_hopf() -> PLEmbedding:
    """Two Hopf pairs far apart (four triangles, two linked pairs)."""
    return polygon_embedding({
        "c1": HOPF_C1, "c2": HOPF_C2,
        "c3": _translate(HOPF_C1, dx=100), "c4": _translate(HOPF_C2, dx=100),
    })


TREFOIL_HEXAGON = [(1, -4, 3), (3, -3, -4), (3, -2, 2), (0, -4, -4), (4, -4, -2), (-1, 0, 4)]
# seven sticks with determinant 5; only the unknot, trefoil and figure-eight have stick number <= 7
FIGURE_EIGHT = [(-1, -1, -3), (5, -5, 3), (-2, 2, -5), (2, -4, -3), (4, 3, -1), (0, 1, 2), (3, -4, -3)]
CONVEX_PLANAR = [(0, 0, 0), (4, 0, 0), (6, 3, 0), (3, 6, 0), (-1, 4, 0)]


def trefoil_hexagon() -> PLEmbedding:
    return polygon_embedding({"k": TREFOIL_HEXAGON})


def figure_eight() -> PLEmbedding:
    return polygon_embedding({"k": FIGURE_EIGHT})


def convex_planar() -> PLEmbedding:
    return polygon_embedding({"k": CONVEX_PLANAR})


def d4_fixture() -> PLEmbedding:
    """The four-bigon ring with both pairs of opposite bigons linked.

    ``v1..v4`` are the corners of a square in z = 0.  Arc ``C<i>a`` is the
    straight side; ``C3b`` and ``C4b`` close rectangles standing on their
    sides, and the detours ``C1b`` and ``C2b`` thread those rectangles once.
    """
    from .constructions import dbar4

    g = dbar4()
    v = {"v1": (0, 0, 0), "v2": (4, 0, 0), "v3": (4, 4, 0), "v4": (0, 4, 0)}
    paths = {
        "C1a": (v["v1"], v["v2"]),
        "C1b": (v["v1"], (1, 6, 1), (2, 6, 6), (4, 0, 6), v["v2"]),
        "C2a": (v["v2"], v["v3"]),
        "C2b": (v["v2"], (-2, 2, -1), (-2, 2, -5), (4, 4, -5), v["v3"]),
        "C3a": (v["v3"], v["v4"]),
        "C3b": (v["v3"], (4, 4, 2), (0, 4, 2), v["v4"]),
        "C4a": (v["v4"], v["v1"]),
        "C4b": (v["v4"], (0, 4, -2), (0, 0, -2), v["v1"]),
    }
    cycles = {f"C{i}": [f"C{i}a", f"-C{i}b"] for i in range(1, 5)}
    return PLEmbedding(g, v, paths, cycles)


def clasp_fixture() -> PLEmbedding:
    """A triangle ``c1`` and a cycle ``c2`` whose one backward arc has a twin clasping ``c1``.

    ``p: u -> v`` pierces the disk of ``c1`` and ``q: v -> u`` goes around
    it, so the bigon {p, q} links ``c1``; ``c2`` runs u -> v along ``q``
    backwards and returns through ``w``.
    """
    base = polygon_embedding({"c1": HOPF_C1})
    u, v, w = (0, -1, 0), (0, 1, 0), (-5, 3, 0)
    verts = list(base.graph.vertices) + ["u", "v", "w"]
    arcs = [(a.id, a.tail, a.head) for a in base.graph.edges] + [
        ("p", "u", "v"), ("q", "v", "u"), ("v>w", "v", "w"), ("w>u", "w", "u")]
    pos = dict(base.vertex_pos, u=u, v=v, w=w)
    paths = dict(base.edge_path)
    paths.update({"p": (u, v), "q": (v, (5, 1, 0), (5, -1, 0), u), "v>w": (v, w), "w>u": (w, u)})
    cycles = dict(base.named_cycles, c2=["-q", "v>w", "w>u"], bigon=["p", "q"])
    return PLEmbedding(Digraph(verts, arcs), pos, paths, cycles)


FIXTURES = {
    "hopf_triangles": hopf_triangles,
    "split_circles": split_circles,
    "double_hopf": double_hopf,
    "trefoil_hexagon": trefoil_hexagon,
    "figure_eight": figure_eight,
    "convex_planar": convex_planar,
    "d4_fixture": d4_fixture,
    "clasp_fixture": clasp_fixture,
}


def load_fixture(name: str) -> PLEmbedding:
    """Read a shipped fixture from the package data directory."""
    from importlib.resources import files

    text = files(__package__).joinpath("data", f"{name}.json").read_text()
    return PLEmbedding.from_json(text)
