"""Fixture families: named gadgets, triangle inflation and random cubic graphs.

Numbering conventions (relied on by tests):

* diamond ``i`` (1-based) occupies ids ``4(i-1) .. 4i-1`` in the order
  ``a, b, c, d``; ``ad`` is the missing edge;
* the bracelet triangle follows the diamonds as ``a, b, c`` with ``c`` the
  exposed degree-2 vertex;
* the chain's two triangles follow the diamonds, three ids each, the first id
  of each triangle being the one attached to the string.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Optional

from .errors import BadSpec, NotConnected, NotCubic, OddOrder
from .graph import Graph, components, edge


@dataclass(frozen=True)
class GenSpec:
    kind: str
    k: int = 0
    j: int = 0
    n: int = 0
    seed: int = 0
    base: Optional[Graph] = None


def _diamond_edges(i: int) -> list[tuple[int, int]]:
    a, b, c, d = 4 * i, 4 * i + 1, 4 * i + 2, 4 * i + 3
    return [(a, b), (a, c), (b, c), (b, d), (c, d)]


def _string_edges(k: int) -> list[tuple[int, int]]:
    edges = []
    for i in range(k):
        edges += _diamond_edges(i)
    edges += [(4 * i + 3, 4 * (i + 1)) for i in range(k - 1)]
    return edges


def k4() -> Graph:
    return Graph.from_edge_list(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])


def prism() -> Graph:
    """C3 x K2: triangles 0-1-2 and 3-4-5 with rungs i -- i+3."""
    return Graph.from_edge_list(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise BadSpec("cycle needs n >= 3")
    return Graph.from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    return Graph.from_edge_list(n, [(i, i + 1) for i in range(n - 1)])


def necklace(k: int) -> Graph:
    if k < 2:
        raise BadSpec("necklace needs k >= 2")
    return Graph.from_edge_list(4 * k, _string_edges(k) + [(4 * k - 1, 0)])


def bracelet_gadget(k: int) -> Graph:
    """Diamond string capped by one triangle; triangle vertex ``c`` keeps degree 2."""
    if k < 1:
        raise BadSpec("bracelet needs k >= 1")
    ta, tb, tc = 4 * k, 4 * k + 1, 4 * k + 2
    edges = _string_edges(k) + [(ta, tb), (tb, tc), (ta, tc), (tb, 0), (ta, 4 * k - 1)]
    return Graph.from_edge_list(4 * k + 3, edges)


def chain_gadget(k: int) -> Graph:
    """Diamond string with a pendant triangle at each end (four degree-2 vertices)."""
    if k < 1:
        raise BadSpec("chain needs k >= 1")
    t1, t2 = 4 * k, 4 * k + 3
    edges = _string_edges(k)
    for t in (t1, t2):
        edges += [(t, t + 1), (t + 1, t + 2), (t, t + 2)]
    edges += [(0, t1), (4 * k - 1, t2)]
    return Graph.from_edge_list(4 * k + 6, edges)


def double_bracelet(k: int, j: int) -> Graph:
    """Two bracelet gadgets whose degree-2 triangle vertices are joined by a bridge."""
    left, right = bracelet_gadget(k), bracelet_gadget(j)
    off = left.n
    edges = left.edges() + [(u + off, v + off) for u, v in right.edges()]
    edges.append((left.n - 1, off + right.n - 1))
    return Graph.from_edge_list(left.n + right.n, edges)


def inflate(g: Graph) -> Graph:
    """Replace every vertex of a cubic graph by a triangle.

    Vertex ``v`` becomes ``3v, 3v+1, 3v+2``; port ``3v+i`` carries the edge to
    the ``i``-th smallest neighbour of ``v``.
    """
    if any(g.degree(v) != 3 for v in range(g.n)):
        raise NotCubic("inflate requires a cubic graph")
    if len(components(g)) > 1:
        raise NotConnected("inflate requires a connected graph")
    edges = []
    for v in range(g.n):
        edges += [(3 * v, 3 * v + 1), (3 * v + 1, 3 * v + 2), (3 * v, 3 * v + 2)]
    for u, v in g.edges():
        edges.append((3 * u + g.adj[u].index(v), 3 * v + g.adj[v].index(u)))
    return Graph.from_edge_list(3 * g.n, edges)


def random_cubic(n: int, seed: int) -> Graph:
    """Connected simple cubic graph from the pairing model with rejection."""
    if n % 2 or n < 4:
        raise OddOrder(f"cubic graphs need an even order >= 4, got {n}")
    rng = random.Random(seed)
    points = [v for v in range(n) for _ in range(3)]
    while True:
        rng.shuffle(points)
        seen = set()
        ok = True
        for i in range(0, len(points), 2):
            u, v = points[i], points[i + 1]
            e = edge(u, v)
            if u == v or e in seen:
                ok = False
                break
            seen.add(e)
        if not ok:
            continue
        g = Graph.from_edge_list(n, sorted(seen))
        if len(components(g)) == 1:
            return g


def insert_diamond_string(g: Graph, u: int, v: int, k: int = 1) -> Graph:
    """Subdivide edge ``uv`` by a string of ``k`` diamonds (``u - a_1``, ``d_k - v``).

    New vertices take ids ``g.n ..`` in the diamond numbering order.
    """
    if not g.has_edge(u, v):
        raise BadSpec(f"({u}, {v}) is not an edge")
    off = g.n
    edges = [e for e in g.edges() if e != edge(u, v)]
    edges += [(p + off, q + off) for p, q in _string_edges(k)]
    edges += [(u, off), (off + 4 * k - 1, v)]
    return Graph.from_edge_list(off + 4 * k, edges)


def attach_bracelet(g: Graph, u: int, v: int, k: int = 1) -> Graph:
    """Subdivide ``uv`` by a triangle whose free vertex hangs a bracelet gadget.

    Produces a bridge whose far side is a ``k``-diamond bracelet.
    """
    if not g.has_edge(u, v):
        raise BadSpec(f"({u}, {v}) is not an edge")
    off = g.n
    s1, s2, s3 = off, off + 1, off + 2
    br = bracelet_gadget(k)
    boff = off + 3
    edges = [e for e in g.edges() if e != edge(u, v)]
    edges += [(s1, s2), (s2, s3), (s1, s3), (u, s1), (s2, v)]
    edges += [(p + boff, q + boff) for p, q in br.edges()]
    edges.append((s3, boff + br.n - 1))
    return Graph.from_edge_list(boff + br.n, edges)


def random_claw_free_cubic(n: int, seed: int, strings: int = 0, bracelets: int = 0, max_k: int = 3) -> Graph:
    """Inflated random cubic graph decorated with diamond strings and pendant bracelets.

    Decorations go on distinct inter-triangle edges of the inflation, so the
    result stays connected, cubic and claw-free.
    """
    g = inflate(random_cubic(n, seed))
    rng = random.Random(seed * 7919 + 1)
    slots = [e for e in g.edges() if e[0] // 3 != e[1] // 3]
    rng.shuffle(slots)
    if strings + bracelets > len(slots):
        raise BadSpec("more decorations than inter-triangle edges")
    for i in range(strings + bracelets):
        u, v = slots[i]
        k = rng.randint(1, max_k)
        g = insert_diamond_string(g, u, v, k) if i < strings else attach_bracelet(g, u, v, k)
    return g


def gen_named(spec: GenSpec) -> Graph:
    kind = spec.kind.lower()
    if kind == "k4":
        return k4()
    if kind == "prism":
        return prism()
    if kind == "necklace":
        return necklace(spec.k)
    if kind in ("bracelet", "bracelet-gadget"):
        return bracelet_gadget(spec.k)
    if kind in ("chain", "chain-gadget"):
        return chain_gadget(spec.k)
    if kind in ("double-bracelet", "doublebracelet"):
        if spec.k < 1 or spec.j < 1:
            raise BadSpec("double bracelet needs k, j >= 1")
        return double_bracelet(spec.k, spec.j)
    if kind == "inflate":
        if spec.base is None:
            raise BadSpec("inflate needs a base graph")
        return inflate(spec.base)
    if kind in ("random-cubic", "random"):
        return random_cubic(spec.n, spec.seed)
    if kind in ("random-inflated", "inflated"):
        return inflate(random_cubic(spec.n, spec.seed))
    raise BadSpec(f"unknown family {spec.kind!r}")
