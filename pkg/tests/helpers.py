"""Shared fixtures: an exhaustive small corpus and an independent tree counter."""

from __future__ import annotations

import itertools
from fractions import Fraction

import networkx as nx

from cubicdecomp import Graph
from cubicdecomp.generators import k4, necklace


def _pairings(points):
    if not points:
        yield []
        return
    first = points[0]
    for i in range(1, len(points)):
        rest = points[1:i] + points[i + 1:]
        for tail in _pairings(rest):
            yield [(first, points[i])] + tail


def cubic_multigraphs(h: int):
    """Connected cubic multigraphs (loops allowed) on h vertices, as sorted edge lists."""
    seen = set()
    for pairing in _pairings([v for v in range(h) for _ in range(3)]):
        key = tuple(sorted(tuple(sorted(p)) for p in pairing))
        if key in seen:
            continue
        seen.add(key)
        g = nx.MultiGraph()
        g.add_nodes_from(range(h))
        g.add_edges_from(key)
        if nx.is_connected(g):
            yield list(key)


def build_from_units(h: int, medges, diamonds) -> Graph:
    """Inflate multigraph ``medges`` and put ``diamonds[i]`` diamonds on edge i."""
    port = [0] * h
    n = 3 * h
    edges = []
    for v in range(h):
        edges += [(3 * v, 3 * v + 1), (3 * v + 1, 3 * v + 2), (3 * v, 3 * v + 2)]
    for (u, v), k in zip(medges, diamonds):
        p = 3 * u + port[u]
        port[u] += 1
        q = 3 * v + port[v]
        port[v] += 1
        prev = p
        for _ in range(k):
            a, b, c, d = n, n + 1, n + 2, n + 3
            n += 4
            edges += [(a, b), (a, c), (b, c), (b, d), (c, d), (prev, a)]
            prev = d
        edges.append((prev, q))
    return Graph.from_edge_list(n, edges)


def to_nx(g: Graph) -> nx.Graph:
    x = nx.Graph()
    x.add_nodes_from(range(g.n))
    x.add_edges_from(g.edges())
    return x


def claw_free_cubic_corpus(max_n: int = 14) -> list[Graph]:
    """Every connected claw-free cubic graph with at most ``max_n`` vertices, up to isomorphism.

    Built from the unit structure: K4, diamond necklaces, and inflated cubic
    multigraphs whose edges carry diamond strings (loops need at least one).
    """
    cands = [k4()] + [necklace(k) for k in range(2, max_n // 4 + 1)]
    for h in range(2, max_n // 3 + 1, 2):
        budget = (max_n - 3 * h) // 4
        for medges in cubic_multigraphs(h):
            for ds in itertools.product(range(budget + 1), repeat=len(medges)):
                if sum(ds) > budget:
                    continue
                if any(u == v and k == 0 for (u, v), k in zip(medges, ds)):
                    continue
                cands.append(build_from_units(h, medges, ds))
    out: list[Graph] = []
    buckets: dict[str, list[nx.Graph]] = {}
    for g in cands:
        x = to_nx(g)
        key = nx.weisfeiler_lehman_graph_hash(x) + f":{g.n}"
        bucket = buckets.setdefault(key, [])
        if any(nx.is_isomorphic(x, y) for y in bucket):
            continue
        bucket.append(x)
        out.append(g)
    out.sort(key=lambda g: (g.n, g.edges()))
    return out


def matrix_tree_count(g: Graph) -> int:
    """Number of spanning trees from a reduced Laplacian determinant (exact rationals)."""
    n = g.n
    if n == 1:
        return 1
    lap = [[Fraction(0)] * n for _ in range(n)]
    for u, v in g.edges():
        lap[u][u] += 1
        lap[v][v] += 1
        lap[u][v] -= 1
        lap[v][u] -= 1
    m = [row[1:] for row in lap[1:]]
    size = n - 1
    det = Fraction(1)
    for c in range(size):
        piv = next((r for r in range(c, size) if m[r][c] != 0), None)
        if piv is None:
            return 0
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            det = -det
        det *= m[c][c]
        for r in range(c + 1, size):
            f = m[r][c] / m[c][c]
            if f:
                for k in range(c, size):
                    m[r][k] -= f * m[c][k]
    return int(det)


def reroute_instances(count: int = 120, seed: int = 0):
    """(G, D, e) triples on non-triangle O-cycles, drawn from the reduction chains of random graphs.

    Every intermediate reduced graph is decomposed and each long O-cycle of its
    certificate contributes one randomly chosen edge.
    """
    import random

    from cubicdecomp import apply_reduction, decompose, decompose_base, select_reduction
    from cubicdecomp.generators import random_claw_free_cubic
    from cubicdecomp.verify import o_cycles

    rng = random.Random(seed)
    out = []
    trial = 0
    while len(out) < count:
        trial += 1
        g = random_claw_free_cubic(4 + 2 * (trial % 18), seed * 100_003 + trial, strings=trial % 3, bracelets=trial % 2)
        stack = [g]
        while stack and len(out) < count:
            h = stack.pop()
            d = decompose(h)
            for cyc in o_cycles(h, d):
                if len(cyc) > 3:
                    i = rng.randrange(len(cyc))
                    e = tuple(sorted((cyc[i], cyc[(i + 1) % len(cyc)])))
                    out.append((h, d, e))
            if decompose_base(h) is not None:
                continue
            step = select_reduction(h)
            stack.extend(r.graph for r in apply_reduction(h, step) if all(len(a) == 3 for a in r.graph.adj))
    return out
