"""Immutable simple undirected graphs on vertices ``0..n-1``.

Besides the value type this module carries the graph6 and edge-list codecs,
connected components and bridge detection.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator

from .errors import (
    DuplicateEdge,
    LoopEdge,
    MalformedEdgeList,
    MalformedGraph6,
    NotConnected,
    VertexOutOfRange,
)

Edge = tuple[int, int]


def edge(u: int, v: int) -> Edge:
    """Canonical ``(min, max)`` form of the edge ``uv``."""
    return (u, v) if u < v else (v, u)


class Graph:
    """Simple undirected graph with sorted adjacency tuples.

    Instances are treated as values: nothing mutates ``adj`` after
    construction, and all "editing" operations return new graphs.
    """

    __slots__ = ("n", "adj", "m")

    def __init__(self, n: int, adj: Iterable[Iterable[int]]):
        self.n = n
        self.adj: tuple[tuple[int, ...], ...] = tuple(tuple(sorted(a)) for a in adj)
        if len(self.adj) != n:
            raise ValueError(f"adjacency has {len(self.adj)} rows, expected {n}")
        self.m = sum(len(a) for a in self.adj) // 2

    @classmethod
    def from_edge_list(cls, n: int, edges: Iterable[Iterable[int]]) -> Graph:
        adj: list[set[int]] = [set() for _ in range(n)]
        for pair in edges:
            u, v = pair
            for w in (u, v):
                if not 0 <= w < n:
                    raise VertexOutOfRange(w, n)
            if u == v:
                raise LoopEdge(u)
            if v in adj[u]:
                raise DuplicateEdge(*edge(u, v))
            adj[u].add(v)
            adj[v].add(u)
        return cls(n, adj)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adj[v]

    def has_edge(self, u: int, v: int) -> bool:
        # adjacency rows have at most a handful of entries in this domain
        return v in self.adj[u]

    def edges(self) -> list[Edge]:
        """All edges as canonical pairs, sorted lexicographically."""
        return [(u, v) for u in range(self.n) for v in self.adj[u] if u < v]

    def degrees(self) -> list[int]:
        return [len(a) for a in self.adj]

    def delete_vertices(self, removed: Iterable[int]) -> tuple[Graph, dict[int, int]]:
        """``G minus S`` with the surviving vertices renumbered densely.

        Returns the new graph and the old-to-new relabeling map.
        """
        gone = set(removed)
        relabel: dict[int, int] = {}
        for v in range(self.n):
            if v not in gone:
                relabel[v] = len(relabel)
        adj = [[relabel[w] for w in self.adj[v] if w not in gone] for v in relabel]
        return Graph(len(relabel), adj), relabel

    def delete_edges(self, removed: Iterable[Iterable[int]]) -> Graph:
        gone = {edge(*e) for e in removed}
        return Graph.from_edge_list(self.n, [e for e in self.edges() if e not in gone])

    def add_edges(self, added: Iterable[Iterable[int]]) -> Graph:
        return Graph.from_edge_list(self.n, self.edges() + [tuple(e) for e in added])

    def induced(self, vertices: Iterable[int]) -> tuple[Graph, dict[int, int]]:
        keep = set(vertices)
        return self.delete_vertices(v for v in range(self.n) if v not in keep)

    def relabeled(self, perm: list[int]) -> Graph:
        """Image of the graph under the vertex permutation ``v -> perm[v]``."""
        return Graph.from_edge_list(self.n, [(perm[u], perm[v]) for u, v in self.edges()])

    def is_connected(self) -> bool:
        return len(components(self)) <= 1


def disjoint_union(*graphs: Graph) -> Graph:
    edges: list[Edge] = []
    offset = 0
    for g in graphs:
        edges.extend((u + offset, v + offset) for u, v in g.edges())
        offset += g.n
    return Graph.from_edge_list(offset, edges)


def components(g: Graph) -> list[list[int]]:
    """Connected components, each sorted, ordered by smallest vertex."""
    seen = [False] * g.n
    out = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        comp = [s]
        stack = [s]
        while stack:
            v = stack.pop()
            for w in g.adj[v]:
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    stack.append(w)
        comp.sort()
        out.append(comp)
    return out


def bridges(g: Graph) -> set[Edge]:
    """Cut-edges of a connected graph via iterative DFS low-points."""
    if g.n == 0:
        return set()
    if not g.is_connected():
        raise NotConnected("bridges() requires a connected graph")
    disc = [-1] * g.n
    low = [0] * g.n
    out: set[Edge] = set()
    disc[0] = low[0] = 0
    counter = 1
    # frames: (vertex, parent, neighbor iterator)
    stack: list[tuple[int, int, Iterator[int]]] = [(0, -1, iter(g.adj[0]))]
    while stack:
        v, parent, it = stack[-1]
        advanced = False
        for w in it:
            if w == parent:
                continue
            if disc[w] == -1:
                disc[w] = low[w] = counter
                counter += 1
                stack.append((w, v, iter(g.adj[w])))
                advanced = True
                break
            low[v] = min(low[v], disc[w])
        if advanced:
            continue
        stack.pop()
        if parent >= 0:
            low[parent] = min(low[parent], low[v])
            if low[v] > disc[parent]:
                out.add(edge(parent, v))
    return out


# -- graph6 -----------------------------------------------------------------

_G6_MAX_N = 68719476735


def _encode_n(n: int) -> str:
    if n < 0 or n > _G6_MAX_N:
        raise ValueError(f"graph6 cannot encode n={n}")
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))


def to_graph6(g: Graph) -> str:
    """Header-less graph6 text for ``g``."""
    out = [_encode_n(g.n)]
    acc = 0
    nbits = 0
    for j in range(1, g.n):
        row = g.adj[j]
        for i in range(j):
            acc = (acc << 1) | (i in row)
            nbits += 1
            if nbits == 6:
                out.append(chr(acc + 63))
                acc = nbits = 0
    if nbits:
        out.append(chr((acc << (6 - nbits)) + 63))
    return "".join(out)


def from_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise MalformedGraph6("empty graph6 string")
    vals = []
    for ch in s:
        c = ord(ch) - 63
        if not 0 <= c <= 63:
            raise MalformedGraph6(f"invalid graph6 character {ch!r}")
        vals.append(c)
    if vals[0] < 63:
        n, body = vals[0], vals[1:]
    elif len(vals) >= 2 and vals[1] < 63:
        if len(vals) < 4:
            raise MalformedGraph6("truncated graph6 size field")
        n = (vals[1] << 12) | (vals[2] << 6) | vals[3]
        body = vals[4:]
    else:
        if len(vals) < 8:
            raise MalformedGraph6("truncated graph6 size field")
        n = 0
        for c in vals[2:8]:
            n = (n << 6) | c
        body = vals[8:]
    nbits = n * (n - 1) // 2
    if len(body) != (nbits + 5) // 6:
        raise MalformedGraph6(f"expected {(nbits + 5) // 6} data bytes for n={n}, got {len(body)}")
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if (body[k // 6] >> (5 - k % 6)) & 1:
                edges.append((i, j))
            k += 1
    return Graph.from_edge_list(n, edges)


# -- plain edge list ----------------------------------------------------------


def to_edge_list_text(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"] + [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def from_edge_list_text(text: str) -> Graph:
    rows = [ln.split() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if not rows:
        raise MalformedEdgeList("empty edge list")
    try:
        n, m = (int(t) for t in rows[0])
        pairs = [(int(a), int(b)) for a, b in rows[1:]]
    except ValueError as exc:
        raise MalformedEdgeList(f"bad edge list: {exc}") from exc
    if len(pairs) != m:
        raise MalformedEdgeList(f"header announces {m} edges, found {len(pairs)}")
    return Graph.from_edge_list(n, pairs)
