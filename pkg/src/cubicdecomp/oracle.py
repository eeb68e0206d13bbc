"""Exhaustive good-decomposition search over spanning trees.

Independent of the reduction engine: it knows nothing about units, diamonds
or lifts, only the definition of a good decomposition.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator
from dataclasses import dataclass
from typing import Optional

from .certificate import Decomposition
from .errors import NotASpanningTree, NotConnected
from .graph import Edge, Graph, components, edge


@dataclass
class OracleResult:
    decomposition: Optional[Decomposition]
    trees_examined: int

    @property
    def found(self) -> bool:
        return self.decomposition is not None

    def to_json_dict(self, g: Graph) -> dict:
        out: dict = {"outcome": "Found" if self.found else "None", "trees_examined": self.trees_examined}
        if self.found:
            out["certificate"] = self.decomposition.to_json_dict(g)
        return out


def spanning_trees(g: Graph) -> Iterator[tuple[Edge, ...]]:
    """Every spanning tree exactly once, by include/exclude branching on sorted edges.

    Trees containing the smaller edge come first, so the order is
    lexicographic on the edge-inclusion vectors.
    """
    if g.n == 0 or len(components(g)) != 1:
        raise NotConnected("spanning_trees requires a connected graph with n >= 1")
    n = g.n
    edges = g.edges()
    m = len(edges)
    parent = list(range(n))
    size = [1] * n
    excluded = [False] * m
    chosen: list[Edge] = []

    def find(v: int) -> int:
        while parent[v] != v:
            v = parent[v]
        return v

    def still_connected() -> bool:
        adj: list[list[int]] = [[] for _ in range(n)]
        for idx, (u, v) in enumerate(edges):
            if not excluded[idx]:
                adj[u].append(v)
                adj[v].append(u)
        seen = [False] * n
        seen[0] = True
        stack = [0]
        count = 1
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if not seen[y]:
                    seen[y] = True
                    count += 1
                    stack.append(y)
        return count == n

    def rec(i: int) -> Iterator[tuple[Edge, ...]]:
        if len(chosen) == n - 1:
            yield tuple(chosen)
            return
        if m - i < n - 1 - len(chosen):
            return
        u, v = edges[i]
        ru, rv = find(u), find(v)
        if ru != rv:
            if size[ru] > size[rv]:
                ru, rv = rv, ru
            parent[ru] = rv
            size[rv] += size[ru]
            chosen.append(edges[i])
            yield from rec(i + 1)
            chosen.pop()
            parent[ru] = ru
            size[rv] -= size[ru]
        excluded[i] = True
        if still_connected():
            yield from rec(i + 1)
        excluded[i] = False

    yield from rec(0)


def complement_ok(g: Graph, tree: Iterable[Iterable[int]], strict: bool = True) -> Optional[tuple[list[Edge], list[Edge]]]:
    """Split E(G) minus ``tree`` into (matching, cycle edges), or None.

    With ``strict`` the cycle part must be nonempty.
    """
    t = {edge(*e) for e in tree}
    all_edges = g.edges()
    if len(t) != g.n - 1 or not t <= set(all_edges):
        raise NotASpanningTree("edge set is not a spanning tree of the graph")
    parent = list(range(g.n))

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for u, v in t:
        ru, rv = find(u), find(v)
        if ru == rv:
            raise NotASpanningTree(f"cycle through ({u}, {v})")
        parent[ru] = rv

    rest = [e for e in all_edges if e not in t]
    nb: dict[int, list[int]] = {}
    for u, v in rest:
        nb.setdefault(u, []).append(v)
        nb.setdefault(v, []).append(u)
    if any(len(x) > 2 for x in nb.values()):
        return None
    matching: list[Edge] = []
    cycles: list[Edge] = []
    seen: set[int] = set()
    for s in sorted(nb):
        if s in seen:
            continue
        comp = []
        stack = [s]
        seen.add(s)
        while stack:
            x = stack.pop()
            comp.append(x)
            for y in nb[x]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        comp_edges = sorted({edge(x, y) for x in comp for y in nb[x]})
        if len(comp_edges) == len(comp):
            cycles.extend(comp_edges)
        elif len(comp_edges) == 1:
            matching.extend(comp_edges)
        else:
            return None
    if strict and not cycles:
        return None
    return sorted(matching), sorted(cycles)


def oracle_decompose(g: Graph, strict: bool = True) -> OracleResult:
    """First good decomposition in spanning-tree enumeration order, if any."""
    examined = 0
    for tree in spanning_trees(g):
        examined += 1
        split = complement_ok(g, tree, strict=strict)
        if split is not None:
            matching, cycles = split
            return OracleResult(Decomposition.from_parts(tree, matching, cycles), examined)
    return OracleResult(None, examined)
