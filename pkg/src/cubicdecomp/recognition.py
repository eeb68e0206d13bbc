"""Structure recognition for claw-free cubic graphs.

Every vertex of a connected claw-free cubic graph other than K4 lies in
exactly one triangle or diamond unit.  The helpers prefixed ``local_`` work
on any adjacency sequence so the reduction engine can call them on its
mutable working graph.
"""

from __future__ import annotations

import enum
from collections import Counter
from collections.abc import Sequence
from dataclasses import dataclass
from itertools import combinations
from typing import Optional, Union

from .errors import IsK4, PreconditionFailed
from .graph import Graph, components


class DegreeClass(enum.Enum):
    CUBIC = "cubic"
    SUBCUBIC_PROPER = "subcubic"
    OTHER = "other"


class StringConfig(enum.Enum):
    NECKLACE = "necklace"
    COMMON_TRIANGLE = "common-triangle"
    DISTINCT_TRIANGLES = "distinct-triangles"


@dataclass(frozen=True)
class Triangle:
    vertices: tuple[int, int, int]


@dataclass(frozen=True)
class Diamond:
    """K4 minus the edge ``ad``; ``b < c`` are the two inner vertices."""

    a: int
    b: int
    c: int
    d: int

    @property
    def vertices(self) -> tuple[int, int, int, int]:
        return (self.a, self.b, self.c, self.d)

    def flipped(self) -> Diamond:
        return Diamond(self.d, self.b, self.c, self.a)


Unit = Union[Triangle, Diamond]


@dataclass
class UnitPartition:
    units: list[Unit]
    unit_of: list[int]

    def diamonds(self) -> list[Diamond]:
        return [u for u in self.units if isinstance(u, Diamond)]


@dataclass(frozen=True)
class DiamondString:
    diamonds: tuple[Diamond, ...]
    config: StringConfig
    w: Optional[int] = None
    z: Optional[int] = None
    u: Optional[int] = None

    @property
    def k(self) -> int:
        return len(self.diamonds)

    def vertices(self) -> list[int]:
        return [v for d in self.diamonds for v in d.vertices]


def classify_degrees(g: Graph) -> DegreeClass:
    degs = g.degrees()
    if all(d == 3 for d in degs):
        return DegreeClass.CUBIC
    if all(d <= 3 for d in degs):
        return DegreeClass.SUBCUBIC_PROPER
    return DegreeClass.OTHER


def find_claw(g: Graph) -> Optional[tuple[int, tuple[int, int, int]]]:
    """Smallest-centre induced K_{1,3}, leaves in lexicographic order."""
    for v in range(g.n):
        nbrs = g.adj[v]
        if len(nbrs) < 3:
            continue
        for trip in combinations(nbrs, 3):
            p, q, r = trip
            if not (g.has_edge(p, q) or g.has_edge(p, r) or g.has_edge(q, r)):
                return v, trip
    return None


# -- local helpers over raw adjacency ----------------------------------------


def local_mates(adj: Sequence, v: int) -> Optional[tuple[int, int]]:
    """The unique adjacent pair among ``v``'s three neighbours, if exactly one."""
    nbrs = sorted(adj[v])
    if len(nbrs) == 2:
        p, q = nbrs
        return (p, q) if q in adj[p] else None
    if len(nbrs) != 3:
        return None
    p, q, r = nbrs
    pairs = [(x, y) for x, y in ((p, q), (p, r), (q, r)) if y in adj[x]]
    return pairs[0] if len(pairs) == 1 else None


def local_outside(adj: Sequence, v: int, inside: Sequence[int]) -> int:
    """The neighbour of ``v`` that is not in ``inside`` (cubic attachment slot)."""
    for w in adj[v]:
        if w not in inside:
            return w
    raise ValueError(f"vertex {v} has no neighbour outside {inside}")


def local_diamond_at(adj: Sequence, v: int) -> Optional[Diamond]:
    """Diamond having ``v`` as an outer vertex (``a = v``), if any."""
    if len(adj[v]) != 3:
        return None
    mates = local_mates(adj, v)
    if mates is None:
        return None
    b, c = mates
    if len(adj[b]) != 3 or len(adj[c]) != 3:
        return None
    common = [x for x in adj[b] if x != v and x != c and x in adj[c]]
    if len(common) != 1:
        return None
    d = common[0]
    if d in adj[v] or len(adj[d]) != 3:
        return None
    return Diamond(v, b, c, d)


def local_string(adj: Sequence, dm: Diamond) -> DiamondString:
    """Maximal diamond string through ``dm``, oriented per the tie-break rules.

    Open strings put the smaller outside endpoint at ``w``.  A closed string
    (a necklace) starts at the diamond holding its smallest vertex, with
    ``a_1`` the smaller outer vertex of that diamond.
    """
    chain = [dm]
    closed = False
    while True:
        last = chain[-1]
        r = local_outside(adj, last.d, (last.b, last.c))
        if r == chain[0].a:
            closed = True
            break
        nxt = local_diamond_at(adj, r)
        if nxt is None:
            z = r
            break
        chain.append(nxt)
    if closed:
        first = min(chain, key=lambda d: min(d.vertices))
        a1 = min(first.a, first.d)
        start = first if first.a == a1 else first.flipped()
        ring = [start]
        while True:
            last = ring[-1]
            r = local_outside(adj, last.d, (last.b, last.c))
            if r == start.a:
                break
            ring.append(local_diamond_at(adj, r))
        return DiamondString(tuple(ring), StringConfig.NECKLACE)
    head: list[Diamond] = []
    first = chain[0]
    cur = first.a
    inner = (first.b, first.c)
    while True:
        r = local_outside(adj, cur, inner)
        prev = local_diamond_at(adj, r)
        if prev is None:
            w = r
            break
        head.append(prev.flipped())
        cur, inner = prev.d, (prev.b, prev.c)
    chain = head[::-1] + chain
    if z < w:
        chain = [d.flipped() for d in reversed(chain)]
        w, z = z, w
    u = None
    config = StringConfig.DISTINCT_TRIANGLES
    if z in adj[w]:
        config = StringConfig.COMMON_TRIANGLE
        common = [x for x in adj[w] if x != z and x in adj[z]]
        u = common[0] if common else None
    return DiamondString(tuple(chain), config, w=w, z=z, u=u)


# -- whole-graph operations ---------------------------------------------------


def check_claw_free_cubic(g: Graph) -> None:
    """Raise PreconditionFailed unless ``g`` is connected, cubic and claw-free."""
    for v in range(g.n):
        if g.degree(v) != 3:
            raise PreconditionFailed("not cubic", {"vertex": v, "degree": g.degree(v)})
    comps = components(g)
    if len(comps) != 1:
        raise PreconditionFailed("not connected", {"components": len(comps)})
    claw = find_claw(g)
    if claw is not None:
        raise PreconditionFailed("claw", {"center": claw[0], "leaves": list(claw[1])})


def is_k4(g: Graph) -> bool:
    return g.n == 4 and g.m == 6


def unit_partition(g: Graph) -> UnitPartition:
    """The unique partition of V(G) into triangle and diamond units."""
    if g.n == 0:
        raise PreconditionFailed("empty graph")
    if is_k4(g):
        raise IsK4("K4 has no triangle/diamond unit partition")
    check_claw_free_cubic(g)
    unit_of = [-1] * g.n
    units: list[Unit] = []

    def claim(vs, unit):
        for v in vs:
            if unit_of[v] != -1:
                raise PreconditionFailed("conflicting unit assignment", {"vertex": v})
            unit_of[v] = len(units)
        units.append(unit)

    for v in range(g.n):
        if unit_of[v] != -1:
            continue
        p, q, r = g.adj[v]
        adjacent = [(x, y) for x, y in ((p, q), (p, r), (q, r)) if g.has_edge(x, y)]
        if len(adjacent) == 2:
            # v is an inner diamond vertex; the shared neighbour is its twin
            shared = set(adjacent[0]) & set(adjacent[1])
            (twin,) = shared
            outer = sorted(set(adjacent[0]) ^ set(adjacent[1]))
            b, c = sorted((v, twin))
            claim((outer[0], b, c, outer[1]), Diamond(outer[0], b, c, outer[1]))
    for v in range(g.n):
        if unit_of[v] != -1:
            continue
        mates = local_mates(g.adj, v)
        if mates is None:
            raise PreconditionFailed("vertex not in a unique triangle", {"vertex": v})
        tri = tuple(sorted((v, *mates)))
        claim(tri, Triangle(tri))
    return UnitPartition(units, unit_of)


def unit_multigraph(g: Graph, part: UnitPartition) -> Counter:
    """Multiplicities of inter-unit edges, keyed by ``(i, j)`` unit indices, i < j."""
    mult: Counter = Counter()
    for u, v in g.edges():
        i, j = part.unit_of[u], part.unit_of[v]
        if i != j:
            mult[(min(i, j), max(i, j))] += 1
    return mult


def find_diamond_strings(g: Graph, part: UnitPartition) -> list[DiamondString]:
    seen: set[int] = set()
    out = []
    for dm in part.diamonds():
        if dm.a in seen:
            continue
        s = local_string(g.adj, dm)
        if s.config is StringConfig.NECKLACE and 4 * s.k != g.n:
            raise PreconditionFailed("closed diamond string inside a larger graph")
        seen.update(s.vertices())
        out.append(s)
    out.sort(key=lambda s: min(s.vertices()))
    return out
