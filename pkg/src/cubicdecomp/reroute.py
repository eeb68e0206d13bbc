"""Moving a chosen edge of a long O-cycle into the tree or the matching.

A non-triangle O-cycle of a good decomposition of a claw-free cubic graph
alternates between triangle edges ``a_i b_i`` (the triangle being
``a_i t_i b_i``, hub ``t_i`` off the cycle) and connecting edges
``b_i a_{i+1}``.  Relabeling the cycle, its triangles' side edges and
nothing else yields another good decomposition in which the chosen edge is
T (even triangle count) or M (odd triangle count) when it is a connecting
edge; triangle edges land in the opposite part.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass

from .certificate import Decomposition
from .errors import FrameAssertionFailed, IsTriangleCycle, NotInO
from .graph import Edge, Graph, edge


@dataclass(frozen=True)
class RerouteFrame:
    a: tuple[int, ...]
    b: tuple[int, ...]
    t: tuple[int, ...]
    fixed: Edge

    @property
    def r(self) -> int:
        return len(self.a)


def _o_walk(adj: Sequence, labels: dict, p: int, q: int) -> list[int]:
    cyc = [p, q]
    prev, cur = p, q
    while True:
        nxt = [w for w in adj[cur] if w != prev and labels.get(edge(cur, w)) == "O"]
        if len(nxt) != 1:
            raise FrameAssertionFailed(f"O-degree of vertex {cur} is not 2")
        prev, cur = cur, nxt[0]
        if cur == p:
            return cyc
        cyc.append(cur)
        if len(cyc) > len(adj):
            raise FrameAssertionFailed("O-walk does not close")


def build_frame(adj: Sequence, labels: dict, e: Edge) -> RerouteFrame:
    p, q = e
    if labels.get(edge(p, q)) != "O":
        raise NotInO(f"edge {edge(p, q)} is not labeled O")
    cyc = _o_walk(adj, labels, p, q)
    size = len(cyc)
    if size == 3:
        raise IsTriangleCycle(f"edge {edge(p, q)} lies on an O-triangle")
    hub = {}
    for i, v in enumerate(cyc):
        nb = adj[v]
        if len(nb) != 3:
            raise FrameAssertionFailed(f"cycle vertex {v} is not of degree 3")
        others = [w for w in nb if w != cyc[i - 1] and w != cyc[(i + 1) % size]]
        if len(others) != 1:
            raise FrameAssertionFailed(f"cycle vertex {v} has a chord or repeated neighbour")
        hub[v] = others[0]
    tri = [hub[cyc[i]] == hub[cyc[(i + 1) % size]] for i in range(size)]
    if size % 2 or any(tri[i] == tri[(i + 1) % size] for i in range(size)):
        # alternation forces an even cycle with at least two triangles
        raise FrameAssertionFailed("cycle does not alternate triangle and connecting edges")
    if tri[0]:
        seq = cyc[-2:] + cyc[:-2]
    else:
        seq = cyc[-1:] + cyc[:-1]
    a = tuple(seq[0::2])
    b = tuple(seq[1::2])
    t = tuple(hub[v] for v in a)
    on_cycle = set(cyc)
    if len(set(t)) != len(t):
        raise FrameAssertionFailed("two cycle triangles share a hub")
    for ai, bi, ti in zip(a, b, t):
        if ti in on_cycle:
            raise FrameAssertionFailed(f"hub {ti} lies on the cycle")
        third = [w for w in adj[ti] if w != ai and w != bi]
        if len(third) != 1:
            raise FrameAssertionFailed(f"hub {ti} is not of degree 3")
        s = third[0]
        if s in on_cycle:
            raise FrameAssertionFailed(f"hub {ti} is adjacent to cycle vertex {s}")
        for x, y in ((ai, ti), (bi, ti), (ti, s)):
            if labels.get(edge(x, y)) != "T":
                raise FrameAssertionFailed(f"forced tree edge {edge(x, y)} is not labeled T")
    return RerouteFrame(a, b, t, edge(p, q))


def frame_relabeling(fr: RerouteFrame) -> dict[Edge, str]:
    """New labels for the cycle edges and triangle side edges of the frame."""
    a, b, t, r = fr.a, fr.b, fr.t, fr.r
    new: dict[Edge, str] = {}

    def tri(i, ab, at, tb):
        new[edge(a[i], b[i])] = ab
        new[edge(a[i], t[i])] = at
        new[edge(t[i], b[i])] = tb

    if r % 2 == 0:
        for j in range(r):
            new[edge(b[j], a[(j + 1) % r])] = "T"
        for i in range(r):
            if i % 2:
                tri(i, "M", "T", "T")
            else:
                tri(i, "O", "O", "O")
    else:
        tri(0, "T", "M", "T")
        tri(1, "T", "T", "M")
        for i in range(2, r):
            if i % 2:
                tri(i, "M", "T", "T")
            else:
                tri(i, "O", "O", "O")
        new[edge(b[0], a[1])] = "M"
        for j in range(1, r - 1):
            new[edge(b[j], a[j + 1])] = "T"
        new[edge(b[r - 1], a[0])] = "T"
    return new


def reroute_in_place(adj: Sequence, labels: dict, e: Edge) -> dict[Edge, str]:
    """Apply the reroute to ``labels``; returns the relabeled edges."""
    fr = build_frame(adj, labels, e)
    new = frame_relabeling(fr)
    labels.update(new)
    return new


def reroute_cycle(g: Graph, d: Decomposition, e: Edge) -> Decomposition:
    labels = dict(d.labels)
    reroute_in_place(g.adj, labels, (e[0], e[1]))
    return Decomposition(labels)
