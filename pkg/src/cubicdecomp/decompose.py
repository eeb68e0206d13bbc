"""Good decompositions of connected claw-free cubic graphs by local reductions.

The engine repeatedly shrinks a mutable copy of the input around a small
reduction site (two triangles, a diamond string, a pendant block), records
the step, and stops at base components (K4, the prism, diamond necklaces).
It then replays the steps backwards, restoring each removed piece and
labeling its edges from a fixed table chosen by the labels that the
synthetic edges received in the reduced graph.

Vertex ids never change inside the engine: reductions only delete vertices
and join surviving ones, so an undo log is enough to lift.
"""

from __future__ import annotations

import heapq
import logging
from collections import deque
from collections.abc import Sequence
from dataclasses import dataclass, field, replace
from typing import Optional

from .certificate import Decomposition
from .errors import CounterexampleFound, InternalError, PreconditionFailed
from .graph import Edge, Graph, components, edge
from .recognition import (
    Diamond,
    DiamondString,
    StringConfig,
    UnitPartition,
    check_claw_free_cubic,
    find_claw,
    local_diamond_at,
    local_mates,
    local_outside,
    local_string,
)
from .reroute import reroute_in_place
from .verify import verify

log = logging.getLogger(__name__)

ORACLE_THRESHOLD = 16

STEP_A = "StepA"
STEP_B = "StepB"
STRING = "StringReduce"
SINGLE = "SingleDiamond"
CUT_EDGE = "CutEdge"
CAP = "Cap"
CAP_DIAMOND = "CapDiamond"
CAP_TRIANGLE = "CapTriangle"


@dataclass
class ReductionStep:
    """One recorded reduction: what was removed, what was joined, and who is who."""

    kind: str
    roles: dict[str, int]
    removed: tuple[int, ...]
    added: tuple[Edge, ...] = ()
    disconnected: bool = False
    string: Optional[DiamondString] = None
    removed_edges: tuple[Edge, ...] = field(default=(), repr=False)

    def trace_line(self) -> str:
        parts = [self.kind] + [f"{k}={v}" for k, v in self.roles.items()]
        if self.string is not None:
            parts.append("diamonds=" + ";".join(",".join(map(str, d.vertices)) for d in self.string.diamonds))
        if self.kind == STEP_B:
            parts.append(f"disconnected={int(self.disconnected)}")
        return " ".join(parts)


@dataclass
class _Base:
    kind: str
    vertices: list[int]
    labels: dict[Edge, str]


# -- lift tables ----------------------------------------------------------------


def _table(r: dict[str, int], **parts: str) -> dict[Edge, str]:
    """Build ``{edge: label}`` from space-separated ``"p-q"`` role pairs per label."""
    out: dict[Edge, str] = {}
    for lab, spec in parts.items():
        for pair in spec.split():
            p, q = pair.split("-")
            out[edge(r[p], r[q])] = lab
    return out


def _table_a(r, lab):
    if lab == "T":
        return _table(r, T="x-v3 v3-v1 v1-v2 v2-u2 u2-u1 u1-u3 u3-y", M="v3-v2 v1-u1 u2-u3")
    return _table(r, T="x-v3 v1-v3 v2-v3 u1-u3 u2-u3 u3-y", O="v1-v2 v2-u2 u2-u1 u1-v1")


_B_CONNECTED = {
    ("M", "M"): dict(T="x-v1 v1-v2 v2-v3 v3-u3 w-u1 u2-z", M="v1-v3 v2-y", O="u1-u2 u2-u3 u1-u3"),
    ("T", "T"): dict(T="x-v1 v1-v3 v3-v2 v2-y w-u1 u1-u3 u3-u2 u2-z", M="v1-v2 u1-u2 u3-v3"),
    ("T", "M"): dict(T="x-v1 v1-v2 v2-v3 v2-y v3-u3 w-u1 u2-z", M="v1-v3", O="u1-u2 u2-u3 u1-u3"),
    ("T", "O"): dict(T="x-v1 v1-v3 v3-v2 v2-y v3-u3 u3-u1 u3-u2", M="v1-v2", O="w-u1 u1-u2 u2-z"),
    ("M", "O"): dict(T="x-v1 v1-v2 v2-v3 v3-u3 u3-u1 u3-u2", M="v1-v3 v2-y", O="w-u1 u1-u2 u2-z"),
}

_B_DISCONNECTED = {
    ("M", "M"): dict(T="x-v1 v1-v2 v2-v3 v3-u3 u3-u2 u2-u1 u1-w", M="v1-v3 u1-u3 v2-y u2-z"),
    ("T", "T"): dict(T="x-v1 v1-v3 v2-v3 v2-y v3-u3 w-u1 u1-u3 u3-u2 u2-z", M="v1-v2 u1-u2"),
    ("T", "M"): dict(T="x-v1 v1-v2 v2-y v2-v3 v3-u3 u3-u2 u2-u1 u1-w", M="v1-v3 u1-u3 u2-z"),
}

_MIRROR = {"v1": "u1", "v2": "u2", "v3": "u3", "u1": "v1", "u2": "v2", "u3": "v3",
           "x": "w", "y": "z", "w": "x", "z": "y"}


def _table_b(r, lxy, lwz, disconnected):
    tables = _B_DISCONNECTED if disconnected else _B_CONNECTED
    if (lxy, lwz) in tables:
        return _table(r, **tables[(lxy, lwz)])
    if (lwz, lxy) in tables:
        mirrored = {_MIRROR[k]: v for k, v in r.items()}
        return _table(mirrored, **tables[(lwz, lxy)])
    raise InternalError(f"no StepB table for labels xy={lxy}, wz={lwz} (disconnected={disconnected})")


def _table_string(s: DiamondString, z: int, lab: str) -> dict[Edge, str]:
    ds = s.diamonds
    k = len(ds)
    out: dict[Edge, str] = {}
    for j in range(k - 1):
        out[edge(ds[j].d, ds[j + 1].a)] = "T"
    out[edge(ds[-1].d, z)] = "T"
    for i in range(1, k):
        d = ds[i]
        if lab == "M" and i == 1:
            for p, q in ((d.a, d.b), (d.b, d.c), (d.a, d.c)):
                out[edge(p, q)] = "O"
            out[edge(d.b, d.d)] = "T"
            out[edge(d.c, d.d)] = "T"
            continue
        for p, q in ((d.a, d.b), (d.b, d.c), (d.c, d.d)):
            out[edge(p, q)] = "T"
        out[edge(d.a, d.c)] = "M"
        out[edge(d.b, d.d)] = "M"
    return out


def _table_single(r, lab):
    if lab == "T":
        return _table(r, T="w-a a-b b-c c-d d-z", M="a-c b-d")
    return _table(r, T="w-a a-b a-c d-z", O="b-c c-d b-d")


def _table_cut(r):
    return _table(r, T="x-u u-w u-z w-a z-d d-c d-b", M="w-z", O="a-b b-c a-c")


def _table_cap(r, lab):
    if lab == "T":
        return _table(r, T="y1-x1 x1-x2 x2-y2 x-x1", M="x-x2")
    return _table(r, T="x1-x x1-x2 x2-y2", M="y1-x1 x-x2")


def _table_cap_diamond(r):
    return _table(r, T="s-y y-x1 x1-x2 x2-x", M="y-x2 x-x1")


def _table_cap_triangle(r):
    return _table(r, T="t-s s-y2 y2-y1 y1-x1 x1-x2 x2-x", M="x-x1 x2-y2 y1-s")


def _necklace_labels(s: DiamondString) -> dict[Edge, str]:
    ds = s.diamonds
    k = len(ds)
    first = ds[0]
    out = {
        edge(first.a, first.b): "O",
        edge(first.b, first.c): "O",
        edge(first.a, first.c): "O",
        edge(first.c, first.d): "T",
        edge(first.b, first.d): "T",
        edge(ds[-1].d, first.a): "T",
    }
    for i in range(k - 1):
        out[edge(ds[i].d, ds[i + 1].a)] = "T"
    for d in ds[1:]:
        for p, q in ((d.a, d.b), (d.b, d.c), (d.c, d.d)):
            out[edge(p, q)] = "T"
        out[edge(d.a, d.c)] = "M"
        out[edge(d.b, d.d)] = "M"
    return out


def _k4_labels(vs: Sequence[int]) -> dict[Edge, str]:
    q0, q1, q2, q3 = sorted(vs)
    out = {edge(q0, q): "T" for q in (q1, q2, q3)}
    out.update({edge(p, q): "O" for p, q in ((q1, q2), (q1, q3), (q2, q3))})
    return out


# -- engine ---------------------------------------------------------------------


class _Engine:
    def __init__(self, adj: Sequence[Sequence[int]], debug: bool = False):
        self.n = len(adj)
        self.adj: list[set[int]] = [set(a) for a in adj]
        self.present = bytearray(b"\x01") * self.n
        self.active = bytearray(b"\x01") * self.n
        self.labels: dict[Edge, str] = {}
        self.steps: list[ReductionStep] = []
        self.debug = debug
        self.ptr = 0
        self.pending_cap: Optional[int] = None
        self.diamonds: list[tuple[int, int]] = []
        for v in range(self.n):
            dm = local_diamond_at(self.adj, v)
            if dm is not None and dm.a < dm.d:
                self.diamonds.append((min(dm.vertices), v))
        heapq.heapify(self.diamonds)

    # ---- local structure

    def tri(self, v: int) -> tuple[int, int, int]:
        mates = local_mates(self.adj, v)
        if mates is None:
            raise InternalError(f"vertex {v} is not in a unique triangle")
        return tuple(sorted((v, *mates)))

    def out(self, v: int, unit: Sequence[int]) -> int:
        return local_outside(self.adj, v, unit)

    def connected(self, s: int, t: int) -> bool:
        """Interleaved BFS from both ends; cost bounded by the smaller side."""
        if s == t:
            return True
        adj = self.adj
        seen = ({s}, {t})
        queues = (deque([s]), deque([t]))
        while True:
            for side in (0, 1):
                q, mine, other = queues[side], seen[side], seen[1 - side]
                v = q.popleft()
                for w in adj[v]:
                    if w in other:
                        return True
                    if w not in mine:
                        mine.add(w)
                        q.append(w)
                if not q:
                    return False

    # ---- selection

    def _next_diamond(self) -> Optional[Diamond]:
        while self.diamonds:
            _, a = self.diamonds[0]
            dm = local_diamond_at(self.adj, a) if self.active[a] else None
            if dm is None or not all(self.active[v] for v in dm.vertices):
                heapq.heappop(self.diamonds)
                continue
            return dm
        return None

    def _next_active(self) -> Optional[int]:
        while self.ptr < self.n and not self.active[self.ptr]:
            self.ptr += 1
        return self.ptr if self.ptr < self.n else None

    def select(self):
        """Next reduction step, a base component, or None when finished."""
        if self.pending_cap is not None:
            return self._select_cap(self.pending_cap)
        dm = self._next_diamond()
        if dm is not None:
            return self._select_diamond(dm)
        v = self._next_active()
        if v is None:
            return None
        return self._select_step1(v)

    def _select_diamond(self, dm: Diamond):
        s = local_string(self.adj, dm)
        if s.config is StringConfig.NECKLACE:
            verts = s.vertices()
            for v in verts:
                if any(w not in verts for w in self.adj[v]):
                    raise InternalError("closed diamond string inside a larger component")
            return _Base("necklace", verts, _necklace_labels(s))
        d1 = s.diamonds[0]
        if s.k >= 2:
            removed = tuple(v for d in s.diamonds[1:] for v in d.vertices)
            roles = {"d1": d1.d, "w": s.w, "z": s.z}
            return ReductionStep(STRING, roles, removed, (edge(d1.d, s.z),), string=s)
        roles = {"a": d1.a, "b": d1.b, "c": d1.c, "d": d1.d, "w": s.w, "z": s.z}
        if s.config is StringConfig.DISTINCT_TRIANGLES:
            return ReductionStep(SINGLE, roles, d1.vertices, (edge(s.w, s.z),))
        u = s.u
        x = self.out(u, (s.w, s.z))
        roles.update(u=u, x=x)
        return ReductionStep(CUT_EDGE, roles, d1.vertices + (u, s.w, s.z))

    def _select_cap(self, x: int) -> ReductionStep:
        nb = sorted(self.adj[x])
        if len(nb) != 2 or nb[1] not in self.adj[nb[0]]:
            raise InternalError(f"cap vertex {x} does not cap a triangle")
        x1, x2 = nb
        y1 = self.out(x1, (x, x2))
        y2 = self.out(x2, (x, x1))
        if y1 == y2:
            s = self.out(y1, (x1, x2))
            return ReductionStep(CAP_DIAMOND, {"x": x, "x1": x1, "x2": x2, "y": y1, "s": s}, (x, x1, x2, y1))
        if y2 in self.adj[y1]:
            s = self.out(y1, (x1, y2))
            if s not in self.adj[y2]:
                raise InternalError(f"cap neighbours {y1}, {y2} are adjacent but not in a triangle")
            t = self.out(s, (y1, y2))
            roles = {"x": x, "x1": x1, "x2": x2, "y1": y1, "y2": y2, "s": s, "t": t}
            return ReductionStep(CAP_TRIANGLE, roles, (x, x1, x2, y1, y2, s))
        roles = {"x": x, "x1": x1, "x2": x2, "y1": y1, "y2": y2}
        return ReductionStep(CAP, roles, (x, x1, x2), (edge(y1, y2),))

    def _select_step1(self, v: int):
        adj = self.adj
        mates = local_mates(adj, v)
        if mates is None:
            nb = sorted(adj[v])
            if len(nb) == 3 and all(q in adj[p] for p, q in ((nb[0], nb[1]), (nb[0], nb[2]), (nb[1], nb[2]))):
                verts = sorted((v, *nb))
                return _Base("K4", verts, _k4_labels(verts))
            raise InternalError(f"vertex {v} lies in no unique triangle (claw or diamond left over)")
        start = self.tri(v)
        outs = [self.out(p, start) for p in start]
        if len({self.tri(o) for o in outs}) == 1:
            q = [outs[0], outs[1], outs[2]]
            p = list(start)
            labels = {edge(*e): "O" for e in ((p[0], p[1]), (p[1], p[2]), (p[0], p[2]))}
            labels.update({edge(p[i], q[i]): "T" for i in range(3)})
            labels.update({edge(q[0], q[1]): "T", edge(q[1], q[2]): "T", edge(q[0], q[2]): "M"})
            return _Base("prism", sorted(p + q), labels)
        seen = {start}
        queue = deque([start])
        while queue:
            unit = queue.popleft()
            step = self._site_at(unit)
            if step is not None:
                return step
            for p in unit:
                nxt = self.tri(self.out(p, unit))
                if nxt not in seen:
                    seen.add(nxt)
                    queue.append(nxt)
        raise InternalError(f"no reduction site in the component of vertex {v}")

    def _site_at(self, unit: tuple[int, int, int]) -> Optional[ReductionStep]:
        outs = [self.out(p, unit) for p in unit]
        units = [self.tri(o) for o in outs]
        for i in range(3):
            for j in range(i + 1, 3):
                if units[i] == units[j]:
                    q = units[i]
                    v1, v2 = unit[i], unit[j]
                    (v3,) = [p for p in unit if p not in (v1, v2)]
                    u1, u2 = outs[i], outs[j]
                    (u3,) = [p for p in q if p not in (u1, u2)]
                    x = outs[3 - i - j]
                    y = self.out(u3, q)
                    if self.tri(x) == self.tri(y):
                        return None
                    roles = {"v1": v1, "v2": v2, "v3": v3, "u1": u1, "u2": u2, "u3": u3, "x": x, "y": y}
                    return ReductionStep(STEP_A, roles, (v1, v2, v3, u1, u2, u3), (edge(x, y),))
        for i in range(3):
            q = units[i]
            q_outs = [self.out(p, q) for p in q]
            if len({self.tri(o) for o in q_outs}) < 3:
                continue
            v3, u3 = unit[i], outs[i]
            v1, v2 = [p for p in unit if p != v3]
            u1, u2 = [p for p in q if p != u3]
            x, y = outs[unit.index(v1)], outs[unit.index(v2)]
            w, z = q_outs[q.index(u1)], q_outs[q.index(u2)]
            roles = {"v1": v1, "v2": v2, "v3": v3, "u1": u1, "u2": u2, "u3": u3, "x": x, "y": y, "w": w, "z": z}
            return ReductionStep(STEP_B, roles, (v1, v2, v3, u1, u2, u3), (edge(x, y), edge(w, z)))
        return None

    # ---- graph edits

    def apply(self, step: ReductionStep) -> None:
        adj = self.adj
        removed_edges = set()
        for v in step.removed:
            if not self.active[v]:
                raise InternalError(f"step {step.kind} removes inactive vertex {v}")
            for w in adj[v]:
                removed_edges.add(edge(v, w))
        for p, q in removed_edges:
            adj[p].discard(q)
            adj[q].discard(p)
        for v in step.removed:
            self.present[v] = 0
            self.active[v] = 0
        for p, q in step.added:
            if q in adj[p] or p == q:
                raise InternalError(f"step {step.kind} would create a parallel edge or loop at {p}, {q}")
            adj[p].add(q)
            adj[q].add(p)
        step.removed_edges = tuple(sorted(removed_edges))
        if step.kind == STEP_B:
            step.disconnected = not self.connected(step.roles["x"], step.roles["w"])
        elif step.kind == CUT_EDGE:
            self.pending_cap = step.roles["x"]
        elif step.kind == CAP:
            self.pending_cap = None
        elif step.kind == CAP_DIAMOND:
            self.pending_cap = step.roles["s"]
        elif step.kind == CAP_TRIANGLE:
            self.pending_cap = step.roles["t"]
        self._check_after(step)

    def _check_after(self, step: ReductionStep) -> None:
        """Local re-check of degree, claw-freeness and triangle-freeness of new edges."""
        adj = self.adj
        touched = {v for e in step.added for v in e}
        touched.update(w for p, q in step.removed_edges for w in (p, q) if self.present[w])
        for v in touched:
            want = 2 if v == self.pending_cap else 3
            if len(adj[v]) != want:
                raise InternalError(f"after {step.kind}, vertex {v} has degree {len(adj[v])}")
            if want == 3:
                a, b, c = adj[v]
                if not (b in adj[a] or c in adj[a] or c in adj[b]):
                    raise InternalError(f"after {step.kind}, claw at {v}")
        for p, q in step.added:
            common = adj[p] & adj[q]
            if step.kind == CAP and len(common) == 2:
                # joining the outer vertices of a lone diamond closes it into K4
                b, c = common
                if c in adj[b]:
                    continue
            if common:
                raise InternalError(f"after {step.kind}, new edge {p}-{q} lies in a triangle")

    def undo(self, step: ReductionStep) -> None:
        adj = self.adj
        for p, q in step.added:
            adj[p].discard(q)
            adj[q].discard(p)
        for p, q in step.removed_edges:
            adj[p].add(q)
            adj[q].add(p)
        for v in step.removed:
            self.present[v] = 1

    def finish_base(self, base: _Base) -> None:
        for v in base.vertices:
            self.active[v] = 0
        self.labels.update(base.labels)

    # ---- driver

    def reduce(self) -> list[str]:
        kinds = []
        while True:
            item = self.select()
            if item is None:
                return kinds
            if isinstance(item, _Base):
                self.finish_base(item)
                kinds.append(item.kind)
            else:
                self.apply(item)
                self.steps.append(item)

    def reroute(self, e: Edge) -> None:
        try:
            reroute_in_place(self.adj, self.labels, e)
        except Exception as exc:
            raise InternalError(f"reroute of {e} failed: {exc}") from exc

    def lift_step(self, step: ReductionStep) -> None:
        r = step.roles
        labels = self.labels
        if step.kind == STEP_A:
            xy = edge(r["x"], r["y"])
            if labels[xy] == "O":
                self.reroute(xy)
            table = _table_a(r, labels[xy])
        elif step.kind == STEP_B:
            xy, wz = edge(r["x"], r["y"]), edge(r["w"], r["z"])
            if step.disconnected:
                for e in (xy, wz):
                    if labels[e] == "O":
                        self.reroute(e)
            elif labels[xy] == "O" and labels[wz] == "O":
                self.reroute(xy)
            table = _table_b(r, labels[xy], labels[wz], step.disconnected)
        elif step.kind == STRING:
            e = edge(r["d1"], r["z"])
            if labels[e] == "O":
                raise InternalError("string connector d1-z lies on an O-cycle")
            table = _table_string(step.string, r["z"], labels[e])
        elif step.kind == SINGLE:
            e = edge(r["w"], r["z"])
            if labels[e] == "O":
                self.reroute(e)
            table = _table_single(r, labels[e])
        elif step.kind == CUT_EDGE:
            table = _table_cut(r)
        elif step.kind == CAP:
            e = edge(r["y1"], r["y2"])
            if labels[e] == "O":
                self.reroute(e)
            table = _table_cap(r, labels[e])
        elif step.kind == CAP_DIAMOND:
            table = _table_cap_diamond(r)
        elif step.kind == CAP_TRIANGLE:
            table = _table_cap_triangle(r)
        else:
            raise InternalError(f"unknown step kind {step.kind}")
        if set(table) != set(step.removed_edges):
            raise InternalError(f"{step.kind} table does not cover the restored edges exactly")
        for e in step.added:
            del labels[e]
        self.undo(step)
        labels.update(table)
        if self.debug:
            self.check_component(step.removed[0], f"after lifting {step.trace_line()}")

    def lift(self) -> None:
        while self.steps:
            self.lift_step(self.steps.pop())

    def check_component(self, root: int, context: str) -> None:
        seen = {root}
        stack = [root]
        while stack:
            v = stack.pop()
            for w in self.adj[v]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        verts = sorted(seen)
        idx = {v: i for i, v in enumerate(verts)}
        sub = Graph(len(verts), [[idx[w] for w in self.adj[v]] for v in verts])
        sub_labels = {edge(idx[p], idx[q]): lab for (p, q), lab in self.labels.items() if p in idx and q in idx}
        cubic = all(len(a) == 3 for a in sub.adj)
        report = verify(sub, Decomposition(sub_labels), cubic=cubic)
        if not report.passed:
            raise InternalError(f"intermediate certificate fails {context}: {report.failures[:3]}")


# -- public API -----------------------------------------------------------------


def decompose(g: Graph, debug: bool = False, trace: Optional[list[str]] = None) -> Decomposition:
    """Good decomposition of a connected claw-free cubic graph.

    ``trace``, when given, receives one line per reduction step.  ``debug``
    re-verifies the certificate of every intermediate component.
    """
    check_claw_free_cubic(g)
    eng = _Engine(g.adj, debug=debug)
    eng.reduce()
    if trace is not None:
        trace.extend(s.trace_line() for s in eng.steps)
    eng.lift()
    d = Decomposition(eng.labels)
    report = verify(g, d)
    if not report.passed:
        raise InternalError(f"final certificate fails verification: {report.failures[:3]}")
    return d


def decompose_base(g: Graph) -> Optional[Decomposition]:
    """Certificate for K4, the prism and diamond necklaces; None otherwise."""
    check_claw_free_cubic(g)
    eng = _Engine(g.adj)
    item = eng.select()
    if isinstance(item, _Base) and len(item.vertices) == g.n:
        return Decomposition(item.labels)
    return None


def select_reduction(g: Graph, part: Optional[UnitPartition] = None) -> ReductionStep:
    """The first reduction the engine would perform on ``g``.

    ``part`` is accepted for interface symmetry; the engine recognises units
    locally.
    """
    check_claw_free_cubic(g)
    eng = _Engine(g.adj)
    item = eng.select()
    if item is None or isinstance(item, _Base):
        raise PreconditionFailed("graph is a base case", item.kind if item else None)
    eng.apply(item)
    return item


@dataclass
class ReducedGraph:
    graph: Graph
    relabel: dict[int, int]


def _reduced_components(eng: _Engine, step: ReductionStep) -> list[ReducedGraph]:
    if step.kind == STRING:
        roots = [step.roles["z"]]
    elif step.kind == SINGLE:
        roots = [step.roles["w"]]
    else:
        roots = [step.roles["x"]]
        if step.kind == STEP_B and step.disconnected:
            roots.append(step.roles["w"])
    out = []
    for root in roots:
        seen = {root}
        stack = [root]
        while stack:
            v = stack.pop()
            for w in eng.adj[v]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        verts = sorted(seen)
        relabel = {v: i for i, v in enumerate(verts)}
        graph = Graph(len(verts), [[relabel[w] for w in eng.adj[v]] for v in verts])
        out.append(ReducedGraph(graph, relabel))
    return out


def apply_reduction(g: Graph, step: ReductionStep) -> list[ReducedGraph]:
    """Reduced graph(s) for ``step`` with dense ids; two for a split StepB."""
    eng = _Engine(g.adj)
    step = replace(step)
    eng.apply(step)
    return _reduced_components(eng, step)


def lift(g: Graph, step: ReductionStep, reduced: Sequence[Decomposition]) -> Decomposition:
    """Certificate of ``g`` from certificates of the graphs ``apply_reduction`` returned."""
    eng = _Engine(g.adj)
    step = replace(step)
    eng.apply(step)
    parts = _reduced_components(eng, step)
    if len(parts) != len(reduced):
        raise InternalError(f"expected {len(parts)} reduced certificates, got {len(reduced)}")
    for part, d in zip(parts, reduced):
        inverse = {i: v for v, i in part.relabel.items()}
        for (p, q), lab in d.labels.items():
            eng.labels[edge(inverse[p], inverse[q])] = lab
    eng.lift_step(step)
    result = Decomposition(eng.labels)
    report = verify(g, result)
    if not report.passed:
        raise InternalError(f"lifted certificate fails verification: {report.failures[:3]}")
    return result


def _check_capped(g: Graph, x: int) -> None:
    degs = g.degrees()
    low = [v for v in range(g.n) if degs[v] != 3]
    if low != [x] or degs[x] != 2:
        raise PreconditionFailed("capped graph needs exactly one degree-2 vertex x, others cubic", {"low_degree": low})
    p, q = g.adj[x]
    if not g.has_edge(p, q):
        raise PreconditionFailed("degree-2 vertex does not cap a triangle", {"vertex": x})
    if len(components(g)) != 1:
        raise PreconditionFailed("not connected")
    claw = find_claw(g)
    if claw is not None:
        raise PreconditionFailed("claw", {"center": claw[0], "leaves": list(claw[1])})


def decompose_capped(g: Graph, x: int, debug: bool = False) -> Decomposition:
    """Good decomposition of a claw-free graph that is cubic except for one
    degree-2 vertex ``x`` capping a triangle.

    The cap triangle is suppressed (its outer neighbours joined), reducing to
    the cubic case; the exhaustive oracle is the fallback should that fail.
    """
    _check_capped(g, x)
    try:
        eng = _Engine(g.adj, debug=debug)
        eng.pending_cap = x
        eng.reduce()
        eng.lift()
        d = Decomposition(eng.labels)
        if verify(g, d, cubic=False).passed:
            return d
        log.warning("capped decomposition failed verification; falling back to the oracle")
    except InternalError as exc:
        log.warning("capped reduction failed (%s); falling back to the oracle", exc)
    from .oracle import oracle_decompose

    if g.n > ORACLE_THRESHOLD:
        log.warning("running the exhaustive oracle on n=%d", g.n)
    res = oracle_decompose(g, strict=False)
    if res.decomposition is None:
        raise CounterexampleFound(g)
    return res.decomposition
