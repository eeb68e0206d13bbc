"""Certificate checking and structural diagnostics on O-cycles."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

from .certificate import Decomposition
from .graph import Edge, Graph, edge
from .recognition import Diamond, UnitPartition

CHECKS = (
    "partition-total",
    "tree-spanning",
    "tree-acyclic",
    "matching-disjoint",
    "o-two-regular",
    "o-nonempty",
    "size-arithmetic",
)


@dataclass
class Failure:
    check: str
    witness: Any


@dataclass
class VerificationReport:
    failures: list[Failure] = field(default_factory=list)
    checks: tuple[str, ...] = CHECKS

    @property
    def passed(self) -> bool:
        return not self.failures

    def __bool__(self) -> bool:
        return self.passed

    def failed(self, check: str) -> bool:
        return any(f.check == check for f in self.failures)

    def to_json_dict(self) -> dict:
        return {
            "pass": self.passed,
            "checks": list(self.checks),
            "failures": [{"check": f.check, "witness": f.witness} for f in self.failures],
        }


def _find(parent: list[int], v: int) -> int:
    while parent[v] != v:
        parent[v] = parent[parent[v]]
        v = parent[v]
    return v


def verify(g: Graph, d: Decomposition, cubic: bool | None = None) -> VerificationReport:
    """Check that ``d`` splits E(G) into a spanning tree, a matching and a 2-regular part.

    ``o-nonempty`` and ``size-arithmetic`` apply to cubic graphs only; pass
    ``cubic`` to override detection.
    """
    report = VerificationReport()
    fail = report.failures.append
    if cubic is None:
        cubic = g.n > 0 and all(len(a) == 3 for a in g.adj)

    edges = g.edges()
    edge_set = set(edges)
    for e in edges:
        lab = d.labels.get(e)
        if lab not in ("T", "M", "O"):
            fail(Failure("partition-total", {"edge": list(e), "label": lab}))
    for e in d.labels:
        if e not in edge_set:
            fail(Failure("partition-total", {"edge": list(e), "label": d.labels[e], "reason": "not an edge"}))

    tree = [e for e in edges if d.labels.get(e) == "T"]
    match = [e for e in edges if d.labels.get(e) == "M"]
    cyc = [e for e in edges if d.labels.get(e) == "O"]

    parent = list(range(g.n))
    for u, v in tree:
        ru, rv = _find(parent, u), _find(parent, v)
        if ru == rv:
            fail(Failure("tree-acyclic", {"edge": [u, v]}))
        else:
            parent[ru] = rv
    if g.n:
        root = _find(parent, 0)
        for v in range(g.n):
            if _find(parent, v) != root:
                fail(Failure("tree-spanning", {"vertex": v}))
                break

    used = [0] * g.n
    for u, v in match:
        for w in (u, v):
            used[w] += 1
            if used[w] == 2:
                fail(Failure("matching-disjoint", {"vertex": w}))

    odeg = [0] * g.n
    for u, v in cyc:
        odeg[u] += 1
        odeg[v] += 1
    for v in range(g.n):
        if odeg[v] not in (0, 2):
            fail(Failure("o-two-regular", {"vertex": v, "o_degree": odeg[v]}))

    if cubic:
        if not cyc:
            fail(Failure("o-nonempty", {"o_edges": 0}))
        if len(tree) != g.n - 1 or len(match) + len(cyc) != g.n // 2 + 1:
            fail(Failure("size-arithmetic", {"T": len(tree), "M": len(match), "O": len(cyc), "n": g.n}))
    return report


def o_cycles(g: Graph, d: Decomposition) -> list[list[int]]:
    """Vertex sequences of the O-cycles; assumes the O-part is 2-regular."""
    onb: dict[int, list[int]] = {}
    for (u, v), lab in d.labels.items():
        if lab == "O":
            onb.setdefault(u, []).append(v)
            onb.setdefault(v, []).append(u)
    seen: set[int] = set()
    out = []
    for s in sorted(onb):
        if s in seen:
            continue
        cyc = [s]
        seen.add(s)
        prev, cur = s, min(onb[s])
        while cur != s:
            cyc.append(cur)
            seen.add(cur)
            a, b = onb[cur]
            prev, cur = cur, (b if a == prev else a)
        out.append(cyc)
    return out


def lemma2_check(g: Graph, d: Decomposition, part: UnitPartition) -> list[dict]:
    """Report non-triangle O-cycles that have a chord, odd length or a diamond vertex."""
    problems = []
    for cyc in o_cycles(g, d):
        if len(cyc) == 3:
            continue
        on = set(cyc)
        consecutive: set[Edge] = {edge(cyc[i], cyc[(i + 1) % len(cyc)]) for i in range(len(cyc))}
        chords = sorted({edge(u, w) for u in cyc for w in g.adj[u] if w in on} - consecutive)
        if chords:
            problems.append({"property": "chordless", "cycle": cyc, "chords": [list(c) for c in chords]})
        if len(cyc) % 2:
            problems.append({"property": "even", "cycle": cyc})
        in_diamond = [v for v in cyc if isinstance(part.units[part.unit_of[v]], Diamond)]
        if in_diamond:
            problems.append({"property": "diamond-free", "cycle": cyc, "vertices": in_diamond})
    return problems
