"""Edge labelings T/M/O and their JSON form."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Literal

from .graph import Edge, Graph, edge

EdgeLabel = Literal["T", "M", "O"]
LABEL_ORDER = ("T", "M", "O")


@dataclass
class Decomposition:
    labels: dict[Edge, str] = field(default_factory=dict)

    @classmethod
    def from_parts(cls, tree=(), matching=(), cycles=()) -> Decomposition:
        labels: dict[Edge, str] = {}
        for part, lab in ((tree, "T"), (matching, "M"), (cycles, "O")):
            for u, v in part:
                labels[edge(u, v)] = lab
        return cls(labels)

    def part(self, label: str) -> list[Edge]:
        return sorted(e for e, lab in self.labels.items() if lab == label)

    @property
    def tree(self) -> list[Edge]:
        return self.part("T")

    @property
    def matching(self) -> list[Edge]:
        return self.part("M")

    @property
    def cycles(self) -> list[Edge]:
        return self.part("O")

    def __getitem__(self, e) -> str:
        return self.labels[edge(*e)]

    def to_json_dict(self, g: Graph) -> dict:
        edges = g.edges()
        return {
            "n": g.n,
            "edges": [list(e) for e in edges],
            "labels": [self.labels.get(e, "?") for e in edges],
        }

    def to_json(self, g: Graph) -> str:
        return json.dumps(self.to_json_dict(g), separators=(",", ":"))


def certificate_from_json(data: dict | str) -> tuple[Graph, Decomposition]:
    """Parse a certificate document back into the graph and its labeling."""
    if isinstance(data, str):
        data = json.loads(data)
    edges = [tuple(e) for e in data["edges"]]
    labels = data["labels"]
    if len(labels) != len(edges):
        raise ValueError("labels and edges differ in length")
    g = Graph.from_edge_list(int(data["n"]), edges)
    return g, Decomposition({edge(*e): lab for e, lab in zip(edges, labels)})


def to_dot(g: Graph, d: Decomposition, color: bool = False) -> str:
    style = {"T": "solid", "M": "dashed", "O": "bold"}
    colors = {"T": "black", "M": "blue", "O": "red"}
    lines = ["graph G {"]
    for v in range(g.n):
        lines.append(f"  {v};")
    for u, v in g.edges():
        lab = d.labels.get((u, v), "?")
        attrs = f'style={style.get(lab, "dotted")}, label="{lab}"'
        if color:
            attrs += f", color={colors.get(lab, 'gray')}"
        lines.append(f"  {u} -- {v} [{attrs}];")
    lines.append("}")
    return "\n".join(lines) + "\n"
