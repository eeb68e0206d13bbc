"""Command-line front end: decompose, verify, oracle, gen and sweep.

Data goes to stdout, diagnostics to stderr.  Exit status 0 means success,
1 a failed verification or refused/failed decomposition, 2 a usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass
from typing import Optional

from .certificate import certificate_from_json, to_dot
from .decompose import ORACLE_THRESHOLD, decompose
from .errors import GraphError, PreconditionFailed
from .generators import GenSpec, gen_named, random_claw_free_cubic
from .graph import Graph, from_edge_list_text, from_graph6, to_edge_list_text, to_graph6
from .oracle import oracle_decompose
from .recognition import is_k4, unit_partition
from .verify import lemma2_check, verify

OUTPUTS = {
    "decompose": ("json", "dot", "edgelist"),
    "verify": ("json",),
    "oracle": ("json",),
    "gen": ("graph6", "edgelist"),
    "sweep": ("text", "json"),
}


class UsageError(Exception):
    pass


@dataclass
class CliConfig:
    command: str
    input: str = "-"
    input_format: str = "auto"
    output_format: Optional[str] = None
    trace: bool = False
    debug_verify: bool = False
    strict_oracle: bool = False
    color: bool = False
    seed: int = 0
    family: Optional[str] = None
    k: int = 0
    j: int = 0
    n: int = 0
    count: int = 0

    def validate(self) -> None:
        allowed = OUTPUTS[self.command]
        if self.output_format is None:
            self.output_format = allowed[0]
        if self.output_format not in allowed:
            raise UsageError(f"{self.command} does not support output format {self.output_format!r}")
        if self.command == "gen" and not self.family:
            raise UsageError("gen needs --family")
        if self.command == "sweep" and self.count and self.n < 4:
            raise UsageError("sweep --random needs --n >= 4")


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="ascii") as fh:
        return fh.read()


def _detect(text: str) -> str:
    s = text.lstrip()
    if s.startswith("{"):
        return "json"
    first = s.splitlines()[0].split() if s else []
    if len(first) == 2 and all(tok.lstrip("-").isdigit() for tok in first):
        return "edgelist"
    return "graph6"


def parse_graph(text: str, fmt: str = "auto") -> Graph:
    """Read a graph given as graph6, an edge list, or a certificate document."""
    if fmt == "auto":
        fmt = _detect(text)
    if fmt == "json":
        return certificate_from_json(text)[0]
    if fmt == "edgelist":
        return from_edge_list_text(text)
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if len(lines) != 1:
        raise UsageError(f"expected exactly one graph6 line, got {len(lines)}")
    return from_graph6(lines[0].strip())


def _emit(obj) -> None:
    sys.stdout.write(json.dumps(obj, separators=(",", ":")) + "\n")


def _cmd_decompose(cfg: CliConfig) -> int:
    g = parse_graph(_read_text(cfg.input), cfg.input_format)
    trace: list[str] = []
    try:
        d = decompose(g, debug=cfg.debug_verify, trace=trace)
    except PreconditionFailed as exc:
        _emit_err({"refusal": exc.reason, "witness": exc.witness})
        return 1
    if cfg.trace:
        for line in trace:
            print(line, file=sys.stderr)
    if cfg.output_format == "dot":
        sys.stdout.write(to_dot(g, d, color=cfg.color))
    elif cfg.output_format == "edgelist":
        for e in g.edges():
            sys.stdout.write(f"{e[0]} {e[1]} {d.labels[e]}\n")
    else:
        sys.stdout.write(d.to_json(g) + "\n")
    return 0


def _emit_err(obj) -> None:
    sys.stderr.write(json.dumps(obj, default=list) + "\n")


def _cmd_verify(cfg: CliConfig) -> int:
    try:
        g, d = certificate_from_json(_read_text(cfg.input))
    except (KeyError, TypeError, ValueError) as exc:
        raise UsageError(f"not a certificate document: {exc}") from exc
    report = verify(g, d)
    _emit(report.to_json_dict())
    return 0 if report.passed else 1


def _cmd_oracle(cfg: CliConfig) -> int:
    g = parse_graph(_read_text(cfg.input), cfg.input_format)
    res = oracle_decompose(g, strict=cfg.strict_oracle)
    _emit(res.to_json_dict(g))
    if not res.found:
        print(f"no good decomposition among {res.trees_examined} spanning trees", file=sys.stderr)
        return 1 if cfg.strict_oracle else 0
    return 0


def _cmd_gen(cfg: CliConfig) -> int:
    family = cfg.family.lower()
    if family in ("random-claw-free", "decorated"):
        g = random_claw_free_cubic(cfg.n, cfg.seed, strings=cfg.k, bracelets=cfg.j)
    else:
        g = gen_named(GenSpec(family, k=cfg.k, j=cfg.j, n=cfg.n, seed=cfg.seed))
    sys.stdout.write(to_graph6(g) + "\n" if cfg.output_format == "graph6" else to_edge_list_text(g))
    return 0


def check_one(g: Graph, oracle_threshold: int = ORACLE_THRESHOLD) -> dict:
    """decompose + verify (+ oracle on small graphs) + cycle diagnostics for one graph."""
    row: dict = {"n": g.n, "decompose": "ok", "verify": "-", "oracle": "-", "lemma2": "-"}
    t0 = time.perf_counter()
    try:
        d = decompose(g)
    except GraphError as exc:
        row["decompose"] = type(exc).__name__
        d = None
    row["seconds"] = round(time.perf_counter() - t0, 4)
    if d is not None:
        row["verify"] = "pass" if verify(g, d).passed else "FAIL"
        # K4 has no unit partition, and its O-part is always a triangle
        clean = is_k4(g) or not lemma2_check(g, d, unit_partition(g))
        row["lemma2"] = "ok" if clean else "FAIL"
    if g.n <= oracle_threshold:
        res = oracle_decompose(g)
        agree = res.found == (d is not None)
        row["oracle"] = ("found" if res.found else "none") + ("" if agree else " DISAGREE")
    row["ok"] = (
        row["decompose"] == "ok"
        and row["verify"] == "pass"
        and row["lemma2"] == "ok"
        and "DISAGREE" not in row["oracle"]
    )
    return row


def _cmd_sweep(cfg: CliConfig) -> int:
    graphs: list[tuple[str, Graph]] = []
    if cfg.count:
        for i in range(cfg.count):
            s = cfg.seed + i
            g = random_claw_free_cubic(cfg.n, s, strings=s % 3, bracelets=s % 2)
            graphs.append((f"random:{cfg.n}:{s}", g))
    else:
        for ln in _read_text(cfg.input).splitlines():
            ln = ln.strip()
            if ln and not ln.startswith("#"):
                graphs.append((ln, from_graph6(ln)))
    bad = 0
    for name, g in graphs:
        row = check_one(g)
        row["graph"] = name
        bad += not row["ok"]
        if cfg.output_format == "json":
            _emit(row)
        else:
            print(f"{name}\tn={row['n']}\tdecompose={row['decompose']}\tverify={row['verify']}"
                  f"\toracle={row['oracle']}\tlemma2={row['lemma2']}\t{row['seconds']}s")
    print(f"sweep: {len(graphs)} graphs, {bad} failures", file=sys.stderr)
    return 1 if bad else 0


COMMANDS = {
    "decompose": _cmd_decompose,
    "verify": _cmd_verify,
    "oracle": _cmd_oracle,
    "gen": _cmd_gen,
    "sweep": _cmd_sweep,
}


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="cubicdecomp", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        sp = sub.add_parser(name)
        sp.add_argument("input", nargs="?", default="-", help="input file, '-' for stdin")
        sp.add_argument("--input-format", choices=("auto", "graph6", "edgelist", "json"), default="auto")
        sp.add_argument("-f", "--format", dest="output_format", default=None,
                        help="output format: " + ", ".join(OUTPUTS[name]))
        sp.add_argument("--trace", action="store_true", help="print reduction steps to stderr")
        sp.add_argument("--debug-verify", action="store_true", help="verify every intermediate certificate")
        sp.add_argument("--strict-oracle", action="store_true", help="require a nonempty 2-regular part; exit 1 on None")
        sp.add_argument("--color", action="store_true", help="colored DOT output")
        sp.add_argument("--seed", type=int, default=0)
        sp.add_argument("--family")
        sp.add_argument("--k", type=int, default=0)
        sp.add_argument("--j", type=int, default=0)
        sp.add_argument("--n", type=int, default=0)
        sp.add_argument("--random", dest="count", type=int, default=0,
                        help="sweep: generate this many decorated random graphs instead of reading input")
    return p


def run(cfg: CliConfig) -> int:
    cfg.validate()
    return COMMANDS[cfg.command](cfg)


def main(argv: Optional[list[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    cfg = CliConfig(**vars(args))
    try:
        return run(cfg)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"cannot read input: {exc}", file=sys.stderr)
        return 2
    except GraphError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
