"""Graph files and result reports.

Graph format: ``#`` comment lines, a header ``p sp <n> <m>``, then exactly ``m``
lines ``a <src> <dst> <weight>`` with 0-based ids and decimal weights.
"""
from __future__ import annotations

import json
import math
from fractions import Fraction
from typing import IO, Iterable

from .graph import Graph, GraphError, SsspOutcome, build_graph, cycle_weight

SCHEMA = 1


class ParseError(GraphError):
    def __init__(self, msg: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {msg}" if line is not None else msg)


class CountError(ParseError):
    pass


def _lines(src) -> Iterable[str]:
    if isinstance(src, str):
        return src.splitlines()
    return src


def parse_graph(src, mode: str = "rational") -> Graph:
    """Read a graph from text or a line iterable (e.g. an open file)."""
    header = None
    edges = []
    last = 0
    for lineno, raw in enumerate(_lines(src), 1):
        last = lineno
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if parts[0] == "p":
            if header is not None:
                raise ParseError("second header line", lineno)
            if len(parts) != 4 or parts[1] != "sp":
                raise ParseError("header must be 'p sp <n> <m>'", lineno)
            try:
                n, m = int(parts[2]), int(parts[3])
            except ValueError:
                raise ParseError("header counts must be integers", lineno) from None
            if n < 0 or m < 0:
                raise ParseError("header counts must be non-negative", lineno)
            header = (n, m, lineno)
        elif parts[0] == "a":
            if header is None:
                raise ParseError("edge line before header", lineno)
            if len(parts) != 4:
                raise ParseError("edge line must be 'a <src> <dst> <weight>'", lineno)
            try:
                u, v = int(parts[1]), int(parts[2])
            except ValueError:
                raise ParseError("vertex ids must be integers", lineno) from None
            n = header[0]
            if not (0 <= u < n and 0 <= v < n):
                raise ParseError(f"vertex id outside [0, {n})", lineno)
            w = _parse_weight(parts[3], mode, lineno)
            edges.append((u, v, w))
        else:
            raise ParseError(f"unknown line type {parts[0]!r}", lineno)
    if header is None:
        raise ParseError("missing 'p sp' header", last or None)
    n, m, hl = header
    if len(edges) != m:
        raise CountError(f"header announces {m} edges, found {len(edges)}", hl)
    return build_graph(n, edges, mode)


def _parse_weight(tok: str, mode: str, lineno: int):
    try:
        if mode == "float":
            w = float(tok)
            if not math.isfinite(w):
                raise ValueError
            return w
        w = Fraction(tok)
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"bad weight {tok!r}", lineno) from None
    return int(w) if w.denominator == 1 else w


def format_weight(w) -> str:
    """Exact text for a weight or distance: ints, terminating decimals, else ``p/q``."""
    if w == math.inf:
        return "inf"
    if w == -math.inf:
        return "-inf"
    if isinstance(w, int):
        return str(w)
    if isinstance(w, float):
        return repr(w)
    q = Fraction(w)
    if q.denominator == 1:
        return str(q.numerator)
    d, digits = q.denominator, 0
    while d % 10 == 0:
        d //= 10
        digits += 1
    while d % 2 == 0 or d % 5 == 0:
        d //= 2 if d % 2 == 0 else 5
        digits += 1
    if d != 1:
        return f"{q.numerator}/{q.denominator}"
    # exact: scale to an integer instead of going through a finite-precision Decimal
    scaled = abs(q.numerator) * 10 ** digits // q.denominator
    whole, frac = divmod(scaled, 10 ** digits)
    sign = "-" if q < 0 else ""
    return f"{sign}{whole}.{frac:0{digits}d}".rstrip("0").rstrip(".")


def write_graph(g: Graph, out: IO[str], comment: str | None = None) -> None:
    if comment:
        for line in comment.splitlines():
            out.write(f"# {line}\n")
    out.write(f"p sp {g.n} {g.m}\n")
    for e in g.edges:
        out.write(f"a {e.src} {e.dst} {format_weight(e.weight)}\n")


def graph_text(g: Graph, comment: str | None = None) -> str:
    import io as _io

    buf = _io.StringIO()
    write_graph(g, buf, comment)
    return buf.getvalue()


def result_dict(g: Graph, outcome: SsspOutcome, trace=None, timings: bool = False) -> dict:
    d: dict = {"schema": SCHEMA}
    if outcome.has_cycle:
        d["status"] = "negative_cycle"
        d["cycle"] = list(outcome.cycle)
        d["cycle_edges"] = list(outcome.cycle_edges)
        d["cycle_weight"] = format_weight(cycle_weight(g, outcome.cycle_edges))
    else:
        d["status"] = "ok"
        d["dist"] = [format_weight(x) for x in outcome.dist]
    if trace is not None:
        d["trace"] = trace.as_dict(timings=timings)
    return d


def emit_result(g: Graph, outcome: SsspOutcome, trace=None, fmt: str = "text",
                out: IO[str] | None = None, timings: bool = False) -> str:
    """Render a result as text lines or JSON; also written to ``out`` if given."""
    if fmt == "json":
        text = json.dumps(result_dict(g, outcome, trace, timings), sort_keys=True, indent=1) + "\n"
    elif fmt == "text":
        lines = []
        if outcome.has_cycle:
            lines.append("NEGATIVE CYCLE")
            lines += [f"c {v}" for v in outcome.cycle]
            lines.append(f"cycle_weight {format_weight(cycle_weight(g, outcome.cycle_edges))}")
        else:
            lines += [f"d {v} {format_weight(x)}" for v, x in enumerate(outcome.dist)]
        text = "\n".join(lines) + "\n"
    else:
        raise ValueError(f"unknown format {fmt!r}")
    if out is not None:
        out.write(text)
    return text


def parse_number(tok: str):
    if tok == "inf":
        return math.inf
    q = Fraction(tok)
    return int(q) if q.denominator == 1 else q


def read_report(text: str) -> dict:
    """Parse a JSON report back, turning distance strings into numbers."""
    d = json.loads(text)
    if d.get("schema") != SCHEMA:
        raise ValueError(f"unsupported report schema {d.get('schema')!r}")
    if "dist" in d:
        d["dist"] = [parse_number(x) for x in d["dist"]]
    if "cycle_weight" in d:
        d["cycle_weight"] = parse_number(d["cycle_weight"])
    return d
