"""Graph serialization (edge lists, graph6) and JSON report envelopes."""

from __future__ import annotations

import dataclasses
import json
from fractions import Fraction

from . import __version__
from .errors import GraphError, ParseError
from .graph import Graph

__all__ = [
    "parse_edge_list",
    "format_edge_list",
    "decode_graph6",
    "encode_graph6",
    "ReportEnvelope",
    "to_jsonable",
]

GRAPH6_MAX_ORDER = 62


def parse_edge_list(text: str) -> Graph:
    """Parse ``n <count>`` followed by one ``u v`` pair per line (0-indexed).

    Blank lines are ignored. Errors carry the 1-based line number.
    """
    n = None
    edges = []
    seen = set()
    for lineno, raw in enumerate(text.splitlines(), 1):
        parts = raw.split()
        if not parts:
            continue
        if n is None:
            if len(parts) != 2 or parts[0] != "n":
                raise ParseError("expected header 'n <count>'", lineno)
            try:
                n = int(parts[1])
            except ValueError:
                raise ParseError(f"vertex count {parts[1]!r} is not an integer", lineno) from None
            if n < 1:
                raise ParseError(f"vertex count must be >= 1, got {n}", lineno)
            continue
        if len(parts) != 2:
            raise ParseError(f"expected 'u v', got {raw.strip()!r}", lineno)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(f"non-integer vertex in {raw.strip()!r}", lineno) from None
        if u == v:
            raise ParseError(f"self-loop at vertex {u}", lineno)
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"vertex index out of range [0, {n}) in {raw.strip()!r}", lineno)
        key = (min(u, v), max(u, v))
        if key in seen:
            raise ParseError(f"duplicate edge {{{key[0]}, {key[1]}}}", lineno)
        seen.add(key)
        edges.append(key)
    if n is None:
        raise ParseError("empty input: missing header 'n <count>'")
    return Graph.from_edges(n, edges)


def format_edge_list(g: Graph) -> str:
    lines = [f"n {g.n}"] + [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def encode_graph6(g: Graph) -> str:
    """graph6 short form: order byte, then the upper triangle column by column."""
    if g.n > GRAPH6_MAX_ORDER:
        raise GraphError(f"graph6 short form supports n <= {GRAPH6_MAX_ORDER}, got {g.n}")
    bits = [1 if g.has_edge(i, j) else 0 for j in range(1, g.n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    out = [chr(g.n + 63)]
    for p in range(0, len(bits), 6):
        value = 0
        for b in bits[p:p + 6]:
            value = value << 1 | b
        out.append(chr(value + 63))
    return "".join(out)


def decode_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise ParseError("empty graph6 string")
    for c in s:
        if not 63 <= ord(c) <= 126:
            raise ParseError(f"invalid graph6 character {c!r}")
    if ord(s[0]) == 126:
        raise ParseError(f"graph6 long form (n > {GRAPH6_MAX_ORDER}) is not supported")
    n = ord(s[0]) - 63
    if n < 1:
        raise ParseError("graph6 order must be >= 1")
    nbits = n * (n - 1) // 2
    expected = 1 + (nbits + 5) // 6
    if len(s) != expected:
        raise ParseError(f"graph6 length {len(s)} does not match n={n} (expected {expected})")
    bits = []
    for c in s[1:]:
        value = ord(c) - 63
        bits.extend((value >> (5 - i)) & 1 for i in range(6))
    if any(bits[nbits:]):
        raise ParseError("nonzero graph6 padding bits")
    pos = 0
    edges = []
    for j in range(1, n):
        for i in range(j):
            if bits[pos]:
                edges.append((i, j))
            pos += 1
    return Graph.from_edges(n, edges)


def to_jsonable(obj):
    """Convert reports to JSON-ready values; fractions become ``"p/q"`` strings."""
    if isinstance(obj, Fraction):
        return f"{obj.numerator}/{obj.denominator}"
    if isinstance(obj, bool) or obj is None or isinstance(obj, (int, str)):
        return obj
    if isinstance(obj, float):
        raise TypeError("floats are not allowed in reports")
    if isinstance(obj, Graph):
        return {"n": obj.n, "edges": [list(e) for e in obj.edges()]}
    if dataclasses.is_dataclass(obj):
        return {f.name: to_jsonable(getattr(obj, f.name)) for f in dataclasses.fields(obj)}
    if isinstance(obj, dict):
        return {str(k): to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_jsonable(v) for v in obj]
    if hasattr(obj, "item"):  # numpy scalars
        return to_jsonable(obj.item())
    raise TypeError(f"cannot serialize {type(obj).__name__}")


@dataclasses.dataclass
class ReportEnvelope:
    command: str
    parameters: dict
    results: object
    artifact_version: str = __version__

    def to_json(self) -> str:
        return json.dumps(to_jsonable(self), sort_keys=True, indent=2) + "\n"
