"""graph6 and JSON interchange for graphs, polynomials and reports."""

from __future__ import annotations

import json
from typing import Any

from .graph import Graph, GraphError
from .poly import IntPoly

SCHEMA_VERSION = 1

_HEADER = ">>graph6<<"


def _encode_n(n: int) -> str:
    if n < 63:
        return chr(n + 63)
    if n < 258048:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))


def to_graph6(g: Graph) -> str:
    bits = []
    for j in range(1, g.n):
        for i in range(j):
            bits.append(1 if g.has_edge(i, j) else 0)
    bits += [0] * (-len(bits) % 6)
    body = "".join(
        chr(63 + int("".join(map(str, bits[i : i + 6])), 2)) for i in range(0, len(bits), 6)
    )
    return _encode_n(g.n) + body


def from_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(_HEADER):
        s = s[len(_HEADER) :]
    if not s:
        raise GraphError("empty graph6 string")
    vals = [ord(c) - 63 for c in s]
    if any(not 0 <= v < 64 for v in vals):
        raise GraphError(f"invalid graph6 character in {text!r}")
    if vals[0] < 63:
        n, rest = vals[0], vals[1:]
    elif len(vals) > 1 and vals[1] < 63:
        n = (vals[1] << 12) | (vals[2] << 6) | vals[3]
        rest = vals[4:]
    else:
        n = 0
        for v in vals[2:8]:
            n = (n << 6) | v
        rest = vals[8:]
    need = -(-(n * (n - 1) // 2) // 6)
    if len(rest) != need:
        raise GraphError(f"graph6 body has {len(rest)} bytes, expected {need} for n={n}")
    bits = []
    for v in rest:
        bits.extend((v >> s) & 1 for s in range(5, -1, -1))
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                edges.append((i, j))
            k += 1
    return Graph(n, edges)


def graph_to_json(g: Graph) -> dict[str, Any]:
    return {"n": g.n, "edges": [list(e) for e in g.edges]}


def graph_from_json(data: dict[str, Any] | str) -> Graph:
    if isinstance(data, str):
        data = json.loads(data)
    try:
        return Graph(int(data["n"]), [tuple(e) for e in data.get("edges", [])])
    except (KeyError, TypeError) as exc:
        raise GraphError(f"malformed graph JSON: {exc}") from None


def poly_to_json(p: IntPoly) -> list[str]:
    return p.to_json()


def poly_from_json(data: list[str] | str) -> IntPoly:
    if isinstance(data, str):
        data = json.loads(data)
    return IntPoly.from_json(data)


def dumps(payload: dict[str, Any]) -> str:
    """Deterministic JSON with the schema version stamped in."""
    out = {"schema_version": SCHEMA_VERSION}
    out.update(payload)
    return json.dumps(out, sort_keys=True, indent=2)
