"""Graph files and report serialisation.

Edge-list format: a header line ``n m`` followed by ``m`` lines ``u v`` with
``0 <= u, v < n`` in ASCII decimal.  Written files always use ``u < v`` and
lexicographic order; reading accepts either orientation of a pair.  Graph6
is supported for reading only.
"""

from __future__ import annotations

import csv
import io
import json

from .errors import EdgeListError
from .graph_core import Graph


def parse_edge_list(data: bytes | str) -> Graph:
    text = data.decode("ascii") if isinstance(data, bytes) else data
    lines = text.splitlines()
    while lines and not lines[-1].strip():
        lines.pop()
    if not lines:
        raise EdgeListError("missing header 'n m'", 1)
    header = lines[0].split()
    if len(header) != 2 or not all(tok.isdigit() for tok in header):
        raise EdgeListError(f"malformed header {lines[0]!r}; expected 'n m'", 1)
    n, m = int(header[0]), int(header[1])
    body = lines[1:]
    if len(body) != m:
        raise EdgeListError(f"header declares {m} edges but {len(body)} edge lines follow", 1)
    rows = [0] * n
    for lineno, line in enumerate(body, start=2):
        tokens = line.split()
        if len(tokens) != 2 or not all(tok.isdigit() for tok in tokens):
            raise EdgeListError(f"malformed edge line {line!r}; expected 'u v'", lineno)
        u, v = int(tokens[0]), int(tokens[1])
        if u >= n or v >= n:
            raise EdgeListError(f"vertex out of range in {line!r} (n={n})", lineno)
        if u == v:
            raise EdgeListError(f"self-loop at vertex {u}", lineno)
        if rows[u] >> v & 1:
            raise EdgeListError(f"duplicate edge {min(u, v)} {max(u, v)}", lineno)
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, tuple(rows))


def serialize_edge_list(g: Graph) -> str:
    edges = g.edges()
    out = [f"{g.n} {len(edges)}"]
    out.extend(f"{u} {v}" for u, v in edges)
    return "\n".join(out) + "\n"


def _g6_bits(chars: bytes, count: int) -> list[int]:
    bits = []
    for c in chars:
        if not 63 <= c <= 126:
            raise EdgeListError(f"invalid graph6 byte {c}")
        val = c - 63
        bits.extend((val >> (5 - i)) & 1 for i in range(6))
    if len(bits) < count:
        raise EdgeListError("graph6 string too short")
    return bits[:count]


def parse_graph6(data: bytes | str) -> Graph:
    """Decode one graph6 record (an optional ``>>graph6<<`` prefix is allowed)."""
    raw = data.encode("ascii") if isinstance(data, str) else data
    raw = raw.strip()
    if raw.startswith(b">>graph6<<"):
        raw = raw[len(b">>graph6<<"):]
    if not raw:
        raise EdgeListError("empty graph6 record")
    if raw[0] == 126 and len(raw) > 1 and raw[1] == 126:
        n = 0
        for c in raw[2:8]:
            n = (n << 6) | (c - 63)
        rest = raw[8:]
    elif raw[0] == 126:
        n = 0
        for c in raw[1:4]:
            n = (n << 6) | (c - 63)
        rest = raw[4:]
    else:
        n = raw[0] - 63
        rest = raw[1:]
    bits = _g6_bits(rest, n * (n - 1) // 2)
    rows = [0] * n
    i = 0
    for v in range(1, n):
        for u in range(v):
            if bits[i]:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
            i += 1
    return Graph(n, tuple(rows))


def read_graph(path: str) -> Graph:
    with open(path, "rb") as fh:
        data = fh.read()
    if path.endswith(".g6") or data.startswith(b">>graph6<<"):
        return parse_graph6(data.splitlines()[0] if data.strip() else b"")
    return parse_edge_list(data)


def dump_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


HISTOGRAM_COLUMNS = ("degree", "predicted", "observed_mean", "observed_std", "z")
CHECK_COLUMNS = ("claim", "status", "lhs", "relation", "rhs", "tolerance", "note")


def dump_csv(rows: list[dict], columns: tuple[str, ...]) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=list(columns), lineterminator="\r\n", extrasaction="ignore")
    writer.writeheader()
    for row in rows:
        writer.writerow({c: "" if row.get(c) is None else row.get(c) for c in columns})
    return buf.getvalue()
