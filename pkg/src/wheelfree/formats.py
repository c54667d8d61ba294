"""Interchange formats: graph6, DIMACS .col and a plain edge list.

graph6 here is the short form only (n <= 62): the size byte is n+63 and
the upper-triangle bits x(0,1), x(0,2), x(1,2), x(0,3), ... are packed
big-endian into 6-bit groups, each stored as value+63, zero-padded.
"""

from __future__ import annotations

import warnings

from .errors import ParseError, ParseWarning
from .graph import Graph

GRAPH6_HEADER = ">>graph6<<"


def _as_text(data) -> str:
    if isinstance(data, (bytes, bytearray)):
        try:
            return data.decode("ascii")
        except UnicodeDecodeError as exc:
            raise ParseError("graph6 input is not ASCII", offset=exc.start) from None
    return data


def parse_graph6(data) -> Graph:
    """Decode one graph6 line (optionally prefixed with '>>graph6<<')."""
    text = _as_text(data)
    base = 0
    if text.startswith(GRAPH6_HEADER):
        base = len(GRAPH6_HEADER)
        text = text[base:]
    if text.endswith("\r\n"):
        text = text[:-2]
    elif text.endswith("\n"):
        text = text[:-1]
    if not text:
        raise ParseError("empty graph6 input", offset=base)
    first = ord(text[0])
    if first == 126:
        raise ParseError("long-form graph6 (n > 62) is not supported", offset=base)
    n = first - 63
    if not 0 <= n <= 62:
        raise ParseError(f"malformed graph6 size byte {text[0]!r}", offset=base)
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    body = text[1:]
    if len(body) < nbytes:
        raise ParseError(
            f"graph6 body truncated: expected {nbytes} bytes, got {len(body)}",
            offset=base + 1 + len(body),
        )
    if len(body) > nbytes:
        raise ParseError("trailing garbage after graph6 body", offset=base + 1 + nbytes)
    adj = [0] * n
    pairs_per_column = [(i, j) for j in range(1, n) for i in range(j)]
    k = 0
    for bi, ch in enumerate(body):
        val = ord(ch) - 63
        if not 0 <= val <= 63:
            raise ParseError(f"invalid graph6 byte {ch!r}", offset=base + 1 + bi)
        for shift in range(5, -1, -1):
            bit = (val >> shift) & 1
            if k < nbits:
                if bit:
                    i, j = pairs_per_column[k]
                    adj[i] |= 1 << j
                    adj[j] |= 1 << i
            elif bit:
                raise ParseError("nonzero padding bits in graph6 body", offset=base + 1 + bi)
            k += 1
    g = object.__new__(Graph)
    g.n = n
    g._adj = tuple(adj)
    return g


def to_graph6(g: Graph, header: bool = False) -> str:
    """Encode to a graph6 line (short form; requires n <= 62)."""
    n = g.n
    if n > 62:
        raise ParseError(f"graph6 short form supports n <= 62, got {n}")
    out = [chr(n + 63)]
    val = 0
    nb = 0
    for j in range(1, n):
        for i in range(j):
            val = (val << 1) | ((g.adjacency_mask(i) >> j) & 1)
            nb += 1
            if nb == 6:
                out.append(chr(val + 63))
                val = 0
                nb = 0
    if nb:
        out.append(chr((val << (6 - nb)) + 63))
    s = "".join(out)
    return GRAPH6_HEADER + s if header else s


def parse_graph6_lines(text) -> list[Graph]:
    """Decode a graph6 line file (one graph per non-empty line)."""
    text = _as_text(text)
    graphs = []
    for line in text.splitlines():
        line = line.strip()
        if line:
            graphs.append(parse_graph6(line))
    return graphs


# -- DIMACS .col ----------------------------------------------------------


def parse_dimacs_col(text) -> Graph:
    """Parse DIMACS coloring format: 'p edge n m' then 1-indexed 'e u v' lines.

    Duplicate edge lines collapse to one edge (with a ParseWarning);
    loops and out-of-range endpoints are fatal.  A mismatch between the
    declared and actual edge count is a warning, not an error.
    """
    text = _as_text(text)
    n = None
    declared_m = None
    edges = set()
    duplicates = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        fields = line.split()
        if fields[0] == "p":
            if n is not None:
                raise ParseError("duplicate problem line", offset=lineno)
            if len(fields) != 4 or fields[1] != "edge":
                raise ParseError(f"malformed problem line {line!r}", offset=lineno)
            try:
                n = int(fields[2])
                declared_m = int(fields[3])
            except ValueError:
                raise ParseError(f"non-integer counts in {line!r}", offset=lineno) from None
            if n < 0 or declared_m < 0:
                raise ParseError("negative counts in problem line", offset=lineno)
        elif fields[0] == "e":
            if n is None:
                raise ParseError("edge line before problem line", offset=lineno)
            if len(fields) != 3:
                raise ParseError(f"malformed edge line {line!r}", offset=lineno)
            try:
                u, v = int(fields[1]), int(fields[2])
            except ValueError:
                raise ParseError(f"non-integer endpoints in {line!r}", offset=lineno) from None
            if u == v:
                raise ParseError(f"loop edge {u} {v}", offset=lineno)
            if not (1 <= u <= n and 1 <= v <= n):
                raise ParseError(f"edge endpoint out of range in {line!r}", offset=lineno)
            e = (min(u, v) - 1, max(u, v) - 1)
            if e in edges:
                duplicates += 1
            else:
                edges.add(e)
        else:
            raise ParseError(f"unexpected line {line!r}", offset=lineno)
    if n is None:
        raise ParseError("missing problem line")
    if duplicates:
        warnings.warn(f"{duplicates} duplicate edge line(s) collapsed", ParseWarning, stacklevel=2)
    if declared_m != len(edges):
        warnings.warn(
            f"edge count mismatch: header says {declared_m}, found {len(edges)} distinct edges",
            ParseWarning,
            stacklevel=2,
        )
    return Graph(n, sorted(edges))


def to_dimacs_col(g: Graph) -> str:
    lines = [f"p edge {g.n} {g.m}"]
    lines.extend(f"e {u + 1} {v + 1}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


# -- plain edge list ------------------------------------------------------


def parse_edge_list(text) -> Graph:
    """Parse 'n m' followed by m lines 'u v' with 0-indexed endpoints."""
    text = _as_text(text)
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [(i + 1, ln) for i, ln in enumerate(lines) if ln and not ln.startswith("#")]
    if not lines:
        raise ParseError("empty edge list input")
    lineno, head = lines[0]
    fields = head.split()
    if len(fields) != 2:
        raise ParseError(f"malformed header {head!r}", offset=lineno)
    try:
        n, m = int(fields[0]), int(fields[1])
    except ValueError:
        raise ParseError(f"non-integer header {head!r}", offset=lineno) from None
    if n < 0 or m < 0:
        raise ParseError("negative counts in header", offset=lineno)
    if len(lines) - 1 != m:
        raise ParseError(f"expected {m} edge lines, found {len(lines) - 1}")
    edges = set()
    duplicates = 0
    for lineno, ln in lines[1:]:
        fields = ln.split()
        if len(fields) != 2:
            raise ParseError(f"malformed edge line {ln!r}", offset=lineno)
        try:
            u, v = int(fields[0]), int(fields[1])
        except ValueError:
            raise ParseError(f"non-integer endpoints in {ln!r}", offset=lineno) from None
        if u == v:
            raise ParseError(f"loop edge {u} {v}", offset=lineno)
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"edge endpoint out of range in {ln!r}", offset=lineno)
        e = (min(u, v), max(u, v))
        if e in edges:
            duplicates += 1
        else:
            edges.add(e)
    if duplicates:
        warnings.warn(f"{duplicates} duplicate edge line(s) collapsed", ParseWarning, stacklevel=2)
    return Graph(n, sorted(edges))


def to_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


# -- detection ------------------------------------------------------------


def detect_format(text) -> str:
    """Best-effort format sniffing: returns 'graph6', 'dimacs' or 'edgelist'."""
    text = _as_text(text)
    stripped = text.lstrip()
    if stripped.startswith(GRAPH6_HEADER):
        return "graph6"
    for line in stripped.splitlines():
        line = line.strip()
        if not line:
            continue
        fields = line.split()
        if fields[0] in ("c", "p", "e") and (len(fields) == 1 or not fields[0].isdigit()):
            if fields[0] == "c" or (fields[0] == "p" and len(fields) >= 2):
                return "dimacs"
            if fields[0] == "e":
                return "dimacs"
        if len(fields) == 2 and all(f.lstrip("-").isdigit() for f in fields):
            return "edgelist"
        return "graph6"
    return "graph6"


def read_graphs(text, fmt: str = "auto") -> list[Graph]:
    """Parse one input into a list of graphs.

    graph6 inputs may hold several graphs (one per line); DIMACS and
    edge-list inputs hold exactly one.
    """
    if fmt == "auto":
        fmt = detect_format(text)
    if fmt == "graph6":
        return parse_graph6_lines(text)
    if fmt == "dimacs":
        return [parse_dimacs_col(text)]
    if fmt == "edgelist":
        return [parse_edge_list(text)]
    raise ParseError(f"unknown format {fmt!r}")
