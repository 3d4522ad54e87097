"""Simple labeled graphs, local complementation, and graph file formats.

Graphs live on vertices 0..n-1 and are stored as a symmetric, zero-diagonal
adjacency matrix with bit-packed rows.  Values are immutable and hashable;
every operation returns a new graph.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterable, Iterator, Sequence

from .gf2 import BitMatrix, _check_width


class GraphFormatError(ValueError):
    """Malformed graph6 or edge-list input.

    Attributes:
        offset: byte offset of the offending byte (graph6), if known.
        line: 1-based line number of the offending line (edge list), if known.
    """

    def __init__(self, message: str, *, offset: int | None = None, line: int | None = None):
        if offset is not None:
            message = f"{message} (byte offset {offset})"
        if line is not None:
            message = f"{message} (line {line})"
        super().__init__(message)
        self.offset = offset
        self.line = line


class Graph:
    """A simple labeled graph as a bit-packed adjacency matrix."""

    __slots__ = ("_n", "_rows")

    def __init__(self, n: int, rows: Sequence[int]):
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        if len(rows) != n:
            raise ValueError(f"expected {n} adjacency rows, got {len(rows)}")
        for i, r in enumerate(rows):
            _check_width(r, n)
            if (r >> i) & 1:
                raise ValueError(f"adjacency matrix has a loop at vertex {i}")
        for i in range(n):
            for j in range(i + 1, n):
                if ((rows[i] >> j) & 1) != ((rows[j] >> i) & 1):
                    raise ValueError(f"adjacency matrix not symmetric at ({i}, {j})")
        self._n = n
        self._rows = tuple(rows)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"loop ({u}, {v}) not allowed in a simple graph")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, rows)

    @classmethod
    def from_adjacency(cls, adj: Sequence[Sequence[int]]) -> "Graph":
        n = len(adj)
        rows = []
        for r in adj:
            if len(r) != n:
                raise ValueError("adjacency matrix must be square")
            bits = 0
            for j, v in enumerate(r):
                if v not in (0, 1):
                    raise ValueError(f"adjacency entries must be 0 or 1, got {v!r}")
                bits |= v << j
            rows.append(bits)
        return cls(n, rows)

    # -- small named families, mostly for tests and demos --

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n, [0] * n)

    @classmethod
    def complete(cls, n: int) -> "Graph":
        full = (1 << n) - 1
        return cls(n, [full ^ (1 << i) for i in range(n)])

    @classmethod
    def star(cls, n: int, hub: int = 0) -> "Graph":
        return cls.from_edges(n, [(hub, v) for v in range(n) if v != hub])

    @classmethod
    def path(cls, n: int) -> "Graph":
        return cls.from_edges(n, [(i, i + 1) for i in range(n - 1)])

    @classmethod
    def cycle(cls, n: int) -> "Graph":
        if n < 3:
            raise ValueError("a cycle needs at least 3 vertices")
        return cls.from_edges(n, [(i, (i + 1) % n) for i in range(n)])

    @property
    def n(self) -> int:
        return self._n

    @property
    def adjacency(self) -> BitMatrix:
        return BitMatrix(self._n, self._n, self._rows)

    @property
    def int_rows(self) -> tuple[int, ...]:
        return self._rows

    def neighbors_bits(self, i: int) -> int:
        """Neighborhood of vertex ``i`` as a packed bit mask."""
        return self._rows[i]

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self._rows[u] >> v) & 1)

    def degree(self, i: int) -> int:
        return self._rows[i].bit_count()

    def edges(self) -> list[tuple[int, int]]:
        out = []
        for i in range(self._n):
            r = self._rows[i] >> (i + 1)
            j = i + 1
            while r:
                if r & 1:
                    out.append((i, j))
                r >>= 1
                j += 1
        return out

    @property
    def num_edges(self) -> int:
        return sum(r.bit_count() for r in self._rows) // 2

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._n == other._n and self._rows == other._rows

    def __hash__(self) -> int:
        return hash((self._n, self._rows))

    def __repr__(self) -> str:
        return f"Graph(n={self._n}, edges={self.edges()!r})"


def local_complement(g: Graph, i: int) -> Graph:
    """Complement the subgraph induced by the neighborhood of vertex ``i``.

    Edges outside the closed neighborhood of ``i`` are untouched; applying
    the move twice at the same vertex restores the original graph.
    """
    n = g.n
    if not 0 <= i < n:
        raise ValueError(f"vertex {i} out of range for n={n}")
    rows = list(g.int_rows)
    ri = rows[i]
    m = ri
    while m:
        low = m & -m
        j = low.bit_length() - 1
        m ^= low
        rows[j] = (rows[j] ^ ri) & ~(1 << j)
    return Graph(n, rows)


def apply_lc_sequence(g: Graph, seq: Iterable[int]) -> Graph:
    """Left-to-right fold of :func:`local_complement`."""
    for i in seq:
        g = local_complement(g, i)
    return g


def connected_components(g: Graph) -> tuple[tuple[int, ...], ...]:
    """Connected components, ordered by smallest member, vertices ascending."""
    n = g.n
    rows = g.int_rows
    unvisited = (1 << n) - 1
    blocks = []
    while unvisited:
        start = (unvisited & -unvisited).bit_length() - 1
        comp = 1 << start
        frontier = comp
        while frontier:
            acc = 0
            m = frontier
            while m:
                low = m & -m
                acc |= rows[low.bit_length() - 1]
                m ^= low
            frontier = acc & ~comp
            comp |= frontier
        blocks.append(tuple(i for i in range(n) if (comp >> i) & 1))
        unvisited &= ~comp
    return tuple(blocks)


def induced_subgraph(g: Graph, vertices: Sequence[int]) -> Graph:
    """Adjacency restricted to ``vertices``, relabeled 0..k-1 in the given order."""
    n = g.n
    seen = set()
    for v in vertices:
        if not 0 <= v < n:
            raise ValueError(f"vertex {v} out of range for n={n}")
        if v in seen:
            raise ValueError(f"duplicate vertex {v}")
        seen.add(v)
    k = len(vertices)
    rows = [0] * k
    for a, va in enumerate(vertices):
        bits = g.neighbors_bits(va)
        for b, vb in enumerate(vertices):
            if (bits >> vb) & 1:
                rows[a] |= 1 << b
    return Graph(k, rows)


def iter_graphs(n: int) -> Iterator[Graph]:
    """All labeled simple graphs on ``n`` vertices, in edge-mask order.

    Bit ``t`` of the mask toggles the t-th pair of ``combinations(range(n), 2)``.
    """
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        edges = [pairs[t] for t in range(len(pairs)) if (mask >> t) & 1]
        yield Graph.from_edges(n, edges)


# ---------------------------------------------------------------------------
# graph6 format
# ---------------------------------------------------------------------------
#
# Size: 63+n for n <= 62, '~' + 3 bytes (18-bit big-endian) for n <= 258047,
# '~~' + 6 bytes (36-bit) beyond.  Body: upper-triangle bits in column order
# x01, x02, x12, x03, ..., packed big-endian six bits per byte, each +63,
# zero-padded to a multiple of six bits.

_G6_HEADER = ">>graph6<<"


def _g6_check_byte(b: int, offset: int) -> int:
    if not 63 <= b <= 126:
        raise GraphFormatError(f"invalid graph6 byte {b}", offset=offset)
    return b - 63


def parse_graph6(text: str | bytes) -> Graph:
    """Decode one graph6 line (optional '>>graph6<<' header accepted)."""
    if isinstance(text, bytes):
        text = text.decode("ascii", errors="replace")
    line = text.strip()
    if line.startswith(_G6_HEADER):
        line = line[len(_G6_HEADER):]
    if not line:
        raise GraphFormatError("empty graph6 input")
    data = line.encode("ascii", errors="replace")

    if data[0] != 126:
        n = _g6_check_byte(data[0], 0)
        pos = 1
    elif len(data) >= 2 and data[1] != 126:
        if len(data) < 4:
            raise GraphFormatError("truncated multi-byte size", offset=len(data))
        vals = [_g6_check_byte(data[i], i) for i in (1, 2, 3)]
        n = (vals[0] << 12) | (vals[1] << 6) | vals[2]
        pos = 4
    else:
        if len(data) < 8:
            raise GraphFormatError("truncated multi-byte size", offset=len(data))
        vals = [_g6_check_byte(data[i], i) for i in range(2, 8)]
        n = 0
        for v in vals:
            n = (n << 6) | v
        pos = 8

    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    body = data[pos:]
    if len(body) < nbytes:
        raise GraphFormatError(
            f"truncated bit body: need {nbytes} bytes for n={n}, got {len(body)}",
            offset=pos + len(body),
        )
    if len(body) > nbytes:
        raise GraphFormatError(f"trailing data after graph6 body", offset=pos + nbytes)

    rows = [0] * n
    k = 0
    done = False
    for j in range(1, n):
        for i in range(j):
            val = _g6_check_byte(body[k // 6], pos + k // 6)
            if (val >> (5 - k % 6)) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    # padding bits must be zero for the encoding to round-trip
    while k < 6 * nbytes:
        val = _g6_check_byte(body[k // 6], pos + k // 6)
        if (val >> (5 - k % 6)) & 1:
            raise GraphFormatError("nonzero padding bits", offset=pos + k // 6)
        k += 1
    return Graph(n, rows)


def serialize_graph6(g: Graph) -> str:
    """Encode a graph as a graph6 string (no header, no newline)."""
    n = g.n
    if n <= 62:
        out = [n + 63]
    elif n <= 258047:
        out = [126, ((n >> 12) & 63) + 63, ((n >> 6) & 63) + 63, (n & 63) + 63]
    elif n <= 68719476735:
        out = [126, 126]
        out += [((n >> s) & 63) + 63 for s in (30, 24, 18, 12, 6, 0)]
    else:
        raise ValueError("graph6 cannot encode more than 2^36 - 1 vertices")

    acc = 0
    filled = 0
    for j in range(1, n):
        for i in range(j):
            acc = (acc << 1) | (1 if g.has_edge(i, j) else 0)
            filled += 1
            if filled == 6:
                out.append(acc + 63)
                acc = 0
                filled = 0
    if filled:
        out.append((acc << (6 - filled)) + 63)
    return bytes(out).decode("ascii")


# ---------------------------------------------------------------------------
# edge-list format: header "n m", then m lines "u v"
# ---------------------------------------------------------------------------


def parse_edge_list(text: str) -> Graph:
    """Decode the plain edge-list format ('#' comments and blank lines allowed)."""
    entries = []  # (lineno, tokens)
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.split("#", 1)[0].strip()
        if stripped:
            entries.append((lineno, stripped.split()))

    if not entries:
        raise GraphFormatError("empty edge-list input")
    header_line, header = entries[0]
    if len(header) != 2:
        raise GraphFormatError("header must be 'n m'", line=header_line)
    try:
        n, m = int(header[0]), int(header[1])
    except ValueError:
        raise GraphFormatError("header must contain two integers", line=header_line) from None
    if n < 0 or m < 0:
        raise GraphFormatError("header counts must be nonnegative", line=header_line)
    if len(entries) - 1 != m:
        raise GraphFormatError(
            f"expected {m} edge lines, found {len(entries) - 1}", line=header_line
        )

    rows = [0] * n
    for lineno, toks in entries[1:]:
        if len(toks) != 2:
            raise GraphFormatError("edge line must be 'u v'", line=lineno)
        try:
            u, v = int(toks[0]), int(toks[1])
        except ValueError:
            raise GraphFormatError("edge endpoints must be integers", line=lineno) from None
        if not (0 <= u < n and 0 <= v < n):
            raise GraphFormatError(f"edge ({u}, {v}) out of range for n={n}", line=lineno)
        if u == v:
            raise GraphFormatError(f"loop ({u}, {v}) not allowed", line=lineno)
        if (rows[u] >> v) & 1:
            raise GraphFormatError(f"duplicate edge ({u}, {v})", line=lineno)
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, rows)


def serialize_edge_list(g: Graph) -> str:
    """Encode a graph in the edge-list format, edges sorted, trailing newline."""
    lines = [f"{g.n} {g.num_edges}"]
    lines += [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"
