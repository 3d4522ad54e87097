"""Dense linear algebra over GF(2) with bit-packed rows.

Vectors and matrix rows are packed into Python integers: bit ``i`` of the
integer holds coordinate ``i`` (little-endian in the logical index space),
and bits at positions >= the logical length are always zero.  Row addition
is a single XOR, which keeps Gaussian elimination fast even for a few
hundred columns.  The packing is an internal detail; every public
conversion goes through logical indices.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Sequence


class SingularMatrixError(Exception):
    """Inversion was attempted on a singular matrix."""


def _check_width(bits: int, width: int) -> None:
    if bits < 0 or bits >> width:
        raise ValueError(f"value has bits outside the {width} logical positions")


class BitVector:
    """Immutable vector over GF(2) packed into a single integer."""

    __slots__ = ("_len", "_bits")

    def __init__(self, length: int, bits: int = 0):
        if length < 0:
            raise ValueError("length must be nonnegative")
        _check_width(bits, length)
        self._len = length
        self._bits = bits

    @classmethod
    def from_bits(cls, values: Iterable[int]) -> "BitVector":
        bits = 0
        n = 0
        for v in values:
            if v not in (0, 1):
                raise ValueError(f"entries must be 0 or 1, got {v!r}")
            bits |= v << n
            n += 1
        return cls(n, bits)

    @classmethod
    def zeros(cls, length: int) -> "BitVector":
        return cls(length, 0)

    @classmethod
    def unit(cls, length: int, index: int) -> "BitVector":
        if not 0 <= index < length:
            raise ValueError(f"index {index} out of range for length {length}")
        return cls(length, 1 << index)

    def __len__(self) -> int:
        return self._len

    @property
    def bits(self) -> int:
        """The packed integer value."""
        return self._bits

    def __getitem__(self, i: int) -> int:
        if not 0 <= i < self._len:
            raise IndexError(f"bit index {i} out of range for length {self._len}")
        return (self._bits >> i) & 1

    def __xor__(self, other: "BitVector") -> "BitVector":
        if self._len != other._len:
            raise ValueError(f"length mismatch: {self._len} != {other._len}")
        return BitVector(self._len, self._bits ^ other._bits)

    def popcount(self) -> int:
        return self._bits.bit_count()

    def is_zero(self) -> bool:
        return self._bits == 0

    def to_bits(self) -> list[int]:
        return [(self._bits >> i) & 1 for i in range(self._len)]

    def __iter__(self) -> Iterator[int]:
        for i in range(self._len):
            yield (self._bits >> i) & 1

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BitVector):
            return NotImplemented
        return self._len == other._len and self._bits == other._bits

    def __hash__(self) -> int:
        return hash((self._len, self._bits))

    def __repr__(self) -> str:
        body = "".join(str(b) for b in self.to_bits())
        return f"BitVector({body!r})"


class BitMatrix:
    """Immutable dense GF(2) matrix, one packed integer per row."""

    __slots__ = ("_nrows", "_ncols", "_rows")

    def __init__(self, nrows: int, ncols: int, rows: Sequence[int]):
        if nrows < 0 or ncols < 0:
            raise ValueError("dimensions must be nonnegative")
        if len(rows) != nrows:
            raise ValueError(f"expected {nrows} rows, got {len(rows)}")
        for r in rows:
            _check_width(r, ncols)
        self._nrows = nrows
        self._ncols = ncols
        self._rows = tuple(rows)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "BitMatrix":
        packed = [BitVector.from_bits(r).bits for r in rows]
        ncols = len(rows[0]) if rows else 0
        for i, r in enumerate(rows):
            if len(r) != ncols:
                raise ValueError(f"row {i} has length {len(r)}, expected {ncols}")
        return cls(len(rows), ncols, packed)

    @classmethod
    def from_bitvectors(cls, rows: Sequence[BitVector], ncols: int | None = None) -> "BitMatrix":
        if ncols is None:
            if not rows:
                raise ValueError("ncols is required for an empty row list")
            ncols = len(rows[0])
        for i, r in enumerate(rows):
            if len(r) != ncols:
                raise ValueError(f"row {i} has length {len(r)}, expected {ncols}")
        return cls(len(rows), ncols, [r.bits for r in rows])

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> "BitMatrix":
        return cls(nrows, ncols, [0] * nrows)

    @classmethod
    def identity(cls, n: int) -> "BitMatrix":
        return cls(n, n, [1 << i for i in range(n)])

    @property
    def nrows(self) -> int:
        return self._nrows

    @property
    def ncols(self) -> int:
        return self._ncols

    @property
    def shape(self) -> tuple[int, int]:
        return (self._nrows, self._ncols)

    @property
    def int_rows(self) -> tuple[int, ...]:
        """Rows as packed integers."""
        return self._rows

    def row(self, i: int) -> BitVector:
        return BitVector(self._ncols, self._rows[i])

    def get(self, i: int, j: int) -> int:
        if not (0 <= i < self._nrows and 0 <= j < self._ncols):
            raise IndexError(f"entry ({i}, {j}) out of range for shape {self.shape}")
        return (self._rows[i] >> j) & 1

    def column_bits(self, j: int) -> int:
        """Column ``j`` packed into an integer, bit ``i`` = entry (i, j)."""
        if not 0 <= j < self._ncols:
            raise IndexError(f"column {j} out of range")
        out = 0
        for i, r in enumerate(self._rows):
            out |= ((r >> j) & 1) << i
        return out

    def transpose(self) -> "BitMatrix":
        cols = [0] * self._ncols
        for i, r in enumerate(self._rows):
            while r:
                low = r & -r
                cols[low.bit_length() - 1] |= 1 << i
                r ^= low
        return BitMatrix(self._ncols, self._nrows, cols)

    def is_zero(self) -> bool:
        return all(r == 0 for r in self._rows)

    def to_lists(self) -> list[list[int]]:
        return [self.row(i).to_bits() for i in range(self._nrows)]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BitMatrix):
            return NotImplemented
        return (
            self._nrows == other._nrows
            and self._ncols == other._ncols
            and self._rows == other._rows
        )

    def __hash__(self) -> int:
        return hash((self._nrows, self._ncols, self._rows))

    def __repr__(self) -> str:
        return f"BitMatrix({self._nrows}x{self._ncols})"


def vstack(top: BitMatrix, bottom: BitMatrix) -> BitMatrix:
    if top.ncols != bottom.ncols:
        raise ValueError(f"column mismatch: {top.ncols} != {bottom.ncols}")
    return BitMatrix(top.nrows + bottom.nrows, top.ncols, top.int_rows + bottom.int_rows)


def hstack(left: BitMatrix, right: BitMatrix) -> BitMatrix:
    if left.nrows != right.nrows:
        raise ValueError(f"row mismatch: {left.nrows} != {right.nrows}")
    w = left.ncols
    rows = [l | (r << w) for l, r in zip(left.int_rows, right.int_rows)]
    return BitMatrix(left.nrows, left.ncols + right.ncols, rows)


def mat_mul(a: BitMatrix, b: BitMatrix) -> BitMatrix:
    """Matrix product over GF(2).

    Raises:
        ValueError: if the inner dimensions disagree.
    """
    if a.ncols != b.nrows:
        raise ValueError(f"dimension mismatch: {a.shape} @ {b.shape}")
    brows = b.int_rows
    out = []
    for abits in a.int_rows:
        acc = 0
        m = abits
        while m:
            low = m & -m
            acc ^= brows[low.bit_length() - 1]
            m ^= low
        out.append(acc)
    return BitMatrix(a.nrows, b.ncols, out)


def mat_vec(a: BitMatrix, v: BitVector) -> BitVector:
    """Matrix-vector product over GF(2)."""
    if a.ncols != len(v):
        raise ValueError(f"dimension mismatch: {a.shape} @ vector of length {len(v)}")
    vbits = v.bits
    out = 0
    for i, r in enumerate(a.int_rows):
        out |= ((r & vbits).bit_count() & 1) << i
    return BitVector(a.nrows, out)


def invert(m: BitMatrix) -> BitMatrix:
    """Inverse of a square matrix over GF(2).

    Gauss-Jordan elimination on the augmented system [M | I].

    Raises:
        ValueError: if the matrix is not square.
        SingularMatrixError: if the matrix has no inverse.  Callers use
            this as the invertibility test, so it must stay catchable.
    """
    if m.nrows != m.ncols:
        raise ValueError(f"cannot invert non-square matrix of shape {m.shape}")
    n = m.nrows
    aug = [bits | (1 << (n + i)) for i, bits in enumerate(m.int_rows)]
    for col in range(n):
        piv = None
        for r in range(col, n):
            if (aug[r] >> col) & 1:
                piv = r
                break
        if piv is None:
            raise SingularMatrixError(f"matrix of rank < {n} has no inverse")
        aug[col], aug[piv] = aug[piv], aug[col]
        prow = aug[col]
        for r in range(n):
            if r != col and (aug[r] >> col) & 1:
                aug[r] ^= prow
    return BitMatrix(n, n, [bits >> n for bits in aug])


def reduced_row_echelon(m: BitMatrix) -> tuple[BitMatrix, tuple[int, ...]]:
    """Reduced row-echelon form, zero rows dropped.

    Pivots are chosen at the smallest available column index, so the
    result is the canonical form of the row space: deterministic across
    runs and platforms.

    Returns:
        (pivot_rows, pivot_cols) where row ``i`` has its leading 1 at
        ``pivot_cols[i]`` and all other pivot columns clear.
    """
    rows = list(m.int_rows)
    nrows = m.nrows
    pivot_cols = []
    row_idx = 0
    for col in range(m.ncols):
        piv = None
        for r in range(row_idx, nrows):
            if (rows[r] >> col) & 1:
                piv = r
                break
        if piv is None:
            continue
        rows[row_idx], rows[piv] = rows[piv], rows[row_idx]
        prow = rows[row_idx]
        for r in range(nrows):
            if r != row_idx and (rows[r] >> col) & 1:
                rows[r] ^= prow
        pivot_cols.append(col)
        row_idx += 1
        if row_idx == nrows:
            break
    return BitMatrix(row_idx, m.ncols, rows[:row_idx]), tuple(pivot_cols)


def rank(m: BitMatrix) -> int:
    """Rank over GF(2)."""
    return len(reduced_row_echelon(m)[1])


def _null_space_ints(width: int, pivot_rows: Sequence[int], pivot_cols: Sequence[int]) -> list[int]:
    # Unit-extend each free column, in ascending column order, against the
    # reduced echelon rows.
    pivot_set = set(pivot_cols)
    basis = []
    for free in range(width):
        if free in pivot_set:
            continue
        v = 1 << free
        for bits, col in zip(pivot_rows, pivot_cols):
            if (bits >> free) & 1:
                v |= 1 << col
        basis.append(v)
    return basis


def null_space(m: BitMatrix) -> list[BitVector]:
    """A basis of the right kernel {x : Mx = 0}.

    Deterministic: derived from the canonical reduced row-echelon form,
    one basis vector per free column in ascending column order.
    """
    reduced, pivot_cols = reduced_row_echelon(m)
    ints = _null_space_ints(m.ncols, reduced.int_rows, pivot_cols)
    return [BitVector(m.ncols, bits) for bits in ints]


class StreamingEliminator:
    """Incremental reduced row-echelon accumulator.

    Rows are fed one at a time; the accumulated pivot rows are kept in
    reduced row-echelon form throughout (each pivot column is clear in
    every other pivot row).  Memory stays at O(width^2) bits no matter
    how many rows are fed, which is what makes the overdetermined
    equation systems in this package tractable: their rows are generated
    on the fly and never materialized as one matrix.

    Single-owner mutable accumulator; not safe for concurrent mutation.
    """

    __slots__ = ("_width", "_pivots", "_mask")

    def __init__(self, width: int):
        if width < 0:
            raise ValueError("width must be nonnegative")
        self._width = width
        self._pivots: dict[int, int] = {}  # pivot column -> packed row
        self._mask = 0  # union of pivot column bits

    @property
    def width(self) -> int:
        return self._width

    @property
    def rank(self) -> int:
        return len(self._pivots)

    @property
    def pivot_columns(self) -> tuple[int, ...]:
        return tuple(sorted(self._pivots))

    def feed(self, row: BitVector) -> None:
        """Reduce ``row`` against the accumulated pivots and absorb it."""
        if len(row) != self._width:
            raise ValueError(f"row length {len(row)} != eliminator width {self._width}")
        self.feed_bits(row.bits)

    def feed_bits(self, bits: int) -> None:
        """Packed-integer fast path of :meth:`feed` (width unchecked)."""
        pivots = self._pivots
        # Full reduction needs one pass: pivot rows are clear at every
        # other pivot column, so XORing them in cannot re-set a bit that
        # the initial mask missed.
        m = bits & self._mask
        while m:
            low = m & -m
            bits ^= pivots[low.bit_length() - 1]
            m ^= low
        if not bits:
            return
        col = (bits & -bits).bit_length() - 1
        colbit = 1 << col
        for c, row in pivots.items():
            if row & colbit:
                pivots[c] = row ^ bits
        pivots[col] = bits
        self._mask |= colbit

    def pivot_rows(self) -> BitMatrix:
        """The accumulated rows, ordered by pivot column."""
        cols = sorted(self._pivots)
        return BitMatrix(len(cols), self._width, [self._pivots[c] for c in cols])

    def null_space(self) -> list[BitVector]:
        """Basis of the common kernel of every row fed so far."""
        cols = sorted(self._pivots)
        rows = [self._pivots[c] for c in cols]
        ints = _null_space_ints(self._width, rows, cols)
        return [BitVector(self._width, bits) for bits in ints]
