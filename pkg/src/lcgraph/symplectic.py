"""Binary stabilizer framework: generator matrices and local Clifford operators.

Conventions, fixed once for the whole package:

* A stabilizer space on n qubits is presented by a full-rank, self-dual
  2n x n generator matrix S whose columns span the space.  Rows 0..n-1
  carry the Z-components (one row per qubit), rows n..2n-1 the
  X-components, so a graph with adjacency matrix theta has generator
  matrix [theta; I] with the adjacency in the Z block.
* Single-qubit operators act on (z; x) column pairs.  The phase gate S
  maps (z, x) -> (z + x, x), i.e. matrix [[1, 1], [0, 1]]; the Hadamard
  H swaps the components, [[0, 1], [1, 0]].
"""

from __future__ import annotations

import warnings
from typing import Sequence

from .gf2 import (
    BitMatrix,
    BitVector,
    StreamingEliminator,
    invert,
    mat_mul,
    rank,
    vstack,
)
from .graphs import Graph


class StabilizerFormatError(ValueError):
    """Malformed or invalid Pauli-string stabilizer input."""

    def __init__(self, message: str, *, lines: Sequence[int] | None = None):
        if lines:
            message = f"{message} (line{'s' if len(lines) > 1 else ''} {', '.join(map(str, lines))})"
        super().__init__(message)
        self.lines = tuple(lines) if lines else ()


def symplectic_form(n: int) -> BitMatrix:
    """The 2n x 2n form [[0, I], [I, 0]] pairing Z- against X-components."""
    rows = [1 << (n + i) for i in range(n)] + [1 << i for i in range(n)]
    return BitMatrix(2 * n, 2 * n, rows)


def symplectic_product(u: BitVector, v: BitVector) -> int:
    """u^T P v over GF(2); zero exactly when the two Pauli vectors commute."""
    if len(u) != len(v):
        raise ValueError(f"length mismatch: {len(u)} != {len(v)}")
    if len(u) % 2:
        raise ValueError("symplectic vectors must have even length")
    n = len(u) // 2
    mask = (1 << n) - 1
    uz, ux = u.bits & mask, u.bits >> n
    vz, vx = v.bits & mask, v.bits >> n
    return ((uz & vx).bit_count() + (ux & vz).bit_count()) & 1


class GeneratorMatrix:
    """Full-rank self-dual 2n x n presentation of a stabilizer space."""

    __slots__ = ("_n", "_mat")

    def __init__(self, mat: BitMatrix):
        if mat.nrows != 2 * mat.ncols:
            raise ValueError(f"generator matrix must be 2n x n, got {mat.shape}")
        n = mat.ncols
        if rank(mat) != n:
            raise ValueError("generator matrix must have full column rank")
        p = symplectic_form(n)
        if not mat_mul(mat.transpose(), mat_mul(p, mat)).is_zero():
            raise ValueError("generator matrix is not self-dual (S^T P S != 0)")
        self._n = n
        self._mat = mat

    @property
    def n(self) -> int:
        return self._n

    @property
    def mat(self) -> BitMatrix:
        return self._mat

    def z_block(self) -> BitMatrix:
        return BitMatrix(self._n, self._n, self._mat.int_rows[: self._n])

    def x_block(self) -> BitMatrix:
        return BitMatrix(self._n, self._n, self._mat.int_rows[self._n :])

    def generator_bits(self, g: int) -> int:
        """Generator ``g`` as a packed 2n-bit vector (z-half low, x-half high)."""
        return self._mat.column_bits(g)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GeneratorMatrix):
            return NotImplemented
        return self._mat == other._mat

    def __repr__(self) -> str:
        return f"GeneratorMatrix(n={self._n})"


def graph_generator(g: Graph) -> GeneratorMatrix:
    """The generator matrix [theta; I] of the graph state of ``g``."""
    return GeneratorMatrix(vstack(g.adjacency, BitMatrix.identity(g.n)))


# ---------------------------------------------------------------------------
# single-qubit classes and local Clifford operators
# ---------------------------------------------------------------------------

_I2 = ((1, 0), (0, 1))
_H2 = ((0, 1), (1, 0))
_S2 = ((1, 1), (0, 1))


def _mul2(m2, m1):
    """2x2 product over GF(2), m2 applied after m1."""
    (a2, b2), (c2, d2) = m2
    (a1, b1), (c1, d1) = m1
    return (
        ((a2 & a1) ^ (b2 & c1), (a2 & b1) ^ (b2 & d1)),
        ((c2 & a1) ^ (d2 & c1), (c2 & b1) ^ (d2 & d1)),
    )


#: The six invertible 2x2 binary matrices, named as words in H and S
#: (matrix-product order, so "HS" applies S first).  They exhaust the
#: single-qubit Clifford group up to local Paulis.
SINGLE_QUBIT_CLASSES: dict[str, tuple[tuple[int, int], tuple[int, int]]] = {
    "I": _I2,
    "H": _H2,
    "S": _S2,
    "HS": _mul2(_H2, _S2),
    "SH": _mul2(_S2, _H2),
    "HSH": _mul2(_H2, _mul2(_S2, _H2)),
}

_CLASS_BY_MATRIX = {m: name for name, m in SINGLE_QUBIT_CLASSES.items()}


def classify_single_qubit(q) -> str:
    """Name an invertible 2x2 binary matrix as one of I, H, S, HS, SH, HSH."""
    try:
        (a, b), (c, d) = q
    except (TypeError, ValueError):
        raise ValueError(f"expected a 2x2 matrix, got {q!r}") from None
    key = ((int(a), int(b)), (int(c), int(d)))
    for row in key:
        for v in row:
            if v not in (0, 1):
                raise ValueError(f"entries must be 0 or 1, got {q!r}")
    name = _CLASS_BY_MATRIX.get(key)
    if name is None:
        raise ValueError(f"matrix {key} is singular over GF(2)")
    return name


class LocalCliffordOp:
    """A tensor product of single-qubit Clifford operators in binary form.

    Stored as one quadruple (a_i, b_i, c_i, d_i) per qubit, the diagonal
    entries of the blocks of the 2n x 2n matrix [[A, B], [C, D]].  Every
    per-qubit 2x2 matrix [[a, b], [c, d]] must be invertible:
    a*d + b*c = 1 over GF(2).
    """

    __slots__ = ("_quads",)

    def __init__(self, quads: Sequence[tuple[int, int, int, int]]):
        clean = []
        for i, quad in enumerate(quads):
            a, b, c, d = (int(v) for v in quad)
            for v in (a, b, c, d):
                if v not in (0, 1):
                    raise ValueError(f"qubit {i}: entries must be 0 or 1, got {quad!r}")
            if (a & d) ^ (b & c) != 1:
                raise ValueError(f"qubit {i}: quadruple {quad!r} is singular (a*d + b*c != 1)")
            clean.append((a, b, c, d))
        self._quads = tuple(clean)

    @classmethod
    def identity(cls, n: int) -> "LocalCliffordOp":
        return cls([(1, 0, 0, 1)] * n)

    @classmethod
    def from_class_names(cls, names: Sequence[str]) -> "LocalCliffordOp":
        quads = []
        for name in names:
            try:
                (a, b), (c, d) = SINGLE_QUBIT_CLASSES[name]
            except KeyError:
                raise ValueError(f"unknown single-qubit class {name!r}") from None
            quads.append((a, b, c, d))
        return cls(quads)

    @property
    def n(self) -> int:
        return len(self._quads)

    @property
    def quadruples(self) -> tuple[tuple[int, int, int, int], ...]:
        return self._quads

    def quadruple(self, i: int) -> tuple[int, int, int, int]:
        return self._quads[i]

    def single(self, i: int) -> tuple[tuple[int, int], tuple[int, int]]:
        a, b, c, d = self._quads[i]
        return ((a, b), (c, d))

    def class_name(self, i: int) -> str:
        return _CLASS_BY_MATRIX[self.single(i)]

    def class_names(self) -> tuple[str, ...]:
        return tuple(self.class_name(i) for i in range(self.n))

    def compose(self, other: "LocalCliffordOp") -> "LocalCliffordOp":
        """The operator 'self after other' (per-qubit matrix product)."""
        if self.n != other.n:
            raise ValueError(f"qubit count mismatch: {self.n} != {other.n}")
        quads = []
        for i in range(self.n):
            (a, b), (c, d) = _mul2(self.single(i), other.single(i))
            quads.append((a, b, c, d))
        return LocalCliffordOp(quads)

    def block_matrix(self) -> BitMatrix:
        """The full 2n x 2n matrix [[A, B], [C, D]] with diagonal blocks."""
        n = self.n
        top = [0] * n
        bot = [0] * n
        for i, (a, b, c, d) in enumerate(self._quads):
            top[i] = (a << i) | (b << (n + i))
            bot[i] = (c << i) | (d << (n + i))
        return BitMatrix(2 * n, 2 * n, top + bot)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LocalCliffordOp):
            return NotImplemented
        return self._quads == other._quads

    def __hash__(self) -> int:
        return hash(self._quads)

    def __repr__(self) -> str:
        return f"LocalCliffordOp({', '.join(self.class_names())})"


def apply_local_clifford(q: LocalCliffordOp, s: GeneratorMatrix) -> GeneratorMatrix:
    """The generator matrix Q*S (same stabilizer space family, new basis)."""
    if q.n != s.n:
        raise ValueError(f"qubit count mismatch: {q.n} != {s.n}")
    n = s.n
    rows = s.mat.int_rows
    new_rows = [0] * (2 * n)
    for i, (a, b, c, d) in enumerate(q.quadruples):
        z, x = rows[i], rows[n + i]
        new_rows[i] = (z if a else 0) ^ (x if b else 0)
        new_rows[n + i] = (z if c else 0) ^ (x if d else 0)
    return GeneratorMatrix(BitMatrix(2 * n, n, new_rows))


# ---------------------------------------------------------------------------
# stabilizer-to-graph reduction
# ---------------------------------------------------------------------------


def _echelon_x(gens: list[int], n: int) -> int:
    """Reduce generators (packed z|x<<n) over their x-halves.

    After the call the first ``r`` generators carry an echelon basis of the
    x-block row space and all remaining generators have zero x-half.
    Generator combinations only re-express the same stabilizer space.
    """
    r = 0
    for qubit in range(n):
        bit = 1 << (n + qubit)
        piv = None
        for g in range(r, len(gens)):
            if gens[g] & bit:
                piv = g
                break
        if piv is None:
            continue
        gens[r], gens[piv] = gens[piv], gens[r]
        prow = gens[r]
        for g in range(len(gens)):
            if g != r and gens[g] & bit:
                gens[g] ^= prow
        r += 1
    return r


def stabilizer_to_graph(s: GeneratorMatrix) -> tuple[Graph, LocalCliffordOp]:
    """Reduce a stabilizer space to a graph state by local Clifford moves.

    Returns (theta, q) such that the column space of q applied to ``s``
    equals the column space of [theta; I].  Hadamards make the X block
    invertible, then theta = Z * X^-1 with phase gates clearing its
    diagonal.  Each Hadamard goes on the smallest-index qubit in the
    support of the z-half of a generator whose x-half vanished during
    reduction; such a qubit is guaranteed to enlarge the X block's rank,
    and the implementation verifies that on every round.
    """
    n = s.n
    zmask = (1 << n) - 1
    gens = [s.generator_bits(g) for g in range(n)]
    singles = [_I2] * n

    r = _echelon_x(gens, n)
    while r < n:
        v = gens[r] & zmask
        if v == 0:
            raise RuntimeError("generator with zero z- and x-half; input invariants violated")
        i = (v & -v).bit_length() - 1
        swap = (1 << i) | (1 << (n + i))
        for g in range(n):
            zi = (gens[g] >> i) & 1
            xi = (gens[g] >> (n + i)) & 1
            if zi != xi:
                gens[g] ^= swap
        singles[i] = _mul2(_H2, singles[i])
        new_r = _echelon_x(gens, n)
        if new_r <= r:
            raise RuntimeError(
                f"X-block rank stuck at {r} after Hadamard on qubit {i}; "
                "input invariants violated"
            )
        r = new_r

    zrows = [0] * n
    xrows = [0] * n
    for g, bits in enumerate(gens):
        z = bits & zmask
        x = bits >> n
        while z:
            low = z & -z
            zrows[low.bit_length() - 1] |= 1 << g
            z ^= low
        while x:
            low = x & -x
            xrows[low.bit_length() - 1] |= 1 << g
            x ^= low
    theta_pre = mat_mul(BitMatrix(n, n, zrows), invert(BitMatrix(n, n, xrows)))

    rows = list(theta_pre.int_rows)
    for i in range(n):
        for j in range(i + 1, n):
            if ((rows[i] >> j) & 1) != ((rows[j] >> i) & 1):
                raise RuntimeError("Z * X^-1 not symmetric; input invariants violated")
    for i in range(n):
        if (rows[i] >> i) & 1:
            singles[i] = _mul2(_S2, singles[i])
            rows[i] ^= 1 << i

    quads = [(m[0][0], m[0][1], m[1][0], m[1][1]) for m in singles]
    return Graph(n, rows), LocalCliffordOp(quads)


# ---------------------------------------------------------------------------
# Pauli-string stabilizer files
# ---------------------------------------------------------------------------

_PAULI_BITS = {"I": (0, 0), "X": (0, 1), "Y": (1, 1), "Z": (1, 0)}
_SIGN_CHARS = "+-−"


def parse_pauli_stabilizer(text: str) -> GeneratorMatrix:
    """Parse one generator per line as a Pauli string over {I, X, Y, Z}.

    '#' starts a comment and blank lines are skipped.  A leading '+' or
    '-' sign is accepted but ignored with a warning: sign information is
    a local Pauli correction and can never change a local Clifford
    equivalence verdict.
    """
    entries = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.split("#", 1)[0].strip()
        if stripped:
            entries.append((lineno, stripped))
    if not entries:
        raise StabilizerFormatError("no generators found")

    n = len(entries)
    signed_lines = []
    gens = []
    for lineno, body in entries:
        if body[0] in _SIGN_CHARS:
            if body[0] != "+":
                signed_lines.append(lineno)
            body = body[1:]
        if len(body) != n:
            raise StabilizerFormatError(
                f"expected {n} Pauli characters (one per qubit for {n} generators), "
                f"got {len(body)}",
                lines=[lineno],
            )
        bits = 0
        for i, ch in enumerate(body):
            try:
                z, x = _PAULI_BITS[ch]
            except KeyError:
                raise StabilizerFormatError(
                    f"invalid character {ch!r} at position {i}", lines=[lineno]
                ) from None
            bits |= (z << i) | (x << (n + i))
        gens.append((lineno, bits))

    if signed_lines:
        warnings.warn(
            f"ignoring explicit signs on generator line(s) {signed_lines}; "
            "signs never affect local Clifford equivalence",
            UserWarning,
            stacklevel=2,
        )

    for a in range(n):
        for b in range(a + 1, n):
            u = BitVector(2 * n, gens[a][1])
            v = BitVector(2 * n, gens[b][1])
            if symplectic_product(u, v):
                raise StabilizerFormatError(
                    "generators do not commute", lines=[gens[a][0], gens[b][0]]
                )

    # independence check, naming the first dependent line
    elim = StreamingEliminator(2 * n)
    for lineno, bits in gens:
        before = elim.rank
        elim.feed_bits(bits)
        if elim.rank == before:
            raise StabilizerFormatError(
                "generator is a product of earlier generators (rank deficiency)",
                lines=[lineno],
            )

    rows = [0] * (2 * n)
    for g, (_, bits) in enumerate(gens):
        for i in range(2 * n):
            if (bits >> i) & 1:
                rows[i] |= 1 << g
    return GeneratorMatrix(BitMatrix(2 * n, n, rows))
