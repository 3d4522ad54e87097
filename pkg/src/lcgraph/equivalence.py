"""Decide local Clifford equivalence of graph states, with explicit witnesses.

A local Clifford operator with per-qubit blocks [[a_i, b_i], [c_i, d_i]]
maps the graph state of theta onto the graph state of theta' exactly when
its 4n coefficients solve a homogeneous system of n^2 linear equations
over GF(2) and every per-qubit matrix is invertible (a_i d_i + b_i c_i = 1).
The linear part is solved by streaming elimination; the invertibility
constraints are then searched over the solution space V.  On a connected
graph it suffices to try the pairwise sums of a basis of V once
dim(V) > 4, so the whole decision stays O(n^4); disconnected inputs are
split into connected components first, which also keeps that guarantee
honest (the pairwise-sum shortcut genuinely fails on, say, two identical
edgeless graphs).

Solution vectors use the fixed coordinate layout
[a_0..a_{n-1} | b_0..b_{n-1} | c_0..c_{n-1} | d_0..d_{n-1}].
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Optional

from .gf2 import (
    BitMatrix,
    BitVector,
    SingularMatrixError,
    StreamingEliminator,
    invert,
    mat_mul,
)
from .graphs import Graph, connected_components, induced_subgraph
from .symplectic import LocalCliffordOp, graph_generator, symplectic_form


@dataclass(frozen=True)
class SolutionSpace:
    """Basis of the nullspace V of the linear compatibility system."""

    n: int
    basis: tuple[BitVector, ...]

    @property
    def dim(self) -> int:
        return len(self.basis)


@dataclass(frozen=True)
class Witness:
    """An explicit local Clifford operator mapping one graph state to the other.

    ``provenance`` records, per connected component in order, which search
    path produced the solution: "exhaustive" (dim(V) <= 4, all of V),
    "singles" or "pairs" (basis vectors and their pairwise sums).
    """

    op: LocalCliffordOp
    provenance: tuple[str, ...]


@dataclass(frozen=True)
class ComponentReport:
    """Diagnostics for one connected component of the equivalence check."""

    vertices: tuple[int, ...]
    dim_v: int
    search_path: Optional[str]
    admissible: bool


@dataclass(frozen=True)
class Verdict:
    """Outcome of :func:`check_equivalence`."""

    equivalent: bool
    witness: Optional[Witness]
    per_component: tuple[ComponentReport, ...] = ()
    reason: Optional[str] = None


def _row_bits(rows1, rows2, n: int, j: int, k: int) -> int:
    # c-block: coefficient of c_i is theta_ij * theta'_ik, which is one AND
    # of packed adjacency rows thanks to symmetry.
    bits = (rows1[j] & rows2[k]) << (2 * n)
    if (rows1[j] >> k) & 1:
        bits |= 1 << k  # a_k
    if j == k:
        bits |= 1 << (n + j)  # b_j
    if (rows2[j] >> k) & 1:
        bits |= 1 << (3 * n + j)  # d_j
    return bits


def system_row(g: Graph, g_prime: Graph, j: int, k: int) -> BitVector:
    """Coefficient vector of the (j, k) compatibility equation.

    The equation reads sum_i theta_ij theta'_ik c_i + theta_jk a_k
    + theta'_jk d_j + [j == k] b_j = 0; the right-hand side is always zero.
    """
    n = g.n
    if g_prime.n != n:
        raise ValueError(f"graphs must have the same order: {n} != {g_prime.n}")
    if not (0 <= j < n and 0 <= k < n):
        raise ValueError(f"equation index ({j}, {k}) out of range for n={n}")
    return BitVector(4 * n, _row_bits(g.int_rows, g_prime.int_rows, n, j, k))


def solve_system(g: Graph, g_prime: Graph) -> SolutionSpace:
    """Nullspace basis of the full n^2-equation system, deterministically.

    Rows are generated in row-major (j, k) order and fed straight into a
    streaming eliminator, so the n^2 x 4n matrix is never materialized.
    """
    n = g.n
    if g_prime.n != n:
        raise ValueError(f"graphs must have the same order: {n} != {g_prime.n}")
    rows1 = g.int_rows
    rows2 = g_prime.int_rows
    elim = StreamingEliminator(4 * n)
    feed = elim.feed_bits
    two_n = 2 * n
    three_n = 3 * n
    for j in range(n):
        r1j = rows1[j]
        r2j = rows2[j]
        bj = 1 << (n + j)
        dj = 1 << (three_n + j)
        for k in range(n):
            bits = (r1j & rows2[k]) << two_n
            if (r1j >> k) & 1:
                bits |= 1 << k
            if j == k:
                bits |= bj
            if (r2j >> k) & 1:
                bits |= dj
            feed(bits)
    return SolutionSpace(n, tuple(elim.null_space()))


def is_admissible(v: BitVector) -> bool:
    """Whether every per-qubit quadruple of ``v`` is invertible."""
    if len(v) % 4:
        raise ValueError(f"vector length {len(v)} is not a multiple of 4")
    return _admissible_bits(v.bits, len(v) // 4)


def _admissible_bits(bits: int, n: int) -> bool:
    mask = (1 << n) - 1
    a = bits & mask
    b = (bits >> n) & mask
    c = (bits >> (2 * n)) & mask
    d = bits >> (3 * n)
    return ((a & d) ^ (b & c)) == mask


def _search_admissible(space: SolutionSpace) -> tuple[Optional[BitVector], Optional[str]]:
    n = space.n
    basis = [v.bits for v in space.basis]
    d = len(basis)
    if d <= 4:
        # small space: try every element, subset masks ascending
        for m in range(1 << d):
            bits = 0
            mm = m
            while mm:
                low = mm & -mm
                bits ^= basis[low.bit_length() - 1]
                mm ^= low
            if _admissible_bits(bits, n):
                return BitVector(4 * n, bits), "exhaustive"
        return None, None
    if _admissible_bits(0, n):  # pragma: no cover - the zero vector never is
        return BitVector(4 * n, 0), "singles"
    for i in range(d):
        if _admissible_bits(basis[i], n):
            return BitVector(4 * n, basis[i]), "singles"
    for i in range(d):
        bi = basis[i]
        for j in range(i + 1, d):
            bits = bi ^ basis[j]
            if _admissible_bits(bits, n):
                return BitVector(4 * n, bits), "pairs"
    return None, None


def find_admissible(space: SolutionSpace) -> Optional[BitVector]:
    """First solution-space vector whose quadruples are all invertible.

    For dim(V) <= 4 the whole space is enumerated.  Beyond that, only the
    basis vectors and their pairwise sums are tried, in basis-index
    lexicographic order; on connected inputs this shortcut finds a vector
    whenever one exists.
    """
    return _search_admissible(space)[0]


def assemble_witness(v: BitVector) -> LocalCliffordOp:
    """Read a local Clifford operator off an admissible solution vector."""
    if not is_admissible(v):
        raise ValueError("vector does not satisfy the per-qubit invertibility constraints")
    n = len(v) // 4
    bits = v.bits
    quads = []
    for i in range(n):
        quads.append(
            (
                (bits >> i) & 1,
                (bits >> (n + i)) & 1,
                (bits >> (2 * n + i)) & 1,
                (bits >> (3 * n + i)) & 1,
            )
        )
    return LocalCliffordOp(quads)


def verify_witness_stages(
    g: Graph, g_prime: Graph, q: LocalCliffordOp
) -> tuple[bool, Optional[str]]:
    """Like :func:`verify_witness`, also naming the failed stage.

    Stages, in order: "determinant" (per-qubit invertibility),
    "orthogonality" (S^T Q^T P S' = 0 for the two generator matrices),
    "graph-map" (C theta + D invertible and
    (A theta + B)(C theta + D)^-1 = theta').
    """
    n = g.n
    if g_prime.n != n or q.n != n:
        raise ValueError(
            f"size mismatch: graphs of order {g.n}, {g_prime.n} and operator on {q.n} qubits"
        )

    for a, b, c, d in q.quadruples:
        if (a & d) ^ (b & c) != 1:
            return False, "determinant"

    s = graph_generator(g).mat
    s_prime = graph_generator(g_prime).mat
    qt = q.block_matrix().transpose()
    p = symplectic_form(n)
    if not mat_mul(s.transpose(), mat_mul(qt, mat_mul(p, s_prime))).is_zero():
        return False, "orthogonality"

    rows = g.int_rows
    ab_rows = [0] * n
    cd_rows = [0] * n
    for i, (a, b, c, d) in enumerate(q.quadruples):
        ab_rows[i] = (rows[i] if a else 0) ^ (b << i)
        cd_rows[i] = (rows[i] if c else 0) ^ (d << i)
    try:
        cd_inv = invert(BitMatrix(n, n, cd_rows))
    except SingularMatrixError:
        return False, "graph-map"
    if mat_mul(BitMatrix(n, n, ab_rows), cd_inv) != g_prime.adjacency:
        return False, "graph-map"
    return True, None


def verify_witness(g: Graph, g_prime: Graph, q: LocalCliffordOp) -> bool:
    """Whether ``q`` maps the graph state of ``g`` onto that of ``g_prime``."""
    return verify_witness_stages(g, g_prime, q)[0]


def _solve_component(
    g: Graph, g_prime: Graph, block: tuple[int, ...]
) -> tuple[ComponentReport, Optional[BitVector]]:
    sub = induced_subgraph(g, block)
    sub_prime = induced_subgraph(g_prime, block)
    space = solve_system(sub, sub_prime)
    vec, path = _search_admissible(space)
    report = ComponentReport(
        vertices=block, dim_v=space.dim, search_path=path, admissible=vec is not None
    )
    return report, vec


def check_equivalence(g: Graph, g_prime: Graph, *, threads: int = 1) -> Verdict:
    """Decide whether two graph states are local Clifford equivalent.

    The check runs per connected component (local complementation never
    merges or splits components, so differing partitions decide the
    question immediately).  On success the per-component solutions are
    scattered back into one operator on all n qubits and verified against
    the full graphs; that verification failing would mean a bug, not a
    negative verdict, and raises RuntimeError.

    ``threads`` > 1 solves components concurrently; the verdict is
    identical to sequential execution.

    Raises:
        ValueError: if either graph has no vertices.
        RuntimeError: if the assembled witness fails verification.
    """
    if g.n == 0 or g_prime.n == 0:
        raise ValueError("graphs must have at least one vertex")
    if g.n != g_prime.n:
        return Verdict(
            equivalent=False,
            witness=None,
            reason=f"vertex counts differ: {g.n} != {g_prime.n}",
        )
    comps = connected_components(g)
    if set(map(frozenset, comps)) != set(map(frozenset, connected_components(g_prime))):
        return Verdict(
            equivalent=False,
            witness=None,
            reason="connected-component partitions differ",
        )

    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(lambda b: _solve_component(g, g_prime, b), comps))
    else:
        results = []
        for block in comps:
            results.append(_solve_component(g, g_prime, block))
            if results[-1][1] is None:
                break

    reports = []
    for report, vec in results:
        reports.append(report)
        if vec is None:
            return Verdict(
                equivalent=False,
                witness=None,
                per_component=tuple(reports),
                reason=f"no admissible solution on component {report.vertices}",
            )

    n = g.n
    quads: list[tuple[int, int, int, int]] = [(1, 0, 0, 1)] * n
    for (report, vec), block in zip(results, comps):
        nc = len(block)
        bits = vec.bits
        for local, v in enumerate(block):
            quads[v] = (
                (bits >> local) & 1,
                (bits >> (nc + local)) & 1,
                (bits >> (2 * nc + local)) & 1,
                (bits >> (3 * nc + local)) & 1,
            )
    op = LocalCliffordOp(quads)
    ok, stage = verify_witness_stages(g, g_prime, op)
    if not ok:
        raise RuntimeError(
            f"assembled witness failed verification at stage {stage!r}; "
            "this indicates a bug in the solver"
        )
    witness = Witness(op=op, provenance=tuple(r.search_path for r in reports))
    return Verdict(equivalent=True, witness=witness, per_component=tuple(reports))
