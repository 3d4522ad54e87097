"""Random graphs, operators, and stabilizer instances for tests and demos."""

from __future__ import annotations

import random

from .gf2 import BitMatrix, mat_mul, rank
from .graphs import Graph, connected_components
from .symplectic import (
    SINGLE_QUBIT_CLASSES,
    GeneratorMatrix,
    LocalCliffordOp,
    apply_local_clifford,
    graph_generator,
)

_CLASS_NAMES = tuple(SINGLE_QUBIT_CLASSES)


def random_graph(n: int, rng: random.Random, p: float = 0.5) -> Graph:
    """Erdos-Renyi G(n, p) on labeled vertices."""
    rows = [0] * n
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < p:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
    return Graph(n, rows)


def random_connected_graph(n: int, rng: random.Random, p: float = 0.5) -> Graph:
    """Rejection-sampled connected G(n, p); uniform over connected graphs at p=0.5."""
    while True:
        g = random_graph(n, rng, p)
        if len(connected_components(g)) == 1:
            return g


def random_lc_sequence(n: int, length: int, rng: random.Random) -> list[int]:
    return [rng.randrange(n) for _ in range(length)]


def random_local_clifford(n: int, rng: random.Random) -> LocalCliffordOp:
    """Uniform choice among the six single-qubit classes on every qubit."""
    return LocalCliffordOp.from_class_names(rng.choices(_CLASS_NAMES, k=n))


def random_invertible(n: int, rng: random.Random) -> BitMatrix:
    """Uniform invertible n x n matrix over GF(2), by rejection."""
    while True:
        m = BitMatrix(n, n, [rng.getrandbits(n) for _ in range(n)])
        if rank(m) == n:
            return m


def random_stabilizer_instance(
    n: int, rng: random.Random, p: float = 0.5
) -> tuple[Graph, LocalCliffordOp, BitMatrix, GeneratorMatrix]:
    """A generator matrix Q [theta; I] R hiding a known graph theta.

    Returns (theta, q, r, s); ``s`` presents the same space as the graph
    state of theta conjugated by the local Clifford q.
    """
    theta = random_graph(n, rng, p)
    q = random_local_clifford(n, rng)
    r = random_invertible(n, rng)
    s = GeneratorMatrix(mat_mul(apply_local_clifford(q, graph_generator(theta)).mat, r))
    return theta, q, r, s
