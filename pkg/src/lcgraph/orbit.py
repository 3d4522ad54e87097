"""Brute-force ground truth: closures of graphs under local complementation.

Two graph states are local Clifford equivalent exactly when their graphs lie
in the same local-complementation orbit, so exhaustive orbit enumeration at
small sizes independently validates the polynomial decision procedure.
Orbits are over labeled graphs; no isomorphism quotient is taken.  Members
are stored by their graph6 encoding.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .graphs import Graph, connected_components, iter_graphs, local_complement, serialize_graph6

DEFAULT_ORBIT_CAP = 10**6


@dataclass(frozen=True)
class Orbit:
    """A (possibly truncated) local-complementation closure of one graph."""

    origin: str
    members: frozenset[str]
    depth: int
    truncated: bool

    @property
    def size(self) -> int:
        return len(self.members)

    def contains(self, g: Graph | str) -> bool:
        key = g if isinstance(g, str) else serialize_graph6(g)
        return key in self.members


def _bfs(g: Graph, cap: int | None, target: str | None):
    """BFS closure with deterministic expansion (vertex index ascending).

    Returns (members, depth, truncated, found); stops early when ``target``
    shows up or adding a member would exceed ``cap``.
    """
    origin = serialize_graph6(g)
    members = {origin}
    depth = 0
    if target is not None and origin == target:
        return members, depth, False, True
    queue = deque([(g, 0)])
    while queue:
        cur, d = queue.popleft()
        for i in range(cur.n):
            nxt = local_complement(cur, i)
            key = serialize_graph6(nxt)
            if key in members:
                continue
            if cap is not None and len(members) >= cap:
                return members, depth, True, False
            members.add(key)
            depth = max(depth, d + 1)
            if target is not None and key == target:
                return members, depth, False, True
            queue.append((nxt, d + 1))
    return members, depth, False, False


def orbit_bfs(g: Graph, cap: int | None = DEFAULT_ORBIT_CAP) -> Orbit:
    """Breadth-first closure of ``g`` under local complementation at every vertex.

    With a ``cap``, exploration stops before the member set would exceed it
    and the orbit is flagged truncated.
    """
    members, depth, truncated, _ = _bfs(g, cap, None)
    return Orbit(
        origin=serialize_graph6(g),
        members=frozenset(members),
        depth=depth,
        truncated=truncated,
    )


def oracle_equivalent(g: Graph, g_prime: Graph, cap: int | None = DEFAULT_ORBIT_CAP):
    """Orbit-membership test: True, False, or None when truncated ("unknown")."""
    if g.n != g_prime.n:
        raise ValueError(f"graphs must have the same order: {g.n} != {g_prime.n}")
    target = serialize_graph6(g_prime)
    _, _, truncated, found = _bfs(g, cap, target)
    if found:
        return True
    return None if truncated else False


def partition_connected_graphs(n: int) -> list[Orbit]:
    """All labeled connected graphs on ``n`` vertices, grouped into orbits.

    Exhaustive enumeration of 2^(n(n-1)/2) graphs; refused for n > 6 where
    that stops being a desk-scale computation.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    if n > 6:
        raise ValueError(f"partitioning is limited to n <= 6 (2^(n(n-1)/2) graphs); got n={n}")
    seen: set[str] = set()
    orbits = []
    for g in iter_graphs(n):
        if len(connected_components(g)) != 1:
            continue
        if serialize_graph6(g) in seen:
            continue
        orbit = orbit_bfs(g, cap=None)
        orbits.append(orbit)
        seen |= orbit.members
    return orbits
