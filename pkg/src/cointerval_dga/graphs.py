"""Cointerval graphs built from interval representations.

Intervals are closed with integer endpoints.  Two vertices are adjacent in
the cointerval graph exactly when their intervals are disjoint, so touching
intervals such as [0, 2] and [2, 3] are *not* adjacent.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, permutations
from typing import Iterable, Sequence

from .core import Monomial

DEFAULT_RECOGNITION_BOUND = 8


class NotCointervalError(ValueError):
    pass


@dataclass(frozen=True)
class IntervalRep:
    intervals: tuple[tuple[int, int], ...]

    def __post_init__(self):
        ivs = tuple((int(a), int(b)) for a, b in self.intervals)
        for k, (a, b) in enumerate(ivs, start=1):
            if a > b:
                raise ValueError(f"interval {k} has a > b: [{a}, {b}]")
        object.__setattr__(self, "intervals", ivs)

    def __len__(self):
        return len(self.intervals)

    def normalized(self) -> tuple[IntervalRep, tuple[int, ...]]:
        """Stable sort by left endpoint, so labels that are already in
        interval order are kept.

        Returns the sorted representation and ``order`` with ``order[k]``
        the original (1-based) index of the new vertex ``k + 1``.
        """
        idx = sorted(range(len(self.intervals)),
                     key=lambda k: (self.intervals[k][0], k))
        return (IntervalRep(tuple(self.intervals[k] for k in idx)),
                tuple(k + 1 for k in idx))

    def is_normalized(self) -> bool:
        return self.normalized()[1] == tuple(range(1, len(self) + 1))


@dataclass(frozen=True, eq=False)
class CointervalGraph:
    """Graph on ``1..n`` with edges stored as pairs ``(i, j)``, ``i < j``.

    Equality and hashing use ``(n, edges)`` only.
    """

    n: int
    edges: frozenset[tuple[int, int]]
    source: IntervalRep | None = None
    order: tuple[int, ...] | None = None
    _adj: tuple[frozenset[int], ...] = field(init=False, repr=False)

    def __post_init__(self):
        edges = frozenset((min(e), max(e)) for e in self.edges)
        for i, j in edges:
            if i == j or not (1 <= i <= self.n and 1 <= j <= self.n):
                raise ValueError(f"bad edge {(i, j)} for n={self.n}")
        object.__setattr__(self, "edges", edges)
        adj = [set() for _ in range(self.n + 1)]
        for i, j in edges:
            adj[i].add(j)
            adj[j].add(i)
        object.__setattr__(self, "_adj", tuple(frozenset(a) for a in adj))

    def __eq__(self, other):
        if not isinstance(other, CointervalGraph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self):
        return hash((self.n, self.edges))

    def _check_vertex(self, i: int) -> None:
        if not 1 <= i <= self.n:
            raise IndexError(f"vertex {i} not in 1..{self.n}")

    def has_edge(self, i: int, j: int) -> bool:
        return j in self._adj[i]

    def neighbourhood(self, i: int) -> frozenset[int]:
        self._check_vertex(i)
        return self._adj[i]

    def pre_neighbourhood(self, i: int) -> frozenset[int]:
        self._check_vertex(i)
        return frozenset(j for j in self._adj[i] if j < i)

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def edge_ideal_generators(self) -> list[Monomial]:
        return [Monomial.from_support(self.n, e) for e in self.sorted_edges()]

    def in_edge_ideal(self, m: Monomial) -> bool:
        supp = m.support
        return any(self.has_edge(i, j) for i, j in combinations(supp, 2))

    def pnbhd_monotone(self) -> bool:
        pre = [self.pre_neighbourhood(i) for i in range(1, self.n + 1)]
        return all(pre[i] <= pre[j] for i in range(self.n) for j in range(i + 1, self.n))

    def __repr__(self):
        es = ",".join(f"{i}{j}" if self.n < 10 else f"{i}-{j}" for i, j in self.sorted_edges())
        return f"CointervalGraph(n={self.n}, edges={{{es}}})"


def build_cointerval(rep: IntervalRep | Sequence[tuple[int, int]]) -> CointervalGraph:
    if not isinstance(rep, IntervalRep):
        rep = IntervalRep(tuple(rep))
    norm, order = rep.normalized()
    ivs = norm.intervals
    n = len(ivs)
    edges = {(i + 1, j + 1)
             for i in range(n) for j in range(i + 1, n)
             if ivs[i][1] < ivs[j][0]}
    return CointervalGraph(n, frozenset(edges), source=norm, order=order)


def neighbourhood(G: CointervalGraph, i: int) -> frozenset[int]:
    return G.neighbourhood(i)


def pre_neighbourhood(G: CointervalGraph, i: int) -> frozenset[int]:
    return G.pre_neighbourhood(i)


def edge_ideal_generators(G: CointervalGraph) -> list[Monomial]:
    return G.edge_ideal_generators()


def recognize_cointerval_bruteforce(edges: Iterable[tuple[int, int]], n: int,
                                    bound: int = DEFAULT_RECOGNITION_BOUND) -> IntervalRep:
    """Find an interval representation whose cointerval graph is ``edges``.

    Tries every left-endpoint order of the vertices.  For a fixed order the
    smallest right endpoints covering the required overlaps are forced, so
    one check per order decides it.  The returned intervals are indexed by
    the input vertex labels; :func:`build_cointerval` may relabel them.
    Raises :class:`NotCointervalError` when no order works.
    """
    if n > bound:
        raise ValueError(f"brute-force recognition limited to n <= {bound}, got {n}")
    es = {(min(e), max(e)) for e in edges}
    for i, j in es:
        if i == j or not (1 <= i <= n and 1 <= j <= n):
            raise ValueError(f"bad edge {(i, j)} for n={n}")
    overlap = [[False] * (n + 1) for _ in range(n + 1)]
    for u in range(1, n + 1):
        for v in range(1, n + 1):
            if u != v and (min(u, v), max(u, v)) not in es:
                overlap[u][v] = True
    for perm in permutations(range(1, n + 1)):
        pos = {v: k for k, v in enumerate(perm)}
        right = {}
        for k, v in enumerate(perm):
            later = [pos[u] for u in perm[k + 1:] if overlap[v][u]]
            right[v] = max(later, default=k)
        ok = all(
            (right[perm[k]] >= l) == overlap[perm[k]][perm[l]]
            for k in range(n) for l in range(k + 1, n)
        )
        if ok:
            return IntervalRep(tuple((pos[v], right[v]) for v in range(1, n + 1)))
    raise NotCointervalError("complement is not an interval graph")


def graph_from_edges(edges: Iterable[tuple[int, int]], n: int,
                     bound: int = DEFAULT_RECOGNITION_BOUND) -> CointervalGraph:
    """Validate a raw graph by brute force and return it in interval order.

    Orders are tried lexicographically, so when the input labels already
    admit an interval model with non-decreasing left endpoints the labels
    are kept; otherwise ``result.order`` records the relabeling.
    """
    return build_cointerval(recognize_cointerval_bruteforce(edges, n, bound))


def is_isomorphic_by(G: CointervalGraph, H: CointervalGraph, order: Sequence[int]) -> bool:
    """True if new vertex ``k+1`` of ``H`` is old vertex ``order[k]`` of ``G``."""
    if G.n != H.n:
        return False
    relabel = {old: new for new, old in enumerate(order, start=1)}
    mapped = {(min(relabel[i], relabel[j]), max(relabel[i], relabel[j])) for i, j in G.edges}
    return mapped == set(H.edges)
