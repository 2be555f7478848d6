"""Morse matching on the based complex and the contracting homotopy ``c``.

A vertex of the based complex is ``x^alpha * e`` for a basis element ``e``.
The matching pairs every vertex except the normal forms ``x^alpha`` (not in
I_G), so ``c`` raises degree by one, kills basis elements, squares to zero
and satisfies ``dc + cd = id`` (``dc = id - eps`` on F_0).

``c`` is computed from its closed-form case analysis.  The matching itself
(:func:`classify_vertex`) is an independent description used to check it.
"""

from __future__ import annotations

from dataclasses import dataclass
from graphlib import CycleError, TopologicalSorter
from typing import NamedTuple

from .core import UNIT, Cell, Chain, ChainBuilder, Monomial
from .graphs import CointervalGraph
from .resolution import check_basis_element, differential, is_valid_cell, strand_vertices

# the "+1" in the sign (-1)^(|sigma| + 1) of the homotopy; fault-injection seam
_HOMOTOPY_SIGN_OFFSET = 1


class HomotopyError(AssertionError):
    """The closed form produced a symbol that is not a basis element."""


class Vertex(NamedTuple):
    monomial: Monomial
    cell: Cell

    def __str__(self) -> str:
        if self.cell.is_unit:
            return str(self.monomial)
        if self.monomial.is_unit():
            return str(self.cell)
        return f"{self.monomial}*{self.cell}"


# -- the precedence order ----------------------------------------------------

def precedes(e1: Cell, e2: Cell) -> bool:
    """Strict partial order: larger ``max tau``, then smaller ``min sigma``."""
    if e1.tau[-1] != e2.tau[-1]:
        return e1.tau[-1] > e2.tau[-1]
    return e1.sigma[0] < e2.sigma[0]


def prec_compare(e1: Cell, e2: Cell) -> int:
    """-1 if ``e1`` precedes ``e2``, 1 if ``e2`` precedes ``e1``, else 0
    (equal or incomparable)."""
    if precedes(e1, e2):
        return -1
    if precedes(e2, e1):
        return 1
    return 0


def prec_minimal_edge(G: CointervalGraph, m: Monomial) -> Cell | None:
    """The least degree-one cell ``[i|j]`` with ``x_i x_j | m``: largest
    ``j``, then smallest ``i``."""
    supp = m.support
    for j in reversed(supp):
        for i in supp:
            if i >= j:
                break
            if G.has_edge(i, j):
                return Cell((i,), (j,))
    return None


# -- the homotopy ------------------------------------------------------------

@dataclass(frozen=True)
class HomotopySets:
    C1: frozenset[int]
    C2: frozenset[int]
    C3: frozenset[int]

    @property
    def m1(self) -> int | None:
        return max(self.C1) if self.C1 else None

    @property
    def m2(self) -> int | None:
        return min(self.C2) if self.C2 else None

    @property
    def m3(self) -> int | None:
        return min(self.C3) if self.C3 else None


def homotopy_sets(G: CointervalGraph, alpha: Monomial, e: Cell) -> HomotopySets:
    supp = alpha.support
    sigma, tau = e.sigma, e.tau
    top = supp[-1] if supp else None
    lo, t0, tmax = sigma[0], tau[0], tau[-1]
    C1 = frozenset(i for i in supp if i > tmax)
    C2 = frozenset(i for i in supp if i < lo and G.has_edge(i, t0))
    C3 = frozenset(i for i in supp if i < lo and i < top and G.has_edge(i, top))
    return HomotopySets(C1, C2, C3)


def _sign(exponent: int) -> int:
    return -1 if exponent % 2 else 1


def _emit(G, out: list, coeff: int, mono: Monomial, sigma, tau) -> None:
    sigma, tau = tuple(sorted(sigma)), tuple(sorted(tau))
    if not is_valid_cell(G, sigma, tau):
        raise HomotopyError(f"homotopy produced the non-cell [{sigma}|{tau}]")
    out.append((coeff, mono, Cell(sigma, tau)))


def homotopy_vertex(G: CointervalGraph, alpha: Monomial, e: Cell) -> list[tuple[int, Monomial, Cell]]:
    """``c(x^alpha e)`` as a list of ``(coeff, monomial, cell)``."""
    out: list = []
    if e.is_unit:
        edge = prec_minimal_edge(G, alpha)
        if edge is not None:
            i, j = edge.sigma[0], edge.tau[0]
            out.append((1, alpha.over_var(i).over_var(j), edge))
        return out
    sets = homotopy_sets(G, alpha, e)
    sigma, tau = e.sigma, e.tau
    if len(tau) >= 2:
        if sets.C1:
            m1 = sets.m1
            _emit(G, out, 1, alpha.over_var(m1), sigma, tau + (m1,))
        return out
    i = tau[0]
    sgn = _sign(len(sigma) + _HOMOTOPY_SIGN_OFFSET)
    if sets.C1:
        m1 = sets.m1
        _emit(G, out, 1, alpha.over_var(m1), sigma, tau + (m1,))
        if sets.C3:
            m3 = sets.m3
            mono = alpha.times_var(i).over_var(m1).over_var(m3)
            _emit(G, out, sgn, mono, (m3,) + sigma, (m1,))
    elif sets.C2:
        m2 = sets.m2
        _emit(G, out, sgn, alpha.over_var(m2), (m2,) + sigma, tau)
    return out


def contracting_homotopy(G: CointervalGraph, x: Chain | Vertex) -> Chain:
    """k-linear extension of the closed-form homotopy; degree +1."""
    if isinstance(x, tuple) and not isinstance(x, Chain):
        x = Chain.basis_element(G.n, x[1], x[0])
    out = ChainBuilder(x.degree + 1)
    for (m, e), coeff in x.items():
        for k, mm, f in homotopy_vertex(G, m, e):
            out.add(mm, f, k * coeff)
    return out.build()


# -- the matching ------------------------------------------------------------

CRITICAL, UPPER, LOWER = "critical", "upper", "lower"


@dataclass(frozen=True)
class MatchClass:
    polarity: str
    rule: str | None = None
    partner: Vertex | None = None

    def to_json(self) -> dict:
        return {
            "polarity": self.polarity,
            "rule": self.rule,
            "partner": None if self.partner is None else str(self.partner),
        }

    def __str__(self) -> str:
        if self.polarity == CRITICAL:
            return "Critical"
        return f"{self.polarity.capitalize()}({self.rule}) partner {self.partner}"


def classify_vertex(G: CointervalGraph, v: Vertex | tuple) -> MatchClass:
    """Position of ``v`` in the matching, read off the three matching rules
    (applied in order, each to the vertices left over by the previous)."""
    alpha, e = v
    check_basis_element(G, e)
    if e.is_unit:
        edge = prec_minimal_edge(G, alpha)
        if edge is None:
            return MatchClass(CRITICAL)
        i, j = edge.sigma[0], edge.tau[0]
        return MatchClass(LOWER, "M3", Vertex(alpha.over_var(i).over_var(j), edge))
    sigma, tau = e.sigma, e.tau
    top = alpha.max_support()
    # M1: x^a [s|t u j] -> x^a x_j [s|t], j >= max supp a, j > max t
    if top is not None and top > tau[-1]:
        return MatchClass(LOWER, "M1", Vertex(alpha.over_var(top), Cell(sigma, tau + (top,))))
    if len(tau) >= 2:
        j = tau[-1]
        return MatchClass(UPPER, "M1", Vertex(alpha.times_var(j), Cell(sigma, tau[:-1])))
    # left with |tau| = 1 and max supp alpha <= j
    j = tau[0]
    nb = G.neighbourhood(j)
    low = min((k for k in alpha.support if k in nb), default=None)
    if low is not None and low < sigma[0]:
        return MatchClass(LOWER, "M2", Vertex(alpha.over_var(low), Cell((low,) + sigma, tau)))
    if len(sigma) >= 2:
        i = sigma[0]
        return MatchClass(UPPER, "M2", Vertex(alpha.times_var(i), Cell(sigma[1:], tau)))
    i = sigma[0]
    return MatchClass(UPPER, "M3", Vertex(alpha.times_var(i).times_var(j), UNIT))


def strand_morse_graph(G: CointervalGraph, alpha: Monomial) -> dict[Vertex, set[Vertex]]:
    """Adjacency of the Morse graph on the ``alpha`` strand: differential
    edges, with the matched ones reversed."""
    bases = strand_vertices(G, alpha)
    succ: dict[Vertex, set[Vertex]] = {}
    for verts in bases.values():
        for m, e in verts:
            succ[Vertex(m, e)] = set()
    for d in range(1, max(bases) + 1):
        for m, e in bases[d]:
            v = Vertex(m, e)
            for t in differential(G, Chain.basis_element(G.n, e, m)):
                u = Vertex(t.monomial, t.basis)
                cls = classify_vertex(G, u)
                if cls.polarity == LOWER and cls.partner == v:
                    succ[u].add(v)
                else:
                    succ[v].add(u)
    return succ


def elementary_reduction_paths(G: CointervalGraph, alpha: Monomial):
    """Yield ``(v, u, w)`` for every path ``v -> u -> w`` in the Morse graph
    going down along a differential edge and back up along a matched one."""
    bases = strand_vertices(G, alpha)
    for d in range(1, max(bases) + 1):
        for m, e in bases[d]:
            v = Vertex(m, e)
            for t in differential(G, Chain.basis_element(G.n, e, m)):
                u = Vertex(t.monomial, t.basis)
                cls = classify_vertex(G, u)
                if cls.polarity == LOWER and cls.partner != v:
                    yield v, u, cls.partner


def strand_morse_acyclicity(G: CointervalGraph, S) -> bool:
    """The strand Morse graph is acyclic and every elementary reduction path
    strictly lowers the cell in the precedence order."""
    alpha = S if isinstance(S, Monomial) else Monomial.from_support(G.n, S)
    succ = strand_morse_graph(G, alpha)
    try:
        tuple(TopologicalSorter(succ).static_order())
    except CycleError:
        return False
    for v, _, w in elementary_reduction_paths(G, alpha):
        if v.cell.is_unit or w.cell.is_unit or not precedes(w.cell, v.cell):
            return False
    return True
