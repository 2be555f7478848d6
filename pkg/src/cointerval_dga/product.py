"""The product on F obtained by lifting multiplication S (x) S -> S through c.

For basis elements ``e1, e2`` of total degree at least one,

    e1 * e2 = c( d(e1) * e2 + (-1)^|e1| e1 * d(e2) ),

and the product is extended S-bilinearly.  The recursion bottoms out at
``1 * 1 = 1`` and terminates because total degree drops by one each step.
"""

from __future__ import annotations

from typing import Iterable

from .core import UNIT, Cell, Chain, ChainBuilder, Monomial
from .graphs import CointervalGraph
from .morse import contracting_homotopy
from .resolution import check_basis_element, differential, full_basis


class Multiplication:
    """Memoized product for one graph.

    The memo maps ordered basis pairs to chains.  Entries are pure functions
    of the key, so concurrent readers may race on an insertion and simply
    recompute the same value.
    """

    def __init__(self, G: CointervalGraph):
        self.G = G
        self.n = G.n
        self.memo: dict[tuple[Cell, Cell], Chain] = {}
        self._unit = Monomial.unit(G.n)

    def star(self, e1: Cell, e2: Cell) -> Chain:
        key = (e1, e2)
        hit = self.memo.get(key)
        if hit is not None:
            return hit
        check_basis_element(self.G, e1)
        check_basis_element(self.G, e2)
        deg = e1.degree + e2.degree
        if deg == 0:
            result = Chain._wrap(0, {(self._unit, UNIT): 1})
        else:
            acc = ChainBuilder(deg - 1)
            if e1.degree:
                acc.add_chain(self.star_chains(differential(self.G, e1),
                                               Chain.basis_element(self.n, e2)))
            if e2.degree:
                sign = -1 if e1.degree % 2 else 1
                acc.add_chain(self.star_chains(Chain.basis_element(self.n, e1),
                                               differential(self.G, e2)), sign)
            result = contracting_homotopy(self.G, acc.build())
        self.memo[key] = result
        return result

    def star_chains(self, u: Chain, v: Chain) -> Chain:
        out = ChainBuilder(u.degree + v.degree)
        for (m1, e1), k1 in u.items():
            for (m2, e2), k2 in v.items():
                out.add_chain(self.star(e1, e2), k1 * k2, m1 * m2)
        return out.build()

    def star_any(self, x: Cell | Chain, y: Cell | Chain) -> Chain:
        if isinstance(x, Cell):
            x = Chain.basis_element(self.n, x)
        if isinstance(y, Cell):
            y = Chain.basis_element(self.n, y)
        return self.star_chains(x, y)

    def table(self, max_total_degree: int) -> ProductTable:
        return multiplication_table(self.G, max_total_degree, self)


def star(G: CointervalGraph, e1: Cell, e2: Cell) -> Chain:
    return Multiplication(G).star(e1, e2)


def star_chains(G: CointervalGraph, u: Chain, v: Chain) -> Chain:
    return Multiplication(G).star_chains(u, v)


def degree1_product_closed_form(G: CointervalGraph, e1: Cell, e2: Cell) -> Chain:
    """Product of two degree-one cells from the explicit nine-case table."""
    for e in (e1, e2):
        check_basis_element(G, e)
        if e.degree != 1:
            raise ValueError(f"{e} is not of degree one")
    (s1,), (t1,) = e1
    (s2,), (t2,) = e2
    n = G.n
    var = lambda i: Monomial.var(n, i)  # noqa: E731
    terms: list[tuple[int, int, tuple, tuple]] = []
    if t1 > t2:
        terms.append((1, s1, (s2,), (t2, t1)))
        if s1 < s2:
            terms.append((1, t2, (s1, s2), (t1,)))
        elif s1 > s2:
            terms.append((-1, t2, (s2, s1), (t1,)))
    elif t1 == t2:
        if s1 < s2:
            terms.append((1, t1, (s1, s2), (t2,)))
        elif s1 > s2:
            terms.append((-1, t2, (s2, s1), (t1,)))
    else:
        if s1 < s2:
            terms.append((1, t1, (s1, s2), (t2,)))
        terms.append((-1, s2, (s1,), (t1, t2)))
        if s1 > s2:
            terms.append((-1, t1, (s2, s1), (t2,)))
    out = ChainBuilder(2)
    for coeff, v, sigma, tau in terms:
        c = Cell(tuple(sorted(sigma)), tuple(sorted(tau)))
        check_basis_element(G, c)
        out.add(var(v), c, coeff)
    return out.build()


class ProductTable:
    """Products of basis pairs, stored for ``left <= right`` in basis order.

    Lookups of the other half use graded commutativity.
    """

    def __init__(self, G: CointervalGraph, order: list[Cell], entries: dict[tuple[Cell, Cell], Chain]):
        self.G = G
        self.order = order
        self._index = {e: k for k, e in enumerate(order)}
        self.entries = entries

    def __getitem__(self, key: tuple[Cell, Cell]) -> Chain:
        e1, e2 = key
        if self._index[e1] <= self._index[e2]:
            return self.entries[(e1, e2)]
        sign = -1 if (e1.degree * e2.degree) % 2 else 1
        return self.entries[(e2, e1)].scale(sign)

    def __contains__(self, key) -> bool:
        e1, e2 = key
        if e1 not in self._index or e2 not in self._index:
            return False
        a, b = sorted((e1, e2), key=self._index.__getitem__)
        return (a, b) in self.entries

    def pairs(self) -> list[tuple[Cell, Cell]]:
        return list(self.entries)

    def __len__(self) -> int:
        return len(self.entries)


def multiplication_table(G: CointervalGraph, max_total_degree: int,
                         mult: Multiplication | None = None) -> ProductTable:
    mult = mult or Multiplication(G)
    order = [e for d, cells in sorted(full_basis(G).items()) for e in cells]
    entries = {}
    for a, e1 in enumerate(order):
        for e2 in order[a:]:
            if e1.degree + e2.degree <= max_total_degree:
                entries[(e1, e2)] = mult.star(e1, e2)
    return ProductTable(G, order, entries)


def basis_pairs(G: CointervalGraph, degrees: Iterable[int] | None = None) -> list[tuple[Cell, Cell]]:
    basis = full_basis(G)
    cells = [e for d in sorted(basis) if degrees is None or d in degrees for e in basis[d]]
    return [(a, b) for a in cells for b in cells]
