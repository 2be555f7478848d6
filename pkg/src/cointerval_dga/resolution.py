"""The minimal free resolution F of S/I_G for a cointerval graph G.

Basis cells ``[sigma|tau]`` satisfy ``max sigma < min tau`` and every vertex
of ``sigma`` is adjacent to ``min tau``.  The differential deletes one
vertex at a time; any deletion that leaves a non-cell contributes zero.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, product
from typing import Iterable, Sequence

from .core import UNIT, Cell, Chain, ChainBuilder, Monomial
from .graphs import CointervalGraph

# sign exponent offsets; nonzero values exist only for fault injection
_ALPHA1_OFFSET = 0
_ALPHA2_OFFSET = 0
_PARTIAL_SIGN_OFFSET = 0


class InvalidCellError(ValueError):
    pass


def is_valid_cell(G: CointervalGraph, sigma: Sequence[int], tau: Sequence[int]) -> bool:
    """Cell validity for sorted ``sigma`` and ``tau``."""
    if not sigma or not tau:
        return False
    if sigma[-1] >= tau[0] or sigma[0] < 1 or tau[-1] > G.n:
        return False
    t = tau[0]
    return all(G.has_edge(i, t) for i in sigma)


def make_cell(G: CointervalGraph, sigma: Iterable[int], tau: Iterable[int]) -> Cell:
    s, t = tuple(sorted(sigma)), tuple(sorted(tau))
    if len(set(s)) != len(s) or len(set(t)) != len(t) or not is_valid_cell(G, s, t):
        raise InvalidCellError(f"[{s}|{t}] is not a basis element for {G!r}")
    return Cell(s, t)


def check_basis_element(G: CointervalGraph, e: Cell) -> None:
    if e.is_unit:
        return
    if tuple(sorted(set(e.sigma))) != e.sigma or tuple(sorted(set(e.tau))) != e.tau \
            or not is_valid_cell(G, e.sigma, e.tau):
        raise InvalidCellError(f"{e} is not a basis element for {G!r}")


def enumerate_basis(G: CointervalGraph, d: int) -> list[Cell]:
    """B_d, ordered by support (lexicographic), then by ``|tau|`` ascending."""
    if d < 0:
        raise ValueError("degree must be non-negative")
    if d == 0:
        return [UNIT]
    out = []
    for supp in combinations(range(1, G.n + 1), d + 1):
        for k in range(d, 0, -1):
            sigma, tau = supp[:k], supp[k:]
            if is_valid_cell(G, sigma, tau):
                out.append(Cell(sigma, tau))
    return out


def full_basis(G: CointervalGraph) -> dict[int, list[Cell]]:
    out = {}
    d = 0
    while True:
        b = enumerate_basis(G, d)
        if not b:
            return out
        out[d] = b
        d += 1


def top_degree(G: CointervalGraph) -> int:
    return max(full_basis(G))


def _cell_boundary(G: CointervalGraph, e: Cell) -> list[tuple[int, int, Cell]]:
    """``d e`` as a list of ``(sign, variable, cell)``; variable 0 means the
    degree-one case ``d[i|j] = x_i x_j``."""
    sigma, tau = e.sigma, e.tau
    if len(sigma) == 1 and len(tau) == 1:
        return [(1, 0, UNIT)]
    out = []
    ntau = len(tau)
    ns = len(sigma)
    for pos, i in enumerate(sigma):
        rest = sigma[:pos] + sigma[pos + 1:]
        if is_valid_cell(G, rest, tau):
            alpha1 = ntau + (ns - pos - 1) + _ALPHA1_OFFSET
            out.append((-1 if alpha1 % 2 else 1, i, Cell(rest, tau)))
    for pos, i in enumerate(tau):
        rest = tau[:pos] + tau[pos + 1:]
        if is_valid_cell(G, sigma, rest):
            alpha2 = (ntau - pos - 1) + _ALPHA2_OFFSET
            out.append((-1 if alpha2 % 2 else 1, i, Cell(sigma, rest)))
    return out


def _cell_partial(G: CointervalGraph, e: Cell) -> list[tuple[int, int, Cell]]:
    sigma, tau = e.sigma, e.tau
    if len(sigma) == 1 and len(tau) == 1:
        return [(1, 0, UNIT)]
    out = []
    t = tau[-1]
    if is_valid_cell(G, sigma, tau[:-1]):
        out.append((1, t, Cell(sigma, tau[:-1])))
    s = sigma[0]
    if is_valid_cell(G, sigma[1:], tau):
        sign = 1 if (len(tau) + len(sigma) + _PARTIAL_SIGN_OFFSET) % 2 else -1
        out.append((sign, s, Cell(sigma[1:], tau)))
    return out


def _apply(G: CointervalGraph, x, cell_map) -> Chain:
    if isinstance(x, Cell):
        x = Chain.basis_element(G.n, x)
    if x.degree < 1:
        raise ValueError("the differential is not defined on F_0")
    out = ChainBuilder(x.degree - 1)
    cache = {}
    for (m, e), coeff in x.items():
        bd = cache.get(e)
        if bd is None:
            bd = cache[e] = cell_map(G, e)
        for sign, v, f in bd:
            if v == 0:
                i, j = e.sigma[0], e.tau[0]
                mm = m.times_var(i).times_var(j)
            else:
                mm = m.times_var(v)
            out.add(mm, f, sign * coeff)
    return out.build()


def differential(G: CointervalGraph, x: Cell | Chain) -> Chain:
    """S-linear differential on a basis cell or on a chain of degree >= 1."""
    return _apply(G, x, _cell_boundary)


def partial_boundary(G: CointervalGraph, x: Cell | Chain) -> Chain:
    """The auxiliary map keeping only the ``max tau`` and ``min sigma`` deletions."""
    return _apply(G, x, _cell_partial)


def augmentation(G: CointervalGraph, m: Monomial) -> Monomial | None:
    """Normal form of ``m`` in S/I_G: ``m`` itself, or ``None`` for zero."""
    return None if G.in_edge_ideal(m) else m


def augmentation_chain(G: CointervalGraph, x: Chain) -> Chain:
    """Apply F_0 -> S/I_G -> F_0 (normal-form section) to a degree-0 chain."""
    if x.degree != 0:
        raise ValueError("augmentation is defined on F_0 only")
    return Chain._wrap(0, {k: v for k, v in x.items() if not G.in_edge_ideal(k[0])})


@dataclass
class StrandComplex:
    """The multidegree slice of F in multidegree ``alpha``.

    ``bases[d]`` lists the strand vertices ``(cofactor, cell)`` of degree d;
    ``matrices[d]`` is the integer matrix of ``F_d -> F_{d-1}`` with rows
    indexed by ``bases[d - 1]`` and columns by ``bases[d]``.
    """

    alpha: Monomial
    bases: dict[int, list[tuple[Monomial, Cell]]]
    matrices: dict[int, list[list[int]]] = field(default_factory=dict)

    @property
    def support(self) -> tuple[int, ...]:
        return self.alpha.support

    def dims(self) -> tuple[int, ...]:
        top = max(self.bases)
        return tuple(len(self.bases[d]) for d in range(top + 1))

    def cell_matrices(self) -> dict[int, list[list[int]]]:
        return self.matrices

    def to_json(self) -> dict:
        return {
            "multidegree": list(self.alpha),
            "bases": {str(d): [f"{m}*{e}" if not m.is_unit() else str(e) for m, e in b]
                      for d, b in self.bases.items()},
            "matrices": {str(d): mat for d, mat in self.matrices.items()},
        }


def strand_vertices(G: CointervalGraph, alpha: Monomial) -> dict[int, list[tuple[Monomial, Cell]]]:
    supp = alpha.support
    out = {0: [(alpha, UNIT)]}
    for d in range(1, len(supp)):
        cells = []
        for sub in combinations(supp, d + 1):
            for k in range(d, 0, -1):
                if is_valid_cell(G, sub[:k], sub[k:]):
                    cells.append(Cell(sub[:k], sub[k:]))
        if not cells:
            break
        out[d] = [(alpha / c.multidegree(G.n), c) for c in cells]
    return out


def _as_multidegree(G: CointervalGraph, S) -> Monomial:
    if isinstance(S, Monomial):
        return S
    S = set(S)
    if not S <= set(range(1, G.n + 1)):
        raise ValueError(f"support {sorted(S)} not inside 1..{G.n}")
    return Monomial.from_support(G.n, S)


def strand_complex(G: CointervalGraph, S: Iterable[int] | Monomial) -> StrandComplex:
    """Strand in multidegree ``S`` (a vertex subset, or any exponent vector)."""
    alpha = _as_multidegree(G, S)
    bases = strand_vertices(G, alpha)
    mats = {}
    for d in range(1, max(bases) + 1):
        rows = {v: r for r, v in enumerate(bases[d - 1])}
        mat = [[0] * len(bases[d]) for _ in bases[d - 1]]
        for col, (m, e) in enumerate(bases[d]):
            for t in differential(G, Chain.basis_element(G.n, e, m)):
                mat[rows[(t.monomial, t.basis)]][col] += t.coefficient
        mats[d] = mat
    return StrandComplex(alpha, bases, mats)


def squarefree_supports(n: int) -> list[tuple[int, ...]]:
    return [tuple(i + 1 for i in range(n) if bits[i]) for bits in product((0, 1), repeat=n)]


class BettiTable:
    """Graded Betti numbers keyed by ``(degree, multidegree)``."""

    def __init__(self, ranks: dict[tuple[int, Monomial], int] | None = None):
        self.ranks = {k: v for k, v in (ranks or {}).items() if v}

    def __getitem__(self, key):
        return self.ranks.get(key, 0)

    def __eq__(self, other):
        if not isinstance(other, BettiTable):
            return NotImplemented
        return self.ranks == other.ranks

    def totals(self) -> tuple[int, ...]:
        if not self.ranks:
            return ()
        top = max(d for d, _ in self.ranks)
        tot = [0] * (top + 1)
        for (d, _), r in self.ranks.items():
            tot[d] += r
        return tuple(tot)

    def items(self):
        return sorted(self.ranks.items(), key=lambda kv: (kv[0][0], tuple(kv[0][1])))

    def to_json(self) -> list[dict]:
        return [{"degree": d, "multidegree": list(m), "rank": r} for (d, m), r in self.items()]

    @classmethod
    def from_json(cls, data: list[dict]) -> BettiTable:
        return cls({(row["degree"], Monomial(row["multidegree"])): row["rank"] for row in data})

    def __repr__(self):
        return f"BettiTable(totals={self.totals()})"


def betti_table(G: CointervalGraph) -> BettiTable:
    ranks: dict = {}
    for d, cells in full_basis(G).items():
        for e in cells:
            key = (d, e.multidegree(G.n))
            ranks[key] = ranks.get(key, 0) + 1
    return BettiTable(ranks)


def is_minimal(G: CointervalGraph) -> bool:
    """No differential coefficient is a nonzero scalar."""
    for d, cells in full_basis(G).items():
        if d == 0:
            continue
        for e in cells:
            for t in differential(G, e):
                if t.monomial.is_unit():
                    return False
    return True
