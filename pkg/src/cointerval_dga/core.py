"""Monomials, basis cells and integer chains over k[x_1, ..., x_n].

Everything here is immutable once built.  A chain is a finite formal sum
of terms ``coeff * x^alpha * e`` with ``e`` a basis cell; all the maps in
the package (differential, homotopy, product) take and return chains.
"""

from __future__ import annotations

from collections import defaultdict
from typing import Iterable, Iterator, Mapping, NamedTuple


class NotDivisibleError(ArithmeticError):
    pass


class Monomial(tuple):
    """Exponent vector; position ``i - 1`` holds the exponent of ``x_i``."""

    __slots__ = ()

    def __new__(cls, exponents: Iterable[int] = ()):
        self = tuple.__new__(cls, exponents)
        for e in self:
            if not isinstance(e, int) or e < 0:
                raise ValueError(f"bad exponent vector {tuple(self)}")
        return self

    @classmethod
    def unit(cls, n: int) -> Monomial:
        return tuple.__new__(cls, (0,) * n)

    @classmethod
    def var(cls, n: int, i: int) -> Monomial:
        if not 1 <= i <= n:
            raise ValueError(f"variable x{i} out of range for n={n}")
        exps = [0] * n
        exps[i - 1] = 1
        return tuple.__new__(cls, exps)

    @classmethod
    def from_support(cls, n: int, support: Iterable[int]) -> Monomial:
        exps = [0] * n
        for i in support:
            exps[i - 1] += 1
        return tuple.__new__(cls, exps)

    @property
    def n(self) -> int:
        return len(self)

    def exponent(self, i: int) -> int:
        return self[i - 1]

    @property
    def degree(self) -> int:
        return sum(self)

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(i + 1 for i, e in enumerate(self) if e)

    def max_support(self) -> int | None:
        """Largest variable index present, ``None`` for the unit."""
        for i in range(len(self) - 1, -1, -1):
            if self[i]:
                return i + 1
        return None

    def is_unit(self) -> bool:
        return not any(self)

    def is_squarefree(self) -> bool:
        return all(e <= 1 for e in self)

    def divides(self, other: Monomial) -> bool:
        return len(self) == len(other) and all(a <= b for a, b in zip(self, other))

    def __mul__(self, other):
        if not isinstance(other, Monomial):
            return NotImplemented
        if len(self) != len(other):
            raise ValueError("monomials live in different rings")
        return tuple.__new__(Monomial, [a + b for a, b in zip(self, other)])

    def __truediv__(self, other):
        if not isinstance(other, Monomial):
            return NotImplemented
        if len(self) != len(other):
            raise ValueError("monomials live in different rings")
        out = [a - b for a, b in zip(self, other)]
        if any(e < 0 for e in out):
            raise NotDivisibleError(f"{other} does not divide {self}")
        return tuple.__new__(Monomial, out)

    def times_var(self, i: int) -> Monomial:
        out = list(self)
        out[i - 1] += 1
        return tuple.__new__(Monomial, out)

    def over_var(self, i: int) -> Monomial:
        if not self[i - 1]:
            raise NotDivisibleError(f"x{i} does not divide {self}")
        out = list(self)
        out[i - 1] -= 1
        return tuple.__new__(Monomial, out)

    def __str__(self) -> str:
        factors = []
        for i, e in enumerate(self, start=1):
            if e == 1:
                factors.append(f"x{i}")
            elif e > 1:
                factors.append(f"x{i}^{e}")
        return "*".join(factors) if factors else "1"

    def __repr__(self) -> str:
        return f"Monomial({tuple(self)!r})"


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return a * b


def mono_div(a: Monomial, b: Monomial) -> Monomial:
    return a / b


class Cell(NamedTuple):
    """Basis symbol ``[sigma|tau]``; ``Cell((), ())`` is the unit of F_0.

    Whether a symbol is a genuine basis element depends on the graph, see
    :func:`cointerval_dga.resolution.is_valid_cell`.
    """

    sigma: tuple[int, ...]
    tau: tuple[int, ...]

    @property
    def is_unit(self) -> bool:
        return not self.sigma and not self.tau

    @property
    def degree(self) -> int:
        if self.is_unit:
            return 0
        return len(self.sigma) + len(self.tau) - 1

    @property
    def support(self) -> tuple[int, ...]:
        return self.sigma + self.tau

    def multidegree(self, n: int) -> Monomial:
        return Monomial.from_support(n, self.support)

    def prec_key(self) -> tuple:
        # ascending order refines the partial order: larger max tau first,
        # then smaller min sigma, then lexicographic sigma and tau
        if self.is_unit:
            return (0, 0, (), ())
        return (-self.tau[-1], self.sigma[0], self.sigma, self.tau)

    def __str__(self) -> str:
        if self.is_unit:
            return "1"
        return "[{}|{}]".format(
            ",".join(map(str, self.sigma)), ",".join(map(str, self.tau))
        )


UNIT = Cell((), ())


def cell(sigma: Iterable[int], tau: Iterable[int]) -> Cell:
    """Build a cell from arbitrary iterables, sorting both vertex sets."""
    return Cell(tuple(sorted(sigma)), tuple(sorted(tau)))


class Term(NamedTuple):
    coefficient: int
    monomial: Monomial
    basis: Cell

    def __str__(self) -> str:
        c, m, e = self.coefficient, self.monomial, self.basis
        sign = "-" if c < 0 else ""
        mag = abs(c)
        parts = []
        if mag != 1:
            parts.append(str(mag))
        if not m.is_unit():
            parts.append(str(m))
        if not e.is_unit:
            parts.append(str(e))
        if not parts:
            parts.append("1")
        return sign + "*".join(parts)


class Chain:
    """Integer combination of ``(monomial, cell)`` pairs in one degree.

    Zero coefficients never survive construction.  Chains compare equal
    when they have the same degree and the same terms.
    """

    __slots__ = ("degree", "_terms")

    def __init__(self, degree: int, terms: Mapping[tuple[Monomial, Cell], int] | None = None):
        if degree < 0:
            raise ValueError("homological degree must be non-negative")
        clean = {}
        if terms:
            n = None
            for key, coeff in terms.items():
                mono, basis = key
                if basis.degree != degree:
                    raise ValueError(f"{basis} does not have degree {degree}")
                if n is None:
                    n = len(mono)
                elif len(mono) != n:
                    raise ValueError("monomials of different lengths in one chain")
                if coeff:
                    clean[(mono, basis)] = int(coeff)
        self.degree = degree
        self._terms = clean

    @classmethod
    def _wrap(cls, degree: int, terms: dict) -> Chain:
        # trusted fast path; caller guarantees degrees, drops zeros here
        self = object.__new__(cls)
        self.degree = degree
        self._terms = {k: v for k, v in terms.items() if v}
        return self

    @classmethod
    def zero(cls, degree: int) -> Chain:
        return cls._wrap(degree, {})

    @classmethod
    def basis_element(cls, n: int, basis: Cell, monomial: Monomial | None = None,
                      coefficient: int = 1) -> Chain:
        mono = Monomial.unit(n) if monomial is None else monomial
        return cls(basis.degree, {(mono, basis): coefficient})

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __iter__(self) -> Iterator[Term]:
        return iter(self.terms())

    def items(self):
        return self._terms.items()

    def keys(self):
        return self._terms.keys()

    def coefficient(self, monomial: Monomial, basis: Cell) -> int:
        return self._terms.get((monomial, basis), 0)

    def terms(self) -> list[Term]:
        """Terms in serialization order: cells descending in the refined
        precedence order, monomials ascending within a cell."""
        items = sorted(self._terms.items(), key=lambda kv: tuple(kv[0][0]))
        items.sort(key=lambda kv: kv[0][1].prec_key(), reverse=True)
        return [Term(c, m, e) for (m, e), c in items]

    def __eq__(self, other) -> bool:
        if not isinstance(other, Chain):
            return NotImplemented
        if not self._terms and not other._terms:
            return True
        return self.degree == other.degree and self._terms == other._terms

    def __hash__(self):
        return hash((self.degree, frozenset(self._terms.items())))

    def _check_compatible(self, other: Chain) -> None:
        if self.degree != other.degree and self._terms and other._terms:
            raise ValueError(
                f"cannot add chains of degrees {self.degree} and {other.degree}"
            )

    def __add__(self, other: Chain) -> Chain:
        if not isinstance(other, Chain):
            return NotImplemented
        self._check_compatible(other)
        acc = dict(self._terms)
        for k, v in other._terms.items():
            acc[k] = acc.get(k, 0) + v
        deg = self.degree if self._terms else other.degree
        return Chain._wrap(deg, acc)

    def __neg__(self) -> Chain:
        return Chain._wrap(self.degree, {k: -v for k, v in self._terms.items()})

    def __sub__(self, other: Chain) -> Chain:
        if not isinstance(other, Chain):
            return NotImplemented
        return self + (-other)

    def __rmul__(self, scalar):
        if isinstance(scalar, bool) or not isinstance(scalar, int):
            return NotImplemented
        return self.scale(scalar)

    def scale(self, scalar: int) -> Chain:
        return Chain._wrap(self.degree, {k: scalar * v for k, v in self._terms.items()})

    def shift(self, monomial: Monomial) -> Chain:
        """Multiply every monomial by ``monomial`` (the S-module action)."""
        return Chain._wrap(
            self.degree,
            {(m * monomial, e): v for (m, e), v in self._terms.items()},
        )

    def multidegrees(self) -> set[Monomial]:
        return {m * e.multidegree(len(m)) for (m, e) in self._terms}

    def is_homogeneous(self) -> bool:
        return len(self.multidegrees()) <= 1

    def __str__(self) -> str:
        ts = self.terms()
        if not ts:
            return "0"
        out = str(ts[0])
        for t in ts[1:]:
            s = str(t)
            if s.startswith("-"):
                out += " - " + s[1:]
            else:
                out += " + " + s
        return out

    def __repr__(self) -> str:
        return f"<Chain deg={self.degree}: {self}>"


def chain_add(u: Chain, v: Chain) -> Chain:
    return u + v


def chain_scale(c: int, u: Chain) -> Chain:
    return u.scale(c)


class ChainBuilder:
    """Mutable accumulator used by the hot loops; call :meth:`build`."""

    __slots__ = ("degree", "acc")

    def __init__(self, degree: int):
        self.degree = degree
        self.acc: dict = defaultdict(int)

    def add(self, monomial: Monomial, basis: Cell, coeff: int) -> None:
        self.acc[(monomial, basis)] += coeff

    def add_chain(self, chain: Chain, coeff: int = 1, shift: Monomial | None = None) -> None:
        acc = self.acc
        if shift is None:
            for k, v in chain._terms.items():
                acc[k] += coeff * v
        else:
            for (m, e), v in chain._terms.items():
                acc[(m * shift, e)] += coeff * v

    def build(self) -> Chain:
        return Chain._wrap(self.degree, self.acc)
