"""Brute-force checks of the resolution, homotopy and product.

Every ``verify_*`` function returns a :class:`CheckResult`; a failed check
carries the first witness found in the (deterministic) enumeration order.
Exceptions raised while checking are reported as failures, not propagated.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from itertools import combinations, combinations_with_replacement, product
from typing import Callable

from .core import UNIT, Chain, Monomial
from .graphs import CointervalGraph, build_cointerval
from .morse import (
    LOWER, UPPER, Vertex, classify_vertex, contracting_homotopy, strand_morse_acyclicity,
)
from .product import Multiplication, degree1_product_closed_form
from .resolution import (
    BettiTable, augmentation_chain, betti_table, differential, full_basis, is_minimal,
    partial_boundary, squarefree_supports, strand_complex, strand_vertices,
)


# -- exact linear algebra ----------------------------------------------------

def integer_rank(matrix: list[list[int]]) -> int:
    """Rank over Q by fraction-free (Bareiss) elimination."""
    M = [list(r) for r in matrix]
    if not M or not M[0]:
        return 0
    nrows, ncols = len(M), len(M[0])
    rank, prev = 0, 1
    for col in range(ncols):
        piv = next((r for r in range(rank, nrows) if M[r][col]), None)
        if piv is None:
            continue
        M[rank], M[piv] = M[piv], M[rank]
        p = M[rank][col]
        prow = M[rank]
        for r in range(rank + 1, nrows):
            row = M[r]
            f = row[col]
            for c in range(col + 1, ncols):
                row[c] = (row[c] * p - f * prow[c]) // prev
            row[col] = 0
        prev = p
        rank += 1
        if rank == nrows:
            break
    return rank


def mat_mul(A: list[list[int]], B: list[list[int]]) -> list[list[int]]:
    if not A or not B:
        return [[0] * (len(B[0]) if B else 0) for _ in A]
    return [[sum(a * b for a, b in zip(row, col)) for col in zip(*B)] for row in A]


def homology_ranks(dims: dict[int, int], mats: dict[int, list[list[int]]]) -> dict[int, int]:
    """``dims[d] - rank(mats[d]) - rank(mats[d+1])``, ``mats[d]: C_d -> C_{d-1}``."""
    ranks = {d: integer_rank(m) for d, m in mats.items()}
    return {d: dims[d] - ranks.get(d, 0) - ranks.get(d + 1, 0) for d in dims}


# -- reports -----------------------------------------------------------------

@dataclass
class CheckResult:
    check: str
    passed: bool
    witness: dict | None = None
    millis: float = 0.0
    notes: dict = field(default_factory=dict)

    @property
    def status(self) -> str:
        return "pass" if self.passed else "fail"

    def to_json(self) -> dict:
        out = {"check": self.check, "status": self.status, "millis": round(self.millis, 3)}
        if self.witness is not None:
            out["witness"] = self.witness
        if self.notes:
            out["notes"] = self.notes
        return out

    def __str__(self) -> str:
        s = f"{self.check}: {self.status.upper()} ({self.millis:.1f} ms)"
        if self.witness is not None:
            s += "\n    witness: " + ", ".join(f"{k}={v}" for k, v in self.witness.items())
        for k, v in self.notes.items():
            s += f"\n    note: {k}={v}"
        return s


@dataclass
class VerificationReport:
    results: list[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    def add(self, r: CheckResult) -> None:
        self.results.append(r)

    def extend(self, other: VerificationReport) -> None:
        self.results.extend(other.results)

    def failures(self) -> list[CheckResult]:
        return [r for r in self.results if not r.passed]

    def to_json(self) -> list[dict]:
        return [r.to_json() for r in self.results]

    def __str__(self) -> str:
        return "\n".join(str(r) for r in self.results)


class _Fail(Exception):
    def __init__(self, **witness):
        self.witness = witness


def _graph_str(G: CointervalGraph) -> str:
    return f"n={G.n} edges={{{','.join(f'{i}-{j}' for i, j in G.sorted_edges())}}}"


def _run(name: str, G: CointervalGraph, body: Callable[[], dict | None]) -> CheckResult:
    t0 = time.perf_counter()
    try:
        notes = body() or {}
        ok, witness = True, None
    except _Fail as f:
        ok, witness, notes = False, {"check": name, "graph": _graph_str(G), **f.witness}, {}
    except Exception as exc:  # a crash is a failure with its own witness
        ok, notes = False, {}
        witness = {"check": name, "graph": _graph_str(G), "error": f"{type(exc).__name__}: {exc}"}
    return CheckResult(name, ok, witness, (time.perf_counter() - t0) * 1e3, notes)


def _expect(cond: bool, **witness) -> None:
    if not cond:
        raise _Fail(**{k: str(v) for k, v in witness.items()})


# -- resolution checks -------------------------------------------------------

def verify_d_squared(G: CointervalGraph) -> CheckResult:
    def body():
        for d, cells in full_basis(G).items():
            if d < 2:
                continue
            for e in cells:
                dd = differential(G, differential(G, e))
                _expect(not dd, input=e, expected=0, actual=dd)
    return _run("d_squared", G, body)


def verify_exactness(G: CointervalGraph) -> CheckResult:
    def body():
        for S in squarefree_supports(G.n):
            st = strand_complex(G, S)
            dims = dict(enumerate(st.dims()))
            for d in st.matrices:
                if d + 1 in st.matrices:
                    comp = mat_mul(st.matrices[d], st.matrices[d + 1])
                    _expect(all(not x for row in comp for x in row),
                            strand=S, degree=d + 1, expected="d*d = 0", actual=comp)
            h = homology_ranks(dims, st.matrices)
            want0 = 0 if G.in_edge_ideal(st.alpha) else 1
            _expect(h[0] == want0, strand=S, degree=0, expected=want0, actual=h[0])
            for d, r in h.items():
                _expect(d == 0 or r == 0, strand=S, degree=d, expected=0, actual=r)
        _expect(is_minimal(G), expected="no unit coefficients", actual="unit coefficient found")
    return _run("exactness", G, body)


def taylor_betti_oracle(G: CointervalGraph) -> BettiTable:
    """Graded Betti numbers from the Taylor complex tensored with k."""
    gens = G.sorted_edges()
    masks = [(1 << (i - 1)) | (1 << (j - 1)) for i, j in gens]
    groups: dict[int, list[tuple[int, ...]]] = {}
    for r in range(len(gens) + 1):
        for T in combinations(range(len(gens)), r):
            lcm = 0
            for t in T:
                lcm |= masks[t]
            groups.setdefault(lcm, []).append(T)
    ranks = {}
    for lcm, subsets in groups.items():
        by_size: dict[int, list[tuple[int, ...]]] = {}
        for T in subsets:
            by_size.setdefault(len(T), []).append(T)
        mats = {}
        for r, cols in by_size.items():
            if r == 0 or r - 1 not in by_size:
                continue
            rows = {T: k for k, T in enumerate(by_size[r - 1])}
            mat = [[0] * len(cols) for _ in rows]
            for c, T in enumerate(cols):
                for pos in range(r):
                    face = T[:pos] + T[pos + 1:]
                    k = rows.get(face)
                    if k is not None:
                        mat[k][c] += -1 if pos % 2 else 1
            mats[r] = mat
        dims = {r: len(v) for r, v in by_size.items()}
        alpha = Monomial(((lcm >> k) & 1) for k in range(G.n))
        for r, h in homology_ranks(dims, mats).items():
            if h:
                ranks[(r, alpha)] = h
    return BettiTable(ranks)


def verify_betti(G: CointervalGraph) -> CheckResult:
    def body():
        ours, oracle = betti_table(G), taylor_betti_oracle(G)
        for key in sorted(set(ours.ranks) | set(oracle.ranks), key=lambda k: (k[0], tuple(k[1]))):
            _expect(ours[key] == oracle[key], degree=key[0], multidegree=key[1],
                    expected=oracle[key], actual=ours[key])
        return {"totals": list(ours.totals())}
    return _run("betti_oracle", G, body)


# -- homotopy checks ---------------------------------------------------------

def multidegrees(n: int, bound: int) -> list[Monomial]:
    return [Monomial(e) for e in product(range(bound + 1), repeat=n)]


def verify_homotopy(G: CointervalGraph, strand_bound: int = 1) -> CheckResult:
    """All homotopy identities on every strand with exponents <= ``strand_bound``."""
    n = G.n

    def body():
        count = 0
        for alpha in multidegrees(n, strand_bound):
            for d, verts in strand_vertices(G, alpha).items():
                for m, e in verts:
                    count += 1
                    v = Vertex(m, e)
                    x = Chain.basis_element(n, e, m)
                    cv = contracting_homotopy(G, x)
                    if d == 0:
                        lhs = differential(G, cv) if cv else Chain.zero(0)
                        _expect(lhs == x - augmentation_chain(G, x),
                                vertex=v, identity="dc = id - eps", actual=lhs)
                    else:
                        lhs = (differential(G, cv) if cv else Chain.zero(d)) \
                            + contracting_homotopy(G, differential(G, x))
                        _expect(lhs == x, vertex=v, identity="dc + cd = id", actual=lhs)
                    ccv = contracting_homotopy(G, cv)
                    _expect(not ccv, vertex=v, identity="c^2 = 0", actual=ccv)
                    _expect(cv.multidegrees() <= {alpha}, vertex=v,
                            identity="c preserves multidegree", actual=cv)
                    if m.is_unit():
                        _expect(not cv, vertex=v, identity="c(e) = 0", actual=cv)
                    cls = classify_vertex(G, v)
                    _expect(bool(cv) == (cls.polarity == LOWER), vertex=v,
                            identity="c nonzero exactly on lower vertices",
                            polarity=cls.polarity, actual=cv)
                    for t in cv:
                        up = classify_vertex(G, (t.monomial, t.basis))
                        _expect(up.polarity == UPPER, vertex=v,
                                identity="terms of c are upper", actual=t)
                    if cls.partner is not None:
                        back = classify_vertex(G, cls.partner)
                        _expect(back.partner == v and back.polarity != cls.polarity
                                and back.rule == cls.rule,
                                vertex=v, identity="matching is an involution",
                                partner=cls.partner, actual=back)
                    if cls.polarity == LOWER:
                        _expect(cv.coefficient(*cls.partner) in (1, -1), vertex=v,
                                identity="c(v) hits its partner", actual=cv)
            _expect(strand_morse_acyclicity(G, alpha), strand=alpha,
                    identity="Morse graph acyclic, reduction paths descend")
        return {"vertices": count}
    return _run("homotopy", G, body)


# -- product checks ----------------------------------------------------------

def _cells_by_degree(G):
    basis = full_basis(G)
    return basis, [e for d in sorted(basis) for e in basis[d]]


def verify_dga(G: CointervalGraph, degree_bound: int | None = None,
               mult: Multiplication | None = None) -> CheckResult:
    """Unit, Leibniz, commutativity, associativity and the structural properties.

    ``degree_bound`` caps the total degree of the pairs and triples tried
    (default: the length of the resolution, beyond which products vanish).
    """
    mult = mult or Multiplication(G)
    n = G.n

    def body():
        basis, cells = _cells_by_degree(G)
        bound = max(basis) if degree_bound is None else degree_bound
        one = Chain.basis_element(n, UNIT)
        pairs = [(a, b) for a in cells for b in cells if a.degree + b.degree <= bound]
        odd_constants = []
        for a, b in pairs:
            ab = mult.star(a, b)
            p, q = a.degree, b.degree
            _expect(ab.multidegrees() <= {a.multidegree(n) * b.multidegree(n)},
                    law="multidegree homogeneity", left=a, right=b, actual=ab)
            if p + q >= 1:
                lhs = differential(G, ab) if ab else Chain.zero(p + q - 1)
                rhs = Chain.zero(p + q - 1)
                if p:
                    rhs = rhs + mult.star_any(differential(G, a), b)
                if q:
                    rhs = rhs + mult.star_any(a, differential(G, b)).scale(-1 if p % 2 else 1)
                _expect(lhs == rhs, law="Leibniz", left=a, right=b, expected=rhs, actual=lhs)
            ba = mult.star(b, a)
            _expect(ab == ba.scale(-1 if (p * q) % 2 else 1),
                    law="graded commutativity", left=a, right=b, expected=ba, actual=ab)
            if a == b and p % 2:
                _expect(not ab, law="odd square vanishes", left=a, actual=ab)
            if p and q:
                if p == 1 and q == 1:
                    cf = degree1_product_closed_form(G, a, b)
                    _expect(ab == cf, law="closed form (degree one)", left=a, right=b,
                            expected=cf, actual=ab)
                via_d = contracting_homotopy(G, mult.star_any(differential(G, a), b))
                via_p = contracting_homotopy(G, mult.star_any(partial_boundary(G, a), b))
                _expect(via_d == via_p, law="replacement by partial boundary",
                        left=a, right=b, expected=via_d, actual=via_p)
                s12, t12 = set(a.sigma) | set(b.sigma), set(a.tau) | set(b.tau)
                for t in ab:
                    f = t.basis
                    _expect(t.monomial.degree == 1, law="linear cofactor", left=a, right=b, term=t)
                    _expect(set(f.sigma) <= s12 and set(f.tau) <= t12,
                            law="support containment", left=a, right=b, term=t)
                    _expect(f.tau[-1] == max(t12), law="max tau", left=a, right=b, term=t)
                    _expect(len(f.tau) >= len(a.tau) + len(b.tau) - 1,
                            law="tau cardinality", left=a, right=b, term=t)
                    cls = classify_vertex(G, (t.monomial, t.basis))
                    _expect(cls.polarity == UPPER, law="product lies in im c",
                            left=a, right=b, term=t)
                    if t.coefficient not in (1, -1):
                        odd_constants.append(f"{a}*{b}: {t}")
        for e in cells:
            x = Chain.basis_element(n, e)
            _expect(mult.star(UNIT, e) == x, law="unit (left)", input=e, actual=mult.star(UNIT, e))
            _expect(mult.star(e, UNIT) == x, law="unit (right)", input=e, actual=mult.star(e, UNIT))
        _expect(mult.star(UNIT, UNIT) == one, law="unit", input="1*1")
        for a in cells:
            for b in cells:
                if a.degree + b.degree > bound:
                    continue
                ab = mult.star(a, b)
                for c in cells:
                    if a.degree + b.degree + c.degree > bound:
                        continue
                    bc = mult.star(b, c)
                    left = mult.star_any(ab, c)
                    right = mult.star_any(a, bc)
                    _expect(left == right, law="associativity", triple=f"{a}, {b}, {c}",
                            expected=right, actual=left)
                    if a.degree and b.degree and c.degree:
                        for t in right:
                            cls = classify_vertex(G, (t.monomial, t.basis))
                            _expect(cls.polarity == UPPER, law="triple product lies in im c",
                                    triple=f"{a}, {b}, {c}", term=t)
        notes = {"pairs": len(pairs)}
        if odd_constants:
            notes["structure constants outside {-1,0,1}"] = odd_constants[:5]
        return notes
    return _run("dga", G, body)


# -- graph families ----------------------------------------------------------

def enumerate_test_graphs(n: int, endpoint_max: int) -> list[CointervalGraph]:
    """Distinct (labeled) cointerval graphs on exactly ``n`` vertices from
    intervals with endpoints in ``0..endpoint_max``, in first-seen order."""
    ivs = [(a, b) for a in range(endpoint_max + 1) for b in range(a, endpoint_max + 1)]
    seen: dict[frozenset, CointervalGraph] = {}
    for combo in combinations_with_replacement(ivs, n):
        # combinations_with_replacement of sorted ivs is already normalized
        edges = frozenset((i + 1, j + 1) for i in range(n) for j in range(i + 1, n)
                          if combo[i][1] < combo[j][0])
        if edges not in seen:
            seen[edges] = build_cointerval(combo)
    return sorted(seen.values(), key=lambda G: (len(G.edges), G.sorted_edges()))


def graph_family(n_max: int, endpoint_max: int) -> list[CointervalGraph]:
    out = []
    for n in range(1, n_max + 1):
        out.extend(enumerate_test_graphs(n, endpoint_max))
    return out


SUITES = ("dsq", "exactness", "betti", "homotopy", "dga")


def verify_graph(G: CointervalGraph, suites=SUITES, strand_bound: int = 1,
                 degree_bound: int | None = None) -> VerificationReport:
    rep = VerificationReport()
    for s in suites:
        if s == "dsq":
            rep.add(verify_d_squared(G))
        elif s == "exactness":
            rep.add(verify_exactness(G))
        elif s == "betti":
            rep.add(verify_betti(G))
        elif s == "homotopy":
            rep.add(verify_homotopy(G, strand_bound))
        elif s == "dga":
            rep.add(verify_dga(G, degree_bound))
        else:
            raise ValueError(f"unknown suite {s!r}")
    return rep


def verify_family(graphs, suites=SUITES, strand_bound: int = 1,
                  degree_bound: int | None = None, stop_on_failure: bool = True) -> VerificationReport:
    """Run suites over many graphs; per suite, keep one aggregate result."""
    agg = {s: CheckResult(s, True, notes={"graphs": 0}) for s in suites}
    for G in graphs:
        rep = verify_graph(G, suites, strand_bound, degree_bound)
        for s, r in zip(suites, rep.results):
            a = agg[s]
            a.millis += r.millis
            a.notes["graphs"] += 1
            if not r.passed and a.passed:
                a.passed, a.witness = False, r.witness
        if stop_on_failure and not all(a.passed for a in agg.values()):
            break
    return VerificationReport(list(agg.values()))
