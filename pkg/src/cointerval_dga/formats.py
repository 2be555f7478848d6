"""Text and JSON forms: input files, cells, vertices, chains and tables."""

from __future__ import annotations

import re

from .core import UNIT, Cell, Chain, Monomial
from .graphs import CointervalGraph, IntervalRep, build_cointerval, graph_from_edges
from .morse import Vertex
from .resolution import BettiTable, check_basis_element, differential, full_basis


class InputError(ValueError):
    """Malformed user input; ``line`` is 1-based when known."""

    def __init__(self, message: str, line: int | None = None):
        super().__init__(f"line {line}: {message}" if line is not None else message)
        self.line = line


def _content_lines(text: str):
    for no, raw in enumerate(text.splitlines(), start=1):
        s = raw.strip()
        if s and not s.startswith("#"):
            yield no, s


def parse_intervals(text: str) -> IntervalRep:
    ivs = []
    for no, s in _content_lines(text):
        parts = s.split()
        if len(parts) != 2:
            raise InputError(f"expected '<a> <b>', got {s!r}", no)
        try:
            a, b = int(parts[0]), int(parts[1])
        except ValueError:
            raise InputError(f"non-integer endpoint in {s!r}", no) from None
        if a > b:
            raise InputError(f"interval [{a}, {b}] has a > b", no)
        ivs.append((a, b))
    if not ivs:
        raise InputError("no intervals given")
    return IntervalRep(tuple(ivs))


def parse_graph(text: str) -> tuple[int, list[tuple[int, int]]]:
    lines = list(_content_lines(text))
    if not lines:
        raise InputError("empty graph file")
    no, first = lines[0]
    try:
        n = int(first)
    except ValueError:
        raise InputError(f"expected vertex count, got {first!r}", no) from None
    if n < 1:
        raise InputError("vertex count must be positive", no)
    edges = []
    for no, s in lines[1:]:
        parts = s.split()
        try:
            i, j = (int(p) for p in parts)
        except ValueError:
            raise InputError(f"expected 'i j', got {s!r}", no) from None
        if not (1 <= i <= n and 1 <= j <= n) or i == j:
            raise InputError(f"bad edge {i} {j} for n={n}", no)
        edges.append((i, j))
    return n, edges


def load_graph(path: str, as_graph: bool = False) -> CointervalGraph:
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    if as_graph:
        n, edges = parse_graph(text)
        try:
            return graph_from_edges(edges, n)
        except ValueError as exc:
            raise InputError(str(exc)) from None
    return build_cointerval(parse_intervals(text))


def format_intervals(rep: IntervalRep) -> str:
    return "".join(f"{a} {b}\n" for a, b in rep.intervals)


_CELL_RE = re.compile(r"^\[([^|\]]*)\|([^|\]]*)\]$")
_VAR_RE = re.compile(r"^x(\d+)(?:\^(\d+))?$")


def _vertex_list(s: str) -> tuple[int, ...]:
    toks = [t for t in re.split(r"[,\s]+", s.strip()) if t]
    try:
        return tuple(sorted(int(t) for t in toks))
    except ValueError:
        raise InputError(f"bad vertex list {s!r}") from None


def parse_cell(s: str) -> Cell:
    s = s.strip()
    if s == "1":
        return UNIT
    m = _CELL_RE.match(s)
    if not m:
        raise InputError(f"bad cell {s!r}; expected e.g. [1,2|4]")
    sigma, tau = _vertex_list(m.group(1)), _vertex_list(m.group(2))
    if len(set(sigma)) != len(sigma) or len(set(tau)) != len(tau):
        raise InputError(f"repeated vertex in {s!r}")
    return Cell(sigma, tau)


def parse_monomial(s: str, n: int) -> Monomial:
    s = s.strip()
    exps = [0] * n
    if s == "1":
        return Monomial(exps)
    for factor in s.split("*"):
        m = _VAR_RE.match(factor.strip())
        if not m:
            raise InputError(f"bad monomial factor {factor!r}")
        i, e = int(m.group(1)), int(m.group(2) or 1)
        if not 1 <= i <= n:
            raise InputError(f"variable x{i} out of range 1..{n}")
        exps[i - 1] += e
    return Monomial(exps)


def parse_vertex(s: str, n: int) -> Vertex:
    s = s.strip()
    k = s.find("[")
    if k < 0:
        return Vertex(parse_monomial(s, n), UNIT)
    head, tail = s[:k].strip(), s[k:]
    if head:
        if not head.endswith("*"):
            raise InputError(f"bad vertex {s!r}")
        mono = parse_monomial(head[:-1], n)
    else:
        mono = Monomial.unit(n)
    return Vertex(mono, parse_cell(tail))


def parse_basis_element(G: CointervalGraph, s: str) -> Cell:
    e = parse_cell(s)
    try:
        check_basis_element(G, e)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    return e


# -- JSON --------------------------------------------------------------------

def chain_to_json(x: Chain) -> list[dict]:
    return [{"coeff": t.coefficient, "monomial": str(t.monomial), "basis": str(t.basis)} for t in x]


def chain_from_json(data: list[dict], n: int, degree: int) -> Chain:
    terms = {}
    for row in data:
        key = (parse_monomial(row["monomial"], n), parse_cell(row["basis"]))
        terms[key] = terms.get(key, 0) + int(row["coeff"])
    return Chain(degree, terms)


def betti_to_json(b: BettiTable) -> list[dict]:
    return b.to_json()


def resolution_to_json(G: CointervalGraph) -> dict:
    basis = full_basis(G)
    out = {
        "n": G.n,
        "edges": [list(e) for e in G.sorted_edges()],
        "basis": [{"degree": d, "elements": [str(e) for e in cells]} for d, cells in sorted(basis.items())],
        "differentials": [
            {"element": str(e), "chain": chain_to_json(differential(G, e))}
            for d, cells in sorted(basis.items()) if d >= 1 for e in cells
        ],
    }
    if G.source is not None:
        out["intervals"] = [list(iv) for iv in G.source.intervals]
    return out


def resolution_from_json(data: dict):
    """Inverse of :func:`resolution_to_json`: ``(G, basis, differentials)``."""
    n = data["n"]
    if "intervals" in data:
        G = build_cointerval([tuple(iv) for iv in data["intervals"]])
    else:
        G = CointervalGraph(n, frozenset(tuple(e) for e in data["edges"]))
    basis = {row["degree"]: [parse_cell(s) for s in row["elements"]] for row in data["basis"]}
    diffs = {}
    for row in data["differentials"]:
        e = parse_cell(row["element"])
        diffs[e] = chain_from_json(row["chain"], n, e.degree - 1)
    return G, basis, diffs


def product_table_to_json(table) -> list[dict]:
    return [{"left": str(a), "right": str(b), "chain": chain_to_json(table.entries[(a, b)])}
            for a, b in table.pairs()]


# -- text tables -------------------------------------------------------------

def format_grid(rows: list[list[str]]) -> str:
    """Pipe-separated table, columns padded, header rule after the first row."""
    widths = [max(len(r[k]) for r in rows) for k in range(len(rows[0]))]
    lines = []
    for k, r in enumerate(rows):
        lines.append(" | ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip())
        if k == 0:
            lines.append("-+-".join("-" * w for w in widths))
    return "\n".join(lines) + "\n"


def render_basis_table(G: CointervalGraph) -> str:
    """Basis cells per degree >= 1 (F_0 is always spanned by the unit)."""
    rows = [["Degree", "Basis elements"]]
    for d, cells in sorted(full_basis(G).items()):
        if d == 0:
            continue
        rows.append([str(d), ", ".join(map(str, cells))])
    return format_grid(rows)


def product_grid(left: list[Cell], right: list[Cell], entry) -> list[list[str]]:
    """Rows for a product table; ``entry(a, b)`` returns text or None (blank)."""
    rows = [["*"] + [str(b) for b in right]]
    for a in left:
        row = [str(a)]
        for b in right:
            s = entry(a, b)
            row.append("" if s is None else s)
        rows.append(row)
    return rows


def render_product_table(G: CointervalGraph, mult, left_degree: int, right_degree: int) -> str:
    """Table of ``[row] * [column]`` in the style of a hand-computed table.

    Entries forced to vanish are left blank: below and on the diagonal of a
    square table (graded commutativity) and whenever the two cells share
    two or more vertices (multidegree reasons).
    """
    basis = full_basis(G)
    left, right = basis.get(left_degree, []), basis.get(right_degree, [])
    rank = {e: k for k, e in enumerate(right)}

    def entry(a, b):
        if left_degree == right_degree and rank[b] <= left.index(a):
            return None
        if len(set(a.support) & set(b.support)) >= 2:
            return None
        return str(mult.star(a, b))

    return format_grid(product_grid(left, right, entry))

