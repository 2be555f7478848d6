"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 input or usage error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import formats
from .formats import InputError
from .morse import classify_vertex, contracting_homotopy, homotopy_sets
from .oracles import SUITES, graph_family, taylor_betti_oracle, verify_family, verify_graph
from .product import Multiplication
from .resolution import InvalidCellError, betti_table, check_basis_element, differential, full_basis


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(2, f"{self.prog}: error: {message}\n")


def _common() -> argparse.ArgumentParser:
    # SUPPRESS so a subcommand's copy does not reset a value given before it
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--input", default=argparse.SUPPRESS,
                   help="intervals file (or edge list with --graph)")
    p.add_argument("--graph", action="store_true", default=argparse.SUPPRESS,
                   help="treat the input as an edge list")
    p.add_argument("--format", choices=("text", "json"), default=argparse.SUPPRESS)
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = _Parser(prog="cointerval-dga", parents=[common],
                     description="Minimal resolutions of cointerval edge ideals and their DGA structure.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    sub.add_parser("resolve", parents=[common], help="basis and differentials")
    b = sub.add_parser("betti", parents=[common], help="graded Betti numbers")
    b.add_argument("--oracle", action="store_true", help="cross-check with the Taylor complex")
    m = sub.add_parser("multiply", parents=[common], help="product of two basis elements")
    m.add_argument("--left", required=True)
    m.add_argument("--right", required=True)
    h = sub.add_parser("homotopy", parents=[common], help="contracting homotopy of a vertex")
    h.add_argument("--element", required=True)
    t = sub.add_parser("table", parents=[common], help="multiplication table")
    t.add_argument("--max-degree", type=int, default=None)
    v = sub.add_parser("verify", parents=[common], help="run the verification suites")
    v.add_argument("--suite", choices=("all",) + SUITES, default="all")
    v.add_argument("--bound", type=int, default=None, help="total-degree bound for the dga suite")
    v.add_argument("--strand-bound", type=int, default=1,
                   help="largest exponent in the multidegrees checked by the homotopy suite")
    v.add_argument("--family", help="'n,endpoints': every test graph up to n vertices instead of --input")
    return parser


def _need_graph(args):
    if not args.input:
        raise InputError("--input is required")
    try:
        return formats.load_graph(args.input, args.graph)
    except OSError as exc:
        raise InputError(f"cannot read {args.input}: {exc.strerror}") from None


def _emit(args, text: str, data) -> None:
    if args.format == "json":
        print(json.dumps(data, indent=2))
    else:
        sys.stdout.write(text)


def cmd_resolve(args) -> int:
    G = _need_graph(args)
    lines = [f"graph: n={G.n} edges={{{', '.join(f'{i}{j}' if G.n < 10 else f'{i}-{j}' for i, j in G.sorted_edges())}}}\n"]
    if G.order is not None and G.order != tuple(range(1, G.n + 1)):
        pairs = ", ".join(f"{new}<-{old}" for new, old in enumerate(G.order, start=1))
        lines.append(f"relabeled (new<-input): {pairs}\n")
    lines.append(formats.render_basis_table(G))
    lines.append("\n")
    for d, cells in sorted(full_basis(G).items()):
        for e in cells:
            if d:
                lines.append(f"d{e} = {differential(G, e)}\n")
    _emit(args, "".join(lines), formats.resolution_to_json(G))
    return 0


def cmd_betti(args) -> int:
    G = _need_graph(args)
    table = betti_table(G)
    text = "totals: " + ",".join(map(str, table.totals())) + "\n"
    for (d, alpha), r in table.items():
        text += f"  beta_{d},{''.join(map(str, alpha))} = {r}\n"
    data = {"betti": table.to_json(), "totals": list(table.totals())}
    status = 0
    if args.oracle:
        agrees = taylor_betti_oracle(G) == table
        text += "oracle agrees\n" if agrees else "oracle DISAGREES\n"
        data["oracle_agrees"] = agrees
        status = 0 if agrees else 1
    _emit(args, text, data)
    return status


def cmd_multiply(args) -> int:
    G = _need_graph(args)
    a = formats.parse_basis_element(G, args.left)
    b = formats.parse_basis_element(G, args.right)
    prod = Multiplication(G).star(a, b)
    _emit(args, f"{prod}\n", {"left": str(a), "right": str(b), "chain": formats.chain_to_json(prod)})
    return 0


def cmd_homotopy(args) -> int:
    G = _need_graph(args)
    v = formats.parse_vertex(args.element, G.n)
    try:
        check_basis_element(G, v.cell)
    except InvalidCellError as exc:
        raise InputError(str(exc)) from None
    cv = contracting_homotopy(G, v)
    cls = classify_vertex(G, v)
    data = {"vertex": str(v), "c": formats.chain_to_json(cv), "class": cls.to_json()}
    text = f"c({v}) = {cv}\n"
    if not v.cell.is_unit:
        sets = homotopy_sets(G, v.monomial, v.cell)
        fmt = lambda s: "{" + ",".join(map(str, sorted(s))) + "}"  # noqa: E731
        text += f"C1 = {fmt(sets.C1)}  C2 = {fmt(sets.C2)}  C3 = {fmt(sets.C3)}\n"
        data["sets"] = {k: sorted(getattr(sets, k)) for k in ("C1", "C2", "C3")}
    text += f"class: {cls}\n"
    _emit(args, text, data)
    return 0


def cmd_table(args) -> int:
    G = _need_graph(args)
    mult = Multiplication(G)
    top = max(full_basis(G))
    bound = args.max_degree if args.max_degree is not None else top
    table = mult.table(bound)
    chunks = []
    for p in range(1, top + 1):
        for q in range(p, top + 1):
            if p + q <= bound:
                chunks.append(f"degree {p} x degree {q}\n")
                chunks.append(formats.render_product_table(G, mult, p, q))
                chunks.append("\n")
    _emit(args, "".join(chunks), formats.product_table_to_json(table))
    return 0


def cmd_verify(args) -> int:
    suites = SUITES if args.suite == "all" else (args.suite,)
    if args.family:
        try:
            n_max, emax = (int(x) for x in args.family.split(","))
        except ValueError:
            raise InputError("--family expects 'n,endpoints'") from None
        graphs = graph_family(n_max, emax)
        report = verify_family(graphs, suites, args.strand_bound, args.bound)
    else:
        G = _need_graph(args)
        report = verify_graph(G, suites, args.strand_bound, args.bound)
    _emit(args, str(report) + "\n", report.to_json())
    return 0 if report.passed else 1


COMMANDS = {
    "resolve": cmd_resolve,
    "betti": cmd_betti,
    "multiply": cmd_multiply,
    "homotopy": cmd_homotopy,
    "table": cmd_table,
    "verify": cmd_verify,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    for name, default in (("input", None), ("graph", False), ("format", "text")):
        if not hasattr(args, name):
            setattr(args, name, default)
    try:
        return COMMANDS[args.command](args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
