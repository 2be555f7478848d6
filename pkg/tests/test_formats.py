import json
from pathlib import Path

import pytest
from hypothesis import given, strategies as st

from cointerval_dga import UNIT, Cell, Monomial
from cointerval_dga.formats import (
    InputError, chain_from_json, chain_to_json, format_intervals, load_graph, parse_basis_element,
    parse_cell, parse_graph, parse_intervals, parse_monomial, parse_vertex, render_basis_table,
    render_product_table, resolution_from_json, resolution_to_json,
)
from cointerval_dga.product import Multiplication
from cointerval_dga.resolution import differential, full_basis

GOLDEN = Path(__file__).parent / "golden"


def test_parse_intervals():
    rep = parse_intervals("# example\n0 3\n\n0 1\n2 3\n4 5\n")
    assert rep.intervals == ((0, 3), (0, 1), (2, 3), (4, 5))
    assert parse_intervals(format_intervals(rep)) == rep


@pytest.mark.parametrize("text,line", [
    ("0 3\n0\n", 2),
    ("# c\n0 x\n", 2),
    ("0 1\n\n5 2\n", 3),
])
def test_parse_intervals_errors(text, line):
    with pytest.raises(InputError) as err:
        parse_intervals(text)
    assert err.value.line == line and f"line {line}" in str(err.value)


def test_parse_graph():
    assert parse_graph("4\n1 4\n2 3\n") == (4, [(1, 4), (2, 3)])
    with pytest.raises(InputError) as err:
        parse_graph("3\n1 5\n")
    assert err.value.line == 2
    with pytest.raises(InputError):
        parse_graph("")
    with pytest.raises(InputError):
        parse_graph("3\n1 2 3\n")


def test_load_graph(tmp_path, G):
    p = tmp_path / "g.txt"
    p.write_text("4\n1 4\n2 3\n2 4\n3 4\n")
    assert load_graph(str(p), as_graph=True) == G
    p.write_text("4\n1 3\n2 4\n")
    with pytest.raises(InputError):
        load_graph(str(p), as_graph=True)


def test_parse_cells():
    assert parse_cell("[1,2|4]") == Cell((1, 2), (4,))
    assert parse_cell("[1 2|4]") == Cell((1, 2), (4,))
    assert parse_cell(" [2| 3,4] ") == Cell((2,), (3, 4))
    assert parse_cell("1") == UNIT
    for bad in ("[1,2]", "1,2|4", "[1,1|4]", "[a|4]"):
        with pytest.raises(InputError):
            parse_cell(bad)


def test_parse_monomials_and_vertices():
    assert parse_monomial("x1^2*x3", 3) == Monomial((2, 0, 1))
    assert parse_monomial("1", 2) == Monomial((0, 0))
    with pytest.raises(InputError):
        parse_monomial("x5", 4)
    with pytest.raises(InputError):
        parse_monomial("y1", 4)
    v = parse_vertex("x1*x4*[2|3]", 4)
    assert v.monomial == Monomial((1, 0, 0, 1)) and v.cell == Cell((2,), (3,))
    assert str(v) == "x1*x4*[2|3]"
    assert parse_vertex("x1*x2", 4).cell == UNIT
    assert str(parse_vertex("[2|3,4]", 4)) == "[2|3,4]"
    with pytest.raises(InputError):
        parse_vertex("x1[2|3]", 4)


def test_parse_basis_element(G):
    assert parse_basis_element(G, "[2|3,4]") == Cell((2,), (3, 4))
    with pytest.raises(InputError):
        parse_basis_element(G, "[1|3]")


def test_chain_json_roundtrip(G):
    for cells in full_basis(G).values():
        for e in cells:
            if e.degree:
                d = differential(G, e)
                back = chain_from_json(json.loads(json.dumps(chain_to_json(d))), 4, d.degree)
                assert back == d


def test_resolution_json_roundtrip(G):
    data = json.loads(json.dumps(resolution_to_json(G)))
    H, basis, diffs = resolution_from_json(data)
    assert H == G
    assert basis == full_basis(G)
    assert diffs == {e: differential(G, e) for d, cells in full_basis(G).items() if d for e in cells}


def test_golden_tables(G):
    mult = Multiplication(G)
    assert render_basis_table(G) == (GOLDEN / "example_basis.txt").read_text()
    assert render_product_table(G, mult, 1, 1) == (GOLDEN / "example_products_1x1.txt").read_text()
    assert render_product_table(G, mult, 1, 2) == (GOLDEN / "example_products_1x2.txt").read_text()


@given(st.lists(st.tuples(st.integers(0, 50), st.integers(0, 20)), min_size=1, max_size=8))
def test_intervals_text_roundtrip(raw):
    rep = parse_intervals("".join(f"{a} {a + w}\n" for a, w in raw))
    assert parse_intervals(format_intervals(rep)) == rep
