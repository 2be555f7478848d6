"""Minimal resolutions of cointerval edge ideals as DG-algebras.

Typical use::

    from cointerval_dga import build_cointerval, Multiplication, enumerate_basis

    G = build_cointerval([(0, 3), (0, 1), (2, 3), (4, 5)])
    e, f = enumerate_basis(G, 1)[:2]
    print(Multiplication(G).star(e, f))
"""

from .core import UNIT, Cell, Chain, Monomial, NotDivisibleError, Term, cell, chain_add, chain_scale, mono_div, mono_mul
from .graphs import (
    CointervalGraph, IntervalRep, NotCointervalError, build_cointerval, edge_ideal_generators,
    graph_from_edges, neighbourhood, pre_neighbourhood, recognize_cointerval_bruteforce,
)
from .morse import (
    HomotopySets, MatchClass, Vertex, classify_vertex, contracting_homotopy, homotopy_sets,
    prec_compare, prec_minimal_edge, precedes, strand_morse_acyclicity,
)
from .oracles import (
    VerificationReport, enumerate_test_graphs, graph_family, integer_rank, taylor_betti_oracle,
    verify_betti, verify_d_squared, verify_dga, verify_exactness, verify_graph, verify_homotopy,
)
from .product import Multiplication, ProductTable, degree1_product_closed_form, multiplication_table, star, star_chains
from .resolution import (
    BettiTable, InvalidCellError, StrandComplex, augmentation, betti_table, differential,
    enumerate_basis, full_basis, is_minimal, is_valid_cell, make_cell, partial_boundary, strand_complex,
)

__version__ = "0.1.0"
