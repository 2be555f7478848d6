# The Morse matching and the contracting homotopy c

from cointerval_dga import build_cointerval, classify_vertex, contracting_homotopy, homotopy_sets
from cointerval_dga.formats import parse_vertex
from cointerval_dga.core import Chain
from cointerval_dga.resolution import augmentation_chain, differential

G = build_cointerval([(0, 3), (0, 1), (2, 3), (4, 5)])

v = parse_vertex("x1*x4*[2|3]", G.n)
print(homotopy_sets(G, v.monomial, v.cell))
print("c(v) =", contracting_homotopy(G, v))
#  -> c(v) = x1*[2|3,4] + x3*[1,2|4]

# c is nonzero exactly on the lower ends of matched pairs.

for s in ["x1*x4*[2|3]", "[2|3,4]", "x1*x2", "x1*x3*x4"]:
    w = parse_vertex(s, G.n)
    print(f"{s:14} {classify_vertex(G, w)!s:36} c = {contracting_homotopy(G, w)}")

# dc + cd is the identity above degree 0 ...

x = Chain.basis_element(G.n, v.cell, v.monomial)
print(differential(G, contracting_homotopy(G, x)) + contracting_homotopy(G, differential(G, x)))

# ... and id minus the augmentation in degree 0.

w = parse_vertex("x1*x3*x4", G.n)
m = Chain.basis_element(G.n, w.cell, w.monomial)
print(differential(G, contracting_homotopy(G, m)), m - augmentation_chain(G, m))
