# The differential, strands and Betti numbers

from cointerval_dga import betti_table, build_cointerval, differential, partial_boundary
from cointerval_dga.formats import parse_cell
from cointerval_dga.oracles import homology_ranks, taylor_betti_oracle
from cointerval_dga.resolution import strand_complex

G = build_cointerval([(0, 3), (0, 1), (2, 3), (4, 5)])

# d deletes one vertex at a time; symbols that are not basis elements are dropped.

for s in ["[1|4]", "[1,2|4]", "[2|3,4]", "[1,2,3|4]"]:
    print(f"d{s} =", differential(G, parse_cell(s)))

# The auxiliary map keeps only the deletions of max t and min s.

print(partial_boundary(G, parse_cell("[1,2,3|4]")))
#  -> -x1*[2,3|4]

# Everything is multigraded.  The strand in multidegree x1*x2*x4 is a small
# complex of integer matrices:

s = strand_complex(G, {1, 2, 4})
print(s.dims(), s.matrices)

# Exactness: only degree 0 can carry homology, and only when the squarefree
# monomial is a normal form.

print(homology_ranks(dict(enumerate(s.dims())), s.matrices))

# Betti numbers read off the basis agree with the Taylor complex.

print(betti_table(G).totals(), taylor_betti_oracle(G) == betti_table(G))
#  -> (1, 4, 4, 1) True
