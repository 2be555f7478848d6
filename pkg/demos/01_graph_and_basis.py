# Cointerval graphs and the basis of their resolution

# A cointerval graph has one vertex per interval and an edge whenever two
# intervals are disjoint.  Here are four intervals on the line.

from cointerval_dga import build_cointerval, enumerate_basis
from cointerval_dga.formats import render_basis_table

G = build_cointerval([(0, 3), (0, 1), (2, 3), (4, 5)])
print(G)
#  -> CointervalGraph(n=4, edges={14,23,24,34})

# Vertices are numbered by left endpoint, which makes the pre-neighbourhoods
# grow: pnbhd(i) <= pnbhd(j) whenever i < j.

for i in range(1, G.n + 1):
    print(i, sorted(G.pre_neighbourhood(i)))

# Basis elements [s|t] of degree |s| + |t| - 1 need max s < min t and every
# vertex of s adjacent to min t.

print(render_basis_table(G))

# Touching intervals overlap, so they give no edge.

print(build_cointerval([(0, 2), (2, 3)]).edges)
#  -> frozenset()

# The same graph can be given as an edge list; a labeling that breaks the
# pre-neighbourhood order is corrected and the relabeling kept in .order

from cointerval_dga import graph_from_edges

H = graph_from_edges([(1, 2), (2, 3)], 3)
print(H, H.order)
print([str(e) for e in enumerate_basis(H, 1)])
