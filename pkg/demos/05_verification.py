# Checking the whole construction over a family of small graphs

import time

from cointerval_dga import graph_family, verify_graph
from cointerval_dga.oracles import verify_family

family = graph_family(4, 6)
print(len(family), "graphs with at most 4 vertices")

t = time.time()
report = verify_family(family)
print(report)
print(f"{time.time() - t:.1f}s")

# A deliberately broken sign is caught, with a witness.

import cointerval_dga.resolution as resolution
from cointerval_dga import build_cointerval

G = build_cointerval([(0, 3), (0, 1), (2, 3), (4, 5)])
resolution._ALPHA1_OFFSET = 1
print(verify_graph(G, suites=("homotopy", "dga")))
resolution._ALPHA1_OFFSET = 0
