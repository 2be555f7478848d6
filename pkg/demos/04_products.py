# The product on the resolution

# e1 * e2 is obtained by lifting: c applied to d(e1)*e2 + (-1)^|e1| e1*d(e2).

from cointerval_dga import Multiplication, build_cointerval, degree1_product_closed_form
from cointerval_dga.formats import parse_cell, render_product_table

G = build_cointerval([(0, 3), (0, 1), (2, 3), (4, 5)])
mult = Multiplication(G)

a, b = parse_cell("[1|4]"), parse_cell("[2|3]")
print(mult.star(a, b))
#  -> x1*[2|3,4] + x3*[1,2|4]
print(mult.star(b, a))

# In degree one there is a closed form.

print(degree1_product_closed_form(G, a, b))

# Full tables, blank where the product is forced to vanish.

print(render_product_table(G, mult, 1, 1))
print(render_product_table(G, mult, 1, 2))

# Associativity on one triple

left = mult.star_any(mult.star(parse_cell("[1|4]"), parse_cell("[2|3]")), parse_cell("[3|4]"))
right = mult.star_any(parse_cell("[1|4]"), mult.star(parse_cell("[2|3]"), parse_cell("[3|4]")))
print(left, "==", right)
