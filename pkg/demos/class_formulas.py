"""
Extremal trees for constrained classes
======================================

Fixing a graph parameter (maximum degree, leaf count, independence or
matching number) picks out a class of trees; the subtree maximizer in
each class realizes one specific degree sequence.  Published closed
forms exist for these maxima, and two of them disagree with exact
counting, so every answer carries the published value next to the exact
count plus a discrepancy flag instead of a silent correction.
"""

from subtrees import (
    independence_extremal,
    leaves_extremal,
    matching_extremal,
    max_degree_extremal,
)

# Maximum degree 3 on seven vertices: stack as many 3s as the budget
# allows.
a = max_degree_extremal(7, 3)
print("maxdeg(7,3):", a.extremal_pi, "phi =", a.phi, "details:", a.details)

# Exactly three leaves on seven vertices: the balanced three-leg spider.
b = leaves_extremal(7, 3)
print("leaves(7,3):", b.extremal_pi, "phi =", b.phi)
print("  published form gives", b.printed_formula_value, "- flagged:", b.discrepancy_flag)

# Independence number 3 on five vertices.  This closed form checks out.
c = independence_extremal(5, 3)
print("alpha(5,3): ", c.extremal_pi, "phi =", c.phi, "flagged:", c.discrepancy_flag)

# Matching number 2 on five vertices: same extremal tree as alpha = n - beta,
# but the published form comes out short by exactly 2*beta.
d = matching_extremal(5, 2)
print("beta(5,2):  ", d.extremal_pi, "phi =", d.phi)
print("  published form gives", d.printed_formula_value, "- flagged:", d.discrepancy_flag)
