"""
Counting subtrees exactly
=========================

phi(T) is the number of nonempty connected induced subgraphs of a tree.
This script walks the basic counters on trees small enough to check by
hand, then cross-checks the fast count against brute-force enumeration.
"""

from subtrees import (
    bound_path_star,
    count_containing_all,
    count_subtrees,
    count_subtrees_bruteforce,
    f_vector,
    tree_from_edges,
)

# The path on four vertices: 0 - 1 - 2 - 3.  A path's subtrees are its
# sub-paths, so phi(P_n) = n(n+1)/2.
p4 = tree_from_edges(4, [(0, 1), (1, 2), (2, 3)])
print("phi(P4) =", count_subtrees(p4))

# f_T(v) counts the subtrees through one vertex v.  Interior vertices sit
# inside more subtrees; the maximum lands on one or two adjacent vertices.
fv = f_vector(p4)
print("f over P4 =", fv.values)
print("argmax =", fv.argmax)

# Joint containment: a subtree holding both endpoints of P4 must hold the
# whole path, so exactly one qualifies.
print("subtrees containing {0, 3}:", count_containing_all(p4, (0, 3)))

# The star maximizes phi at a given order: any set of leaves plus the
# center is connected, giving 2^(n-1) + n - 1.
k13 = tree_from_edges(4, [(0, 1), (0, 2), (0, 3)])
print("phi(K_1,3) =", count_subtrees(k13))

# Every tree of order n sits between the path and the star.
lo, hi = bound_path_star(4)
print("order-4 range:", lo, "..", hi)

# The brute-force counter lists connected vertex sets one at a time.  It
# is deliberately independent of the dynamic programming above so the two
# can keep each other honest.
print("brute force agrees on P4:", count_subtrees_bruteforce(p4) == count_subtrees(p4))

# Counts are exact integers at any size; order 64 already needs 19 digits.
big_lo, big_hi = bound_path_star(64)
print("order-64 star count:", big_hi)
