"""
Majorization order and subtree counts
=====================================

Degree sequences of the same length and total order themselves by prefix
sums.  Moving up that order strictly increases the best achievable
subtree count: each one-unit transfer toward the front of the sequence
buys more subtrees.  This script compares sequences, walks a chain
between two comparable ones, and shows a genuinely incomparable pair.
"""

from subtrees import (
    build_greedy_bfs,
    count_subtrees,
    majorization_chain,
    majorizes,
)

# The path sequence sits at the bottom of the order, the star at the top.
path_seq = (2, 2, 2, 1, 1)
star_seq = (4, 1, 1, 1, 1)
print("path vs star:", majorizes(path_seq, star_seq))

# The chain climbs by unit transfers, two entries changed per step.
chain = majorization_chain(path_seq, star_seq)
for pi in chain:
    tree, _ = build_greedy_bfs(pi)
    print(" ", pi, "-> phi* =", count_subtrees(tree))

# Prefix sums can cross, leaving sequences incomparable.  The smallest
# tree-realizable example needs eight vertices.
a = (4, 4, 1, 1, 1, 1, 1, 1)
b = (5, 2, 2, 1, 1, 1, 1, 1)
print("crossing pair:", majorizes(a, b))

# Incomparable sequences still have exact extremal counts; the order just
# does not decide between them ahead of time.
for pi in (a, b):
    tree, _ = build_greedy_bfs(pi)
    print(" ", pi, "-> phi* =", count_subtrees(tree))
