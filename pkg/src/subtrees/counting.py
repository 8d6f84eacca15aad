"""Exact subtree counting: totals, per-vertex counts, joint containment.

A subtree always means a nonempty connected induced subgraph.  All counts
are exact Python integers, so nothing overflows for any tree size.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import EmptySet, InvalidVertex
from .trees import RootedView, Tree, root_at

__all__ = [
    "FVector",
    "count_rooted",
    "count_subtrees",
    "f_vector",
    "count_containing_all",
]


@dataclass(frozen=True)
class FVector:
    """Per-vertex subtree counts and the vertices attaining the maximum.

    ``values[v]`` is the number of subtrees containing v.  ``argmax`` lists
    the maximizing vertices in ascending order; there are at most two and
    when there are two they are adjacent.
    """

    values: tuple[int, ...]
    argmax: tuple[int, ...]


def count_rooted(view: RootedView) -> tuple[int, ...]:
    """For each vertex v, the number of subtrees rooted at v.

    A subtree rooted at v lives inside v's branch of the rooted view and
    contains v.  Each child's branch can contribute any of its own rooted
    subtrees or stay out, hence the product of (1 + child count).
    """
    g = [1] * view.tree.n
    for v in reversed(view.order):
        acc = 1
        for c in view.children[v]:
            acc *= 1 + g[c]
        g[v] = acc
    return tuple(g)


def count_subtrees(tree: Tree) -> int:
    """The number of subtrees of the tree.

    Rooting at vertex 0 and summing the rooted counts over all vertices
    counts every subtree once, at its unique vertex closest to the root.
    """
    view = root_at(tree, 0)
    return sum(count_rooted(view))


def _count_subtrees_adjacency(n: int, adjacency: Sequence[Sequence[int]]) -> int:
    """count_subtrees for a raw adjacency structure (enumeration hot path)."""
    parent = [-1] * n
    order = [0]
    parent[0] = 0
    for v in order:
        for w in adjacency[v]:
            if parent[w] < 0:
                parent[w] = v
                order.append(w)
    g = [1] * n
    for v in reversed(order):
        acc = 1
        for w in adjacency[v]:
            if parent[w] == v and w != 0:
                acc *= 1 + g[w]
        g[v] = acc
    return sum(g)


def f_vector(tree: Tree) -> FVector:
    """The number of subtrees containing each single vertex.

    Two passes over one rooted view.  The downward pass computes the rooted
    counts g.  The upward pass pushes to each child c of v the count A(c)
    of subtrees that contain c, stay outside c's branch otherwise, and is
    computed from A(v) and the sibling products without division:

        A(root) = 0
        A(c) = (1 + A(v)) * prod over siblings s of c of (1 + g(s))

    Every subtree containing c splits into its part inside c's branch
    (g(c) choices) and its part outside (1 + A(c) choices, the 1 being
    the empty outside), so f(c) = g(c) * (1 + A(c)).
    """
    view = root_at(tree, 0)
    g = count_rooted(view)
    above = [0] * tree.n
    for v in view.order:
        kids = view.children[v]
        if not kids:
            continue
        prefix = [1]
        for c in kids:
            prefix.append(prefix[-1] * (1 + g[c]))
        suffix = 1
        for i in range(len(kids) - 1, -1, -1):
            above[kids[i]] = (1 + above[v]) * prefix[i] * suffix
            suffix *= 1 + g[kids[i]]
    values = tuple(g[v] * (1 + above[v]) for v in range(tree.n))
    best = max(values)
    argmax = tuple(v for v in range(tree.n) if values[v] == best)
    return FVector(values=values, argmax=argmax)


def count_containing_all(tree: Tree, vertices: Sequence[int]) -> int:
    """The number of subtrees containing every vertex in ``vertices``.

    The subtrees in question are exactly the ones containing the minimal
    connected set S spanning ``vertices`` (the union of the paths between
    them).  Rooting at one of the given vertices makes S closed under
    taking parents, and any such subtree is S plus an independent choice,
    for every child branch hanging off S, of one of its rooted subtrees
    or nothing.  Hence the product of (1 + g(c)) over hanging children c.

    Raises EmptySet for an empty selection and InvalidVertex for ids
    outside the tree.
    """
    targets = sorted(set(vertices))
    if not targets:
        raise EmptySet("need at least one vertex")
    for v in targets:
        if not (0 <= v < tree.n):
            raise InvalidVertex(f"vertex {v} outside 0..{tree.n - 1}")
    if len(targets) == 1:
        return f_vector(tree).values[targets[0]]
    view = root_at(tree, targets[0])
    g = count_rooted(view)
    in_steiner = bytearray(tree.n)
    for t in targets:
        w = t
        while not in_steiner[w]:
            in_steiner[w] = 1
            if w == view.root:
                break
            w = view.parent[w]  # type: ignore[assignment]
    total = 1
    for w in range(tree.n):
        if not in_steiner[w]:
            continue
        for c in view.children[w]:
            if not in_steiner[c]:
                total *= 1 + g[c]
    return total
