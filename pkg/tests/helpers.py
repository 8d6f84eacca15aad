"""Shared tree builders and induced-subgraph helpers for the tests."""

from __future__ import annotations

from hypothesis import strategies as st

from subtrees.counting import f_vector
from subtrees.oracle import tree_from_prufer
from subtrees.trees import Tree, tree_from_edges


def path(n: int) -> Tree:
    return tree_from_edges(n, [(i, i + 1) for i in range(n - 1)])


def star(n: int) -> Tree:
    return tree_from_edges(n, [(0, i) for i in range(1, n)])


def spider(*legs: int) -> Tree:
    """Paths of the given edge lengths glued at a common center (vertex 0)."""
    edges = []
    nxt = 1
    for length in legs:
        prev = 0
        for _ in range(length):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    return tree_from_edges(nxt, edges)


def induced_subtree(tree: Tree, vertices) -> tuple[Tree, dict[int, int]]:
    """The subgraph induced by a connected vertex set, relabeled densely."""
    vs = sorted(vertices)
    index = {v: i for i, v in enumerate(vs)}
    edges = [
        (index[u], index[v]) for u, v in tree.edges if u in index and v in index
    ]
    return tree_from_edges(len(vs), edges), index


def f_within(tree: Tree, vertices, v: int) -> int:
    """Subtrees of the induced subgraph that contain v."""
    sub, index = induced_subtree(tree, vertices)
    return f_vector(sub).values[index[v]]


@st.composite
def random_trees(draw, min_n: int = 1, max_n: int = 12) -> Tree:
    """Uniform labeled trees via random Pruefer sequences."""
    n = draw(st.integers(min_n, max_n))
    if n == 1:
        return tree_from_edges(1, [])
    code = draw(st.lists(st.integers(0, n - 1), min_size=n - 2, max_size=n - 2))
    return tree_from_prufer(tuple(code), n)
