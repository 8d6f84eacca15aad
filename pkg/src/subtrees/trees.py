"""Tree representation, validation, rooting, paths and isomorphism.

Vertices are dense integers 0..n-1.  Every value is immutable after
construction; operations return new objects and never mutate their inputs,
so values can be shared freely between threads or processes.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import InvalidVertex, NotATree, NotRealizable, ParseError

__all__ = [
    "Tree",
    "RootedView",
    "tree_from_edges",
    "validate_degree_sequence",
    "degree_sequence_of",
    "root_at",
    "path_between",
    "canonical_code",
    "is_isomorphic",
    "relabel",
    "parse_edge_list",
    "parse_degree_sequence",
    "format_edge_list",
]


@dataclass(frozen=True)
class Tree:
    """An undirected labeled tree: n vertices, n-1 edges, connected.

    ``edges`` holds (u, v) pairs with u < v in lexicographic order and
    ``adjacency[v]`` lists the neighbors of v in ascending order.  Build
    instances through :func:`tree_from_edges`, which validates everything.
    """

    n: int
    edges: tuple[tuple[int, int], ...]
    adjacency: tuple[tuple[int, ...], ...]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])


@dataclass(frozen=True)
class RootedView:
    """A tree with a chosen root: parents, ordered children and heights.

    ``order`` lists the vertices in breadth-first visit order starting at
    the root; children appear in ascending vertex-id order.  The height of
    the root is 0 and heights grow by exactly 1 across every edge.
    """

    tree: Tree
    root: int
    parent: tuple[int | None, ...]
    children: tuple[tuple[int, ...], ...]
    height: tuple[int, ...]
    order: tuple[int, ...]


def tree_from_edges(n: int, edges: Iterable[Sequence[int]]) -> Tree:
    """Build a validated Tree from an iterable of undirected edges.

    Raises NotATree when the input has the wrong edge count, a self-loop,
    a duplicate edge, a vertex outside 0..n-1, or is disconnected.
    """
    if n < 1:
        raise NotATree(f"vertex count must be at least 1, got {n}")
    norm = []
    for e in edges:
        u, v = e
        if not (0 <= u < n and 0 <= v < n):
            raise NotATree(f"edge ({u}, {v}) has a vertex outside 0..{n - 1}")
        if u == v:
            raise NotATree(f"self-loop at vertex {u}")
        norm.append((u, v) if u < v else (v, u))
    if len(norm) != n - 1:
        raise NotATree(f"a tree on {n} vertices needs {n - 1} edges, got {len(norm)}")
    if len(set(norm)) != len(norm):
        raise NotATree("duplicate edge")
    adj: list[list[int]] = [[] for _ in range(n)]
    for u, v in norm:
        adj[u].append(v)
        adj[v].append(u)
    seen = bytearray(n)
    seen[0] = 1
    queue = deque([0])
    reached = 1
    while queue:
        w = queue.popleft()
        for x in adj[w]:
            if not seen[x]:
                seen[x] = 1
                reached += 1
                queue.append(x)
    if reached != n:
        raise NotATree("edge set is not connected")
    norm.sort()
    return Tree(n=n, edges=tuple(norm), adjacency=tuple(tuple(sorted(a)) for a in adj))


def validate_degree_sequence(degrees: Iterable[int]) -> tuple[int, ...]:
    """Sort a degree sequence nonincreasing and check tree realizability.

    A sequence of length n >= 2 is realizable exactly when every entry is
    positive and the total is 2(n-1).  The single-vertex tree is admitted
    as the sequence (0,).  Raises NotRealizable otherwise.
    """
    seq = sorted(degrees, reverse=True)
    if not seq:
        raise NotRealizable("empty degree sequence")
    n = len(seq)
    if n == 1:
        if seq[0] != 0:
            raise NotRealizable(f"a single vertex has degree 0, got {seq[0]}")
        return (0,)
    if seq[-1] < 1:
        raise NotRealizable(f"degree {seq[-1]} is not positive")
    total = sum(seq)
    if total != 2 * (n - 1):
        raise NotRealizable(f"degree sum {total} != 2(n-1) = {2 * (n - 1)}")
    return tuple(seq)


def degree_sequence_of(tree: Tree) -> tuple[int, ...]:
    """The nonincreasing degree multiset of the tree."""
    return tuple(sorted((len(a) for a in tree.adjacency), reverse=True))


def root_at(tree: Tree, r: int) -> RootedView:
    """Root the tree at r by breadth-first traversal.

    Children are listed in ascending vertex id.  Raises InvalidVertex when
    r is outside 0..n-1.
    """
    n = tree.n
    if not (0 <= r < n):
        raise InvalidVertex(f"root {r} outside 0..{n - 1}")
    parent: list[int | None] = [None] * n
    children: list[tuple[int, ...]] = [()] * n
    height = [0] * n
    order = []
    queue = deque([r])
    visited = bytearray(n)
    visited[r] = 1
    while queue:
        v = queue.popleft()
        order.append(v)
        kids = []
        for w in tree.adjacency[v]:
            if not visited[w]:
                visited[w] = 1
                parent[w] = v
                height[w] = height[v] + 1
                kids.append(w)
                queue.append(w)
        children[v] = tuple(kids)
    return RootedView(
        tree=tree,
        root=r,
        parent=tuple(parent),
        children=tuple(children),
        height=tuple(height),
        order=tuple(order),
    )


def path_between(tree: Tree, u: int, v: int) -> tuple[int, ...]:
    """The unique u-v path, endpoints included; dist(u,v) = length - 1."""
    n = tree.n
    for w in (u, v):
        if not (0 <= w < n):
            raise InvalidVertex(f"vertex {w} outside 0..{n - 1}")
    if u == v:
        return (u,)
    prev: list[int | None] = [None] * n
    prev[u] = u
    queue = deque([u])
    while queue:
        w = queue.popleft()
        if w == v:
            break
        for x in tree.adjacency[w]:
            if prev[x] is None:
                prev[x] = w
                queue.append(x)
    path = [v]
    while path[-1] != u:
        path.append(prev[path[-1]])  # type: ignore[arg-type]
    path.reverse()
    return tuple(path)


def _centers(n: int, adjacency: Sequence[Sequence[int]]) -> tuple[int, ...]:
    """The one or two middle vertices found by repeatedly peeling leaves."""
    if n <= 2:
        return tuple(range(n))
    deg = [len(a) for a in adjacency]
    layer = [v for v in range(n) if deg[v] == 1]
    remaining = n
    while remaining > 2:
        remaining -= len(layer)
        nxt = []
        for v in layer:
            deg[v] = 0
            for w in adjacency[v]:
                if deg[w] > 1:
                    deg[w] -= 1
                    if deg[w] == 1:
                        nxt.append(w)
        layer = nxt
    return tuple(sorted(layer))


def _rooted_code(n: int, adjacency: Sequence[Sequence[int]], root: int) -> bytes:
    """Canonical byte code of the rooted tree: sorted child codes in parens."""
    parent = [-1] * n
    order = [root]
    parent[root] = root
    for v in order:
        for w in adjacency[v]:
            if parent[w] < 0:
                parent[w] = v
                order.append(w)
    code: list[bytes] = [b""] * n
    for v in reversed(order):
        kids = sorted(code[w] for w in adjacency[v] if parent[w] == v and w != root)
        code[v] = b"(" + b"".join(kids) + b")"
    return code[root]


def _code_from_adjacency(n: int, adjacency: Sequence[Sequence[int]]) -> bytes:
    codes = [_rooted_code(n, adjacency, c) for c in _centers(n, adjacency)]
    return min(codes)


def canonical_code(tree: Tree) -> bytes:
    """A byte string equal for two trees exactly when they are isomorphic.

    The tree is rooted at its center (for two centers, the smaller of the
    two codes wins) and encoded bottom-up with sorted child codes, so the
    result does not depend on the labeling.
    """
    return _code_from_adjacency(tree.n, tree.adjacency)


def is_isomorphic(a: Tree, b: Tree) -> bool:
    """Whether the two trees are isomorphic (equal canonical codes)."""
    return a.n == b.n and canonical_code(a) == canonical_code(b)


def relabel(tree: Tree, perm: Sequence[int]) -> Tree:
    """Apply a vertex permutation: vertex v becomes perm[v]."""
    if sorted(perm) != list(range(tree.n)):
        raise InvalidVertex("perm is not a permutation of 0..n-1")
    return tree_from_edges(tree.n, [(perm[u], perm[v]) for u, v in tree.edges])


def _parse_uint(token: str, what: str) -> int:
    if not token or any(c not in "0123456789" for c in token):
        raise ParseError(f"expected a nonnegative decimal {what}, got {token!r}")
    return int(token)


def parse_edge_list(text: str) -> Tree:
    """Parse the edge-list format: first line n, then n-1 lines "u v".

    Anything after the last edge line other than blank lines is rejected.
    Syntax problems raise ParseError; structural problems raise NotATree.
    """
    lines = text.splitlines()
    if not lines or not lines[0].split():
        raise ParseError("missing vertex count on the first line")
    head = lines[0].split()
    if len(head) != 1:
        raise ParseError(f"first line must hold the vertex count alone, got {lines[0]!r}")
    n = _parse_uint(head[0], "vertex count")
    if n < 1:
        raise ParseError("vertex count must be at least 1")
    if len(lines) < n:
        raise ParseError(f"expected {n - 1} edge lines, found {len(lines) - 1}")
    edges = []
    for i in range(1, n):
        tokens = lines[i].split()
        if len(tokens) != 2:
            raise ParseError(f"edge line {i + 1} must be 'u v', got {lines[i]!r}")
        edges.append((_parse_uint(tokens[0], "vertex"), _parse_uint(tokens[1], "vertex")))
    for extra in lines[n:]:
        if extra.strip():
            raise ParseError(f"trailing garbage after the edge list: {extra!r}")
    return tree_from_edges(n, edges)


def parse_degree_sequence(text: str) -> tuple[int, ...]:
    """Parse comma-separated positive integers on one line and validate.

    Raises ParseError on syntax problems and NotRealizable when the parsed
    sequence is not a tree degree sequence.
    """
    lines = [line for line in text.splitlines() if line.strip()]
    if not lines:
        raise ParseError("empty degree sequence input")
    if len(lines) > 1:
        raise ParseError(f"degree sequence must sit on one line, got {len(lines)}")
    degrees = [_parse_uint(tok.strip(), "degree") for tok in lines[0].split(",")]
    return validate_degree_sequence(degrees)


def format_edge_list(tree: Tree) -> str:
    """Render a tree in the edge-list format accepted by parse_edge_list."""
    out = [str(tree.n)]
    out.extend(f"{u} {v}" for u, v in tree.edges)
    return "\n".join(out) + "\n"
