"""Greedy BFS trees, BFS-orderings and subtree-increasing exchange moves.

The greedy breadth-first tree of a degree sequence maximizes the subtree
count within its class.  This module builds that tree, decides whether a
rooted tree admits a BFS-ordering (heights nondecreasing, degrees
nonincreasing, children blocks following their parents' order), and
exposes the two rewiring moves that push any tree toward the optimum.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product
from typing import Iterator, Sequence

from .counting import count_subtrees
from .errors import IndexOutOfRange, InvalidCut, InvalidVertex
from .trees import (
    RootedView,
    Tree,
    path_between,
    root_at,
    tree_from_edges,
    validate_degree_sequence,
)

__all__ = [
    "BfsLabeling",
    "PathDecomposition",
    "build_greedy_bfs",
    "has_bfs_ordering",
    "decompose_path",
    "swap_components",
    "swap_path_edges",
    "local_search_optimize",
]


@dataclass(frozen=True)
class BfsLabeling:
    """A vertex order listing the root first, then each layer in turn.

    Degrees are nonincreasing and heights nondecreasing along ``order``;
    ``layer_sizes`` starts with the root layer of size 1.
    """

    order: tuple[int, ...]
    layer_sizes: tuple[int, ...]


@dataclass(frozen=True)
class PathDecomposition:
    """A path with its hanging components after deleting the path edges.

    The path runs x_m .. x_1 (z) y_1 .. y_m between two chosen vertices,
    with the optional middle vertex z present exactly when the path has
    odd length.  ``x`` and ``y`` list the path vertices innermost first
    (x[0] is x_1).  Each path vertex keeps a hanging component: itself
    plus everything reachable without path edges; the components
    partition the vertex set.
    """

    tree: Tree
    x: tuple[int, ...]
    y: tuple[int, ...]
    z: int | None
    x_components: tuple[frozenset[int], ...]
    y_components: tuple[frozenset[int], ...]
    z_component: frozenset[int] | None

    @property
    def m(self) -> int:
        return len(self.x)

    def x_tail(self, k: int) -> frozenset[int]:
        """Union of the components hanging at x_k, x_{k+1}, .., x_m."""
        return frozenset().union(*self.x_components[k - 1 :])

    def y_tail(self, k: int) -> frozenset[int]:
        """Union of the components hanging at y_k, y_{k+1}, .., y_m."""
        return frozenset().union(*self.y_components[k - 1 :])


def build_greedy_bfs(pi: Sequence[int]) -> tuple[Tree, BfsLabeling]:
    """The breadth-first greedy tree of a degree sequence, with its labeling.

    Degrees are handed out largest first: vertex 0 is the root with the
    top degree, and each later vertex, visited in breadth-first order,
    takes the next unused ids as its children until its degree is filled.
    Vertex ids therefore coincide with the BFS order.
    """
    pi = validate_degree_sequence(pi)
    n = len(pi)
    if n == 1:
        return tree_from_edges(1, []), BfsLabeling(order=(0,), layer_sizes=(1,))
    edges = []
    next_id = 1
    layer = [0]
    sizes = [1]
    while next_id < n:
        nxt = []
        for v in layer:
            want = pi[v] if v == 0 else pi[v] - 1
            for _ in range(want):
                edges.append((v, next_id))
                nxt.append(next_id)
                next_id += 1
        sizes.append(len(nxt))
        layer = nxt
    tree = tree_from_edges(n, edges)
    return tree, BfsLabeling(order=tuple(range(n)), layer_sizes=tuple(sizes))


def _subtree_codes(view: RootedView) -> list[bytes]:
    """Canonical code of each vertex's rooted branch, bottom-up."""
    code: list[bytes] = [b""] * view.tree.n
    for v in reversed(view.order):
        kids = sorted(code[c] for c in view.children[v])
        code[v] = b"(" + b"".join(kids) + b")"
    return code


def _satisfies_bfs_ordering(view: RootedView, order: Sequence[int]) -> bool:
    """Check an explicit ordering against both BFS-ordering conditions.

    Condition one: heights nondecreasing and degrees nonincreasing along
    the order.  Condition two: children follow their parents' order, i.e.
    listing the non-root vertices by position, their parents' positions
    never decrease.
    """
    tree = view.tree
    n = tree.n
    if sorted(order) != list(range(n)) or order[0] != view.root:
        return False
    pos = [0] * n
    for i, v in enumerate(order):
        pos[v] = i
    for i in range(n - 1):
        u, v = order[i], order[i + 1]
        if view.height[u] > view.height[v] or tree.degree(u) < tree.degree(v):
            return False
    by_pos = sorted((v for v in range(n) if v != view.root), key=lambda v: pos[v])
    parent_pos = [pos[view.parent[v]] for v in by_pos]  # type: ignore[index]
    return all(parent_pos[i] <= parent_pos[i + 1] for i in range(len(parent_pos) - 1))


def _group_arrangements(
    group: list[int], codes: list[bytes]
) -> Iterator[tuple[int, ...]]:
    """Distinct orders of equal-degree siblings, up to equal branch codes.

    Siblings with identical rooted codes are interchangeable (swapping
    them is an automorphism of the rooted tree), so only one order per
    code sequence is tried.
    """
    buckets: dict[bytes, list[int]] = {}
    for v in group:
        buckets.setdefault(codes[v], []).append(v)

    def emit(counts: dict[bytes, int], left: int) -> Iterator[tuple[bytes, ...]]:
        if left == 0:
            yield ()
            return
        for code in sorted(k for k, c in counts.items() if c > 0):
            counts[code] -= 1
            for rest in emit(counts, left - 1):
                yield (code, *rest)
            counts[code] += 1

    counts = {k: len(vs) for k, vs in buckets.items()}
    for code_seq in emit(counts, len(group)):
        taken = {k: 0 for k in buckets}
        out = []
        for code in code_seq:
            out.append(buckets[code][taken[code]])
            taken[code] += 1
        yield tuple(out)


def _block_arrangements(
    block: Sequence[int], deg: Sequence[int], codes: list[bytes]
) -> list[tuple[int, ...]]:
    """Orders of one sibling block: degree-nonincreasing, ties branched."""
    groups: list[list[int]] = []
    for v in sorted(block, key=lambda v: (-deg[v], codes[v], v)):
        if groups and deg[groups[-1][0]] == deg[v]:
            groups[-1].append(v)
        else:
            groups.append([v])
    options = [list(_group_arrangements(g, codes)) for g in groups]
    return [tuple(v for part in combo for v in part) for combo in product(*options)]


def has_bfs_ordering(view: RootedView) -> tuple[bool, tuple[int, ...] | None]:
    """Whether the rooted tree admits a BFS-ordering, with a witness.

    Any valid ordering must list the layers in turn, with each layer's
    sibling blocks in their parents' order and degrees nonincreasing
    overall.  The search fixes each block's order degree-descending and
    backtracks only over ties, trying one representative per distinct
    sequence of branch codes; equal-code siblings are interchangeable, so
    the pruning loses nothing.
    """
    tree = view.tree
    n = tree.n
    deg = [tree.degree(v) for v in range(n)]
    if deg[view.root] != max(deg):
        return False, None
    codes = _subtree_codes(view)

    def extend(layer_order: tuple[int, ...], acc: tuple[int, ...]) -> tuple[int, ...] | None:
        blocks = [view.children[p] for p in layer_order if view.children[p]]
        if not blocks:
            return acc
        flat_degrees = []
        for b in blocks:
            flat_degrees.extend(sorted((deg[c] for c in b), reverse=True))
        if flat_degrees[0] > deg[layer_order[-1]]:
            return None
        if any(flat_degrees[i] < flat_degrees[i + 1] for i in range(len(flat_degrees) - 1)):
            return None
        per_block = [_block_arrangements(b, deg, codes) for b in blocks]
        for combo in product(*per_block):
            layer = tuple(v for part in combo for v in part)
            result = extend(layer, acc + layer)
            if result is not None:
                return result
        return None

    witness = extend((view.root,), (view.root,))
    if witness is None:
        return False, None
    return True, witness


def decompose_path(tree: Tree, u: int, v: int) -> PathDecomposition:
    """Split the tree along the u-v path into its hanging components.

    The path is written x_m .. x_1 (z) y_1 .. y_m with u = x_m and
    v = y_m; an odd-length path contributes the middle vertex z.  Each
    path vertex's component is found by searching from it with every
    path edge removed.
    """
    path = path_between(tree, u, v)
    length = len(path)
    on_path = set(path)
    forbidden = {(path[i], path[i + 1]) for i in range(length - 1)}
    forbidden |= {(b, a) for a, b in forbidden}

    def component(p: int) -> frozenset[int]:
        seen = {p}
        stack = [p]
        while stack:
            w = stack.pop()
            for nb in tree.adjacency[w]:
                if (w, nb) in forbidden or nb in seen:
                    continue
                seen.add(nb)
                stack.append(nb)
        return frozenset(seen)

    m = length // 2
    if length % 2:
        z = path[m]
        z_comp = component(z)
    else:
        z = None
        z_comp = None
    x_side = tuple(reversed(path[:m]))  # innermost first
    y_side = tuple(path[length - m :])
    return PathDecomposition(
        tree=tree,
        x=x_side,
        y=y_side,
        z=z,
        x_components=tuple(component(p) for p in x_side),
        y_components=tuple(component(p) for p in y_side),
        z_component=z_comp,
    )


def _toward(tree: Tree, a: int, b: int) -> int:
    """The neighbor of a on the path to b (a != b)."""
    return path_between(tree, a, b)[1]


def swap_components(
    tree: Tree,
    x: int,
    y: int,
    x_child_set: Sequence[int],
    y_child_set: Sequence[int],
) -> Tree:
    """Exchange hanging branches between two vertices.

    Each entry of ``x_child_set`` is a neighbor of x whose branch (the
    component of that neighbor once x is removed) detaches and reattaches
    at y, and symmetrically for ``y_child_set``.  The rest of the tree,
    including the whole x-y path, stays put, so the result is again a
    tree.  Branches containing the other endpoint cannot move; selecting
    one raises InvalidCut, as does repeating a neighbor or x = y.
    """
    n = tree.n
    for w in (x, y):
        if not (0 <= w < n):
            raise InvalidVertex(f"vertex {w} outside 0..{n - 1}")
    if x == y:
        raise InvalidCut("attachment vertices must be distinct")
    xc = list(x_child_set)
    yc = list(y_child_set)
    if len(set(xc)) != len(xc) or len(set(yc)) != len(yc):
        raise InvalidCut("repeated neighbor in a detachment set")
    toward_y = _toward(tree, x, y)
    toward_x = _toward(tree, y, x)
    for c in xc:
        if c not in tree.adjacency[x]:
            raise InvalidCut(f"{c} is not a neighbor of {x}")
        if c == toward_y:
            raise InvalidCut(f"the branch at {c} contains {y}; detaching it disconnects the middle")
    for d in yc:
        if d not in tree.adjacency[y]:
            raise InvalidCut(f"{d} is not a neighbor of {y}")
        if d == toward_x:
            raise InvalidCut(f"the branch at {d} contains {x}; detaching it disconnects the middle")
    drop = {(min(x, c), max(x, c)) for c in xc} | {(min(y, d), max(y, d)) for d in yc}
    edges = [e for e in tree.edges if e not in drop]
    edges.extend((y, c) for c in xc)
    edges.extend((x, d) for d in yc)
    return tree_from_edges(n, edges)


def swap_path_edges(tree: Tree, decomposition: PathDecomposition, k: int) -> Tree:
    """Rewire the decomposed path at depth k, preserving all degrees.

    Deletes the edges x_k x_{k+1} and y_k y_{k+1} and adds x_{k+1} y_k
    and y_{k+1} x_k, which reverses the inner part of the path.  Requires
    1 <= k <= m-1; anything else raises IndexOutOfRange.
    """
    if decomposition.tree != tree:
        raise InvalidCut("decomposition was built from a different tree")
    m = decomposition.m
    if not 1 <= k <= m - 1:
        raise IndexOutOfRange(f"k must satisfy 1 <= k <= m-1 = {m - 1}, got {k}")
    xs, ys = decomposition.x, decomposition.y
    xk, xk1 = xs[k - 1], xs[k]
    yk, yk1 = ys[k - 1], ys[k]
    drop = {(min(xk, xk1), max(xk, xk1)), (min(yk, yk1), max(yk, yk1))}
    edges = [e for e in tree.edges if e not in drop]
    edges.append((xk1, yk))
    edges.append((yk1, xk))
    return tree_from_edges(tree.n, edges)


def _candidate_moves(tree: Tree) -> Iterator[Tree]:
    """Degree-preserving rewritings of the tree, in a fixed scan order.

    Three families: path rewirings between every leaf pair (endpoint
    pairs lexicographic, k ascending), one-for-one branch exchanges
    between every vertex pair, and single-branch relocations from a
    vertex of degree d+1 to one of degree d (which leave the degree
    multiset unchanged).
    """
    n = tree.n
    leaves = [v for v in range(n) if tree.degree(v) == 1]
    for u, v in combinations(leaves, 2):
        dec = decompose_path(tree, u, v)
        for k in range(1, dec.m):
            yield swap_path_edges(tree, dec, k)
    for x, y in combinations(range(n), 2):
        path = path_between(tree, x, y)
        toward_y, toward_x = path[1], path[-2]
        for c in tree.adjacency[x]:
            if c == toward_y:
                continue
            for d in tree.adjacency[y]:
                if d == toward_x:
                    continue
                yield swap_components(tree, x, y, (c,), (d,))
    for x in range(n):
        for y in range(n):
            if x == y or tree.degree(x) != tree.degree(y) + 1:
                continue
            path = path_between(tree, x, y)
            toward_y = path[1]
            for c in tree.adjacency[x]:
                if c == toward_y:
                    continue
                yield swap_components(tree, x, y, (c,), ())


def local_search_optimize(tree: Tree) -> Tree:
    """Greedily apply subtree-increasing rewirings until none remains.

    Scans the candidate moves in a fixed deterministic order, applies the
    first one that strictly increases the subtree count, and restarts.
    The count strictly grows with every step and is bounded, so this
    terminates; the degree sequence never changes.
    """
    current = tree
    best = count_subtrees(current)
    improved = True
    while improved:
        improved = False
        for candidate in _candidate_moves(current):
            phi = count_subtrees(candidate)
            if phi > best:
                current, best = candidate, phi
                improved = True
                break
    return current
