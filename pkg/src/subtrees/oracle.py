"""Brute-force ground truth: tree enumeration and direct subtree counting.

Everything here is deliberately independent of the fast counting code so
the two can check each other.  Trees with a fixed degree sequence are
enumerated through their Pruefer sequences; subtrees are counted by
explicit enumeration of connected vertex sets.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Iterator, Sequence

from .counting import _count_subtrees_adjacency
from .errors import EmptySet, InvalidVertex, NotRealizable, TooLarge
from .trees import (
    Tree,
    _code_from_adjacency,
    tree_from_edges,
    validate_degree_sequence,
)

__all__ = [
    "TreeClassSummary",
    "tree_from_prufer",
    "prufer_sequences",
    "enumerate_trees",
    "connected_subsets",
    "count_subtrees_bruteforce",
    "labeled_tree_count",
    "extremal_by_enumeration",
    "realizable_sequences",
    "oracle_limit",
]

_LIMIT_VARIABLE = "SUBTREE_ORACLE_LIMIT"
_DEFAULT_LIMIT = 16


def oracle_limit() -> int:
    """The vertex cap for brute-force counting, from SUBTREE_ORACLE_LIMIT."""
    raw = os.environ.get(_LIMIT_VARIABLE)
    if raw is None:
        return _DEFAULT_LIMIT
    try:
        return int(raw)
    except ValueError:
        return _DEFAULT_LIMIT


def _edges_from_prufer(code: Sequence[int], n: int) -> list[tuple[int, int]]:
    """Decode a Pruefer sequence into an edge list, assuming valid input.

    Smallest-leaf scan: ptr sweeps left to right; leaf tracks the current
    smallest degree-1 vertex, dipping below ptr only when a code entry's
    degree drops to 1 at a smaller id.
    """
    degree = [1] * n
    for v in code:
        degree[v] += 1
    edges = []
    ptr = 0
    leaf = -1
    for v in code:
        if leaf < 0:
            while degree[ptr] != 1:
                ptr += 1
            leaf = ptr
        edges.append((leaf, v))
        degree[leaf] -= 1
        degree[v] -= 1
        if degree[v] == 1 and v < ptr:
            leaf = v
        else:
            leaf = -1
            ptr += 1
    last = [v for v in range(n) if degree[v] == 1]
    edges.append((last[0], last[1]))
    return edges


def tree_from_prufer(code: Sequence[int], n: int) -> Tree:
    """Decode a Pruefer sequence of length n-2 into a labeled tree on n >= 2.

    Vertex v appears in the code exactly deg(v) - 1 times.  Raises
    InvalidVertex for out-of-range entries.
    """
    if n < 2:
        raise NotRealizable(f"Pruefer decoding needs n >= 2, got {n}")
    if len(code) != n - 2:
        raise NotRealizable(f"code length {len(code)} != n - 2 = {n - 2}")
    for v in code:
        if not (0 <= v < n):
            raise InvalidVertex(f"code entry {v} outside 0..{n - 1}")
    return tree_from_edges(n, _edges_from_prufer(code, n))


def _next_permutation(seq: list[int]) -> bool:
    """Advance seq to its next lexicographic permutation in place."""
    i = len(seq) - 2
    while i >= 0 and seq[i] >= seq[i + 1]:
        i -= 1
    if i < 0:
        return False
    j = len(seq) - 1
    while seq[j] <= seq[i]:
        j -= 1
    seq[i], seq[j] = seq[j], seq[i]
    seq[i + 1 :] = reversed(seq[i + 1 :])
    return True


def prufer_sequences(
    pi: Sequence[int], first: int | None = None
) -> Iterator[tuple[int, ...]]:
    """All Pruefer sequences with vertex v appearing pi[v] - 1 times.

    Sequences come out in lexicographic order.  With ``first`` set, only
    the sequences starting with that symbol are produced, which partitions
    the full enumeration for parallel work.
    """
    pi = validate_degree_sequence(pi)
    n = len(pi)
    if n < 2:
        raise NotRealizable("Pruefer sequences need n >= 2")
    if n == 2:
        if first is None:
            yield ()
        return
    symbols = []
    for v in range(n):
        symbols.extend([v] * (pi[v] - 1))
    if first is None:
        current = sorted(symbols)
        yield tuple(current)
        while _next_permutation(current):
            yield tuple(current)
        return
    if symbols.count(first) == 0:
        return
    rest = sorted(symbols)
    rest.remove(first)
    current = rest
    yield (first, *current)
    while _next_permutation(current):
        yield (first, *current)


def enumerate_trees(pi: Sequence[int]) -> Iterator[Tree]:
    """One representative per isomorphism class with degree sequence pi.

    Exhausts every Pruefer sequence for the (nonincreasing) sequence in
    lexicographic order and yields the first tree seen of each canonical
    code, so the stream is deterministic.
    """
    pi = validate_degree_sequence(pi)
    n = len(pi)
    if n == 1:
        yield tree_from_edges(1, [])
        return
    seen: set[bytes] = set()
    for code in prufer_sequences(pi):
        # Lean decode straight to adjacency; a full Tree is built only for
        # codes not seen before, which keeps million-decode sweeps cheap.
        edges = _edges_from_prufer(code, n)
        adj: list[list[int]] = [[] for _ in range(n)]
        for u, v in edges:
            adj[u].append(v)
            adj[v].append(u)
        key = _code_from_adjacency(n, adj)
        if key not in seen:
            seen.add(key)
            yield tree_from_edges(n, edges)


def connected_subsets(tree: Tree, anchor: int | None = None) -> Iterator[frozenset[int]]:
    """Every nonempty connected vertex set, each exactly once.

    Sets are grouped by their smallest vertex: for each anchor a, the sets
    whose minimum is a are grown by an include/exclude recursion over the
    neighbors above a.  With ``anchor`` given, only that group is produced.
    """
    n = tree.n
    anchors = range(n) if anchor is None else (anchor,)

    def grow(
        chosen: list[int], frontier: list[int], used: set[int], floor: int
    ) -> Iterator[frozenset[int]]:
        if not frontier:
            yield frozenset(chosen)
            return
        v = frontier[-1]
        rest = frontier[:-1]
        # Excluding v is final: in a tree no other chosen vertex can ever
        # be adjacent to v again without closing a cycle.
        yield from grow(chosen, rest, used, floor)
        chosen.append(v)
        used.add(v)
        extended = rest + [w for w in tree.adjacency[v] if w > floor and w not in used]
        yield from grow(chosen, extended, used, floor)
        used.remove(v)
        chosen.pop()

    for a in anchors:
        start = [w for w in tree.adjacency[a] if w > a]
        yield from grow([a], start, {a}, a)


def count_subtrees_bruteforce(tree: Tree, limit: int | None = None) -> int:
    """Count subtrees by enumerating connected sets one by one.

    Exponential on purpose; refuses trees above the cap (the
    SUBTREE_ORACLE_LIMIT environment variable, default 16) with TooLarge.
    """
    cap = oracle_limit() if limit is None else limit
    if tree.n > cap:
        raise TooLarge(f"brute force capped at {cap} vertices, tree has {tree.n}")
    return sum(1 for _ in connected_subsets(tree))


def labeled_tree_count(pi: Sequence[int]) -> int:
    """The number of labeled trees with degree sequence pi.

    Pruefer's correspondence makes this the multinomial
    (n-2)! / prod (pi[v] - 1)!.
    """
    from math import factorial

    pi = validate_degree_sequence(pi)
    n = len(pi)
    if n == 1:
        return 1
    total = factorial(n - 2)
    for d in pi:
        total //= factorial(d - 1)
    return total


@dataclass(frozen=True)
class TreeClassSummary:
    """Exhaustive statistics for the trees with one degree sequence.

    ``iso_classes`` holds one (canonical code, representative, subtree
    count) triple per isomorphism class, sorted by code; ``maximizers`` is
    the subset of triples attaining ``max_phi``.
    """

    pi: tuple[int, ...]
    labeled_count: int
    iso_classes: tuple[tuple[bytes, Tree, int], ...]
    max_phi: int
    maximizers: tuple[tuple[bytes, Tree, int], ...]


def extremal_by_enumeration(pi: Sequence[int], limit: int = 10) -> TreeClassSummary:
    """Find the maximum subtree count over all trees with degrees pi.

    Fully enumerates the class, so it refuses sequences longer than
    ``limit`` with TooLarge.  Subtree counts for the summary use the
    polynomial-time counter; the brute-force counter exists to check it.
    """
    pi = validate_degree_sequence(pi)
    if len(pi) > limit:
        raise TooLarge(f"exhaustive search capped at {limit} vertices, got {len(pi)}")
    classes = sorted(
        (_code_from_adjacency(t.n, t.adjacency), t) for t in enumerate_trees(pi)
    )
    triples = tuple(
        (code, t, _count_subtrees_adjacency(t.n, t.adjacency)) for code, t in classes
    )
    best = max(phi for _, _, phi in triples)
    return TreeClassSummary(
        pi=pi,
        labeled_count=labeled_tree_count(pi),
        iso_classes=triples,
        max_phi=best,
        maximizers=tuple(tr for tr in triples if tr[2] == best),
    )


def realizable_sequences(n: int) -> list[tuple[int, ...]]:
    """All tree degree sequences of length n, descending lexicographic."""
    if n < 1:
        raise EmptySet("need n >= 1")
    if n == 1:
        return [(0,)]
    out: list[tuple[int, ...]] = []

    def build(prefix: list[int], remaining: int, slots: int, cap: int) -> None:
        if slots == 0:
            if remaining == 0:
                out.append(tuple(prefix))
            return
        # Each later entry is at least 1 and at most cap.
        for d in range(min(cap, remaining - (slots - 1)), 0, -1):
            prefix.append(d)
            build(prefix, remaining - d, slots - 1, d)
            prefix.pop()

    build([], 2 * (n - 1), n, n - 1)
    return out
