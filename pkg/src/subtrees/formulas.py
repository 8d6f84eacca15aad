"""Closed-form subtree bounds, extremal-class answers and the Wiener index.

Each class operation returns a ClassAnswer bundling the maximizing degree
sequence, its greedy BFS tree, the exact subtree count and, where the
literature states a closed form for that count, the published value with
a discrepancy flag.  Several published expressions disagree with exact
enumeration at small sizes; the answers report the published value
verbatim next to the exact count instead of silently correcting it.
"""

from __future__ import annotations

from dataclasses import dataclass

from .counting import count_subtrees
from .errors import InfeasibleConstraint
from .extremal import build_greedy_bfs
from .majorization import Independence, Leaves, Matching, MaxDegree, class_max_sequence
from .trees import Tree, root_at

__all__ = [
    "ClassAnswer",
    "bound_path_star",
    "max_degree_extremal",
    "leaves_extremal",
    "independence_extremal",
    "matching_extremal",
    "wiener_index",
    "matching_number",
    "independence_number",
]


@dataclass(frozen=True)
class ClassAnswer:
    """The extremal answer for one constrained class of trees.

    ``phi`` is always the exact subtree count of ``extremal_tree``.
    ``printed_formula_value`` holds the published closed form when one
    exists; ``discrepancy_flag`` is set exactly when that value differs
    from the exact count.
    """

    kind: str
    n: int
    param: int
    details: dict[str, int]
    extremal_pi: tuple[int, ...]
    extremal_tree: Tree
    phi: int
    printed_formula_value: int | None
    discrepancy_flag: bool


def _answer(
    kind: str,
    n: int,
    param: int,
    details: dict[str, int],
    pi: tuple[int, ...],
    printed: int | None,
) -> ClassAnswer:
    tree, _ = build_greedy_bfs(pi)
    phi = count_subtrees(tree)
    return ClassAnswer(
        kind=kind,
        n=n,
        param=param,
        details=details,
        extremal_pi=pi,
        extremal_tree=tree,
        phi=phi,
        printed_formula_value=printed,
        discrepancy_flag=printed is not None and printed != phi,
    )


def bound_path_star(n: int) -> tuple[int, int]:
    """The sharp lower and upper bounds on the subtree count at order n.

    The path attains n(n+1)/2 and the star attains 2^(n-1) + n - 1; every
    tree of order n lies in between.
    """
    if n < 1:
        raise InfeasibleConstraint(f"need n >= 1, got {n}")
    return n * (n + 1) // 2, 2 ** (n - 1) + n - 1


def max_degree_extremal(n: int, delta: int) -> ClassAnswer:
    """The subtree maximizer among trees of order n with maximum degree delta.

    For delta >= 3 the winning sequence stacks as many delta-entries as the
    degree budget allows: with N_k the order of the complete tree whose
    internal vertices all have degree delta down to depth k, the depth p
    satisfies N_p < n <= N_{p+1} and n - N_p = (delta-1)r + q with
    0 <= q < delta - 1.  The published construction's residual entry reads
    q, which breaks the degree-sum identity whenever p >= 1 and q >= 1
    (the consistent entry is q + 1); the greedy sequence used here is
    sum-consistent in every case and agrees with the construction wherever
    that is.  delta = 2 degenerates to the path.
    """
    pi = class_max_sequence(MaxDegree(n=n, delta=delta))
    details: dict[str, int] = {}
    if delta >= 3:
        # N_k < n is equivalent to delta*(delta-1)^k < n*(delta-2)+2.
        p = 0
        while delta * (delta - 1) ** (p + 1) < n * (delta - 2) + 2:
            p += 1
        big_n = (delta * (delta - 1) ** p - 2) // (delta - 2)
        r, q = divmod(n - big_n, delta - 1)
        details = {"p": p, "r": r, "q": q}
    return _answer("max_degree", n, delta, details, pi, printed=None)


def leaves_extremal(n: int, s: int) -> ClassAnswer:
    """The subtree maximizer among trees of order n with exactly s leaves.

    The winner is the balanced spider: writing n - 1 = s*q + t, its legs
    are t paths of q + 1 edges and s - t paths of q edges.  Counting from
    first principles, subtrees through the center contribute
    (q+2)^t (q+1)^(s-t) and each leg contributes its own path count,
    giving t(q+1)(q+2)/2 + (s-t)q(q+1)/2 more.  The published closed form
    (q+2)^t + (q+1)^(s-t+2) does not match exact enumeration (already at
    n=7, s=3 it gives 244 against a true count of 36), so the flag is set
    whenever it disagrees.
    """
    pi = class_max_sequence(Leaves(n=n, s=s))
    q, t = divmod(n - 1, s)
    closed = (
        (q + 2) ** t * (q + 1) ** (s - t)
        + t * (q + 1) * (q + 2) // 2
        + (s - t) * q * (q + 1) // 2
    )
    printed = (q + 2) ** t + (q + 1) ** (s - t + 2)
    return _answer(
        "leaves", n, s, {"q": q, "t": t, "closed_form": closed}, pi, printed
    )


def independence_extremal(n: int, alpha: int) -> ClassAnswer:
    """The subtree maximizer among trees of order n with independence number alpha.

    The winner realizes (alpha, 2, ..., 2, 1^alpha): a star on alpha leaves
    with n - alpha - 1 of the leaves subdivided once.  The published closed
    form 2^(2*alpha-n+1) 3^(n-alpha-1) + 2n - alpha - 2 validates against
    exact counting.
    """
    pi = class_max_sequence(Independence(n=n, alpha=alpha))
    printed = 2 ** (2 * alpha - n + 1) * 3 ** (n - alpha - 1) + 2 * n - alpha - 2
    return _answer("independence", n, alpha, {}, pi, printed)


def matching_extremal(n: int, beta: int) -> ClassAnswer:
    """The subtree maximizer among trees of order n with matching number beta.

    The winner realizes (n - beta, 2, ..., 2, 1^(n-beta)).  The published
    closed form 2^(n-2*beta+1) 3^(beta-1) + n - beta - 2 falls short of the
    exact count by 2*beta (already at n=5, beta=2 it gives 13 against 17;
    the matching class coincides with the independence class at
    alpha = n - beta, whose validated form ends in +n + beta - 2), so the
    flag is set whenever it disagrees.
    """
    pi = class_max_sequence(Matching(n=n, beta=beta))
    printed = 2 ** (n - 2 * beta + 1) * 3 ** (beta - 1) + n - beta - 2
    return _answer("matching", n, beta, {}, pi, printed)


def wiener_index(tree: Tree) -> int:
    """The sum of distances over all unordered vertex pairs.

    Every edge is counted once per pair it separates, so the total is the
    sum over edges of a*b where a and b are the two component orders left
    by deleting that edge.
    """
    n = tree.n
    view = root_at(tree, 0)
    size = [1] * n
    for v in reversed(view.order):
        for c in view.children[v]:
            size[v] += size[c]
    return sum(size[v] * (n - size[v]) for v in range(n) if v != view.root)


def matching_number(tree: Tree) -> int:
    """The maximum number of pairwise disjoint edges.

    Greedy from the leaves upward is optimal in a tree: visiting vertices
    children-first, match a vertex to its parent whenever both are free
    (a leaf's only hope is its parent, so matching there never hurts).
    """
    view = root_at(tree, 0)
    matched = bytearray(tree.n)
    count = 0
    for v in reversed(view.order):
        p = view.parent[v]
        if p is not None and not matched[v] and not matched[p]:
            matched[v] = matched[p] = 1
            count += 1
    return count


def independence_number(tree: Tree) -> int:
    """The maximum size of a set of pairwise nonadjacent vertices.

    Trees are bipartite, so the complement of a minimum vertex cover is a
    maximum independent set and the cover size equals the matching number.
    """
    return tree.n - matching_number(tree)
