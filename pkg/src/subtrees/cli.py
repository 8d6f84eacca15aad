"""Command-line interface for subtree counting and extremal trees.

Usage:
    subtrees count TREEFILE [--json]
    subtrees build --pi SEQ [--json]
    subtrees verify (--pi SEQ | --all-n N) [--jobs J] [--json]
    subtrees order --a SEQ --b SEQ [--json]
    subtrees class --type {maxdeg,leaves,alpha,beta} --n N --k K [--json]

TREEFILE holds an edge list: the vertex count on the first line, then one
"u v" pair per line.  SEQ is a comma-separated nonincreasing degree
sequence such as 3,2,2,1,1,1.  All counts print exactly; --json swaps the
human-readable output for a stable JSON report with counts as decimal
strings.

Exit codes: 0 success, 2 unreadable input file, 3 invalid values
(unrealizable sequence, malformed argument, infeasible class), 4 verified
claim violated, 5 instance too large for exhaustive verification.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from typing import Sequence

from . import __version__
from .counting import count_subtrees, f_vector
from .errors import (
    EmptySet,
    IndexOutOfRange,
    InfeasibleConstraint,
    InvalidCut,
    InvalidVertex,
    LengthMismatch,
    NotATree,
    NotComparable,
    NotRealizable,
    ParseError,
    SubtreeError,
    SumMismatch,
    TooLarge,
)
from .extremal import build_greedy_bfs
from .formulas import (
    independence_extremal,
    leaves_extremal,
    matching_extremal,
    max_degree_extremal,
)
from .majorization import majorization_chain, majorizes
from .oracle import extremal_by_enumeration, realizable_sequences
from .trees import canonical_code, parse_degree_sequence, parse_edge_list

__all__ = ["build_parser", "main"]

_SWEEP_LIMIT = 10

_INVALID_VALUE_ERRORS = (
    NotATree,
    NotRealizable,
    InvalidVertex,
    EmptySet,
    InvalidCut,
    IndexOutOfRange,
    LengthMismatch,
    SumMismatch,
    NotComparable,
    InfeasibleConstraint,
)


def _sequence_argument(text: str) -> tuple[int, ...]:
    """Parse a --pi style argument, mapping syntax errors to exit code 3."""
    try:
        return parse_degree_sequence(text)
    except ParseError as exc:
        raise NotRealizable(str(exc)) from exc


def _fmt_seq(seq: Sequence[int]) -> str:
    return ",".join(str(d) for d in seq)


def _report(command: str, inputs: dict, outputs: dict) -> dict:
    return {
        "command": command,
        "inputs": inputs,
        "outputs": outputs,
        "timing": None,
        "version": __version__,
    }


def _emit(args: argparse.Namespace, report: dict, human: list[str]) -> None:
    if args.json:
        print(json.dumps(report, sort_keys=True))
    else:
        for line in human:
            print(line)


def cmd_count(args: argparse.Namespace) -> int:
    """Count subtrees of the tree in a file: phi, per-vertex f, argmax."""
    try:
        with open(args.treefile, encoding="ascii") as fh:
            text = fh.read()
    except (OSError, UnicodeDecodeError) as exc:
        raise ParseError(f"cannot read {args.treefile}: {exc}") from exc
    tree = parse_edge_list(text)
    phi = count_subtrees(tree)
    fv = f_vector(tree)
    report = _report(
        "count",
        {"treefile": args.treefile, "n": tree.n},
        {
            "phi": str(phi),
            "f": [str(x) for x in fv.values],
            "argmax": list(fv.argmax),
        },
    )
    human = [
        f"n: {tree.n}",
        f"phi: {phi}",
        "f: " + " ".join(str(x) for x in fv.values),
        "argmax: " + " ".join(str(v) for v in fv.argmax),
    ]
    _emit(args, report, human)
    return 0


def cmd_build(args: argparse.Namespace) -> int:
    """Build the greedy BFS tree of a degree sequence and print it."""
    pi = _sequence_argument(args.pi)
    tree, labeling = build_greedy_bfs(pi)
    phi = count_subtrees(tree)
    report = _report(
        "build",
        {"pi": list(pi)},
        {
            "edges": [list(e) for e in tree.edges],
            "layer_sizes": list(labeling.layer_sizes),
            "phi": str(phi),
        },
    )
    human = [str(tree.n)]
    human.extend(f"{u} {v}" for u, v in tree.edges)
    human.append("layer_sizes: " + _fmt_seq(labeling.layer_sizes))
    human.append(f"phi: {phi}")
    _emit(args, report, human)
    return 0


def _verify_sequence(pi: tuple[int, ...]) -> dict:
    """Exhaustively check one degree sequence: the greedy tree must be the
    unique subtree-count maximizer among all realizations."""
    summary = extremal_by_enumeration(pi)
    greedy, _ = build_greedy_bfs(pi)
    greedy_code = canonical_code(greedy)
    max_codes = [code for code, _, _ in summary.maximizers]
    return {
        "pi": list(pi),
        "iso_classes": len(summary.iso_classes),
        "labeled_count": str(summary.labeled_count),
        "max_phi": str(summary.max_phi),
        "maximizer_count": len(summary.maximizers),
        "greedy_is_unique_max": max_codes == [greedy_code],
    }


def cmd_verify(args: argparse.Namespace) -> int:
    """Verify extremality claims by exhaustive enumeration."""
    if args.pi is not None:
        pi = _sequence_argument(args.pi)
        result = _verify_sequence(pi)
        ok = result["greedy_is_unique_max"]
        report = _report("verify", {"pi": list(pi)}, {**result, "pass": ok})
        human = [
            f"pi: {_fmt_seq(pi)}",
            f"iso_classes: {result['iso_classes']}",
            f"labeled_count: {result['labeled_count']}",
            f"max_phi: {result['max_phi']}",
            f"maximizer_count: {result['maximizer_count']}",
            "PASS" if ok else "FAIL: greedy tree is not the unique maximizer",
        ]
        _emit(args, report, human)
        return 0 if ok else 4

    n = args.all_n
    if n < 1:
        raise NotRealizable(f"need n >= 1, got {n}")
    if n > _SWEEP_LIMIT:
        raise TooLarge(f"full sweeps capped at n = {_SWEEP_LIMIT}, got {n}")
    sequences = realizable_sequences(n)
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            results = list(pool.map(_verify_sequence, sequences))
    else:
        results = [_verify_sequence(pi) for pi in sequences]
    all_unique = all(r["greedy_is_unique_max"] for r in results)
    # Strict growth along the majorization order (distinct comparable
    # sequences must have distinct extremal counts, ordered the same way).
    monotonic_ok = True
    checked_pairs = 0
    for i in range(len(sequences)):
        for j in range(i + 1, len(sequences)):
            relation = majorizes(sequences[i], sequences[j])
            if relation == "incomparable":
                continue
            checked_pairs += 1
            phi_i = int(results[i]["max_phi"])
            phi_j = int(results[j]["max_phi"])
            if relation == "greater" and phi_i <= phi_j:
                monotonic_ok = False
            if relation == "less" and phi_i >= phi_j:
                monotonic_ok = False
    ok = all_unique and monotonic_ok
    report = _report(
        "verify",
        {"all_n": n, "jobs": args.jobs},
        {
            "sequences": results,
            "comparable_pairs": checked_pairs,
            "monotonic_ok": monotonic_ok,
            "all_unique": all_unique,
            "pass": ok,
        },
    )
    human = []
    for r in results:
        state = "ok" if r["greedy_is_unique_max"] else "VIOLATION"
        human.append(
            f"pi={_fmt_seq(r['pi'])} classes={r['iso_classes']} "
            f"max_phi={r['max_phi']} {state}"
        )
    human.append(f"comparable_pairs: {checked_pairs}")
    human.append(f"monotonic_ok: {str(monotonic_ok).lower()}")
    human.append("PASS" if ok else "FAIL")
    _emit(args, report, human)
    return 0 if ok else 4


def cmd_order(args: argparse.Namespace) -> int:
    """Compare two degree sequences and walk the chain between them."""
    a = _sequence_argument(args.a)
    b = _sequence_argument(args.b)
    relation = majorizes(a, b)
    outputs: dict = {"relation": relation}
    human = [f"relation: {relation}"]
    if relation != "incomparable":
        chain = majorization_chain(a, b)
        phis = []
        for pi in chain:
            tree, _ = build_greedy_bfs(pi)
            phis.append(count_subtrees(tree))
        outputs["chain"] = [list(pi) for pi in chain]
        outputs["phi_star"] = [str(p) for p in phis]
        human.append(f"chain_length: {len(chain)}")
        for pi, phi in zip(chain, phis):
            human.append(f"{_fmt_seq(pi)} phi={phi}")
    _emit(args, _report("order", {"a": list(a), "b": list(b)}, outputs), human)
    return 0


_CLASS_FUNCTIONS = {
    "maxdeg": max_degree_extremal,
    "leaves": leaves_extremal,
    "alpha": independence_extremal,
    "beta": matching_extremal,
}


def cmd_class(args: argparse.Namespace) -> int:
    """Extremal answer for a constrained class of trees."""
    answer = _CLASS_FUNCTIONS[args.type](args.n, args.k)
    printed = answer.printed_formula_value
    report = _report(
        "class",
        {"type": args.type, "n": args.n, "k": args.k},
        {
            "pi": list(answer.extremal_pi),
            "edges": [list(e) for e in answer.extremal_tree.edges],
            "phi": str(answer.phi),
            "printed_formula_value": None if printed is None else str(printed),
            "discrepancy_flag": answer.discrepancy_flag,
            "details": {k: answer.details[k] for k in sorted(answer.details)},
        },
    )
    human = [
        f"type: {args.type}",
        f"n: {args.n}",
        f"k: {args.k}",
        f"pi: {_fmt_seq(answer.extremal_pi)}",
    ]
    human.extend(f"{u} {v}" for u, v in answer.extremal_tree.edges)
    human.append(f"phi: {answer.phi}")
    if printed is not None:
        human.append(f"printed_formula: {printed}")
    human.append(f"discrepancy: {str(answer.discrepancy_flag).lower()}")
    _emit(args, report, human)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="subtrees",
        description="Exact subtree counts and extremal trees for degree sequences.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p_count = sub.add_parser("count", help="count subtrees of a tree file")
    p_count.add_argument("treefile", help="edge-list file: n, then n-1 lines 'u v'")
    p_count.add_argument("--json", action="store_true")
    p_count.set_defaults(func=cmd_count)

    p_build = sub.add_parser("build", help="build the greedy BFS tree of a sequence")
    p_build.add_argument("--pi", required=True, help="degree sequence, e.g. 3,2,2,1,1,1")
    p_build.add_argument("--json", action="store_true")
    p_build.set_defaults(func=cmd_build)

    p_verify = sub.add_parser("verify", help="exhaustively verify extremality")
    group = p_verify.add_mutually_exclusive_group(required=True)
    group.add_argument("--pi", help="verify one degree sequence")
    group.add_argument("--all-n", type=int, help="verify every sequence of length n")
    p_verify.add_argument("--jobs", type=int, default=1, help="worker processes")
    p_verify.add_argument("--json", action="store_true")
    p_verify.set_defaults(func=cmd_verify)

    p_order = sub.add_parser("order", help="compare sequences in the majorization order")
    p_order.add_argument("--a", required=True, help="first degree sequence")
    p_order.add_argument("--b", required=True, help="second degree sequence")
    p_order.add_argument("--json", action="store_true")
    p_order.set_defaults(func=cmd_order)

    p_class = sub.add_parser("class", help="extremal tree for a constrained class")
    p_class.add_argument(
        "--type", required=True, choices=sorted(_CLASS_FUNCTIONS), help="class kind"
    )
    p_class.add_argument("--n", required=True, type=int, help="number of vertices")
    p_class.add_argument("--k", required=True, type=int, help="class parameter")
    p_class.add_argument("--json", action="store_true")
    p_class.set_defaults(func=cmd_class)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except _INVALID_VALUE_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except TooLarge as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 5
    except SubtreeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
