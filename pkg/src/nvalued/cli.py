"""Command line interface.

Subcommands print a report table (CSV by default, JSON with ``--format json``)
and exit with 0 when every check passes, 1 on a failed check, 2 on bad
arguments and 3 when a size cap is hit.

CSV layout: a header row and data rows, a blank line, then ``check,result,detail``
rows, then ``#`` comment lines with the message and exit status.
"""

from __future__ import annotations

import argparse
import sys
from itertools import product

from .coset import CosetGroup
from .errors import PrecisionRangeError, ResourceError, UsageError
from .multiset import (
    DEFAULT_CAP,
    ZPlusGroup,
    check_associativity,
    check_inverse,
    check_unit,
    growth_sequence,
    new_counts,
)
from .nbonacci import (
    binet_nbonacci,
    closed_form_xi,
    dominant_root,
    nbonacci_exact,
    rnd_formula,
    rnd_precision_range,
    s_counts_zm,
)
from .report import EXIT_OK, EXIT_RESOURCE, EXIT_USAGE, RunReport
from .symbolic import (
    NAMED_MORPHISMS,
    ThetaSequence,
    build_tree,
    check_level_sorted,
    check_q_recurrence,
    export_dot,
    export_json,
    fixed_point_prefix,
    q_count,
    q_count_by_subtrees,
    subtree_level_counts,
)

GROWTH_COLUMNS = ["k", "xi", "S", "xi_closed", "S_closed", "ratio", "match"]


def _fmt_float(x: float) -> str:
    return f"{x:.10f}"


def cmd_growth(args) -> RunReport:
    s, m, K = args.s, args.m, args.k
    if s < 2 or m < 2 or K < 0:
        raise UsageError("need s >= 2, m >= 2, k >= 0")
    report = RunReport(
        "growth", {"s": s, "m": m, "k": K, "cap": args.cap, "jobs": args.jobs},
        columns=list(GROWTH_COLUMNS),
    )
    G = CosetGroup(s, m)
    try:
        xi = growth_sequence(G, G.generator(), K, cap=args.cap, n_jobs=args.jobs)
    except ResourceError as exc:
        xi = exc.partial
        report.status = EXIT_RESOURCE
        report.message = str(exc)
    S = new_counts(xi)

    if m == 2:
        family, exact_xi = "zs", (lambda k: closed_form_xi("zs", k, s=s))
    elif s == 2 and m == 3:
        family, exact_xi = "z3z3", (lambda k: closed_form_xi("z3z3", k))
    else:
        family, exact_xi = None, None
    s_closed = s_counts_zm(m, len(xi) - 1) if s == 2 and m >= 3 else None
    asymptotic = s == 2 and m >= 4
    if asymptotic:
        r = dominant_root(m - 1)
        scale = m * r - 2 * (m - 1)

    mismatches = []
    for k, (x, sk) in enumerate(zip(xi, S)):
        xc = exact_xi(k) if exact_xi else ""
        sc = s_closed[k] if s_closed else ""
        ratio = _fmt_float(x * scale / r ** (k + 1)) if asymptotic else ""
        ok = (xc == "" or xc == x) and (sc == "" or sc == sk)
        has_exact = xc != "" or sc != ""
        if has_exact and not ok:
            mismatches.append(k)
        report.rows.append([k, x, sk, xc, sc, ratio, ("yes" if ok else "no") if has_exact else ""])

    if family or s_closed:
        label = family or "zm_new_counts"
        report.add_check(
            f"closed_form[{label}]", not mismatches,
            f"mismatch at k={mismatches}" if mismatches else f"{len(xi)} rows",
        )
    else:
        report.message = report.message or "no closed form for this (s, m)"
    return report


def _axiom_report(report: RunReport, G, elements):
    first_bad = None
    count = 0
    for x, y, z in product(elements, repeat=3):
        count += 1
        if not check_associativity(G, x, y, z):
            first_bad = (x, y, z)
            break
    report.add_check(
        "associativity", first_bad is None,
        f"counterexample {first_bad!r}" if first_bad else f"{count} triples",
    )
    for name, check in (("unit", check_unit), ("inverse", check_inverse)):
        bad = next((x for x in elements if not check(G, x)), None)
        report.add_check(
            name, bad is None,
            f"counterexample {bad!r}" if bad is not None else f"{len(elements)} elements",
        )


def cmd_axioms(args) -> RunReport:
    if args.max < 0:
        raise UsageError("--max must be nonnegative")
    if args.group == "zplus":
        report = RunReport("axioms", {"group": "zplus", "max": args.max})
        _axiom_report(report, ZPlusGroup(), list(range(args.max + 1)))
    else:
        report = RunReport("axioms", {"group": "coset", "s": args.s, "m": args.m, "max": args.max})
        G = CosetGroup(args.s, args.m)
        _axiom_report(report, G, G.classes_up_to(args.max))
    return report


def cmd_nbonacci(args) -> RunReport:
    n, k, method = args.n, args.k, args.method
    if n < 2 or k < 0:
        raise UsageError("need n >= 2 and k >= 0")
    report = RunReport("nbonacci", {"n": n, "k": k, "method": method}, columns=["method", "value"])
    exact = nbonacci_exact(n, k)
    methods = ["exact", "binet", "rnd"] if method == "all" else [method]
    for name in methods:
        if name == "exact":
            report.rows.append(["exact", exact])
        elif name == "binet":
            value = binet_nbonacci(n, k)
            report.rows.append(["binet", repr(value)])
            report.add_check("binet_agrees", abs(value - exact) <= max(1e-5, 1e-12 * exact),
                             f"|binet - exact| = {abs(value - exact):.3e}")
        else:
            try:
                value = rnd_formula(n, k)
            except PrecisionRangeError as exc:
                report.rows.append(["rnd", ""])
                report.status = EXIT_USAGE
                report.message = str(exc)
                continue
            report.rows.append(["rnd", value])
            report.add_check("rnd_agrees", value == exact,
                             f"precision range k <= {rnd_precision_range(n)}")
    return report


def cmd_tree(args) -> RunReport:
    depth = args.depth
    if depth < 0:
        raise UsageError("--depth must be nonnegative")
    names = [h for h in args.highlight.split(",") if h] if args.highlight else []
    for name in names:
        if name not in NAMED_MORPHISMS:
            raise UsageError(f"unknown highlight {name!r}; choose from {sorted(NAMED_MORPHISMS)}")
    report = RunReport(
        "tree", {"depth": depth, "highlight": names, "out": args.out},
        columns=["level", "size", "fibonacci", "sorted"],
    )
    tree = build_tree(depth)
    fib = [nbonacci_exact(2, k + 1) for k in range(depth + 1)]
    sizes_ok = sorted_ok = True
    for k, size in enumerate(tree.level_sizes()):
        srt = check_level_sorted(tree, k)
        sizes_ok &= size == fib[k]
        sorted_ok &= srt
        report.rows.append([k, size, fib[k], "yes" if srt else "no"])
    report.add_check("level_sizes_fibonacci", sizes_ok)
    report.add_check("levels_sorted", sorted_ok)

    horizon = min(depth, 10)
    bad = []
    for level in tree.levels[1 : horizon + 1]:
        for v in level:
            c = subtree_level_counts(v, 6)
            if any(c[d] != c[d - 1] + c[d - 2] for d in range(2, len(c))):
                bad.append(v)
    report.add_check("subtree_counts_fibonacci", not bad,
                     f"first failure {bad[0]!r}" if bad else f"vertices up to level {horizon}")

    highlights = [(name, fixed_point_prefix(NAMED_MORPHISMS[name], "a", depth)) for name in names]
    for name, prefix in highlights:
        report.add_check(f"path[{name}]", all(prefix[:i] in tree for i in range(len(prefix) + 1)),
                         prefix)
    if args.out:
        text = export_json(tree) if args.out.endswith(".json") else export_dot(tree, highlights)
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    return report


def cmd_qk(args) -> RunReport:
    theta = ThetaSequence(args.psi)
    if args.k < 0:
        raise UsageError("--k must be nonnegative")
    report = RunReport("qk", {"psi": args.psi, "k": args.k},
                       columns=["k", "theta", "Q", "Q_subtrees", "recurrence"])
    q = []
    for k in range(args.k + 1):
        value = q_count(args.psi, k)
        q.append(value)
        rec = "" if k < 2 else ("yes" if value == q[k - 1] + q[k - 2] else "no")
        report.rows.append([k, theta.theta(k), value, q_count_by_subtrees(args.psi, k), rec])
    failures = check_q_recurrence(q)
    report.add_check("recurrence", not failures,
                     f"fails at k={failures}" if failures else "Q_k = Q_{k-1} + Q_{k-2} for k >= 2")
    report.add_check("subtree_sum_agrees", all(r[2] == r[3] for r in report.rows))
    return report


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nvalued",
        description="Growth of n-valued coset groups and cubeless-word combinatorics.",
        epilog="Exit codes: 0 pass, 1 check failed, 2 usage error, 3 size cap reached.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def fmt(p):
        p.add_argument("--format", choices=["csv", "json"], default="csv")

    p = sub.add_parser(
        "growth", help="enumerate xi_k for the coset group of (Z/m)^{*s}",
        description="CSV columns: " + ",".join(GROWTH_COLUMNS) + ". xi_closed and "
        "S_closed are exact closed forms where known; ratio is "
        "xi_k (m r - 2(m-1)) / r^(k+1) for s=2, m>=4.",
    )
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--cap", type=int, default=DEFAULT_CAP, help="maximum distinct points")
    p.add_argument("--jobs", type=int, default=1, help="worker processes for frontier expansion")
    fmt(p)
    p.set_defaults(func=cmd_growth)

    p = sub.add_parser("axioms", help="exhaustively check associativity, unit and inverse",
                       description="CSV: check,result,detail rows.")
    p.add_argument("--group", choices=["zplus", "coset"], required=True)
    p.add_argument("--s", type=int, default=2)
    p.add_argument("--m", type=int, default=2)
    p.add_argument("--max", type=int, required=True,
                   help="largest integer (zplus) or word length (coset) checked")
    fmt(p)
    p.set_defaults(func=cmd_axioms)

    p = sub.add_parser("nbonacci", help="evaluate F_k of the n-bonacci sequence",
                       description="CSV columns: method,value.")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--method", choices=["exact", "binet", "rnd", "all"], default="exact")
    fmt(p)
    p.set_defaults(func=cmd_nbonacci)

    p = sub.add_parser("tree", help="build the cubeless-word tree and export it",
                       description="CSV columns: level,size,fibonacci,sorted. --out writes "
                       "DOT, or JSON when the path ends in .json.")
    p.add_argument("--depth", type=int, required=True)
    p.add_argument("--highlight", default="", help="comma list of fibonacci, thue-morse")
    p.add_argument("--out", default=None)
    fmt(p)
    p.set_defaults(func=cmd_tree)

    p = sub.add_parser("qk", help="count cubeless words not below Theta_k",
                       description="CSV columns: k,theta,Q,Q_subtrees,recurrence.")
    p.add_argument("--psi", required=True)
    p.add_argument("--k", type=int, required=True)
    fmt(p)
    p.set_defaults(func=cmd_qk)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        report = args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    sys.stdout.write(report.render(args.format))
    return report.status


if __name__ == "__main__":
    sys.exit(main())
