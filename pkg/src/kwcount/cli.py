"""Command-line entry point. Every subcommand writes CSV (with a header) to stdout.

Exit codes: 0 success, 1 a checked invariant or bound failed (witness
printed), 2 input error, 3 resource cap exceeded.
"""

from __future__ import annotations

import argparse
import csv
import io
import math
import sys

from kwcount import arith, bounds, c4, kw, oracle, spectral
from kwcount.errors import InputError, KWError, PreconditionError, ResourceError
from kwcount.graph import read_graph
from kwcount.suite import SuiteConfig, builtin_catalog, verify_suite

EXIT_OK, EXIT_VIOLATION, EXIT_INPUT, EXIT_RESOURCE = 0, 1, 2, 3


def fmt(x) -> str:
    if isinstance(x, bool):
        return "true" if x else "false"
    if isinstance(x, float):
        if math.isinf(x):
            return "inf" if x > 0 else "-inf"
        return f"{x:.12g}"
    return str(x)


def int_list(text: str) -> list[int]:
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


class Out:
    """Buffers rows so a command that fails part-way prints nothing to stdout."""

    def __init__(self):
        self.buffer = io.StringIO()
        self.writer = csv.writer(self.buffer, lineterminator="\n")

    def row(self, *values):
        self.writer.writerow([fmt(v) for v in values])

    def line(self, text: str):
        self.buffer.write(text + "\n")


def _bound_row(out: Out, b: bounds.LogBound):
    out.row(b.provenance, b.params_text(), b.log2_value)


# -- handlers --------------------------------------------------------------


def cmd_is_count(args, out):
    table = oracle.count_independent_sets(read_graph(args.graph), cap=args.cap or oracle.IS_CAP)
    out.row("m", "count")
    for r in table.csv_rows():
        out.row(*r)


def cmd_is_alpha(args, out):
    out.row("alpha")
    out.row(oracle.independence_number(read_graph(args.graph), cap=args.cap or oracle.IS_CAP))


def cmd_kw_trace(args, out):
    G = read_graph(args.graph)
    trace = kw.kw_run(G, args.set, args.q)
    out.line("q; j; S; A")
    out.line(trace.to_line())
    if kw.kw_reconstruct(G, args.q, trace.j_seq, trace.leftover) != frozenset(args.set):
        print("reconstruction does not return the input set", file=sys.stderr)
        return EXIT_VIOLATION


def _members(s) -> str:
    return " ".join(map(str, sorted(s)))


def cmd_kw_containers(args, out):
    G = read_graph(args.graph)
    family = kw.enumerate_containers(G, args.q, node_cap=args.cap or 1_000_000)
    out.row("fingerprint", "container", "size")
    for S in sorted(family.entries, key=sorted):
        out.row(_members(S), _members(family.entries[S]), len(family.entries[S]))


def cmd_kw_verify(args, out):
    """Check the counting/container lemma hypotheses at (q, R) and, where they hold, the conclusions."""
    G = read_graph(args.graph)
    n, q, R = G.n, args.q, args.R
    out.row("lemma", "hypothesis", "conclusion", "witness")
    status = EXIT_OK
    if args.beta is not None:
        hyp = kw.verify_density_beta(G, R, args.beta) and R >= math.exp(-args.beta * q) * n
        witness = ""
        if hyp:
            table = oracle.count_independent_sets(G)
            for m in range(q, n + 1):
                if table[m] > math.comb(n, q) * math.comb(math.floor(R), m - q):
                    witness = f"m={m} i={table[m]}"
                    break
        out.row("counting", hyp, (not witness) if hyp else "", witness)
        status = EXIT_VIOLATION if witness else status
    if args.D is not None:
        hyp = kw.verify_density_D(G, R, args.D) and R + q * args.D >= n
        witness = ""
        family = kw.enumerate_containers(G, q, node_cap=args.cap or 1_000_000)
        for mask in oracle.independent_set_masks(G):
            I = frozenset(v for v in range(n) if mask >> v & 1)
            if len(I) >= q:
                g = kw.fingerprint(G, I, q)
                if g not in family.entries or not I <= family.entries[g] | g:
                    witness = f"uncovered I={_members(I)}"
                    break
        if not witness and hyp and family.max_size > R:
            witness = f"container size {family.max_size} > R"
        out.row("containers", hyp, not witness, witness)
        status = EXIT_VIOLATION if witness else status
    if args.beta is None and args.D is None:
        raise InputError("kw verify needs --beta and/or --D")
    return status


def cmd_bounds(args, out):
    name = args.name
    need = lambda *keys: [_require(args, k) for k in keys]  # noqa: E731
    out.row("bound", "params", "log2")
    if name == "binomial":
        a, b = need("a", "b")
        out.row("binomial", f"a={fmt(a)};b={b}", bounds.log2_binomial(a, int(b)))
    elif name == "sandwich":
        alpha, n = need("alpha", "n")
        lo, hi = bounds.sandwich_bounds(alpha, n)
        out.row("sandwich-lower", f"alpha={alpha};n={n}", lo)
        out.row("sandwich-upper", f"alpha={alpha};n={n}", hi)
    elif name == "sapozhenko":
        _bound_row(out, bounds.sapozhenko_bound(*need("n", "d", "C")))
    elif name == "kahn-zhao":
        _bound_row(out, bounds.kahn_zhao_bound(*need("n", "d")))
    elif name == "kw-c4":
        _bound_row(out, bounds.kw_c4_bound(*need("n", "C")))
    elif name == "ap-free":
        _bound_row(out, bounds.theorem8_bound(*need("n", "m", "epsilon")))
    elif name == "roth-failure":
        for b in bounds.theorem7_failure_bound(*need("n", "m", "delta"), epsilon=args.epsilon):
            _bound_row(out, b)
    elif name == "lemma1":
        _bound_row(out, kw.lemma1_count_bound(*need("n", "q", "R", "m")))
    elif name == "eigenvalue":
        _bound_row(out, spectral.eigenvalue_count_bound(*need("n", "d", "lam", "epsilon", "m")))
    elif name == "sum-free":
        _bound_row(out, arith.theorem4_pipeline(*need("n", "C")))
    elif name == "ap-free-recursion":
        _bound_row(out, arith.theorem8_recursion_bound(*need("n", "m", "epsilon", "beta"), K=args.K))
    elif name == "c4-extensions":
        _bound_row(out, c4.gn_bound(*need("n", "d"), q_rule=args.q_rule))
    elif name == "c4-free":
        _bound_row(out, c4.fn_c4_bound_assembly(*need("n"), q_rule=args.q_rule))


def _require(args, key):
    value = getattr(args, key)
    if value is None:
        raise InputError(f"bounds {args.name} needs --{key}")
    return value


def cmd_spectral_check(args, out):
    G = read_graph(args.graph)
    d = G.regular_degree()
    if d is None:
        raise PreconditionError("graph is not regular")
    lam = spectral.smallest_eigenvalue(G)
    alpha = oracle.independence_number(G)
    hoff = spectral.hoffman_bound(G.n, d, lam) if d > 0 else float(G.n)
    ok, worst, where = spectral.alon_chung_exhaustive(G, cap=args.cap or spectral.SUBSET_CAP)
    out.row("lambda_min", "hoffman", "alpha", "worst_alon_chung_slack")
    out.row(lam, hoff, alpha, worst)
    if not ok or alpha > hoff + spectral.SLACK_TOL:
        print(f"violation: slack {worst:.3g} at {{{_members(where)}}}, alpha {alpha} vs {hoff:.6g}", file=sys.stderr)
        return EXIT_VIOLATION


def cmd_sumfree_count(args, out):
    n = _require(args, "n")
    if args.method == "bitmask":
        table = oracle.count_sum_free_exhaustive(n, cap=args.cap or oracle.BITMASK_CAP)
    else:
        table = oracle.count_sum_free(n, cap=args.cap or oracle.SUM_FREE_CAP)
    out.row("m", "count")
    for r in table.csv_rows():
        out.row(*r)


def cmd_sumfree_gs(args, out):
    G = arith.build_gs_graph(_require(args, "n"), args.s)
    out.row("u", "v")
    for u, v in G.edges():
        out.row(G.label(u), G.label(v))


def cmd_c4_count(args, out):
    count, ex = oracle.c4_free_census(_require(args, "n"), cap=args.cap or oracle.C4_CAP)
    out.row("n", "f_n", "ex_n")
    out.row(args.n, count, ex)


def cmd_c4_extensions(args, out):
    G = read_graph(args.graph)
    d = _require(args, "d")
    out.row("d", "extensions")
    out.row(d, c4.count_c4_extensions(G, d))


def cmd_c4_bound(args, out):
    n = _require(args, "n")
    b = c4.fn_c4_bound_assembly(n, q_rule=args.q_rule)
    out.row("bound", "params", "log2", "log2_over_n1.5", "implied_C")
    out.row(b.provenance, b.params_text(), b.log2_value, b.log2_value / n**1.5, c4.implied_claim_constant(n, args.q_rule))


def cmd_roth_experiment(args, out):
    est = arith.roth_random_experiment(*(_require(args, k) for k in ("n", "m", "delta", "trials", "seed")))
    out.row("n", "m", "delta", "trials", "successes", "rate")
    out.row(est.n, est.m, est.delta, est.trials, est.successes, est.rate)


def cmd_roth_check(args, out):
    A = sorted(set(args.set))
    delta = _require(args, "delta")
    out.row("size", "max_ap_free", "delta", "delta_roth")
    out.row(len(A), oracle.max_3ap_free_subset(A, cap=args.cap or oracle.MAX_AP_FREE_CAP), delta, arith.is_delta_roth(A, delta))


def cmd_varnavides(args, out):
    n, delta = _require(args, "n"), _require(args, "delta")
    low, beta = arith.varnavides_profile(n, delta, cap=args.cap or arith.VARNAVIDES_CAP)
    out.row("n", "delta", "min_count", "beta_estimate")
    out.row(n, delta, low, beta)


def cmd_verify_suite(args, out):
    catalog = builtin_catalog() if args.builtin else []
    for path in args.graph or []:
        catalog.append((path, read_graph(path)))
    cfg = SuiteConfig(sapozhenko_C=args.sapozhenko_C, eigen_epsilon=args.epsilon, eigen_C=args.eigen_C)
    rows = verify_suite(catalog, cfg)
    out.row("check", "instances", "failures", "witness")
    for r in rows:
        out.row(r.check, r.instances, r.failures, r.witness)
    if any(r.failures for r in rows):
        return EXIT_VIOLATION


# -- parser ----------------------------------------------------------------


def _common(p, *flags):
    spec = {
        "graph": dict(type=str, help="edge-list file"),
        "n": dict(type=int),
        "m": dict(type=int),
        "d": dict(type=int),
        "q": dict(type=int),
        "delta": dict(type=float),
        "epsilon": dict(type=float),
        "beta": dict(type=float),
        "seed": dict(type=int),
        "trials": dict(type=int),
    }
    for f in flags:
        p.add_argument(f"--{f}", **spec[f])
    p.add_argument("--cap", type=int, help="override the size cap of the underlying search")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="kwcount", description=__doc__.splitlines()[0])
    top = parser.add_subparsers(dest="group", required=True)

    def group(name, help_):
        g = top.add_parser(name, help=help_)
        return g.add_subparsers(dest="action", required=True)

    g = group("is", "independent-set counts")
    p = g.add_parser("count")
    _common(p)
    p.add_argument("--graph", required=True)
    p.set_defaults(func=cmd_is_count)
    p = g.add_parser("alpha")
    _common(p)
    p.add_argument("--graph", required=True)
    p.set_defaults(func=cmd_is_alpha)

    g = group("kw", "Kleitman-Winston encoding and containers")
    p = g.add_parser("trace")
    _common(p)
    p.add_argument("--graph", required=True)
    p.add_argument("--set", type=int_list, required=True)
    p.add_argument("--q", type=int, required=True)
    p.set_defaults(func=cmd_kw_trace)
    p = g.add_parser("containers")
    _common(p)
    p.add_argument("--graph", required=True)
    p.add_argument("--q", type=int, required=True)
    p.set_defaults(func=cmd_kw_containers)
    p = g.add_parser("verify")
    _common(p, "beta")
    p.add_argument("--graph", required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--R", type=float, required=True)
    p.add_argument("--D", type=float)
    p.set_defaults(func=cmd_kw_verify)

    p = top.add_parser("bounds", help="evaluate a closed-form bound")
    p.add_argument(
        "name",
        choices=[
            "binomial", "sandwich", "sapozhenko", "kahn-zhao", "kw-c4", "ap-free", "roth-failure",
            "lemma1", "eigenvalue", "sum-free", "ap-free-recursion", "c4-extensions", "c4-free",
        ],
    )
    _common(p, "n", "m", "d", "q", "delta", "epsilon", "beta")
    p.add_argument("--C", type=float)
    p.add_argument("--R", type=float)
    p.add_argument("--lam", type=float, help="minus the smallest eigenvalue")
    p.add_argument("--alpha", type=int)
    p.add_argument("--K", type=int)
    p.add_argument("--a", type=float)
    p.add_argument("--b", type=int)
    p.add_argument("--q-rule", choices=c4.Q_RULES, default="minimal")
    p.set_defaults(func=cmd_bounds)

    g = group("spectral", "smallest-eigenvalue checks")
    p = g.add_parser("check")
    _common(p)
    p.add_argument("--graph", required=True)
    p.set_defaults(func=cmd_spectral_check)

    g = group("sumfree", "sum-free subsets of [n]")
    p = g.add_parser("count")
    _common(p, "n")
    p.add_argument("--method", choices=["dfs", "bitmask"], default="dfs")
    p.set_defaults(func=cmd_sumfree_count)
    p = g.add_parser("gs")
    _common(p, "n")
    p.add_argument("--s", type=int_list, required=True)
    p.set_defaults(func=cmd_sumfree_gs)

    g = group("c4", "C4-free graphs")
    p = g.add_parser("count")
    _common(p, "n")
    p.set_defaults(func=cmd_c4_count)
    p = g.add_parser("extensions")
    _common(p, "d")
    p.add_argument("--graph", required=True)
    p.set_defaults(func=cmd_c4_extensions)
    p = g.add_parser("bound")
    _common(p, "n")
    p.add_argument("--q-rule", choices=c4.Q_RULES, default="minimal")
    p.set_defaults(func=cmd_c4_bound)

    g = group("roth", "3-term APs and random δ-Roth sets")
    p = g.add_parser("experiment")
    _common(p, "n", "m", "delta", "trials", "seed")
    p.set_defaults(func=cmd_roth_experiment)
    p = g.add_parser("check")
    _common(p, "delta")
    p.add_argument("--set", type=int_list, required=True)
    p.set_defaults(func=cmd_roth_check)

    p = top.add_parser("varnavides", help="fewest 3-term APs in large subsets of [n]")
    _common(p, "n", "delta")
    p.set_defaults(func=cmd_varnavides)

    p = top.add_parser("verify-suite", help="run the invariant suite over a graph catalog")
    _common(p, "epsilon")
    p.add_argument("--graph", action="append", help="extra edge-list file (repeatable)")
    p.add_argument("--builtin", action=argparse.BooleanOptionalAction, default=True)
    p.add_argument("--sapozhenko-C", type=float, default=SuiteConfig.sapozhenko_C)
    p.add_argument("--eigen-C", type=float, default=SuiteConfig.eigen_C)
    p.set_defaults(func=cmd_verify_suite, epsilon=SuiteConfig.eigen_epsilon)
    return parser


def dispatch(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    out = Out()
    try:
        status = args.func(args, out) or EXIT_OK
    except ResourceError as exc:
        partial = "" if exc.partial is None else f" (partial result: {exc.partial})"
        print(f"error: {exc}{partial}", file=sys.stderr)
        return EXIT_RESOURCE
    except (KWError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    sys.stdout.write(out.buffer.getvalue())
    return status


def main():
    sys.exit(dispatch())


if __name__ == "__main__":
    main()
