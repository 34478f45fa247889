"""Command-line driver.

Commands: build, verify, coreness, qbinom, scan.  All reports go to
stdout as UTF-8; errors go to stderr.  Exit codes: 0 all checks pass or
report produced, 1 a verification check failed, 2 a resource bound was
hit, 3 invalid input.

GRASSMANN_LAB_THREADS caps the worker count of the verification kernels;
every kernel in this build is single-threaded, so any cap is honoured
and output is deterministic byte-for-byte.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .arith import prime_power_base
from .config import BUILD_BOUND, CLIQUE_ENUM_BOUND, SEARCH_BOUND, BoundExceeded
from .coreness import core_test
from .field import make_field
from .fixture import load_fixture, verify_fixture_partition
from .graph import (
    all_maximal_cliques_bruteforce,
    build_graph,
    classify_maximal_cliques,
    dual_map_check,
    verify_clique_lemmas,
)
from .qpoly import (
    gaussian_binomial_int,
    gaussian_binomial_poly,
    h_report,
    knuth_wilf_exponents,
    scan_core_threshold,
)
from .report import (
    census_dict,
    coreness_report_dict,
    dual_report_dict,
    fixture_report_dict,
    graph_to_dot,
    graph_to_json_dict,
    graph_to_text,
    h_report_dict,
    lemma_report_dict,
    params_dict,
    poly_dict,
    scan_report_dict,
)

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_BOUND = 2
EXIT_INVALID = 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_INVALID)


def worker_cap() -> int:
    """Effective worker count permitted by GRASSMANN_LAB_THREADS."""
    raw = os.environ.get("GRASSMANN_LAB_THREADS", "")
    try:
        cap = int(raw) if raw else 1
    except ValueError:
        raise ValueError(f"GRASSMANN_LAB_THREADS must be an integer, got {raw!r}")
    if cap < 1:
        raise ValueError("GRASSMANN_LAB_THREADS must be >= 1")
    return 1  # all kernels are single-threaded; 1 <= cap always holds


def _field_for(q: int):
    pe = prime_power_base(q)
    if pe is None:
        raise ValueError(f"--q must be a prime power, got {q}")
    return make_field(*pe)


def _emit(data) -> None:
    sys.stdout.write(json.dumps(data, indent=2) + "\n")


def cmd_build(args) -> int:
    spec = _field_for(args.q)
    G = build_graph(spec, args.n, args.m, max_vertices=args.max_vertices)
    if args.format == "json":
        _emit(graph_to_json_dict(G))
    elif args.format == "dot":
        sys.stdout.write(graph_to_dot(G))
    else:
        sys.stdout.write(graph_to_text(G))
    return EXIT_OK


def cmd_verify(args) -> int:
    spec = _field_for(args.q)
    G = build_graph(spec, args.n, args.m, max_vertices=args.brute_bound)
    cliques = all_maximal_cliques_bruteforce(G, bound=args.brute_bound)
    census = classify_maximal_cliques(G, cliques)
    lemmas = verify_clique_lemmas(G)
    dual = dual_map_check(G) if G.n == 2 * G.m else None
    ok = census.ok and lemmas.ok and (dual is None or dual.ok)
    data = {
        "params": params_dict(G),
        "cliques": census_dict(census),
        "lemmas": {**lemma_report_dict(lemmas), "dual": dual_report_dict(dual)},
        "ok": ok,
    }
    if args.format == "text":
        status = "pass" if ok else "FAIL"
        sys.stdout.write(
            f"J_{args.q}({args.n},{args.m}): {census.total} maximal cliques "
            f"({census.star_count} stars, {census.top_count} tops); checks {status}\n"
        )
    else:
        _emit(data)
    return EXIT_OK if ok else EXIT_CHECK_FAILED


def cmd_coreness(args) -> int:
    rep = core_test(args.n, args.m, args.q, search_bound=args.brute_bound)
    data = {"params": {"q": args.q, "n": args.n, "m": args.m}, "coreness": coreness_report_dict(rep)}
    ok = True
    if args.fixture:
        spec = _field_for(args.q)
        G = build_graph(spec, args.n, args.m)
        fx = load_fixture(args.fixture)
        fxrep = verify_fixture_partition(G, fx)
        data["fixture"] = fixture_report_dict(fxrep)
        ok = fxrep.ok
    if args.format == "text":
        sys.stdout.write(
            f"J_{args.q}({args.n},{args.m}): verdict {rep.verdict}; "
            + "; ".join(rep.evidence)
            + "\n"
        )
    else:
        _emit(data)
    return EXIT_OK if ok else EXIT_CHECK_FAILED


def cmd_qbinom(args) -> int:
    poly = gaussian_binomial_poly(args.n, args.m)
    exps = knuth_wilf_exponents(args.n, args.m)
    data = {
        "params": {"n": args.n, "m": args.m},
        "qbinom": {
            "exponents": {str(t): e for t, e in sorted(exps.exponents.items())},
            "polynomial": poly_dict(poly),
        },
    }
    if args.at is not None:
        if prime_power_base(args.at) is None:
            raise ValueError(f"--at must be a prime power, got {args.at}")
        data["qbinom"]["value_at"] = {"q": args.at, "value": gaussian_binomial_int(args.n, args.m, args.at)}
    if 2 <= args.m and 2 * args.m <= args.n:
        hrep = h_report(args.n, args.m)
        data["qbinom"]["h"] = h_report_dict(hrep)
        if args.at is not None:
            from .qpoly import h_integrality

            value = h_integrality(args.n, args.m, args.at)
            data["qbinom"]["h"]["value_at"] = (
                {"q": args.at, "value": value}
                if isinstance(value, int)
                else {"q": args.at, "value": f"{value.numerator}/{value.denominator}"}
            )
        if args.q_max is not None:
            data["qbinom"]["scan"] = scan_report_dict(
                scan_core_threshold(args.n, args.m, args.q_max)
            )
    if args.format == "text":
        lines = [f"[{args.n},{args.m}]_q = {poly}"]
        lines.append(
            "cyclotomic exponents: "
            + " ".join(f"Phi_{t}^{e}" for t, e in sorted(exps.exponents.items()))
        )
        if "h" in data["qbinom"]:
            h = data["qbinom"]["h"]
            lines.append(
                f"h = f/g with f = {h['f']['text']}, g = {h['g']['text']}, "
                f"r = {h['r']['text']}, applicable = {h['applicable']}"
            )
        sys.stdout.write("\n".join(lines) + "\n")
    else:
        _emit(data)
    return EXIT_OK


def cmd_scan(args) -> int:
    rep = scan_core_threshold(args.n, args.m, args.q_max)
    data = {"params": {"n": args.n, "m": args.m}, "qbinom": {"scan": scan_report_dict(rep)}}
    if args.format == "text":
        nonint = sum(1 for e in rep.entries if not e.is_integer)
        sys.stdout.write(
            f"h integrality scan for (n={args.n}, m={args.m}) up to q = {args.q_max}: "
            f"{nonint}/{len(rep.entries)} prime powers non-integral; "
            f"largest integral q = {rep.largest_integer_q}\n"
        )
    else:
        _emit(data)
    return EXIT_OK


def _build_parser() -> _Parser:
    parser = _Parser(prog="grassmann-lab", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common_graph(p):
        p.add_argument("--q", type=int, required=True, help="field size (prime power)")
        p.add_argument("--n", type=int, required=True, help="ambient dimension")
        p.add_argument("--m", type=int, required=True, help="subspace dimension")

    p = sub.add_parser("build", help="build a graph and dump it")
    common_graph(p)
    p.add_argument("--format", choices=["json", "text", "dot"], default="text")
    p.add_argument("--max-vertices", type=int, default=BUILD_BOUND)
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("verify", help="exhaustively verify clique structure")
    common_graph(p)
    p.add_argument("--format", choices=["json", "text"], default="json")
    p.add_argument("--brute-bound", type=int, default=CLIQUE_ENUM_BOUND)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("coreness", help="core / not-core / undetermined verdict")
    common_graph(p)
    p.add_argument("--format", choices=["json", "text"], default="json")
    p.add_argument("--fixture", type=str, default=None, help="fixture file to verify")
    p.add_argument("--brute-bound", type=int, default=SEARCH_BOUND)
    p.set_defaults(func=cmd_coreness)

    p = sub.add_parser("qbinom", help="Gaussian binomial factorization and h report")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--at", type=int, default=None, help="evaluate at this prime power")
    p.add_argument("--q-max", type=int, default=None, help="also scan integrality up to here")
    p.add_argument("--format", choices=["json", "text"], default="json")
    p.set_defaults(func=cmd_qbinom)

    p = sub.add_parser("scan", help="integrality scan of h over prime powers")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--q-max", type=int, required=True)
    p.add_argument("--format", choices=["json", "text"], default="json")
    p.set_defaults(func=cmd_scan)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        worker_cap()
        return args.func(args)
    except BoundExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BOUND
    except (ValueError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
