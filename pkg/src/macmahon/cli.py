"""Command-line front end.

Four verbs: `expand` prints series expansions, `decompose` emits an
Eisenstein decomposition with its oracle report, `verify` runs a named
suite of identity checks, `scan` searches an arithmetic progression of
coefficients for a congruence violation.

Exit codes everywhere: 0 success/verified, 1 mathematical disagreement
or domain error, 2 usage error.  Output is deterministic for fixed
arguments; the only environment influence is color suppression via
NO_COLOR (colors are used only on a terminal anyway).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction

from .decompose import (
    DecompositionReport,
    SymmetricNumerator,
    decompose_a0,
    decompose_a1,
    decompose_a2,
    decompose_am1,
    decompose_ukk,
    verify_decomposition,
)
from .eisenstein import CHARACTERS, Generator, QmfExpression, generator_series
from .identities import (
    CheckReport,
    CongruenceClaim,
    binomial_identity_check,
    congruence_scan,
    exp_identity_check,
    explicit_identity_check,
    general_limit_check,
    generating_function_check,
    isobaric_check,
    jacobi_triple_product_check,
    limit_check,
    limit_product,
)
from .polynomials import Polynomial
from .series import TruncatedSeries
from .sums import h_series, u_series

__all__ = ["main", "build_parser", "build_suite", "SUITES"]

SUITES = (
    "example12",
    "a0-family",
    "a1-family",
    "am1-family",
    "shuffle-exp",
    "isobaric",
    "limit",
    "general-limit",
    "explicit",
    "genfun",
    "jtp",
    "binomial",
)

_A_GRID = (-2, -1, 0, 1, 2)


# -- suite case functions (module level so worker processes can run them) --


def _report_equal_series(claim: str, through: int, lhs: TruncatedSeries,
                         rhs: TruncatedSeries) -> CheckReport:
    diff = lhs.first_difference(rhs)
    if diff is None:
        return CheckReport(claim=claim, checked_through=through, status="verified")
    return CheckReport(claim=claim, checked_through=through, status="counterexample",
                       witness={"q_exponent": diff, "lhs": str(lhs.coeff(diff)),
                                "rhs": str(rhs.coeff(diff))})


def _case_square_formula(order: int) -> CheckReport:
    claim = ("U(t=2,k,k) = 1/2 U(t=1,k,k)^2 - 1/2 U(t=1,2k,2k) "
             f"for k <= 2, a in {list(_A_GRID)}, through q^{order - 1}")
    for k in (1, 2):
        for a in _A_GRID:
            single = u_series(1, k, k, a, order)
            lhs = u_series(2, k, k, a, order)
            rhs = single * single * Fraction(1, 2) \
                - u_series(1, 2 * k, 2 * k, a, order) * Fraction(1, 2)
            diff = lhs.first_difference(rhs)
            if diff is not None:
                return CheckReport(claim=claim, checked_through=order - 1,
                                   status="counterexample",
                                   witness={"k": k, "a": a, "q_exponent": diff})
    return CheckReport(claim=claim, checked_through=order - 1, status="verified")


def _example12_literal(a: int):
    G = Generator
    if a == 0:
        return QmfExpression(Fraction(-1, 8), [
            (1, G(2, "trivial", 2)),
            (-4, G(2, "trivial", 4)),
        ])
    if a == 2:
        return QmfExpression(Fraction(-1, 32), [
            (Fraction(1, 6), G(2, "trivial", 1)),
            (Fraction(-2, 3), G(2, "trivial", 2)),
            (Fraction(-1, 6), G(4, "trivial", 1)),
            (Fraction(8, 3), G(4, "trivial", 2)),
        ])
    if a == 1:
        return QmfExpression(Fraction(-1, 18), [
            (Fraction(1, 3), G(2, "trivial", 1)),
            (-3, G(2, "trivial", 3)),
            (Fraction(-1, 3), G(1, "chi_3_2", 1)),
        ])
    if a == -1:
        return QmfExpression(Fraction(-1, 2), [
            (Fraction(-1, 3), G(2, "trivial", 1)),
            (Fraction(4, 3), G(2, "trivial", 2)),
            (3, G(2, "trivial", 3)),
            (-12, G(2, "trivial", 6)),
            (Fraction(1, 3), G(1, "chi_3_2", 1)),
            (Fraction(2, 3), G(1, "chi_3_2", 2)),
        ])
    raise ValueError(f"no frozen reference decomposition for a = {a}")


def _case_example12_decomposition(a: int, order: int) -> CheckReport:
    claim = f"reference decomposition of U(k=2,r=2;a={a}), through q^{order - 1}"
    expr = decompose_ukk(a, 2)
    literal = _example12_literal(a)
    if expr != literal:
        return CheckReport(claim=claim, checked_through=order - 1,
                           status="counterexample",
                           witness={"reason": "expression differs from reference",
                                    "computed": expr.to_json_dict()})
    report = verify_decomposition(expr, a, 2, order=order)
    if report.equal:
        return CheckReport(claim=claim, checked_through=order - 1, status="verified")
    return CheckReport(claim=claim, checked_through=order - 1, status="counterexample",
                       witness={"q_exponent": report.first_discrepancy})


def _decomposition_case(a: int, k: int, pair_r, order: int) -> CheckReport:
    if a in (1, -1):
        numerator = (SymmetricNumerator.power(k) if pair_r is None
                     else SymmetricNumerator.pair(k, pair_r))
        expr = decompose_a1(numerator) if a == 1 else decompose_am1(numerator)
        q_text = f"x^{k}" if pair_r is None else f"x^{pair_r} + x^{2 * k - pair_r}"
    else:
        numerator = None
        expr = decompose_a0(k) if a == 0 else decompose_a2(k)
        q_text = f"x^{k}"
    claim = (f"Eisenstein decomposition of sum_n Q(q^n)/(1+({a})q^n+q^(2n))^{k} "
             f"with Q = {q_text}, through q^{order - 1}")
    report = verify_decomposition(expr, a, k, numerator, order)
    if report.equal:
        return CheckReport(claim=claim, checked_through=order - 1, status="verified")
    return CheckReport(claim=claim, checked_through=order - 1, status="counterexample",
                       witness={"q_exponent": report.first_discrepancy})


_DISPLAY_PRODUCTS = {
    0: (1, 1, 1, 2, 3, 4, 5, 7, 10),
    1: (1, 0, 0, 1, 0, 0, 2, 0, 0, 3, 0, 0, 5, 0, 0, 7, 0, 0, 11, 0, 0, 15, 0, 0, 22),
    -1: (1, 2, 4, 7, 12, 20, 32, 50),
    2: (1, -1, 1, -2, 3, -4, 5, -7, 10, -13),
}


def _case_display_product(a: int) -> CheckReport:
    expected = _DISPLAY_PRODUCTS[a]
    order = len(expected)
    claim = (f"prod_n 1/((1-q^n)(1+({a})q^n+q^(2n))) opens with the "
             f"tabulated coefficients, through q^{order - 1}")
    return _report_equal_series(claim, order - 1,
                                limit_product(a, 1, 1, order),
                                TruncatedSeries(list(expected), order))


_GENERAL_LIMIT_P = (
    ("x", Polynomial((0, 1))),
    ("2x", Polynomial((0, 2))),
    ("3x", Polynomial((0, 3))),
    ("x^2", Polynomial((0, 0, 1))),
    ("x^2+x", Polynomial((0, 1, 1))),
)
_GENERAL_LIMIT_Q = (
    ("x", Polynomial((0, 1))),
    ("-2x+x^2", Polynomial((0, -2, 1))),
    ("x+x^3", Polynomial((0, 1, 0, 1))),
)


def _pool_case(payload):
    name, index, opts = payload
    label, thunk = build_suite(name, opts)[index]
    return label, thunk()


def build_suite(name: str, opts: dict):
    """Construct the named verify suite: a list of (label, thunk) pairs.

    Thunks call module-level functions only, so a worker process can
    rebuild the suite from (name, opts) and run any case by index.
    """

    def opt(key, default):
        value = opts.get(key)
        return default if value is None else value

    def bind(fn, *args, **kwargs):
        return lambda: fn(*args, **kwargs)

    a_values = (opt("a", None),) if opts.get("a") is not None else _A_GRID
    cases = []
    if name == "example12":
        order = opt("order", 100)
        cases.append(("isobaric-t2", bind(_case_square_formula, order)))
        for a in (0, 2, 1, -1):
            cases.append((f"decomposition-a{a}",
                          bind(_case_example12_decomposition, a, order)))
    elif name == "a0-family":
        order = opt("order", 64)
        for k in range(1, opt("kmax", 8) + 1):
            cases.append((f"a0-k{k}", bind(_decomposition_case, 0, k, None, order)))
        for k in range(1, opt("kmax", 5) + 1):
            cases.append((f"a2-k{k}", bind(_decomposition_case, 2, k, None, order)))
    elif name in ("a1-family", "am1-family"):
        a = 1 if name == "a1-family" else -1
        order = opt("order", 48)
        for k in range(1, opt("kmax", 6) + 1):
            cases.append((f"power-k{k}", bind(_decomposition_case, a, k, None, order)))
            for r in range(1, k):
                cases.append((f"pair-k{k}-r{r}",
                              bind(_decomposition_case, a, k, r, order)))
    elif name == "shuffle-exp":
        order = opt("order", 40)
        x_order = opt("xorder", 6)
        grid = ((1, 1), (2, 2), (2, 1), (3, 2))
        if opts.get("k") is not None or opts.get("r") is not None:
            grid = ((opt("k", 1), opt("r", 1)),)
        for k, r in grid:
            for a in a_values:
                cases.append((f"k{k}-r{r}-a{a}",
                              bind(exp_identity_check, k, r, a, x_order, order)))
    elif name == "isobaric":
        order = opt("order", 40)
        for t in range(1, opt("tmax", 6) + 1):
            for k in range(1, opt("kmax", 2) + 1):
                for a in a_values:
                    cases.append((f"t{t}-k{k}-a{a}",
                                  bind(isobaric_check, t, k, k, a, order)))
    elif name == "limit":
        for t in range(1, opt("tmax", 6) + 1):
            for k in range(1, opt("kmax", 3) + 1):
                for r in range(1, opt("rmax", 3) + 1):
                    for a in a_values:
                        cases.append((f"t{t}-k{k}-r{r}-a{a}",
                                      bind(limit_check, t, k, r, a)))
        if opts.get("a") is None:
            for a in (0, 1, -1, 2):
                cases.append((f"display-a{a}", bind(_case_display_product, a)))
    elif name == "general-limit":
        for p_text, p in _GENERAL_LIMIT_P:
            for q_text, q in _GENERAL_LIMIT_Q:
                for k in (1, 2):
                    for t in range(1, opt("tmax", 4) + 1):
                        cases.append((f"P[{p_text}]-Q[{q_text}]-k{k}-t{t}",
                                      bind(general_limit_check, p, q, t, k)))
    elif name == "explicit":
        order = opt("order", 30)
        t_values = (range(opt("t", 0), opt("t", 4) + 1) if opts.get("t") is not None
                    else range(0, opt("tmax", 4) + 1))
        for a in a_values:
            for t in t_values:
                cases.append((f"a{a}-t{t}",
                              bind(explicit_identity_check, a, t, order)))
        if -2 in a_values:
            for t in t_values:
                cases.append((f"central-t{t}",
                              bind(explicit_identity_check, -2, t, order, True)))
    elif name == "genfun":
        order = opt("order", 15)
        t_max = opt("tmax", 4)
        for a in a_values:
            cases.append((f"a{a}", bind(generating_function_check, a, t_max, order)))
    elif name == "jtp":
        cases.append(("triple-product",
                      bind(jacobi_triple_product_check, opt("order", 20),
                           opt("window", 5))))
    elif name == "binomial":
        cases.append(("weight-closed-form",
                      bind(binomial_identity_check, opt("mmax", 12))))
    else:
        raise ValueError(f"unknown suite: {name}")
    return cases


# -- argument plumbing ----------------------------------------------------


def _comma_ints(text: str):
    return [int(part) for part in text.split(",")]


def _comma_fractions(text: str):
    return [Fraction(part) for part in text.split(",")]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="macmahon",
        description="Exact q-series computation and identity verification.",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    p_expand = sub.add_parser("expand", help="print a series expansion")
    p_expand.add_argument("kind", choices=("u", "h", "product", "eis"))
    p_expand.add_argument("--t", type=int)
    p_expand.add_argument("--k", type=int)
    p_expand.add_argument("--r", type=int)
    p_expand.add_argument("--a", type=Fraction)
    p_expand.add_argument("--ks", type=_comma_ints)
    p_expand.add_argument("--rs", type=_comma_ints)
    p_expand.add_argument("--weight", type=int)
    p_expand.add_argument("--char", choices=tuple(sorted(CHARACTERS)),
                          default="trivial")
    p_expand.add_argument("--dilation", type=int, default=1)
    p_expand.add_argument("--order", type=int, required=True)
    p_expand.add_argument("--format", choices=("text", "json", "csv"),
                          default="text")

    p_dec = sub.add_parser("decompose", help="Eisenstein decomposition + report")
    p_dec.add_argument("--a", type=int, choices=(0, 1, -1, 2), required=True)
    p_dec.add_argument("--k", type=int, required=True)
    p_dec.add_argument("--numerator", type=_comma_fractions,
                       help="coefficients of x^1, x^2, ... (a = 1 or -1 only)")
    p_dec.add_argument("--order", type=int, default=60)
    p_dec.add_argument("--format", choices=("json", "text"), default="json")

    p_verify = sub.add_parser("verify", help="run a verification suite")
    p_verify.add_argument("suite", choices=SUITES)
    p_verify.add_argument("--order", type=int)
    p_verify.add_argument("--kmax", type=int)
    p_verify.add_argument("--tmax", type=int)
    p_verify.add_argument("--rmax", type=int)
    p_verify.add_argument("--xorder", type=int)
    p_verify.add_argument("--window", type=int)
    p_verify.add_argument("--mmax", type=int)
    p_verify.add_argument("--k", type=int)
    p_verify.add_argument("--r", type=int)
    p_verify.add_argument("--t", type=int)
    p_verify.add_argument("--a", type=int)
    p_verify.add_argument("--jobs", type=int, default=1)
    p_verify.add_argument("--format", choices=("text", "json"), default="text")

    p_scan = sub.add_parser("scan", help="scan a coefficient progression mod p")
    p_scan.add_argument("--t", type=int, required=True)
    p_scan.add_argument("--k", type=int, required=True)
    p_scan.add_argument("--r", type=int, required=True)
    p_scan.add_argument("--a", type=int, required=True)
    p_scan.add_argument("--mod", type=int, required=True)
    p_scan.add_argument("--step", type=int, required=True)
    p_scan.add_argument("--residue", type=int, required=True)
    p_scan.add_argument("--max", type=int, default=300)
    p_scan.add_argument("--format", choices=("json", "text"), default="json")
    return parser


def _emit_series(series: TruncatedSeries, fmt: str) -> None:
    if fmt == "text":
        print(series.to_text())
    elif fmt == "json":
        print(json.dumps(series.to_json_dict()))
    else:
        print("n,coefficient")
        for n, c in enumerate(series.coeffs):
            print(f"{n},{c}")


def _cmd_expand(args, parser) -> int:
    def require(*names):
        missing = [f"--{n}" for n in names if getattr(args, n) is None]
        if missing:
            parser.error(f"expand {args.kind} requires {', '.join(missing)}")

    try:
        if args.kind == "u":
            require("t", "k", "r", "a")
            series = u_series(args.t, args.k, args.r, args.a, args.order)
        elif args.kind == "h":
            require("ks", "rs", "a")
            series = h_series(args.ks, args.rs, args.a, args.order)
        elif args.kind == "product":
            require("a", "k", "r")
            series = limit_product(args.a, args.k, args.r, args.order)
        else:
            require("weight")
            series = generator_series(
                Generator(args.weight, args.char, args.dilation), args.order)
    except (ValueError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    _emit_series(series, args.format)
    return 0


def _cmd_decompose(args, parser) -> int:
    numerator = None
    if args.numerator is not None:
        if args.a not in (1, -1):
            parser.error("--numerator is only supported for a = 1 or a = -1")
        try:
            numerator = SymmetricNumerator(
                args.k, Polynomial([0] + list(args.numerator)))
        except ValueError as exc:
            parser.error(f"invalid numerator: {exc}")
    try:
        if numerator is not None:
            expr = decompose_a1(numerator) if args.a == 1 else decompose_am1(numerator)
        else:
            expr = decompose_ukk(args.a, args.k)
    except ValueError as exc:
        parser.error(str(exc))
    report = verify_decomposition(expr, args.a, args.k, numerator, args.order)
    if args.format == "json":
        print(json.dumps({"expression": expr.to_json_dict(),
                          "report": report.to_json_dict()}, indent=2))
    else:
        print(repr(expr))
        status = "verified" if report.equal else \
            f"disagrees at q^{report.first_discrepancy}"
        print(f"oracle comparison through q^{report.order_checked - 1}: {status}")
    return 0 if report.equal else 1


def _colorize(word: str, code: str) -> str:
    if sys.stdout.isatty() and "NO_COLOR" not in os.environ:
        return f"\x1b[{code}m{word}\x1b[0m"
    return word


def _cmd_verify(args, parser) -> int:
    opts = {key: getattr(args, key) for key in
            ("order", "kmax", "tmax", "rmax", "xorder", "window", "mmax",
             "k", "r", "t", "a")}
    cases = build_suite(args.suite, opts)
    results = []
    if args.jobs > 1 and len(cases) > 1:
        payloads = [(args.suite, i, opts) for i in range(len(cases))]
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            results = list(pool.map(_pool_case, payloads))
    else:
        results = [(label, thunk()) for label, thunk in cases]

    failures = 0
    if args.format == "json":
        print(json.dumps([
            {"label": f"{args.suite}/{label}", "report": report.to_json_dict()}
            for label, report in results
        ], indent=2))
        failures = sum(1 for _, report in results if not report.ok)
    else:
        for label, report in results:
            if report.ok:
                print(f"{_colorize('PASS', '32')} {args.suite}/{label}")
            else:
                failures += 1
                detail = json.dumps(report.to_json_dict(), sort_keys=True)
                print(f"{_colorize('FAIL', '31')} {args.suite}/{label} :: {detail}")
        print(f"{len(results) - failures}/{len(results)} passed")
    return 0 if failures == 0 else 1


def _cmd_scan(args, parser) -> int:
    try:
        claim = CongruenceClaim(t=args.t, k=args.k, r=args.r, a=args.a,
                                modulus=args.mod, step=args.step,
                                residue=args.residue)
    except ValueError as exc:
        parser.error(str(exc))
    report = congruence_scan(claim, args.max)
    if args.format == "json":
        print(json.dumps(report.to_json_dict(), indent=2))
    elif report.ok:
        print(f"VERIFIED {report.claim} for n <= {report.checked_through}")
    else:
        print(f"COUNTEREXAMPLE {report.claim} :: {json.dumps(report.witness)}")
    return 0 if report.ok else 1


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handler = {
        "expand": _cmd_expand,
        "decompose": _cmd_decompose,
        "verify": _cmd_verify,
        "scan": _cmd_scan,
    }[args.verb]
    return handler(args, parser)


if __name__ == "__main__":
    sys.exit(main())
