"""JSON command-line front end.

Exit codes: 0 when the relation or property holds, 1 when it fails (the
JSON carries the witness), 2 for usage or input errors (an error object is
written to standard error).

Sequence arguments are inline JSON, ``@path`` to read a file, or ``-`` for
standard input.  Discount arguments may also be family objects, realized at
``--horizon``.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import deterioration, dominance, oracle, patience
from .core import (
    INFINITE,
    DiscountSequence,
    Explicit,
    HorizonMismatch,
    ParameterError,
    PreconditionError,
    PrizeSequence,
    SequenceError,
    approx,
    family_from_json,
    format_rational,
    parse_rational,
    realize,
    weighted_sum,
)


class InputError(Exception):
    pass


def _read(arg: str):
    try:
        if arg == "-":
            text = sys.stdin.read()
        elif arg.startswith("@"):
            with open(arg[1:], encoding="utf-8") as fh:
                text = fh.read()
        else:
            text = arg
        return json.loads(text)
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read JSON from {arg!r}: {exc}") from exc


def _prize(arg: str) -> PrizeSequence:
    return PrizeSequence.from_json(_read(arg))


def _family(arg: str):
    obj = _read(arg)
    if isinstance(obj, dict) and "family" in obj:
        return family_from_json(obj)
    return Explicit(DiscountSequence.from_json(obj))


def _horizon(value):
    if value is None:
        return None
    if value == INFINITE:
        return INFINITE
    try:
        T = int(value)
    except ValueError:
        raise InputError(f"--horizon must be a positive integer or 'inf', got {value!r}")
    if T < 1:
        raise InputError("--horizon must be positive")
    return T


def _discount(arg: str, horizon) -> DiscountSequence:
    fam = _family(arg)
    if horizon == INFINITE:
        raise InputError("--horizon inf is only accepted by 'patient' (parametric pairs) and 'collapse'")
    if isinstance(fam, Explicit):
        if horizon is not None and horizon != fam.horizon:
            raise InputError(f"--horizon {horizon} does not match the sequence length {fam.horizon}")
        return fam.sequence
    if horizon is None:
        raise InputError("family inputs need --horizon")
    return realize(fam, horizon)


def _emit(args, payload: dict) -> None:
    text = json.dumps(payload, indent=2, ensure_ascii=False)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _verdict_code(holds: bool) -> int:
    return 0 if holds else 1


# -- subcommands ---------------------------------------------------------------------


def cmd_dominates(args):
    v = dominance.dominates(_prize(args.x), _prize(args.y))
    return v.to_json(), _verdict_code(v.holds)


def cmd_superior(args):
    x, y = _prize(args.x), _prize(args.y)
    v = dominance.is_superior(x, y)
    out = v.to_json()
    if not v.holds:
        w = v.witness_weights
        out["weighted_x"] = format_rational(weighted_sum(w, x))
        out["weighted_y"] = format_rational(weighted_sum(w, y))
    return out, _verdict_code(v.holds)


def cmd_tighten(args):
    xt = dominance.tighten(_prize(args.x), _prize(args.y))
    return {"tightened": xt.to_json()}, 0


def cmd_chain(args):
    x, y = _prize(args.x), _prize(args.y)
    chain = deterioration.decompose(x, y)
    out = chain.to_json()
    if args.alpha and args.beta:
        alpha, beta = _discount(args.alpha, _horizon(args.horizon)), _discount(args.beta, _horizon(args.horizon))
        out["ratio_trace"] = [format_rational(r) for r in deterioration.ratio_trace(alpha, beta, chain)]
    return out, 0


def cmd_eval(args):
    T = _horizon(args.horizon)
    alpha, beta = _discount(args.alpha, T), _discount(args.beta, T)
    x, y = _prize(args.x), _prize(args.y)
    ra, rb = patience.patience_ratios(alpha, beta, x, y)
    holds = ra <= rb
    gap = ra - rb
    return {
        "holds": holds,
        "alpha_ratio": format_rational(ra),
        "beta_ratio": format_rational(rb),
        "gap": format_rational(gap),
        "gap_display": approx(gap),
    }, _verdict_code(holds)


def cmd_serene(args):
    T = _horizon(args.horizon)
    v = patience.is_more_serene(_discount(args.alpha, T), _discount(args.beta, T))
    return v.to_json(), _verdict_code(v.holds)


def cmd_patient(args):
    T = _horizon(args.horizon)
    if T == INFINITE:
        v = patience.infinite_family_patience(_family(args.alpha), _family(args.beta))
        return v.to_json(), _verdict_code(v.holds)
    alpha, beta = _discount(args.alpha, T), _discount(args.beta, T)
    v = patience.is_more_patient(alpha, beta)
    out = v.to_json()
    out["monotone_ratio"] = patience.monotone_ratio_check(alpha, beta)
    if alpha.horizon >= 2:
        out["gap_ratios"] = patience.gap_ratio_report(alpha, beta).to_json()
    return out, _verdict_code(v.holds)


def cmd_counterexample(args):
    T = _horizon(args.horizon)
    alpha, beta = _discount(args.alpha, T), _discount(args.beta, T)
    if not patience.gap_failures(alpha, beta):
        return {"holds": True, "witness": None}, 0
    x, y = patience.patience_counterexample(alpha, beta)
    gap = patience.patience_gap(alpha, beta, x, y)
    return {
        "holds": False,
        "witness": {"x": x.to_json(), "y": y.to_json()},
        "gap": format_rational(gap),
        "gap_display": approx(gap),
    }, 1


def cmd_threshold(args):
    T = _horizon(args.horizon)
    if T is None or T == INFINITE:
        raise InputError("threshold needs a finite --horizon")
    a_bar = patience.exponential_patience_threshold(parse_rational(args.b), T)
    return {"b": args.b, "T": T, "a_bar": format_rational(a_bar), "a_bar_display": approx(a_bar)}, 0


def cmd_collapse(args):
    if args.horizon not in (None, INFINITE):
        raise InputError("collapse is an infinite-horizon analysis; only --horizon inf is accepted")
    t = patience.exponential_infinite_collapse(parse_rational(args.a), parse_rational(args.b))
    return {"a": args.a, "b": args.b, "holds": t is None, "t_dagger": t}, _verdict_code(t is None)


def cmd_verify(args):
    config = oracle.TrialConfig(seed=args.seed, trials=args.trials, horizon_max=args.tmax,
                                grid_denominator=args.grid, instances=args.instances)
    report = oracle.run_suites(args.suite, config)
    return report, _verdict_code(report["passed"])


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="discountorder", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text):
        p = sub.add_parser(name, help=help_text)
        p.set_defaults(func=func)
        p.add_argument("--output", help="write JSON here instead of standard output")
        return p

    for name, func, text in (
        ("dominates", cmd_dominates, "partial-sum dominance of x over y"),
        ("superior", cmd_superior, "superiority of x over y for every decreasing weight sequence"),
        ("tighten", cmd_tighten, "shave x to the total of y while keeping dominance"),
    ):
        p = add(name, func, text)
        p.add_argument("--x", required=True)
        p.add_argument("--y", required=True)

    p = add("chain", cmd_chain, "greedy binary-deterioration chain from x to y")
    p.add_argument("--x", required=True)
    p.add_argument("--y", required=True)
    p.add_argument("--alpha")
    p.add_argument("--beta")
    p.add_argument("--horizon")

    p = add("eval", cmd_eval, "evaluate the patience inequality on one pair")
    for flag in ("--alpha", "--beta", "--x", "--y"):
        p.add_argument(flag, required=True)
    p.add_argument("--horizon")

    for name, func, text in (
        ("serene", cmd_serene, "is alpha more serene than beta"),
        ("patient", cmd_patient, "is alpha more patient than beta"),
        ("counterexample", cmd_counterexample, "witness pair against patience"),
    ):
        p = add(name, func, text)
        p.add_argument("--alpha", required=True)
        p.add_argument("--beta", required=True)
        p.add_argument("--horizon")

    p = add("threshold", cmd_threshold, "exponential factor beyond which Exp(a) beats Exp(b)")
    p.add_argument("--b", required=True)
    p.add_argument("--horizon", required=True)

    p = add("collapse", cmd_collapse, "infinite-horizon exponential comparison")
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    p.add_argument("--horizon")

    p = add("verify", cmd_verify, "run the oracle suites")
    p.add_argument("--suite", choices=["dominance", "serenity", "patience", "relation", "all"], default="all")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=200)
    p.add_argument("--tmax", type=int, default=6)
    p.add_argument("--grid", type=int, default=6)
    p.add_argument("--instances", type=int, default=200, help="oracle draws per outer case")
    return parser


def run(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        payload, code = args.func(args)
    except (InputError, SequenceError, HorizonMismatch, ParameterError, PreconditionError,
            ValueError, TypeError, KeyError) as exc:
        err = {"error": {"type": type(exc).__name__, "message": str(exc)}}
        print(json.dumps(err), file=sys.stderr)
        return 2
    _emit(args, payload)
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
