"""Command line front end.

Reports are deterministic: identical invocations (including seed) emit
byte-identical JSON on stdout.  Timing goes to stderr only.  Exit codes:
0 when every verdict passed, 1 when any check FAILed, 2 for input errors.

Element indices in files and reports are 1-based; the Python API underneath
is 0-based and the conversion happens only at this boundary.  Polynomial
variables are likewise reported as 1-based (x1..xn).
"""

import argparse
import json
import os
import sys
import time
from fractions import Fraction

from . import __version__
from .errors import PoslabError
from .matroids import (
    basis_generating_polynomial,
    is_balanced,
    is_negatively_correlated,
    matroid_from_bases,
    named,
    pair_stats,
)
from .multipoly import MultiPoly
from .positroids import is_positroid
from .properties import (
    MAX_PLUS,
    MIN_PLUS,
    Sampler,
    c_rayleigh_check,
    hyperbolicity_check,
    is_lorentzian,
    is_valuated_matroid,
    stability_falsifier,
    strongly_rayleigh_check,
)
from .scalars import format_fixed, format_rational, parse_rational
from .tropical import (
    FlagChain,
    WeightVector,
    evaluate_lift,
    is_in_dressian,
    is_in_positive_dressian,
    is_valuated_flag,
    lift_to_lorentzian,
    lorentzian_schedule,
)
from .verdicts import FAIL


class InputError(Exception):
    """File or schema problem; maps to exit code 2."""


# ------------------------------------------------------------------ loading

def _load(path):
    try:
        with open(path) as fh:
            return json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"{path} is not valid JSON: {exc}") from exc


def _parse_matroid(obj):
    if not isinstance(obj, dict):
        raise InputError("matroid must be a JSON object")
    if "name" in obj:
        return named(obj["name"])
    try:
        n = obj["n"]
        bases = [[e - 1 for e in b] for b in obj["bases"]]
    except (KeyError, TypeError) as exc:
        raise InputError(f"matroid object needs 'n' and 'bases': {exc}") from exc
    if any(e < 0 or e >= n for b in bases for e in b):
        raise InputError("basis elements must lie in 1..n")
    ground = n
    if obj.get("labels") is not None:
        from .matroids import GroundSet

        ground = GroundSet(n, obj["labels"])
    return matroid_from_bases(ground, bases, rank=obj.get("rank"), validate=True)


def _parse_poly(obj):
    if not isinstance(obj, dict) or "n" not in obj or "terms" not in obj:
        raise InputError("polynomial object needs 'n' and 'terms'")
    terms = {}
    for item in obj["terms"]:
        try:
            exp = tuple(int(v) for v in item["exp"])
            coeff = parse_rational(item["coeff"])
        except (KeyError, TypeError, ValueError) as exc:
            raise InputError(f"bad term {item!r}: {exc}") from exc
        terms[exp] = terms.get(exp, Fraction(0)) + coeff
    return MultiPoly(obj["n"], terms)


def _parse_weights(obj):
    if not isinstance(obj, dict) or "matroid" not in obj or "weights" not in obj:
        raise InputError("weights object needs 'matroid' and 'weights'")
    matroid = _parse_matroid(obj["matroid"])
    convention = obj.get("convention", MIN_PLUS)
    if convention not in (MIN_PLUS, MAX_PLUS):
        raise InputError(f"convention must be '{MIN_PLUS}' or '{MAX_PLUS}'")
    values = {}
    for item in obj["weights"]:
        try:
            basis = tuple(sorted(e - 1 for e in item["basis"]))
            values[basis] = parse_rational(item["value"])
        except (KeyError, TypeError, ValueError) as exc:
            raise InputError(f"bad weight entry {item!r}: {exc}") from exc
    return matroid, WeightVector(matroid, values, convention)


def _parse_chain(obj):
    if not isinstance(obj, dict) or "parts" not in obj:
        raise InputError("chain object needs 'parts'")
    parts = [_parse_weights(p)[1] for p in obj["parts"]]
    return FlagChain(parts)


def _matroid_arg(args):
    if getattr(args, "name", None):
        return named(args.name)
    if getattr(args, "matroid", None):
        return _parse_matroid(_load(args.matroid))
    raise InputError("need --matroid FILE or --name NAME")


def _sampler(args):
    return Sampler(seed=args.seed, count=args.samples)


# -------------------------------------------------------------- serializing

_ELEMENT_KEYS = {"pair", "deleted", "contracted", "extra_basis", "S", "T",
                 "quad", "necklace", "underlying_matroid_bases", "i", "j",
                 "I", "J", "a"}


def _bump(value):
    """Shift 0-based element/variable indices to 1-based, recursively."""
    if isinstance(value, bool):
        return value
    if isinstance(value, int):
        return value + 1
    if isinstance(value, (list, tuple)):
        return [_bump(v) for v in value]
    return _jsonable(value)


def _jsonable(value, key=None):
    if isinstance(value, Fraction):
        return format_rational(value)
    if isinstance(value, dict):
        return {str(k): _jsonable(v, str(k)) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        if key in _ELEMENT_KEYS:
            return _bump(value)
        return [_jsonable(v, key) for v in value]
    if isinstance(value, int) and key in _ELEMENT_KEYS:
        return value + 1
    if isinstance(value, frozenset):
        return sorted(value)
    return value


def _verdict_entry(op, verdict):
    return {
        "op": op,
        "status": verdict.status,
        "certificate": verdict.certificate,
        "witness": _jsonable(verdict.witness) if verdict.witness is not None else None,
        "effort": _jsonable(verdict.effort),
    }


def _emit(args, command, verdicts_by_op, extras=None):
    overall = "PASS"
    for _, v in verdicts_by_op:
        if v.status == FAIL:
            overall = "FAIL"
            break
    report = {
        "tool": {"name": "poslab", "version": __version__},
        "command": command,
        "seed": args.seed,
        "verdicts": [_verdict_entry(op, v) for op, v in verdicts_by_op],
        "overall": overall,
    }
    if extras:
        report.update(extras)
    if args.json:
        sys.stdout.write(json.dumps(report, sort_keys=True, indent=2) + "\n")
    else:
        for op, v in verdicts_by_op:
            line = f"{op}: {v.status}"
            if v.certificate:
                line += f" [{v.certificate}]"
            sys.stdout.write(line + "\n")
            if v.witness is not None:
                sys.stdout.write(
                    f"  witness: {json.dumps(_jsonable(v.witness), sort_keys=True)}\n"
                )
        if extras:
            sys.stdout.write(json.dumps(_jsonable(extras), sort_keys=True) + "\n")
        sys.stdout.write(f"overall: {overall}\n")
    return 1 if overall == "FAIL" else 0


# ---------------------------------------------------------------- commands

def _cmd_validate(args):
    from . import verdicts as V
    from .errors import EmptyBases, ExchangeFailure, MixedCardinality

    try:
        m = _matroid_arg(args)
    except ExchangeFailure as exc:
        bad = V.failed({"clause": "exchange", "I": exc.I, "J": exc.J,
                        "a": exc.a})
        return _emit(args, ["validate"], [("validate_bases", bad)])
    except MixedCardinality as exc:
        bad = V.failed({"clause": "equal-size", "subset": exc.subset,
                        "expected": exc.expected})
        return _emit(args, ["validate"], [("validate_bases", bad)])
    except EmptyBases as exc:
        bad = V.failed({"clause": "nonempty", "detail": str(exc)})
        return _emit(args, ["validate"], [("validate_bases", bad)])
    ok = V.certified(
        "exchange-axiom",
        effort={"bases": len(m.bases), "rank": m.rank, "n": m.n},
    )
    return _emit(args, ["validate"], [("validate_bases", ok)])


def _cmd_positroid(args):
    m = _matroid_arg(args)
    return _emit(args, ["positroid"], [("is_positroid", is_positroid(m))])


def _cmd_correlated(args):
    m = _matroid_arg(args)
    return _emit(args, ["correlated"],
                 [("is_negatively_correlated", is_negatively_correlated(m))])


def _cmd_balanced(args):
    m = _matroid_arg(args)
    return _emit(args, ["balanced"], [("is_balanced", is_balanced(m))])


def _poly_or_basis_poly(args):
    if getattr(args, "poly", None):
        return _parse_poly(_load(args.poly))
    return basis_generating_polynomial(_matroid_arg(args))


def _cmd_rayleigh(args):
    f = _poly_or_basis_poly(args)
    c = parse_rational(args.c)
    v = c_rayleigh_check(f, c, sampler=_sampler(args))
    return _emit(args, ["rayleigh"], [("c_rayleigh", v)],
                 extras={"c": format_rational(c)})


def _cmd_strong_rayleigh(args):
    f = _poly_or_basis_poly(args)
    v = strongly_rayleigh_check(f, sampler=_sampler(args))
    return _emit(args, ["strong-rayleigh"], [("strongly_rayleigh", v)])


def _cmd_stable(args):
    f = _poly_or_basis_poly(args)
    v = stability_falsifier(f, sampler=_sampler(args))
    return _emit(args, ["stable"], [("stability", v)])


def _cmd_lorentzian(args):
    f = _parse_poly(_load(args.poly))
    return _emit(args, ["lorentzian"], [("is_lorentzian", is_lorentzian(f))])


def _cmd_hyperbolic(args):
    f = _parse_poly(_load(args.poly))
    try:
        direction = tuple(parse_rational(v) for v in args.direction.split(","))
    except ValueError as exc:
        raise InputError(f"bad --direction: {exc}") from exc
    v = hyperbolicity_check(f, direction, sampler=_sampler(args), cone=args.cone)
    return _emit(args, ["hyperbolic"], [("hyperbolicity", v)])


def _cmd_dressian(args):
    m, w = _parse_weights(_load(args.weights))
    checks = [("is_in_dressian", is_in_dressian(m, w))]
    if args.positive:
        checks.append(("is_in_positive_dressian", is_in_positive_dressian(m, w)))
    return _emit(args, ["dressian"], checks)


def _cmd_valuated(args):
    _, w = _parse_weights(_load(args.weights))
    v = is_valuated_matroid(w.as_discrete_function())
    return _emit(args, ["valuated"], [("is_valuated_matroid", v)])


def _cmd_flag(args):
    chain = _parse_chain(_load(args.chain))
    v = is_valuated_flag(chain)
    return _emit(args, ["flag"], [("is_valuated_flag", v)])


def _cmd_lift(args):
    _, w = _parse_weights(_load(args.weights))
    if args.t0:
        t0 = parse_rational(args.t0)
        fk = lift_to_lorentzian(w)
        f0 = evaluate_lift(fk, t0)
        v = is_lorentzian(f0)
        poly = {
            "n": f0.n,
            "terms": [
                {"exp": list(e), "coeff": format_rational(c)}
                for e, c in sorted(f0.terms.items())
            ],
        }
        return _emit(args, ["lift"], [("is_lorentzian", v)],
                     extras={"t0": format_rational(t0), "polynomial": poly})
    v = lorentzian_schedule(w, steps=args.steps)
    return _emit(args, ["lift"], [("lorentzian_schedule", v)])


def _cmd_reproduce(args):
    if args.target != "choe-wagner-L":
        raise InputError(f"unknown reproduction target {args.target!r}")
    m = named("choe-wagner-L")
    e_idx, f_idx = 10, 11
    st = pair_stats(m, e_idx, f_idx)
    both_neither = st.pr_both * st.pr_neither
    split = st.pr_i_only * st.pr_j_only
    computed = {
        "pair": [m.ground.label(e_idx), m.ground.label(f_idx)],
        "pr_both_times_pr_neither": format_fixed(both_neither),
        "pr_i_only_times_pr_j_only": format_fixed(split),
        "pr_both_times_pr_neither_exact": format_rational(both_neither),
        "pr_i_only_times_pr_j_only_exact": format_rational(split),
        "matches_expected": (
            format_fixed(both_neither) == "0.04355"
            and format_fixed(split) == "0.04298"
        ),
    }
    nc = is_negatively_correlated(m)
    return _emit(args, ["reproduce"],
                 [("is_negatively_correlated", nc)],
                 extras={"reproduction": computed})


# ------------------------------------------------------------------- parser

def _add_matroid_opts(p):
    p.add_argument("--matroid", help="matroid JSON file")
    p.add_argument("--name", help="named corpus matroid (fano, vamos, "
                                  "choe-wagner-L, uniform-K-N)")


def _build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true",
                        help="emit a deterministic JSON report on stdout")
    common.add_argument("--seed", type=int,
                        default=int(os.environ.get("POSLAB_SEED", "0")),
                        help="sampling seed (default: POSLAB_SEED or 0)")
    common.add_argument("--samples", type=int, default=1000,
                        help="sample budget per falsifier target")
    parser = argparse.ArgumentParser(
        prog="poslab",
        description="Exact matroid / polynomial positivity checks",
    )
    sub = parser.add_subparsers(dest="cmd", required=True)

    def add_parser(name, **kw):
        return sub.add_parser(name, parents=[common], **kw)

    p = add_parser("validate", help="basis exchange validation")
    _add_matroid_opts(p)
    p.set_defaults(fn=_cmd_validate)

    p = add_parser("positroid", help="necklace round-trip recognition")
    _add_matroid_opts(p)
    p.set_defaults(fn=_cmd_positroid)

    p = add_parser("correlated", help="negative correlation of all pairs")
    _add_matroid_opts(p)
    p.set_defaults(fn=_cmd_correlated)

    p = add_parser("balanced", help="negative correlation of all minors")
    _add_matroid_opts(p)
    p.set_defaults(fn=_cmd_balanced)

    p = add_parser("rayleigh", help="c-Rayleigh check on the orthant")
    _add_matroid_opts(p)
    p.add_argument("--poly", help="polynomial JSON file (instead of a matroid)")
    p.add_argument("--c", default="1", help="Rayleigh constant, e.g. 8/7")
    p.set_defaults(fn=_cmd_rayleigh)

    p = add_parser("strong-rayleigh",
                       help="Rayleigh differences on all of R^n")
    _add_matroid_opts(p)
    p.add_argument("--poly", help="polynomial JSON file (instead of a matroid)")
    p.set_defaults(fn=_cmd_strong_rayleigh)

    p = add_parser("stable", help="real-stability line falsifier")
    _add_matroid_opts(p)
    p.add_argument("--poly", help="polynomial JSON file (instead of a matroid)")
    p.set_defaults(fn=_cmd_stable)

    p = add_parser("lorentzian", help="exact Lorentzian certification")
    p.add_argument("--poly", required=True, help="polynomial JSON file")
    p.set_defaults(fn=_cmd_lorentzian)

    p = add_parser("hyperbolic", help="hyperbolicity line falsifier")
    p.add_argument("--poly", required=True, help="polynomial JSON file")
    p.add_argument("--direction", required=True,
                   help="comma-separated rationals, e.g. 1,1,1")
    p.add_argument("--cone", action="store_true",
                   help="also test nonneg-orthant cone containment")
    p.set_defaults(fn=_cmd_hyperbolic)

    p = add_parser("dressian", help="three-term tropical relations")
    p.add_argument("--weights", required=True, help="weights JSON file")
    p.add_argument("--positive", action="store_true",
                   help="also check the positive part")
    p.set_defaults(fn=_cmd_dressian)

    p = add_parser("valuated", help="valuated matroid (M-concavity) check")
    p.add_argument("--weights", required=True, help="weights JSON file")
    p.set_defaults(fn=_cmd_valuated)

    p = add_parser("flag", help="valuated flag incidence relations")
    p.add_argument("--chain", required=True, help="chain JSON file")
    p.set_defaults(fn=_cmd_flag)

    p = add_parser("lift", help="Lorentzian lift of a weight vector")
    p.add_argument("--weights", required=True, help="weights JSON file")
    p.add_argument("--t0", help="evaluate the lift at this rational t0")
    p.add_argument("--steps", type=int, default=10,
                   help="schedule length when no --t0 is given")
    p.set_defaults(fn=_cmd_lift)

    p = add_parser("reproduce", help="re-derive published exact values")
    p.add_argument("target", help="currently: choe-wagner-L")
    p.set_defaults(fn=_cmd_reproduce)

    return parser


def main(argv=None):
    parser = _build_parser()
    args = parser.parse_args(argv)
    t0 = time.perf_counter()
    try:
        code = args.fn(args)
    except (InputError, PoslabError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    sys.stderr.write(f"elapsed: {time.perf_counter() - t0:.3f}s\n")
    return code


if __name__ == "__main__":
    sys.exit(main())
