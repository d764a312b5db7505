"""Command line front end.

One subcommand per library operation, JSON on stdout for single
results, TSV or JSON lines for scans (streamed line by line, stable
order, so identical invocations are byte-identical).  Exit codes: 0 for
success or a valid system, 1 for semantically invalid input (the digit
set forms a pre-number system but fails the requested property), 2 for
malformed input.

Scans accept --jobs to spread work over processes; output order does
not depend on it.  RADIX_STATE_CAP overrides the rewrite verifier's
state-space cap.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from functools import partial

from . import constructions, expansions, minus_two, orbits, rewrite
from .constructions import FamilySpec
from .core import NumberSystemSpec, new_spec
from .errors import (
    DigitInBadSet,
    NoZeroExpansion,
    NotRepresentable,
    RadixError,
    SpecError,
)


def _digits_arg(text: str) -> list[int]:
    try:
        return [int(tok) for tok in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"digits must be comma-separated integers, got {text!r}"
        )


def _print_json(obj) -> None:
    print(json.dumps(obj), flush=True)


def _spec_of(args) -> NumberSystemSpec:
    return new_spec(args.base, args.digits)


def _pool_map(fn, items, jobs: int):
    """Map preserving order, inline for one job, processes otherwise."""
    items = list(items)
    if jobs <= 1 or len(items) <= 1:
        for item in items:
            yield fn(item)
        return
    chunk = max(1, len(items) // (jobs * 4))
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        yield from pool.map(fn, items, chunksize=chunk)


def cmd_check(args) -> int:
    spec = _spec_of(args)
    report = orbits.attractor(spec)
    try:
        ze = list(expansions.zero_expansion(spec).digits)
    except NoZeroExpansion:
        ze = None
    _print_json(
        {
            "valid": report.valid,
            "attractor": report.sorted_members(),
            "cycles": [list(c) for c in report.cycles],
            "zero_expansion": ze,
        }
    )
    return 0 if report.valid else 1


def cmd_expand(args) -> int:
    spec = _spec_of(args)
    exp = expansions.expand(spec, args.value)
    if args.pad_to is not None:
        exp = expansions.pad(exp, args.pad_to)
    _print_json(exp.to_json_dict())
    return 0


def cmd_attractor(args) -> int:
    report = orbits.attractor(_spec_of(args))
    _print_json(
        {
            "members": report.sorted_members(),
            "cycles": [list(c) for c in report.cycles],
            "contains_zero": report.contains_zero,
        }
    )
    return 0


def cmd_zero_expansion(args) -> int:
    _print_json(expansions.zero_expansion(_spec_of(args)).to_json_dict())
    return 0


def cmd_nfold(args) -> int:
    spec = _spec_of(args)
    compound = constructions.nfold(spec, args.n)
    valid = orbits.is_number_system(compound)
    _print_json(
        {
            "base": compound.base,
            "digits": list(compound.digits),
            "n": args.n,
            "valid": valid,
            "predicted_valid": constructions.nfold_validity_predicate(spec, args.n),
        }
    )
    return 0 if valid else 1


def cmd_badset(args) -> int:
    spec = _spec_of(args)
    blocked = constructions.bad_set(spec, args.u)
    _print_json(
        {
            "base": spec.base,
            "digits": list(spec.digits),
            "u": args.u,
            "members": sorted(blocked.members),
            "expansions": {
                str(value): list(exp.digits)
                for value, exp in sorted(blocked.sources.items())
            },
        }
    )
    return 0


def _family_row(k: int, *, spec: NumberSystemSpec, replace: int, u: int) -> dict:
    family = FamilySpec(spec, replace, u, k)
    member = constructions.shift_family(family)
    return {
        "base": member.base,
        "digits": list(member.digits),
        "replaced": replace,
        "u": u,
        "k": k,
        "shifted_digit": family.shifted_digit,
        "valid": orbits.is_number_system(member),
    }


def cmd_family(args) -> int:
    spec = _spec_of(args)
    fn = partial(_family_row, spec=spec, replace=args.replace, u=args.u)
    for row in _pool_map(fn, range(1, args.kmax + 1), args.jobs):
        _print_json(row)
    return 0


def cmd_translate_scan(args) -> int:
    spec = _spec_of(args)
    fn = partial(constructions.translate_candidate, spec, keep_zero=args.keep_zero)
    span = range(args.tmin, args.tmax + 1)
    flags = _pool_map(fn, span, args.jobs)
    if args.format == "tsv":
        for t, ok in zip(span, flags):
            if ok:
                print(t, flush=True)
    elif args.format == "jsonl":
        for t, ok in zip(span, flags):
            _print_json({"t": t, "valid": ok})
    else:
        _print_json({"valid_t": [t for t, ok in zip(span, flags) if ok]})
    return 0


def cmd_rewrite_verify(args) -> int:
    spec = _spec_of(args)
    family = FamilySpec(spec, args.replace, args.u, args.k)
    cap_text = os.environ.get("RADIX_STATE_CAP")
    cap = int(cap_text) if cap_text else None
    result = rewrite.verify_criterion(family, state_cap=cap)
    _print_json(
        {
            "family": {
                "base": spec.base,
                "digits": list(spec.digits),
                "replaced": args.replace,
                "u": args.u,
                "k": args.k,
                "shifted_digit": family.shifted_digit,
            },
            "all_escape": result.all_escape,
            "max_steps": result.max_steps,
            "stuck_word": list(result.stuck_word) if result.stuck_word else None,
        }
    )
    return 0 if result.all_escape else 1


def cmd_minus2_scan(args) -> int:
    fn = partial(minus_two.scan_pairs_for_low, hi=args.max)
    collected = [] if args.plot else None
    for row in _pool_map(fn, range(args.min, args.max), args.jobs):
        for v in row:
            if collected is not None:
                collected.append(v)
            if args.format == "tsv":
                if v.valid:
                    print(f"{v.low}\t{v.high}", flush=True)
            else:
                _print_json(
                    {
                        "d": v.low,
                        "D": v.high,
                        "valid": v.valid,
                        "conds": [
                            v.cond_parity,
                            v.cond_no3,
                            v.cond_geometry,
                            v.cond_power3,
                        ],
                        "lo": v.attractor_lo,
                        "hi": v.attractor_hi,
                    }
                )
    if args.plot:
        from .plotting import render_minus2_figure

        render_minus2_figure(collected, args.plot, args.min, args.max)
    return 0


def cmd_zero_digit_scan(args) -> int:
    spec = _spec_of(args)
    lengths = expansions.zero_digit_length_scan(spec, args.max)
    if args.format == "tsv":
        for cand, n in lengths.items():
            print(f"{cand}\t{n if n is not None else '-'}", flush=True)
    elif args.format == "jsonl":
        for cand, n in lengths.items():
            _print_json({"zero_digit": cand, "length": n})
    else:
        _print_json({"lengths": {str(cand): n for cand, n in lengths.items()}})
    if args.plot:
        from .plotting import render_zero_digit_figure

        render_zero_digit_figure(lengths, args.plot)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="radixns",
        description="Number systems over the integers with arbitrary digit sets.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    spec_args = argparse.ArgumentParser(add_help=False)
    spec_args.add_argument("--base", type=int, required=True, help="integer base, |base| >= 2")
    spec_args.add_argument(
        "--digits",
        type=_digits_arg,
        required=True,
        help="comma-separated digits; write --digits=-1,0,1 when the first is negative",
    )

    jobs_args = argparse.ArgumentParser(add_help=False)
    jobs_args.add_argument(
        "--jobs",
        type=int,
        default=os.cpu_count() or 1,
        help="worker processes for scans (default: available parallelism)",
    )

    p = sub.add_parser("check", parents=[spec_args], help="decide validity, report the attractor")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("expand", parents=[spec_args], help="minimal expansion of a value")
    p.add_argument("--value", type=int, required=True)
    p.add_argument("--pad-to", type=int, default=None, help="pad with zero-expansion copies")
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("attractor", parents=[spec_args], help="periodic orbits and members")
    p.set_defaults(func=cmd_attractor)

    p = sub.add_parser("zero-expansion", parents=[spec_args], help="minimal expansion of 0")
    p.set_defaults(func=cmd_zero_expansion)

    p = sub.add_parser("nfold", parents=[spec_args], help="compound system on base^n")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_nfold)

    p = sub.add_parser("badset", parents=[spec_args], help="digits blocked for shifting")
    p.add_argument("--u", type=int, required=True, help="shift size")
    p.set_defaults(func=cmd_badset)

    p = sub.add_parser("family", parents=[spec_args, jobs_args], help="shifted digit family members")
    p.add_argument("--replace", type=int, required=True, help="digit to shift")
    p.add_argument("--u", type=int, required=True)
    p.add_argument("--kmax", type=int, required=True, help="largest exponent")
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("translate-scan", parents=[spec_args, jobs_args], help="valid digit-set translations")
    p.add_argument("--tmin", type=int, required=True)
    p.add_argument("--tmax", type=int, required=True)
    p.add_argument("--keep-zero", action="store_true", help="translate nonzero digits only")
    p.add_argument("--format", choices=("tsv", "json", "jsonl"), default="tsv")
    p.set_defaults(func=cmd_translate_scan)

    p = sub.add_parser("rewrite-verify", parents=[spec_args], help="escape check for one family")
    p.add_argument("--replace", type=int, required=True)
    p.add_argument("--u", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=cmd_rewrite_verify)

    p = sub.add_parser("minus2-scan", parents=[jobs_args], help="classify base -2 digit pairs")
    p.add_argument("--min", type=int, required=True)
    p.add_argument("--max", type=int, required=True)
    p.add_argument("--format", choices=("tsv", "jsonl"), default="tsv")
    p.add_argument("--plot", default=None, help="also render the valid pairs to this file")
    p.set_defaults(func=cmd_minus2_scan)

    p = sub.add_parser("zero-digit-scan", parents=[spec_args], help="zero-expansion lengths per zero digit")
    p.add_argument("--max", type=int, required=True, help="largest |zero digit| to try")
    p.add_argument("--format", choices=("tsv", "json", "jsonl"), default="tsv")
    p.add_argument("--plot", default=None, help="also render the lengths to this file")
    p.set_defaults(func=cmd_zero_digit_scan)

    return parser


def _fail(exc: Exception, code: int) -> int:
    payload = {"error": type(exc).__name__, "message": str(exc)}
    if isinstance(exc, NotRepresentable):
        payload["cycle"] = list(exc.cycle)
    if isinstance(exc, DigitInBadSet):
        payload["bad_set"] = sorted(exc.bad_set)
    print(json.dumps(payload), file=sys.stderr, flush=True)
    return code


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except SpecError as exc:
        return _fail(exc, 2)
    except RadixError as exc:
        return _fail(exc, 1)
    except ValueError as exc:
        return _fail(exc, 2)


if __name__ == "__main__":
    sys.exit(main())
