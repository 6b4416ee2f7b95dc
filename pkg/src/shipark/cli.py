"""Command-line front end.

Every subcommand maps to exactly one library operation; no business logic
lives here.  Inputs come from flags, from files via ``@path`` values, or
from standard input as JSON.  Output is canonical one-line JSON by
default; ``--format text`` switches to the compact text forms and
``--pretty`` to human-readable layouts.  Domain errors exit with status 1
and a machine-readable ``{"error": CODE, "message": ...}`` on stderr;
usage errors exit with status 2.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .contraction import center, contract, maxinv, s_park, s_park_steps
from .enumeration import (
    enum_parking_functions,
    enum_valid_pairs,
    enum_words,
    resolve_jobs,
    verify_bijection,
)
from .errors import ShiparkError
from .geometry import pair_of_point, point_from_json, rational_point, representative_point
from .inverse import invert_steps
from .labeling import label_intervals
from .model import (
    GroundSet,
    ParkingFn,
    ValidPair,
    Word,
    compact_ints,
    intervals_from_text,
    intervals_to_list,
    intervals_to_text,
    pair_from_dict,
    pair_to_dict,
    parking_from_dict,
    parking_from_text,
    parking_to_dict,
    parse_compact_ints,
    validate_pair,
    word_from_text,
)
from .render import render


def _dumps(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


def _value_of(raw: str) -> str:
    """Flag values starting with @ name a file holding the actual value."""
    if raw.startswith("@"):
        return Path(raw[1:]).read_text().strip()
    return raw


def _stdin_payload() -> dict:
    text = sys.stdin.read()
    return json.loads(text)


def _domain_from(args) -> tuple[int, ...] | None:
    if getattr(args, "domain", None) is None:
        return None
    return parse_compact_ints(_value_of(args.domain))


def _word_from_args(args) -> Word:
    if args.word is None:
        data = _stdin_payload()
        return Word.of(data["word"])
    text = _value_of(args.word)
    if text.lstrip().startswith("["):
        return Word.of(json.loads(text))
    return word_from_text(text)


def _pair_from_args(args) -> ValidPair:
    if args.word is None:
        return pair_from_dict(_stdin_payload())
    word = _word_from_args(args)
    raw = _value_of(args.intervals) if args.intervals else "-"
    if raw.lstrip().startswith("["):
        arcs = [tuple(iv) for iv in json.loads(raw)]
    else:
        arcs = intervals_from_text(raw)
    return validate_pair(word, arcs)


def _fn_from_args(args) -> ParkingFn:
    if args.fn is None:
        return parking_from_dict(_stdin_payload())
    text = _value_of(args.fn)
    if text.lstrip().startswith("{"):
        return parking_from_dict(json.loads(text))
    return parking_from_text(text, _domain_from(args))


def _emit(args, text: str) -> None:
    if not text.endswith("\n"):
        text += "\n"
    if getattr(args, "output", None):
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)


def _emit_fn(args, f: ParkingFn) -> None:
    if args.pretty:
        top = "a : " + " ".join(str(a) for a in f.ground)
        bot = "f : " + " ".join(str(v) for v in f.values)
        _emit(args, top + "\n" + bot)
    elif args.format == "text":
        _emit(args, compact_ints(f.values))
    else:
        _emit(args, _dumps(parking_to_dict(f)))


def _emit_pair(args, p: ValidPair) -> None:
    if args.pretty:
        _emit(args, render(p, "ascii"))
    elif args.format == "text":
        _emit(args, str(p))
    else:
        _emit(args, _dumps(pair_to_dict(p)))


def _emit_word(args, w: Word) -> None:
    if args.format == "text" or args.pretty:
        _emit(args, str(w))
    else:
        _emit(args, _dumps({"word": list(w.letters)}))


# -- handlers -----------------------------------------------------------------


def _cmd_label(args) -> int:
    pair = _pair_from_args(args)
    _emit_fn(args, label_intervals(pair))
    return 0


def _peel_trace(rows) -> list[str]:
    lines = []
    for fn, step in rows:
        dom = compact_ints(fn.ground.elements)
        if step is None:
            word = s_park(fn)
            lines.append(
                f"f={compact_ints(fn.values)} A={dom} | a=- b=- c=- | "
                f"f_Z={compact_ints(fn.values)} Z={dom} | w={word}"
            )
        else:
            zvals = step.decomposition.restriction.values
            zdom = step.decomposition.center.elements
            lines.append(
                f"f={compact_ints(fn.values)} A={dom} | "
                f"a={step.pivot_letter} b={step.pivot_value} c={step.cut_position} | "
                f"f_Z={compact_ints(zvals)} Z={compact_ints(zdom)} | w={step.prefix}"
            )
    return lines


def _cmd_invert(args) -> int:
    f = _fn_from_args(args)
    pair, rows = invert_steps(f)
    if args.trace_peel:
        lines = _peel_trace(rows)
        lines.append(f"=> {pair}")
        _emit(args, "\n".join(lines))
        return 0
    _emit_pair(args, pair)
    return 0


def _cmd_contract(args) -> int:
    _emit_fn(args, contract(_word_from_args(args)))
    return 0


def _cmd_spark(args) -> int:
    f = _fn_from_args(args)
    if args.trace_spark:
        steps = s_park_steps(f)
        _emit(args, "\n".join(compact_ints(s) for s in steps))
        return 0
    _emit_word(args, s_park(f))
    return 0


def _cmd_maxinv(args) -> int:
    arcs = maxinv(_word_from_args(args))
    if args.format == "text" or args.pretty:
        _emit(args, intervals_to_text(arcs))
    else:
        _emit(args, _dumps(intervals_to_list(arcs)))
    return 0


def _cmd_center(args) -> int:
    dec = center(_fn_from_args(args))
    if args.format == "text" or args.pretty:
        _emit(
            args,
            f"Z={compact_ints(dec.center.elements)} "
            f"f_Z={compact_ints(dec.restriction.values)}",
        )
    else:
        _emit(
            args,
            _dumps(
                {
                    "center": list(dec.center),
                    "zeta": dec.zeta,
                    "restriction": parking_to_dict(dec.restriction),
                }
            ),
        )
    return 0


def _cmd_enumerate(args) -> int:
    if args.n is None and args.domain is None:
        raise SystemExit("enumerate requires --n or --domain")
    ground = GroundSet.full(args.n) if args.n else GroundSet.of(_domain_from(args))
    text = args.format == "text"
    if args.what == "words":
        items = enum_words(ground)
        fmt = (lambda w: str(w)) if text else (lambda w: _dumps({"word": list(w.letters)}))
    elif args.what == "pairs":
        items = enum_valid_pairs(ground)
        fmt = (lambda p: str(p)) if text else (lambda p: _dumps(pair_to_dict(p)))
    else:
        items = enum_parking_functions(ground)
        fmt = (lambda f: compact_ints(f.values)) if text else (lambda f: _dumps(parking_to_dict(f)))
    if args.count:
        _emit(args, str(sum(1 for _ in items)))
        return 0
    out = sys.stdout if not args.output else open(args.output, "w")
    try:
        for item in items:
            out.write(fmt(item) + "\n")
    finally:
        if args.output:
            out.close()
    return 0


def _cmd_verify(args) -> int:
    report = verify_bijection(args.n, jobs=resolve_jobs(args.jobs))
    if args.pretty:
        ok = "yes" if report.success else "NO"
        _emit(
            args,
            f"n={report.n} pairs={report.pair_count} parking={report.parking_count} "
            f"expected={report.expected} collisions={report.collision_count} "
            f"failures={report.failure_count} missed={report.missed_count} "
            f"elapsed={report.elapsed:.3f}s success={ok}",
        )
    else:
        _emit(args, report.to_json())
    return 0 if report.success else 1


def _cmd_point_to_pair(args) -> int:
    if args.point is None:
        point = rational_point(_stdin_payload())
    else:
        text = _value_of(args.point)
        if text.lstrip().startswith("["):
            point = point_from_json(text)
        else:
            point = rational_point(text.split(","))
    _emit_pair(args, pair_of_point(point))
    return 0


def _cmd_pair_to_point(args) -> int:
    pair = _pair_from_args(args)
    point = representative_point(pair, args.n)
    if args.format == "text" or args.pretty:
        _emit(args, ",".join(point.to_list()))
    else:
        _emit(args, point.to_json())
    return 0


def _cmd_render(args) -> int:
    if args.fn is not None:
        obj: ValidPair | ParkingFn = _fn_from_args(args)
    elif args.word is not None:
        obj = _pair_from_args(args)
    else:
        data = _stdin_payload()
        obj = pair_from_dict(data) if "word" in data else parking_from_dict(data)
    _emit(args, render(obj, args.format))
    return 0


# -- parser -------------------------------------------------------------------


def _add_common(sub, *, word=False, intervals=False, fn=False, domain=False, n=False):
    if word:
        sub.add_argument("--word", help="compact word like 843967125, JSON array, or @file")
    if intervals:
        sub.add_argument("--intervals", help="interval list like 1-6,3-8,6-9 ('-' for none)")
    if fn:
        sub.add_argument("--fn", help="compact function like 341183414, JSON object, or @file")
    if domain:
        sub.add_argument("--domain", help="domain letters like 3,4,6,7,8,9 (with compact --fn)")
    if n:
        sub.add_argument("--n", type=int, help="ambient size n")
    sub.add_argument("--format", choices=("json", "text"), default="json", help="output form")
    sub.add_argument("--pretty", action="store_true", help="human-readable output")
    sub.add_argument("--output", help="write output to this file instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="shipark",
        description="Shi arrangement regions, their parking-function labels, and the inverse map.",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    s = subs.add_parser("label", help="label a valid pair")
    _add_common(s, word=True, intervals=True)
    s.set_defaults(handler=_cmd_label)

    s = subs.add_parser("invert", help="recover the valid pair of a parking function")
    _add_common(s, fn=True, domain=True)
    s.add_argument("--trace-peel", action="store_true", help="print one row per peel level")
    s.set_defaults(handler=_cmd_invert)

    s = subs.add_parser("contract", help="contraction of a word")
    _add_common(s, word=True)
    s.set_defaults(handler=_cmd_contract)

    s = subs.add_parser("spark", help="s-parking of a central function")
    _add_common(s, fn=True, domain=True)
    s.add_argument("--trace-spark", action="store_true", help="print one shelf state per step")
    s.set_defaults(handler=_cmd_spark)

    s = subs.add_parser("maxinv", help="maximal inversion intervals of a word")
    _add_common(s, word=True)
    s.set_defaults(handler=_cmd_maxinv)

    s = subs.add_parser("center", help="center decomposition of a parking function")
    _add_common(s, fn=True, domain=True)
    s.set_defaults(handler=_cmd_center)

    s = subs.add_parser("enumerate", help="stream words, pairs, or parking functions")
    s.add_argument("--what", choices=("words", "pairs", "functions"), default="pairs")
    s.add_argument("--count", action="store_true", help="print only the count")
    _add_common(s, domain=True, n=True)
    s.set_defaults(handler=_cmd_enumerate)

    s = subs.add_parser("verify", help="verify the bijection for {1..n}")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--jobs", type=int, default=None, help="worker threads (default $SHIPARK_JOBS or 1)")
    s.add_argument("--format", choices=("json", "text"), default="json")
    s.add_argument("--pretty", action="store_true")
    s.add_argument("--output", help="write output to this file instead of stdout")
    s.set_defaults(handler=_cmd_verify)

    s = subs.add_parser("point-to-pair", help="valid pair of the region containing a point")
    s.add_argument("--point", help='coordinates like 1/2,3/4,0 or JSON ["1/2","3/4","0"]')
    _add_common(s)
    s.set_defaults(handler=_cmd_point_to_pair)

    s = subs.add_parser("pair-to-point", help="exact rational point inside a region")
    _add_common(s, word=True, intervals=True, n=True)
    s.set_defaults(handler=_cmd_pair_to_point)

    s = subs.add_parser("render", help="draw a pair or function as ascii or svg")
    s.add_argument("--word", help="compact word (renders a pair with --intervals)")
    s.add_argument("--intervals", help="interval list for the pair")
    s.add_argument("--fn", help="compact function (renders column stacks)")
    s.add_argument("--domain", help="domain for a compact --fn")
    s.add_argument("--format", choices=("ascii", "svg"), default="ascii")
    s.add_argument("--pretty", action="store_true", help=argparse.SUPPRESS)
    s.add_argument("--output", help="write output to this file instead of stdout")
    s.set_defaults(handler=_cmd_render)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except ShiparkError as err:
        sys.stderr.write(_dumps({"error": err.code, "message": str(err)}) + "\n")
        return 1


if __name__ == "__main__":
    sys.exit(main())
