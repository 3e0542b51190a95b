"""Command-line front end; one subcommand per public operation.

Output is JSON by default (``--format plain`` prints the same information
as key/value lines).  Exit codes: 0 success, 1 usage or parse error,
2 precision exhausted, 3 a check/verify subcommand answered "no".  The
environment variable ``BEATTYSEQ_INTERVAL_DIGITS`` overrides the default
precision used when quadratic values must be enclosed in intervals.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import contfrac as cfm
from . import exactreal as xr
from . import fraenkel as fr
from . import sturmian as st
from .beatty import BeattySpec, count_below, enumerate_terms, membership, term
from .circleplot import circle_svg
from .errors import BeattyseqError, PrecisionExhausted
from .sturmian import Word

_ENV_DIGITS = "BEATTYSEQ_INTERVAL_DIGITS"


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse would sys.exit(2); we want exit 1
        raise UsageError(message)


def _real(text: str):
    try:
        return xr.parse_real(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _spec(args, alpha_attr="alpha", offset_attr="offset") -> BeattySpec:
    return BeattySpec(_real(getattr(args, alpha_attr)), _real(getattr(args, offset_attr)))


def _pair(args) -> fr.TilePair:
    return fr.TilePair(
        BeattySpec(_real(args.alpha), _real(args.offset)),
        BeattySpec(_real(args.beta), _real(args.beta_offset)),
    )


def build_parser() -> _Parser:
    p = _Parser(prog="beattyseq", description=__doc__.splitlines()[0])
    p.add_argument("--format", choices=("json", "plain"), default="json")
    sub = p.add_subparsers(dest="command", required=True)

    def cmd(name, help_, *flags):
        sp = sub.add_parser(name, help=help_)
        for flag, kw in flags:
            sp.add_argument(flag, **kw)
        return sp

    spec_flags = [
        ("--alpha", dict(required=True, help="density literal")),
        ("--offset", dict(default="0", help="offset literal (default 0)")),
    ]
    pair_flags = spec_flags + [
        ("--beta", dict(required=True)),
        ("--beta-offset", dict(default="0", dest="beta_offset")),
    ]

    cmd("member", "is k in the sequence", *spec_flags,
        ("--k", dict(type=int, required=True)))
    cmd("enumerate", "terms up to a bound", *spec_flags,
        ("--bound", dict(type=int, required=True)))
    cmd("count", "how many terms lie below k", *spec_flags,
        ("--k", dict(type=int, required=True)))
    cmd("term", "the n-th term", *spec_flags,
        ("--n", dict(type=int, required=True)))
    cmd("tile-check", "evaluate the five tiling conditions", *pair_flags)
    cmd("tile-verify", "brute-force the window [1, N]", *pair_flags,
        ("--window", dict(type=int, required=True)))
    cmd("tile-check-z", "two-sided tiling conditions", *pair_flags)
    cmd("cf", "continued fraction expansion",
        ("--value", dict(required=True)),
        ("--max-terms", dict(type=int, default=64, dest="max_terms")))
    cmd("continuants", "continuants q_0..q_count",
        ("--value", dict(required=True)),
        ("--count", dict(type=int, required=True)))
    cmd("ostrowski", "greedy digits of m over the continuants",
        ("--value", dict(required=True)),
        ("--m", dict(type=int, required=True)))
    cmd("word", "characteristic word prefix",
        ("--alpha", dict(required=True)),
        ("--m", dict(type=int, required=True)))
    cmd("decompose", "factor C_m into continuant prefixes",
        ("--alpha", dict(required=True)),
        ("--m", dict(type=int, required=True)))
    cmd("verify-decompose", "check expand(decompose(m)) == C_m",
        ("--alpha", dict(required=True)),
        ("--m", dict(type=int, required=True)))
    cmd("spacing", "verify the best-approximation spacing at index t",
        ("--alpha", dict(required=True)),
        ("--t", dict(type=int, required=True)),
        ("--max-terms", dict(type=int, default=64, dest="max_terms")))
    cmd("morphism", "apply a 0/1 morphism to a word",
        ("--word", dict(required=True)),
        ("--one", dict(required=True, help="image of 1, e.g. 10")),
        ("--zero", dict(required=True, help="image of 0, e.g. 1")))
    cmd("circle-svg", "emit the circle plot as SVG", *pair_flags,
        ("--k-max", dict(type=int, default=16, dest="k_max")),
        ("--out", dict(default=None, help="output path (default stdout)")))
    return p


# each handler returns (payload, exit_code)

def _run_member(a):
    return {"member": membership(_spec(a), a.k)}, 0


def _run_enumerate(a):
    return {"terms": enumerate_terms(_spec(a), a.bound)}, 0


def _run_count(a):
    return {"count": count_below(_spec(a), a.k)}, 0


def _run_term(a):
    return {"term": term(_spec(a), a.n)}, 0


def _verdict_code(v):
    return {"yes": 0, "no": 3, "unknown": 2}[v.tiles]


def _run_tile_check(a):
    v = fr.check_conditions(_pair(a))
    return v.as_json(), _verdict_code(v)


def _run_tile_verify(a):
    r = fr.brute_force_tiling(_pair(a), a.window)
    return r.as_json(), 0 if r.tiles else 3


def _run_tile_check_z(a):
    v = fr.check_conditions_z(_pair(a))
    return v.as_json(), _verdict_code(v)


def _run_cf(a):
    cf = cfm.cf_expand(_real(a.value), a.max_terms)
    return {
        "kind": cf.kind.value,
        "initial": list(cf.initial),
        "period": list(cf.period),
    }, 0


def _run_continuants(a):
    cf = cfm.cf_expand(_real(a.value))
    return {"q": cfm.continuants(cf, a.count)}, 0


def _run_ostrowski(a):
    cf = cfm.cf_expand(_real(a.value))
    digits = cfm.ostrowski_expand(a.m, cf)
    return {
        "digits_lsb": list(digits.digits),
        "t": digits.t,
        "rendered": str(digits),
        "valid": cfm.validate_ostrowski(digits, cf),
    }, 0


def _run_word(a):
    w = st.char_word(_real(a.alpha), a.m)
    return {"word": w.to01(), "length": len(w)}, 0


def _run_decompose(a):
    d = st.brown_decompose(_real(a.alpha), a.m)
    return {"kind": d.kind, "factors": d.as_json(), "text": str(d)}, 0


def _run_verify_decompose(a):
    alpha = _real(a.alpha)
    d = st.brown_decompose(alpha, a.m)
    ok = st.expand_decomposition(d, alpha) == st.char_word(alpha, a.m)
    return {"ok": ok, "m": a.m, "text": str(d)}, 0 if ok else 3


def _run_spacing(a):
    cf = cfm.cf_expand(_real(a.alpha), a.max_terms)
    qs = cfm.continuants(cf, a.t + 1)
    ok = cfm.check_spacing(cf, a.t)
    return {"ok": ok, "t": a.t, "q_t": qs[a.t], "q_next": qs[a.t + 1]}, 0 if ok else 3


def _run_morphism(a):
    w = st.apply_morphism(Word.from01(a.word), {1: a.one, 0: a.zero})
    return {"word": w.to01(), "length": len(w)}, 0


def _run_circle_svg(a):
    svg = circle_svg(_pair(a), a.k_max)
    if a.out:
        with open(a.out, "w", encoding="utf-8") as fh:
            fh.write(svg)
        return {"written": a.out, "bytes": len(svg.encode())}, 0
    return ("svg", svg), 0


_HANDLERS = {
    "member": _run_member,
    "enumerate": _run_enumerate,
    "count": _run_count,
    "term": _run_term,
    "tile-check": _run_tile_check,
    "tile-verify": _run_tile_verify,
    "tile-check-z": _run_tile_check_z,
    "cf": _run_cf,
    "continuants": _run_continuants,
    "ostrowski": _run_ostrowski,
    "word": _run_word,
    "decompose": _run_decompose,
    "verify-decompose": _run_verify_decompose,
    "spacing": _run_spacing,
    "morphism": _run_morphism,
    "circle-svg": _run_circle_svg,
}


def _emit(payload, fmt: str, out=None) -> None:
    out = out or sys.stdout
    if isinstance(payload, tuple) and payload[0] == "svg":
        out.write(payload[1])
        return
    if fmt == "json":
        json.dump(payload, out, separators=(",", ":"), sort_keys=True)
        out.write("\n")
        return
    for key, val in payload.items():
        if isinstance(val, list):
            val = " ".join(json.dumps(v, sort_keys=True) if isinstance(v, dict) else str(v) for v in val)
        out.write(f"{key}: {val}\n")


def _emit_error(kind: str, message: str, fmt: str) -> None:
    _emit({"error": {"type": kind, "message": message}}, fmt)


def main(argv=None) -> int:
    digits = os.environ.get(_ENV_DIGITS)
    if digits:
        try:
            xr.set_default_interval_digits(int(digits))
        except ValueError:
            print(f"invalid {_ENV_DIGITS}={digits!r}", file=sys.stderr)
            return 1
    fmt = "json"
    try:
        args = build_parser().parse_args(argv)
        fmt = args.format
        payload, code = _HANDLERS[args.command](args)
    except UsageError as exc:
        _emit_error("usage", str(exc), fmt)
        return 1
    except PrecisionExhausted as exc:
        _emit_error("PrecisionExhausted", str(exc), fmt)
        return 2
    except (BeattyseqError, ValueError) as exc:
        _emit_error(type(exc).__name__, str(exc), fmt)
        return 1
    _emit(payload, fmt)
    return code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
