"""Command-line front end.

Exit status: 0 on success, 1 on a parse or configuration error, 2 when the
input is outside what the engine supports.
"""

from __future__ import annotations

import argparse
import json
import sys
from collections.abc import Sequence
from fractions import Fraction
from typing import Any, TextIO

from .decomp import decompose_pair_L, decompose_pair_Z, normalize
from .distinction import Classifier, Verdict
from .duality import mw_dual
from .errors import UnsupportedError
from .forms import Lform, RepForm, leaves, single_point, single_segment
from .jacquet import jacquet
from .order import enumerate_below, leq
from .segcore import Multisegment
from .support import ConfigError, Registry, load_registry
from .textio import ParseError, format_form, format_multisegment, parse_expr, parse_multisegment

__all__ = ["main", "run"]

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_UNSUPPORTED = 2


class _Context:
    def __init__(self, args: argparse.Namespace):
        self.registry: Registry = load_registry(args.support)
        self.classifier = Classifier(self.registry, middle_twist=Fraction(args.middle_twist))

    def expr(self, text: str) -> RepForm:
        return parse_expr(text, self.registry)

    def mseg(self, text: str) -> Multisegment:
        return parse_multisegment(text, self.registry)


def _sort_forms(forms: Sequence[RepForm]) -> list[str]:
    return sorted(format_form(f) for f in forms)


def _verdict_record(text: str, rep: RepForm, verdict: Verdict) -> dict[str, Any]:
    return {
        "input": text,
        "normalized": format_form(normalize(rep)),
        "verdict": verdict.status.value,
        "rules": [{"id": rid, "citation": cite} for rid, cite in verdict.justification],
        "notes": list(verdict.notes),
    }


def _classify(ctx: _Context, text: str, induced: bool) -> dict[str, Any]:
    rep = ctx.expr(text)
    verdict = ctx.classifier.classify_induced(rep) if induced else ctx.classifier.classify(rep)
    return _verdict_record(text, rep, verdict)


def _decompose(ctx: _Context, text: str) -> dict[str, Any]:
    rep = ctx.expr(text)
    parts = leaves(rep)
    segs = [single_segment(p) for p in parts]
    if len(parts) != 2 or any(s is None for s in segs):
        raise UnsupportedError("decompose needs a product of two single-segment factors")
    kinds = {type(p) for p in parts if single_point(p) is None}
    if len(kinds) > 1:
        raise UnsupportedError("decompose needs both factors in the same presentation")
    split = decompose_pair_L if kinds == {Lform} else decompose_pair_Z
    dec = split(segs[0], segs[1])  # type: ignore[arg-type]
    return {
        "input": text,
        "normalized": format_form(normalize(rep)),
        "irreducible": dec.irreducible,
        "sub": format_form(dec.sub) if dec.sub is not None else None,
        "quotient": format_form(dec.quotient) if dec.quotient is not None else None,
        "subquotients": _sort_forms(list(dec.subquotients)),
    }


def _print_verdict(rec: dict[str, Any], out: TextIO) -> None:
    print(rec["verdict"], file=out)
    print(f"normalized: {rec['normalized']}", file=out)
    for rule in rec["rules"]:
        print(f"rule: {rule['id']} ({rule['citation']})", file=out)
    for note in rec["notes"]:
        print(f"note: {note}", file=out)


def _emit(args: argparse.Namespace, rec: Any, plain: str, out: TextIO) -> None:
    if args.json:
        print(json.dumps(rec), file=out)
    else:
        print(plain, file=out)


def _cmd_classify(args: argparse.Namespace, ctx: _Context, out: TextIO) -> int:
    rec = _classify(ctx, args.expr, args.induced)
    if args.json:
        print(json.dumps(rec), file=out)
    else:
        _print_verdict(rec, out)
    return EXIT_OK


def _cmd_decompose(args: argparse.Namespace, ctx: _Context, out: TextIO) -> int:
    rec = _decompose(ctx, args.expr)
    if args.json:
        print(json.dumps(rec), file=out)
        return EXIT_OK
    print("irreducible" if rec["irreducible"] else "reducible", file=out)
    if rec["sub"] is not None:
        print(f"sub: {rec['sub']}", file=out)
    if rec["quotient"] is not None:
        print(f"quotient: {rec['quotient']}", file=out)
    for sq in rec["subquotients"]:
        print(f"subquotient: {sq}", file=out)
    return EXIT_OK


def _cmd_leq(args: argparse.Namespace, ctx: _Context, out: TextIO) -> int:
    result = leq(ctx.mseg(args.first), ctx.mseg(args.second))
    _emit(args, {"leq": result}, "true" if result else "false", out)
    return EXIT_OK


def _cmd_enumerate(args: argparse.Namespace, ctx: _Context, out: TextIO) -> int:
    below = sorted(format_multisegment(m) for m in enumerate_below(ctx.mseg(args.mseg)))
    _emit(args, below, "\n".join(below), out)
    return EXIT_OK


def _cmd_dual(args: argparse.Namespace, ctx: _Context, out: TextIO) -> int:
    dual = format_multisegment(mw_dual(ctx.mseg(args.mseg)))
    _emit(args, {"dual": dual}, dual, out)
    return EXIT_OK


def _cmd_jacquet(args: argparse.Namespace, ctx: _Context, out: TextIO) -> int:
    terms = jacquet(ctx.expr(args.expr), args.cut)
    recs = [
        {"left": format_form(t.left), "right": format_form(t.right), "multiplicity": t.multiplicity}
        for t in terms
    ]
    lines = [
        (f"{r['multiplicity']} * " if r["multiplicity"] != 1 else "") + f"{r['left']} (x) {r['right']}"
        for r in recs
    ]
    _emit(args, recs, "\n".join(lines), out)
    return EXIT_OK


def _cmd_batch(args: argparse.Namespace, ctx: _Context, out: TextIO) -> int:
    try:
        with open(args.file, encoding="utf-8") as fh:
            lines = fh.read().splitlines()
    except OSError as exc:
        raise ConfigError(f"cannot read batch file {args.file!r}: {exc.strerror}") from None
    status = EXIT_OK
    for line in lines:
        text = line.strip()
        try:
            rec = _classify(ctx, text, args.induced)
        except ParseError as exc:
            rec = {"input": text, "error": "parse", "message": str(exc)}
            status = max(status, EXIT_INPUT)
        except UnsupportedError as exc:
            rec = {"input": text, "error": "unsupported", "message": str(exc)}
            status = max(status, EXIT_UNSUPPORTED)
        except ValueError as exc:
            rec = {"input": text, "error": "invalid", "message": str(exc)}
            status = max(status, EXIT_INPUT)
        print(json.dumps(rec), file=out)
    return status


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--support",
        metavar="FILE",
        default=argparse.SUPPRESS,
        help="label registry (TOML); defaults to $SEGPERIOD_SUPPORT, then the built-in labels",
    )
    common.add_argument(
        "--middle-twist",
        metavar="T",
        default=argparse.SUPPRESS,
        help="exponent of the middle-orbit pairing for GL2 x GL2 induction (default 1)",
    )
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="JSON output")

    parser = argparse.ArgumentParser(
        prog="segperiod",
        description="Segment calculus and symplectic-period classification for GL_n(D), n <= 4.",
        parents=[common],
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", parents=[common], help="classify a representation")
    p.add_argument("expr")
    p.add_argument("--induced", action="store_true", help="treat EXPR as an ordered induction")
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("decompose", parents=[common], help="factors of a two-segment product")
    p.add_argument("expr")
    p.set_defaults(func=_cmd_decompose)

    p = sub.add_parser("leq", parents=[common], help="whether MSEG1 <= MSEG2")
    p.add_argument("first", metavar="MSEG1")
    p.add_argument("second", metavar="MSEG2")
    p.set_defaults(func=_cmd_leq)

    p = sub.add_parser("enumerate", parents=[common], help="all multisegments below MSEG")
    p.add_argument("mseg", metavar="MSEG")
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("dual", parents=[common], help="Moeglin-Waldspurger dual of MSEG")
    p.add_argument("mseg", metavar="MSEG")
    p.set_defaults(func=_cmd_dual)

    p = sub.add_parser("jacquet", parents=[common], help="Jacquet restriction r_(K, n-K)")
    p.add_argument("--cut", type=int, required=True, metavar="K")
    p.add_argument("expr")
    p.set_defaults(func=_cmd_jacquet)

    p = sub.add_parser("batch", parents=[common], help="classify one expression per line")
    p.add_argument("file", metavar="FILE")
    p.add_argument("--induced", action="store_true", help="treat every line as an ordered induction")
    p.set_defaults(func=_cmd_batch)
    return parser


def run(argv: Sequence[str] | None = None, out: TextIO | None = None, err: TextIO | None = None) -> int:
    out = out if out is not None else sys.stdout
    err = err if err is not None else sys.stderr
    parser = build_parser()
    args = parser.parse_args(argv)
    args.support = getattr(args, "support", None)
    args.json = getattr(args, "json", False)
    try:
        args.middle_twist = Fraction(getattr(args, "middle_twist", "1"))
    except (ValueError, ZeroDivisionError):
        print("error: --middle-twist must be a rational number", file=err)
        return EXIT_INPUT
    try:
        ctx = _Context(args)
        return args.func(args, ctx, out)
    except ParseError as exc:
        print(exc.render(), file=err)
        return EXIT_INPUT
    except ConfigError as exc:
        print(f"error: {exc}", file=err)
        return EXIT_INPUT
    except UnsupportedError as exc:
        print(f"unsupported: {exc}", file=err)
        return EXIT_UNSUPPORTED
    except ValueError as exc:
        print(f"error: {exc}", file=err)
        return EXIT_INPUT


def main() -> None:
    sys.exit(run())
