"""Command-line front end.

Exit codes: 0 success (or entailment holds), 1 semantic negative
(entailment fails, table rejected, audit violations), 2 usage, input or
precondition error. File arguments accept ``-`` for stdin.
"""

from __future__ import annotations

import argparse
import contextlib
import io
import sys
from pathlib import Path
from typing import Sequence

from .aggregate import NSPair, aggregate_fv, aggregate_ns, parse_policy
from .assignment import (
    NSTriple,
    audit_fv,
    audit_ns,
    monomial_pairs,
    synthesize,
    triple_of,
    trinv,
)
from .dynamics import bayes_fv, bayes_ns, jeffrey_fv, jeffrey_ns, jeffrey_partial
from .errors import BDError, TableRejected
from .formula import CNF, DNF, normal_form, parse
from .model import FourVector, eval_fv, eval_ns
from .rational import format_rational, parse_rationals
from .semantics import entails
from .serialize import model_from_json, model_to_json, pairs_from_json, table_from_json

__all__ = ["run", "main"]


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


class _Context:
    def __init__(self, stdin: bytes):
        self.stdin = stdin
        self.out = io.StringIO()

    def read(self, path: str) -> str:
        if path == "-":
            return self.stdin.decode("utf-8")
        return Path(path).read_text(encoding="utf-8")

    def emit(self, text: str, path: str | None = None):
        if path is None or path == "-":
            self.out.write(text)
        else:
            Path(path).write_text(text, encoding="utf-8")

    def print(self, *lines: str):
        for line in lines:
            self.out.write(line + "\n")


def _load_model(ctx: _Context, path: str):
    return model_from_json(ctx.read(path)).check()


def _parse_partial(text: str) -> dict[str, str]:
    out = {}
    for item in text.split(","):
        cell, sep, value = item.partition("=")
        if not sep:
            raise ValueError(f"partial target entries look like b=1/2, not {item!r}")
        cell = cell.strip()
        if cell in out:
            raise ValueError(f"cell {cell} given twice")
        out[cell] = value.strip()
    return out


# -- commands --------------------------------------------------------------


def cmd_parse(ctx: _Context, args) -> int:
    f = parse(args.formula)
    if args.dnf or args.cnf:
        ctx.print(str(normal_form(f, CNF if args.cnf else DNF)))
    else:
        ctx.print(repr(f))
    return 0


def cmd_entail(ctx: _Context, args) -> int:
    verdict = entails(parse(args.premise), parse(args.conclusion), args.mode)
    if verdict:
        ctx.print("holds")
        return 0
    ctx.print("does not hold", f"countermodel: {verdict.countermodel}")
    return 1


def cmd_eval(ctx: _Context, args) -> int:
    m = _load_model(ctx, args.model)
    f = parse(args.formula)
    ctx.print(str(eval_fv(m, f)) if args.four else format_rational(eval_ns(m, f)))
    return 0


def cmd_synthesize(ctx: _Context, args) -> int:
    table = table_from_json(ctx.read(args.assignment))
    try:
        m = synthesize(table)
    except TableRejected as exc:
        ctx.print("rejected: negative mass on")
        for lits, w in exc.witnesses.items():
            ctx.print(f"  {{{','.join(str(l) for l in sorted(lits))}}}: {format_rational(w)}")
        return 1
    ctx.emit(model_to_json(m, full=args.full), args.output)
    return 0


def cmd_check(ctx: _Context, args) -> int:
    table = table_from_json(ctx.read(args.assignment))
    pairs = pairs_from_json(ctx.read(args.pairs)) if args.pairs else monomial_pairs(table.atoms)
    ns, fv = audit_ns(table, pairs), audit_fv(table, pairs)
    for label, report in (("ns", ns), ("fv", fv)):
        body = str(report)
        if report.ok:
            ctx.print(f"{label}: {body}")
        else:
            ctx.print(f"{label}: {len(report.violations)} violation(s)")
            ctx.print(*("  " + line for line in body.splitlines()))
    return 0 if ns.ok and fv.ok else 1


def cmd_update(ctx: _Context, args) -> int:
    m = _load_model(ctx, args.model)
    f = parse(args.target)
    if args.jeffrey is not None:
        out = jeffrey_ns(m, f, args.jeffrey)
    elif args.bayes is not None:
        out = bayes_ns(m, f, args.bayes)
    elif args.fv is not None:
        out = jeffrey_fv(m, f, FourVector.parse(args.fv))
    elif args.fv_bayes is not None:
        out = bayes_fv(m, f, args.fv_bayes)
    else:
        out = jeffrey_partial(m, f, _parse_partial(args.partial))
    ctx.emit(model_to_json(out, full=args.full), args.output)
    return 0


def cmd_aggregate(ctx: _Context, args) -> int:
    policy = parse_policy(args.policy)
    left = args.left_fv or args.left
    right = args.right_fv or args.right
    if left is None or right is None:
        raise UsageError("need --left/--right (or --left-fv/--right-fv)")
    if args.four or args.left_fv or args.right_fv:
        ctx.print(str(aggregate_fv(FourVector.parse(left).check(), FourVector.parse(right).check(), policy)))
    else:
        ctx.print(str(aggregate_ns(NSPair.parse(left), NSPair.parse(right), policy)))
    return 0


def cmd_translate(ctx: _Context, args) -> int:
    if args.to_fv is not None:
        ctx.print(str(trinv(NSTriple(*parse_rationals(args.to_fv, 3)))))
    else:
        ctx.print(str(triple_of(FourVector.parse(args.to_ns))))
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="bdprob", description="Exact Belnap-Dunn probability toolkit.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("parse", help="print a formula's syntax tree or normal form")
    p.add_argument("formula")
    nf = p.add_mutually_exclusive_group()
    nf.add_argument("--dnf", action="store_true")
    nf.add_argument("--cnf", action="store_true")
    p.set_defaults(run=cmd_parse)

    p = sub.add_parser("entail", help="decide first-degree entailment")
    p.add_argument("premise")
    p.add_argument("conclusion")
    p.add_argument("--mode", choices=("pos", "neg"), default="pos")
    p.set_defaults(run=cmd_entail)

    p = sub.add_parser("eval", help="probability of a formula in a model")
    p.add_argument("--model", required=True)
    p.add_argument("formula")
    p.add_argument("--four", action="store_true", help="print the b,d,u,c vector")
    p.set_defaults(run=cmd_eval)

    p = sub.add_parser("synthesize", help="build the canonical model of a monomial table")
    p.add_argument("--assignment", required=True)
    p.add_argument("-o", "--output")
    p.add_argument("--full", action="store_true", help="keep mass-0 states")
    p.set_defaults(run=cmd_synthesize)

    p = sub.add_parser("check", help="audit a monomial table against the axioms")
    p.add_argument("--assignment", required=True)
    p.add_argument("--pairs")
    p.set_defaults(run=cmd_check)

    p = sub.add_parser("update", help="condition a model on a formula")
    p.add_argument("--model", required=True)
    p.add_argument("--target", required=True, metavar="FORMULA")
    how = p.add_mutually_exclusive_group(required=True)
    how.add_argument("--jeffrey", metavar="Q")
    how.add_argument("--bayes", choices=("pos", "neg"))
    how.add_argument("--fv", metavar="B,D,U,C")
    how.add_argument("--fv-bayes", choices=("pos", "unc", "con"))
    how.add_argument("--partial", metavar="CELL=Q,...")
    p.add_argument("-o", "--output")
    p.add_argument("--full", action="store_true", help="keep mass-0 states")
    p.set_defaults(run=cmd_update)

    p = sub.add_parser("aggregate", help="pool two agents' beliefs about a formula")
    p.add_argument("--policy", required=True)
    p.add_argument("--left", metavar="PF,PNF")
    p.add_argument("--right", metavar="PF,PNF")
    p.add_argument("--left-fv", metavar="B,D,U,C")
    p.add_argument("--right-fv", metavar="B,D,U,C")
    p.add_argument("--four", action="store_true", help="read --left/--right as b,d,u,c")
    p.set_defaults(run=cmd_aggregate)

    p = sub.add_parser("translate", help="convert between b,d,u,c and p(f),p(~f),p(f&~f)")
    which = p.add_mutually_exclusive_group(required=True)
    which.add_argument("--to-fv", metavar="P,PN,PGLUT")
    which.add_argument("--to-ns", metavar="B,D,U,C")
    p.set_defaults(run=cmd_translate)
    return parser


def run(argv: Sequence[str], stdin: bytes = b"") -> tuple[int, bytes, bytes]:
    """Run one command; return the exit code and the stdout and stderr bytes."""
    ctx = _Context(stdin)
    err = io.StringIO()
    try:
        with contextlib.redirect_stdout(ctx.out):
            args = _build_parser().parse_args(list(argv))
        code = args.run(ctx, args)
    except SystemExit as exc:  # --help
        code = exc.code if isinstance(exc.code, int) else 0
    except UsageError as exc:
        err.write(f"usage error: {exc}\n")
        code = 2
    except (BDError, ValueError, TypeError, ZeroDivisionError, OSError, UnicodeDecodeError) as exc:
        msg = " ".join(str(exc).split()) or type(exc).__name__
        err.write(f"error: {msg}\n")
        code = 2
    return code, ctx.out.getvalue().encode("utf-8"), err.getvalue().encode("utf-8")


def main(argv: Sequence[str] | None = None) -> int:
    stdin = b""
    argv = sys.argv[1:] if argv is None else list(argv)
    if "-" in argv:
        stdin = sys.stdin.buffer.read()
    code, out, err = run(argv, stdin)
    sys.stdout.buffer.write(out)
    sys.stderr.buffer.write(err)
    return code


if __name__ == "__main__":
    sys.exit(main())
