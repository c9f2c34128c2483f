"""Command-line interface: ``expoweyl [--config FILE] [--q-mode MODE] <subcommand> ...``.

Every successful run writes one JSON record to stdout.  Failures write a
single line ``error[<kind>]: <message>`` to stderr and exit with

* 2 for usage errors (including unknown subcommands),
* 3 for configuration errors,
* 4 for errors raised by the requested operation (parse errors included).
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import lattice, repthy, ringmaps, wittalg
from .config import ConfigError, SessionConfig, load_config
from .expolyring import RingError
from .lattice import LatticeError
from .parser import EvalError, ParseError, parse_element, parse_scalar
from .printer import print_canonical
from .repthy import RepError
from .ringmaps import MapError
from .scalars import ScalarError
from .weylalg import WeylError, trace_obstruction
from .wittalg import WittError

EXIT_USAGE, EXIT_CONFIG, EXIT_OPERATION = 2, 3, 4
CONFIG_ENV = "EXPOWEYL_CONFIG"


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _vector(text: str):
    try:
        return tuple(int(c) for c in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _matrix(text: str):
    try:
        return tuple(tuple(int(c) for c in row.split(",")) for row in text.split(";"))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected rows 'a,b;c,d', got {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="expoweyl", description="Exact computations in expolynomial Weyl-type algebras.")
    # global options are accepted before or after the subcommand
    common = _Parser(add_help=False)
    common.add_argument("--config", default=argparse.SUPPRESS, help=f"INI configuration file (default: ${CONFIG_ENV})")
    common.add_argument("--q-mode", default=argparse.SUPPRESS, help="override the deformation: classical | generic | root:N")
    ap.add_argument("--config", help=f"INI configuration file (default: ${CONFIG_ENV})")
    ap.add_argument("--q-mode", help="override the deformation: classical | generic | root:N")
    ap.set_defaults(config=None, q_mode=None)
    sub = ap.add_subparsers(dest="command", metavar="SUBCOMMAND", parser_class=_Parser)
    sub.required = True

    def cmd(name, help):
        return sub.add_parser(name, help=help, parents=[common])

    p = cmd("normal-form", help="normally order an expression")
    p.add_argument("expr")

    p = cmd("bracket", help="commutator [a, b] (or the Witt bracket with --witt)")
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("--witt", action="store_true", help="treat a, b as Witt elements f*D")

    p = cmd("iso", help="decide R_{p1} ~ R_{p2}")
    p.add_argument("--p1", type=_vector, required=True)
    p.add_argument("--p2", type=_vector, required=True)

    p = cmd("aut-apply", help="apply a ring automorphism (torus, matrix) to a ring element")
    p.add_argument("--torus", required=True, help="comma-separated scalars, one per coordinate (y, e..., x...)")
    p.add_argument("--matrix", type=_matrix, required=True, help="rows separated by ';'")
    p.add_argument("expr")

    p = cmd("galois-fix", help="conjugate and project onto the Galois-fixed algebra")
    p.add_argument("expr")

    p = cmd("center", help="central elements up to a size bound")
    p.add_argument("--degree", type=int, required=True)

    p = cmd("ideal", help="saturate the two-sided ideal of an element up to a size bound")
    p.add_argument("expr")
    p.add_argument("--degree", type=int, required=True)

    p = cmd("verma-dims", help="Verma weight-space dimensions")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--depth", type=int, help="rank 1: weights 0, -1, ..., -depth")
    g.add_argument("--weight", type=_vector, help="a single weight in lattice coordinates")
    p.add_argument("--gens", help="override the negative generators, e.g. '-1;-2'")
    p.add_argument("--ordered", action="store_true", help="count ordered tuples instead of multisets")

    p = cmd("bgg-char", help="rank-1 BGG character of L(chi_n) and its dual")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--depth", type=int, required=True)

    p = cmd("classify-support", help="dense or discrete weight support for chi(x)")
    p.add_argument("--chi", required=True)

    p = cmd("trace-obstruction", help="trace certificate against n-dimensional modules")
    p.add_argument("--n", type=int, required=True)
    return ap


def _ring_element(session, text):
    el = parse_element(text, session.algebra)
    if any(k for _, k in el.terms):
        raise WeylError("expected a ring element (no D)")
    return el.parts.get(0, session.ring.zero())


def _witt_element(session, text):
    el = parse_element(text, session.algebra)
    if any(k != 1 for _, k in el.terms):
        raise WittError("a Witt element must have the form f*D")
    return wittalg.WittElement(el.parts.get(1, session.ring.zero()))


def run(args, session) -> dict:
    A = session.algebra
    cmd = args.command
    if cmd == "normal-form":
        return {"input": args.expr, "normal_form": print_canonical(parse_element(args.expr, A))}
    if cmd == "bracket":
        if args.witt:
            a, b = _witt_element(session, args.a), _witt_element(session, args.b)
            return {"a": args.a, "b": args.b, "kind": "witt", "bracket": print_canonical(wittalg.witt_bracket(a, b))}
        a, b = parse_element(args.a, A), parse_element(args.b, A)
        return {"a": args.a, "b": args.b, "kind": "commutator", "bracket": print_canonical(A.commutator(a, b))}
    if cmd == "iso":
        v = ringmaps.iso_decide(args.p1, args.p2)
        rec = {"p1": list(args.p1), "p2": list(args.p2), **v.to_record()}
        if v.witness is not None:
            rec["image_of_p1"] = list(lattice.apply_matrix(v.witness, args.p1))
        return rec
    if cmd == "aut-apply":
        torus = tuple(parse_scalar(s, session.field) for s in args.torus.split(","))
        g = ringmaps.RingAutomorphism(torus, args.matrix)
        f = _ring_element(session, args.expr)
        return {"input": args.expr, "automorphism": g.to_record(), "image": print_canonical(ringmaps.apply_automorphism(g, f))}
    if cmd == "galois-fix":
        if session.galois is None:
            raise MapError("no Galois layer configured")
        a = parse_element(args.expr, A)
        conj = ringmaps.galois_apply(session.galois, a)
        return {
            "input": args.expr,
            "layer": session.galois.layer,
            "conjugate": print_canonical(conj),
            "projection": print_canonical(ringmaps.reynolds_project(session.galois, a)),
            "fixed": conj == a,
        }
    if cmd == "center":
        basis = A.center_up_to_degree(args.degree)
        return {"degree": args.degree, "dimension": len(basis), "basis": [print_canonical(c) for c in basis]}
    if cmd == "ideal":
        rep = A.ideal_saturate(parse_element(args.expr, A), args.degree)
        return {"input": args.expr, "degree": args.degree, "contains_one": rep.contains_one, "profile": list(rep.profile)}
    if cmd == "verma-dims":
        neg = repthy.NegativePart.parse(args.gens) if args.gens else session.negative
        gens = [list(g) for g in neg.gens]
        if args.weight is not None:
            d = repthy.verma_weight_dim(neg, args.weight, ordered=args.ordered)
            return {"gens": gens, "ordered": args.ordered, "dims": [[list(args.weight), d]]}
        if neg.rank != 1:
            raise RepError("--depth needs rank-1 generators; use --weight")
        if args.depth < 0:
            raise RepError("depth must be non-negative")
        dims = [[-k, repthy.verma_weight_dim(neg, (-k,), ordered=args.ordered)] for k in range(args.depth + 1)]
        return {"gens": gens, "ordered": args.ordered, "dims": dims}
    if cmd == "bgg-char":
        ch = repthy.bgg_character(args.n, args.depth)
        dual = repthy.duality_on_characters(ch)
        return {"n": args.n, "depth": args.depth, "character": ch.records(), "dual": dual.records(), "total": ch.total()}
    if cmd == "classify-support":
        chi = parse_scalar(args.chi, session.field)
        v = repthy.classify_support(chi, session.basis)
        return {"chi_x": str(chi), "kind": v.kind, "reason": v.reason}
    if cmd == "trace-obstruction":
        rep = trace_obstruction(args.n, session.field)
        return {"dimension": rep.dimension, "lhs": str(rep.lhs), "rhs": str(rep.rhs), "obstructed": rep.lhs != rep.rhs}
    raise UsageError(f"unknown subcommand {cmd!r}")


_OPERATION_ERRORS = (
    ParseError,
    EvalError,
    WeylError,
    RingError,
    LatticeError,
    MapError,
    RepError,
    WittError,
    ScalarError,
    ZeroDivisionError,
)


def _kind(exc) -> str:
    if isinstance(exc, ParseError):
        return "parse"
    if isinstance(exc, EvalError):
        return "eval"
    return "operation"


def main(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr

    def fail(kind, msg, code):
        print(f"error[{kind}]: {' '.join(str(msg).split())}", file=stderr)
        return code

    try:
        args = build_parser().parse_args(argv)
    except UsageError as exc:
        return fail("usage", exc, EXIT_USAGE)
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    try:
        path = args.config or os.environ.get(CONFIG_ENV)
        config = load_config(path) if path else SessionConfig()
        session = config.with_q_mode(args.q_mode).build()
    except ConfigError as exc:
        return fail("config", exc, EXIT_CONFIG)
    try:
        record = run(args, session)
    except UsageError as exc:
        return fail("usage", exc, EXIT_USAGE)
    except ConfigError as exc:
        return fail("config", exc, EXIT_CONFIG)
    except _OPERATION_ERRORS as exc:
        return fail(_kind(exc), exc, EXIT_OPERATION)
    out = {"command": args.command, "q_mode": str(session.deformation), **record}
    stdout.write(json.dumps(out, indent=2, sort_keys=True) + "\n")
    return 0


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
