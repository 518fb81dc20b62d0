"""Command-line interface.

Subcommands::

    seq <qcatalan|narayana|cstar|motzkin|rogers-szego> --n N [--a EXPR --b EXPR] [--format F]
    triangle <narayana|nstar> --rows N [--format F]
    gould --k K --n N --r R [--format F]
    hankel <qcatalan|narayana|cstar|motzkin> --shift {0,1,2} --n N [--verify] [--a --b] [--format F]
    jfraction <narayana|cstar_shift1|cstar_shift0|motzkin> --depth D [--from-moments] [--format F]
    orthopoly <narayana|narayana_01|cstar_shift1|cstar_shift0|motzkin> --n N [--explicit] [--format F]
    verify [--all | --check NAME] [--depth D] [--list]

Exit codes: 0 success / all checks pass; 1 verification failure; 2 usage
or parse error; 3 internal arithmetic error.  --a/--b accept polynomial
expressions in q over the integers (integers, q, +, -, *, ^ and
parentheses; multiplication is explicit).

Formats: ``plain`` prints canonical polynomial strings, ``json`` renders
every polynomial as {"vars": ["q","a","b"], "terms": [{"c": "<signed
decimal>", "e": [e_q, e_a, e_b]}, ...]} with terms in canonical order,
and ``csv`` (sequences and triangles) emits one row per entry.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass

from . import hankel as hankel_mod
from . import jfraction as jfraction_mod
from . import sequences, verify
from .errors import (
    BreakdownError,
    DenominatorResidueError,
    DivisionByZeroError,
    ExponentOverflowError,
    NonUnitConstantTermError,
    NotDivisibleError,
    PolyParseError,
    QCatalanError,
)
from .polyring import Poly, parse_poly

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_ARITHMETIC = 3

_ARITHMETIC_ERRORS = (
    NotDivisibleError,
    DivisionByZeroError,
    BreakdownError,
    DenominatorResidueError,
    NonUnitConstantTermError,
    ExponentOverflowError,
)

_SEQ_FAMILIES = {
    "qcatalan": sequences.qcatalan,
    "narayana": sequences.qnarayana_poly,
    "cstar": sequences.cstar,
    "motzkin": sequences.qmotzkin,
    "rogers-szego": sequences.rogers_szego,
}


@dataclass(frozen=True)
class OutputDocument:
    """A rendered payload plus the format it should be serialized in."""

    format: str
    payload: object


def render(doc: OutputDocument) -> str:
    """Serialize an output document to text.

    plain payloads are already strings (or lists of lines); json payloads
    are JSON-ready objects; csv payloads are lists of rows.
    """
    if doc.format == "json":
        return json.dumps(doc.payload, indent=2)
    if doc.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerows(doc.payload)
        return buf.getvalue().rstrip("\n")
    if isinstance(doc.payload, str):
        return doc.payload
    return "\n".join(doc.payload)


def _parse_ab(args) -> tuple[Poly | None, Poly | None]:
    a_val = parse_poly(args.a, variables=("q",)) if args.a is not None else None
    b_val = parse_poly(args.b, variables=("q",)) if args.b is not None else None
    return a_val, b_val


def _specialize(p: Poly, a_val: Poly | None, b_val: Poly | None) -> Poly:
    bindings = {}
    if a_val is not None:
        bindings["a"] = a_val
    if b_val is not None:
        bindings["b"] = b_val
    return p.substitute(bindings) if bindings else p


def _zpoly_json(p: jfraction_mod.ZPoly) -> dict:
    return {"coeffs": [c.to_json_obj() for c in p.coeffs()]}


def _cmd_seq(args) -> int:
    a_val, b_val = _parse_ab(args)
    gen = _SEQ_FAMILIES[args.family]
    values = [_specialize(gen(n), a_val, b_val) for n in range(args.n + 1)]
    if args.format == "json":
        doc = OutputDocument("json", [v.to_json_obj() for v in values])
    elif args.format == "csv":
        doc = OutputDocument("csv", [(n, str(v)) for n, v in enumerate(values)])
    else:
        doc = OutputDocument("plain", [str(v) for v in values])
    print(render(doc))
    return EXIT_OK


def _cmd_triangle(args) -> int:
    builder = sequences.narayana_triangle if args.family == "narayana" else sequences.nstar_triangle
    triangle = builder(args.rows)
    if args.format == "json":
        doc = OutputDocument(
            "json", [[entry.to_json_obj() for entry in row] for row in triangle.rows]
        )
    elif args.format == "csv":
        rows = [
            (n, k, str(entry))
            for n, row in enumerate(triangle.rows)
            for k, entry in enumerate(row)
        ]
        doc = OutputDocument("csv", rows)
    else:
        doc = OutputDocument(
            "plain", ["  ".join(str(entry) for entry in row) for row in triangle.rows]
        )
    print(render(doc))
    return EXIT_OK


def _cmd_gould(args) -> int:
    value = sequences.gould(args.k, args.n, args.r)
    if args.format == "json":
        doc = OutputDocument("json", value.to_json_obj())
    else:
        doc = OutputDocument("plain", str(value))
    print(render(doc))
    return EXIT_OK


def _cmd_hankel(args) -> int:
    a_val, b_val = _parse_ab(args)
    expected = None
    if args.verify:
        expected = hankel_mod.expected_hankel(args.family, args.shift, args.n, a_val, b_val)
    moments = hankel_mod.family_moments(
        args.family, 2 * args.n + args.shift + 1, a_val, b_val
    )
    computed = hankel_mod.hankel_det(moments, args.shift, args.n)
    match = None if expected is None else computed == expected
    if args.format == "json":
        payload = {
            "family": args.family,
            "shift": args.shift,
            "n": args.n,
            "computed": computed.to_json_obj(),
            "expected": None if expected is None else expected.to_json_obj(),
            "match": match,
        }
        print(render(OutputDocument("json", payload)))
    else:
        lines = [f"computed: {computed}"]
        if expected is not None:
            lines.append(f"expected: {expected}")
            lines.append(f"match: {'true' if match else 'false'}")
        print(render(OutputDocument("plain", lines)))
    if match is False:
        return EXIT_VERIFY_FAILED
    return EXIT_OK


_MOMENT_SOURCES = {
    "narayana": lambda i: sequences.qnarayana_poly(i),
    "cstar_shift1": lambda i: sequences.cstar(i + 1),
    "cstar_shift0": lambda i: sequences.cstar(i),
    "motzkin": lambda i: sequences.qmotzkin(i),
}


def _cmd_jfraction(args) -> int:
    if args.from_moments:
        source = _MOMENT_SOURCES[args.family]
        moments = tuple(source(i) for i in range(2 * args.depth + 1))
        jf = jfraction_mod.jfraction_from_moments(
            jfraction_mod.MomentFunctional(moments), args.depth
        )
    else:
        jf = jfraction_mod.closed_jfraction(args.family, args.depth)
    if args.format == "json":
        payload = {
            "family": args.family,
            "depth": args.depth,
            "s": [p.to_json_obj() for p in jf.s],
            "t": [p.to_json_obj() for p in jf.t],
        }
        print(render(OutputDocument("json", payload)))
    else:
        lines = [f"s[{k}]: {p}" for k, p in enumerate(jf.s)]
        lines += [f"t[{k}]: {p}" for k, p in enumerate(jf.t)]
        print(render(OutputDocument("plain", lines)))
    return EXIT_OK


_ORTHO_RECURRENCE = {
    "narayana": ("narayana", None, None),
    "narayana_01": ("narayana", Poly.zero(), Poly.one()),
    "cstar_shift1": ("cstar_shift1", None, None),
    "cstar_shift0": ("cstar_shift0", None, None),
    "motzkin": ("motzkin", None, None),
}

_ORTHO_EXPLICIT = {
    "narayana": "narayana_ab",
    "narayana_01": "narayana_01",
    "cstar_shift1": "cstar_shift1",
    "cstar_shift0": "cstar_shift0",
}


def _cmd_orthopoly(args, parser: argparse.ArgumentParser) -> int:
    if args.explicit:
        family = _ORTHO_EXPLICIT.get(args.family)
        if family is None:
            parser.error(f"no explicit formula for family {args.family!r}")
        poly = jfraction_mod.orthopoly_explicit(family, args.n)
    else:
        closed, a_val, b_val = _ORTHO_RECURRENCE[args.family]
        jf = jfraction_mod.closed_jfraction(closed, max(args.n, 1), a_val, b_val)
        poly = jfraction_mod.orthopoly(jf, args.n)
    if args.format == "json":
        payload = {"family": args.family, "n": args.n, "explicit": bool(args.explicit)}
        payload.update(_zpoly_json(poly))
        print(render(OutputDocument("json", payload)))
    else:
        print(render(OutputDocument("plain", str(poly))))
    return EXIT_OK


def _cmd_verify(args, parser: argparse.ArgumentParser) -> int:
    if args.list:
        lines = [f"{name}: {anchor}" for name, anchor in verify.list_checks()]
        print(render(OutputDocument("plain", lines)))
        return EXIT_OK
    if args.check:
        reports = [verify.run_check(args.check, args.depth)]
    else:
        reports = verify.run_all(args.depth)
    if args.format == "json":
        payload = {
            "depth": args.depth,
            "reports": [
                {
                    "name": r.name,
                    "depth": r.depth,
                    "passed": r.passed,
                    "detail": r.detail,
                }
                for r in reports
            ],
            "all_passed": all(r.passed for r in reports),
        }
        print(render(OutputDocument("json", payload)))
    else:
        lines = []
        for r in reports:
            status = "PASS" if r.passed else "FAIL"
            line = f"{status}  {r.name} (depth {r.depth})"
            if r.detail:
                line += f": {r.detail}"
            lines.append(line)
        passed = sum(r.passed for r in reports)
        lines.append(f"{passed}/{len(reports)} checks passed")
        print(render(OutputDocument("plain", lines)))
    return EXIT_OK if all(r.passed for r in reports) else EXIT_VERIFY_FAILED


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qcatalan",
        description="Exact q-Catalan / q-Narayana computations: sequences, "
        "Hankel determinants, continued fractions and identity checks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p, choices=("plain", "json", "csv")):
        p.add_argument("--format", choices=choices, default="plain")

    p_seq = sub.add_parser("seq", help="print a polynomial sequence")
    p_seq.add_argument("family", choices=sorted(_SEQ_FAMILIES))
    p_seq.add_argument("--n", type=int, required=True, help="largest index to print")
    p_seq.add_argument("--a", help="polynomial in q substituted for a")
    p_seq.add_argument("--b", help="polynomial in q substituted for b")
    add_format(p_seq)

    p_tri = sub.add_parser("triangle", help="print a number triangle")
    p_tri.add_argument("family", choices=("narayana", "nstar"))
    p_tri.add_argument("--rows", type=int, required=True, help="largest row index")
    add_format(p_tri)

    p_gould = sub.add_parser("gould", help="print one q-Gould polynomial G(k,n,r)")
    p_gould.add_argument("--k", type=int, required=True)
    p_gould.add_argument("--n", type=int, required=True)
    p_gould.add_argument("--r", type=int, required=True)
    add_format(p_gould, ("plain", "json"))

    p_hank = sub.add_parser("hankel", help="compute a Hankel determinant")
    p_hank.add_argument("family", choices=hankel_mod.HANKEL_FAMILIES)
    p_hank.add_argument("--shift", type=int, choices=(0, 1, 2), default=0)
    p_hank.add_argument("--n", type=int, required=True)
    p_hank.add_argument("--verify", action="store_true",
                        help="compare against the closed form; mismatch exits 1")
    p_hank.add_argument("--a", help="polynomial in q substituted for a")
    p_hank.add_argument("--b", help="polynomial in q substituted for b")
    add_format(p_hank, ("plain", "json"))

    p_jf = sub.add_parser("jfraction", help="print continued-fraction coefficients")
    p_jf.add_argument("family", choices=jfraction_mod.CLOSED_FAMILIES)
    p_jf.add_argument("--depth", type=int, required=True)
    p_jf.add_argument("--from-moments", action="store_true",
                      help="extract from the moment sequence instead of "
                      "emitting the closed forms")
    add_format(p_jf, ("plain", "json"))

    p_op = sub.add_parser("orthopoly", help="print an orthogonal polynomial")
    p_op.add_argument("family", choices=sorted(_ORTHO_RECURRENCE))
    p_op.add_argument("--n", type=int, required=True)
    p_op.add_argument("--explicit", action="store_true",
                      help="use the closed-form double sum instead of the recurrence")
    add_format(p_op, ("plain", "json"))

    p_ver = sub.add_parser("verify", help="run identity checks")
    group = p_ver.add_mutually_exclusive_group()
    group.add_argument("--all", action="store_true", help="run every check (default)")
    group.add_argument("--check", help="run a single named check")
    group.add_argument("--list", action="store_true", help="list available checks")
    p_ver.add_argument("--depth", type=int, default=4)
    add_format(p_ver, ("plain", "json"))

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE

    try:
        if args.command == "seq":
            return _cmd_seq(args)
        if args.command == "triangle":
            return _cmd_triangle(args)
        if args.command == "gould":
            return _cmd_gould(args)
        if args.command == "hankel":
            return _cmd_hankel(args)
        if args.command == "jfraction":
            return _cmd_jfraction(args)
        if args.command == "orthopoly":
            return _cmd_orthopoly(args, parser)
        if args.command == "verify":
            return _cmd_verify(args, parser)
        parser.error(f"unknown command {args.command!r}")
    except _ARITHMETIC_ERRORS as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_ARITHMETIC
    except PolyParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (QCatalanError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SystemExit as exc:  # parser.error inside a subcommand
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
