"""``midproof`` command line.

Exit codes: 0 success or affirmative verdict, 1 negative verdict, 2 usage or
input error, 3 greedy propagation ended without a verdict.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path
from typing import Optional, Sequence

from . import __version__
from .exact_arith import parse_rational

EXIT_OK, EXIT_NEGATIVE, EXIT_ERROR, EXIT_INCONCLUSIVE = 0, 1, 2, 3
REPORT_SCHEMA = 1


class InputError(Exception):
    pass


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None


def _write(text: str, out: Optional[str]) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


# -- unitfrac ----------------------------------------------------------

def cmd_unitfrac(args) -> int:
    from .unitfrac import UnitFractionProblem, enumerate_solutions

    try:
        target = parse_rational(args.target)
        problem = UnitFractionProblem(args.terms, target, args.min)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    sols = enumerate_solutions(problem)
    if args.json:
        _write(json.dumps([list(t) for t in sols]) + "\n", None)
    else:
        _write("".join("(" + ", ".join(map(str, t)) + ")\n" for t in sols), None)
    return EXIT_OK


# -- ks ----------------------------------------------------------------

def _load_ks_graph(args):
    from .ks import PERES33_SHORTHAND, build_graph, parse_vector_file, peres33

    try:
        if args.dataset:
            return build_graph(peres33(), list(PERES33_SHORTHAND))
        pairs = parse_vector_file(_read(args.file))
        return build_graph([v for v, _ in pairs], [lab for _, lab in pairs])
    except ValueError as exc:
        raise InputError(str(exc)) from None


def _load_assumptions(graph, source: str):
    from .ks import Colour, preset_assignment
    from .ks.solver import WLOG_PRESETS
    from .ks.vectors import parse_vector_line

    if source in WLOG_PRESETS:
        try:
            return preset_assignment(graph, source)
        except ValueError as exc:
            raise InputError(str(exc)) from None
    out = {}
    for lineno, raw in enumerate(_read(source).splitlines(), start=1):
        line = raw.split("#", 1)[0].split()
        if not line:
            continue
        *vec, colour = line
        try:
            v = parse_vector_line(" ".join(vec))
            c = Colour(colour.lower())
        except ValueError as exc:
            raise InputError(f"{source} line {lineno}: {exc}") from None
        idx = graph.index_of(v)
        if idx is None:
            raise InputError(f"{source} line {lineno}: ray {' '.join(vec)} is not in the vector set")
        out[idx] = c
    return out


def cmd_ks(args) -> int:
    from .ks import Certificate, check_certificate, emit, greedy, search

    graph = _load_ks_graph(args)
    if args.check:
        try:
            cert = Certificate.loads(_read(args.check))
        except (ValueError, KeyError, TypeError) as exc:
            raise InputError(f"malformed certificate: {exc}") from None
        report = check_certificate(graph, cert)
        _write(f"certificate {'valid' if report.ok else 'INVALID'}: {report.message}\n", args.out)
        return EXIT_OK if report.ok else EXIT_NEGATIVE

    initial = _load_assumptions(graph, args.assume) if args.assume else {}
    cert = search(graph, initial) if args.mode == "search" else greedy(graph, initial)
    report = check_certificate(graph, cert, initial)
    text = emit(cert, args.emit)
    if args.emit == "text":
        text = (
            f"edges: {len(graph.edges)}\ntriples: {len(graph.triples)}\n"
            + text
            + f"check: {'ok' if report.ok else 'FAILED'} ({report.message})\n"
        )
    else:
        print(f"check: {'ok' if report.ok else 'FAILED'} ({report.message})", file=sys.stderr)
    _write(text, args.out)
    if not report.ok:
        print("internal error: certificate failed independent check", file=sys.stderr)
        return EXIT_ERROR
    return {"colourable": EXIT_OK, "uncolourable": EXIT_NEGATIVE}.get(cert.verdict, EXIT_INCONCLUSIVE)


# -- groebner ------------------------------------------------------------

def cmd_groebner(args) -> int:
    from .multipoly import (
        PolySyntaxError, buchberger, get_order, ideal_member, parse_poly, parse_poly_lines, var_table,
    )

    try:
        vars = var_table(args.vars)
        order = get_order(args.order)
        gens = parse_poly_lines(_read(args.gens), vars)
        goal = parse_poly(args.goal, vars) if args.goal is not None else None
    except PolySyntaxError as exc:
        raise InputError(f"syntax error: {exc}") from None
    except ValueError as exc:
        raise InputError(str(exc)) from None
    if not gens or all(g.is_zero() for g in gens):
        raise InputError("generator file has no nonzero polynomial")

    result = {"vars": list(vars), "order": order.kind}
    code = EXIT_OK
    if goal is None:
        basis = buchberger(gens, order)
    else:
        res = ideal_member(goal, gens, order, want_witness=args.witness)
        basis = res.basis
        result["goal"] = goal.to_str(order)
        result["member"] = res.member
        result["remainder"] = res.remainder.to_str(order)
        if args.witness:
            result["witness"] = [c.to_str(order) for c in res.witness.cofactors] if res.witness else None
        code = EXIT_OK if res.member else EXIT_NEGATIVE
    if args.basis or goal is None:
        result["basis"] = [b.to_str(order) for b in basis]

    if args.json:
        _write(json.dumps(result, indent=1) + "\n", None)
        return code
    lines = []
    if goal is not None:
        lines.append(f"member: {'true' if result['member'] else 'false'}")
        lines.append(f"remainder: {result['remainder']}")
    if "basis" in result:
        lines.append("basis:")
        lines.extend(f"  {b}" for b in result["basis"])
    if result.get("witness"):
        lines.append("witness:")
        for i, (c, g) in enumerate(zip(result["witness"], gens), start=1):
            lines.append(f"  g{i} = {g.to_str(order)}")
            lines.append(f"    cofactor: {c}")
    _write("\n".join(lines) + "\n", None)
    return code


# -- chebyshev -------------------------------------------------------------

def cmd_chebyshev(args) -> int:
    from .chebyshev import GENERATOR_SOURCES, build_instance, cheb, prove_mult_formula, verify_mult

    if args.n is None and args.verify_mult is None and not args.prove:
        raise InputError("nothing to do: give --n, --verify-mult or --prove")
    lines = []
    code = EXIT_OK
    if args.n is not None:
        if args.n < 0:
            raise InputError("--n must be nonnegative")
        lines.append(f"T{args.n} = {cheb(args.n)}")
    if args.verify_mult is not None:
        m, k = args.verify_mult
        if m < 0 or k < 0:
            raise InputError("--verify-mult needs nonnegative M and K")
        ok = verify_mult(m, k)
        lines.append(f"2*T{m}*T{m + k} == T{2 * m + k} + T{k}: {'true' if ok else 'false'}")
        code = max(code, EXIT_OK if ok else EXIT_NEGATIVE)
    if args.prove:
        inst = build_instance()
        member, witness = prove_mult_formula()
        lines.append(f"goal: {inst.goal}")
        lines.append(f"member: {'true' if member else 'false'}")
        if member:
            lines.append("witness:")
            for src, c in zip(GENERATOR_SOURCES, witness.cofactors):
                lines.append(f"  ({c}) * ({src})")
        code = max(code, EXIT_OK if member else EXIT_NEGATIVE)
    _write("\n".join(lines) + "\n", None)
    return code


# -- selftest ---------------------------------------------------------------

def cmd_selftest(args) -> int:
    from .selftest import self_test

    vectors = labels = None
    if args.ks_file:
        from .ks import parse_vector_file

        try:
            pairs = parse_vector_file(_read(args.ks_file))
        except ValueError as exc:
            raise InputError(str(exc)) from None
        vectors, labels = [v for v, _ in pairs], [lab for _, lab in pairs]
    results = self_test(vectors, labels)
    for r in results:
        print(f"{r.name}: {r.seconds:.3f}s", file=sys.stderr)
    if args.json:
        report = {"schema": REPORT_SCHEMA, "legs": [r.to_json() for r in results], "passed": all(r.passed for r in results)}
        _write(json.dumps(report, indent=1) + "\n", None)
    else:
        lines = []
        for r in results:
            lines.append(f"{'PASS' if r.passed else 'FAIL'} {r.name}")
            lines.extend(f"  deviation from golden: {d}" for d in r.deviations)
        _write("\n".join(lines) + "\n", None)
    return EXIT_OK if all(r.passed for r in results) else EXIT_NEGATIVE


# -- parser -------------------------------------------------------------------

class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_ERROR)


def build_parser() -> argparse.ArgumentParser:
    from .ks.certificate import SCHEMA_VERSION

    p = _Parser(prog="midproof", description="Exact decision procedures with certificates.")
    p.add_argument(
        "--version",
        action="version",
        version=f"midproof {__version__} (certificate schema {SCHEMA_VERSION}, report schema {REPORT_SCHEMA})",
    )
    sub = p.add_subparsers(dest="command", metavar="COMMAND", parser_class=_Parser)
    sub.required = True

    u = sub.add_parser("unitfrac", help="enumerate unit-fraction tuples with a given sum")
    u.add_argument("--terms", type=int, default=3)
    u.add_argument("--target", default="1", help="rational target, e.g. 1 or 2/3")
    u.add_argument("--min", type=int, default=1, help="lower bound on every term")
    u.add_argument("--json", action="store_true")
    u.set_defaults(func=cmd_unitfrac)

    k = sub.add_parser("ks", help="decide red/green colourability of a ray set")
    src = k.add_mutually_exclusive_group(required=True)
    src.add_argument("--dataset", choices=["peres33"])
    src.add_argument("--file", help="vector file, one vector per line")
    k.add_argument("--assume", help="preset name (peres-wlog) or file of 'vector colour' lines")
    k.add_argument("--mode", choices=["search", "greedy"], default="search")
    k.add_argument("--emit", choices=["text", "json", "dot"], default="text")
    k.add_argument("--out", help="write output here instead of stdout")
    k.add_argument("--check", metavar="CERT", help="check a JSON certificate instead of searching")
    k.set_defaults(func=cmd_ks)

    g = sub.add_parser("groebner", help="Groebner basis and ideal membership")
    g.add_argument("--vars", required=True, help='comma-separated variable names, e.g. "x,y"')
    g.add_argument("--order", choices=["lex", "grlex", "grevlex"], default="grevlex")
    g.add_argument("--gens", required=True, help="file with one generator per line")
    g.add_argument("--goal", help="polynomial to test for membership")
    g.add_argument("--witness", action="store_true", help="print cofactors over the generators")
    g.add_argument("--basis", action="store_true", help="print the reduced Groebner basis")
    g.add_argument("--json", action="store_true")
    g.set_defaults(func=cmd_groebner)

    c = sub.add_parser("chebyshev", help="Chebyshev polynomials and the multiplication formula")
    c.add_argument("--n", type=int)
    c.add_argument("--verify-mult", nargs=2, type=int, metavar=("M", "K"))
    c.add_argument("--prove", action="store_true")
    c.set_defaults(func=cmd_chebyshev)

    s = sub.add_parser("selftest", help="run the three flagship computations")
    s.add_argument("--json", action="store_true")
    s.add_argument("--ks-file", help="replace the Peres vectors (for golden-deviation checks)")
    s.set_defaults(func=cmd_selftest)
    return p


def run(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"midproof: error: {exc}", file=sys.stderr)
        return EXIT_ERROR


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
