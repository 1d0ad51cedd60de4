"""Command-line front end.

Exit codes: 0 success, 1 invalid input, 2 internal cross-check failure.
"""
from __future__ import annotations

import argparse
import json
import random
import re
import sys
from math import gcd
from typing import Sequence, TextIO

from fibersurf.bundle import (
    AlgorithmTrace,
    ConsistencyError,
    Monodromy,
    algorithm_streamlined,
    boundary_coordinates,
    choose_W,
    special_forms_of,
    unknot_slopes,
)
from fibersurf.contfrac import enumerate_mcfe, format_cf, parse_cf, scfe
from fibersurf.exact import ExtendedRational, GeneratorWord, SL2Matrix, word_to_matrix
from fibersurf.farey import oracle_enumerate_mcfe
from fibersurf.solver import solution_surfaces, solve

MONODROMIES = ("left-trefoil", "right-trefoil", "figure-eight")
_SLOPE = re.compile(r"\s*([+-]?\d+)\s*(?:/\s*([+-]?\d+))?\s*")
# argparse reads a leading '-' as an option; such values get a leading space
_NEGATIVE_VALUE = re.compile(r"-\d[\d/,\s-]*")


class UsageError(ValueError):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def parse_slope(text: str) -> ExtendedRational:
    m = _SLOPE.fullmatch(text)
    if not m:
        raise UsageError(f"not a slope: {text.strip()!r} (expected p/q)")
    p = int(m.group(1))
    q = int(m.group(2)) if m.group(2) is not None else 1
    if (p, q) == (0, 0) or gcd(p, q) != 1:
        raise UsageError(f"slope {p}/{q} is not a reduced fraction")
    return ExtendedRational(p, q)


_NUMERIC_MATRIX = re.compile(r"[\s()\[\];,+\-\d]*")


def parse_matrix(text: str) -> SL2Matrix:
    """Four entries ``x y t u`` (any brackets or separators) or a word in A, B, P, Q."""
    if _NUMERIC_MATRIX.fullmatch(text):
        nums = re.findall(r"[+-]?\d+", text)
        if len(nums) != 4:
            raise UsageError(f"a matrix needs four entries, got {text!r}")
        return SL2Matrix(*(int(n) for n in nums))
    return word_to_matrix(GeneratorWord.parse(text))


def _dump(obj, out: TextIO) -> None:
    out.write(json.dumps(obj, sort_keys=True) + "\n")


def surface_report(monodromy: Monodromy, slope: ExtendedRational, with_trace: bool = False) -> dict:
    surfaces, trace = algorithm_streamlined(monodromy, slope)
    report = {
        "slope": str(slope),
        "monodromy": monodromy.name,
        "coefficient_order": "n(k)..n(1)",
        "notes": list(trace.notes),
        "surfaces": [s.to_dict() for s in surfaces],
    }
    if with_trace:
        report["trace"] = trace.to_dict()
    return report


def _print_trace(trace: AlgorithmTrace, out: TextIO) -> None:
    out.write(f"W = {trace.W}\n")
    out.write(f"valid N: {', '.join(str(n) for n in trace.valid_N) or 'none'}\n")
    out.write(f"meridional coefficient sum: {trace.target_sigma}\n")
    for rec in trace.records:
        pq = ExtendedRational.from_vector(rec.p, rec.q)
        rs = ExtendedRational.from_vector(rec.r, rec.s)
        out.write(f"N = {rec.N}: X = {rec.X}, p/q = {pq}, r/s = {rs}\n")
        if not rec.candidates:
            out.write("  no odd-length MCFE\n")
        for c in rec.candidates:
            verdict = "accepted" if c.accepted else "rejected"
            out.write(f"  {format_cf(c.mcfe)} a_k={c.a_k} J={c.J} "
                      f"coefficients={format_cf(c.coefficients)} sigma={c.sigma} {verdict}\n")


# -- commands ------------------------------------------------------------------

def cmd_scfe(args, out: TextIO) -> int:
    slope = parse_slope(args.slope)
    if slope.is_infinite:
        raise UsageError("1/0 has no simple continued fraction expansion")
    out.write(format_cf(scfe(slope)) + "\n")
    return 0


def cmd_mcfe(args, out: TextIO) -> int:
    slope = parse_slope(args.slope)
    for m in enumerate_mcfe(slope, args.odd):
        out.write(format_cf(m) + "\n")
    return 0


def cmd_surfaces(args, out: TextIO) -> int:
    slope = parse_slope(args.slope)
    monodromy = Monodromy.builtin(args.monodromy)
    if args.json:
        _dump(surface_report(monodromy, slope, args.explain), out)
        return 0
    surfaces, trace = algorithm_streamlined(monodromy, slope)
    out.write(f"slope {slope}, monodromy {monodromy.name}\n")
    for note in trace.notes:
        out.write(f"note: {note}\n")
    if not surfaces:
        out.write("no closed essential surfaces\n")
    else:
        noun = "surface" if len(surfaces) == 1 else "surfaces"
        out.write(f"{len(surfaces)} closed essential {noun}\n")
    for s in surfaces:
        flags = f"  [{', '.join(s.caveats)}]" if s.caveats else ""
        out.write(f"  {format_cf(s.coefficients)} genus {s.genus} n(1)={s.n1} "
                  f"annulus slope {s.annulus_slope} {s.side_class.value}{flags}\n")
    if args.explain:
        _print_trace(trace, out)
    return 0


def cmd_general(args, out: TextIO) -> int:
    slope = parse_slope(args.curve)
    word = None if _NUMERIC_MATRIX.fullmatch(args.matrix) else GeneratorWord.parse(args.matrix)
    framing = GeneratorWord.parse(args.framing_word) if args.framing_word else None
    monodromy = Monodromy.custom(matrix=parse_matrix(args.matrix), word=word, framing=framing)
    W = choose_W(slope.numerator, slope.denominator)
    forms = special_forms_of(monodromy.matrix, W)
    records = []
    for f in forms:
        rec = {"N": f.N, "J": f.J, "coefficients": list(f.coefficients)}
        if monodromy.framing is not None:
            bc = boundary_coordinates(f, monodromy.framing)
            rec["boundary"] = [bc.wraps, bc.longitude]
            rec["transition_index"] = bc.j
        records.append(rec)
    if args.json:
        _dump({"matrix": str(monodromy.matrix), "curve": str(slope), "W": str(W),
               "coefficient_order": "n(k)..n(1)", "forms": records}, out)
        return 0
    out.write(f"H = {monodromy.matrix}, curve {slope}, W = {W}\n")
    if not records:
        out.write("no special forms\n")
    for rec in records:
        line = f"  N={rec['N']} J={rec['J']} {format_cf(rec['coefficients'])}"
        if "boundary" in rec:
            line += f" boundary <{rec['boundary'][0]}, {rec['boundary'][1]}> j={rec['transition_index']}"
        out.write(line + "\n")
    return 0


def cmd_solve(args, out: TextIO) -> int:
    b = parse_cf(args.scfe)
    sols = solve(b)
    if args.json:
        _dump({
            "scfe": list(b),
            "solutions": [
                {"case": s.case, "I": list(s.I), "J": list(s.J), "N": s.N, "N_prime": s.N_prime,
                 "x_m": list(s.x_m), "surface": s.surface.to_dict()}
                for s in sols
            ],
        }, out)
        return 0
    if not sols:
        out.write("no solutions\n")
    for s in sols:
        out.write(f"case {s.case} I={list(s.I)} J={list(s.J)} N={s.N} N'={s.N_prime} "
                  f"x_m={format_cf(s.x_m)} genus {s.genus}\n")
    return 0


def _random_slopes(rng: random.Random, count: int, max_den: int) -> list[ExtendedRational]:
    skip = unknot_slopes(Monodromy.left_trefoil())
    out = []
    while len(out) < count:
        y = rng.randint(1, max_den)
        x = rng.randint(-3 * y, 3 * y)
        if gcd(x, y) != 1:
            continue
        s = ExtendedRational(x, y)
        if s not in skip:
            out.append(s)
    return out


def cmd_verify(args, out: TextIO) -> int:
    failures = 0
    checked = 0
    for q in range(1, args.max_den + 1):
        for p in range(-q + 1, q):
            if gcd(p, q) != 1:
                continue
            checked += 1
            if enumerate_mcfe(ExtendedRational(p, q)) != oracle_enumerate_mcfe(ExtendedRational(p, q)):
                failures += 1
                out.write(f"MCFE mismatch at {p}/{q}\n")
    out.write(f"mcfe vs edge-path oracle: {checked} fractions, {failures} mismatches\n")

    lefty = Monodromy.left_trefoil()
    rng = random.Random(args.seed)
    bad = 0
    for slope in _random_slopes(rng, args.samples, args.max_den):
        surfaces, _ = algorithm_streamlined(lefty, slope)
        general = sorted((s.coefficients for s in surfaces), key=lambda c: (len(c), c))
        if solution_surfaces(scfe(slope)) != general:
            bad += 1
            out.write(f"solver mismatch at {slope}\n")
        for s in surfaces:
            bc = boundary_coordinates(s.form, lefty.framing)
            if (bc.wraps, bc.longitude) != (1, 0):
                bad += 1
                out.write(f"non-meridional boundary at {slope}: {format_cf(s.coefficients)}\n")
    out.write(f"solver vs general algorithm: {args.samples} slopes, {bad} mismatches\n")
    failures += bad
    out.write("ok\n" if not failures else "FAILED\n")
    return 0 if not failures else 2


def cmd_census(args, out: TextIO) -> int:
    monodromy = Monodromy.builtin(args.monodromy)
    sink = open(args.out, "w") if args.out else out
    try:
        for q in range(1, args.max_den + 1):
            for p in range(-args.max_den, args.max_den + 1):
                if gcd(p, q) != 1:
                    continue
                _dump(surface_report(monodromy, ExtendedRational(p, q)), sink)
    finally:
        if args.out:
            sink.close()
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="fibersurf", description="Closed essential surfaces for knots on fibers "
                     "of the trefoil and figure-eight knots.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("scfe", help="simple continued fraction expansion")
    p.add_argument("slope")
    p.set_defaults(func=cmd_scfe)

    p = sub.add_parser("mcfe", help="all minimal continued fraction expansions")
    p.add_argument("slope")
    p.add_argument("--odd", action="store_true", help="odd length only")
    p.set_defaults(func=cmd_mcfe)

    p = sub.add_parser("surfaces", help="closed essential surfaces for a built-in monodromy")
    p.add_argument("--monodromy", choices=MONODROMIES, default="left-trefoil")
    p.add_argument("slope")
    p.add_argument("--json", action="store_true")
    p.add_argument("--explain", action="store_true", help="show every candidate")
    p.set_defaults(func=cmd_surfaces)

    p = sub.add_parser("general", help="all special forms for any monodromy and curve")
    p.add_argument("--matrix", required=True, help="'x y t u' entries or a word such as 'A^-1 B^-1'")
    p.add_argument("--curve", required=True, help="slope x/y of the curve")
    p.add_argument("--framing-word", help="framing as a word in alpha, beta, phi, psi")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_general)

    p = sub.add_parser("solve", help="index-set solver for the left trefoil")
    p.add_argument("--scfe", required=True, help="e.g. [2,-2,2]")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("verify", help="cross-check the enumerators and the solver")
    p.add_argument("--max-den", type=int, default=100)
    p.add_argument("--samples", type=int, default=200)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("census", help="JSON lines report for every slope up to a height")
    p.add_argument("--max-den", type=int, default=20)
    p.add_argument("--monodromy", choices=MONODROMIES, default="left-trefoil")
    p.add_argument("--out", help="output file (default stdout)")
    p.set_defaults(func=cmd_census)
    return parser


def main(argv: Sequence[str] | None = None, out: TextIO | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    argv = [" " + a if _NEGATIVE_VALUE.fullmatch(a) else a for a in argv]
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except ConsistencyError as exc:
        print(f"fibersurf: consistency failure: {exc}", file=sys.stderr)
        return 2
    except (ValueError, IndexError) as exc:
        print(f"fibersurf: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
