"""Command-line front-end.

Subcommands: ring info, weight, code analyze, bounds check,
family {simplex,octacode,hjelmslev}, chain.  ``--json`` switches the
report-producing commands to machine-readable output with rationals
serialised as "p/q" strings.  Exit codes: 0 success, 1 usage or input
errors, 2 when an applicable bound report comes back violated.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import __version__
from .bounds import BoundReport, check_all
from .families import (
    ResidualChain,
    hjelmslev_line,
    octacode,
    residual_chain,
    simplex,
)
from .homweight import hom_weight_table
from .lincode import LinearCode, build_code, ell, read_generator_rows, write_generator_file
from .rings import DEFAULT_CAP, build_ring, parse_ring_spec


class _Parser(argparse.ArgumentParser):
    # usage problems exit 1, not argparse's default 2 (2 is the violated-bound sentinel)
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _frac(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def _side(value) -> object:
    if value is None:
        return None
    if isinstance(value, Fraction):
        return _frac(value)
    return value


def _dump(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _ring_cap() -> int:
    raw = os.environ.get("FROBCODE_CAP")
    if raw is None:
        return DEFAULT_CAP
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"FROBCODE_CAP={raw!r} is not an integer") from None


def _gamma(text: str) -> Fraction:
    try:
        gamma = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise ValueError(f"--gamma {text!r} is not a rational p/q") from None
    if gamma <= 0:
        raise ValueError("--gamma must be positive")
    return gamma


def _load_code(args) -> LinearCode:
    ring = build_ring(parse_ring_spec(args.ring), cap=_ring_cap())
    table = hom_weight_table(ring, _gamma(args.gamma))
    rows = read_generator_rows(args.gen, ring)
    return build_code(ring, rows, table)


# ---------------------------------------------------------------------------
# JSON shapes
# ---------------------------------------------------------------------------

def code_params_json(code: LinearCode) -> dict:
    d = code.min_hom_norm
    return {
        "n": code.n,
        "M": code.size,
        "ell_C": code.ell_C,
        "min_hamming": code.min_hamming,
        "d_over_gamma": _frac(d) if d is not None else None,
    }


def bound_report_json(code: LinearCode, report: BoundReport) -> dict:
    details = dict(report.details)
    if "word" in details and details["word"] is not None:
        details["word"] = [code.ring.element_names[c] for c in details["word"]]
    return {
        "bound": report.bound,
        "preconditions": [
            {"description": text, "holds": holds}
            for text, holds in report.preconditions
        ],
        "applicable": report.applicable,
        "direction": report.direction,
        "lhs": _side(report.lhs),
        "rhs": _side(report.rhs),
        "satisfied": report.satisfied,
        "sharp": report.sharp,
        "details": details,
    }


def _verdict_json(reports: list[BoundReport]) -> dict:
    return {
        "applicable": sum(1 for r in reports if r.applicable),
        "violated": sum(1 for r in reports if r.applicable and not r.satisfied),
        "sharp": [r.bound for r in reports if r.applicable and r.sharp],
    }


def chain_json(code: LinearCode, chain: ResidualChain) -> dict:
    stages = []
    for index, stage in enumerate(chain.stages):
        d = stage.code.min_hom_norm
        stages.append(
            {
                "index": index,
                "n": stage.code.n,
                "M": stage.code.size,
                "d_over_gamma": _frac(d) if d is not None else None,
                "word": (
                    [code.ring.element_names[c] for c in stage.word]
                    if stage.word is not None
                    else None
                ),
                "hamming_weight": ell(stage.word) if stage.word is not None else None,
                "cyclic_size": stage.cyclic_size,
            }
        )
    return {
        "version": __version__,
        "ring": code.ring.name,
        "code": code_params_json(code),
        "r": chain.r,
        "hypothesis_n_le_d": chain.hypothesis_holds,
        "stages": stages,
        "checks": [{"description": text, "holds": holds} for text, holds in chain.checks],
        "support_inequality": {
            "lhs": chain.inequality_lhs,
            "rhs": _side(chain.inequality_rhs),
        },
    }


def family_report_json(family: str, code: LinearCode, reports, extra: dict) -> dict:
    out = {
        "version": __version__,
        "ring": code.ring.name,
        "family": family,
    }
    out.update(extra)
    out["code"] = code_params_json(code)
    out["bounds"] = [bound_report_json(code, r) for r in reports]
    out["verdict"] = _verdict_json(reports)
    return out


# ---------------------------------------------------------------------------
# Text shapes
# ---------------------------------------------------------------------------

def _print_params(code: LinearCode) -> None:
    d = code.min_hom_norm
    print(f"n: {code.n}")
    print(f"M: {code.size}")
    print(f"ell_C: {code.ell_C}")
    print(f"min_hamming: {code.min_hamming if code.min_hamming is not None else '-'}")
    print(f"d/gamma: {d if d is not None else '-'}")


def _print_bounds(reports) -> None:
    for r in reports:
        if not r.applicable:
            failed = next(text for text, holds in r.preconditions if not holds)
            print(f"{r.bound}: not applicable ({failed})")
        else:
            verdict = "VIOLATED" if not r.satisfied else "satisfied (sharp)" if r.sharp else "satisfied"
            op = "<=" if r.direction == "le" else ">="
            print(f"{r.bound}: {verdict} [{r.lhs} {op} {r.rhs}]")


def _print_chain(code: LinearCode, chain: ResidualChain) -> None:
    print(f"r: {chain.r}")
    print(f"hypothesis n <= d/gamma: {'holds' if chain.hypothesis_holds else 'fails'}")
    for index, stage in enumerate(chain.stages):
        c = stage.code
        d = c.min_hom_norm if c.min_hom_norm is not None else "-"
        line = f"stage {index}: n={c.n} M={c.size} d/gamma={d}"
        if stage.word is not None:
            word = " ".join(code.ring.element_names[x] for x in stage.word)
            line += f" | removed [{word}] ell={ell(stage.word)} |Rc|={stage.cyclic_size}"
        else:
            line += " | final"
        print(line)
    for text, holds in chain.checks:
        state = "skipped" if holds is None else ("ok" if holds else "FAILED")
        print(f"check: {text}: {state}")
    if chain.inequality_lhs is not None:
        print(f"support inequality: {chain.inequality_lhs} >= {chain.inequality_rhs}")


# ---------------------------------------------------------------------------
# Commands
# ---------------------------------------------------------------------------

def _cmd_ring_info(args) -> int:
    ring = build_ring(parse_ring_spec(args.ring), cap=_ring_cap())
    print(f"ring: {ring.name}")
    print(f"size: {ring.size}")
    print(f"units: {len(ring.units)}")
    print(f"additive exponent: {ring.add_exponent}")
    return 0


def _cmd_weight(args) -> int:
    ring = build_ring(parse_ring_spec(args.ring), cap=_ring_cap())
    table = hom_weight_table(ring, _gamma(args.gamma))
    for x in range(ring.size):
        print(f"{ring.element_names[x]}: {table.weight(x)}")
    return 0


def _cmd_code_analyze(args) -> int:
    code = _load_code(args)
    sys.stdout.write(_dump(code_params_json(code)))
    return 0


def _bounds_exit(reports) -> int:
    return 2 if any(r.applicable and not r.satisfied for r in reports) else 0


def _cmd_bounds_check(args) -> int:
    code = _load_code(args)
    reports = check_all(code)
    if args.json:
        sys.stdout.write(_dump([bound_report_json(code, r) for r in reports]))
    else:
        _print_bounds(reports)
    return _bounds_exit(reports)


def _family_output(args, family: str, code: LinearCode, extra: dict) -> int:
    if args.emit_gen:
        write_generator_file(args.emit_gen, code.ring, code.generators)
    reports = check_all(code)
    if args.json:
        sys.stdout.write(_dump(family_report_json(family, code, reports, extra)))
    else:
        print(f"family: {family}")
        print(f"ring: {code.ring.name}")
        _print_params(code)
        _print_bounds(reports)
    return _bounds_exit(reports)


def _cmd_family_simplex(args) -> int:
    ring = build_ring(parse_ring_spec(args.ring), cap=_ring_cap())
    table = hom_weight_table(ring, _gamma(args.gamma))
    code = simplex(ring, args.m, table)
    return _family_output(args, "simplex", code, {"m": args.m})


def _cmd_family_octacode(args) -> int:
    code = octacode()
    return _family_output(args, "octacode", code, {})


def _cmd_family_hjelmslev(args) -> int:
    ring = build_ring(parse_ring_spec(args.ring), cap=_ring_cap())
    table = hom_weight_table(ring, _gamma(args.gamma))
    code = hjelmslev_line(ring, table)
    return _family_output(args, "hjelmslev", code, {})


def _cmd_chain(args) -> int:
    code = _load_code(args)
    chain = residual_chain(code)
    if args.json:
        sys.stdout.write(_dump(chain_json(code, chain)))
    else:
        _print_chain(code, chain)
    failed = chain.hypothesis_holds and any(holds is False for _, holds in chain.checks)
    return 2 if failed else 0


# ---------------------------------------------------------------------------
# Argument wiring
# ---------------------------------------------------------------------------

def _add_ring(p, required=True):
    p.add_argument("--ring", required=required, help="ring spec, e.g. Z4, GF(9), M2(GF(2)), Z2xZ3, CHAIN(2)")


def _add_gamma(p):
    p.add_argument("--gamma", default="1", help="average weight value as p/q (default 1)")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="frobcode", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"frobcode {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    ring = sub.add_parser("ring", help="ring-level queries")
    ring_sub = ring.add_subparsers(dest="ring_command", required=True)
    info = ring_sub.add_parser("info", help="size, units and additive exponent")
    _add_ring(info)
    info.set_defaults(func=_cmd_ring_info)

    weight = sub.add_parser("weight", help="print the exact homogeneous weight table")
    _add_ring(weight)
    _add_gamma(weight)
    weight.set_defaults(func=_cmd_weight)

    code = sub.add_parser("code", help="code-level queries")
    code_sub = code.add_subparsers(dest="code_command", required=True)
    analyze = code_sub.add_parser("analyze", help="parameters of a generated code as JSON")
    _add_ring(analyze)
    analyze.add_argument("--gen", required=True, help="generator matrix file")
    _add_gamma(analyze)
    analyze.set_defaults(func=_cmd_code_analyze)

    bounds = sub.add_parser("bounds", help="bound evaluation")
    bounds_sub = bounds.add_subparsers(dest="bounds_command", required=True)
    bcheck = bounds_sub.add_parser("check", help="evaluate every bound on a code")
    _add_ring(bcheck)
    bcheck.add_argument("--gen", required=True, help="generator matrix file")
    _add_gamma(bcheck)
    bcheck.add_argument("--json", action="store_true", help="machine-readable output")
    bcheck.set_defaults(func=_cmd_bounds_check)

    family = sub.add_parser("family", help="built-in code families")
    family_sub = family.add_subparsers(dest="family_command", required=True)

    fsimp = family_sub.add_parser("simplex", help="simplex code over a ring")
    _add_ring(fsimp)
    fsimp.add_argument("-m", type=int, required=True, help="number of generator rows")
    _add_gamma(fsimp)
    fsimp.add_argument("--json", action="store_true")
    fsimp.add_argument("--emit-gen", help="write the generator matrix to a file")
    fsimp.set_defaults(func=_cmd_family_simplex)

    focta = family_sub.add_parser("octacode", help="the quaternary Octacode")
    focta.add_argument("--json", action="store_true")
    focta.add_argument("--emit-gen", help="write the generator matrix to a file")
    focta.set_defaults(func=_cmd_family_octacode)

    fhjelm = family_sub.add_parser("hjelmslev", help="projective Hjelmslev line code")
    _add_ring(fhjelm)
    _add_gamma(fhjelm)
    fhjelm.add_argument("--json", action="store_true")
    fhjelm.add_argument("--emit-gen", help="write the generator matrix to a file")
    fhjelm.set_defaults(func=_cmd_family_hjelmslev)

    chain = sub.add_parser("chain", help="residual-chain certificate of a code")
    _add_ring(chain)
    chain.add_argument("--gen", required=True, help="generator matrix file")
    _add_gamma(chain)
    chain.add_argument("--json", action="store_true")
    chain.set_defaults(func=_cmd_chain)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 1
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"frobcode: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
