"""Command-line front end: JSON on stdout, exit 0/2/3.

Commands: analyze, classify, cmc, decompose, divide, ball, corpus.
Exit codes: 0 success, 2 input error (bad flags, parse errors, violated
preconditions), 3 internal validation failure (an exact recheck failed).
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from . import __version__
from .asymptotics import BallSearchError, find_sign_ball
from .corpus import CORPUS, get_entry
from .curvature import is_cmc
from .parser import ParseError, VarConvention, default_convention, format_poly, parse
from .polynomial import Polynomial, SphereQuadric, divide_by_sphere_quadric
from .quadrics import classify_quadric
from .calculus import homogeneous_parts
from .report import (
    InternalValidationError,
    analyze,
    ball_result_dict,
    curvature_report_dict,
    quadric_class_dict,
    to_json,
)


class UsageError(ValueError):
    pass


def _build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="cmcsurf", description=__doc__)
    ap.add_argument("--version", action="version", version=f"cmcsurf {__version__}")
    sub = ap.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--poly", help="polynomial expression")
    common.add_argument("--corpus", help="name of a built-in corpus entry")
    common.add_argument("--dim", type=int, help="number of variables (with --poly)")
    common.add_argument("--vars", choices=("named", "indexed"),
                        help="variable convention (default: named for dim <= 4)")
    common.add_argument("--seed", type=int, default=0, help="RNG seed (default 0)")
    common.add_argument("--samples", type=int, default=200,
                        help="variety sample count (default 200)")
    common.add_argument("--tol", type=float, default=1e-6,
                        help="CMC tolerance (default 1e-6)")
    common.add_argument("--verbose", action="store_true",
                        help="human-readable summary on stderr")

    sub.add_parser("analyze", parents=[common], help="full analysis report")
    sub.add_parser("classify", parents=[common], help="exact quadric classification")
    cmc = sub.add_parser("cmc", parents=[common], help="constant-mean-curvature test")
    cmc.add_argument("--c", help="optional exact CMC target, e.g. 1/2")
    sub.add_parser("decompose", parents=[common], help="homogeneous parts")
    divide = sub.add_parser("divide", parents=[common],
                            help="exact division by a sphere quadric")
    divide.add_argument("--sphere", required=True,
                        help='sphere quadric as "k,(a1,...,ak+1),r2"')
    ball = sub.add_parser("ball", parents=[common],
                          help="constant-sign ball with cone certificate")
    ball.add_argument("--radius", type=float, required=True, help="ball radius")
    ball.add_argument("--sign", choices=("positive", "negative"),
                      help="requested sign region (default: automatic)")
    sub.add_parser("corpus", parents=[common],
                   help="list corpus entries, or analyze one with --corpus")
    return ap


def _resolve_input(args) -> tuple[Polynomial, VarConvention, str]:
    if args.corpus and args.poly:
        raise UsageError("--poly and --corpus are mutually exclusive")
    if args.corpus:
        try:
            entry = get_entry(args.corpus)
        except KeyError as exc:
            raise UsageError(str(exc)) from exc
        conv = entry.convention
        return parse(entry.text, conv), conv, entry.text
    if not args.poly:
        raise UsageError("one of --poly or --corpus is required")
    if not args.dim:
        raise UsageError("--dim is required with --poly")
    mode = args.vars
    if mode is None:
        conv = default_convention(args.dim)
    else:
        conv = VarConvention(mode, args.dim)
    return parse(args.poly, conv), conv, args.poly


def _parse_sphere_arg(text: str) -> SphereQuadric:
    try:
        head, rest = text.split(",", 1)
        k = int(head)
        rest = rest.strip()
        if not rest.startswith("("):
            raise ValueError
        close = rest.index(")")
        center = [Fraction(t.strip()) for t in rest[1:close].split(",")]
        tail = rest[close + 1:].lstrip(", ")
        radius_sq = Fraction(tail)
        return SphereQuadric(k, center, radius_sq)
    except (ValueError, IndexError) as exc:
        raise UsageError(
            f'bad --sphere value {text!r}; expected "k,(a1,...,ak+1),r2"'
        ) from exc


def _run(args) -> dict:
    p, conv, text = _resolve_input(args)

    if args.command == "analyze" or (args.command == "corpus" and args.corpus):
        return analyze(p, conv, text, seed=args.seed,
                       sample_count=args.samples, tolerance=args.tol)

    if args.command == "classify":
        return {"input": text, "quadric": quadric_class_dict(classify_quadric(p))}

    if args.command == "cmc":
        c_target = Fraction(args.c) if getattr(args, "c", None) else None
        report = is_cmc(p, sample_count=args.samples, tolerance=args.tol,
                        seed=args.seed, c_target=c_target)
        return {"input": text, "curvature": curvature_report_dict(report, conv)}

    if args.command == "decompose":
        decomp = homogeneous_parts(p)
        return {
            "input": text,
            "total_degree": decomp.total_degree,
            "parts": [
                {"degree": i, "polynomial": format_poly(part, conv)}
                for i, part in enumerate(decomp.parts)
                if not part.is_zero
            ],
        }

    if args.command == "divide":
        quadric = _parse_sphere_arg(args.sphere)
        quotient = divide_by_sphere_quadric(p, quadric)
        return {
            "input": text,
            "sphere": {
                "k": quadric.k,
                "center": [str(c) for c in quadric.center],
                "radius_sq": str(quadric.radius_sq),
            },
            "divisible": quotient is not None,
            "quotient": format_poly(quotient, conv) if quotient is not None else None,
        }

    if args.command == "ball":
        result = find_sign_ball(p, args.radius, seed=args.seed, sign=args.sign)
        return {"input": text, **ball_result_dict(result)}

    raise UsageError(f"unknown command {args.command!r}")


def _run_corpus_list() -> dict:
    return {
        "entries": [
            {"name": e.name, "dim": e.dim, "vars": e.vars_mode, "text": e.text}
            for e in CORPUS
        ]
    }


def _summarize(report: dict) -> str:
    lines = []
    if "curvature" in report and isinstance(report["curvature"], dict):
        cur = report["curvature"]
        lines.append(f"curvature verdict: {cur.get('verdict')} (c ~ {cur.get('c_estimate')})")
    if report.get("quadric"):
        lines.append(f"quadric kind: {report['quadric'].get('kind')}")
    if "result" in report:
        lines.append(f"ball result: {report['result']}")
    if "divisible" in report:
        lines.append(f"divisible: {report['divisible']}")
    return "\n".join(lines) or "done"


def main(argv=None) -> int:
    ap = _build_parser()
    args = ap.parse_args(argv)
    try:
        if args.command == "corpus" and not args.corpus:
            report = _run_corpus_list()
        else:
            report = _run(args)
    except (UsageError, ParseError, ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (InternalValidationError, BallSearchError) as exc:
        print(f"internal validation failure: {exc}", file=sys.stderr)
        return 3
    sys.stdout.write(to_json(report) + "\n")
    if args.verbose:
        print(_summarize(report), file=sys.stderr)
    return 0


if __name__ == "__main__":
    sys.exit(main())
