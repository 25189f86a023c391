"""Command-line front end.

Exit codes: 0 success or positive verdict, 1 negative verdict or failed
check, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from typing import Any, Sequence

from .fricke import trace_polynomial, trace_square_equivalent
from .heights import COLLINEAR_TOL, DEFAULT_FD_STEP, PointList, breakpoints_and_jumps, finite_difference_jump
from .homology import DEFAULT_MAP, GeneratorImageMap, homology_class, plus_minus_equal
from .pants import CONVENTIONS, arc_tuple
from .pit import DEFAULT_SAMPLES, pit_trace_equiv
from .sl2 import SamplerConfig
from .verify import verify_paper
from .words import DEFAULT_RANK, WordError, are_conjugate, cyclic_reduce, format_word, parse_word

FD_TOL = 1e-4

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_USAGE = 2


@dataclass
class CommandResult:
    command: str
    payload: Any
    exit_code: int
    text: str = ""

    def render(self, as_json: bool) -> str:
        if as_json or not self.text:
            return dumps(self.payload)
        return self.text


def dumps(payload: Any) -> str:
    return json.dumps(payload, separators=(",", ":"), ensure_ascii=True)


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _word(text: str, rank: int):
    return parse_word(text, rank)


def cmd_trace_poly(args) -> CommandResult:
    w = _word(args.word, 2)
    p = trace_polynomial(w)
    return CommandResult("trace-poly", {"word": format_word(w), "polynomial": str(p), "terms": p.to_json()},
                         EXIT_OK, str(p))


def cmd_trace_equiv(args) -> CommandResult:
    w1, w2 = _word(args.word1, args.rank), _word(args.word2, args.rank)
    method = args.method
    if method == "auto":
        method = "fricke" if (w1.generators() | w2.generators()) <= {0, 1} else "pit"
    if method == "fricke":
        res = trace_square_equivalent(w1, w2)
        payload = {"equivalent": res.equivalent, "method": "fricke"}
        if not res.equivalent:
            payload["difference"] = str(res.difference)
        text = "equivalent" if res.equivalent else f"not equivalent: tr^2 difference {res.difference}"
        return CommandResult("trace-equiv", payload, EXIT_OK if res.equivalent else EXIT_NEGATIVE, text)
    for w in (w1, w2):
        cyclic_reduce(w)  # rejects the identity
    verdict = pit_trace_equiv(w1, w2, rank=args.rank, samples=args.samples,
                              config=SamplerConfig(seed=args.seed), workers=args.workers)
    payload = {"equivalent": False if verdict.refuted else None, "method": "pit",
               "verdict": verdict.to_json()}
    text = (f"refuted at sample {verdict.witness.sample_index}" if verdict.refuted
            else f"no refutation in {verdict.samples_used} samples")
    return CommandResult("trace-equiv", payload, EXIT_NEGATIVE if verdict.refuted else EXIT_OK, text)


def cmd_conjugate(args) -> CommandResult:
    w1, w2 = _word(args.word1, args.rank), _word(args.word2, args.rank)
    result = are_conjugate(w1, w2, allow_inverse=args.allow_inverse)
    payload = {"conjugate": result, "allow_inverse": args.allow_inverse,
               "classes": [str(cyclic_reduce(w1)), str(cyclic_reduce(w2))]}
    return CommandResult("conjugate", payload, EXIT_OK if result else EXIT_NEGATIVE,
                         "conjugate" if result else "not conjugate")


def cmd_pants_arcs(args) -> CommandResult:
    t = arc_tuple(_word(args.word, 2), CONVENTIONS[args.pants_c])
    return CommandResult("pants-arcs", t.to_json(), EXIT_OK, " ".join(map(str, t.astuple())))


def cmd_si_equiv(args) -> CommandResult:
    conv = CONVENTIONS[args.pants_c]
    t1, t2 = arc_tuple(_word(args.word1, 2), conv), arc_tuple(_word(args.word2, 2), conv)
    eq = t1 == t2
    payload = {"tuples": [t1.to_json(), t2.to_json()], "equivalent": eq}
    return CommandResult("si-equiv", payload, EXIT_OK if eq else EXIT_NEGATIVE,
                         f"{t1.astuple()} {t2.astuple()} {'equivalent' if eq else 'not equivalent'}")


def _map(args) -> GeneratorImageMap:
    return GeneratorImageMap.parse(args.map) if args.map else DEFAULT_MAP


def cmd_homology(args) -> CommandResult:
    v = homology_class(_word(args.word, args.rank), _map(args))
    return CommandResult("homology", {"class": list(v)}, EXIT_OK, " ".join(map(str, v)))


def cmd_homology_equiv(args) -> CommandResult:
    m = _map(args)
    v1, v2 = homology_class(_word(args.word1, args.rank), m), homology_class(_word(args.word2, args.rank), m)
    eq = plus_minus_equal(v1, v2)
    payload = {"classes": [list(v1), list(v2)], "plus_minus_equal": eq}
    return CommandResult("homology-equiv", payload, EXIT_OK if eq else EXIT_NEGATIVE,
                         f"{list(v1)} {list(v2)} {'equal up to sign' if eq else 'different'}")


def cmd_heights(args) -> CommandResult:
    Z = PointList.parse(args.points)
    report = breakpoints_and_jumps(Z, args.collinear_tol)
    payload = report.to_json()
    code = EXIT_OK
    if args.check_fd:
        ok = True
        for entry, bp in zip(payload["breakpoints"], report.breakpoints):
            est = finite_difference_jump(Z, bp.theta, args.fd_step, corrected=True)
            entry["fd_jump"] = est
            ok &= abs(est - bp.jump) <= FD_TOL
        payload["fd_ok"] = ok
        code = EXIT_OK if ok else EXIT_NEGATIVE
    lines = [f"theta={b['theta']!r} jump={b['jump']!r}" for b in payload["breakpoints"]]
    lines.append(f"length={payload['length']!r}")
    return CommandResult("heights", payload, code, "\n".join(lines))


def cmd_verify_paper(args) -> CommandResult:
    report = verify_paper(seed=args.seed, convention=CONVENTIONS[args.pants_c])
    payload = report.to_json()
    lines = [f"{'PASS' if c.passed else 'FAIL'} {c.name}" for c in report.checks]
    lines.append("all checks passed" if report.passed else "some checks failed")
    return CommandResult("verify-paper", payload, EXIT_OK if report.passed else EXIT_NEGATIVE,
                         "\n".join(lines))


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit machine-readable JSON")
    common.add_argument("--rank", type=int, default=DEFAULT_RANK, help="free group rank (default 2)")

    pants_opt = _Parser(add_help=False)
    pants_opt.add_argument("--pants-c", choices=sorted(CONVENTIONS), default="aB",
                           help="third boundary class: aB = a b^-1 (default), BA = (ab)^-1 (debug)")

    parser = _Parser(prog="curvequiv", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("trace-poly", parents=[common], help="Fricke polynomial of a word in a, b")
    p.add_argument("word")
    p.set_defaults(func=cmd_trace_poly)

    p = sub.add_parser("trace-equiv", parents=[common], help="decide or refute trace equivalence")
    p.add_argument("word1")
    p.add_argument("word2")
    p.add_argument("--method", choices=["auto", "fricke", "pit"], default="auto")
    p.add_argument("--samples", type=int, default=DEFAULT_SAMPLES)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_trace_equiv)

    p = sub.add_parser("conjugate", parents=[common], help="conjugacy test")
    p.add_argument("word1")
    p.add_argument("word2")
    p.add_argument("--allow-inverse", action="store_true")
    p.set_defaults(func=cmd_conjugate)

    p = sub.add_parser("pants-arcs", parents=[common, pants_opt], help="six arc intersection numbers")
    p.add_argument("word")
    p.set_defaults(func=cmd_pants_arcs)

    p = sub.add_parser("si-equiv", parents=[common, pants_opt], help="simple-intersection equivalence in the pants")
    p.add_argument("word1")
    p.add_argument("word2")
    p.set_defaults(func=cmd_si_equiv)

    p = sub.add_parser("homology", parents=[common], help="homology class of a word")
    p.add_argument("word")
    p.add_argument("--map", nargs="+", metavar="G=V1,V2", help="generator images, default a=1,0 b=0,1")
    p.set_defaults(func=cmd_homology)

    p = sub.add_parser("homology-equiv", parents=[common], help="compare homology classes up to sign")
    p.add_argument("word1")
    p.add_argument("word2")
    p.add_argument("--map", nargs="+", metavar="G=V1,V2")
    p.set_defaults(func=cmd_homology_equiv)

    p = sub.add_parser("heights", parents=[common], help="breakpoints and jumps of the height function")
    p.add_argument("--points", required=True, help='e.g. "1,0;0,1;-2,0"')
    p.add_argument("--check-fd", action="store_true", help="cross-check jumps by finite differences")
    p.add_argument("--fd-step", type=float, default=DEFAULT_FD_STEP)
    p.add_argument("--collinear-tol", type=float, default=COLLINEAR_TOL)
    p.set_defaults(func=cmd_heights)

    p = sub.add_parser("verify-paper", parents=[common, pants_opt], help="replay the worked examples")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_verify_paper)
    return parser


def run(argv: Sequence[str]) -> CommandResult:
    try:
        args = build_parser().parse_args(list(argv))
        return args.func(args)
    except (UsageError, WordError, ValueError, KeyError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else str(exc)
        return CommandResult("error", {"error": str(msg)}, EXIT_USAGE, str(msg))


def main(argv: Sequence[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    if not argv or argv[0] in ("-h", "--help"):
        build_parser().print_help()
        return EXIT_OK if argv else EXIT_USAGE
    wants_json = "--json" in argv
    result = run(argv)
    if result.exit_code == EXIT_USAGE:
        print(f"error: {result.text}", file=sys.stderr)
        return EXIT_USAGE
    print(result.render(wants_json))
    return result.exit_code


if __name__ == "__main__":
    sys.exit(main())
