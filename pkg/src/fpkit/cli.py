"""``fpkit`` command line.

Exit codes: 0 success, 2 bad input (arguments, config, word syntax),
3 theorem precondition violated (trivial N or a trivial factor),
4 internal invariant breach or failed verdict.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import report as rpt
from .config import SpecConfig, load_config
from .cosets import build_window, double_cosets
from .errors import ConfigError, FpkitError, PreconditionError
from .kurosh import decompose, verify_theorem
from .quotient import build_projection
from .words import format_word, parse_word

EXIT_OK, EXIT_INPUT, EXIT_PRECONDITION, EXIT_INTERNAL = 0, 2, 3, 4


def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--config", required=True, help="JSON config file, or a bundled config name")
    p.add_argument("--window", type=int, help="window bound L (letters in the quotient)")
    p.add_argument("--samples", type=int, help="random samples per sampled check")
    p.add_argument("--seed", type=int, help="seed for all sampling")
    p.add_argument("--max-syllables", type=int, dest="max_syllables")
    p.add_argument("--json", type=Path, dest="json_path", metavar="PATH", help="write the JSON report here")
    p.add_argument("--quiet", action="store_true", help="suppress tables")
    p.add_argument("--allow-multi", action="store_true", default=None, dest="allow_multi",
                   help="allow nontrivial normal subgroups in several factors")
    return p


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fpkit",
        description="Normal closures of factor subgroups in free products of finite groups.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    common = _common()
    r = sub.add_parser("reduce", parents=[common], help="print the reduced form of a word")
    r.add_argument("word", help="word in g<i>^<e>*... syntax, or 1")
    sub.add_parser("cosets", parents=[common], help="list the cosets of H in the window")
    sub.add_parser("double-cosets", parents=[common], help="list (H, G_i)-double cosets")
    sub.add_parser("decompose", parents=[common], help="list the free factors of H")
    sub.add_parser("verify", parents=[common], help="run the full verification suite")
    return parser


def _load(args) -> SpecConfig:
    return load_config(
        args.config,
        window=args.window,
        samples=args.samples,
        seed=args.seed,
        max_syllables=args.max_syllables,
        allow_multi=args.allow_multi,
    )


def _write_json(args, text: str) -> None:
    if args.json_path is not None:
        args.json_path.write_text(text)


def cmd_reduce(args, cfg: SpecConfig) -> int:
    print(format_word(parse_word(args.word, cfg.family)))
    return EXIT_OK


def cmd_cosets(args, cfg: SpecConfig) -> int:
    w = build_window(build_projection(cfg.spec), cfg.options["window"])
    print(rpt.window_table(w))
    return EXIT_OK


def cmd_double_cosets(args, cfg: SpecConfig) -> int:
    w = build_window(build_projection(cfg.spec), cfg.options["window"])
    blocks = [rpt.double_coset_table(w, i, double_cosets(w, i)) for i in range(len(cfg.family))]
    print("\n\n".join(blocks))
    return EXIT_OK


def cmd_decompose(args, cfg: SpecConfig) -> int:
    report = decompose(build_projection(cfg.spec), max(1, cfg.options["window"]))
    if not args.quiet:
        print(rpt.factor_table(report))
        print()
    for line in rpt.verdict_lines(report.verdicts):
        print(line)
    _write_json(args, rpt.dumps(report, names=cfg.names, options=cfg.options))
    return EXIT_OK


def cmd_verify(args, cfg: SpecConfig) -> int:
    o = cfg.options
    report = verify_theorem(cfg.spec, max(1, o["window"]), o["samples"], o["seed"], o["max_syllables"])
    if not args.quiet:
        print(rpt.window_table(report.window))
        print()
        print(rpt.factor_table(report))
        print()
    for line in rpt.verdict_lines(report.verdicts):
        print(line)
    _write_json(args, rpt.dumps(report, names=cfg.names, options=cfg.options))
    if report.passed:
        print("all verdicts pass")
        return EXIT_OK
    print("verification FAILED")
    return EXIT_INTERNAL


COMMANDS = {
    "reduce": cmd_reduce,
    "cosets": cmd_cosets,
    "double-cosets": cmd_double_cosets,
    "decompose": cmd_decompose,
    "verify": cmd_verify,
}


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cfg = _load(args)
        return COMMANDS[args.command](args, cfg)
    except ConfigError as exc:
        print(f"fpkit: error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except PreconditionError as exc:
        print(f"fpkit: precondition: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except FpkitError as exc:
        print(f"fpkit: internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
