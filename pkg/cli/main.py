"""
chainscope - Command-Line Front End

Usage:
    chainscope eval odometer "a" "11001.(1)"
    chainscope chain pink2s:2 "11.(0)" --depth 5
    chainscope quotients pink2s:2 --depth 4
    chainscope probe coe --g coe-pair-G --h coe-pair-H --level 1 --wordlen 8
    chainscope probe nonhausdorff pink:2,3 --g a3 --x ".(1)" --depth 6
    chainscope cache stats

Exit codes: 0 success, 1 other failure, 2 input or parse error, 3 resource
cap, 4 precondition violation.
"""

import argparse
import sys
import time
from datetime import datetime, timezone
from typing import Any, List, Optional

import pandas as pd

from automaton.action import act_on_boundary
from automaton.builtins import BUILTIN_NAMES, load_system
from automaton.system import AutomatonSystem
from chains.chain import build_chain, discriminant_surjectivity, quotient_table
from chains.conjugacy import conjugacy_witness
from chains.kernel import kernel_probe
from chains.report import chain_report
from database.cache import BsgsCache
from dynamics.coe import coe_check
from dynamics.hausdorff import germ_hausdorff_probe, non_hausdorff_probe
from dynamics.lqa import lqa_probe, topological_freeness_probe
from dynamics.models import ProbeReport
from tree.boundary import format_point, parse_point
from utils.errors import (
    ChainscopeError, DomainError, InputFormatError, PreconditionError, ResourceCapExceeded,
    SystemDefinitionError,
)
from utils.logging_config import get_logger, setup_logging

from .config import DEFAULT_DEPTH, RunConfig, load_config
from .render import render

logger = get_logger("cli")

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_INPUT = 2
EXIT_CAP = 3
EXIT_PRECONDITION = 4

PROBE_KINDS = ["lqa", "freeness", "nonhausdorff", "germ", "coe", "kernel", "conjugacy"]


# =============================================================================
# PARSER
# =============================================================================

def _common_options() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", dest="output_format", choices=["json", "text"], default=None,
                        help="Output format (default: json)")
    common.add_argument("--enum-cap", type=int, default=None, help="Largest group enumerated element by element")
    common.add_argument("--point-cap", type=int, default=None, help="Largest level size d**n")
    common.add_argument("--identity-cap", type=int, default=None, help="Largest section closure in identity tests")
    common.add_argument("--state-cap", type=int, default=None, help="Largest state space in boundary actions")
    common.add_argument("--cache-dir", default=None, help="Directory of the BSGS cache")
    common.add_argument("--no-cache", dest="use_cache", action="store_false", default=None,
                        help="Do not read or write the BSGS cache")
    common.add_argument("--env-file", default=None, help="Read settings from this .env file")
    common.add_argument("--log-level", default=None, help="DEBUG, INFO, WARNING or ERROR")
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common_options()
    parser = argparse.ArgumentParser(
        prog="chainscope",
        description="Group-chain invariants of tree actions defined by wreath recursion",
        epilog=f"Built-in systems: {', '.join(BUILTIN_NAMES)}",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", parents=[common], help="Image of a boundary point under a word")
    p.add_argument("system")
    p.add_argument("word")
    p.add_argument("point")

    p = sub.add_parser("chain", parents=[common], help="Chain report at a truncation depth")
    p.add_argument("system")
    p.add_argument("basepoint")
    p.add_argument("--depth", type=int, default=None)
    p.add_argument("--lookahead", type=int, default=None)
    p.add_argument("--heights", nargs="*", default=[], metavar="WORD", help="Words whose height is reported")
    p.add_argument("--with-meta", action="store_true", help="Add a meta block with timing")

    p = sub.add_parser("quotients", parents=[common], help="Per-level quotient and isotropy orders")
    p.add_argument("system")
    p.add_argument("--depth", type=int, default=None)
    p.add_argument("--basepoint", default=".(0)")

    p = sub.add_parser("probe", parents=[common], help="Dynamical probes with certificates")
    p.add_argument("kind", choices=PROBE_KINDS)
    p.add_argument("system", nargs="?", default=None)
    p.add_argument("--g", default=None, help="Word (nonhausdorff, germ) or first system (coe)")
    p.add_argument("--h", default=None, help="Second system (coe)")
    p.add_argument("--x", default=None, help="Basepoint")
    p.add_argument("--y", default=None, help="Target point (conjugacy)")
    p.add_argument("--depth", type=int, default=None)
    p.add_argument("--level", type=int, default=1, help="Partition level (coe)")
    p.add_argument("--wordlen", type=int, default=None)
    p.add_argument("--outer-level", type=int, default=None)
    p.add_argument("--inner-level", type=int, default=None)
    p.add_argument("--search-levels", type=int, default=6)

    p = sub.add_parser("cache", parents=[common], help="Inspect or clear the BSGS cache")
    p.add_argument("action", choices=["stats", "clear"])
    return parser


def _config(args) -> RunConfig:
    overrides = {
        "output_format": args.output_format,
        "enum_cap": args.enum_cap,
        "point_cap": args.point_cap,
        "identity_cap": args.identity_cap,
        "state_cap": args.state_cap,
        "cache_dir": args.cache_dir,
        "use_cache": args.use_cache,
        "lookahead": getattr(args, "lookahead", None),
        "word_length": getattr(args, "wordlen", None),
        "depth": getattr(args, "depth", None),
    }
    return load_config(overrides, env_file=args.env_file)


def _emit(obj: Any, config: RunConfig) -> None:
    print(render(obj, config.output_format))


def _system(spec: Optional[str], what: str = "system") -> AutomatonSystem:
    if not spec:
        raise InputFormatError(f"missing {what}")
    return load_system(spec)


def _depth(requested: Optional[int], config: RunConfig, fallback: int) -> int:
    depth = fallback if requested is None else requested
    if depth < 0 or depth > config.max_level:
        raise InputFormatError(f"depth must lie in 0..{config.max_level}, got {depth}")
    return depth


# =============================================================================
# COMMANDS
# =============================================================================

def cmd_eval(args, config: RunConfig) -> int:
    system = _system(args.system)
    word = system.word(args.word)
    point = parse_point(args.point, system.degree)
    print(format_point(act_on_boundary(system, word, point, config.state_cap)))
    return EXIT_OK


def cmd_chain(args, config: RunConfig) -> int:
    started = time.perf_counter()
    system = _system(args.system)
    x = parse_point(args.basepoint, system.degree)
    depth = _depth(config.depth, config, min(DEFAULT_DEPTH, config.max_level))
    cache = BsgsCache(config.cache_dir) if config.use_cache else None
    try:
        chain = build_chain(system, x, depth + config.lookahead, config.to_limits(), cache)
        report = chain_report(
            chain, depth, config.lookahead, config.trailing_window, config.min_strict_levels,
            probe_words=[system.word(w) for w in args.heights],
        )
    finally:
        if cache is not None:
            cache.close()
    if not args.with_meta:
        _emit(report, config)
        return EXIT_OK
    data = report.model_dump(mode="json")
    data["meta"] = {
        "generated_at": datetime.now(timezone.utc).isoformat(),
        "elapsed_sec": round(time.perf_counter() - started, 3),
    }
    _emit(data, config)
    return EXIT_OK


def cmd_quotients(args, config: RunConfig) -> int:
    system = _system(args.system)
    depth = _depth(config.depth, config, min(DEFAULT_DEPTH, config.max_level))
    x = parse_point(args.basepoint, system.degree)
    cache = BsgsCache(config.cache_dir) if config.use_cache else None
    try:
        chain = build_chain(system, x, depth, config.to_limits(), cache)
        table = quotient_table(chain, depth)
        onto = discriminant_surjectivity(chain, depth)
    finally:
        if cache is not None:
            cache.close()
    rows = [
        {**q.to_dict(), "transitive": q.Q.is_transitive(), "onto_previous": onto[q.level - 1] if q.level else None}
        for q in table
    ]
    if config.output_format == "text":
        print(pd.DataFrame(rows).to_string(index=False))
    else:
        _emit({"system": system.name, "system_hash": system.content_hash, "depth": depth, "levels": rows}, config)
    return EXIT_OK


def _probe_result(args, config: RunConfig):
    kind = args.kind
    depth = DEFAULT_DEPTH if config.depth is None else config.depth
    wordlen = config.word_length
    limits = config.to_limits()
    if kind == "coe":
        g_sys, h_sys = _system(args.g, "--g system"), _system(args.h, "--h system")
        witness = coe_check(g_sys, h_sys, args.level, wordlen, identity_cap=config.identity_cap,
                            word_cap=limits.word_cap, point_cap=config.point_cap)
        return g_sys, {"level": args.level, "wordlen": wordlen, "h": h_sys.name}, witness.to_dict()

    system = _system(args.system)
    if kind == "lqa":
        outer = args.outer_level if args.outer_level is not None else depth
        inner = args.inner_level if args.inner_level is not None else depth
        found = lqa_probe(system, wordlen, outer, inner, config.identity_cap, limits.word_cap)
        params = {"wordlen": wordlen, "outer_level": outer, "inner_level": inner}
        return system, params, [v.to_dict() for v in found]
    if kind == "freeness":
        report = topological_freeness_probe(system, wordlen, depth, config.identity_cap, limits.word_cap)
        return system, {"wordlen": wordlen, "depth": depth}, report.to_dict()
    if kind in ("nonhausdorff", "germ"):
        if args.g is None or args.x is None:
            raise InputFormatError(f"probe {kind} needs --g WORD and --x POINT")
        g = system.word(args.g)
        x = parse_point(args.x, system.degree)
        probe = non_hausdorff_probe if kind == "nonhausdorff" else germ_hausdorff_probe
        result = probe(system, g, x, depth, args.search_levels, config.identity_cap, config.state_cap)
        return system, {"g": str(g), "x": format_point(x), "depth": depth}, result.to_dict()
    if kind == "kernel":
        x = parse_point(args.x or ".(0)", system.degree)
        report = kernel_probe(system, x, wordlen, limits)
        return system, {"x": format_point(x), "wordlen": wordlen}, report.to_dict()
    if kind == "conjugacy":
        if args.x is None or args.y is None:
            raise InputFormatError("probe conjugacy needs --x POINT and --y POINT")
        x, y = parse_point(args.x, system.degree), parse_point(args.y, system.degree)
        witness = conjugacy_witness(system, x, y, depth, limits.word_cap)
        return system, {"x": format_point(x), "y": format_point(y), "depth": depth}, witness.to_dict()
    raise InputFormatError(f"unknown probe {kind!r}")


def cmd_probe(args, config: RunConfig) -> int:
    system, params, result = _probe_result(args, config)
    report = ProbeReport(
        probe=args.kind,
        system=system.name,
        system_hash=system.content_hash,
        params=params,
        verified=True,
        result=result,
    )
    _emit(report, config)
    return EXIT_OK


def cmd_cache(args, config: RunConfig) -> int:
    cache = BsgsCache(config.cache_dir)
    try:
        if args.action == "clear":
            _emit({"removed": cache.clear()}, config)
        else:
            _emit(cache.stats(), config)
    finally:
        cache.close()
    return EXIT_OK


COMMANDS = {
    "eval": cmd_eval,
    "chain": cmd_chain,
    "quotients": cmd_quotients,
    "probe": cmd_probe,
    "cache": cmd_cache,
}


# =============================================================================
# ENTRY POINT
# =============================================================================

def exit_code_for(exc: BaseException) -> int:
    if isinstance(exc, (InputFormatError, SystemDefinitionError)):
        return EXIT_INPUT
    if isinstance(exc, ResourceCapExceeded):
        return EXIT_CAP
    if isinstance(exc, (PreconditionError, DomainError)):
        return EXIT_PRECONDITION
    return EXIT_FAILURE


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    setup_logging(args.log_level)
    try:
        config = _config(args)
        return COMMANDS[args.command](args, config)
    except ChainscopeError as exc:
        logger.error("%s failed: %s", args.command, exc)
        print(f"error: {exc}", file=sys.stderr)
        return exit_code_for(exc)


if __name__ == "__main__":
    sys.exit(main())
