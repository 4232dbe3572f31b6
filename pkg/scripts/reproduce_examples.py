"""
chainscope - Worked Examples

Recomputes the standard examples on the built-in systems and prints a
summary:
- odometer evaluations and free transitive level groups
- the orbit-equivalent pair: alpha assignments, collisions, freeness
- pink2s:s stabilizer subchain along 11.(0) with its verdicts
- pink:s,r non-Hausdorff witness for a_{s+1} at the constant point .(1)

Every witness is re-verified before it is printed.

Usage:
    python scripts/reproduce_examples.py [--depth 6] [--wordlen 8] [--s 2] [--output examples.json]
"""

import argparse
import json
import os
import sys
import time
from typing import Any, Dict

# Add parent directory to path for imports
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

import pandas as pd

from automaton.action import act_on_boundary
from automaton.builtins import builtin_system
from chains.chain import build_chain
from chains.report import chain_report
from dynamics.coe import coe_check
from dynamics.hausdorff import non_hausdorff_probe
from dynamics.lqa import topological_freeness_probe
from dynamics.verify import verify
from quotients.groups import group_image
from tree.boundary import format_point, parse_point
from utils.logging_config import get_logger, setup_logging

logger = get_logger("scripts.examples")

ODOMETER_POINTS = ["0001110.(0)", "11001.(1)", ".(1)"]


def odometer_examples(depth: int) -> Dict[str, Any]:
    odometer = builtin_system("odometer")
    a = odometer.word("a")
    evaluations = {p: format_point(act_on_boundary(odometer, a, parse_point(p, 2))) for p in ODOMETER_POINTS}
    levels = []
    for n in range(1, depth + 1):
        q = group_image(odometer, n)
        levels.append({"n": n, "order": str(q.order()), "transitive": q.is_transitive(),
                       "stabilizer": str(q.point_stabilizer((0,) * n).order())})
    return {"evaluations": evaluations, "levels": levels}


def coe_example(wordlen: int) -> Dict[str, Any]:
    g_sys, h_sys = builtin_system("coe-pair-G"), builtin_system("coe-pair-H")
    witness = coe_check(g_sys, h_sys, 1, wordlen)
    verify(witness)
    freeness_g = topological_freeness_probe(g_sys, min(wordlen, 2), 2)
    freeness_h = topological_freeness_probe(h_sys, wordlen, wordlen)
    return {
        "coe": witness.to_dict(),
        "freeness_G": freeness_g.status,
        "freeness_H": freeness_h.status,
    }


def pink2s_chain(s: int, depth: int) -> Dict[str, Any]:
    system = builtin_system(f"pink2s:{s}")
    lookahead = 2
    chain = build_chain(system, parse_point("11.(0)", 2), depth + lookahead)
    probe_words = [system.word(f"a{i}") for i in range(2, 2 * s + 1)]
    report = chain_report(chain, depth, lookahead, probe_words=probe_words)
    return report.model_dump(mode="json")


def pink_non_hausdorff(s: int, depth: int) -> Dict[str, Any]:
    system = builtin_system(f"pink:{s},{s + 1}")
    witness = non_hausdorff_probe(system, system.word(f"a{s + 1}"), parse_point(".(1)", 2), depth)
    verify(witness)
    return witness.to_dict()


def reproduce(depth: int, wordlen: int, s: int, output: str = None) -> Dict[str, Any]:
    print("=" * 60)
    print("chainscope - Worked Examples")
    print("=" * 60)

    results = {}
    started = time.perf_counter()

    print("\n[1/4] Odometer...")
    results["odometer"] = odometer_examples(depth)
    for before, after in results["odometer"]["evaluations"].items():
        print(f"  a({before}) = {after}")
    print(pd.DataFrame(results["odometer"]["levels"]).to_string(index=False))

    print("\n[2/4] Orbit-equivalent pair...")
    results["coe_pair"] = coe_example(wordlen)
    for row in results["coe_pair"]["coe"]["alpha"]:
        print(f"  alpha({row['generator']}, {row['block']}) = {row['word']}")
    print(f"  G: {results['coe_pair']['freeness_G']}")
    print(f"  H: {results['coe_pair']['freeness_H']}")

    print(f"\n[3/4] pink2s:{s} along 11.(0)...")
    results["pink2s"] = pink2s_chain(s, depth)
    print(pd.DataFrame(results["pink2s"]["levels"]).drop(columns=["flags"]).to_string(index=False))
    for prop, evidence in sorted(results["pink2s"]["verdicts"].items()):
        print(f"  {prop}: {evidence}")

    print(f"\n[4/4] pink:{s},{s + 1} non-Hausdorff witness...")
    results["non_hausdorff"] = pink_non_hausdorff(s, depth)
    for level in results["non_hausdorff"]["levels"]:
        print(f"  l={level['l']}: U={level['U']} W={level['W']}")

    elapsed = time.perf_counter() - started
    logger.info("examples reproduced in %.1fs", elapsed)
    print(f"\nDone in {elapsed:.1f}s")

    if output:
        with open(output, "w", encoding="utf-8") as fh:
            json.dump(results, fh, sort_keys=True, indent=2)
        print(f"Results written to {output}")
    return results


if __name__ == "__main__":
    parser = argparse.ArgumentParser(
        description="Recompute the worked examples on the built-in systems"
    )
    parser.add_argument(
        "--depth", type=int, default=6,
        help="Truncation depth (default: 6)"
    )
    parser.add_argument(
        "--wordlen", type=int, default=8,
        help="Word length bound for the orbit-equivalence search (default: 8)"
    )
    parser.add_argument(
        "--s", type=int, default=2,
        help="Parameter s of the recursive families (default: 2)"
    )
    parser.add_argument(
        "--output", default=None,
        help="Write all results to this JSON file"
    )

    args = parser.parse_args()
    setup_logging(os.environ.get("CHAINSCOPE_LOG_LEVEL"))

    reproduce(depth=args.depth, wordlen=args.wordlen, s=args.s, output=args.output)
