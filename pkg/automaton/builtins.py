"""
chainscope - Built-in Example Systems

Binary-tree systems used throughout the test corpus:

- ``odometer``: ``a = (a, e) sigma``, the adding machine.
- ``coe-pair`` / ``coe-pair-G``: ``a1 = (a1, e) sigma`` and ``a2 = (a1, e)``.
- ``coe-pair-H``: the odometer alone, written with generator ``a1``.
- ``pink:s,r``: ``a1 = sigma``, ``a2 = (a1, e)``, ``a_i = (a_{i-1}, e)`` for
  ``3 <= i <= s`` and ``s+2 <= i <= r``, and ``a_{s+1} = (a_s, a_r)``.
- ``pink2s:s``: ``pink:s,2s``.

The recursive family only states ``a_i = (a_{i-1}, 1)`` for ``i >= 3``; the
definition ``a2 = (a1, e)`` is the reading implied by its index ranges.
"""

import os
from pathlib import Path
from typing import List

from utils.errors import DomainError, InputFormatError
from utils.logging_config import get_logger

from .parser import parse_system
from .system import AutomatonSystem

logger = get_logger("automaton.builtins")

ODOMETER_TEXT = """\
degree = 2
gen a = [1,0] (a, e)
"""

COE_PAIR_G_TEXT = """\
degree = 2
gen a1 = [1,0] (a1, e)
gen a2 = [0,1] (a1, e)
"""

COE_PAIR_H_TEXT = """\
degree = 2
gen a1 = [1,0] (a1, e)
"""


def pink_text(s: int, r: int) -> str:
    if s < 2 or r < s + 1:
        raise DomainError(f"pink systems need 2 <= s < r, got s={s}, r={r}")
    lines = ["degree = 2", "gen a1 = [1,0] (e, e)", "gen a2 = [0,1] (a1, e)"]
    for i in range(3, s + 1):
        lines.append(f"gen a{i} = [0,1] (a{i - 1}, e)")
    lines.append(f"gen a{s + 1} = [0,1] (a{s}, a{r})")
    for i in range(s + 2, r + 1):
        lines.append(f"gen a{i} = [0,1] (a{i - 1}, e)")
    return "\n".join(lines) + "\n"


def odometer() -> AutomatonSystem:
    return parse_system(ODOMETER_TEXT, name="odometer")


def coe_pair() -> AutomatonSystem:
    return parse_system(COE_PAIR_G_TEXT, name="coe-pair")


def coe_pair_h() -> AutomatonSystem:
    return parse_system(COE_PAIR_H_TEXT, name="coe-pair-H")


def pink(s: int, r: int) -> AutomatonSystem:
    return parse_system(pink_text(s, r), name=f"pink:{s},{r}")


def pink2s(s: int) -> AutomatonSystem:
    return parse_system(pink_text(s, 2 * s), name=f"pink2s:{s}")


BUILTIN_NAMES: List[str] = ["odometer", "coe-pair", "coe-pair-G", "coe-pair-H", "pink:s,r", "pink2s:s"]


def _int_args(spec: str, body: str, count: int) -> List[int]:
    parts = [p.strip() for p in body.replace("(", "").replace(")", "").split(",")]
    if len(parts) != count:
        raise InputFormatError(f"built-in {spec!r} expects {count} integer argument(s)")
    try:
        return [int(p) for p in parts]
    except ValueError:
        raise InputFormatError(f"built-in {spec!r} has non-integer arguments") from None


def builtin_system(spec: str) -> AutomatonSystem:
    """Resolve a built-in name such as ``odometer`` or ``pink:2,3``."""
    key = spec.strip()
    if key == "odometer":
        return odometer()
    if key in ("coe-pair", "coe-pair-G"):
        system = coe_pair()
        system.name = key
        return system
    if key == "coe-pair-H":
        return coe_pair_h()
    for prefix_ in ("pink2s:", "pink2s(", "pink2s "):
        if key.startswith(prefix_):
            (s,) = _int_args(key, key[len("pink2s"):].lstrip(":"), 1)
            return pink2s(s)
    for prefix_ in ("pink:", "pink(", "pink "):
        if key.startswith(prefix_):
            s, r = _int_args(key, key[len("pink"):].lstrip(":"), 2)
            return pink(s, r)
    raise InputFormatError(f"unknown built-in system {spec!r}; known: {', '.join(BUILTIN_NAMES)}")


def is_builtin(spec: str) -> bool:
    key = spec.strip()
    return key in ("odometer", "coe-pair", "coe-pair-G", "coe-pair-H") or key.startswith(("pink:", "pink(", "pink2s:", "pink2s("))


def load_system(spec: str) -> AutomatonSystem:
    """Built-in name or path to a system definition file."""
    if is_builtin(spec):
        return builtin_system(spec)
    path = Path(os.path.expanduser(spec))
    if not path.is_file():
        raise InputFormatError(f"{spec!r} is neither a built-in system nor a readable file")
    logger.info("loading system definition from %s", path)
    return parse_system(path.read_text(encoding="utf-8"), name=path.stem)
