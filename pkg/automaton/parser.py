"""
chainscope - System Definition Parser

Line-based grammar (``#`` starts a comment, ``;`` separates statements)::

    degree = 2
    gen a1 = [1,0] (a1, e)        # root image list, then section tuple
    gen a2 = [0,1] (a1, e)

The root permutation may be omitted (identity) and so may the section tuple
(all sections ``e``). Generators may reference generators defined later.
"""

import re
from typing import List, Tuple

from utils.errors import InputFormatError, SystemParseError, UnknownGeneratorError
from utils.logging_config import get_logger

from .system import AutomatonSystem, GeneratorDef, RootPerm
from .words import IDENTITY, is_valid_name, parse_word

logger = get_logger("automaton.parser")

_DEGREE_RE = re.compile(r"^degree\s*=\s*(\S+)\s*$")
_GEN_RE = re.compile(
    r"^gen\s+(?P<name>\S+?)\s*=\s*"
    r"(?:\[(?P<root>[^\]]*)\])?\s*"
    r"(?:\((?P<sections>[^)]*)\))?\s*$"
)


def _statements(text: str) -> List[Tuple[str, int, int]]:
    """Split text into ``(statement, line, column)`` triples."""
    out = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        hash_at = raw.find("#")
        body = raw if hash_at < 0 else raw[:hash_at]
        offset = 0
        for chunk in body.split(";"):
            stripped = chunk.strip()
            if stripped:
                lead = len(chunk) - len(chunk.lstrip())
                out.append((stripped, line_no, offset + lead + 1))
            offset += len(chunk) + 1
    return out


def _parse_root(text: str, line: int, column: int) -> RootPerm:
    try:
        images = tuple(int(part) for part in text.split(","))
    except ValueError:
        raise SystemParseError(f"root permutation [{text}] must list integers", line, column) from None
    return RootPerm.checked(images, line)


def parse_system(text: str, name: str = None) -> AutomatonSystem:
    """Parse a system definition.

    Raises
    ------
    SystemParseError
        Malformed statement, with line and column.
    UnknownGeneratorError
        A section references an undefined generator.
    InvalidPermutationError
        A root image list is not a bijection.
    """
    degree = None
    gens: List[GeneratorDef] = []
    gen_lines = {}

    for stmt, line, column in _statements(text):
        m = _DEGREE_RE.match(stmt)
        if m:
            if degree is not None:
                raise SystemParseError("degree declared twice", line, column)
            if gens:
                raise SystemParseError("degree must be declared before generators", line, column)
            try:
                degree = int(m.group(1))
            except ValueError:
                raise SystemParseError(f"degree must be an integer, got {m.group(1)!r}", line, column) from None
            if degree < 2 or degree > 36:
                raise SystemParseError(f"degree must lie in 2..36, got {degree}", line, column)
            continue

        m = _GEN_RE.match(stmt)
        if m is None:
            raise SystemParseError(f"cannot parse statement {stmt!r}", line, column)
        if degree is None:
            raise SystemParseError("degree must be declared before generators", line, column)
        gname = m.group("name")
        if not is_valid_name(gname):
            raise SystemParseError(f"invalid generator name {gname!r}", line, column + stmt.find(gname))
        if gname in gen_lines:
            raise SystemParseError(f"generator {gname!r} already defined on line {gen_lines[gname]}", line, column)
        root_text, sec_text = m.group("root"), m.group("sections")
        if root_text is None and sec_text is None:
            raise SystemParseError(f"generator {gname!r} needs a root permutation or a section tuple", line, column)

        root = RootPerm.identity(degree)
        if root_text is not None:
            root = _parse_root(root_text, line, column + stmt.find("["))
            if root.degree != degree:
                raise SystemParseError(
                    f"root permutation of {gname!r} has {root.degree} images, degree is {degree}",
                    line, column + stmt.find("["),
                )

        sections = (IDENTITY,) * degree
        if sec_text is not None:
            sec_col = column + stmt.find("(") + 1
            parts = sec_text.split(",")
            if len(parts) != degree:
                raise SystemParseError(
                    f"generator {gname!r} has {len(parts)} sections, degree is {degree}", line, sec_col
                )
            words = []
            for part in parts:
                try:
                    words.append(parse_word(part))
                except InputFormatError as exc:
                    raise SystemParseError(str(exc), line, sec_col) from None
            sections = tuple(words)

        gens.append(GeneratorDef(gname, root, sections))
        gen_lines[gname] = line

    if degree is None:
        raise SystemParseError("missing degree declaration", 1, 1)

    for gen in gens:
        for section in gen.sections:
            for ref in section.names():
                if ref not in gen_lines:
                    raise UnknownGeneratorError(ref, gen_lines[gen.name])

    system = AutomatonSystem(degree, gens, source=text, name=name)
    logger.debug("parsed %s with %d generators", system.name, len(gens))
    return system
