"""chainscope - Automaton Package

Wreath-recursion systems, group words and the exact action on the tree.
"""

from .words import GroupWord, IDENTITY, parse_word, product_of
from .system import AutomatonSystem, GeneratorDef, RootPerm, check_same_tree
from .parser import parse_system
from .builtins import (
    odometer, coe_pair, coe_pair_h, pink, pink2s, pink_text,
    builtin_system, load_system, BUILTIN_NAMES,
)
from .action import (
    Portrait, walk, act_on_vertex, act_on_boundary, section,
    root_permutation, fixes_boundary_point, portrait, DEFAULT_STATE_CAP,
)
from .decide import (
    is_identity, is_identity_on_cylinder, equal_on_cylinder, agree_on_cylinder,
    restriction, identity_cylinders, first_identity_cylinder, fixed_vertex_layers,
    DEFAULT_IDENTITY_CAP,
)
from .enumeration import word_enumeration, count_reduced_words, vertex_transversal, DEFAULT_WORD_CAP

__all__ = [
    "GroupWord", "IDENTITY", "parse_word", "product_of",
    "AutomatonSystem", "GeneratorDef", "RootPerm", "check_same_tree",
    "parse_system",
    "odometer", "coe_pair", "coe_pair_h", "pink", "pink2s", "pink_text",
    "builtin_system", "load_system", "BUILTIN_NAMES",
    "Portrait", "walk", "act_on_vertex", "act_on_boundary", "section",
    "root_permutation", "fixes_boundary_point", "portrait", "DEFAULT_STATE_CAP",
    "is_identity", "is_identity_on_cylinder", "equal_on_cylinder", "agree_on_cylinder",
    "restriction", "identity_cylinders", "first_identity_cylinder", "fixed_vertex_layers",
    "DEFAULT_IDENTITY_CAP",
    "word_enumeration", "count_reduced_words", "vertex_transversal", "DEFAULT_WORD_CAP",
]
