"""chainscope - Quotients Package

Finite level actions: level permutations and permutation groups on tree levels.
"""

from .permutations import LevelPermutation, level_image, level_images
from .groups import (
    PermGroup, group_image, order, is_transitive, point_stabilizer,
    pointwise_stabilizer, membership, project, centralizer_in,
    centralizers_by_enumeration, enumerate_elements,
    generated_subgroup, block_stabilizer, block_stabilizer_generators,
    restricted_action, DEFAULT_ENUM_CAP,
)

__all__ = [
    "LevelPermutation", "level_image", "level_images",
    "PermGroup", "group_image", "order", "is_transitive", "point_stabilizer",
    "pointwise_stabilizer", "membership", "project", "centralizer_in",
    "centralizers_by_enumeration", "enumerate_elements",
    "generated_subgroup", "block_stabilizer", "block_stabilizer_generators",
    "restricted_action", "DEFAULT_ENUM_CAP",
]
