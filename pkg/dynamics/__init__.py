"""chainscope - Dynamics Package

Box-bounded probes with exact certificates: local quasi-analyticity,
topological freeness, non-Hausdorff elements, germs and orbit equivalence.
"""

from .models import (
    LqaViolation, NonHausdorffLevel, NonHausdorffWitness, GermReport, FreenessReport,
    AlphaCollision, CoeWitness, ProbeReport,
)
from .verify import verify
from .lqa import lqa_probe, topological_freeness_probe
from .hausdorff import non_hausdorff_probe, germ_hausdorff_probe, off_branch_identity_cylinder
from .coe import coe_check, alpha_collisions, alpha_on_block, block_partition_preserved

__all__ = [
    "LqaViolation", "NonHausdorffLevel", "NonHausdorffWitness", "GermReport", "FreenessReport",
    "AlphaCollision", "CoeWitness", "ProbeReport",
    "verify",
    "lqa_probe", "topological_freeness_probe",
    "non_hausdorff_probe", "germ_hausdorff_probe", "off_branch_identity_cylinder",
    "coe_check", "alpha_collisions", "alpha_on_block", "block_partition_preserved",
]
