"""chainscope - Chains Package

Group chains along a basepoint, their finite truncations and classification evidence.
"""

from .chain import (
    ChainLimits, GroupChain, build_chain, QuotientLevel, quotient_table,
    DiscriminantApprox, discriminant_approx, discriminant_surjectivity,
)
from .subchains import (
    SubchainTable, stabilizer_subchain, centralizer_subchain, height, subchain_table,
)
from .certificates import (
    WildnessCertificate, wildness_certificates, verify_certificate, longest_certified_run,
)
from .kernel import KernelReport, kernel_probe
from .tnn import TnnResult, totally_not_normal_check
from .conjugacy import ConjugacyWitness, conjugacy_witness, verify_conjugacy
from .classify import Evidence, ClassificationVerdict, PROPERTIES, classify, table_at
from .report import ChainReport, LevelRow, chain_report, restricted_table

__all__ = [
    "ChainLimits", "GroupChain", "build_chain", "QuotientLevel", "quotient_table",
    "DiscriminantApprox", "discriminant_approx", "discriminant_surjectivity",
    "SubchainTable", "stabilizer_subchain", "centralizer_subchain", "height", "subchain_table",
    "WildnessCertificate", "wildness_certificates", "verify_certificate", "longest_certified_run",
    "KernelReport", "kernel_probe",
    "TnnResult", "totally_not_normal_check",
    "ConjugacyWitness", "conjugacy_witness", "verify_conjugacy",
    "Evidence", "ClassificationVerdict", "PROPERTIES", "classify", "table_at",
    "ChainReport", "LevelRow", "chain_report", "restricted_table",
]
