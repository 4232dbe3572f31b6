"""
chainscope - Wildness Certificates

A certificate for level ``l`` is a word ``w`` that is the exact identity on
``U_{l+1}`` and not the identity on ``U_l``. Such a word fixes the basepoint,
so its level-``n`` image lies in ``K_{l+1}^{(n)}``; when that image also moves a
level-``n`` descendant of ``prefix(x, l)`` it lies outside ``K_l^{(n)}`` and the
inclusion ``K_l^{(n)} < K_{l+1}^{(n)}`` is strict.

Words are found by taking a short seed ``s`` with a minimal identity cylinder
``c`` at level ``l + 1`` and conjugating ``c`` onto the basepoint branch:
``w = g s g^-1`` with ``g(c) = prefix(x, l + 1)``.
"""

from dataclasses import dataclass
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

import numpy as np

from automaton.decide import fixed_vertex_layers, is_identity_on_cylinder
from automaton.enumeration import vertex_transversal, word_enumeration
from automaton.words import GroupWord
from quotients.groups import PermGroup
from quotients.permutations import level_image
from tree.vertices import Cylinder, descendants, format_cylinder
from utils.errors import CertificateError, UndecidedAtCap, check_invariant
from utils.logging_config import get_logger

from .chain import GroupChain

logger = get_logger("chains.certificates")

DEFAULT_SEED_LENGTH = 2


@dataclass(frozen=True)
class WildnessCertificate:
    level: int
    word: GroupWord
    seed: GroupWord
    seed_cylinder: Cylinder
    conjugator: GroupWord

    def to_dict(self) -> dict:
        return {
            "level": self.level,
            "word": str(self.word),
            "seed": str(self.seed),
            "seed_cylinder": format_cylinder(self.seed_cylinder),
            "conjugator": str(self.conjugator),
        }


def moves_block(chain: GroupChain, w: GroupWord, level: int, n: int) -> bool:
    """Whether the level-``n`` image of ``w`` moves a descendant of ``prefix(x, level)``."""
    block = descendants(chain.vertex(level), n, chain.degree)
    images = level_image(chain.system, w, n, chain.limits.point_cap).images[block.start:block.stop]
    return bool((images != np.arange(block.start, block.stop)).any())


def _seeds(chain: GroupChain, seed_length: int) -> List[GroupWord]:
    words = word_enumeration(chain.system, seed_length, include_identity=False, cap=chain.limits.word_cap)
    return list(words)


def _candidates(chain: GroupChain, level: int, seeds: Sequence[GroupWord]) -> Iterator[Tuple[GroupWord, Cylinder]]:
    """Seeds with a minimal identity cylinder at exactly ``level + 1``."""
    target = level + 1
    for s in seeds:
        try:
            for v, _, trivial in fixed_vertex_layers(chain.system, s, (), target, cap=chain.limits.identity_cap):
                if trivial and len(v) == target:
                    yield s, Cylinder(v)
        except UndecidedAtCap:
            logger.warning("seed %s skipped: identity closure hit the cap", s)


def find_certificate(chain: GroupChain, level: int, n: int,
                     seeds: Sequence[GroupWord]) -> Optional[WildnessCertificate]:
    """First certificate for ``level`` that is visible at truncation ``n``."""
    target = chain.vertex(level + 1)
    transversal = None
    for s, c in _candidates(chain, level, seeds):
        if transversal is None:
            transversal = vertex_transversal(chain.system, target, cap=chain.limits.word_cap)
        # t(target) = c, so g = t^-1 carries c onto the basepoint branch
        g = transversal[c.root].inverse()
        w = s.conjugate(g)
        if not moves_block(chain, w, level, n):
            continue
        cert = WildnessCertificate(level, w, s, c, g)
        verify_certificate(chain, cert, n)
        return cert
    return None


def verify_certificate(chain: GroupChain, cert: WildnessCertificate, n: Optional[int] = None) -> None:
    """Independent re-check; raises ``CertificateError`` on any mismatch."""
    sys, cap = chain.system, chain.limits.identity_cap
    inner, outer = chain.cylinder(cert.level + 1), chain.cylinder(cert.level)
    if not is_identity_on_cylinder(sys, cert.word, inner, cap):
        raise CertificateError(f"{cert.word} is not the identity on {inner}")
    if is_identity_on_cylinder(sys, cert.word, outer, cap):
        raise CertificateError(f"{cert.word} is the identity on {outer}")
    if n is not None and not moves_block(chain, cert.word, cert.level, n):
        raise CertificateError(f"{cert.word} acts trivially below {outer} at level {n}")


def wildness_certificates(chain: GroupChain, n: int, levels: Optional[Sequence[int]] = None,
                          seed_length: int = DEFAULT_SEED_LENGTH) -> Dict[int, Optional[WildnessCertificate]]:
    """Certificates for strict growth ``K_l^{(n)} < K_{l+1}^{(n)}``, ``l < n``.

    Levels without a certificate visible at truncation ``n`` map to ``None``.
    """
    chain._check_level(n)
    levels = range(n) if levels is None else levels
    seeds = _seeds(chain, seed_length)
    out: Dict[int, Optional[WildnessCertificate]] = {}
    for level in levels:
        if not 0 <= level < n:
            continue
        out[level] = find_certificate(chain, level, n, seeds)
        if out[level] is not None:
            logger.info("level %d certified by %s", level, out[level].word)
    return out


def check_against_subchain(chain: GroupChain, certs: Dict[int, Optional[WildnessCertificate]],
                           K: Sequence[PermGroup], n: int) -> None:
    """Each certified image must separate ``K_l^{(n)}`` from ``K_{l+1}^{(n)}``."""
    for level, cert in certs.items():
        if cert is None:
            continue
        p = level_image(chain.system, cert.word, n, chain.limits.point_cap)
        check_invariant(K[level + 1].contains(p), f"certificate {cert.word} not in K_{level + 1} at truncation {n}")
        check_invariant(not K[level].contains(p), f"certificate {cert.word} lies in K_{level} at truncation {n}")


def longest_certified_run(certs: Dict[int, Optional[WildnessCertificate]]) -> Tuple[int, Optional[int]]:
    """Length and first level of the longest run of consecutive certified levels."""
    best, best_start = 0, None
    run, start = 0, None
    for level in sorted(certs):
        if certs[level] is not None and (run and level == prev + 1):
            run += 1
        elif certs[level] is not None:
            run, start = 1, level
        else:
            run = 0
        if run > best:
            best, best_start = run, start
        prev = level
    return best, best_start
