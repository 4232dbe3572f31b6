"""
chainscope - Automaton System Definitions

An ``AutomatonSystem`` fixes the tree degree and a list of generators, each
given by wreath recursion: a root permutation ``p`` plus one section word per
letter. The action is ``g(i w) = p(i) g_{p(i)}(w)``, so internally each signed
generator letter is stored with *input-indexed* sections
``Sec(g, i) = g_{p(i)}`` and ``Sec(g^-1, j) = g_j^-1``.

Systems are immutable after construction. Memo tables hang off the system
object and are guarded by a lock; they only ever cache pure results.
"""

import hashlib
import threading
from dataclasses import dataclass
from typing import Dict, List, Sequence, Tuple

from utils.errors import DomainError, InvalidPermutationError, SystemDefinitionError, UnknownGeneratorError
from tree.vertices import check_degree

from .words import GroupWord, IDENTITY, Letter, is_valid_name, parse_word, product_of


@dataclass(frozen=True)
class RootPerm:
    """Images of ``0..d-1``: ``images[i] = p(i)``."""
    images: Tuple[int, ...]

    @classmethod
    def identity(cls, d: int) -> "RootPerm":
        return cls(tuple(range(d)))

    @classmethod
    def checked(cls, images: Sequence[int], line: int = None) -> "RootPerm":
        images = tuple(images)
        if sorted(images) != list(range(len(images))):
            raise InvalidPermutationError(images, len(images), line)
        return cls(images)

    @property
    def degree(self) -> int:
        return len(self.images)

    @property
    def is_identity(self) -> bool:
        return all(i == p for i, p in enumerate(self.images))

    def inverse(self) -> "RootPerm":
        inv = [0] * len(self.images)
        for i, p in enumerate(self.images):
            inv[p] = i
        return RootPerm(tuple(inv))

    def __call__(self, i: int) -> int:
        return self.images[i]

    def __str__(self) -> str:
        return "[" + ",".join(str(i) for i in self.images) + "]"


@dataclass(frozen=True)
class GeneratorDef:
    name: str
    root: RootPerm
    sections: Tuple[GroupWord, ...]

    def to_text(self) -> str:
        return f"gen {self.name} = {self.root} (" + ", ".join(str(s) for s in self.sections) + ")"


class AutomatonSystem:
    """A tree action defined by wreath recursion.

    Parameters
    ----------
    degree : int
        Tree degree ``d`` (2..36).
    generators : sequence of GeneratorDef
        Ordered generator definitions; sections may reference any generator,
        including the one being defined.
    source : str, optional
        Original definition text, kept for reports.
    name : str, optional
        Display name (built-in systems carry their CLI name).
    """

    def __init__(self, degree: int, generators: Sequence[GeneratorDef], source: str = "", name: str = None):
        self.degree = check_degree(degree)
        self.generators: Tuple[GeneratorDef, ...] = tuple(generators)
        self.names: Tuple[str, ...] = tuple(g.name for g in self.generators)
        self.source = source
        self._validate()
        self.content_hash = hashlib.sha256(self.canonical_text().encode("utf-8")).hexdigest()
        self.name = name or f"system:{self.content_hash[:12]}"

        self._letters: Dict[Letter, Tuple[Tuple[int, ...], Tuple[GroupWord, ...]]] = {}
        for gen in self.generators:
            p = gen.root.images
            self._letters[(gen.name, 1)] = (p, tuple(gen.sections[p[i]] for i in range(self.degree)))
            q = gen.root.inverse().images
            self._letters[(gen.name, -1)] = (q, tuple(s.inverse() for s in gen.sections))

        self._lock = threading.RLock()
        self._step_memo: Dict[GroupWord, Tuple[Tuple[int, ...], Tuple[GroupWord, ...]]] = {}
        self._identity_memo: Dict[GroupWord, bool] = {}
        self._level_memo: Dict[Tuple[Letter, int], object] = {}

    def _validate(self) -> None:
        seen = set()
        for gen in self.generators:
            if not is_valid_name(gen.name):
                raise SystemDefinitionError(f"invalid generator name {gen.name!r}")
            if gen.name in seen:
                raise SystemDefinitionError(f"duplicate generator name {gen.name!r}")
            seen.add(gen.name)
            if gen.root.degree != self.degree:
                raise SystemDefinitionError(
                    f"generator {gen.name}: root permutation has {gen.root.degree} images, degree is {self.degree}"
                )
            RootPerm.checked(gen.root.images)
            if len(gen.sections) != self.degree:
                raise SystemDefinitionError(
                    f"generator {gen.name}: {len(gen.sections)} sections given, degree is {self.degree}"
                )
        for gen in self.generators:
            for section in gen.sections:
                for name in section.names():
                    if name not in seen:
                        raise UnknownGeneratorError(name)

    # =========================================================================
    # ACCESSORS
    # =========================================================================

    def generator(self, name: str) -> GeneratorDef:
        for gen in self.generators:
            if gen.name == name:
                return gen
        raise UnknownGeneratorError(name)

    def generator_words(self) -> List[GroupWord]:
        return [GroupWord.generator(name) for name in self.names]

    def alphabet(self) -> List[Letter]:
        """Signed letters in search order: ``g1, g1^-1, g2, g2^-1, ...``."""
        letters = []
        for name in self.names:
            letters.append((name, 1))
            letters.append((name, -1))
        return letters

    def letter_data(self, letter: Letter) -> Tuple[Tuple[int, ...], Tuple[GroupWord, ...]]:
        """Root images and input-indexed sections of one signed letter."""
        try:
            return self._letters[letter]
        except KeyError:
            raise UnknownGeneratorError(letter[0]) from None

    def word(self, text: str) -> GroupWord:
        return parse_word(text, self.names)

    def check_word(self, w: GroupWord) -> GroupWord:
        for name in w.names():
            if (name, 1) not in self._letters:
                raise UnknownGeneratorError(name)
        return w

    # =========================================================================
    # ONE-LETTER RECURSION
    # =========================================================================

    def step(self, w: GroupWord) -> Tuple[Tuple[int, ...], Tuple[GroupWord, ...]]:
        """Root permutation of ``w`` and its input-indexed one-letter sections.

        Uses ``Sec(uv, i) = Sec(u, root_v(i)) * Sec(v, i)`` letter by letter,
        rightmost factor first.
        """
        with self._lock:
            cached = self._step_memo.get(w)
        if cached is not None:
            return cached
        d = self.degree
        if not w.factors:
            result = (tuple(range(d)), (IDENTITY,) * d)
        else:
            data = [self.letter_data(f) for f in reversed(w.factors)]
            roots = []
            sections = []
            for i in range(d):
                c = i
                parts = []
                for root, secs in data:
                    parts.append(secs[c])
                    c = root[c]
                roots.append(c)
                sections.append(product_of(reversed(parts)))
            result = (tuple(roots), tuple(sections))
        with self._lock:
            self._step_memo.setdefault(w, result)
        return result

    # =========================================================================
    # SERIALIZATION
    # =========================================================================

    def canonical_text(self) -> str:
        lines = [f"degree = {self.degree}"]
        lines.extend(gen.to_text() for gen in self.generators)
        return "\n".join(lines) + "\n"

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "degree": self.degree,
            "hash": self.content_hash,
            "generators": [gen.to_text() for gen in self.generators],
        }

    def __repr__(self) -> str:
        return f"AutomatonSystem({self.name!r}, degree={self.degree}, generators={list(self.names)})"


def check_same_tree(first: AutomatonSystem, second: AutomatonSystem) -> None:
    if first.degree != second.degree:
        raise DomainError(f"systems act on different trees (degrees {first.degree} and {second.degree})")
