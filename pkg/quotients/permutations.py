"""
chainscope - Level Permutations

A ``LevelPermutation`` is a tree automorphism restricted to level ``n``,
stored as a numpy image array over the lexicographic vertex order
(``images[i]`` is the index of the image of vertex ``i``). Composition follows
the word convention: ``(p * q)[i] = p[q[i]]``, i.e. ``q`` first.
"""

import math
from typing import List, Sequence

import numpy as np

from automaton.system import AutomatonSystem
from automaton.words import GroupWord, Letter
from tree.vertices import DEFAULT_POINT_CAP, Vertex, check_point_cap, vertex_at, vertex_index
from utils.errors import DomainError


class LevelPermutation:
    """Permutation of the ``d**n`` vertices of level ``n``.

    Parameters
    ----------
    images : array-like
        Image indices in canonical vertex order.
    level, degree : int
        Level ``n`` and tree degree ``d``; ``len(images) == d**n``.
    check : bool
        Assert that the array is a permutation respecting the tree structure.
    """

    __slots__ = ("images", "level", "degree", "_key")

    def __init__(self, images, level: int, degree: int, check: bool = True):
        arr = np.asarray(images, dtype=np.int64)
        if arr.ndim != 1 or arr.shape[0] != degree ** level:
            raise DomainError(f"image array of length {arr.shape[0]} does not fit level {level} of degree {degree}")
        arr = arr.copy()
        arr.flags.writeable = False
        self.images = arr
        self.level = level
        self.degree = degree
        self._key = None
        if check:
            self.check_tree_automorphism()

    @classmethod
    def identity(cls, level: int, degree: int) -> "LevelPermutation":
        return cls(np.arange(degree ** level), level, degree, check=False)

    # =========================================================================
    # STRUCTURE
    # =========================================================================

    def check_tree_automorphism(self) -> None:
        """Assert bijectivity and prefix consistency at every coarser level."""
        n, d = self.level, self.degree
        size = d ** n
        if not np.array_equal(np.sort(self.images), np.arange(size)):
            raise DomainError(f"images do not form a permutation of level {n}")
        for k in range(n):
            block = d ** (n - k)
            tops = (self.images // block).reshape(-1, block)
            if not (tops == tops[:, :1]).all():
                raise DomainError(f"permutation of level {n} does not respect level-{k} blocks")

    def project(self, n: int) -> "LevelPermutation":
        """Restriction to level ``n <= self.level``."""
        if n > self.level or n < 0:
            raise DomainError(f"cannot project level {self.level} permutation to level {n}")
        block = self.degree ** (self.level - n)
        return LevelPermutation(self.images[::block] // block, n, self.degree, check=False)

    # =========================================================================
    # GROUP OPERATIONS
    # =========================================================================

    def _same_shape(self, other: "LevelPermutation") -> None:
        if other.level != self.level or other.degree != self.degree:
            raise DomainError(f"level mismatch: {self.level} vs {other.level}")

    def __mul__(self, other: "LevelPermutation") -> "LevelPermutation":
        self._same_shape(other)
        return LevelPermutation(self.images[other.images], self.level, self.degree, check=False)

    def inverse(self) -> "LevelPermutation":
        return LevelPermutation(np.argsort(self.images), self.level, self.degree, check=False)

    def __pow__(self, k: int) -> "LevelPermutation":
        base = self if k >= 0 else self.inverse()
        result = LevelPermutation.identity(self.level, self.degree)
        for _ in range(abs(k)):
            result = result * base
        return result

    def commutes_with(self, other: "LevelPermutation") -> bool:
        return np.array_equal(self.images[other.images], other.images[self.images])

    @property
    def is_identity(self) -> bool:
        return bool((self.images == np.arange(self.images.shape[0])).all())

    def __call__(self, v: Vertex) -> Vertex:
        return vertex_at(int(self.images[vertex_index(v, self.degree)]), self.level, self.degree)

    def moved_points(self) -> np.ndarray:
        return np.nonzero(self.images != np.arange(self.images.shape[0]))[0]

    def cycle_lengths(self) -> List[int]:
        seen = np.zeros(self.images.shape[0], dtype=bool)
        lengths = []
        for start in range(self.images.shape[0]):
            if seen[start]:
                continue
            length, i = 0, start
            while not seen[i]:
                seen[i] = True
                i = int(self.images[i])
                length += 1
            lengths.append(length)
        return sorted(lengths, reverse=True)

    def order(self) -> int:
        result = 1
        for length in self.cycle_lengths():
            result = result * length // math.gcd(result, length)
        return result

    # =========================================================================
    # IDENTITY AND SERIALIZATION
    # =========================================================================

    def key(self) -> bytes:
        if self._key is None:
            self._key = self.images.tobytes()
        return self._key

    def __eq__(self, other) -> bool:
        if not isinstance(other, LevelPermutation):
            return NotImplemented
        return self.level == other.level and self.degree == other.degree and self.key() == other.key()

    def __hash__(self) -> int:
        return hash((self.level, self.degree, self.key()))

    def to_list(self) -> List[int]:
        return [int(i) for i in self.images]

    def __repr__(self) -> str:
        return f"LevelPermutation(level={self.level}, images={self.to_list()})"


# =============================================================================
# LEVEL IMAGES OF WORDS
# =============================================================================

def _letter_image(sys: AutomatonSystem, letter: Letter, n: int) -> np.ndarray:
    """Image array of one signed generator at level ``n``, memoized on the system."""
    key = (letter, n)
    with sys._lock:
        cached = sys._level_memo.get(key)
    if cached is not None:
        return cached
    d = sys.degree
    if n == 0:
        arr = np.zeros(1, dtype=np.int64)
    else:
        roots, sections = sys.letter_data(letter)
        block = d ** (n - 1)
        arr = np.empty(d ** n, dtype=np.int64)
        for i in range(d):
            arr[i * block:(i + 1) * block] = roots[i] * block + _word_array(sys, sections[i], n - 1)
    arr.flags.writeable = False
    with sys._lock:
        sys._level_memo.setdefault(key, arr)
    return arr


def _word_array(sys: AutomatonSystem, w: GroupWord, n: int) -> np.ndarray:
    result = np.arange(sys.degree ** n, dtype=np.int64)
    for letter in w.factors:
        result = result[_letter_image(sys, letter, n)]
    return result


def level_image(sys: AutomatonSystem, w: GroupWord, n: int, point_cap: int = DEFAULT_POINT_CAP) -> LevelPermutation:
    """Permutation of level ``n`` induced by ``w``.

    Raises
    ------
    ResourceCapExceeded
        ``d**n`` exceeds ``point_cap``.
    """
    check_point_cap(sys.degree, n, point_cap)
    sys.check_word(w)
    return LevelPermutation(_word_array(sys, w, n), n, sys.degree)


def level_images(sys: AutomatonSystem, words: Sequence[GroupWord], n: int,
                 point_cap: int = DEFAULT_POINT_CAP) -> List[LevelPermutation]:
    return [level_image(sys, w, n, point_cap) for w in words]
