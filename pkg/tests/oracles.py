"""
chainscope - Brute-Force Oracles for the Test Suites

Slow reference computations that share no code with the package beyond
level images: closure of generator arrays by breadth-first multiplication,
and orbit/stabilizer counts from the closed set.
"""

from collections import deque
from typing import Iterable, List, Set, Tuple

import numpy as np

Row = Tuple[int, ...]


def closure(generators: Iterable[np.ndarray]) -> Set[Row]:
    """All products of the given image arrays, identity included."""
    gens = [np.asarray(g, dtype=np.int64) for g in generators]
    if not gens:
        return set()
    size = gens[0].shape[0]
    identity = tuple(range(size))
    seen = {identity}
    queue = deque([np.arange(size)])
    while queue:
        x = queue.popleft()
        for g in gens:
            y = g[x]
            key = tuple(int(i) for i in y)
            if key not in seen:
                seen.add(key)
                queue.append(y)
    return seen


def closure_order(generators: Iterable[np.ndarray]) -> int:
    return len(closure(generators)) or 1


def stabilizer_rows(elements: Iterable[Row], points: Iterable[int]) -> List[Row]:
    points = list(points)
    return [row for row in elements if all(row[p] == p for p in points)]


def commuting_rows(elements: Iterable[Row], targets: Iterable[Row]) -> List[Row]:
    targets = [np.asarray(t) for t in targets]
    out = []
    for row in elements:
        x = np.asarray(row)
        if all(np.array_equal(x[t], t[x]) for t in targets):
            out.append(row)
    return out
