"""Exhaustive generators for the verification suites.

Labeled posets are produced by filtering every reflexive relation matrix
for antisymmetry and transitivity (vectorized; 2^(n^2-n) candidates, so the
hard bound is n <= 5 where the candidate pool is about a million). Counts
for n = 0..5: 1, 1, 3, 19, 219, 4231.
"""

from itertools import product

import numpy as np

from .errors import CapExceeded
from .order import FinPoset
from .spaces import FinSpace, alexandroff

_POSET_CACHE: dict[int, tuple[FinPoset, ...]] = {}
_SPACE_CACHE: dict[int, tuple[FinSpace, ...]] = {}

ENUM_MAX = 5


def all_posets(n: int) -> tuple[FinPoset, ...]:
    """Every partial order on the labeled carrier 0..n-1."""
    if n > ENUM_MAX:
        raise CapExceeded(n, ENUM_MAX, "labeled poset enumeration")
    if n in _POSET_CACHE:
        return _POSET_CACHE[n]
    if n == 0:
        out = (FinPoset(()),)
    else:
        cells = [(i, j) for i in range(n) for j in range(n) if i != j]
        total = 1 << len(cells)
        ids = np.arange(total, dtype=np.uint32)
        mat = np.zeros((total, n, n), dtype=np.uint8)
        for c, (i, j) in enumerate(cells):
            mat[:, i, j] = (ids >> np.uint32(c)) & 1
        eye = np.eye(n, dtype=np.uint8)
        mat |= eye
        off = (mat & mat.transpose(0, 2, 1)) & (1 - eye)
        anti = ~off.any(axis=(1, 2))
        comp = (np.matmul(mat, mat) > 0).astype(np.uint8)
        trans = ~(comp & (1 - mat)).any(axis=(1, 2))
        keep = np.nonzero(anti & trans)[0]
        weights = 1 << np.arange(n, dtype=np.uint32)
        rows = (mat[keep].astype(np.uint32) * weights[None, None, :]).sum(axis=2)
        out = tuple(FinPoset(tuple(int(v) for v in row)) for row in rows)
    _POSET_CACHE[n] = out
    return out


def all_spaces(n: int) -> tuple[FinSpace, ...]:
    """Every T0 topology on the labeled carrier 0..n-1 (as up-set spaces)."""
    if n not in _SPACE_CACHE:
        _SPACE_CACHE[n] = tuple(alexandroff(p) for p in all_posets(n))
    return _SPACE_CACHE[n]


def spaces_up_to(n: int, include_empty: bool = True) -> list[FinSpace]:
    start = 0 if include_empty else 1
    out: list[FinSpace] = []
    for k in range(start, n + 1):
        out.extend(all_spaces(k))
    return out


def all_tables(src_size: int, dst_size: int):
    """Every total assignment src -> dst, as tuples."""
    return product(range(dst_size), repeat=src_size)


def random_poset(rng, n: int, density: float = 0.4) -> FinPoset:
    """Random order from a random DAG respecting a shuffled topological order."""
    order = list(range(n))
    rng.shuffle(order)
    pairs = []
    for a in range(n):
        for b in range(a + 1, n):
            if rng.random() < density:
                pairs.append((order[a], order[b]))
    return FinPoset.from_cover_pairs(n, pairs)


def random_space(rng, n: int, density: float = 0.4) -> FinSpace:
    return alexandroff(random_poset(rng, n, density))
