"""Subsets of {0, ..., n-1} as int bitmasks.

Bit i set means element i is a member. Equality of masks is extensional
equality of subsets; all family outputs in this package are sorted with
`family_sort`, which orders masks lexicographically by membership word
(element 0 first), so results are deterministic.
"""

from collections.abc import Iterable, Iterator


def from_indices(indices: Iterable[int]) -> int:
    m = 0
    for i in indices:
        m |= 1 << i
    return m


def to_indices(mask: int) -> list[int]:
    out = []
    i = 0
    m = mask
    while m:
        if m & 1:
            out.append(i)
        m >>= 1
        i += 1
    return out


def iter_indices(mask: int) -> Iterator[int]:
    i = 0
    m = mask
    while m:
        if m & 1:
            yield i
        m >>= 1
        i += 1


def contains(mask: int, i: int) -> bool:
    return bool((mask >> i) & 1)


def is_subset(a: int, b: int) -> bool:
    return a & ~b == 0


def full_mask(n: int) -> int:
    return (1 << n) - 1


def popcount(mask: int) -> int:
    return mask.bit_count()


def subsets_of(mask: int) -> Iterator[int]:
    """All submasks of `mask`, including 0 and mask itself."""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def word_key(mask: int, n: int) -> int:
    """Sort key realizing lexicographic order on membership words.

    The word of a mask lists membership of element 0 first; comparing words
    lexicographically equals comparing the bit-reversed mask numerically.
    """
    key = 0
    for i in range(n):
        key = (key << 1) | ((mask >> i) & 1)
    return key


def family_sort(masks: Iterable[int], n: int) -> tuple[int, ...]:
    """Canonical duplicate-free ordering of a family of subsets."""
    return tuple(sorted(set(masks), key=lambda m: word_key(m, n)))


def render(mask: int, names=None) -> str:
    idx = to_indices(mask)
    if not idx:
        return "{}"
    if names is None:
        return "{" + ",".join(str(i) for i in idx) + "}"
    return "{" + ",".join(names[i] for i in idx) + "}"
