# services/quot/partitions.py
from functools import lru_cache


class Partition(tuple):
    """Weakly decreasing positive parts."""

    def __new__(cls, parts):
        parts = tuple(int(p) for p in parts)
        if any(p < 1 for p in parts):
            raise ValueError(f"Partition parts must be positive: {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"Partition parts must be weakly decreasing: {parts}")
        return super().__new__(cls, parts)

    @property
    def parts(self):
        return tuple(self)

    @property
    def total(self):
        return sum(self)

    @property
    def length(self):
        return len(self)

    def __repr__(self):
        return f"Partition{tuple(self)}"


def _parts(k, max_parts, largest):
    if k == 0:
        yield ()
        return
    if max_parts == 0:
        return
    for first in range(min(k, largest), 0, -1):
        for rest in _parts(k - first, max_parts - 1, first):
            yield (first,) + rest


@lru_cache(maxsize=512)
def _partitions_cached(d, n):
    return tuple(Partition(p) for p in _parts(d, n, d))


def partitions_leq(d, n):
    """Partitions of d of length at most n, largest first (reverse lexicographic)."""
    if d < 1 or n < 1:
        raise ValueError(f"partitions_leq needs d >= 1 and n >= 1, got d={d}, n={n}.")
    return list(_partitions_cached(d, n))


def part_sizes(d, n):
    """Distinct part sizes occurring across partitions_leq(d, n)."""
    return sorted({m for p in partitions_leq(d, n) for m in p})
