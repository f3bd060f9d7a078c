"""Integer partitions as plain tuples of weakly decreasing positive ints."""

from __future__ import annotations

from collections import Counter
from functools import lru_cache
from math import factorial

Partition = tuple


def make_partition(parts) -> Partition:
    lam = tuple(sorted((int(x) for x in parts if x), reverse=True))
    if any(x < 0 for x in lam):
        raise ValueError(f"negative part in {parts!r}")
    return lam


def is_partition(lam) -> bool:
    return all(isinstance(x, int) and x >= 1 for x in lam) and all(
        lam[i] >= lam[i + 1] for i in range(len(lam) - 1))


@lru_cache(maxsize=None)
def partitions(n: int) -> tuple[Partition, ...]:
    """Partitions of n in reverse lexicographic order, (n) first."""
    if n < 0:
        return ()
    out = []

    def rec(rest, maxpart, prefix):
        if rest == 0:
            out.append(tuple(prefix))
            return
        for k in range(min(rest, maxpart), 0, -1):
            prefix.append(k)
            rec(rest - k, k, prefix)
            prefix.pop()

    rec(n, n, [])
    return tuple(out)


@lru_cache(maxsize=None)
def partition_index(n: int) -> dict:
    return {lam: i for i, lam in enumerate(partitions(n))}


def n_partitions(n: int) -> int:
    return len(partitions(n))


def size(lam) -> int:
    return sum(lam)


def conjugate(lam) -> Partition:
    if not lam:
        return ()
    return tuple(sum(1 for x in lam if x > j) for j in range(lam[0]))


@lru_cache(maxsize=None)
def z_const(lam) -> int:
    out = 1
    for part, mult in Counter(lam).items():
        out *= factorial(mult) * part ** mult
    return out


def multiplicities(lam) -> dict:
    return dict(Counter(lam))


def dominates(lam, mu) -> bool:
    """True when lam >= mu in dominance order (same size assumed)."""
    if sum(lam) != sum(mu):
        return False
    a = b = 0
    for i in range(max(len(lam), len(mu))):
        a += lam[i] if i < len(lam) else 0
        b += mu[i] if i < len(mu) else 0
        if a < b:
            return False
    return True


def cells(lam):
    """Cells (i, j), 1-based row i and column j."""
    return [(i + 1, j + 1) for i, row in enumerate(lam) for j in range(row)]


def add_cell_set(mu) -> list[Partition]:
    """Partitions obtained from mu by adding one cell."""
    out = []
    mu = list(mu)
    for i in range(len(mu) + 1):
        if i == 0 or mu[i - 1] > (mu[i] if i < len(mu) else 0):
            nu = mu[:]
            if i < len(nu):
                nu[i] += 1
            else:
                nu.append(1)
            out.append(tuple(nu))
    return out


def union(lam, mu) -> Partition:
    return tuple(sorted(lam + mu, reverse=True))


def remove_sub(mu, nu):
    """mu minus nu as multisets, or None if nu is not contained in mu."""
    c = Counter(mu)
    for x in nu:
        if c[x] == 0:
            return None
        c[x] -= 1
    return tuple(sorted(c.elements(), reverse=True))
