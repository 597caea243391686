"""Littlewood-Richardson coefficients by counting LR tableaux."""

from __future__ import annotations

from functools import lru_cache

from .partitions import Partition, partitions_of


def lr_coefficient(lam: Partition, mu: Partition, nu: Partition) -> int:
    """``c^nu_{lam, mu}``: the number of semistandard fillings of ``nu / lam`` with content
    ``mu`` whose reverse reading word is a lattice word."""
    return _lr(lam.parts, mu.parts, nu.parts)


@lru_cache(maxsize=None)
def _lr(lam: tuple[int, ...], mu: tuple[int, ...], nu: tuple[int, ...]) -> int:
    if sum(lam) + sum(mu) != sum(nu) or len(lam) > len(nu):
        return 0
    if any(lam[i] > nu[i] for i in range(len(lam))):
        return 0
    if not mu:
        return 1 if lam == nu else 0
    inner = list(lam) + [0] * (len(nu) - len(lam))
    # Cells in reading order: rows top to bottom, each row right to left.
    cells = [(r, c) for r in range(len(nu)) for c in range(nu[r] - 1, inner[r] - 1, -1)]
    filling: dict[tuple[int, int], int] = {}
    used = [0] * len(mu)

    def rec(k: int) -> int:
        if k == len(cells):
            return 1
        r, c = cells[k]
        total = 0
        # Row weakly increasing left to right: bounded above by the entry to the right.
        hi = filling.get((r, c + 1), len(mu))
        # Column strictly increasing: bounded below by the entry above plus one.
        lo = filling[(r - 1, c)] + 1 if (r - 1, c) in filling else 1
        for v in range(lo, hi + 1):
            if used[v - 1] == mu[v - 1]:
                continue
            # Lattice condition: never more v's than (v-1)'s so far.
            if v > 1 and used[v - 1] + 1 > used[v - 2]:
                continue
            used[v - 1] += 1
            filling[(r, c)] = v
            total += rec(k + 1)
            del filling[(r, c)]
            used[v - 1] -= 1
        return total

    return rec(0)


def lr_expansion(nu: Partition) -> list[tuple[Partition, Partition, int]]:
    """All ``(lam, mu, c)`` with ``|lam| + |mu| = |nu|`` and ``c = c^nu_{lam, mu} > 0``."""
    out = []
    n = nu.size()
    for a in range(n + 1):
        for lam in partitions_of(a):
            for mu in partitions_of(n - a):
                c = lr_coefficient(lam, mu, nu)
                if c:
                    out.append((lam, mu, c))
    return out
