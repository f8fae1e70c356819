"""Partition combinatorics.

Partitions are plain tuples of weakly decreasing positive integers; the empty
partition is ().
"""

from __future__ import annotations

from functools import cache


def check_partition(mu) -> tuple:
    mu = tuple(int(x) for x in mu)
    if any(x <= 0 for x in mu):
        raise ValueError(f"partition parts must be positive: {mu}")
    if any(mu[i] < mu[i + 1] for i in range(len(mu) - 1)):
        raise ValueError(f"parts must be weakly decreasing: {mu}")
    return mu


def partitions(n: int):
    """All partitions of n in reverse lexicographic order."""
    if n == 0:
        yield ()
        return
    if n < 0:
        return
    cur = [n]
    while True:
        yield tuple(cur)
        # find rightmost part > 1, decrement it, redistribute the tail
        i = len(cur) - 1
        while i >= 0 and cur[i] == 1:
            i -= 1
        if i < 0:
            return
        rest = len(cur) - i - 1 + 1  # ones after position i, plus the unit taken
        cur[i] -= 1
        cur = cur[:i + 1]
        while rest > 0:
            take = min(cur[-1], rest)
            cur.append(take)
            rest -= take


@cache
def count_partitions(n: int) -> int:
    return sum(1 for _ in partitions(n))


def boxes(mu):
    """Boxes (i, j) of the Young diagram, rows and columns 1-indexed."""
    for i, part in enumerate(mu, start=1):
        for j in range(1, part + 1):
            yield i, j


def transpose(mu) -> tuple:
    mu = tuple(mu)
    if not mu:
        return ()
    return tuple(sum(1 for part in mu if part >= j)
                 for j in range(1, mu[0] + 1))


def cont(mu) -> int:
    """Sum of contents j - i over the boxes of mu."""
    return sum(j - i for i, j in boxes(mu))


def n_stat(mu) -> int:
    """n(mu) = sum (i-1) * mu_i."""
    return sum((i - 1) * part for i, part in enumerate(mu, start=1))


def is_e_regular(mu, e: int) -> bool:
    """No part repeated e or more times."""
    mu = tuple(mu)
    return all(mu.count(v) < e for v in set(mu))


def e_regular_partitions(n: int, e: int):
    return [mu for mu in partitions(n) if is_e_regular(mu, e)]


def partition_str(mu) -> str:
    """Serialization used in JSON ids, e.g. "3+2+1"; empty partition is "0"."""
    return "+".join(str(p) for p in mu) if mu else "0"


def partition_from_str(s: str) -> tuple:
    s = s.strip()
    if s in ("", "0"):
        return ()
    return check_partition(int(p) for p in s.split("+"))
