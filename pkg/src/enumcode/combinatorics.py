"""Exact counting kernel shared by the rank/unrank codecs.

Every quantity here is a plain Python int, so counts are exact at any
magnitude. Floating point never enters a counting path; logarithms live in
:mod:`enumcode.analysis`.
"""

from __future__ import annotations

import math
from typing import Iterable


def binomial(n: int, k: int) -> int:
    """C(n, k), defined as 0 when k < 0 or k > n."""
    if n < 0:
        raise ValueError("n must be non-negative")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def multinomial(counts: Iterable[int]) -> int:
    """Number of distinct arrangements of a multiset with these counts.

    Equals (sum counts)! / prod(c_i!); exactly 1 when at most one count is
    non-zero.
    """
    result = 1
    total = 0
    for c in counts:
        if c < 0:
            raise ValueError("counts must be non-negative")
        total += c
        result *= math.comb(total, c)
    return result


def positive_compositions(parts: int, total: int) -> int:
    """Ways to write ``total`` as an ordered sum of ``parts`` positive integers."""
    if parts < 1:
        raise ValueError("parts must be >= 1")
    if total < 1:
        raise ValueError("total must be >= 1")
    return binomial(total - 1, parts - 1)


def k_count_sum_form(sigma: int, inner_sum: int) -> int:
    """Composition count evaluated by summing over the number of zero dimensions.

    Slower than the closed form used by :meth:`CombinatoricsContext.k_count`;
    kept as an independent cross-check. The summation's derivation assumes at
    least one positive dimension, so the empty composition (inner_sum == 0)
    is returned directly.
    """
    if sigma < 1:
        raise ValueError("sigma must be >= 1")
    if inner_sum < 0:
        raise ValueError("inner_sum must be >= 0")
    if inner_sum == 0:
        return 1
    return sum(
        binomial(inner_sum - 1, sigma - 1 - i) * binomial(sigma, i)
        for i in range(sigma)
    )


def ceil_log2(count: int) -> int:
    """Bits needed to hold one of ``count`` distinct values (0 when count == 1)."""
    if count < 1:
        raise ValueError("count must be >= 1")
    return (count - 1).bit_length()


class CombinatoricsContext:
    """Grow-only memo table for composition counts.

    The rank/unrank loops probe k_count(d, s) for many (d, s) pairs per
    block, and reuse across blocks dominates their running time. The table
    is single-writer while it grows; either prefill it and share it
    read-only across workers, or give each worker its own context.
    """

    __slots__ = ("_table",)

    def __init__(self) -> None:
        self._table: dict[tuple[int, int], int] = {}

    def k_count(self, sigma: int, inner_sum: int) -> int:
        """Number of sigma-dimensional vectors of non-negative ints with the given sum.

        Closed form C(inner_sum + sigma - 1, sigma - 1), memoized.
        """
        if sigma < 1:
            raise ValueError("sigma must be >= 1")
        if inner_sum < 0:
            raise ValueError("inner_sum must be >= 0")
        key = (sigma, inner_sum)
        value = self._table.get(key)
        if value is None:
            value = math.comb(inner_sum + sigma - 1, sigma - 1)
            self._table[key] = value
        return value

    def prefill(self, max_sigma: int, max_sum: int) -> None:
        """Populate the table for all (sigma, s) up to the given bounds."""
        for sigma in range(1, max_sigma + 1):
            for s in range(max_sum + 1):
                self.k_count(sigma, s)

    def __len__(self) -> int:
        return len(self._table)
