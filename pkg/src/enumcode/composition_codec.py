"""Rank and unrank frequency vectors with a fixed inner sum.

A frequency vector is a tuple of ``sigma`` non-negative counts. All vectors
sharing an inner sum are ordered with the first dimension most significant
and values ascending; the final dimension never affects the rank because it
is implied by the sum. For example the three 2-dimensional vectors summing
to 2 rank as (0,2) < (1,1) < (2,0). Ranks are zero-based.

Ranking walks each free dimension and adds, for every value below the
stored one, the count of vectors that complete the remaining dimensions;
unranking greedily subtracts those same counts. Both directions therefore
cost O(inner_sum) memoized count lookups.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .combinatorics import CombinatoricsContext


def _validated(counts: Iterable[int], inner_sum: int | None) -> tuple[int, ...]:
    vec = tuple(counts)
    if not vec:
        raise ValueError("frequency vector must have at least one dimension")
    for dim, c in enumerate(vec):
        if c < 0:
            raise ValueError(f"negative count {c} at dimension {dim}")
    if inner_sum is not None and inner_sum != sum(vec):
        raise ValueError(
            f"declared inner sum {inner_sum} != actual sum {sum(vec)}"
        )
    return vec


def vector_to_index(
    counts: Iterable[int],
    ctx: CombinatoricsContext,
    *,
    inner_sum: int | None = None,
    trace: list[int] | None = None,
) -> int:
    """Zero-based rank of ``counts`` among all vectors with the same inner sum.

    ``inner_sum``, when given, is validated against the actual sum (encoders
    declare it; a mismatch means the caller miscounted). ``trace``, when a
    list, receives every count added to the rank, in order.
    """
    vec = _validated(counts, inner_sum)
    sigma = len(vec)
    remaining = sum(vec)
    index = 0
    for dim in range(sigma - 1):
        free = sigma - 1 - dim
        for value in range(vec[dim]):
            step = ctx.k_count(free, remaining - value)
            index += step
            if trace is not None:
                trace.append(step)
        remaining -= vec[dim]
    return index


def index_to_vector(
    index: int, inner_sum: int, sigma: int, ctx: CombinatoricsContext
) -> tuple[int, ...]:
    """The unique vector of ``sigma`` counts summing to ``inner_sum`` with this rank."""
    if sigma < 1:
        raise ValueError("sigma must be >= 1")
    if inner_sum < 0:
        raise ValueError("inner_sum must be >= 0")
    if not 0 <= index < ctx.k_count(sigma, inner_sum):
        raise ValueError(
            f"rank {index} out of range for {sigma} dimensions summing to {inner_sum}"
        )
    counts = [0] * sigma
    remaining = inner_sum
    for dim in range(sigma - 1):
        free = sigma - 1 - dim
        while remaining > 0:
            step = ctx.k_count(free, remaining)
            if index < step:
                break
            index -= step
            counts[dim] += 1
            remaining -= 1
    counts[sigma - 1] = remaining
    return tuple(counts)


def enumerate_all(
    inner_sum: int,
    sigma: int,
    ctx: CombinatoricsContext,
    *,
    limit: int = 200_000,
) -> list[tuple[int, ...]]:
    """All vectors of ``sigma`` counts summing to ``inner_sum``, in rank order.

    Generated independently of the ranking walk (plain nested ascent), so it
    doubles as an order oracle in tests. Refuses to materialize more than
    ``limit`` vectors.
    """
    if sigma < 1:
        raise ValueError("sigma must be >= 1")
    if inner_sum < 0:
        raise ValueError("inner_sum must be >= 0")
    total = ctx.k_count(sigma, inner_sum)
    if total > limit:
        raise ValueError(f"{total} vectors exceed the materialization limit {limit}")
    out: list[tuple[int, ...]] = []

    def extend(prefix: tuple[int, ...], remaining: int) -> None:
        if len(prefix) == sigma - 1:
            out.append(prefix + (remaining,))
            return
        for value in range(remaining + 1):
            extend(prefix + (value,), remaining - value)

    extend((), inner_sum)
    return out


def format_vector(counts: Sequence[int]) -> str:
    """Render a vector as comma-separated counts (the CLI table format)."""
    return ",".join(str(c) for c in counts)
