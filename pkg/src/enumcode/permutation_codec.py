"""Rank and unrank sequences among the arrangements of their own multiset.

Sequences with identical symbol frequencies are ordered lexicographically
under the supplied alphabet (first alphabet entry sorts lowest); ranks are
zero-based. The alphabet may be a ``str``, ``bytes``, or any sequence of
distinct hashable symbols, and unranked sequences come back in the same
container family.

Both directions carry the arrangement count of the remaining suffix along
incrementally: consuming one occurrence of symbol j scales the count by
c_j / m (m = symbols left), which stays exact because the scaled value is
itself a multinomial coefficient. That turns the per-position work into
O(sigma) big-int operations instead of fresh factorials.
"""

from __future__ import annotations

from typing import Hashable, Iterable, Sequence

from .combinatorics import multinomial

Alphabet = Sequence[Hashable]


def _symbol_positions(alphabet: Alphabet) -> dict:
    if len(alphabet) < 1:
        raise ValueError("alphabet must not be empty")
    positions: dict = {}
    for pos, sym in enumerate(alphabet):
        if sym in positions:
            raise ValueError(f"alphabet entries must be distinct (repeated {sym!r})")
        positions[sym] = pos
    return positions


def _render(alphabet: Alphabet, ids: Iterable[int]):
    if isinstance(alphabet, str):
        return "".join(alphabet[i] for i in ids)
    if isinstance(alphabet, (bytes, bytearray)):
        return bytes(alphabet[i] for i in ids)
    return [alphabet[i] for i in ids]


def frequency_vector(seq: Iterable[Hashable], alphabet: Alphabet) -> tuple[int, ...]:
    """Occurrence count of each alphabet symbol in ``seq``, in alphabet order."""
    positions = _symbol_positions(alphabet)
    counts = [0] * len(alphabet)
    for offset, sym in enumerate(seq):
        pos = positions.get(sym)
        if pos is None:
            raise ValueError(f"symbol {sym!r} at offset {offset} is not in the alphabet")
        counts[pos] += 1
    return tuple(counts)


def sequence_to_perm_index(seq: Sequence[Hashable], alphabet: Alphabet) -> int:
    """Zero-based lexicographic rank of ``seq`` among arrangements of its multiset.

    The empty sequence ranks 0.
    """
    positions = _symbol_positions(alphabet)
    counts = [0] * len(alphabet)
    ids: list[int] = []
    for offset, sym in enumerate(seq):
        pos = positions.get(sym)
        if pos is None:
            raise ValueError(f"symbol {sym!r} at offset {offset} is not in the alphabet")
        ids.append(pos)
        counts[pos] += 1

    rank = 0
    remaining = len(ids)
    arrangements = multinomial(counts)
    for k in ids:
        # arrangements of the suffix that start with a smaller symbol
        for j in range(k):
            if counts[j]:
                rank += arrangements * counts[j] // remaining
        arrangements = arrangements * counts[k] // remaining
        counts[k] -= 1
        remaining -= 1
    return rank


def perm_index_to_sequence(pid: int, counts: Iterable[int], alphabet: Alphabet):
    """The rank-``pid`` arrangement of the multiset described by ``counts``.

    Inverse of :func:`sequence_to_perm_index`; a rank at or beyond the
    arrangement count is rejected (it signals a corrupt stream upstream).
    """
    _symbol_positions(alphabet)
    remaining_counts = list(counts)
    if len(remaining_counts) != len(alphabet):
        raise ValueError("counts and alphabet must have the same length")
    arrangements = multinomial(remaining_counts)
    if not 0 <= pid < arrangements:
        raise ValueError(
            f"permutation rank {pid} out of range (multiset has {arrangements} arrangements)"
        )
    remaining = sum(remaining_counts)
    out: list[int] = []
    while remaining:
        preceding = 0
        for j, cj in enumerate(remaining_counts):
            if not cj:
                continue
            here = arrangements * cj // remaining
            if pid < preceding + here:
                pid -= preceding
                remaining_counts[j] -= 1
                arrangements = here
                remaining -= 1
                out.append(j)
                break
            preceding += here
    return _render(alphabet, out)


def enumerate_perms(
    counts: Iterable[int], alphabet: Alphabet, *, limit: int = 200_000
) -> list:
    """All arrangements of the multiset, in rank (lexicographic) order.

    Generated by repeated next-permutation steps, independently of the
    ranking walk, so it doubles as an order oracle in tests. Refuses to
    materialize more than ``limit`` arrangements.
    """
    _symbol_positions(alphabet)
    counts = list(counts)
    if len(counts) != len(alphabet):
        raise ValueError("counts and alphabet must have the same length")
    total = multinomial(counts)
    if total > limit:
        raise ValueError(f"{total} arrangements exceed the materialization limit {limit}")

    current: list[int] = []
    for j, c in enumerate(counts):
        if c < 0:
            raise ValueError("counts must be non-negative")
        current.extend([j] * c)
    out = [_render(alphabet, current)]
    while _next_permutation(current):
        out.append(_render(alphabet, current))
    return out


def _next_permutation(ids: list[int]) -> bool:
    """Advance ``ids`` to its lexicographic successor in place; False at the end."""
    i = len(ids) - 2
    while i >= 0 and ids[i] >= ids[i + 1]:
        i -= 1
    if i < 0:
        return False
    j = len(ids) - 1
    while ids[j] <= ids[i]:
        j -= 1
    ids[i], ids[j] = ids[j], ids[i]
    ids[i + 1 :] = reversed(ids[i + 1 :])
    return True
