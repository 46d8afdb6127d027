import math
from collections import Counter
from itertools import combinations, product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from enumcode.combinatorics import (
    CombinatoricsContext,
    binomial,
    ceil_log2,
    k_count_sum_form,
    multinomial,
    positive_compositions,
)


class TestBinomial:
    def test_known_values(self):
        assert binomial(5, 3) == 10
        assert binomial(0, 0) == 1
        assert binomial(7, 0) == 1

    def test_against_enumeration(self):
        assert binomial(7, 2) == len(list(combinations(range(7), 2)))

    def test_out_of_range_k(self):
        assert binomial(3, 5) == 0
        assert binomial(3, -1) == 0

    def test_negative_n_rejected(self):
        with pytest.raises(ValueError):
            binomial(-1, 0)

    @given(st.integers(1, 300), st.integers(1, 300))
    def test_pascal_recurrence(self, n, k):
        assert binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k)


class TestMultinomial:
    def test_known_values(self):
        assert multinomial((3, 2)) == 10
        assert multinomial((4, 0, 0, 0)) == 1
        assert multinomial(()) == 1

    def test_against_factorials(self):
        counts = (2, 1, 2, 2)
        expected = math.factorial(7) // (
            math.factorial(2) * math.factorial(1) * math.factorial(2) * math.factorial(2)
        )
        assert expected == 630
        assert multinomial(counts) == expected

    def test_negative_rejected(self):
        with pytest.raises(ValueError):
            multinomial((1, -1))

    @given(st.lists(st.integers(0, 12), min_size=1, max_size=6), st.randoms())
    def test_invariant_under_count_permutation(self, counts, rng):
        shuffled = counts[:]
        rng.shuffle(shuffled)
        assert multinomial(counts) == multinomial(shuffled)


class TestPositiveCompositions:
    def test_against_enumeration(self):
        brute = sum(
            1
            for t in product(range(1, 9), repeat=4)
            if sum(t) == 8
        )
        assert brute == 35
        assert positive_compositions(4, 8) == 35

    @pytest.mark.parametrize("total", [1, 2, 7, 40])
    def test_single_part(self, total):
        assert positive_compositions(1, total) == 1

    @pytest.mark.parametrize("parts", [1, 2, 7, 40])
    def test_all_parts_forced_to_one(self, parts):
        assert positive_compositions(parts, parts) == 1

    def test_invalid_arguments(self):
        with pytest.raises(ValueError):
            positive_compositions(0, 5)
        with pytest.raises(ValueError):
            positive_compositions(3, 0)


class TestKCount:
    def test_known_values(self, ctx):
        assert ctx.k_count(4, 4) == 35
        assert ctx.k_count(3, 5) == 21
        assert ctx.k_count(3, 3) == 10
        assert ctx.k_count(2, 2) == 3

    @pytest.mark.parametrize("s", [0, 1, 5, 64])
    def test_one_dimension(self, ctx, s):
        assert ctx.k_count(1, s) == 1

    def test_zero_sum(self, ctx):
        for sigma in range(1, 9):
            assert ctx.k_count(sigma, 0) == 1

    def test_invalid_arguments(self, ctx):
        with pytest.raises(ValueError):
            ctx.k_count(0, 3)
        with pytest.raises(ValueError):
            ctx.k_count(2, -1)

    def test_matches_sum_form_everywhere(self, ctx):
        for sigma in range(1, 9):
            for n in range(65):
                assert ctx.k_count(sigma, n) == k_count_sum_form(sigma, n)

    def test_matches_brute_force_composition_count(self, ctx):
        for sigma in range(1, 5):
            by_sum = Counter(sum(t) for t in product(range(11), repeat=sigma))
            for n in range(11):
                assert ctx.k_count(sigma, n) == by_sum[n]

    @given(st.integers(2, 8), st.integers(0, 40))
    def test_dimension_recurrence(self, sigma, n):
        ctx = CombinatoricsContext()
        assert ctx.k_count(sigma, n) == sum(
            ctx.k_count(sigma - 1, n - j) for j in range(n + 1)
        )

    def test_memo_grows_and_prefill(self):
        ctx = CombinatoricsContext()
        assert len(ctx) == 0
        ctx.k_count(4, 4)
        assert len(ctx) == 1
        ctx.prefill(3, 5)
        assert len(ctx) == 1 + 3 * 6
        assert ctx.k_count(2, 3) == 4


class TestSumForm:
    def test_known_values(self):
        assert k_count_sum_form(4, 4) == 35
        assert k_count_sum_form(3, 3) == 10
        assert k_count_sum_form(2, 2) == 3

    def test_invalid_arguments(self):
        with pytest.raises(ValueError):
            k_count_sum_form(0, 1)


class TestCeilLog2:
    @pytest.mark.parametrize(
        "count,bits",
        [(1, 0), (2, 1), (3, 2), (4, 2), (5, 3), (21, 5), (630, 10), (1024, 10), (1025, 11)],
    )
    def test_values(self, count, bits):
        assert ceil_log2(count) == bits

    def test_rejects_zero(self):
        with pytest.raises(ValueError):
            ceil_log2(0)

    @given(st.integers(1, 10**9))
    def test_width_bounds_count(self, count):
        width = ceil_log2(count)
        assert count <= 2**width
        if width:
            assert count > 2 ** (width - 1)
