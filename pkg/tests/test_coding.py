"""Tests for prefix codes, the near-dyadic PMF, and the n-1 bound."""

import math
import random
from collections import Counter

import pytest

from infomeasures import (
    CodeBook,
    Pmf,
    avg_code_length,
    ce_upper_bound,
    entropy,
    huffman,
    kl_upper_bound,
    section2_pmf,
    simulate_transmission,
    uniform_q_bound,
    unary_code,
    worst_case_report,
)
from helpers import optimal_avg_length, random_pmf


class TestSection2Pmf:
    def test_n3(self):
        assert section2_pmf(3, 0.1).probs == pytest.approx(
            (0.675, 0.225, 0.1), abs=1e-15
        )

    def test_n2(self):
        assert section2_pmf(2, 0.25).probs == pytest.approx(
            (0.75, 0.25), abs=1e-15
        )

    def test_sums_to_one(self):
        for n in range(2, 13):
            for eps in (2.0**-n, 2.0 ** -(n - 1) * 0.999, 1e-12):
                q = section2_pmf(n, eps)
                assert math.fsum(q.probs) == pytest.approx(1.0, abs=1e-12)

    def test_epsilon_range(self):
        with pytest.raises(ValueError):
            section2_pmf(4, 0.0)
        with pytest.raises(ValueError):
            section2_pmf(4, 2.0**-3)  # must be strictly below 2^-(n-1)
        with pytest.raises(ValueError):
            section2_pmf(4, -0.1)

    def test_n_too_small(self):
        with pytest.raises(ValueError):
            section2_pmf(1, 0.1)


class TestUnaryCode:
    def test_n4_listing(self):
        assert unary_code(4).codewords == ("0", "10", "110", "111")

    def test_n2(self):
        assert unary_code(2).codewords == ("0", "1")

    def test_max_length_is_n_minus_1(self):
        assert unary_code(8).max_length == 7

    def test_kraft_sum_is_one(self):
        for n in (2, 3, 8, 16):
            assert unary_code(n).kraft_sum() == pytest.approx(1.0, abs=1e-15)

    def test_n_too_small(self):
        with pytest.raises(ValueError):
            unary_code(1)


class TestCodeBook:
    def test_prefix_violation(self):
        with pytest.raises(ValueError):
            CodeBook(("0", "01"))

    def test_kraft_violation(self):
        with pytest.raises(ValueError):
            CodeBook(("0", "1", "0"))

    def test_empty_codeword(self):
        with pytest.raises(ValueError):
            CodeBook(("0", ""))

    def test_non_binary(self):
        with pytest.raises(ValueError):
            CodeBook(("0", "12"))

    def test_empty_codebook(self):
        with pytest.raises(ValueError):
            CodeBook(())

    def test_lengths(self):
        assert CodeBook(("0", "10", "11")).lengths == (1, 2, 2)


class TestHuffman:
    def test_two_letters(self):
        assert sorted(huffman(Pmf((0.5, 0.5))).lengths) == [1, 1]

    def test_uniform_four(self):
        assert sorted(huffman(Pmf.uniform(4)).lengths) == [2, 2, 2, 2]

    def test_section2_lengths(self):
        code = huffman(section2_pmf(5, 1e-3))
        assert sorted(code.lengths) == [1, 2, 3, 4, 4]

    def test_section2_lengths_all_n(self):
        for n in range(3, 11):
            code = huffman(section2_pmf(n, 2.0**-n))
            assert Counter(code.lengths) == Counter(
                list(range(1, n)) + [n - 1]
            )

    def test_deterministic(self):
        q = Pmf((0.25, 0.25, 0.25, 0.25))
        assert huffman(q).codewords == huffman(q).codewords

    def test_matches_brute_force_on_fixed_cases(self):
        for probs in (
            (0.5, 0.25, 0.125, 0.125),
            (0.4, 0.3, 0.2, 0.1),
            (0.9, 0.05, 0.03, 0.02),
        ):
            q = Pmf(probs)
            assert avg_code_length(q, huffman(q)) == pytest.approx(
                optimal_avg_length(probs), abs=1e-12
            )

    def test_random_properties(self):
        rng = random.Random(47)
        for _ in range(200):
            n = rng.randint(2, 16)
            q = random_pmf(rng, n)  # strictly positive
            code = huffman(q)
            assert len(code) == n
            assert code.kraft_sum() <= 1.0 + 1e-12
            assert code.max_length <= n - 1
            avg = avg_code_length(q, code)
            h = entropy(q)
            assert h - 1e-12 <= avg < h + 1.0

    def test_n_too_small(self):
        with pytest.raises(ValueError):
            huffman(Pmf((1.0,)))


class TestAvgCodeLength:
    def test_degenerate_worst_case(self):
        p = Pmf((0.0, 0.0, 0.0, 1.0))
        assert avg_code_length(p, unary_code(4)) == 3.0

    def test_two_letter(self):
        assert avg_code_length(Pmf((0.5, 0.5)), unary_code(2)) == 1.0

    def test_uniform_four(self):
        assert avg_code_length(Pmf.uniform(4), unary_code(4)) == 2.25

    def test_length_mismatch(self):
        with pytest.raises(ValueError):
            avg_code_length(Pmf((0.5, 0.5)), unary_code(3))


class TestBounds:
    def test_ce_upper_bound(self):
        assert ce_upper_bound(2) == 1
        assert ce_upper_bound(5) == 4
        assert ce_upper_bound(64) == 63
        with pytest.raises(ValueError):
            ce_upper_bound(1)

    def test_kl_upper_bound(self):
        assert kl_upper_bound(5, 0.0) == 4.0
        assert kl_upper_bound(5) == 4.0  # all PMFs admissible by default
        assert kl_upper_bound(2, 1.0) == 0.0
        assert kl_upper_bound(4, 1.0) == 2.0
        with pytest.raises(ValueError):
            kl_upper_bound(2, 1.5)  # above log2(2)
        with pytest.raises(ValueError):
            kl_upper_bound(2, -0.1)

    def test_uniform_q_bound(self):
        assert uniform_q_bound(8) == (3.0, 3)
        analytic, whole = uniform_q_bound(5)
        assert analytic == pytest.approx(math.log2(5), abs=1e-15)
        assert whole == 3
        assert uniform_q_bound(2) == (1.0, 1)
        with pytest.raises(ValueError):
            uniform_q_bound(1)

    def test_uniform_bound_far_below_ce_bound(self):
        for n in (8, 32, 64):
            assert uniform_q_bound(n)[1] < ce_upper_bound(n)


class TestSimulateTransmission:
    def test_degenerate_is_exact(self):
        for seed in (0, 1, 12345):
            assert simulate_transmission(
                Pmf((1.0, 0.0)), unary_code(2), 1000, seed
            ) == 1.0

    def test_degenerate_on_longest(self):
        assert simulate_transmission(
            Pmf((0.0, 0.0, 0.0, 1.0)), unary_code(4), 100_000, 3
        ) == 3.0

    def test_uniform_four_converges(self):
        bits = simulate_transmission(Pmf.uniform(4), unary_code(4), 100_000, 7)
        assert abs(bits - 2.25) < 0.03

    def test_deterministic_per_seed(self):
        a = simulate_transmission(Pmf((0.6, 0.4)), unary_code(2), 10_000, 99)
        b = simulate_transmission(Pmf((0.6, 0.4)), unary_code(2), 10_000, 99)
        assert a == b

    def test_validation(self):
        with pytest.raises(ValueError):
            simulate_transmission(Pmf((0.5, 0.5)), unary_code(3), 10, 0)
        with pytest.raises(ValueError):
            simulate_transmission(Pmf((0.5, 0.5)), unary_code(2), 0, 0)


class TestWorstCaseReport:
    def test_n4(self):
        report = worst_case_report(4)
        assert report.avg_length == 3.0
        assert report.max_length == 3
        assert report.entropy_of_p == 0.0
        # default epsilon 2^-n makes the analytic value exactly n bits
        assert report.analytic_cross_entropy == pytest.approx(4.0, abs=1e-12)
        assert report.bound == 3

    def test_realized_hits_bound_analytic_exceeds_it(self):
        for n in range(3, 9):
            report = worst_case_report(n)
            assert report.avg_length == float(report.bound)
            assert report.analytic_cross_entropy > report.bound

    def test_explicit_epsilon(self):
        report = worst_case_report(3, epsilon=0.1)
        assert report.analytic_cross_entropy == pytest.approx(
            -math.log2(0.1), rel=1e-12
        )


def test_every_codebook_respects_the_cap_for_any_p():
    # realized bits/letter never exceed n-1, whatever the source PMF
    rng = random.Random(53)
    for _ in range(100):
        n = rng.randint(2, 12)
        q = random_pmf(rng, n)
        for code in (huffman(q), unary_code(n)):
            for _ in range(5):
                p = random_pmf(rng, n, allow_zeros=True)
                assert avg_code_length(p, code) <= n - 1 + 1e-9
