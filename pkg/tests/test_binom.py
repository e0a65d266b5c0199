import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, strategies as st

from fuzzy_pvalue.binom import BinomParams, log_pmf, pmf_matrix, pmf_vector


def closed_form(k, n, p):
    return math.comb(n, k) * p**k * (1 - p) ** (n - k)


def test_fair_coin():
    assert log_pmf(0, BinomParams(1, 0.5)) == pytest.approx(math.log(0.5), abs=1e-15)


def test_degenerate_at_zero():
    assert log_pmf(0, BinomParams(10, 0.0)) == 0.0
    assert log_pmf(1, BinomParams(10, 0.0)) == -math.inf


def test_degenerate_at_one():
    assert log_pmf(10, BinomParams(10, 1.0)) == 0.0
    assert log_pmf(9, BinomParams(10, 1.0)) == -math.inf


def test_log_pmf_exact_value():
    # 210 * (2/5)^4 * (3/5)^6 in exact rational arithmetic
    exact = Fraction(210) * Fraction(2, 5) ** 4 * Fraction(3, 5) ** 6
    assert float(exact) == pytest.approx(0.250822656, abs=1e-15)
    assert log_pmf(4, BinomParams(10, 0.4)) == pytest.approx(math.log(exact), abs=1e-14)


def test_log_pmf_domain():
    with pytest.raises(ValueError):
        log_pmf(11, BinomParams(10, 0.3))
    with pytest.raises(ValueError):
        log_pmf(-1, BinomParams(10, 0.3))


@pytest.mark.parametrize("trials,p", [(-1, 0.5), (3, 1.5), (3, -0.1), (2.5, 0.5)])
def test_params_invariants(trials, p):
    with pytest.raises(ValueError):
        BinomParams(trials, p)


def test_pmf_vector_small_cases():
    np.testing.assert_array_equal(pmf_vector(BinomParams(1, 0.5)), [0.5, 0.5])
    np.testing.assert_array_equal(pmf_vector(BinomParams(2, 1.0)), [0.0, 0.0, 1.0])


def test_pmf_vector_matches_closed_form():
    expected = [closed_form(k, 10, 0.4) for k in range(11)]
    np.testing.assert_allclose(pmf_vector(BinomParams(10, 0.4)), expected, rtol=1e-14)


def test_pmf_matrix_rows_match_vectors():
    probs = np.array([0.0, 0.1, 0.5, 0.93, 1.0])
    mat = pmf_matrix(7, probs)
    for row, p in zip(mat, probs):
        np.testing.assert_array_equal(row, pmf_vector(BinomParams(7, float(p))))


@given(st.integers(0, 60), st.floats(0, 1))
def test_normalization(n, p):
    vec = pmf_vector(BinomParams(n, p))
    assert np.all(vec >= 0)
    assert math.fsum(vec) == pytest.approx(1.0, abs=1e-12)


# dyadic probabilities make 1 - p exact, isolating the kernel from input rounding
@given(st.integers(1, 40), st.integers(1, 1023))
def test_symmetry(n, j):
    p = j / 1024
    a = pmf_vector(BinomParams(n, p))
    b = pmf_vector(BinomParams(n, 1 - p))[::-1]
    np.testing.assert_allclose(a, b, rtol=1e-14, atol=0)


@given(st.integers(0, 30), st.sampled_from([0.0, 0.3, 1.0]))
def test_finite_exactly_on_support(n, p):
    params = BinomParams(n, p)
    for k in range(n + 1):
        finite = math.isfinite(log_pmf(k, params))
        assert finite == (closed_form(k, n, p) > 0)
