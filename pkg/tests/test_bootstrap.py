from fractions import Fraction

import numpy as np
import pytest

from mvskew import DataError, SingularityError, mardia_skewness, skew_boot


# ---------------------------------------------------------------------------
# p-value structure
# ---------------------------------------------------------------------------

@pytest.mark.parametrize("measure", ["Directional", "Partial", "Mardia"])
def test_pvalue_is_multiple_of_one_over_r_plus_one(iris, measure):
    result = skew_boot(iris, replicates=10, units=11, measure=measure, seed=101)
    fraction = Fraction(result.pvalue).limit_denominator(11)
    assert fraction.denominator in (1, 11)
    assert Fraction(1, 11) <= fraction <= 1


def test_pvalue_bounds(iris):
    result = skew_boot(iris, replicates=4, units=10, measure="Mardia", seed=3)
    assert 1 / 5 <= result.pvalue <= 1.0


# ---------------------------------------------------------------------------
# determinism
# ---------------------------------------------------------------------------

def test_same_seed_bit_identical(iris):
    a = skew_boot(iris, replicates=12, units=20, measure="Mardia", seed=7)
    b = skew_boot(iris, replicates=12, units=20, measure="Mardia", seed=7)
    assert np.array_equal(a.replicates, b.replicates)
    assert a.pvalue == b.pvalue
    assert a.histogram == b.histogram
    assert a.observed == b.observed


def test_different_seed_differs(iris):
    a = skew_boot(iris, replicates=12, units=20, measure="Mardia", seed=7)
    b = skew_boot(iris, replicates=12, units=20, measure="Mardia", seed=8)
    assert not np.array_equal(a.replicates, b.replicates)


def test_replicate_streams_independent_of_count(iris):
    # per-replicate streams derive from (seed, index): a longer run must
    # reproduce the shorter run's replicates as a prefix
    short = skew_boot(iris, replicates=5, units=20, measure="Mardia", seed=11)
    long = skew_boot(iris, replicates=9, units=20, measure="Mardia", seed=11)
    assert np.array_equal(long.replicates[:5], short.replicates)


# ---------------------------------------------------------------------------
# histogram
# ---------------------------------------------------------------------------

def test_histogram_counts_sum_to_replicates(iris):
    result = skew_boot(iris, replicates=16, units=12, measure="Partial", seed=2)
    assert sum(count for _, _, count in result.histogram) == 16
    lowers = [lo for lo, _, _ in result.histogram]
    uppers = [hi for _, hi, _ in result.histogram]
    assert all(lo < hi for lo, hi in zip(lowers, uppers))
    assert lowers[1:] == uppers[:-1]  # contiguous bins


def test_histogram_sturges_bin_count(iris):
    result = skew_boot(iris, replicates=16, units=12, measure="Mardia", seed=2)
    assert len(result.histogram) == int(np.ceil(np.log2(16))) + 1


# ---------------------------------------------------------------------------
# preconditions and measures
# ---------------------------------------------------------------------------

def test_units_constraint_mardia(iris):
    with pytest.raises(DataError, match="units"):
        skew_boot(iris, replicates=5, units=4, measure="Mardia", seed=0)
    skew_boot(iris, replicates=2, units=5, measure="Mardia", seed=0)


def test_units_constraint_partial(iris):
    with pytest.raises(DataError, match="units"):
        skew_boot(iris, replicates=5, units=5, measure="Partial", seed=0)
    skew_boot(iris, replicates=2, units=6, measure="Partial", seed=0)


def test_replicates_constraint(iris):
    with pytest.raises(DataError, match="replicates"):
        skew_boot(iris, replicates=0, units=11, measure="Mardia", seed=0)


def test_unknown_measure(iris):
    with pytest.raises(DataError, match="measure"):
        skew_boot(iris, replicates=2, units=11, measure="Kurtosis", seed=0)


def test_measure_case_insensitive(iris):
    result = skew_boot(iris, replicates=2, units=11, measure="mardia", seed=0)
    assert result.measure == "Mardia"


def test_units_may_exceed_n(iris):
    result = skew_boot(iris, replicates=3, units=200, measure="Mardia", seed=5)
    assert len(result.replicates) == 3


def test_replicates_nonnegative(iris):
    for measure in ("Mardia", "Directional"):
        result = skew_boot(iris, replicates=6, units=15, measure=measure, seed=4)
        assert np.all(result.replicates >= 0)
        assert result.observed >= 0


def test_singular_resamples_are_redrawn():
    # univariate data with few distinct values: many resamples are constant
    # and must be silently redrawn from the same replicate stream
    data = np.array([[0.0], [0.0], [0.0], [1.0]])
    result = skew_boot(data, replicates=20, units=2, measure="Mardia", seed=1)
    assert len(result.replicates) == 20
    assert np.all(np.isfinite(result.replicates))


def test_observed_matches_direct_measure(iris):
    result = skew_boot(iris, replicates=2, units=20, measure="Mardia", seed=0)
    assert result.observed == mardia_skewness(iris).value


def test_iris_mardia_bootstrap_distribution(iris):
    # resampling from skewed data reproduces the statistic with upward
    # small-sample bias: the bootstrap distribution at units=n sits at or
    # above the observed value, never far below it
    result = skew_boot(iris, replicates=200, units=150, measure="Mardia", seed=13)
    assert result.observed == pytest.approx(mardia_skewness(iris).value)
    assert np.percentile(result.replicates, 1) > 0.8 * result.observed
    assert np.median(result.replicates) < 2.0 * result.observed
    scaled = result.pvalue * 201
    assert abs(scaled - round(scaled)) < 1e-6
