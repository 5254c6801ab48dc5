"""Bootstrap distribution, histogram, and p-value for a skewness measure.

For each replicate, ``units`` rows are drawn from the data uniformly with
replacement and the chosen measure is recomputed; the p-value uses the
add-one rule (1 + #{replicate >= observed}) / (replicates + 1), so with R
replicates it is always an integer multiple of 1/(R+1).

Replicate statistics are stored and reported raw (untransformed); for the
Mardia and Directional measures they are nonnegative by construction.

Determinism: row sampling uses numpy's counter-based Philox generator with
one child stream per replicate derived from (seed, replicate index), and
unbiased bounded integers, so identical inputs give bit-identical results
regardless of how replicates are scheduled.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .data import DataError, DataMatrix, SingularityError, as_data_matrix
from .measures import mardia_skewness, partial_skewness
from .projection import max_skew

__all__ = ["BootstrapResult", "skew_boot", "MEASURES"]

MEASURES = ("Directional", "Partial", "Mardia")

# iteration budget handed to max_skew when the measure is Directional
DIRECTIONAL_ITERATIONS = 5

# give up on a replicate after this many singular resamples
MAX_REDRAWS = 100


@dataclass(frozen=True)
class BootstrapResult:
    """Replicate statistics, observed statistic, p-value, and histogram."""

    replicates: np.ndarray
    observed: float
    pvalue: float
    histogram: list[tuple[float, float, int]]
    measure: str
    seed: int


def _statistic(data: DataMatrix, measure: str) -> float:
    if measure == "Mardia":
        return float(mardia_skewness(data).value)
    if measure == "Partial":
        return float(partial_skewness(data).value)
    basis = max_skew(data, iterations=DIRECTIONAL_ITERATIONS, components=1)
    return float(basis.skewness[0] ** 2)


def _sturges_histogram(values: np.ndarray) -> list[tuple[float, float, int]]:
    bins = int(np.ceil(np.log2(len(values)))) + 1 if len(values) > 1 else 1
    counts, edges = np.histogram(values, bins=bins)
    return [
        (float(edges[i]), float(edges[i + 1]), int(counts[i]))
        for i in range(len(counts))
    ]


def skew_boot(data, replicates: int, units: int, measure: str, seed: int = 0) -> BootstrapResult:
    """Bootstrap test for a multivariate skewness measure.

    Parameters
    ----------
    data : DataMatrix or array-like
        n x d observations.
    replicates : int
        Number of bootstrap replicates (>= 1).
    units : int
        Rows per resample (with replacement). Must exceed the number of
        variables for Directional/Mardia and the number of variables plus
        one for Partial; it may be smaller or larger than n.
    measure : {'Directional', 'Partial', 'Mardia'}
        Statistic to bootstrap. Directional uses the projection search with
        its iteration budget fixed at 5.
    seed : int
        RNG seed; identical seeds give bit-identical results.

    Returns
    -------
    BootstrapResult
        With p-value (1 + #{replicate >= observed}) / (replicates + 1) and
        a Sturges-binned histogram of the replicate statistics.
    """
    data = as_data_matrix(data)
    canonical = {name.lower(): name for name in MEASURES}
    try:
        measure = canonical[str(measure).lower()]
    except KeyError:
        raise DataError(
            f"measure must be one of {MEASURES}, got {measure!r}"
        ) from None
    minimum = data.d + 1 if measure == "Partial" else data.d
    if units <= minimum:
        raise DataError(
            f"units must be greater than {minimum} for the {measure} "
            f"measure on {data.d} variables, got {units}"
        )
    if replicates < 1:
        raise DataError(f"replicates must be >= 1, got {replicates}")

    observed = _statistic(data, measure)
    values = np.empty(replicates)
    for r in range(replicates):
        rng = np.random.Generator(
            np.random.Philox(np.random.SeedSequence(entropy=seed, spawn_key=(r,)))
        )
        for _ in range(MAX_REDRAWS):
            rows = rng.integers(0, data.n, size=units)
            try:
                values[r] = _statistic(DataMatrix(data.values[rows], data.names), measure)
                break
            except SingularityError:
                continue  # degenerate resample: redraw from the same stream
        else:
            raise SingularityError(
                f"replicate {r}: resample covariance still singular after "
                f"{MAX_REDRAWS} redraws"
            )

    exceed = int(np.count_nonzero(values >= observed))
    pvalue = (1 + exceed) / (replicates + 1)
    return BootstrapResult(
        replicates=values,
        observed=observed,
        pvalue=pvalue,
        histogram=_sturges_histogram(values),
        measure=measure,
        seed=seed,
    )
