"""Linear projections that alleviate or remove skewness.

Works on the standardized third cumulant K: its right singular vectors
associated with the smallest singular values span the directions along
which the whitened data are least skewed; when K has a genuine null space
of dimension k, projecting onto it makes the third cumulant of the
projections exactly null (weak symmetry). With no exact null space the
construction degrades gracefully to "least skewed".
"""

from __future__ import annotations

import numpy as np

from .data import DataError, as_data_matrix, covariance, inv_sqrt, standardize
from .measures import SkewnessReport, mardia_skewness
from .moments import third_moment
from .projection import ProjectionBasis

__all__ = ["min_skew", "residual_skewness"]


def min_skew(data, dimension: int) -> ProjectionBasis:
    """Project onto the least-skewed subspace of the requested dimension.

    Parameters
    ----------
    data : DataMatrix or array-like
        n x d observations with nonsingular covariance.
    dimension : int
        Number of projections, between 2 and d.

    Returns
    -------
    ProjectionBasis
        ``standardized_directions`` are the right singular vectors of the
        standardized third cumulant for its ``dimension`` smallest singular
        values (ties broken by SVD order, each column's sign canonicalized
        so its largest-magnitude entry is positive); ``skewness`` holds
        those singular values; ``directions`` ("Linear") maps centered data
        to the zero-mean, identity-covariance ``projected`` ("Projections").
    """
    data = as_data_matrix(data)
    if not 2 <= dimension <= data.d:
        raise DataError(
            f"dimension must be an integer between 2 and the number of "
            f"variables ({data.d}), got {dimension}"
        )
    z = standardize(data).values
    cumulant = third_moment(data, "standardized").values
    _, singular_values, vt = np.linalg.svd(cumulant)
    # smallest `dimension` singular values; SVD order (descending) preserved
    selected = vt[data.d - dimension :].T.copy()
    values = singular_values[data.d - dimension :]
    for j in range(selected.shape[1]):
        column = selected[:, j]
        if column[int(np.argmax(np.abs(column)))] < 0:
            selected[:, j] = -column
    projected = z @ selected
    directions = inv_sqrt(covariance(data)) @ selected
    return ProjectionBasis(
        directions=directions,
        standardized_directions=selected,
        skewness=values,
        projected=projected,
    )


def residual_skewness(basis: ProjectionBasis, data) -> SkewnessReport:
    """Mardia skewness report of the data as seen through a projection basis.

    Recomputes the projections from ``data`` and ``basis.directions`` (so a
    basis/data mismatch is caught) and measures what skewness remains.
    """
    data = as_data_matrix(data)
    if basis.directions.shape[0] != data.d:
        raise DataError(
            f"basis was built for {basis.directions.shape[0]} variables, "
            f"data has {data.d}"
        )
    centered = data.values - data.values.mean(axis=0)
    return mardia_skewness(centered @ basis.directions)
