"""mvskew: detect, measure, and remove multivariate skewness.

The toolkit is organized around the third multivariate moment of an n x d
sample, stored as a d^2 x d matrix. On top of it sit the classical scalar
skewness measures (per-variable Fisher, Mardia, partial, directional) with
parametric and bootstrap p-values, a projection pursuit that finds
mutually orthogonal directions of maximal skewness, and its converse, a
linear transformation that projects skewness away.
"""

from .bootstrap import BootstrapResult, skew_boot
from .data import (
    DataError,
    DataMatrix,
    SingularityError,
    SpdMatrix,
    covariance,
    inv_sqrt,
    load_csv,
    mean_vector,
    standardize,
)
from .measures import (
    SkewnessReport,
    chi2_sf,
    directional_skewness,
    fisher_skew,
    mardia_pairwise,
    mardia_skewness,
    mori_vector,
    partial_skewness,
)
from .moments import (
    ThirdMomentMatrix,
    block,
    cumulant_from_moments,
    kronecker,
    load_third_moment,
    save_third_moment,
    third_moment,
    transform_third,
)
from .projection import ProjectionBasis, max_skew, skewness_of_projection
from .symmetrize import min_skew, residual_skewness

__version__ = "0.1.0"

__all__ = [
    "BootstrapResult",
    "DataError",
    "DataMatrix",
    "ProjectionBasis",
    "SingularityError",
    "SkewnessReport",
    "SpdMatrix",
    "ThirdMomentMatrix",
    "block",
    "chi2_sf",
    "covariance",
    "cumulant_from_moments",
    "directional_skewness",
    "fisher_skew",
    "inv_sqrt",
    "kronecker",
    "load_csv",
    "load_third_moment",
    "mardia_pairwise",
    "mardia_skewness",
    "max_skew",
    "mean_vector",
    "min_skew",
    "mori_vector",
    "partial_skewness",
    "residual_skewness",
    "save_third_moment",
    "skew_boot",
    "skewness_of_projection",
    "standardize",
    "third_moment",
    "transform_third",
]
