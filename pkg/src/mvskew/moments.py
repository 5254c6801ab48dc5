"""Third multivariate moment and cumulant matrices.

The third moment of a d-vector is stored as a d^2 x d matrix: the mixed
moment m[i,j,h] sits at row (i-1)*d + j, column h (1-based), so the matrix
is d symmetric d x d blocks stacked vertically, block i collecting the
moments E(X_i x x').  Entries are invariant under all six permutations of
(i,j,h); construction enforces that symmetry exactly by writing each
sorted-index value into every permuted slot.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .data import DataError, as_data_matrix, covariance, standardize

__all__ = [
    "KINDS",
    "ThirdMomentMatrix",
    "third_moment",
    "cumulant_from_moments",
    "transform_third",
    "block",
    "kronecker",
    "save_third_moment",
    "load_third_moment",
]

KINDS = ("raw", "central", "standardized")

# tolerance for accepting an externally supplied matrix as index-symmetric
SYMMETRY_RTOL = 1e-8


def _canonical(values: np.ndarray) -> np.ndarray:
    """Map every entry of the (d,d,d) tensor to its sorted-index value.

    Output is exactly invariant under index permutations. Raises if the
    input deviates from symmetry by more than SYMMETRY_RTOL relative.
    """
    d = values.shape[0]
    idx = np.indices((d, d, d)).reshape(3, -1)
    srt = np.sort(idx, axis=0)
    canon = values[srt[0], srt[1], srt[2]].reshape(d, d, d)
    scale = max(np.abs(values).max(), 1.0)
    if np.abs(canon - values).max() > SYMMETRY_RTOL * scale:
        raise DataError("matrix violates third-moment index symmetry")
    return canon


@dataclass(frozen=True)
class ThirdMomentMatrix:
    """A d^2 x d third moment/cumulant matrix with its kind tag."""

    values: np.ndarray
    kind: str

    def __post_init__(self):
        if self.kind not in KINDS:
            raise DataError(f"kind must be one of {KINDS}, got {self.kind!r}")
        values = np.array(self.values, dtype=float)
        if values.ndim != 2:
            raise DataError("expected a 2-d array")
        rows, d = values.shape
        if rows != d * d:
            raise DataError(f"expected shape (d^2, d), got {values.shape}")
        values = _canonical(values.reshape(d, d, d)).reshape(d * d, d)
        values.setflags(write=False)
        object.__setattr__(self, "values", values)

    @property
    def d(self) -> int:
        return self.values.shape[1]

    def tensor(self) -> np.ndarray:
        """The same data as a (d, d, d) array, t[i,j,h] = m_{ijh}."""
        d = self.d
        return self.values.reshape(d, d, d)


def third_moment(data, kind: str) -> ThirdMomentMatrix:
    """Sample third moment matrix of the requested kind.

    Parameters
    ----------
    data : DataMatrix or array-like
        n observations in rows.
    kind : {'raw', 'central', 'standardized'}
        Raw averages x (x) x' (x) x over rows; central first subtracts the
        mean; standardized uses the whitened rows z = S^{-1/2}(x - mean).

    Returns
    -------
    ThirdMomentMatrix
        With 1/n weights, exactly index-symmetric.
    """
    data = as_data_matrix(data)
    if kind not in KINDS:
        raise DataError(f"kind must be one of {KINDS}, got {kind!r}")
    if kind == "raw":
        rows = data.values
    elif kind == "central":
        rows = data.values - data.values.mean(axis=0)
    else:
        rows = standardize(data).values
    n, d = rows.shape
    pairs = (rows[:, :, None] * rows[:, None, :]).reshape(n, d * d)
    values = pairs.T @ rows / n
    return ThirdMomentMatrix(values, kind)


def kronecker(a, b) -> np.ndarray:
    """Kronecker product with ((i-1)r+k, (j-1)s+l) = a[i,j] b[k,l] layout."""
    return np.kron(np.atleast_2d(np.asarray(a, dtype=float)),
                   np.atleast_2d(np.asarray(b, dtype=float)))


def cumulant_from_moments(m3: ThirdMomentMatrix, m2, mu) -> ThirdMomentMatrix:
    """Third cumulant from raw moments.

    Evaluates K3 = M3 - M2 (x) mu - mu (x) M2 - vec(M2) mu' + 2 mu (x) mu' (x) mu,
    where M2 is the raw second moment and mu the mean, both on the same 1/n
    convention as ``m3``. Agrees with third_moment(data, 'central') to 1e-10.
    """
    if m3.kind != "raw":
        raise DataError(f"need a raw third moment, got kind={m3.kind!r}")
    m2 = np.asarray(m2, dtype=float)
    mu = np.asarray(mu, dtype=float).reshape(-1)
    d = m3.d
    if m2.shape != (d, d):
        raise DataError(f"second moment shape {m2.shape} does not match d={d}")
    if mu.shape != (d,):
        raise DataError(f"mean length {mu.shape[0]} does not match d={d}")
    col = mu.reshape(d, 1)
    row = mu.reshape(1, d)
    vec_m2 = m2.reshape(d * d, 1, order="F")
    values = (
        m3.values
        - kronecker(m2, col)
        - kronecker(col, m2)
        - vec_m2 @ row
        + 2.0 * kronecker(kronecker(col, row), col)
    )
    return ThirdMomentMatrix(values, "central")


def transform_third(m3: ThirdMomentMatrix, a) -> ThirdMomentMatrix:
    """Third moment of the linearly transformed vector y = A x.

    Computes (A (x) A) M3 A' for a k x d matrix A. Kind is preserved for
    raw/central; a standardized input stays standardized only when A has
    orthonormal rows (checked numerically), otherwise the result is tagged
    central (Ax of a mean-zero standardized vector is still mean zero).
    """
    a = np.atleast_2d(np.asarray(a, dtype=float))
    if a.shape[1] != m3.d:
        raise DataError(
            f"transform has {a.shape[1]} columns, moment dimension is {m3.d}"
        )
    values = kronecker(a, a) @ m3.values @ a.T
    kind = m3.kind
    if kind == "standardized":
        gram = a @ a.T
        if not np.allclose(gram, np.eye(a.shape[0]), atol=1e-10):
            kind = "central"
    return ThirdMomentMatrix(values, kind)


def block(m3: ThirdMomentMatrix, i: int) -> np.ndarray:
    """Block B_i = E(X_i x x'), rows (i-1)d+1 .. i*d, for 1-based i."""
    d = m3.d
    if not 1 <= i <= d:
        raise IndexError(f"block index {i} out of range 1..{d}")
    return m3.values[(i - 1) * d : i * d, :]


def save_third_moment(m3: ThirdMomentMatrix, path, precision: int = 17) -> None:
    """Write to CSV: one `# kind=...` comment line, then d^2 rows of d values."""
    path = Path(path)
    fmt = f"%.{precision}g"
    with open(path, "w") as handle:
        handle.write(f"# kind={m3.kind}\n")
        for row in m3.values:
            handle.write(",".join(fmt % x for x in row) + "\n")


def load_third_moment(path) -> ThirdMomentMatrix:
    """Read a matrix written by :func:`save_third_moment`."""
    path = Path(path)
    kind = None
    rows = []
    with open(path) as handle:
        for line in handle:
            line = line.strip()
            if not line:
                continue
            if line.startswith("#"):
                key, _, val = line.lstrip("#").strip().partition("=")
                if key.strip() == "kind":
                    kind = val.strip()
                continue
            rows.append([float(cell) for cell in line.split(",")])
    if kind is None:
        raise DataError(f"{path}: missing '# kind=' header line")
    return ThirdMomentMatrix(np.array(rows), kind)
