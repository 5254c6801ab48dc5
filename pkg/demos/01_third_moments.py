"""Build and inspect third multivariate moment matrices.

The third moment of a d-variable sample collects every mixed moment
E(X_i X_j X_h) in a d^2 x d matrix: d symmetric blocks stacked on top of
each other, block i holding E(X_i x x'). Raw, central, and standardized
variants answer different questions: location+scale-contaminated shape,
pure shape, and shape after removing correlations.
"""

from pathlib import Path

import numpy as np

from mvskew import block, load_csv, save_third_moment, third_moment

iris = load_csv(Path(__file__).resolve().parents[1] / "data" / "iris.csv",
                columns=[1, 2, 3, 4])
print(f"iris: {iris.n} observations of {iris.d} variables {iris.names}\n")

np.set_printoptions(precision=4, suppress=True)

for kind in ("raw", "central", "standardized"):
    m3 = third_moment(iris, kind)
    print(f"--- {kind} third moment ({m3.values.shape[0]}x{m3.values.shape[1]}) ---")
    print(m3.values)
    print()

# the matrix is d symmetric blocks; block i is E(X_i x x')
central = third_moment(iris, "central")
b1 = block(central, 1)
print("block 1 of the central moment (sepal length slice):")
print(b1)
print("symmetric:", np.array_equal(b1, b1.T))

# every entry is invariant under permutations of its three indices
t = central.tensor()
print("\nindex symmetry, e.g. m[1,2,3] == m[3,1,2]:",
      t[0, 1, 2] == t[2, 0, 1])

# the largest-magnitude central entry sits at (petal length)^3: the most
# asymmetric variable in absolute units
i, j, h = np.unravel_index(np.abs(t).argmax(), t.shape)
print(f"largest |central entry| {t[i, j, h]:+.4f} at variables "
      f"({iris.names[i]}, {iris.names[j]}, {iris.names[h]})")

out = Path(__file__).with_name("third_standardized.csv")
save_third_moment(third_moment(iris, "standardized"), out, precision=6)
print(f"\nwrote {out.name} (reload with mvskew.load_third_moment)")
