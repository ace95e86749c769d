"""Upper bounds on the largest remaining eigenvalue, four ways.

The farthest point of any inclusion region bounds the remaining
eigenvalues; the disc regions make that explicit.  Two semi-norms with
closed forms (half max row L1 distance; max column top/bottom gap) bound
them too, tighten when applied to matrix powers, and yield a determinant
bound as a byproduct.
"""

import numpy as np

import eigenfence as ef

A = np.array([
    [4, 3, 4, 6],
    [8, 4, 8, 16],
    [16, 8, 2, 12],
    [6, 3, 4, 4]], dtype=float)
pair = ef.Eigenpair(24.0, np.array([1, 2, 2, 1], dtype=float))

B = ef.diag_similar(A, pair).B
F = ef.refine_even(B).F
print("B =\n", B)
print("F =\n", F)

print("\ndisc bound from B :", ef.bound_from_discs(B))
print("disc bound from F :", ef.bound_from_discs(F), " (|lambda_2| is 6: tight)")

print("\nsemi-norm power table for F:")
print("  k | tau_inf(F^k)^(1/k) | tau_1(F^k)^(1/k)")
for k in (1, 2, 3):
    ti = ef.powered_bound(F, k, ef.SemiNorm.LINF)
    t1 = ef.powered_bound(F, k, ef.SemiNorm.L1)
    print(f"  {k} | {ti:18.4f} | {t1:16.4f}")

spectrum = ef.eigenvalues(A)
largest_rest = max(abs(z) for z in ef.nontrivial_values(spectrum, 24.0))
print("largest remaining |eigenvalue|:", round(largest_rest, 6))

det = ef.determinant(A)
for k in (1, 3):
    cap = ef.det_bound(A, pair, k, ef.SemiNorm.LINF)
    print(f"determinant bound (k={k}): |det| = {abs(det):g} <= {cap:g}")

# the full report the CLI emits, as plain objects
print("\nstandard report:")
for r in ef.standard_reports(A, pair, ks=(1, 2, 3)):
    print(f"  {r.name:12s} {r.value:10.4f}   from {r.source}")
