"""Column-shift refinements that shrink the second-type inclusion region.

For a constant row-sum matrix B, subtracting a per-column order statistic
of the off-diagonal entries from each column yields a new constant row-sum
matrix whose second-type region is contained in that of B^T and still
holds every non-trivial eigenvalue.  Even sizes use one shifted matrix F;
odd sizes use a pair F, G whose per-column disc intersections form the
refined region.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import EvenSizeError, NotConstantRowSumError, OddSizeError, SizeError, as_matrix
from .discs import MEMBERSHIP_EPS, Disc, second_type_discs_of_transpose, second_type_radius


@dataclass(frozen=True)
class EvenRefinement:
    """Shifted matrix F = B - e * shifts^T for even n."""

    F: np.ndarray
    shifts: np.ndarray


@dataclass(frozen=True)
class OddRefinement:
    """Shifted pair F = B + e * f_shifts^T, G = B + e * g_shifts^T for odd n."""

    F: np.ndarray
    G: np.ndarray
    f_shifts: np.ndarray
    g_shifts: np.ndarray


@dataclass(frozen=True)
class PairIntersectionUnion:
    """Union over columns j of the intersection of the two per-column discs."""

    pairs: tuple[tuple[Disc, Disc], ...]

    def __post_init__(self):
        if not self.pairs:
            raise ValueError("need at least one disc pair")
        object.__setattr__(self, "pairs", tuple((a, b) for a, b in self.pairs))

    def __len__(self) -> int:
        return len(self.pairs)

    def contains_points(self, z) -> np.ndarray:
        z = np.asarray(z, dtype=complex)
        hit = np.zeros(z.shape, dtype=bool)
        for da, db in self.pairs:
            hit |= da.contains_points(z) & db.contains_points(z)
        return hit

    def bounding_box(self) -> tuple[float, float, float, float]:
        boxes = []
        for da, db in self.pairs:
            ba, bb = da.bounding_box(), db.bounding_box()
            boxes.append((max(ba[0], bb[0]), min(ba[1], bb[1]),
                          max(ba[2], bb[2]), min(ba[3], bb[3])))
        boxes = [b for b in boxes if b[0] <= b[1] and b[2] <= b[3]] or boxes
        return (min(b[0] for b in boxes), max(b[1] for b in boxes),
                min(b[2] for b in boxes), max(b[3] for b in boxes))

    def to_json(self) -> dict:
        return {"kind": "pairwise_intersection_union",
                "pairs": [[a.to_json(), b.to_json()] for a, b in self.pairs]}


def row_sum_constant(matrix, rel_tol: float = MEMBERSHIP_EPS) -> float:
    """The shared row sum of a constant row-sum matrix.

    Raises NotConstantRowSumError when the row sums deviate by more than
    ``rel_tol * (1 + |mean sum|)``.
    """
    m = as_matrix(matrix)
    sums = m.sum(axis=1)
    lam = float(sums.mean())
    spread = float(sums.max() - sums.min())
    if spread > rel_tol * (1.0 + abs(lam)):
        raise NotConstantRowSumError(
            f"row sums spread {spread:.3e} exceeds tolerance (mean sum {lam:g})")
    return lam


def _kth_largest_offdiag(column: np.ndarray, j: int, k: int) -> float:
    off = np.delete(column, j)
    return float(np.sort(off)[::-1][k - 1])


def refine_even(matrix) -> EvenRefinement:
    """Even-size refinement: subtract the (n/2)-th largest off-diagonal per column."""
    b = as_matrix(matrix)
    n = b.shape[0]
    if n % 2:
        raise OddSizeError(f"even-size refinement called with odd n = {n}")
    if n < 4:
        raise SizeError(f"even-size refinement needs n >= 4, got n = {n}")
    row_sum_constant(b)
    shifts = np.array([_kth_largest_offdiag(b[:, j], j, n // 2) for j in range(n)])
    f = b - shifts[None, :]
    f.setflags(write=False)
    shifts.setflags(write=False)
    return EvenRefinement(F=f, shifts=shifts)


def refine_odd(matrix) -> OddRefinement:
    """Odd-size refinement pair.

    Per column, F adds the negated ((n-1)/2)-th largest off-diagonal entry
    and G the negated ((n+1)/2)-th largest ("k-th largest" counts
    multiplicity).
    """
    b = as_matrix(matrix)
    n = b.shape[0]
    if n % 2 == 0:
        raise EvenSizeError(f"odd-size refinement called with even n = {n}")
    if n < 3:
        raise SizeError(f"odd-size refinement needs n >= 3, got n = {n}")
    row_sum_constant(b)
    f_shifts = np.array([-_kth_largest_offdiag(b[:, j], j, (n - 1) // 2) for j in range(n)])
    g_shifts = np.array([-_kth_largest_offdiag(b[:, j], j, (n + 1) // 2) for j in range(n)])
    f = b + f_shifts[None, :]
    g = b + g_shifts[None, :]
    for arr in (f, g, f_shifts, g_shifts):
        arr.setflags(write=False)
    return OddRefinement(F=f, G=g, f_shifts=f_shifts, g_shifts=g_shifts)


def _column_disc(matrix: np.ndarray, j: int) -> Disc:
    off = np.delete(matrix[:, j], j)
    return Disc(float(matrix[j, j]), second_type_radius(off))


def refined_region_odd(matrix) -> PairIntersectionUnion:
    """Union over columns of (disc from F column j) ∩ (disc from G column j)."""
    ref = refine_odd(matrix)
    n = ref.F.shape[0]
    pairs = tuple((_column_disc(ref.F, j), _column_disc(ref.G, j)) for j in range(n))
    return PairIntersectionUnion(pairs)


def fg_intersection_region(matrix):
    """Intersection of the full second-type regions of F^T and G^T (odd n).

    Coarser than :func:`refined_region_odd` but has a simpler two-part
    shape.  Returns a :class:`eigenfence.geometry.RegionIntersection`.
    """
    from .geometry import RegionIntersection

    ref = refine_odd(matrix)
    return RegionIntersection((
        second_type_discs_of_transpose(ref.F),
        second_type_discs_of_transpose(ref.G),
    ))


def refined_region(matrix):
    """Refined inclusion region of a constant row-sum matrix, any parity.

    Even n: the second-type disc union of F^T.  Odd n: the per-column
    pair-intersection union.
    """
    b = as_matrix(matrix)
    if b.shape[0] % 2 == 0:
        return second_type_discs_of_transpose(refine_even(b).F)
    return refined_region_odd(b)
