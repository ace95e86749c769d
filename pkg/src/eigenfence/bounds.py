"""Upper bounds on the largest remaining eigenvalue in absolute value.

All bounds act on a constant row-sum matrix B similar to A (or its
refinements F, G):

* disc bound: ``max_i |b_ii| + r_i`` over the second-type discs of B^T;
* semi-norms ``tau_1`` (half the maximum L1 distance between rows) and
  ``tau_inf`` (the largest column top-half/bottom-half gap), both invariant
  under per-column constant shifts;
* powered bounds ``tau_p(B^k) ** (1/k)``, which tighten as k grows;
* a determinant bound ``|lambda| * tau_p(B^k) ** ((n-1)/k)``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .core import DEFAULT_TOL, Eigenpair, SizeError, as_matrix
from .discs import _top_bottom_gap, second_type_radius
from .refine import row_sum_constant
from .similarity import diag_similar

#: Entry magnitude above which matrix powering stops with OverflowError.
POWER_LIMIT = 1e300


class SemiNorm(enum.Enum):
    """The two semi-norms with closed forms."""

    L1 = "1"
    LINF = "inf"


@dataclass(frozen=True)
class BoundReport:
    """One named bound value with its provenance."""

    name: str
    value: float
    source: str
    k: int | None = None

    def to_json(self) -> dict:
        return {"name": self.name, "value": self.value, "source": self.source, "k": self.k}


def bound_from_discs(matrix) -> float:
    """``max_i |m_ii| + r_i`` with r_i the second-type radius of column i.

    Meaningful when M is a constant row-sum matrix (B, F or G); the value
    is the farthest reach from the origin of the second-type disc union.
    """
    m = as_matrix(matrix)
    n = m.shape[0]
    if n < 3:
        raise SizeError(f"disc bound needs n >= 3, got n = {n}")
    best = 0.0
    for j in range(n):
        off = np.delete(m[:, j], j)
        best = max(best, abs(float(m[j, j])) + second_type_radius(off))
    return best


def tau1(matrix) -> float:
    """Half the maximum L1 distance between any two rows."""
    m = as_matrix(matrix)
    if m.shape[0] < 2:
        return 0.0
    dist = np.abs(m[:, None, :] - m[None, :, :]).sum(axis=2)
    return float(dist.max() / 2.0)


def column_gap(matrix) -> np.ndarray:
    """Per-column statistic: sort all n entries descending, subtract the
    bottom block from the top block (middle skipped for odd n).  Unlike the
    second-type radius the diagonal entry participates and no 0 is inserted.
    """
    m = as_matrix(matrix)
    return np.array([_top_bottom_gap(np.sort(m[:, j])[::-1]) for j in range(m.shape[1])])


def tau_inf(matrix) -> float:
    """Largest column gap; equals the infinity semi-norm of a constant
    row-sum matrix."""
    m = as_matrix(matrix)
    if m.shape[0] < 2:
        return 0.0
    return float(column_gap(m).max())


def _tau(matrix, kind: SemiNorm) -> float:
    return tau1(matrix) if kind is SemiNorm.L1 else tau_inf(matrix)


def _check_magnitude(p: np.ndarray) -> np.ndarray:
    if not np.all(np.isfinite(p)) or np.abs(p).max() > POWER_LIMIT:
        raise OverflowError(f"matrix power exceeded {POWER_LIMIT:g}")
    return p


def _power(matrix: np.ndarray, k: int) -> np.ndarray:
    if k < 1:
        raise ValueError(f"power k must be >= 1, got {k}")
    p = _check_magnitude(matrix)
    with np.errstate(over="ignore", invalid="ignore"):
        for _ in range(k - 1):
            p = _check_magnitude(p @ matrix)
    return p


def powered_bound(matrix, k: int, kind: SemiNorm) -> float:
    """``tau_kind(M^k) ** (1/k)`` for a constant row-sum matrix M."""
    m = as_matrix(matrix)
    row_sum_constant(m)
    value = _tau(_power(m, k), kind)
    return float(value ** (1.0 / k))


def det_bound(matrix, pair: Eigenpair, k: int, kind: SemiNorm,
              tol: float = DEFAULT_TOL) -> float:
    """Upper bound ``|lambda| * tau_kind(B^k) ** ((n-1)/k)`` on |det A|.

    B is the diagonal-similar constant row-sum matrix; powering B directly
    is the same as conjugating A^k and avoids one similarity per power.
    """
    a = as_matrix(matrix)
    b = diag_similar(a, pair, tol).B
    n = a.shape[0]
    value = _tau(_power(b, k), kind)
    return float(abs(pair.value) * value ** ((n - 1) / k))


def standard_reports(matrix, pair: Eigenpair, ks: tuple[int, ...] = (1,),
                     kinds: tuple[SemiNorm, ...] = (SemiNorm.L1, SemiNorm.LINF),
                     include_det: bool = False,
                     tol: float = DEFAULT_TOL) -> list[BoundReport]:
    """Assemble the full set of bound reports for a problem.

    Covers the disc bounds of B and of the refinement matrices, the powered
    semi-norm bounds for the requested powers/kinds, and optionally the
    determinant bounds (at each requested k and at k = n-1).
    """
    from .refine import refine_even, refine_odd

    a = as_matrix(matrix)
    b = diag_similar(a, pair, tol).B
    n = a.shape[0]
    reports = [BoundReport("m_B", bound_from_discs(b), "second_type_discs(B)")]
    if n % 2 == 0:
        f = refine_even(b).F
        reports.append(BoundReport("m_F", bound_from_discs(f), "second_type_discs(F)"))
    else:
        ref = refine_odd(b)
        m_f = bound_from_discs(ref.F)
        m_g = bound_from_discs(ref.G)
        reports.append(BoundReport("m_F", m_f, "second_type_discs(F)"))
        reports.append(BoundReport("m_G", m_g, "second_type_discs(G)"))
        reports.append(BoundReport("m_FG", min(m_f, m_g), "min(second_type_discs(F), second_type_discs(G))"))
    for kind in kinds:
        label = "tau1" if kind is SemiNorm.L1 else "tauinf"
        for k in ks:
            reports.append(BoundReport(
                f"{label}_k{k}", powered_bound(b, k, kind),
                f"tau_{kind.value}(B^k)^(1/k)", k=k))
    if include_det:
        for kind in kinds:
            label = "tau1" if kind is SemiNorm.L1 else "tauinf"
            for k in sorted(set(ks) | {n - 1}):
                reports.append(BoundReport(
                    f"det_{label}_k{k}", det_bound(a, pair, k, kind, tol),
                    f"|lambda| * tau_{kind.value}(B^k)^((n-1)/k)", k=k))
    return reports
