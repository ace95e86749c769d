"""Constant row-sum matrices similar to A, driven by a known eigenpair.

Two constructions: the diagonal similarity ``B = S^-1 A S`` with
``S = diag(v)`` for eigenvectors without zero components, and a
permutation-plus-shear similarity that first repairs eigenvectors that do
contain zeros.  A stochastic normalization is provided for nonnegative
matrices with a positive eigenpair.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import (
    DEFAULT_TOL,
    AllZeroError,
    Eigenpair,
    NoZeroError,
    NotApplicableError,
    ZeroComponentError,
    as_matrix,
    require_eigenpair,
)

#: Relative threshold under which an eigenvector component counts as zero.
ZERO_TOL_FACTOR = 1e-12


def zero_tolerance(vector: np.ndarray) -> float:
    return ZERO_TOL_FACTOR * float(np.abs(vector).max())


def _frozen(a: np.ndarray) -> np.ndarray:
    a.setflags(write=False)
    return a


@dataclass(frozen=True)
class SimilarityResult:
    """Constant row-sum matrix B similar to A, with ``B e = row_sum * e``.

    ``scaling`` is the diagonal of the similarity transform (the eigenvector).
    The diagonal of B equals the diagonal of A entry for entry.
    """

    B: np.ndarray
    row_sum: float
    scaling: np.ndarray


@dataclass(frozen=True)
class Desingularization:
    """Similar matrix C with a zero-free eigenvector w.

    ``perm`` is the 0-based row order moving the k zero components of v to
    the front (stable within the zero and nonzero groups); ``C w = lambda w``.
    """

    C: np.ndarray
    w: np.ndarray
    perm: tuple[int, ...]
    k: int


def diag_similar(matrix, pair: Eigenpair, tol: float = DEFAULT_TOL) -> SimilarityResult:
    """Diagonal similarity ``b_ij = a_ij * v_j / v_i``.

    Requires every component of v to be nonzero; use :func:`desingularize`
    first otherwise.  The result does not change if v is rescaled.
    """
    a = as_matrix(matrix)
    require_eigenpair(a, pair, tol)
    v = pair.vector
    ztol = zero_tolerance(v)
    if np.any(np.abs(v) <= ztol):
        where = np.nonzero(np.abs(v) <= ztol)[0].tolist()
        raise ZeroComponentError(
            f"eigenvector has zero component(s) at {where}; desingularize first")
    b = a * (v[None, :] / v[:, None])
    return SimilarityResult(B=_frozen(b), row_sum=pair.value, scaling=_frozen(v.copy()))


def desingularize(matrix, pair: Eigenpair, tol: float = DEFAULT_TOL) -> Desingularization:
    """Remove zero components from the eigenvector by a similarity transform.

    A stable permutation moves the k zero components first, then a unit
    shear (identity plus ones in the first k rows of column k) produces
    ``C = S P A P^T S^-1`` with eigenvector ``w = S P v`` free of zeros.
    The shear inverse is the same matrix with the ones negated, so C is
    assembled by row/column updates only.
    """
    a = as_matrix(matrix)
    require_eigenpair(a, pair, tol)
    v = pair.vector
    ztol = zero_tolerance(v)
    zero = np.abs(v) <= ztol
    k = int(zero.sum())
    if k == v.size:
        raise AllZeroError("eigenvector is entirely zero")
    if k == 0:
        raise NoZeroError("eigenvector has no zero components; use diag_similar")

    order = np.concatenate([np.nonzero(zero)[0], np.nonzero(~zero)[0]])
    m = a[np.ix_(order, order)]

    # right-multiply by S^-1: column k minus the sum of the k zero-block columns
    c = m.copy()
    c[:, k] -= m[:, :k].sum(axis=1)
    # left-multiply by S: add row k into each of the first k rows
    c[:k, :] += c[k, :][None, :]

    vp = v[order]
    w = vp.copy()
    w[:k] = vp[k]
    return Desingularization(C=_frozen(c), w=_frozen(w), perm=tuple(int(i) for i in order), k=k)


def normalize_stochastic(matrix, pair: Eigenpair, tol: float = DEFAULT_TOL) -> np.ndarray:
    """Row-stochastic matrix ``B / lambda`` for nonnegative A with positive pair.

    Applicable when A is entrywise nonnegative, every v_i > 0 and lambda > 0
    (the Perron case); raises NotApplicableError otherwise.
    """
    a = as_matrix(matrix)
    if np.any(a < 0.0):
        raise NotApplicableError("matrix has negative entries")
    if np.any(pair.vector < 0.0):
        raise NotApplicableError("eigenvector has negative entries")
    if pair.value <= 0.0:
        raise NotApplicableError("eigenvalue must be positive")
    result = diag_similar(a, pair, tol)
    return _frozen(result.B / pair.value)
