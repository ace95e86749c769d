import itertools
import sys
from pathlib import Path

import numpy as np

sys.path.insert(0, str(Path(__file__).parent))


def pytest_runtest_logreport(report):
    """One pass/fail line per acceptance check."""
    if "test_acceptance" not in report.nodeid or report.when != "call":
        return
    name = report.nodeid.split("::")[-1]
    status = "PASS" if report.passed else ("FAIL" if report.failed else "SKIP")
    sys.stdout.write(f"[acceptance] {name}: {status}\n")


# ---------------------------------------------------------------------------
# independent oracles shared by several test modules
# ---------------------------------------------------------------------------

def tau_vertex_oracle(matrix, p) -> float:
    """Semi-norm max ||M^T x||_p over {x : ||x||_p = 1, sum(x) = 0}, by
    enumerating the extreme points of the feasible set.

    p = 1: extreme points are (e_i - e_j) / 2.
    p = inf: all +-1 patterns balanced to sum 0 (one coordinate 0 if n odd).
    """
    m = np.asarray(matrix, dtype=float)
    n = m.shape[0]
    best = 0.0
    if p == 1:
        for i, j in itertools.combinations(range(n), 2):
            x = np.zeros(n)
            x[i], x[j] = 0.5, -0.5
            best = max(best, float(np.abs(m.T @ x).sum()))
        return best
    if n % 2 == 0:
        for chosen in itertools.combinations(range(n), n // 2):
            x = -np.ones(n)
            x[list(chosen)] = 1.0
            best = max(best, float(np.abs(m.T @ x).max()))
        return best
    for zero_at in range(n):
        rest = [i for i in range(n) if i != zero_at]
        for chosen in itertools.combinations(rest, (n - 1) // 2):
            x = np.zeros(n)
            x[rest] = -1.0
            x[list(chosen)] = 1.0
            best = max(best, float(np.abs(m.T @ x).max()))
    return best


def random_row_sum_matrix(rng, n, row_sum=None, lo=-9, hi=9):
    """Integer-valued matrix whose rows all sum to the same integer, exactly."""
    if row_sum is None:
        row_sum = int(rng.integers(-20, 21))
    m = rng.integers(lo, hi + 1, size=(n, n)).astype(float)
    m[:, -1] = row_sum - m[:, :-1].sum(axis=1)
    return m, float(row_sum)
