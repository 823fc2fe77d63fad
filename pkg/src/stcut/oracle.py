"""Independent reference computations used to check the solver.

Nothing here shares code paths with the closed forms it verifies: cuts are
found by enumeration, derivatives by central differences, the multiplier
by bisection and step lengths by grid scan.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DomainError, NoBracket, OutOfBox, TooLarge
from .graph import Problem, cut_value

MAX_EXACT_N = 24
_CHUNK = 1 << 16


@dataclass(frozen=True, eq=False)
class OracleResult:
    best_assignment: np.ndarray
    best_cut: float
    num_evaluated: int
    ties: int

    def to_dict(self) -> dict:
        return {
            "best_cut": self.best_cut,
            "assignment": self.best_assignment.tolist(),
            "ties": self.ties,
            "num_evaluated": self.num_evaluated,
        }


def brute_force_cut(problem: Problem, max_n: int = MAX_EXACT_N) -> OracleResult:
    """Exact s-t max cut by enumerating every assignment with x_s=+1, x_t=-1.

    Of the ``2**(n-1)`` assignments with ``x_s = +1`` exactly the
    ``2**(n-2)`` with ``x_t = -1`` separate the terminals; those are the
    ones scored.  Among optimal assignments the lexicographically smallest
    (with -1 < +1) is returned.
    """
    n = problem.n
    if n > max_n:
        raise TooLarge(f"exhaustive enumeration limited to n <= {max_n}, got n={n}")
    W = problem.weights
    s, t = problem.s, problem.t
    free = [i for i in range(n) if i not in (s, t)]
    k = len(free)
    total = problem.total_weight
    atol = 1e-9 * max(1.0, total)

    # bit (k-1-j) of the counter drives free[j]: counter order == lexicographic order
    shifts = np.arange(k - 1, -1, -1, dtype=np.int64)
    best_val, best_code, ties = -np.inf, 0, 0
    count = 1 << k
    for start in range(0, count, _CHUNK):
        codes = np.arange(start, min(start + _CHUNK, count), dtype=np.int64)
        X = np.empty((len(codes), n))
        X[:, s] = 1.0
        X[:, t] = -1.0
        if k:
            X[:, free] = 2.0 * ((codes[:, None] >> shifts) & 1) - 1.0
        # for +-1 vectors 0.5 x^T W x = total - 2 cut
        quad = 0.5 * np.einsum("ij,jk,ik->i", X, W, X)
        cuts = 0.5 * (total - quad)
        top = float(cuts.max())
        i = int(np.flatnonzero(cuts >= top - atol)[0])
        if top > best_val + atol:
            best_val, best_code = float(cuts[i]), int(codes[i])
            ties = int(np.count_nonzero(cuts >= best_val - atol))
        else:
            ties += int(np.count_nonzero(cuts >= best_val - atol))

    assignment = np.empty(n, dtype=int)
    assignment[s], assignment[t] = 1, -1
    for j, node in enumerate(free):
        assignment[node] = 1 if (best_code >> (k - 1 - j)) & 1 else -1
    return OracleResult(
        best_assignment=assignment,
        best_cut=cut_value(problem, assignment),
        num_evaluated=count,
        ties=ties,
    )


def finite_diff_gradient(fun, x, step: float = 1e-6) -> np.ndarray:
    """Central differences with per-coordinate step ``step * max(1, |x_i|)``."""
    x = np.asarray(x, dtype=float)
    grad = np.empty_like(x)
    for i in range(x.size):
        delta = step * max(1.0, abs(x[i]))
        xp, xm = x.copy(), x.copy()
        xp[i] += delta
        xm[i] -= delta
        try:
            fp, fm = fun(xp), fun(xm)
        except OutOfBox as exc:
            raise DomainError(f"probe along coordinate {i} left the domain: {exc}") from exc
        if not (np.isfinite(fp) and np.isfinite(fm)):
            raise DomainError(f"non-finite value probing coordinate {i}")
        grad[i] = (fp - fm) / (2.0 * delta)
    return grad


def bisect_root(fun, lo: float, hi: float, tol: float = 1e-12, max_iter: int = 400) -> float:
    """Root of a monotone ``fun`` on ``[lo, hi]`` by bisection."""
    flo, fhi = fun(lo), fun(hi)
    if flo == 0:
        return lo
    if fhi == 0:
        return hi
    if np.sign(flo) == np.sign(fhi):
        raise NoBracket(f"f({lo})={flo} and f({hi})={fhi} have the same sign")
    for _ in range(max_iter):
        mid = 0.5 * (lo + hi)
        if hi - lo <= tol or mid in (lo, hi):
            return mid
        fmid = fun(mid)
        if fmid == 0:
            return mid
        if np.sign(fmid) == np.sign(flo):
            lo, flo = mid, fmid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def grid_min(phi, points: int = 10_001) -> float:
    """Argmin of ``phi`` over a uniform grid on [0, 1]; first index wins ties."""
    if points < 2:
        raise ValueError("need at least 2 grid points")
    mus = np.linspace(0.0, 1.0, points)
    vals = np.array([phi(m) for m in mus])
    return float(mus[int(np.argmin(vals))])
