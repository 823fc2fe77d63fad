"""Quadratic objective, generalized log barrier and their merged form.

With ``A = W - alpha*I`` the pieces are::

    f(x)    = 0.5 * x^T A x
    b(x)    = -sum_i [ln(p x_i + q) + ln(q - p x_i)]
    h(x, B) = f(x) + B * b(x)

``b`` is finite only on the open box ``(-q/p, q/p)^n``; evaluating it on or
outside the boundary raises :class:`~stcut.errors.OutOfBox`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .errors import OutOfBox, WrongLength
from .graph import Problem


@dataclass(frozen=True)
class BarrierConfig:
    """Barrier shape and annealing controls.

    ``eps_inner`` is relative to the box half-width: the inner loop stops
    once ``max|d - x| < eps_inner * q/p``.  ``beta1=None`` means the
    starting temperature is derived from the spectrum of ``W - alpha*I``.
    """

    p: float = 1.0
    q: float = 1.0
    beta1: Optional[float] = None
    theta: float = 0.9
    beta_min: float = 1e-4
    eps_inner: float = 1e-6
    max_inner: int = 500
    round_margin: float = 0.99

    def __post_init__(self):
        if not (self.p > 0 and self.q > 0):
            raise ValueError(f"p and q must be positive, got p={self.p}, q={self.q}")
        if not 0 < self.theta < 1:
            raise ValueError(f"theta must lie in (0, 1), got {self.theta}")
        if not self.beta_min > 0:
            raise ValueError(f"beta_min must be positive, got {self.beta_min}")
        if not self.eps_inner > 0:
            raise ValueError(f"eps_inner must be positive, got {self.eps_inner}")
        if self.beta1 is not None and not self.beta1 > 0:
            raise ValueError(f"beta1 must be positive, got {self.beta1}")
        if self.max_inner < 1:
            raise ValueError(f"max_inner must be >= 1, got {self.max_inner}")
        if not 0 < self.round_margin <= 1:
            raise ValueError(f"round_margin must lie in (0, 1], got {self.round_margin}")

    @property
    def half_width(self) -> float:
        """q/p, the half-width of the barrier box."""
        return self.q / self.p

    @property
    def inner_tol(self) -> float:
        return self.eps_inner * self.half_width


def _vector(problem: Problem, x) -> np.ndarray:
    x = np.asarray(x, dtype=float)
    if x.shape != (problem.n,):
        raise WrongLength(f"expected {problem.n} entries, got shape {x.shape}")
    return x


def _wall_gaps(config: BarrierConfig, x):
    """Return ``(p x + q, q - p x)``; both must be strictly positive."""
    p, q = config.p, config.q
    lo, hi = p * x + q, q - p * x
    if not (lo.min(initial=np.inf) > 0 and hi.min(initial=np.inf) > 0):
        bad = int(np.flatnonzero(~((lo > 0) & (hi > 0)))[0])
        raise OutOfBox(f"x[{bad}]={x.flat[bad]!r} is not inside (-{config.half_width}, {config.half_width})")
    return lo, hi


def _interior(config: BarrierConfig, x) -> np.ndarray:
    x = np.asarray(x, dtype=float)
    _wall_gaps(config, x)
    return x


def f_value(problem: Problem, x) -> float:
    x = _vector(problem, x)
    return 0.5 * float(x @ (problem.shifted_matrix() @ x))


def f_gradient(problem: Problem, x) -> np.ndarray:
    """(W - alpha*I) x."""
    x = _vector(problem, x)
    return problem.shifted_matrix() @ x


def b_value(config: BarrierConfig, x) -> float:
    lo, hi = _wall_gaps(config, np.asarray(x, dtype=float))
    return -float((np.log(lo) + np.log(hi)).sum())


def b_gradient(config: BarrierConfig, x) -> np.ndarray:
    lo, hi = _wall_gaps(config, np.asarray(x, dtype=float))
    return -config.p * (1.0 / lo - 1.0 / hi)


def b_hessian_diag(config: BarrierConfig, x) -> np.ndarray:
    """Diagonal of the barrier Hessian (the barrier is separable)."""
    lo, hi = _wall_gaps(config, np.asarray(x, dtype=float))
    return config.p**2 * (1.0 / lo**2 + 1.0 / hi**2)


def h_value(problem: Problem, config: BarrierConfig, x, beta: float) -> float:
    return f_value(problem, x) + beta * b_value(config, x)


def h_gradient(problem: Problem, config: BarrierConfig, x, beta: float) -> np.ndarray:
    return f_gradient(problem, x) + beta * b_gradient(config, x)


def jacobi_eigenvalues(A, tol: float = 1e-15, max_sweeps: int = 100) -> np.ndarray:
    """Eigenvalues of a real symmetric matrix by cyclic Jacobi rotations.

    Sweeps over the strict upper triangle in row order, annihilating each
    off-diagonal entry in turn, until the off-diagonal Frobenius norm drops
    below ``tol`` times the matrix Frobenius norm.  Returns the eigenvalues
    in ascending order.
    """
    A = np.array(A, dtype=float)
    n = A.shape[0]
    if A.ndim != 2 or A.shape[1] != n:
        raise ValueError(f"expected a square matrix, got shape {A.shape}")
    scale = np.linalg.norm(A)
    if scale == 0.0:
        return np.zeros(n)

    for _ in range(max_sweeps):
        off = math.sqrt(max(float(np.sum(A * A) - np.sum(np.diag(A) ** 2)), 0.0))
        if off <= tol * scale:
            break
        for i in range(n - 1):
            for j in range(i + 1, n):
                aij = A[i, j]
                aii, ajj = A[i, i], A[j, j]
                if abs(aij) <= 1e-18 * (abs(aii) + abs(ajj)) or abs(aij) < 1e-300:
                    A[i, j] = A[j, i] = 0.0
                    continue
                theta = (ajj - aii) / (2.0 * aij)
                # smaller root of t^2 + 2 theta t - 1 = 0 keeps the rotation angle <= pi/4
                if theta == 0.0:
                    t = 1.0
                elif abs(theta) > 1e150:
                    t = 0.5 / theta
                else:
                    t = math.copysign(1.0, theta) / (abs(theta) + math.sqrt(theta * theta + 1.0))
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c

                col_i, col_j = A[:, i].copy(), A[:, j].copy()
                A[:, i] = c * col_i - s * col_j
                A[:, j] = s * col_i + c * col_j
                row_i, row_j = A[i, :].copy(), A[j, :].copy()
                A[i, :] = c * row_i - s * row_j
                A[j, :] = s * row_i + c * row_j

                A[i, i] = aii - t * aij
                A[j, j] = ajj + t * aij
                A[i, j] = A[j, i] = 0.0
    return np.sort(np.diag(A))


def min_eigenvalue(problem: Problem) -> float:
    """Smallest eigenvalue of W - alpha*I."""
    return float(jacobi_eigenvalues(problem.shifted_matrix())[0])


def convexity_matrix(problem: Problem, config: BarrierConfig, beta: float) -> np.ndarray:
    """(W - alpha*I) + beta * diag(b''(0)).

    ``b''`` is smallest at the origin, so this matrix being PSD makes
    ``h(., beta)`` convex on the whole box.
    """
    curv = b_hessian_diag(config, np.zeros(problem.n))
    return problem.shifted_matrix() + beta * np.diag(curv)


def initial_beta(problem: Problem, config: BarrierConfig) -> float:
    """Starting temperature: ``max(1, 1 - S_min/2)`` with S_min = lambda_min(W - alpha*I).

    Doubled until ``beta * 2p^2/q^2 + S_min >= 0`` so that the first stage
    minimizes a convex function.  An explicit ``config.beta1`` wins.
    """
    if config.beta1 is not None:
        return float(config.beta1)
    s_min = min_eigenvalue(problem)
    beta = max(1.0, 1.0 - s_min / 2.0)
    min_curv = 2.0 * config.p**2 / config.q**2
    while beta * min_curv + s_min < 0:
        beta *= 2.0
    return beta
