"""Closed-form feasible descent direction for the barrier problem.

For fixed ``x`` and multiplier ``lam`` every coordinate of the Lagrangian
``h(y, beta) - lam * (y_s + y_t)`` linearized in ``f`` separates, and its
minimizer over the open box has the closed form computed by
:func:`d_component`.  The multiplier is chosen so the target point ``d``
satisfies ``d_s + d_t = 0``; then ``d - x`` is a feasible descent direction
for ``h`` whenever ``d != x``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .barrier import BarrierConfig, _interior, _vector, b_gradient, f_gradient
from .errors import ConstraintViolated
from .graph import Problem

CONSTRAINT_TOL = 1e-8


@dataclass(frozen=True, eq=False)
class DirectionResult:
    d: np.ndarray
    lam: float
    step: np.ndarray
    grad_L: np.ndarray


def shifted_gradient(problem: Problem, x, lam: float) -> np.ndarray:
    """grad f(x) with ``lam`` subtracted at the two terminals."""
    g = f_gradient(problem, x)
    g[problem.s] -= lam
    g[problem.t] -= lam
    return g


def d_component(g, beta: float, config: BarrierConfig):
    """Per-coordinate target ``d`` solving ``g = beta * p * [1/(p d + q) - 1/(q - p d)]``.

    Of the two roots of the underlying quadratic only one lies inside
    ``(-q/p, q/p)``; it is evaluated in rationalized form,

        d = -q^2 g / (p (beta p + sqrt(beta^2 p^2 + q^2 g^2)))

    which has no cancellation and gives ``d = 0`` at ``g = 0``.  Works
    elementwise on arrays.
    """
    p, q = config.p, config.q
    g = np.asarray(g, dtype=float)
    bp = beta * p
    d = -(q * q) * g / (p * (bp + np.hypot(bp, q * g)))
    # for beta*p << q|g| the quotient can round onto the wall itself
    edge = config.half_width
    inside = np.nextafter(edge, 0.0)
    d = np.where(np.abs(d) >= edge, np.copysign(inside, d), d)
    return d if d.ndim else float(d)


def multiplier(problem: Problem, x) -> float:
    """Average of the terminal partials of f.

    ``d_component`` is odd and strictly decreasing in ``g``, so
    ``d_s + d_t = 0`` holds iff ``g_s - lam = -(g_t - lam)``; the average is
    the only root, for every beta, p and q.
    """
    grad = f_gradient(problem, x)
    return 0.5 * float(grad[problem.s] + grad[problem.t])


def residual(problem: Problem, config: BarrierConfig, x, lam: float, beta: float) -> float:
    """``d_s + d_t`` as a function of the multiplier; strictly increasing in ``lam``."""
    grad = f_gradient(problem, x)
    return float(
        d_component(grad[problem.s] - lam, beta, config)
        + d_component(grad[problem.t] - lam, beta, config)
    )


def direction(problem: Problem, config: BarrierConfig, x, beta: float) -> DirectionResult:
    x = _interior(config, _vector(problem, x))
    s, t = problem.s, problem.t
    if abs(x[s] + x[t]) > CONSTRAINT_TOL:
        raise ConstraintViolated(f"x_s + x_t = {x[s] + x[t]!r}")

    grad = f_gradient(problem, x)
    lam = 0.5 * float(grad[s] + grad[t])
    g = grad.copy()
    # equal to grad - lam at s and t, written so g_s == -g_t bit for bit
    half = 0.5 * float(grad[s] - grad[t])
    g[s], g[t] = half, -half

    d = d_component(g, beta, config)
    grad_L = g + beta * b_gradient(config, x)
    return DirectionResult(d=d, lam=lam, step=d - x, grad_L=grad_L)
