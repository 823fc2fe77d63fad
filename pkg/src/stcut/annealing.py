"""Deterministic annealing driver.

Each stage fixes the barrier weight ``beta`` and iterates

    x <- x + mu * (d(x) - x),   mu = argmin_{[0, 1]} h(x + mu (d - x), beta)

until ``max|d - x|`` falls below tolerance.  ``beta`` then shrinks by the
factor ``theta``.  Once beta is small (or every coordinate is pinned near a
wall) the iterate is rounded coordinate-wise to a +-1 cut.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field, replace

import numpy as np

from .barrier import BarrierConfig, h_value, initial_beta
from .direction import direction
from .errors import StageStalled, WrongLength
from .graph import CutSolution, Problem, cut_value, validate

log = logging.getLogger(__name__)

INV_PHI = (math.sqrt(5.0) - 1.0) / 2.0


@dataclass(frozen=True)
class StageRecord:
    beta: float
    h_start: float
    h_end: float
    step_norm: float
    iterations: int
    stalled: bool
    h_history: tuple = ()


@dataclass
class SolverState:
    x: np.ndarray
    beta: float
    lam: float = 0.0
    inner_iter: int = 0
    outer_iter: int = 0
    trace: list = field(default_factory=list)


@dataclass(frozen=True, eq=False)
class RunReport:
    solution: CutSolution
    total_inner_iters: int
    beta_stages: int
    final_h: float
    objm: float
    trace: tuple
    x: np.ndarray
    beta_start: float
    beta_final: float
    stalled_stages: int
    seed: int = 0

    @property
    def ni(self) -> int:
        return self.total_inner_iters

    def to_dict(self, config: BarrierConfig | None = None, include_trace: bool = False) -> dict:
        out = {
            "objm": self.objm,
            "ni": self.total_inner_iters,
            "beta_stages": self.beta_stages,
            "final_h": self.final_h,
            "assignment": self.solution.assignment.tolist(),
            "partition": dict(zip(("U", "V_minus_U"), self.solution.partition())),
            "objective_f": self.solution.objective_f,
            "stalled_stages": self.stalled_stages,
            "beta_start": self.beta_start,
            "beta_final": self.beta_final,
            "min_abs_x": float(np.min(np.abs(self.x))),
            "seed": self.seed,
        }
        if config is not None:
            out["config"] = {
                "p": config.p,
                "q": config.q,
                "beta1": config.beta1,
                "theta": config.theta,
                "beta_min": config.beta_min,
                "eps_inner": config.eps_inner,
                "max_inner": config.max_inner,
                "round_margin": config.round_margin,
            }
        if include_trace:
            out["trace"] = [
                {
                    "beta": r.beta,
                    "h_start": r.h_start,
                    "h_end": r.h_end,
                    "step_norm": r.step_norm,
                    "iterations": r.iterations,
                    "stalled": r.stalled,
                }
                for r in self.trace
            ]
        return out


def initial_point(problem: Problem, config: BarrierConfig, seed: int) -> np.ndarray:
    """Random nonzero interior point with ``x_t = -x_s``.

    Components are uniform on ``(-0.1 q/p, 0.1 q/p)``, redrawn if exactly 0.
    """
    rng = np.random.default_rng(seed)
    r = 0.1 * config.half_width
    x = rng.uniform(-r, r, size=problem.n)
    while np.any(x == 0.0):
        zeros = x == 0.0
        x[zeros] = rng.uniform(-r, r, size=int(zeros.sum()))
    x[problem.t] = -x[problem.s]
    return x


def golden_section(phi, lo: float = 0.0, hi: float = 1.0, tol: float = 1e-6):
    """Minimize a unimodal ``phi`` on ``[lo, hi]``; returns ``(mu, phi(mu))``."""
    a, b = lo, hi
    c = b - INV_PHI * (b - a)
    d = a + INV_PHI * (b - a)
    fc, fd = phi(c), phi(d)
    while b - a > tol:
        if fc <= fd:
            b, d, fd = d, c, fc
            c = b - INV_PHI * (b - a)
            fc = phi(c)
        else:
            a, c, fc = c, d, fd
            d = a + INV_PHI * (b - a)
            fd = phi(d)
    return (c, fc) if fc <= fd else (d, fd)


def line_search(problem: Problem, config: BarrierConfig, x, d, beta: float, tol: float = 1e-6) -> float:
    """Step length in [0, 1] along ``d - x`` minimizing ``h(., beta)``.

    Golden-section search to interval width ``tol``; the full step is also
    tried.  The winner is re-scored with :func:`h_value` and rejected in
    favour of ``mu = 0`` unless it is no worse than staying put.
    """
    x = np.asarray(x, dtype=float)
    step = np.asarray(d, dtype=float) - x
    p, q = config.p, config.q
    # f is quadratic along the segment: f(x + mu s) = f0 + mu f1 + mu^2 f2 / 2
    A = problem.shifted_matrix()
    As = A @ step
    f0 = 0.5 * float(x @ (A @ x))
    f1 = float(x @ As)
    f2 = float(step @ As)
    # both endpoints are interior, so every point of the segment is too
    px, ps, qq = p * x, p * step, q * q

    def phi(mu):
        y = px + mu * ps
        return f0 + mu * (f1 + 0.5 * mu * f2) - beta * float(np.log(qq - y * y).sum())

    mu, best = golden_section(phi, 0.0, 1.0, tol)
    if phi(1.0) < best:
        mu = 1.0
    if not h_value(problem, config, x + mu * step, beta) <= h_value(problem, config, x, beta):
        return 0.0
    return mu


def solve_stage(
    problem: Problem,
    config: BarrierConfig,
    state: SolverState,
    raise_on_stall: bool = False,
    callback=None,
) -> SolverState:
    """Run the inner descent loop at ``state.beta`` and return the new state.

    The stage record appended to ``trace`` holds every h value visited, so
    monotone descent can be audited after the fact.  ``callback(x, beta)``,
    if given, sees each new iterate.
    """
    beta = state.beta
    x = np.array(state.x, dtype=float)
    tol = config.inner_tol
    h = h_value(problem, config, x, beta)
    history = [h]
    lam = state.lam
    step_norm = math.inf
    iters = 0
    converged = False

    while True:
        res = direction(problem, config, x, beta)
        lam = res.lam
        step_norm = float(np.max(np.abs(res.step)))
        if step_norm < tol:
            converged = True
            break
        if iters >= config.max_inner:
            break
        mu = line_search(problem, config, x, res.d, beta)
        if mu == 0.0:
            # h is flat to rounding along d - x: numerically stationary
            break
        x = x + mu * res.step
        h = h_value(problem, config, x, beta)
        history.append(h)
        iters += 1
        if callback is not None:
            callback(x, beta)

    stalled = not converged and iters >= config.max_inner
    if stalled:
        log.debug("stage beta=%g stalled after %d steps, |d-x|=%g", beta, iters, step_norm)
        if raise_on_stall:
            raise StageStalled(f"beta={beta}: |d - x| = {step_norm} after {iters} steps")

    record = StageRecord(
        beta=beta,
        h_start=history[0],
        h_end=history[-1],
        step_norm=step_norm,
        iterations=iters,
        stalled=stalled,
        h_history=tuple(history),
    )
    return replace(
        state,
        x=x,
        lam=lam,
        inner_iter=state.inner_iter + iters,
        outer_iter=state.outer_iter + 1,
        trace=[*state.trace, record],
    )


def round_solution(problem: Problem, x) -> CutSolution:
    """Sign rounding, ties to +1, with the t side forced opposite to s."""
    x = np.asarray(x, dtype=float)
    if x.shape != (problem.n,):
        raise WrongLength(f"expected {problem.n} entries, got shape {x.shape}")
    a = np.where(x < 0, -1, 1)
    a[problem.t] = -a[problem.s]
    af = a.astype(float)
    objective = 0.5 * float(af @ (problem.shifted_matrix() @ af))
    return CutSolution(assignment=a, cut_weight=cut_value(problem, a), objective_f=objective)


def solve(problem: Problem, config: BarrierConfig | None = None, seed: int = 0, callback=None) -> RunReport:
    """Anneal from ``initial_beta`` down to ``beta_min`` and round.

    Cooling stops early once every ``|x_i|`` reaches ``round_margin * q/p``.
    """
    config = config or BarrierConfig()
    validate(problem)
    beta0 = initial_beta(problem, config)
    state = SolverState(x=initial_point(problem, config, seed), beta=beta0)
    saturation = config.round_margin * config.half_width

    while True:
        state = solve_stage(problem, config, state, callback=callback)
        last_beta = state.beta
        state.beta = config.theta * state.beta
        if state.beta < config.beta_min or np.min(np.abs(state.x)) >= saturation:
            break

    solution = round_solution(problem, state.x)
    final_h = h_value(problem, config, state.x, last_beta)
    return RunReport(
        solution=solution,
        total_inner_iters=state.inner_iter,
        beta_stages=state.outer_iter,
        final_h=final_h,
        objm=solution.cut_weight,
        trace=tuple(state.trace),
        x=state.x,
        beta_start=beta0,
        beta_final=last_beta,
        stalled_stages=sum(r.stalled for r in state.trace),
        seed=seed,
    )
