"""Weighted s-t graph instances: validation, cut values, generation and file I/O.

Graph file format (whitespace separated, ``#`` starts a comment)::

    n m s t        # node count, edge count, 1-based terminals
    i j w          # m lines, 1-based endpoints, i != j, w >= 0

Unlisted pairs have weight 0.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import (
    AsymmetricWeights,
    BadSize,
    BadTerminals,
    DuplicateEdge,
    NegativeWeight,
    NonUnitEntry,
    NonzeroDiagonal,
    OutOfRangeIndex,
    ParseError,
    ValidationError,
    WrongLength,
)

DEFAULT_ALPHA = 1e-6


def _frozen(a, dtype=float):
    arr = np.array(a, dtype=dtype)
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True, eq=False)
class Problem:
    """An s-t max-cut instance.

    ``weights`` is the dense symmetric matrix W (zero diagonal), ``s`` and
    ``t`` are 0-based terminal indices and ``alpha`` is the diagonal shift
    used in the continuous objective ``0.5 x^T (W - alpha I) x``.
    """

    weights: np.ndarray
    s: int = 0
    t: int = 1
    alpha: float = DEFAULT_ALPHA

    def __post_init__(self):
        object.__setattr__(self, "weights", _frozen(self.weights))
        object.__setattr__(self, "s", int(self.s))
        object.__setattr__(self, "t", int(self.t))
        object.__setattr__(self, "alpha", float(self.alpha))

    @property
    def n(self) -> int:
        return self.weights.shape[0]

    @property
    def total_weight(self) -> float:
        """Sum of w_ij over unordered pairs; a trivial upper bound on any cut."""
        return float(np.triu(self.weights, 1).sum())

    def shifted_matrix(self) -> np.ndarray:
        """W - alpha*I (cached, read-only)."""
        cached = self.__dict__.get("_shifted")
        if cached is None:
            cached = _frozen(self.weights - self.alpha * np.eye(self.n))
            self.__dict__["_shifted"] = cached
        return cached

    def with_alpha(self, alpha: float) -> Problem:
        return Problem(self.weights, self.s, self.t, alpha)

    def __eq__(self, other):
        if not isinstance(other, Problem):
            return NotImplemented
        return (
            self.s == other.s
            and self.t == other.t
            and self.alpha == other.alpha
            and self.weights.shape == other.weights.shape
            and np.array_equal(self.weights, other.weights)
        )

    __hash__ = None


@dataclass(frozen=True, eq=False)
class CutSolution:
    assignment: np.ndarray
    cut_weight: float
    objective_f: float

    def __post_init__(self):
        object.__setattr__(self, "assignment", _frozen(self.assignment, dtype=int))

    def partition(self):
        """Return (U, V - U) as sorted index lists, U being the +1 side."""
        a = self.assignment
        return np.flatnonzero(a > 0).tolist(), np.flatnonzero(a < 0).tolist()


def validate(problem: Problem) -> None:
    """Raise the error for the first violated Problem invariant."""
    W = problem.weights
    if W.ndim != 2 or W.shape[0] != W.shape[1] or W.shape[0] < 2:
        raise BadSize(f"weights must be a square matrix with n >= 2, got shape {W.shape}")
    n = W.shape[0]
    if not np.all(np.isfinite(W)):
        raise ValidationError("weights must be finite")
    if not np.array_equal(W, W.T):
        i, j = np.argwhere(W != W.T)[0]
        raise AsymmetricWeights(f"W[{i}][{j}]={W[i, j]} != W[{j}][{i}]={W[j, i]}")
    if np.any(W < 0):
        i, j = np.argwhere(W < 0)[0]
        raise NegativeWeight(f"W[{i}][{j}]={W[i, j]} is negative")
    diag = np.diag(W)
    if np.any(diag != 0):
        i = int(np.flatnonzero(diag)[0])
        raise NonzeroDiagonal(f"W[{i}][{i}]={diag[i]} is nonzero")
    s, t = problem.s, problem.t
    if not (0 <= s < n and 0 <= t < n) or s == t:
        raise BadTerminals(f"terminals s={s}, t={t} must be distinct and in [0, {n})")
    if not (problem.alpha >= 0 and np.isfinite(problem.alpha)):
        raise BadSize(f"alpha must be a nonnegative finite real, got {problem.alpha}")


def check_assignment(problem: Problem, assignment) -> np.ndarray:
    x = np.asarray(assignment)
    if x.shape != (problem.n,):
        raise WrongLength(f"expected {problem.n} entries, got shape {x.shape}")
    if not np.all(np.abs(x) == 1):
        raise NonUnitEntry("assignment entries must be +1 or -1")
    return x.astype(float)


def cut_value(problem: Problem, assignment) -> float:
    """Total weight of edges whose endpoints lie on different sides."""
    x = check_assignment(problem, assignment)
    crossing = np.not_equal.outer(x, x)
    return float(np.triu(problem.weights * crossing, 1).sum())


def generate_random(
    n: int, seed: int, weight_max: int = 50, s: int = 0, t: int = 1, alpha: float = DEFAULT_ALPHA
) -> Problem:
    """Complete graph with i<j weights uniform on {1, ..., weight_max}."""
    if n < 2:
        raise BadSize(f"n must be >= 2, got {n}")
    if weight_max < 1:
        raise BadSize(f"weight_max must be >= 1, got {weight_max}")
    rng = np.random.default_rng(seed)
    iu = np.triu_indices(n, 1)
    W = np.zeros((n, n))
    W[iu] = rng.integers(1, weight_max, size=len(iu[0]), endpoint=True)
    W = W + W.T
    problem = Problem(W, s, t, alpha)
    validate(problem)
    return problem


def read_problem(text: str, alpha: float = DEFAULT_ALPHA) -> Problem:
    """Parse the edge-list format; the result is validated."""
    records = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            records.append((lineno, line.split()))
    if not records:
        raise ParseError("missing header 'n m s t'", line=1)

    lineno, header = records[0]
    if len(header) != 4:
        raise ParseError(f"header needs 4 fields 'n m s t', got {len(header)}", line=lineno)
    try:
        n, m, s, t = (int(tok) for tok in header)
    except ValueError:
        raise ParseError("header fields must be integers", line=lineno) from None
    if n < 2:
        raise ParseError(f"node count must be >= 2, got {n}", line=lineno)
    if m < 0:
        raise ParseError(f"edge count must be >= 0, got {m}", line=lineno)
    for name, v in (("s", s), ("t", t)):
        if not 1 <= v <= n:
            raise OutOfRangeIndex(f"terminal {name}={v} not in [1, {n}]", line=lineno)

    edges = records[1:]
    if len(edges) != m:
        where = edges[m][0] if len(edges) > m else (edges[-1][0] if edges else lineno) + 1
        raise ParseError(f"header declares {m} edges, found {len(edges)}", line=where)

    W = np.zeros((n, n))
    seen = set()
    for lineno, fields in edges:
        if len(fields) != 3:
            raise ParseError(f"edge needs 3 fields 'i j w', got {len(fields)}", line=lineno)
        try:
            i, j = int(fields[0]), int(fields[1])
            w = float(fields[2])
        except ValueError:
            raise ParseError(f"cannot parse edge {' '.join(fields)!r}", line=lineno) from None
        for v in (i, j):
            if not 1 <= v <= n:
                raise OutOfRangeIndex(f"node {v} not in [1, {n}]", line=lineno)
        if i == j:
            raise ParseError(f"self-loop on node {i}", line=lineno)
        if not np.isfinite(w) or w < 0:
            raise ParseError(f"weight must be finite and >= 0, got {fields[2]}", line=lineno)
        key = (min(i, j), max(i, j))
        if key in seen:
            raise DuplicateEdge(f"duplicate edge {key[0]} {key[1]}", line=lineno)
        seen.add(key)
        W[i - 1, j - 1] = W[j - 1, i - 1] = w

    problem = Problem(W, s - 1, t - 1, alpha)
    validate(problem)
    return problem


def write_problem(problem: Problem) -> str:
    """Serialize to the edge-list format. Zero-weight pairs are omitted."""
    W = problem.weights
    iu, ju = np.nonzero(np.triu(W, 1))
    lines = [f"{problem.n} {len(iu)} {problem.s + 1} {problem.t + 1}"]
    lines += [f"{i + 1} {j + 1} {float(W[i, j])!r}" for i, j in zip(iu.tolist(), ju.tolist())]
    return "\n".join(lines) + "\n"


def load_problem(path, alpha: float = DEFAULT_ALPHA) -> Problem:
    with open(path) as fh:
        return read_problem(fh.read(), alpha=alpha)


def save_problem(problem: Problem, path) -> None:
    with open(path, "w") as fh:
        fh.write(write_problem(problem))
