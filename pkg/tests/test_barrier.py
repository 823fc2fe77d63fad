import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from stcut import (
    BarrierConfig,
    Problem,
    b_gradient,
    b_hessian_diag,
    b_value,
    f_gradient,
    f_value,
    generate_random,
    h_gradient,
    h_value,
    initial_beta,
    jacobi_eigenvalues,
    min_eigenvalue,
)
from stcut.barrier import convexity_matrix
from stcut.errors import OutOfBox, WrongLength
from stcut.oracle import finite_diff_gradient

from conftest import problems, random_problem

CONFIGS = [BarrierConfig(1, 1), BarrierConfig(1, 2), BarrierConfig(2, 3)]


def rel_err(a, b):
    return np.max(np.abs(a - b)) / max(1.0, np.max(np.abs(b)))


class TestF:
    def test_k2(self, k2):
        assert f_value(k2, [1, -1]) == -5

    def test_origin(self, k3):
        assert f_value(k3, np.zeros(3)) == 0

    def test_k2_with_alpha(self, k2):
        assert f_value(k2.with_alpha(1e-6), [1, -1]) == pytest.approx(-5 - 1e-6, abs=1e-14)

    def test_gradient_examples(self, k2):
        np.testing.assert_array_equal(f_gradient(k2, [0, 0]), [0, 0])
        np.testing.assert_array_equal(f_gradient(k2, [1, -1]), [-5, 5])

    def test_wrong_length(self, k2):
        with pytest.raises(WrongLength):
            f_value(k2, [1, 2, 3])
        with pytest.raises(WrongLength):
            f_gradient(k2, [1])

    def test_gradient_vs_finite_differences(self):
        rng = np.random.default_rng(0)
        for _ in range(20):
            p = random_problem(rng, 6)
            x = rng.uniform(-1, 1, 6)
            fd = finite_diff_gradient(lambda y: f_value(p, y), x, step=1e-5)
            assert rel_err(f_gradient(p, x), fd) <= 1e-6


class TestB:
    def test_origin_unit(self):
        assert b_value(BarrierConfig(1, 1), np.zeros(3)) == 0

    def test_origin_q2(self):
        assert b_value(BarrierConfig(1, 2), np.zeros(1)) == pytest.approx(-2 * math.log(2))

    def test_blowup(self):
        assert b_value(BarrierConfig(1, 1), [1 - 1e-8]) > 10

    @pytest.mark.parametrize("x", [[1.0], [-1.0], [0.0, 1.5]])
    def test_out_of_box(self, x):
        cfg = BarrierConfig(1, 1)
        for fn in (b_value, b_gradient, b_hessian_diag):
            with pytest.raises(OutOfBox):
                fn(cfg, x)

    def test_box_scales_with_q_over_p(self):
        cfg = BarrierConfig(2, 3)
        b_value(cfg, [1.49])
        with pytest.raises(OutOfBox):
            b_value(cfg, [1.5])

    def test_gradient_examples(self):
        np.testing.assert_array_equal(b_gradient(BarrierConfig(1, 1), np.zeros(4)), 0)
        assert b_gradient(BarrierConfig(1, 1), [0.5])[0] == pytest.approx(4 / 3, rel=1e-15)

    def test_gradient_wall_limits(self):
        cfg = BarrierConfig(1, 2)
        assert b_gradient(cfg, [-2 + 1e-12])[0] < -1e11
        assert b_gradient(cfg, [2 - 1e-12])[0] > 1e11

    def test_hessian_examples(self):
        np.testing.assert_array_equal(b_hessian_diag(BarrierConfig(1, 1), np.zeros(3)), 2)
        np.testing.assert_array_equal(b_hessian_diag(BarrierConfig(1, 2), np.zeros(3)), 0.5)

    @pytest.mark.parametrize("cfg", CONFIGS)
    def test_gradient_and_hessian_vs_finite_differences(self, cfg):
        rng = np.random.default_rng(1)
        for _ in range(20):
            x = rng.uniform(-0.9, 0.9, 6) * cfg.half_width
            fd = finite_diff_gradient(lambda y: b_value(cfg, y), x, step=1e-6)
            assert rel_err(b_gradient(cfg, x), fd) <= 1e-6
            # b is separable: the Hessian diagonal is d/dx_i of the i-th gradient entry
            fd2 = np.diag(np.array([finite_diff_gradient(lambda y: b_gradient(cfg, y)[i], x, 1e-6) for i in range(6)]))
            assert rel_err(b_hessian_diag(cfg, x), fd2) <= 1e-5

    @pytest.mark.parametrize("cfg", CONFIGS)
    def test_hessian_floor(self, cfg):
        rng = np.random.default_rng(2)
        x = rng.uniform(-0.99, 0.99, 1000) * cfg.half_width
        assert np.all(b_hessian_diag(cfg, x) >= 2 * cfg.p**2 / cfg.q**2 * (1 - 1e-15))


@settings(max_examples=200, deadline=None)
@given(st.sampled_from(CONFIGS), st.lists(st.floats(-0.999, 0.999), min_size=1, max_size=8))
def test_barrier_shape(cfg, frac):
    x = np.array(frac) * cfg.half_width
    b0 = b_value(cfg, np.zeros_like(x))
    assert b_value(cfg, x) == pytest.approx(b_value(cfg, -x), rel=1e-12, abs=1e-12)
    assert b_value(cfg, x) >= b0 - 1e-12
    if cfg.p == cfg.q:
        g = b_gradient(cfg, x)
        assert np.all(g * x >= 0)
        away = np.abs(x) > 1e-12
        assert np.all(np.sign(g[away]) == np.sign(x[away]))


class TestH:
    def test_origin(self, k3):
        for beta in (1e-3, 1, 1e3):
            assert h_value(k3, BarrierConfig(1, 1), np.zeros(3), beta) == 0

    def test_k2_worked_example(self, k2):
        cfg = BarrierConfig(1, 1)
        x = [0.5, -0.5]
        assert f_value(k2, x) == -1.25
        # mpmath, 30 digits: -2 (ln 1.5 + ln 0.5)
        assert b_value(cfg, x) == pytest.approx(0.575364144903561854878, rel=1e-14)
        assert h_value(k2, cfg, x, 1.0) == pytest.approx(-0.674635855096438145122, rel=1e-14)

    def test_definitional_identity(self):
        rng = np.random.default_rng(3)
        for _ in range(100):
            p = random_problem(rng, int(rng.integers(2, 9)))
            cfg = CONFIGS[int(rng.integers(3))]
            x = rng.uniform(-0.99, 0.99, p.n) * cfg.half_width
            beta = 10 ** rng.uniform(-3, 3)
            assert h_value(p, cfg, x, beta) - f_value(p, x) == pytest.approx(beta * b_value(cfg, x), rel=1e-9, abs=1e-9)


def test_h_gradient_vs_finite_differences():
    rng = np.random.default_rng(4)
    worst = 0.0
    for _ in range(200):
        p = random_problem(rng, int(rng.integers(2, 9)))
        cfg = CONFIGS[int(rng.integers(3))]
        beta = [1e-2, 1.0, 1e2][int(rng.integers(3))]
        x = rng.uniform(-0.9, 0.9, p.n) * cfg.half_width
        fd = finite_diff_gradient(lambda y: h_value(p, cfg, y, beta), x, step=1e-6)
        worst = max(worst, rel_err(h_gradient(p, cfg, x, beta), fd))
    assert worst <= 1e-5


def charpoly_roots(A):
    """Eigenvalues of a 2x2 or 3x3 matrix from its characteristic polynomial."""
    A = np.asarray(A, float)
    tr = np.trace(A)
    if A.shape == (2, 2):
        coeffs = [1, -tr, A[0, 0] * A[1, 1] - A[0, 1] * A[1, 0]]
    else:
        minors = sum(A[i, i] * A[j, j] - A[i, j] * A[j, i] for i in range(3) for j in range(i + 1, 3))
        det = (
            A[0, 0] * (A[1, 1] * A[2, 2] - A[1, 2] * A[2, 1])
            - A[0, 1] * (A[1, 0] * A[2, 2] - A[1, 2] * A[2, 0])
            + A[0, 2] * (A[1, 0] * A[2, 1] - A[1, 1] * A[2, 0])
        )
        coeffs = [1, -tr, minors, -det]
    return np.sort(np.roots(coeffs).real)


def power_iteration_min(A, iters=20000):
    A = np.asarray(A, float)
    sigma = np.max(np.abs(A).sum(axis=1)) + 1.0
    B = sigma * np.eye(len(A)) - A
    v = np.linspace(1.0, 2.0, len(A))
    for _ in range(iters):
        v = B @ v
        v /= np.linalg.norm(v)
    return sigma - v @ B @ v


class TestEigen:
    def test_k2(self):
        assert min_eigenvalue(Problem([[0, 1], [1, 0]], alpha=0)) == -1

    def test_k3(self, k3):
        np.testing.assert_allclose(jacobi_eigenvalues(k3.weights), [-1, -1, 2], atol=1e-14)
        assert min_eigenvalue(k3) == pytest.approx(-1, abs=1e-14)

    def test_zero_matrix(self):
        np.testing.assert_array_equal(jacobi_eigenvalues(np.zeros((4, 4))), 0)

    def test_spectral_shift(self):
        rng = np.random.default_rng(5)
        for _ in range(20):
            p = random_problem(rng, 7, alpha=0.0)
            alpha = rng.uniform(0, 3)
            assert min_eigenvalue(p.with_alpha(alpha)) == pytest.approx(min_eigenvalue(p) - alpha, abs=1e-10)

    def test_vs_characteristic_polynomial(self):
        rng = np.random.default_rng(6)
        for n in (2, 3):
            for _ in range(30):
                A = rng.normal(size=(n, n))
                A = A + A.T
                np.testing.assert_allclose(jacobi_eigenvalues(A), charpoly_roots(A), atol=1e-6)

    def test_vs_power_iteration(self):
        rng = np.random.default_rng(7)
        for n in (4, 8, 13, 20):
            p = random_problem(rng, n)
            assert min_eigenvalue(p) == pytest.approx(power_iteration_min(p.shifted_matrix()), abs=1e-6)

    @settings(max_examples=30, deadline=None)
    @given(problems(min_n=2, max_n=30))
    def test_tolerance_vs_lapack(self, problem):
        A = problem.shifted_matrix()
        tol = 1e-8 * max(1.0, np.max(np.abs(A).sum(axis=1)))
        np.testing.assert_allclose(jacobi_eigenvalues(A), np.linalg.eigvalsh(A), atol=tol)

    def test_deterministic(self):
        p = generate_random(15, 3)
        assert min_eigenvalue(p) == min_eigenvalue(p)

    def test_tiny_off_diagonal(self):
        A = np.array([[1.0, 1e-200], [1e-200, 2.0]])
        np.testing.assert_array_equal(jacobi_eigenvalues(A), [1, 2])


class TestInitialBeta:
    def test_k2_unit(self):
        assert initial_beta(Problem([[0, 1], [1, 0]], alpha=0), BarrierConfig()) == 1.5

    def test_empty_graph(self):
        assert initial_beta(Problem(np.zeros((3, 3)), alpha=0), BarrierConfig()) == 1

    def test_explicit_beta1(self, k3):
        assert initial_beta(k3, BarrierConfig(beta1=7.0)) == 7.0

    def test_doubles_until_convex(self):
        # q/p = 4 flattens the barrier: 2 p^2/q^2 = 1/8, so 1 - S_min/2 alone is not enough
        p = Problem([[0, 1], [1, 0]], alpha=0)
        cfg = BarrierConfig(p=1, q=4)
        beta = initial_beta(p, cfg)
        assert beta == 12.0
        assert beta * 2 / 16 - 1 >= 0 and (beta / 2) * 2 / 16 - 1 < 0

    @pytest.mark.parametrize("cfg", CONFIGS + [BarrierConfig(1, 4), BarrierConfig(3, 1)])
    def test_convexity_back_check(self, cfg):
        for seed in range(10):
            p = generate_random(int(3 + seed), seed)
            beta = initial_beta(p, cfg)
            assert jacobi_eigenvalues(convexity_matrix(p, cfg, beta))[0] >= -1e-8


@pytest.mark.parametrize(
    "kwargs",
    [dict(p=0), dict(q=-1), dict(theta=1.0), dict(theta=0), dict(beta_min=0), dict(eps_inner=0), dict(beta1=-1), dict(max_inner=0)],
)
def test_config_rejects(kwargs):
    with pytest.raises(ValueError):
        BarrierConfig(**kwargs)
