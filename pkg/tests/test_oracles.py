import math

import numpy as np
import pytest
from scipy.integrate import quad
from scipy.special import ai_zeros, eval_hermite

from salpeter_bounds import oracles
from salpeter_bounds.errors import DomainError
from salpeter_bounds.oracles import HermiteBasisSpec


def test_hermite_coefficients_match_scipy():
    x = np.linspace(-2.0, 2.0, 9)
    for n in (0, 1, 5, 13):
        coeffs = oracles.hermite_coefficients(n)
        values = sum(c * x**k for k, c in enumerate(coeffs))
        assert np.allclose(values, eval_hermite(n, x), rtol=1e-12)


def test_basis_orders():
    assert HermiteBasisSpec(4).orders == [1, 5, 9, 13]
    with pytest.raises(DomainError):
        HermiteBasisSpec(0)
    with pytest.raises(DomainError):
        HermiteBasisSpec(3, scale=0.0)


def test_gram_matrix_is_identity():
    gram = oracles.hermite_gram_matrix(HermiteBasisSpec(32))
    assert np.max(np.abs(gram - np.eye(32))) <= 1e-12


def test_r_matrix_against_quadrature():
    # independent check of the exact elements by numerical integration
    def phi(n, r):
        norm = math.sqrt(2 ** (n - 1) * math.factorial(n) * math.sqrt(math.pi))
        return eval_hermite(n, r) * math.exp(-r * r / 2) / norm

    spec = HermiteBasisSpec(4)
    mat = oracles.hermite_r_matrix(spec)
    for i, m in enumerate(spec.orders):
        for j, n in enumerate(spec.orders):
            val, _ = quad(lambda r: r * phi(m, r) * phi(n, r), 0, 20, limit=200)
            assert mat[i, j] == pytest.approx(val, abs=1e-10)


def test_single_gaussian_gives_four_over_sqrt_pi():
    assert oracles.hermite_nonlocal_solver(HermiteBasisSpec(1)) == pytest.approx(4 / math.sqrt(math.pi), abs=1e-12)


def test_convergence_is_non_increasing():
    conv = oracles.hermite_convergence((1, 2, 4, 8, 16, 24, 32))
    values = list(conv.values())
    assert all(b <= a + 1e-14 for a, b in zip(values, values[1:]))
    assert abs(conv[32] - conv[24]) < 1e-5


def test_converged_bottom_of_p_plus_r():
    e = oracles.hermite_nonlocal_solver(HermiteBasisSpec(32))
    assert 2.2322 <= e < 2.2323


def test_scale_is_variational():
    # s = 1 is optimal because both operators share the matrix R
    base = oracles.hermite_nonlocal_solver(HermiteBasisSpec(16))
    for s in (0.8, 1.25):
        assert oracles.hermite_nonlocal_solver(HermiteBasisSpec(16, s)) > base


def test_overlap_exact_rational():
    # simplest off-diagonal element vanishes exactly
    assert oracles._overlap(1, 5) == 0.0
    assert oracles._overlap(5, 5) == 1.0


def test_airy_zero_against_scipy():
    assert oracles.airy_zero() == pytest.approx(-ai_zeros(1)[0][0], abs=1e-8)


def test_perturbed_oscillator():
    assert oracles.perturbed_oscillator_energy(0.0) == pytest.approx(3.0, abs=1e-9)
    slope = oracles.perturbed_oscillator_slope()
    assert slope == pytest.approx(2 / math.sqrt(math.pi), abs=1e-6)


def test_perturbed_oscillator_residual_is_quadratic():
    lams = np.array([0.02, 0.04, 0.08])
    resid = [
        oracles.perturbed_oscillator_energy(l) + oracles.perturbed_oscillator_energy(-l) - 6.0 for l in lams
    ]
    curvature = np.array(resid) / lams**2
    assert np.ptp(curvature) < 0.05 * abs(curvature.mean())
    assert curvature.mean() < 0


def test_linear_limit_report():
    rep = oracles.linear_case_limit_check()
    assert rep.values[0] > oracles.FOUR_OVER_SQRT_PI
    assert abs(rep.values[-1] - oracles.FOUR_OVER_SQRT_PI) < 1e-2
    assert rep.monotone_decreasing
    assert rep.symmetric_is_best
    assert rep.ratios[-1] == pytest.approx(1.0, abs=1e-6)


def test_linear_limit_needs_increasing_s():
    with pytest.raises(DomainError):
        oracles.linear_case_limit_check((3.0, 2.0))
