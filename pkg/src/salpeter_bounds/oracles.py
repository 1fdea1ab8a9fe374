"""Independent reference computations for the bound constructions.

* :func:`hermite_nonlocal_solver` -- Rayleigh-Ritz for the nonlocal
  ``H = p + r`` in the basis ``H_{4i+1}(r) exp(-r^2/2)``.  These functions
  are eigenfunctions of the s-wave sine transform with eigenvalue +1, so
  the matrix of ``p`` in this basis equals the matrix of ``r``.
* :func:`airy_zero` -- ``-z0`` as the ground energy of ``p^2 + r``.
* :func:`perturbed_oscillator_slope` -- ``de/dlambda`` at 0 for ``p^2 + r^2 + lambda r``.
* :func:`linear_case_limit_check` -- the diagonal ``a = b = s^4`` of the
  difference bound for ``p + r``.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .bounds import component_energies
from .errors import DomainError
from .potentials import RadialPotential, SchrodingerProblem
from .radial_solver import DEFAULT_CONFIG, SolverConfig, cross_validate, ground_energy

__all__ = [
    "HermiteBasisSpec",
    "hermite_coefficients",
    "hermite_r_matrix",
    "hermite_gram_matrix",
    "hermite_nonlocal_solver",
    "hermite_convergence",
    "airy_zero",
    "perturbed_oscillator_energy",
    "perturbed_oscillator_slope",
    "LinearLimitReport",
    "linear_case_limit_check",
    "FOUR_OVER_SQRT_PI",
]

FOUR_OVER_SQRT_PI = 4.0 / math.sqrt(math.pi)


@dataclass(frozen=True)
class HermiteBasisSpec:
    basis_size: int = 32
    scale: float = 1.0

    def __post_init__(self):
        if self.basis_size < 1:
            raise DomainError(f"basis_size must be >= 1, got {self.basis_size}")
        if not self.scale > 0:
            raise DomainError(f"scale must be positive, got {self.scale}")

    @property
    def orders(self) -> list[int]:
        return [4 * i + 1 for i in range(self.basis_size)]


@functools.lru_cache(maxsize=None)
def hermite_coefficients(n: int) -> tuple[int, ...]:
    """Integer power-series coefficients of the physicists' Hermite polynomial H_n."""
    prev, cur = [1], [0, 2]
    if n == 0:
        return tuple(prev)
    for k in range(1, n):
        nxt = [0] * (k + 2)
        for j, c in enumerate(cur):
            nxt[j + 1] += 2 * c
        for j, c in enumerate(prev):
            nxt[j] -= 2 * k * c
        prev, cur = cur, nxt
    return tuple(cur)


def _even_product(m: int, n: int) -> dict[int, int]:
    """Coefficients c_k of H_m H_n = sum_k c_k r^(2k) for m, n of equal parity."""
    out: dict[int, int] = {}
    hm, hn = hermite_coefficients(m), hermite_coefficients(n)
    for i, ci in enumerate(hm):
        if ci:
            for j, cj in enumerate(hn):
                if cj:
                    out[(i + j) // 2] = out.get((i + j) // 2, 0) + ci * cj
    return out


@functools.lru_cache(maxsize=None)
def _r_element(m: int, n: int) -> float:
    # int_0^inf r H_m H_n e^{-r^2} dr = (1/2) sum_k c_k k!, normalised by
    # sqrt(N_m N_n) with N_n = int_0^inf H_n^2 e^{-r^2} dr = 2^(n-1) n! sqrt(pi)
    j = sum(c * math.factorial(k) for k, c in _even_product(m, n).items())
    ratio = Fraction(j * j, 2 ** (m + n) * math.factorial(m) * math.factorial(n))
    return (1.0 if j >= 0 else -1.0) * math.sqrt(float(ratio)) / math.sqrt(math.pi)


@functools.lru_cache(maxsize=None)
def _overlap(m: int, n: int) -> float:
    # int_0^inf r^(2k) e^{-r^2} dr = (2k)! / (4^k k!) * sqrt(pi) / 2
    s = sum(
        Fraction(c * math.factorial(2 * k), 4**k * math.factorial(k))
        for k, c in _even_product(m, n).items()
    )
    ratio = s * s / Fraction(2 ** (m + n) * math.factorial(m) * math.factorial(n))
    return (1.0 if s >= 0 else -1.0) * math.sqrt(float(ratio))


def hermite_r_matrix(spec: HermiteBasisSpec) -> np.ndarray:
    """Matrix of the multiplication operator r in the orthonormal half-line basis."""
    orders = spec.orders
    n = len(orders)
    out = np.empty((n, n))
    for i in range(n):
        for j in range(i, n):
            out[i, j] = out[j, i] = _r_element(orders[i], orders[j])
    return out * spec.scale


def hermite_gram_matrix(spec: HermiteBasisSpec) -> np.ndarray:
    orders = spec.orders
    return np.array([[_overlap(m, n) for n in orders] for m in orders])


def hermite_nonlocal_solver(spec: HermiteBasisSpec = HermiteBasisSpec()) -> float:
    """Variational estimate of the bottom of ``p + r`` in ``spec.basis_size`` functions.

    With length scale ``s`` the matrix of r is ``s R`` and that of p is
    ``R / s``, so the Hamiltonian matrix is ``(s + 1/s) R``.
    """
    r = hermite_r_matrix(HermiteBasisSpec(spec.basis_size))
    h = (spec.scale + 1.0 / spec.scale) * r
    return float(np.linalg.eigvalsh(h)[0])


def hermite_convergence(sizes=(8, 16, 24, 32), scale: float = 1.0) -> dict[int, float]:
    return {n: hermite_nonlocal_solver(HermiteBasisSpec(n, scale)) for n in sizes}


def airy_zero(config: SolverConfig = DEFAULT_CONFIG) -> float:
    """``-z0`` for the first zero of Ai, from the cross-validated ground state of ``p^2 + r``."""
    return cross_validate(SchrodingerProblem(1.0, RadialPotential.power(1.0, 1)), config).energy


def perturbed_oscillator_energy(lam: float, config: SolverConfig = DEFAULT_CONFIG) -> float:
    """Ground energy ``e(lambda)`` of ``p^2 + r^2 + lambda r``."""
    v = RadialPotential.power(1.0, 2)
    if lam != 0.0:
        v = v + RadialPotential.power(lam, 1)
    return ground_energy(SchrodingerProblem(1.0, v), config)


def perturbed_oscillator_slope(
    steps: tuple[float, float] = (1e-2, 1e-3), config: SolverConfig = DEFAULT_CONFIG
) -> float:
    """Central-difference slope of ``e(lambda)`` at 0, Richardson-combined over two steps."""
    h1, h2 = steps
    d1 = (perturbed_oscillator_energy(h1, config) - perturbed_oscillator_energy(-h1, config)) / (2 * h1)
    d2 = (perturbed_oscillator_energy(h2, config) - perturbed_oscillator_energy(-h2, config)) / (2 * h2)
    ratio = (h1 / h2) ** 2
    return (ratio * d2 - d1) / (ratio - 1.0)


@dataclass(frozen=True)
class LinearLimitReport:
    s_values: tuple[float, ...]
    values: tuple[float, ...]
    ratios: tuple[float, ...]
    limit_estimate: float
    monotone_decreasing: bool
    symmetric_is_best: bool


def linear_case_limit_check(
    s_values=(2.0, 3.0, 4.0, 5.0),
    config: SolverConfig = DEFAULT_CONFIG,
    asymmetry: float = 1.05,
) -> LinearLimitReport:
    """Evaluate ``E1(s^4, s^4) - E2(s^4, s^4)`` for ``V = r``, ``m = 0``.

    ``ratios`` are the values divided by ``4/sqrt(pi)``.  ``symmetric_is_best``
    compares each diagonal point with ``(s*k, s/k)`` and ``(s/k, s*k)``.
    """
    s_values = tuple(float(s) for s in s_values)
    if any(b <= a for a, b in zip(s_values, s_values[1:])):
        raise DomainError("s_values must be strictly increasing")
    v = RadialPotential.power(1.0, 1)

    def diff(s: float, t: float) -> float:
        e1, e2 = component_energies(0.0, v, s**4, t**4, config)
        return e1 - e2

    values = tuple(diff(s, s) for s in s_values)
    symmetric = all(
        diff(s, s) <= min(diff(s * asymmetry, s / asymmetry), diff(s / asymmetry, s * asymmetry))
        for s in s_values
    )
    return LinearLimitReport(
        s_values=s_values,
        values=values,
        ratios=tuple(x / FOUR_OVER_SQRT_PI for x in values),
        limit_estimate=values[-1],
        monotone_decreasing=all(b < a for a, b in zip(values, values[1:])),
        symmetric_is_best=symmetric,
    )
