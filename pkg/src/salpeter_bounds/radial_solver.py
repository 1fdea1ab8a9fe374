"""Ground-state energies of radial Schrodinger operators ``c p^2 + W(r)``.

Two independent routes are provided for the s-wave reduced equation

    -c u''(r) + W(r) u(r) = E u(r),   u(0) = 0,   u(r_max) = 0:

* :func:`solve_ground_shooting` -- Numerov integration, node-count bisection
  to isolate the ground state, then a discrete-Wronskian match of outward
  and inward solutions refined with Brent's method; grids h and h/2 are
  Richardson-combined.
* :func:`solve_ground_sturm` -- second-order finite differences, the lowest
  eigenvalue of the tridiagonal matrix by Sturm-sequence bisection, and
  Richardson extrapolation over grids h and h/2.

:func:`cross_validate` runs both and refuses to answer when they disagree.
"""

from __future__ import annotations

import enum
import functools
import math
from dataclasses import dataclass, replace

import numpy as np
from scipy.linalg import solve_banded
from scipy.optimize import brentq

from . import _kernels
from .errors import (
    BracketFailureError,
    ContinuumSpectrumError,
    DomainError,
    OracleMismatchError,
)
from .potentials import SchrodingerProblem

__all__ = [
    "SolverConfig",
    "EigenResult",
    "Method",
    "DEFAULT_CONFIG",
    "choose_domain",
    "solve_ground_shooting",
    "solve_ground_sturm",
    "sturm_fd_energy",
    "cross_validate",
    "ground_energy",
]


@dataclass(frozen=True)
class SolverConfig:
    """Numerical settings shared by both solvers.

    ``r_max=None`` selects the cutoff adaptively: the radius at which the
    WKB decay exponent measured from the outer turning point reaches
    ``decay_exponent`` (about 1e-8 in amplitude at the default).
    """

    r_max: float | None = None
    grid_points: int = 4000
    energy_tolerance: float = 1e-7
    max_bisections: int = 200
    decay_exponent: float = 18.0

    def __post_init__(self):
        if self.r_max is not None and not self.r_max > 0:
            raise DomainError(f"r_max must be positive, got {self.r_max}")
        if self.grid_points < 200:
            raise DomainError(f"grid_points must be >= 200, got {self.grid_points}")
        if not self.energy_tolerance > 0:
            raise DomainError(f"energy_tolerance must be positive, got {self.energy_tolerance}")
        if self.max_bisections < 1:
            raise DomainError("max_bisections must be >= 1")
        if not self.decay_exponent > 0:
            raise DomainError("decay_exponent must be positive")


DEFAULT_CONFIG = SolverConfig()


class Method(str, enum.Enum):
    SHOOTING = "Shooting"
    STURM_FD = "SturmFD"


@dataclass(frozen=True)
class EigenResult:
    energy: float
    node_count: int
    residual: float
    config_used: SolverConfig
    method: Method

    def to_dict(self) -> dict:
        return {
            "kind": "EigenResult",
            "energy": self.energy,
            "node_count": self.node_count,
            "residual": self.residual,
            "method": self.method.value,
            "config_used": {
                "r_max": self.config_used.r_max,
                "grid_points": self.config_used.grid_points,
                "energy_tolerance": self.config_used.energy_tolerance,
                "max_bisections": self.config_used.max_bisections,
                "decay_exponent": self.config_used.decay_exponent,
            },
        }


# ---------------------------------------------------------------------------
# domain selection


def _check_problem(problem: SchrodingerProblem) -> None:
    if problem.angular_momentum != 0:
        raise DomainError("only the s-wave (angular_momentum = 0) is supported")
    if not problem.potential.is_confining:
        raise ContinuumSpectrumError(
            f"{problem.potential} does not grow at large r; "
            "c p^2 + W has no isolated ground state below a continuum"
        )


def _length_scale(problem: SchrodingerProblem) -> float:
    c = problem.kinetic_coefficient
    scales = [
        (c / t.coefficient) ** (1.0 / (t.exponent + 2.0))
        for t in problem.potential.power_terms
        if t.exponent > 0 and t.coefficient > 0
    ]
    s = problem.potential.salpeter_term
    if s is not None and s.sign > 0:
        scales.append(c ** (1.0 / 3.0))
    return max(scales) if scales else 1.0


def _potential_on_grid(problem: SchrodingerProblem, r: np.ndarray) -> np.ndarray:
    w = np.asarray(problem.potential(r), dtype=float)
    return np.where(np.isfinite(w), w, 0.0)


def _fd_matrix(problem: SchrodingerProblem, r_max: float, n: int):
    h = r_max / (n + 1)
    r = h * np.arange(1, n + 1)
    k = problem.kinetic_coefficient / (h * h)
    w = np.asarray(problem.potential(r), dtype=float)
    if not np.all(np.isfinite(w)):
        raise DomainError(f"{problem.potential} is not finite on the grid")
    return 2.0 * k + w, np.full(n - 1, k * k), k, w


def _fd_lowest(diag: np.ndarray, off2: np.ndarray, w: np.ndarray, tol: float) -> float:
    lo = float(np.min(w))
    hi = float(np.min(diag))
    width = max(tol * 1e-4, 4e-16 * max(abs(lo), abs(hi), 1.0))
    energy, _ = _kernels.sturm_bisect(diag, off2, lo, hi, 0, width)
    return energy


def _decay_radius(problem: SchrodingerProblem, energy: float, kappa: float, start: float) -> float:
    c = problem.kinetic_coefficient
    r_probe = start
    for _ in range(60):
        r = np.linspace(0.0, r_probe, 4001)[1:]
        w = _potential_on_grid(problem, r)
        if w[-1] > energy:
            allowed = np.nonzero(w <= energy)[0]
            first = allowed[-1] + 1 if allowed.size else 0
            integrand = np.sqrt(np.maximum(w[first:] - energy, 0.0) / c)
            dr = r[1] - r[0]
            cum = np.concatenate(([0.0], np.cumsum(0.5 * (integrand[1:] + integrand[:-1]) * dr)))
            if cum[-1] >= kappa:
                return float(r[first + np.searchsorted(cum, kappa)])
        r_probe *= 2.0
    raise ContinuumSpectrumError(f"wavefunction of {problem} does not decay within r = {r_probe:g}")


def choose_domain(problem: SchrodingerProblem, config: SolverConfig = DEFAULT_CONFIG) -> float:
    """Return the integration cutoff: ``config.r_max`` or the adaptive choice."""
    _check_problem(problem)
    if config.r_max is not None:
        return float(config.r_max)
    return _adaptive_domain(problem, config.decay_exponent)


@functools.lru_cache(maxsize=4096)
def _adaptive_domain(problem: SchrodingerProblem, kappa: float) -> float:
    r_max = 4.0 * _length_scale(problem)
    for _ in range(12):
        diag, off2, _, w = _fd_matrix(problem, r_max, 400)
        energy = _fd_lowest(diag, off2, w, 1e-6)
        new = _decay_radius(problem, energy, kappa, r_max)
        if abs(new - r_max) <= 0.05 * r_max:
            return max(new, r_max)
        r_max = new
    return r_max


# ---------------------------------------------------------------------------
# shooting


def _casoratian(f: np.ndarray, h: float, m: int) -> tuple[float, np.ndarray, np.ndarray]:
    u_out, _ = _kernels.numerov_outward(f, h, m + 1)
    u_in = _kernels.numerov_inward(f, h, m, 1e-20)
    a = np.array([u_out[m], u_out[m + 1]])
    b = np.array([u_in[m], u_in[m + 1]])
    mismatch = (a[0] * b[1] - a[1] * b[0]) / (np.linalg.norm(a) * np.linalg.norm(b))
    return float(mismatch), u_out, u_in


def _count_nodes(u: np.ndarray) -> int:
    s = np.sign(u[np.abs(u) > 1e-12 * np.max(np.abs(u))])
    return int(np.count_nonzero(s[1:] != s[:-1]))


def _shoot(problem: SchrodingerProblem, r_max: float, n: int, config: SolverConfig, bracket=None):
    """Numerov ground state on ``n`` intervals; returns ``(energy, residual, nodes, bracket)``."""
    h = r_max / n
    r = h * np.arange(n + 1)
    w = _potential_on_grid(problem, r)
    c = problem.kinetic_coefficient

    def nodes(energy: float) -> int:
        return _kernels.numerov_outward((w - energy) / c, h, n)[1]

    budget = config.max_bisections
    if bracket is not None and nodes(bracket[0]) == 0 and nodes(bracket[1]) == 1:
        lo, hi = bracket
    else:
        lo = float(np.min(w[1:]))
        while nodes(lo) > 0:
            lo -= abs(lo) + 1.0
            budget -= 1
            if budget <= 0:
                raise BracketFailureError(f"no node-free lower energy found for {problem}")
        step = max(c * (math.pi / r_max) ** 2, 1e-12)
        hi = lo + step
        while nodes(hi) == 0:
            step *= 2.0
            hi = lo + step
            budget -= 1
            if budget <= 0:
                raise BracketFailureError(f"ground state of {problem} not bracketed above {lo!r}")
        # shrink until exactly one Dirichlet level lies in [lo, hi] and the bracket is tight
        while nodes(hi) > 1 or hi - lo > 1e-3 * max(1.0, abs(lo)):
            mid = 0.5 * (lo + hi)
            if nodes(mid) == 0:
                lo = mid
            else:
                hi = mid
            budget -= 1
            if budget <= 0:
                raise BracketFailureError(f"bisection budget exhausted for {problem}")

    turning = np.nonzero(w <= 0.5 * (lo + hi))[0]
    m = int(turning[-1]) if turning.size else n // 2
    m = min(max(m, n // 20, 2), n - n // 20)

    def mismatch(energy: float) -> float:
        return _casoratian((w - energy) / c, h, m)[0]

    f_lo, f_hi = mismatch(lo), mismatch(hi)
    if f_lo == 0.0:
        energy = lo
    elif f_hi == 0.0:
        energy = hi
    elif f_lo * f_hi > 0:
        raise BracketFailureError(f"matching function does not change sign on [{lo!r}, {hi!r}]")
    else:
        energy = brentq(
            mismatch,
            lo,
            hi,
            xtol=config.energy_tolerance * 1e-4,
            rtol=1e-15,
            maxiter=max(budget, 50),
        )
    residual, u_out, u_in = _casoratian((w - energy) / c, h, m)
    scale = u_out[m] / u_in[m] if u_in[m] != 0.0 else 1.0
    u = np.concatenate((u_out[: m + 1], scale * u_in[m + 1 :]))
    return float(energy), abs(residual), _count_nodes(u[1:-1]), (lo, hi)


def solve_ground_shooting(
    problem: SchrodingerProblem, config: SolverConfig = DEFAULT_CONFIG
) -> EigenResult:
    """Numerov shooting on ``grid_points`` and ``2*grid_points`` intervals, Richardson-combined."""
    r_max = choose_domain(problem, config)
    n = config.grid_points
    coarse, _, _, bracket = _shoot(problem, r_max, n, config)
    fine, residual, nodes, _ = _shoot(problem, r_max, 2 * n, config, bracket)
    return EigenResult(
        energy=fine + (fine - coarse) / 15.0,
        node_count=nodes,
        residual=residual,
        config_used=replace(config, r_max=r_max),
        method=Method.SHOOTING,
    )


# ---------------------------------------------------------------------------
# finite differences + Sturm bisection


def sturm_fd_energy(
    problem: SchrodingerProblem, r_max: float, n: int, tol: float = 1e-10
) -> tuple[float, np.ndarray, float]:
    """Raw (unextrapolated) lowest FD eigenvalue on ``n`` interior points.

    Returns ``(energy, eigenvector, residual)``; the eigenvector comes from
    two steps of inverse iteration at the bisected eigenvalue.
    """
    diag, off2, k, w = _fd_matrix(problem, r_max, n)
    energy = _fd_lowest(diag, off2, w, tol)
    ab = np.zeros((3, n))
    ab[0, 1:] = -k
    ab[1] = diag - energy * (1.0 + 1e-14) - 1e-300
    ab[2, :-1] = -k
    v = np.ones(n)
    for _ in range(2):
        v = solve_banded((1, 1), ab, v, check_finite=False)
        v /= np.linalg.norm(v)
    tv = diag * v
    tv[1:] -= k * v[:-1]
    tv[:-1] -= k * v[1:]
    return energy, v, float(np.linalg.norm(tv - energy * v))


def solve_ground_sturm(
    problem: SchrodingerProblem, config: SolverConfig = DEFAULT_CONFIG
) -> EigenResult:
    r_max = choose_domain(problem, config)
    n = config.grid_points
    tol = config.energy_tolerance
    coarse, _, _ = sturm_fd_energy(problem, r_max, n, tol)
    fine, v, residual = sturm_fd_energy(problem, r_max, 2 * n + 1, tol)
    return EigenResult(
        energy=(4.0 * fine - coarse) / 3.0,
        node_count=_count_nodes(v),
        residual=residual,
        config_used=replace(config, r_max=r_max),
        method=Method.STURM_FD,
    )


def cross_validate(problem: SchrodingerProblem, config: SolverConfig = DEFAULT_CONFIG) -> EigenResult:
    """Shooting result, provided the Sturm oracle agrees within ``10 * energy_tolerance``."""
    shoot = solve_ground_shooting(problem, config)
    sturm = solve_ground_sturm(problem, config)
    limit = 10.0 * config.energy_tolerance
    if not abs(shoot.energy - sturm.energy) <= limit:
        raise OracleMismatchError(shoot.energy, sturm.energy, limit)
    return shoot


@functools.lru_cache(maxsize=65536)
def ground_energy(problem: SchrodingerProblem, config: SolverConfig = DEFAULT_CONFIG) -> float:
    """Memoised shooting energy; the workhorse inside the bound optimisers."""
    return solve_ground_shooting(problem, config).energy
