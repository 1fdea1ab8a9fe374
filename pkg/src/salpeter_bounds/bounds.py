"""Schrodinger-operator upper bounds on the ground state of sqrt(m^2 + p^2) + V(r).

Three families are implemented:

* tangential (envelope) bounds: replace the concave kinetic energy by its
  tangent ``a(t) p^2 + b(t)`` and minimise over the contact point ``t``;
* difference bounds: write ``H = H1 - H2`` with an auxiliary oscillator
  ``a p^2 + b r^2`` and use ``E <= E1 - E2`` (both orientations);
* the nonrelativistic quartic-minus-quadratic Weyl bound, built from the
  pure-power scaling law.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field

import numpy as np
from scipy.optimize import minimize

from ._optimize import Trace, aitken_limit, minimize_1d
from .errors import (
    DomainError,
    InfeasibleDomainError,
    OptimizationFailureError,
    SalpeterBoundsError,
    UnsupportedCheckError,
    UnsupportedSwapError,
)
from .potentials import (
    Hamiltonian,
    RadialPotential,
    SchrodingerProblem,
    dominates,
    domination_threshold,
    fourier_swap,
)
from .radial_solver import DEFAULT_CONFIG, SolverConfig, cross_validate, ground_energy
from .scaling import base_energy, scale_kinetic

__all__ = [
    "BoundMethod",
    "BoundResult",
    "TangentCoefficients",
    "DifferenceDomain",
    "WeylCheck",
    "tangent_coefficients",
    "tangential_objective",
    "envelope_objective",
    "tangential_bound",
    "component_energies",
    "component_energies_alt",
    "difference_bound",
    "difference_bound_alt",
    "weyl_nonrel_objective",
    "weyl_nonrel_bound",
    "exact_oscillator_energy",
    "weyl_inequality_check",
]


class BoundMethod(str, enum.Enum):
    TANGENTIAL = "Tangential"
    DIFFERENCE = "Difference"
    DIFFERENCE_ALT = "DifferenceAlt"
    WEYL_NONREL = "WeylNonRel"


@dataclass(frozen=True)
class BoundResult:
    bound_value: float
    method: BoundMethod
    optimal_parameters: dict[str, float]
    component_energies: tuple[float, float] | None = None
    optimizer_trace: tuple[tuple[dict[str, float], float], ...] = ()
    boundary_infimum: bool = False
    limit_estimate: float | None = None
    search_domain: dict[str, float] = field(default_factory=dict)
    notes: tuple[str, ...] = ()

    @property
    def best_attained(self) -> float:
        """Smallest objective value actually evaluated (differs from the bound on a boundary infimum)."""
        return min(v for _, v in self.optimizer_trace) if self.optimizer_trace else self.bound_value

    def to_dict(self) -> dict:
        return {
            "kind": "BoundResult",
            "bound_value": self.bound_value,
            "method": self.method.value,
            "optimal_parameters": dict(self.optimal_parameters),
            "component_energies": list(self.component_energies) if self.component_energies else None,
            "boundary_infimum": self.boundary_infimum,
            "limit_estimate": self.limit_estimate,
            "search_domain": dict(self.search_domain),
            "trace_length": len(self.optimizer_trace),
            "notes": list(self.notes),
        }


# ---------------------------------------------------------------------------
# tangential bounds


@dataclass(frozen=True)
class TangentCoefficients:
    """Tangent ``a p^2 + b`` to ``sqrt(m^2 + p^2)`` touching at ``p^2 = t``."""

    t: float
    a: float
    b: float
    mu: float

    def line(self, x):
        return self.a * np.asarray(x) + self.b


def tangent_coefficients(m: float, t: float) -> TangentCoefficients:
    if not t > 0:
        raise DomainError(f"contact point t must be positive, got {t}")
    if not m >= 0:
        raise DomainError(f"mass must be non-negative, got {m}")
    mu = math.sqrt(m * m + t)
    return TangentCoefficients(t=t, a=1.0 / (2.0 * mu), b=(2.0 * m * m + t) / (2.0 * mu), mu=mu)


def _schrodinger_energy(a: float, potential: RadialPotential, config: SolverConfig) -> float:
    return ground_energy(SchrodingerProblem(a, potential), config)


def tangential_objective(m: float, potential: RadialPotential, t: float, config: SolverConfig = DEFAULT_CONFIG) -> float:
    tc = tangent_coefficients(m, t)
    return _schrodinger_energy(tc.a, potential, config) + tc.b


def envelope_objective(m: float, potential: RadialPotential, mu: float, config: SolverConfig = DEFAULT_CONFIG) -> float:
    """The same bound from ``K <= (K^2 + mu^2) / (2 mu)``, valid for ``mu > m``."""
    a = 1.0 / (2.0 * mu)
    b = (m * m + mu * mu) / (2.0 * mu)
    return _schrodinger_energy(a, potential, config) + b


def tangential_bound(m: float, potential: RadialPotential, config: SolverConfig = DEFAULT_CONFIG) -> BoundResult:
    """Best tangential upper bound, minimised over ``log t`` by bracketing + golden section."""
    if not potential.is_confining:
        raise DomainError(f"{potential} is not confining")
    objective = Trace(lambda x: tangential_objective(m, potential, math.exp(x), config))
    x_opt, _ = minimize_1d(objective, math.log(m * m + 1.0), width=1e-8)
    t = math.exp(x_opt)
    tc = tangent_coefficients(m, t)
    value = tangential_objective(m, potential, t, config)
    return BoundResult(
        bound_value=value,
        method=BoundMethod.TANGENTIAL,
        optimal_parameters={"t": t, "a": tc.a, "b": tc.b, "mu": tc.mu},
        optimizer_trace=tuple(({"t": math.exp(x)}, y) for x, y in objective.points),
    )


# ---------------------------------------------------------------------------
# difference bounds


def _oscillator_hamiltonian(m: float, a: float, b: float, sign: int) -> Hamiltonian:
    """``sign*sqrt(m^2 + p^2) + a p^2 + b r^2`` before the p <-> r exchange."""
    kinetic = RadialPotential.salpeter(m, sign) + RadialPotential.power(a, 2)
    return Hamiltonian(kinetic, RadialPotential.power(b, 2))


def component_energies(m: float, potential: RadialPotential, a: float, b: float, config: SolverConfig = DEFAULT_CONFIG) -> tuple[float, float]:
    """``(E1, E2)`` for ``H1 = sqrt(m^2+p^2) + a p^2 + b r^2`` and ``H2 = a p^2 + b r^2 - V``."""
    h1 = fourier_swap(_oscillator_hamiltonian(m, a, b, +1)).to_problem()
    h2 = SchrodingerProblem(a, RadialPotential.power(b, 2) - potential)
    return ground_energy(h1, config), ground_energy(h2, config)


def component_energies_alt(m: float, potential: RadialPotential, a: float, b: float, config: SolverConfig = DEFAULT_CONFIG) -> tuple[float, float]:
    """``(E1-, E2-)`` for ``-sqrt(m^2+p^2) + a p^2 + b r^2`` and ``a p^2 + b r^2 + V``."""
    h1 = fourier_swap(_oscillator_hamiltonian(m, a, b, -1)).to_problem()
    h2 = SchrodingerProblem(a, RadialPotential.power(b, 2) + potential)
    return ground_energy(h1, config), ground_energy(h2, config)


@dataclass(frozen=True)
class DifferenceDomain:
    """Search box for the auxiliary oscillator parameters (a, b)."""

    a_min: float = 0.05
    a_max: float = 20.0
    b_min: float = 0.05
    b_max: float = 20.0
    grid: int = 8
    feasibility_margin: float = 1e-3
    xatol: float = 1e-4
    fatol: float = 1e-6
    max_restarts: int = 3
    expansion: float = 4.0
    edge_tolerance: float = 0.05
    #: relative accuracy of a component energy; differences of E1 - E2 smaller
    #: than ``noise * max(|E1|, |E2|)`` are not taken as evidence of a minimum
    noise: float = 1e-10


_ROUND = 12


def _key(a: float, b: float) -> tuple[float, float]:
    return float(f"{a:.{_ROUND}g}"), float(f"{b:.{_ROUND}g}")


def _optimize_difference(
    components,
    b_floor: float | None,
    domain: DifferenceDomain,
    method: BoundMethod,
    sign: int,
) -> BoundResult:
    a_lo, a_hi = domain.a_min, domain.a_max
    b_expandable = b_floor is None
    b_lo = domain.b_min if b_floor is None else b_floor
    b_hi = domain.b_max
    if b_lo >= b_hi:
        raise InfeasibleDomainError(
            f"oscillator strength must exceed {b_lo:.6g} to dominate the potential, "
            f"but the search domain stops at b = {b_hi:.6g}"
        )

    cache: dict[tuple[float, float], tuple[float, float, float]] = {}
    trace: list[tuple[dict[str, float], float]] = []

    def evaluate(a: float, b: float) -> float:
        key = _key(a, b)
        if key not in cache:
            try:
                e1, e2 = components(*key)
            except SalpeterBoundsError as exc:
                raise type(exc)(f"{exc} [at a = {key[0]!r}, b = {key[1]!r}]") from exc
            value = sign * (e1 - e2)
            cache[key] = (value, e1, e2)
            trace.append(({"a": key[0], "b": key[1]}, value))
        return cache[key][0]

    def fun(x) -> float:
        return evaluate(math.exp(x[0]), math.exp(x[1]))

    a_grid = np.geomspace(a_lo, a_hi, domain.grid)
    b_grid = np.geomspace(b_lo, b_hi, domain.grid)
    seeds = [(a, b, evaluate(a, b)) for a in a_grid for b in b_grid]
    best_a, best_b, _ = min(seeds, key=lambda s: (s[2], s[0], s[1]))
    x = np.log([best_a, best_b])

    def resolution(a: float, b: float) -> float:
        _, e1, e2 = cache[_key(a, b)]
        return domain.noise * max(abs(e1), abs(e2))

    history: list[float] = []
    boundary_runs = 0
    notes: list[str] = []
    shift = np.zeros(2)
    for restart in range(domain.max_restarts + 1):
        lower = np.log([a_lo, b_lo])
        upper = np.log([a_hi, b_hi])
        step = 0.05 * (upper - lower)
        step = np.where(x + step > upper, -step, step)
        simplex = np.array([x, x + [step[0], 0.0], x + [0.0, step[1]]])
        res = minimize(
            fun,
            x,
            method="Nelder-Mead",
            bounds=list(zip(lower, upper)),
            options={
                "xatol": domain.xatol,
                "fatol": domain.fatol,
                "maxiter": 2000,
                "initial_simplex": simplex,
            },
        )
        start, x = x, np.clip(res.x, lower, upper)
        value = fun(x)
        # a flat valley can stall the simplex short of the face it is heading for:
        # extend the run's net displacement to the box and keep it if it is lower
        direction = x - start
        if np.linalg.norm(direction) > domain.xatol:
            with np.errstate(divide="ignore", invalid="ignore"):
                reach = np.where(direction > 0, (upper - x) / direction, (lower - x) / direction)
            tau = float(np.min(reach[np.isfinite(reach)])) if np.any(np.isfinite(reach)) else 0.0
            if tau > 0:
                probe = np.clip(x + tau * direction, lower, upper)
                if fun(probe) < value:
                    x, value = probe, fun(probe)
        history.append(value)
        bounds = list(zip(lower, upper))

        tol = domain.edge_tolerance
        at_a_hi = x[0] >= bounds[0][1] - tol
        at_a_lo = x[0] <= bounds[0][0] + tol
        at_b_hi = x[1] >= bounds[1][1] - tol
        at_b_lo = b_expandable and x[1] <= bounds[1][0] + tol
        on_edge = at_a_hi or at_a_lo or at_b_hi or at_b_lo
        floor_noise = resolution(math.exp(x[0]), math.exp(x[1]))
        if not on_edge and shift.any():
            # an interior point found just after an expansion only counts as a
            # minimum if moving on by the same expansion is measurably worse
            if fun(x + shift) - value <= floor_noise:
                at_a_hi, at_a_lo = shift[0] > 0, shift[0] < 0
                at_b_hi, at_b_lo = shift[1] > 0, shift[1] < 0
                on_edge = True
                notes.append(
                    f"restart {restart + 1}: interior optimum is level with the expanded face "
                    f"to within solver resolution {floor_noise:.2g}"
                )
        if not on_edge:
            break
        if len(history) >= 2:
            decreasing = history[-1] < history[-2] + floor_noise
            boundary_runs = boundary_runs + 1 if decreasing else 0
        if boundary_runs >= 3 or restart == domain.max_restarts:
            break
        g = domain.expansion
        shift = np.log(g) * np.array(
            [float(at_a_hi) - float(at_a_lo), float(at_b_hi) - float(at_b_lo)]
        )
        if at_a_hi:
            a_hi *= g
        if at_a_lo:
            a_lo /= g
        if at_b_hi:
            b_hi *= g
        if at_b_lo:
            b_lo /= g
        notes.append(f"restart {restart + 1}: optimum on boundary, expanded box to a in [{a_lo:.4g}, {a_hi:.4g}], b in [{b_lo:.4g}, {b_hi:.4g}]")

    a_opt, b_opt = _key(math.exp(x[0]), math.exp(x[1]))
    value, e1, e2 = cache[(a_opt, b_opt)]
    boundary = boundary_runs >= 3
    limit = None
    if boundary:
        limit = aitken_limit(history)
        notes.append(
            f"objective keeps decreasing (to within solver resolution) towards the domain boundary; "
            f"extrapolated infimum {limit!r} from boundary values {history[-3:]!r}"
        )
    elif on_edge:
        notes.append("optimum remained on the search boundary after the restart budget")
    return BoundResult(
        bound_value=value,
        method=method,
        optimal_parameters={"a": a_opt, "b": b_opt},
        component_energies=(e1, e2),
        optimizer_trace=tuple(trace),
        boundary_infimum=boundary,
        limit_estimate=limit,
        search_domain={"a_min": a_lo, "a_max": a_hi, "b_min": b_lo, "b_max": b_hi},
        notes=tuple(notes),
    )


def difference_bound(
    m: float,
    potential: RadialPotential,
    config: SolverConfig = DEFAULT_CONFIG,
    domain: DifferenceDomain = DifferenceDomain(),
) -> BoundResult:
    """``min_{a,b} [E1(a,b) - E2(a,b)]`` over the feasible part of ``domain``."""
    threshold = domination_threshold(potential)
    if threshold is None:
        raise InfeasibleDomainError(
            f"no oscillator b*r^2 dominates {potential}: it grows faster than r^2"
        )
    if threshold > 0 or not dominates(domain.b_min, potential):
        floor = max(threshold + domain.feasibility_margin, domain.b_min)
        if not dominates(floor, potential):
            raise InfeasibleDomainError(f"b = {floor:.6g} does not dominate {potential}")
    else:
        floor = None
    return _optimize_difference(
        lambda a, b: component_energies(m, potential, a, b, config),
        floor,
        domain,
        BoundMethod.DIFFERENCE,
        +1,
    )


def difference_bound_alt(
    m: float,
    potential: RadialPotential,
    config: SolverConfig = DEFAULT_CONFIG,
    domain: DifferenceDomain = DifferenceDomain(),
) -> BoundResult:
    """``min_{a,b} [E2-(a,b) - E1-(a,b)]``; requires ``a p^2 + b r^2 + V`` to confine."""
    threshold = domination_threshold(-potential)
    if threshold is None:
        raise InfeasibleDomainError(f"a p^2 + b r^2 + ({potential}) is unbounded below for every b")
    if threshold > 0 or not dominates(domain.b_min, -potential):
        floor = max(threshold + domain.feasibility_margin, domain.b_min)
    else:
        floor = None
    res = _optimize_difference(
        lambda a, b: component_energies_alt(m, potential, a, b, config),
        floor,
        domain,
        BoundMethod.DIFFERENCE_ALT,
        -1,
    )
    e1, e2 = res.component_energies
    # report (E1-, E2-) in the operator order; the objective is E2- - E1-
    return BoundResult(
        bound_value=res.bound_value,
        method=res.method,
        optimal_parameters=res.optimal_parameters,
        component_energies=(e1, e2),
        optimizer_trace=res.optimizer_trace,
        boundary_infimum=res.boundary_infimum,
        limit_estimate=res.limit_estimate,
        search_domain=res.search_domain,
        notes=res.notes,
    )


# ---------------------------------------------------------------------------
# nonrelativistic quartic-minus-quadratic example


def weyl_nonrel_objective(alpha: float, beta: float, omega: float, config: SolverConfig = DEFAULT_CONFIG) -> float:
    """``e4 ((1+w)^2 alpha)^(1/3) - e2 (w beta)^(1/2)`` from the scaling law."""
    e4 = base_energy(4.0, config)
    e2 = base_energy(2.0, config)
    return scale_kinetic(e4, 1.0 + omega, alpha) - scale_kinetic(e2, omega, beta)


def weyl_nonrel_bound(alpha: float, beta: float, config: SolverConfig = DEFAULT_CONFIG) -> BoundResult:
    """Upper bound on the ground state of ``p^2 + alpha r^4 - beta r^2``."""
    if not (alpha > 0 and beta > 0):
        raise DomainError(f"alpha and beta must be positive, got {alpha}, {beta}")
    objective = Trace(lambda x: weyl_nonrel_objective(alpha, beta, math.exp(x), config))
    x_opt, _ = minimize_1d(objective, 0.0, width=1e-10)
    omega = math.exp(x_opt)
    e1 = scale_kinetic(base_energy(4.0, config), 1.0 + omega, alpha)
    e2 = scale_kinetic(base_energy(2.0, config), omega, beta)
    return BoundResult(
        bound_value=e1 - e2,
        method=BoundMethod.WEYL_NONREL,
        optimal_parameters={"omega": omega},
        component_energies=(e1, e2),
        optimizer_trace=tuple(({"omega": math.exp(x)}, y) for x, y in objective.points),
    )


# ---------------------------------------------------------------------------
# reference energies and the Weyl inequality


def exact_oscillator_energy(m: float, potential: RadialPotential, config: SolverConfig = DEFAULT_CONFIG) -> float:
    """Exact ground state of ``sqrt(m^2+p^2) + k r^2`` through the p <-> r exchange."""
    h = Hamiltonian(RadialPotential.salpeter(m), potential)
    return cross_validate(fourier_swap(h).to_problem(), config).energy


@dataclass(frozen=True)
class WeylCheck:
    e1: float
    e2: float
    reference: float
    slack: float
    satisfied: bool


def weyl_inequality_check(
    m: float,
    potential: RadialPotential,
    a: float,
    b: float,
    config: SolverConfig = DEFAULT_CONFIG,
    reference: float | None = None,
    tol: float = 1e-6,
) -> WeylCheck:
    """Check ``E1(a,b) >= E + E2(a,b)`` with ``E`` supplied or computable exactly."""
    if not dominates(b, potential):
        raise InfeasibleDomainError(f"b = {b} does not dominate {potential}")
    if reference is None:
        try:
            reference = exact_oscillator_energy(m, potential, config)
        except UnsupportedSwapError as exc:
            raise UnsupportedCheckError(
                f"no reference energy for sqrt({m}^2 + p^2) + {potential}; pass one explicitly"
            ) from exc
    e1, e2 = component_energies(m, potential, a, b, config)
    slack = e1 - reference - e2
    return WeylCheck(e1=e1, e2=e2, reference=reference, slack=slack, satisfied=slack >= -tol)
