"""Coupling scaling law for pure powers.

For ``0 != q > -2`` the lowest eigenvalue of ``p^2 + v sgn(q) r^q`` is
``E(1) * v**(2/(2+q))``, where ``E(1)`` is the unit-coupling energy.
Unit-coupling energies are computed once per exponent and memoised.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass

from .errors import DomainError
from .potentials import RadialPotential, SchrodingerProblem
from .radial_solver import DEFAULT_CONFIG, SolverConfig, cross_validate

__all__ = ["PowerBaseEnergy", "base_energy", "scale_energy", "scale_kinetic", "clear_cache"]


@dataclass(frozen=True)
class PowerBaseEnergy:
    exponent: float
    base_energy: float

    def __post_init__(self):
        if self.exponent <= -2.0 or self.exponent == 0.0:
            raise DomainError(f"exponent must satisfy 0 != q > -2, got {self.exponent}")


_cache: dict[tuple[float, SolverConfig], PowerBaseEnergy] = {}
_lock = threading.Lock()


def unit_problem(q: float) -> SchrodingerProblem:
    return SchrodingerProblem(1.0, RadialPotential.power(math.copysign(1.0, q), q))


def base_energy(q: float, config: SolverConfig = DEFAULT_CONFIG) -> PowerBaseEnergy:
    """Unit-coupling ground energy of ``p^2 + sgn(q) r^q``, cross-validated and cached."""
    key = (float(q), config)
    with _lock:
        hit = _cache.get(key)
        if hit is None:
            hit = PowerBaseEnergy(float(q), cross_validate(unit_problem(q), config).energy)
            _cache[key] = hit
    return hit


def clear_cache() -> None:
    with _lock:
        _cache.clear()


def scale_energy(base: PowerBaseEnergy, coupling: float) -> float:
    if not coupling > 0:
        raise DomainError(f"coupling must be positive, got {coupling}")
    return base.base_energy * coupling ** (2.0 / (2.0 + base.exponent))


def scale_kinetic(base: PowerBaseEnergy, kinetic_coefficient: float, coupling: float) -> float:
    """Lowest eigenvalue of ``c p^2 + v sgn(q) r^q`` via ``c E(1) (v/c)^(2/(2+q))``."""
    c, v = kinetic_coefficient, coupling
    if not c > 0:
        raise DomainError(f"kinetic coefficient must be positive, got {c}")
    if not v > 0:
        raise DomainError(f"coupling must be positive, got {v}")
    return c * base.base_energy * (v / c) ** (2.0 / (2.0 + base.exponent))
