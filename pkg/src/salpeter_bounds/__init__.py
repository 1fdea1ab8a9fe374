"""Upper bounds on the ground state of the spinless Salpeter Hamiltonian.

The package compares Schrodinger-operator bounds for ``sqrt(m^2 + p^2) + V(r)``
against exact spectra of local radial problems and a Hermite-basis
variational treatment of the fully nonlocal ``p + r``.
"""

from .bounds import (
    BoundMethod,
    BoundResult,
    DifferenceDomain,
    TangentCoefficients,
    component_energies,
    component_energies_alt,
    difference_bound,
    difference_bound_alt,
    exact_oscillator_energy,
    tangent_coefficients,
    tangential_bound,
    weyl_inequality_check,
    weyl_nonrel_bound,
)
from .errors import (
    BracketFailureError,
    ContinuumSpectrumError,
    DomainError,
    EvaluationOverflowError,
    InfeasibleDomainError,
    OptimizationFailureError,
    OracleMismatchError,
    PotentialParseError,
    SalpeterBoundsError,
    UnsupportedCheckError,
    UnsupportedSwapError,
)
from .oracles import (
    HermiteBasisSpec,
    airy_zero,
    hermite_nonlocal_solver,
    linear_case_limit_check,
    perturbed_oscillator_slope,
)
from .potentials import (
    Hamiltonian,
    PowerTerm,
    RadialPotential,
    SalpeterTerm,
    SchrodingerProblem,
    dominates,
    evaluate,
    fourier_swap,
    parse_potential,
)
from .radial_solver import (
    DEFAULT_CONFIG,
    EigenResult,
    Method,
    SolverConfig,
    cross_validate,
    solve_ground_shooting,
    solve_ground_sturm,
)
from .scaling import PowerBaseEnergy, base_energy, scale_energy, scale_kinetic

__version__ = "0.1.0"
