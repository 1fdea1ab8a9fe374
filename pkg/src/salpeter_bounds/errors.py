"""Exception hierarchy shared by all modules."""


class SalpeterBoundsError(Exception):
    """Base class for every error raised by this package."""


class DomainError(SalpeterBoundsError, ValueError):
    """An argument lies outside the domain of the operation."""


class EvaluationOverflowError(SalpeterBoundsError, ArithmeticError):
    """A potential evaluated to a non-finite number."""


class PotentialParseError(SalpeterBoundsError, ValueError):
    def __init__(self, term: str, reason: str = "unrecognised term"):
        self.term = term
        super().__init__(f"cannot parse potential term {term!r}: {reason}")


class UnsupportedSwapError(SalpeterBoundsError):
    """The operator cannot be p <-> r exchanged into a Schrodinger operator."""


class ContinuumSpectrumError(SalpeterBoundsError):
    """The potential does not confine, so there is no discrete ground state."""


class BracketFailureError(SalpeterBoundsError):
    """The ground-state energy could not be bracketed within the bisection budget."""


class OracleMismatchError(SalpeterBoundsError):
    def __init__(self, shooting: float, sturm: float, tolerance: float):
        self.shooting = shooting
        self.sturm = sturm
        self.tolerance = tolerance
        super().__init__(
            f"shooting ({shooting!r}) and Sturm ({sturm!r}) energies differ by "
            f"{abs(shooting - sturm):.3e} > {tolerance:.3e}"
        )


class OptimizationFailureError(SalpeterBoundsError):
    """No interior minimum was found; the message reports the boundary behaviour."""


class InfeasibleDomainError(SalpeterBoundsError):
    """No parameter choice satisfies the oscillator domination condition."""


class UnsupportedCheckError(SalpeterBoundsError):
    """A consistency check was requested without a reference energy."""
