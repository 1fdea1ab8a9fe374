"""Symbolic central potentials and the operators built from them.

A :class:`RadialPotential` is a finite sum

    V(r) = sum_i c_i r^{q_i}  (+/- sqrt(m^2 + r^2))  + const

kept as a term list rather than a callable, so that operators can be
shifted, negated, p <-> r exchanged and checked for confinement exactly.
The same representation is reused for functions of ``p`` on the kinetic
side of a :class:`Hamiltonian`.
"""

from __future__ import annotations

import math
import re
from collections import defaultdict
from dataclasses import dataclass, field

import numpy as np

from .errors import (
    DomainError,
    EvaluationOverflowError,
    PotentialParseError,
    UnsupportedSwapError,
)

__all__ = [
    "PowerTerm",
    "SalpeterTerm",
    "RadialPotential",
    "SchrodingerProblem",
    "Hamiltonian",
    "parse_potential",
    "evaluate",
    "fourier_swap",
    "dominates",
    "domination_threshold",
]


@dataclass(frozen=True)
class PowerTerm:
    """``coefficient * r**exponent``; attractive singular powers carry negative coefficients."""

    coefficient: float
    exponent: float

    def __post_init__(self):
        if not math.isfinite(self.coefficient) or self.coefficient == 0.0:
            raise DomainError(f"power-term coefficient must be finite and nonzero, got {self.coefficient}")
        if not math.isfinite(self.exponent) or self.exponent <= -2.0 or self.exponent == 0.0:
            raise DomainError(f"power-term exponent must satisfy 0 != q > -2, got {self.exponent}")


@dataclass(frozen=True)
class SalpeterTerm:
    """``sign * sqrt(mass**2 + r**2)``."""

    mass: float
    sign: int = 1

    def __post_init__(self):
        if not math.isfinite(self.mass) or self.mass < 0.0:
            raise DomainError(f"Salpeter mass must be finite and >= 0, got {self.mass}")
        if self.sign not in (1, -1):
            raise DomainError(f"Salpeter sign must be +1 or -1, got {self.sign}")


def _merge(terms) -> tuple[PowerTerm, ...]:
    acc: dict[float, float] = defaultdict(float)
    for t in terms:
        acc[float(t.exponent)] += float(t.coefficient)
    return tuple(PowerTerm(c, q) for q, c in sorted(acc.items()) if c != 0.0)


@dataclass(frozen=True)
class RadialPotential:
    power_terms: tuple[PowerTerm, ...] = ()
    salpeter_term: SalpeterTerm | None = None
    constant_offset: float = 0.0

    def __post_init__(self):
        object.__setattr__(self, "power_terms", _merge(self.power_terms))
        object.__setattr__(self, "constant_offset", float(self.constant_offset))

    # -- constructors -------------------------------------------------------
    @classmethod
    def power(cls, coefficient: float, exponent: float) -> RadialPotential:
        return cls((PowerTerm(coefficient, exponent),))

    @classmethod
    def salpeter(cls, mass: float, sign: int = 1) -> RadialPotential:
        return cls(salpeter_term=SalpeterTerm(mass, sign))

    @classmethod
    def constant(cls, value: float) -> RadialPotential:
        return cls(constant_offset=value)

    @classmethod
    def parse(cls, text: str) -> RadialPotential:
        return parse_potential(text)

    # -- algebra ------------------------------------------------------------
    def __add__(self, other):
        if isinstance(other, (int, float)):
            other = RadialPotential.constant(other)
        if not isinstance(other, RadialPotential):
            return NotImplemented
        s1, s2 = self.salpeter_term, other.salpeter_term
        if s1 is None or s2 is None:
            salpeter = s1 or s2
        elif s1.mass == s2.mass and s1.sign == -s2.sign:
            salpeter = None
        else:
            raise DomainError("a potential carries at most one Salpeter term")
        return RadialPotential(
            self.power_terms + other.power_terms,
            salpeter,
            self.constant_offset + other.constant_offset,
        )

    __radd__ = __add__

    def __neg__(self) -> RadialPotential:
        return self.scaled(-1.0)

    def __sub__(self, other):
        if isinstance(other, (int, float)):
            other = RadialPotential.constant(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scaled(self, factor: float) -> RadialPotential:
        """Multiply by ``factor``; only +/-1 is allowed when a Salpeter term is present."""
        salpeter = self.salpeter_term
        if salpeter is not None:
            if factor not in (1.0, -1.0):
                raise DomainError("a Salpeter term can only be scaled by +/-1")
            salpeter = SalpeterTerm(salpeter.mass, int(salpeter.sign * factor))
        if factor == 0.0:
            return RadialPotential()
        return RadialPotential(
            tuple(PowerTerm(factor * t.coefficient, t.exponent) for t in self.power_terms),
            salpeter,
            factor * self.constant_offset,
        )

    # -- metadata -----------------------------------------------------------
    def coefficient_of(self, exponent: float) -> float:
        for t in self.power_terms:
            if t.exponent == exponent:
                return t.coefficient
        return 0.0

    def leading_term(self) -> tuple[float, float]:
        """(exponent, coefficient) of the term dominating as r -> infinity.

        The Salpeter term counts as ``sign * r`` asymptotically.  Returns
        ``(0.0, constant_offset)`` for a constant potential.
        """
        acc: dict[float, float] = defaultdict(float)
        for t in self.power_terms:
            acc[t.exponent] += t.coefficient
        if self.salpeter_term is not None:
            acc[1.0] += self.salpeter_term.sign
        growing = [(q, c) for q, c in acc.items() if q > 0 and c != 0.0]
        if not growing:
            return 0.0, self.constant_offset
        return max(growing)

    @property
    def growth_exponent(self) -> float | None:
        """Exponent of the asymptotically dominant term, or ``None`` if not confining."""
        q, c = self.leading_term()
        return q if (q > 0 and c > 0) else None

    @property
    def is_confining(self) -> bool:
        return self.growth_exponent is not None

    @property
    def is_singular(self) -> bool:
        return any(t.exponent < 0 for t in self.power_terms)

    @property
    def is_pure_power(self) -> bool:
        return (
            len(self.power_terms) == 1
            and self.salpeter_term is None
            and self.constant_offset == 0.0
        )

    # -- evaluation ---------------------------------------------------------
    def __call__(self, r):
        """Vectorised evaluation; no finiteness checking (see :func:`evaluate`)."""
        r = np.asarray(r, dtype=float)
        out = np.full(r.shape, self.constant_offset)
        with np.errstate(divide="ignore", over="ignore", invalid="ignore"):
            for t in self.power_terms:
                out = out + t.coefficient * r**t.exponent
            if self.salpeter_term is not None:
                out = out + self.salpeter_term.sign * np.hypot(self.salpeter_term.mass, r)
        return out if out.ndim else float(out)

    def __str__(self) -> str:
        return self.format("r")

    def format(self, variable: str = "r") -> str:
        parts = []
        for t in self.power_terms:
            parts.append(f"{_fmt(t.coefficient)}*{variable}^{_fmt(t.exponent)}")
        if self.salpeter_term is not None:
            s = self.salpeter_term
            parts.append(f"{'-' if s.sign < 0 else ''}salpeter(m={_fmt(s.mass)})")
        if self.constant_offset != 0.0 or not parts:
            parts.append(_fmt(self.constant_offset))
        return " + ".join(parts).replace("+ -", "- ")


def _fmt(x: float) -> str:
    return repr(float(x)).removesuffix(".0") if float(x).is_integer() else repr(float(x))


def evaluate(potential: RadialPotential, r: float) -> float:
    if not r >= 0.0:
        raise DomainError(f"radius must be non-negative, got {r}")
    value = potential(float(r))
    if not math.isfinite(value):
        raise EvaluationOverflowError(f"{potential} is not finite at r = {r!r}")
    return value


# ---------------------------------------------------------------------------
# literal syntax:  "r^2", "-1.0*r^2", "0.5*r^4 - r^2", "salpeter(m=1)", "2.5"

_NUM = r"(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?"
_POWER_RE = re.compile(rf"^(?:(?P<c>{_NUM})\*?)?r(?:\^(?P<q>[+-]?{_NUM}|\([+-]?{_NUM}\)))?$")
_SALPETER_RE = re.compile(rf"^(?:(?P<c>{_NUM})\*)?salpeter\(m=(?P<m>{_NUM})\)$")
_CONST_RE = re.compile(rf"^{_NUM}$")


def _split_terms(text: str) -> list[str]:
    s = "".join(text.split())
    if not s:
        raise PotentialParseError(text, "empty potential")
    terms, depth, start = [], 0, 0
    for i, ch in enumerate(s):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch in "+-" and depth == 0 and i > 0 and s[i - 1] not in "eE^*(":
            terms.append(s[start:i])
            start = i
    terms.append(s[start:])
    return terms


def parse_potential(text: str) -> RadialPotential:
    """Parse the CLI literal syntax into a :class:`RadialPotential`.

    Raises :class:`PotentialParseError` naming the first term that does not parse.
    """
    result = RadialPotential()
    for raw in _split_terms(text):
        sign = 1.0
        body = raw
        while body[:1] in ("+", "-"):
            if body[0] == "-":
                sign = -sign
            body = body[1:]
        if not body:
            raise PotentialParseError(raw, "dangling sign")
        try:
            if m := _POWER_RE.match(body):
                coef = sign * float(m["c"] or 1.0)
                q = float((m["q"] or "1").strip("()"))
                result = result + RadialPotential.power(coef, q)
            elif m := _SALPETER_RE.match(body):
                if m["c"] is not None and float(m["c"]) != 1.0:
                    raise PotentialParseError(raw, "Salpeter term takes no coefficient other than +/-1")
                result = result + RadialPotential.salpeter(float(m["m"]), int(sign))
            elif _CONST_RE.match(body):
                result = result + sign * float(body)
            else:
                raise PotentialParseError(raw)
        except DomainError as exc:
            raise PotentialParseError(raw, str(exc)) from exc
    return result


# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SchrodingerProblem:
    """The radial operator ``c p^2 + W(r)``."""

    kinetic_coefficient: float
    potential: RadialPotential
    angular_momentum: int = 0

    def __post_init__(self):
        if not (math.isfinite(self.kinetic_coefficient) and self.kinetic_coefficient > 0):
            raise DomainError(f"kinetic coefficient must be > 0, got {self.kinetic_coefficient}")
        if self.angular_momentum < 0:
            raise DomainError("angular momentum must be >= 0")

    def __str__(self) -> str:
        return f"{_fmt(self.kinetic_coefficient)}*p^2 + {self.potential}"


@dataclass(frozen=True)
class Hamiltonian:
    """``F(p) + V(r)`` with both sides in the term representation.

    ``kinetic`` is read as a function of ``p = |p|``: a power term ``c*r^q``
    there means ``c*p^q`` and a Salpeter term means ``sqrt(m^2 + p^2)``.
    """

    kinetic: RadialPotential
    potential: RadialPotential = field(default_factory=RadialPotential)

    @classmethod
    def from_problem(cls, problem: SchrodingerProblem) -> Hamiltonian:
        return cls(RadialPotential.power(problem.kinetic_coefficient, 2), problem.potential)

    @property
    def is_local(self) -> bool:
        k = self.kinetic
        return (
            k.salpeter_term is None
            and len(k.power_terms) == 1
            and k.power_terms[0].exponent == 2
            and k.power_terms[0].coefficient > 0
        )

    def to_problem(self) -> SchrodingerProblem:
        """Convert ``c p^2 + const + W(r)`` into a :class:`SchrodingerProblem`."""
        if not self.is_local:
            raise UnsupportedSwapError(f"kinetic part {self.kinetic} is not of the form c*p^2")
        c = self.kinetic.power_terms[0].coefficient
        return SchrodingerProblem(c, self.potential + self.kinetic.constant_offset)

    def __str__(self) -> str:
        return f"{self.kinetic.format('p')} + {self.potential}"


def fourier_swap(operator) -> Hamiltonian:
    """Exchange p and r in ``F(p) + b r^2``, giving the isospectral ``b p^2 + F(r)``.

    Accepts a :class:`Hamiltonian` or a :class:`SchrodingerProblem`.  The
    coordinate side must be a single positive oscillator term (plus an
    optional constant); anything else raises :class:`UnsupportedSwapError`.
    """
    if isinstance(operator, SchrodingerProblem):
        if operator.angular_momentum != 0:
            raise UnsupportedSwapError("only s-wave operators are exchanged")
        operator = Hamiltonian.from_problem(operator)
    v = operator.potential
    if (
        v.salpeter_term is not None
        or len(v.power_terms) != 1
        or v.power_terms[0].exponent != 2
        or v.power_terms[0].coefficient <= 0
    ):
        raise UnsupportedSwapError(f"coordinate part {v} is not a pure oscillator b*r^2")
    b = v.power_terms[0].coefficient
    kinetic = RadialPotential.power(b, 2)
    swapped = RadialPotential(
        operator.kinetic.power_terms, operator.kinetic.salpeter_term, 0.0
    )
    offset = operator.kinetic.constant_offset + v.constant_offset
    return Hamiltonian(kinetic, swapped + offset)


def dominates(b: float, potential: RadialPotential) -> bool:
    """True iff ``b r^2 - V(r)`` grows without bound as r -> infinity."""
    if not b > 0:
        return False
    return (RadialPotential.power(b, 2) - potential).is_confining


def domination_threshold(potential: RadialPotential) -> float | None:
    """Infimum of the oscillator strengths b for which ``b r^2`` dominates ``V``.

    Returns ``None`` when no b works (V has a growing term steeper than r^2).
    The threshold itself is excluded unless it is 0 and lower-order terms
    already make ``-V`` confining.
    """
    steeper = [t for t in potential.power_terms if t.exponent > 2]
    if steeper:
        top = max(steeper, key=lambda t: t.exponent)
        return 0.0 if top.coefficient < 0 else None
    return max(potential.coefficient_of(2.0), 0.0)
