import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from salpeter_bounds.errors import (
    DomainError,
    EvaluationOverflowError,
    PotentialParseError,
    UnsupportedSwapError,
)
from salpeter_bounds.potentials import (
    Hamiltonian,
    PowerTerm,
    RadialPotential,
    SalpeterTerm,
    SchrodingerProblem,
    dominates,
    domination_threshold,
    evaluate,
    fourier_swap,
    parse_potential,
)
from salpeter_bounds.radial_solver import cross_validate


def test_evaluate_examples():
    assert evaluate(parse_potential("r^2"), 2.0) == 4.0
    assert evaluate(RadialPotential.salpeter(1.0), 0.0) == 1.0
    assert evaluate(parse_potential("r^4 - r^2"), 1.0) == 0.0


def test_evaluate_rejects_negative_radius():
    with pytest.raises(DomainError):
        evaluate(parse_potential("r^2"), -1.0)


def test_evaluate_overflow():
    with pytest.raises(EvaluationOverflowError):
        evaluate(parse_potential("r^4"), 1e200)


def test_power_term_invariants():
    with pytest.raises(DomainError):
        PowerTerm(1.0, -2.0)
    with pytest.raises(DomainError):
        PowerTerm(1.0, 0.0)
    with pytest.raises(DomainError):
        PowerTerm(0.0, 2.0)
    with pytest.raises(DomainError):
        PowerTerm(math.inf, 2.0)
    PowerTerm(-1.0, -1.5)


def test_salpeter_term_invariants():
    with pytest.raises(DomainError):
        SalpeterTerm(-1.0)
    with pytest.raises(DomainError):
        SalpeterTerm(1.0, 2)


@pytest.mark.parametrize(
    "text, expected",
    [
        ("r^2", RadialPotential.power(1.0, 2)),
        ("-1.0*r^2", RadialPotential.power(-1.0, 2)),
        ("0.5*r^4 - r^2", RadialPotential.power(0.5, 4) - RadialPotential.power(1.0, 2)),
        ("salpeter(m=1)", RadialPotential.salpeter(1.0)),
        ("salpeter(m=0)", RadialPotential.salpeter(0.0)),
        ("-salpeter(m=2) + 3", RadialPotential.salpeter(2.0, -1) + 3.0),
        ("r", RadialPotential.power(1.0, 1)),
        ("2r^-1.5", RadialPotential.power(2.0, -1.5)),
        ("1e-3*r^(2)", RadialPotential.power(1e-3, 2)),
        ("r^2 + r^2", RadialPotential.power(2.0, 2)),
    ],
)
def test_parse(text, expected):
    assert parse_potential(text) == expected


@pytest.mark.parametrize("text, bad", [("r^2 + foo", "foo"), ("r^2 + 3*x", "3*x"), ("r^-2", "r^-2"), ("2*salpeter(m=1)", "salpeter")])
def test_parse_error_names_term(text, bad):
    with pytest.raises(PotentialParseError) as info:
        parse_potential(text)
    assert bad in info.value.term


def test_parse_empty():
    with pytest.raises(PotentialParseError):
        parse_potential("   ")


def test_format_roundtrip():
    v = parse_potential("0.5*r^4 - r^2 + salpeter(m=1) - 2")
    assert parse_potential(str(v)) == v


def test_salpeter_at_zero_mass_is_linear():
    r = np.linspace(0.0, 5.0, 11)
    assert np.allclose(RadialPotential.salpeter(0.0)(r), r)
    assert RadialPotential.salpeter(0.0).growth_exponent == 1.0


def test_algebra():
    v = parse_potential("r^2") - parse_potential("r^2")
    assert v == RadialPotential()
    w = RadialPotential.salpeter(1.0) - RadialPotential.salpeter(1.0)
    assert w.salpeter_term is None
    with pytest.raises(DomainError):
        RadialPotential.salpeter(1.0) + RadialPotential.salpeter(2.0)
    with pytest.raises(DomainError):
        RadialPotential.salpeter(1.0).scaled(2.0)
    assert (3.0 - parse_potential("r")).constant_offset == 3.0


def test_growth_metadata():
    assert parse_potential("r^4 - r^2").growth_exponent == 4.0
    assert parse_potential("-r^2").growth_exponent is None
    assert parse_potential("-r^4 + r^2").is_confining is False
    assert parse_potential("-salpeter(m=1) + r^2").growth_exponent == 2.0
    assert parse_potential("-r^-1").is_singular
    assert parse_potential("r^2").is_pure_power


def test_fourier_swap_examples():
    h1 = Hamiltonian(RadialPotential.salpeter(1.0) + RadialPotential.power(0.59, 2), RadialPotential.power(3.04, 2))
    swapped = fourier_swap(h1)
    assert swapped.kinetic == RadialPotential.power(3.04, 2)
    assert swapped.potential == RadialPotential.salpeter(1.0) + RadialPotential.power(0.59, 2)

    p_plus_r2 = Hamiltonian(RadialPotential.salpeter(0.0), RadialPotential.power(1.0, 2))
    prob = fourier_swap(p_plus_r2).to_problem()
    assert prob == SchrodingerProblem(1.0, RadialPotential.salpeter(0.0))

    osc = SchrodingerProblem(1.0, RadialPotential.power(1.0, 2))
    assert fourier_swap(osc).to_problem() == osc


def test_fourier_swap_moves_constants():
    h = Hamiltonian(RadialPotential.power(1.0, 2) + 2.0, RadialPotential.power(1.0, 2) + 1.0)
    prob = fourier_swap(h).to_problem()
    assert prob.potential.constant_offset == 3.0


@pytest.mark.parametrize("v", ["r^4", "r^2 + r", "salpeter(m=1)", "-r^2"])
def test_fourier_swap_rejects(v):
    with pytest.raises(UnsupportedSwapError):
        fourier_swap(SchrodingerProblem(1.0, parse_potential(v)))


def test_nonlocal_swap_result_is_not_a_problem():
    h = Hamiltonian(RadialPotential.power(1.0, 2), RadialPotential.power(1.0, 2))
    swapped = fourier_swap(Hamiltonian(RadialPotential.salpeter(0.0) + RadialPotential.power(1.0, 2), RadialPotential.power(1.0, 2)))
    assert swapped.to_problem().kinetic_coefficient == 1.0
    with pytest.raises(UnsupportedSwapError):
        Hamiltonian(RadialPotential.salpeter(1.0), RadialPotential.power(1.0, 1)).to_problem()
    assert h.is_local


def test_swap_preserves_spectrum_when_both_local(config):
    # c p^2 + b r^2 swaps to b p^2 + c r^2
    prob = SchrodingerProblem(0.7, RadialPotential.power(2.3, 2))
    e1 = cross_validate(prob, config).energy
    e2 = cross_validate(fourier_swap(prob).to_problem(), config).energy
    assert e1 == pytest.approx(e2, abs=1e-7)
    assert e1 == pytest.approx(3.0 * math.sqrt(0.7 * 2.3), abs=1e-7)


def test_dominates_examples():
    assert dominates(3.04, parse_potential("r^2"))
    assert not dominates(1.0, parse_potential("r^2"))
    assert not dominates(0.5, parse_potential("r^4"))
    assert dominates(0.01, parse_potential("r"))
    assert dominates(0.01, RadialPotential.salpeter(1.0))
    assert dominates(0.01, parse_potential("-r^4"))
    assert not dominates(0.0, parse_potential("r"))


def test_domination_threshold():
    assert domination_threshold(parse_potential("r^2")) == 1.0
    assert domination_threshold(parse_potential("r")) == 0.0
    assert domination_threshold(parse_potential("r^3")) is None
    assert domination_threshold(parse_potential("-r^3 + 5*r^2")) == 0.0


coefficients = st.floats(0.1, 10.0)
exponents = st.sampled_from([-1.5, -1.0, 0.5, 1.0, 2.0, 3.0, 4.0])


@given(b=st.floats(0.01, 10.0), extra=st.floats(0.0, 10.0), c=st.floats(-5.0, 5.0), q=exponents)
def test_domination_is_monotone(b, extra, c, q):
    if c == 0.0:
        return
    v = RadialPotential.power(c, q)
    if dominates(b, v):
        assert dominates(b + extra + 1e-9, v)


@given(c=coefficients, dc=st.floats(0.0, 5.0), q=exponents, r=st.floats(0.01, 20.0))
def test_evaluate_monotone_in_positive_coefficient(c, dc, q, r):
    base = parse_potential("r^2 - 1")
    lo = evaluate(base + RadialPotential.power(c, q), r)
    hi = evaluate(base + RadialPotential.power(c + dc, q), r)
    assert hi >= lo


@settings(max_examples=50)
@given(terms=st.lists(st.tuples(st.floats(-5, 5).filter(lambda x: abs(x) > 1e-3), exponents), min_size=1, max_size=4))
def test_parse_of_str_roundtrips(terms):
    v = RadialPotential()
    for c, q in terms:
        v = v + RadialPotential.power(c, q)
    assert parse_potential(str(v)) == v
