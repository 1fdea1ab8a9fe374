"""Acceptance criteria 1-16, each at its stated tolerance.

Every test prints one ``[PASS]``/``[FAIL]`` line; the lines are repeated
in the pytest terminal summary.  ``python tests/test_acceptance.py`` runs
the same checks without pytest.
"""

from __future__ import annotations

import functools
import math
import sys
from decimal import ROUND_DOWN, Decimal

import numpy as np

try:
    import pytest
    from conftest import ACCEPTANCE_LINES
except ImportError:  # run as a script
    pytest = None
    ACCEPTANCE_LINES = {}

from salpeter_bounds import bounds, cli, oracles
from salpeter_bounds.potentials import Hamiltonian, RadialPotential, SchrodingerProblem, fourier_swap, parse_potential
from salpeter_bounds.radial_solver import DEFAULT_CONFIG, cross_validate, solve_ground_shooting, solve_ground_sturm

FOUR_OVER_SQRT_PI = 4.0 / math.sqrt(math.pi)


def truncated(x: float, places: int) -> Decimal:
    return Decimal(repr(float(x))).quantize(Decimal(1).scaleb(-places), rounding=ROUND_DOWN)


def solve(text: str) -> float:
    return cross_validate(SchrodingerProblem(1.0, parse_potential(text))).energy


@functools.cache
def difference(m: float, text: str) -> bounds.BoundResult:
    return bounds.difference_bound(m, parse_potential(text))


@functools.cache
def tangential(m: float, text: str) -> bounds.BoundResult:
    return bounds.tangential_bound(m, parse_potential(text))


@functools.cache
def exact_m1() -> float:
    h = Hamiltonian(RadialPotential.salpeter(1.0), parse_potential("r^2"))
    return cross_validate(fourier_swap(h).to_problem()).energy


def within(x: float, ref: float, tol: float) -> bool:
    return abs(x - ref) <= tol


# -- criteria: each returns (passed, detail) ---------------------------------


def c01():
    e = solve("r^2")
    return within(e, 3.0, 1e-6), f"e2 = {e:.10f} vs 3, tol 1e-6"


def c02():
    e = solve("r^4")
    return within(e, 3.799673, 2e-6), f"e4 = {e:.10f} vs 3.799673, tol 2e-6"


def c03():
    e = solve("r^4 - r^2")
    return within(e, 2.8345362, 1e-6), f"E = {e:.10f} vs 2.8345362, tol 1e-6"


def c04():
    res = bounds.weyl_nonrel_bound(1.0, 1.0)
    w = res.optimal_parameters["omega"]
    ok_v = within(res.bound_value, 2.85525, 1e-4)
    ok_w = within(w, 0.818584, 1e-3)
    return ok_v and ok_w, (
        f"E_u = {res.bound_value:.7f} vs 2.85525 ({'ok' if ok_v else 'off'}); "
        f"omega = {w:.6f} vs 0.818584 ({'ok' if ok_w else 'off'}, omega^(1/4) = {w ** 0.25:.6f})"
    )


def c05():
    e = oracles.airy_zero()
    return within(e, 2.3381074, 1e-6), f"-z0 = {e:.10f} vs 2.3381074, tol 1e-6"


def c06():
    cases = [(0.0, "r^2", 2.47644, 1e-4), (1.0, "r^2", 11 / 4, 1e-5), (0.0, "r", 2.3461, 1e-4)]
    parts, ok = [], True
    for m, v, ref, tol in cases:
        val = tangential(m, v).bound_value
        ok &= within(val, ref, tol)
        parts.append(f"m={m:g},{v}: {val:.7f} vs {ref:g}")
    return ok, "; ".join(parts)


def c07():
    e = exact_m1()
    sixth = truncated(e, 5) == truncated(2.664016, 5)
    return sixth and abs(e - 2.664016) < 5e-6, (
        f"E = {e:.9f}; first 6 digits {truncated(e, 5)} vs {truncated(2.664016, 5)}; "
        f"7th digit supported by the solver: {str(truncated(e, 6))[-1]} "
        f"(quoted alternatives 2.6640196, 2.6640167)"
    )


def c08():
    parts, ok = [], True
    for m, ref, (pa, pb) in ((0.0, 2.3433, (0.59, 3.04)), (1.0, 2.6689, (0.59, 3.53))):
        res = difference(m, "r^2")
        a, b = res.optimal_parameters["a"], res.optimal_parameters["b"]
        e1, e2 = bounds.component_energies(m, parse_potential("r^2"), pa, pb)
        value_ok = within(res.bound_value, ref, 5e-4)
        where_ok = abs(a - pa) <= 0.05 and abs(b - pb) <= 0.05
        flat_ok = abs((e1 - e2) - res.bound_value) <= 5e-4
        ok &= value_ok and (where_ok or flat_ok)
        parts.append(
            f"m={m:g}: E_u = {res.bound_value:.6f} vs {ref} at ({a:.4g}, {b:.4g}); "
            f"objective at ({pa}, {pb}) = {e1 - e2:.6f}"
        )
    return ok, "; ".join(parts)


def c09():
    rep = oracles.linear_case_limit_check((2.0, 3.0, 4.0, 5.0))
    ok = within(rep.values[-1], FOUR_OVER_SQRT_PI, 1e-2) and rep.monotone_decreasing
    vals = ", ".join(f"{v:.8f}" for v in rep.values)
    return ok, f"s = 2..5: {vals}; decreasing = {rep.monotone_decreasing}"


def c10():
    conv = oracles.hermite_convergence((1, 8, 16, 24, 32))
    ok32 = truncated(conv[32], 4) == Decimal("2.2322")
    ok1 = within(conv[1], FOUR_OVER_SQRT_PI, 1e-6)
    return ok32 and ok1, f"N=32: {conv[32]:.8f} (4 places {truncated(conv[32], 4)}); N=1: {conv[1]:.10f}"


def c11():
    s = oracles.perturbed_oscillator_slope()
    return within(s, 1.1283792, 1e-4), f"slope = {s:.9f} vs 1.1283792, tol 1e-4"


def c12():
    res = cli.prop_tangent_dominance(np.random.default_rng(12), samples=4000)
    return res.passed, res.detail


def c13():
    res = cli.prop_weyl_inequality(np.random.default_rng(13), cli.Settings(), samples=50)
    return res.passed, res.detail


def c14():
    exact = {(0.0, "r^2"): bounds.exact_oscillator_energy(0.0, parse_potential("r^2")),
             (1.0, "r^2"): exact_m1(),
             (0.0, "r"): oracles.hermite_nonlocal_solver()}
    parts, ok = [], True
    for (m, v), e in exact.items():
        d, t = difference(m, v).bound_value, tangential(m, v).bound_value
        ok &= d < t - 1e-3 and d >= e - 1e-6 and t >= e - 1e-6
        parts.append(f"m={m:g},{v}: {e:.6f} <= {d:.6f} < {t:.6f}")
    return ok, "; ".join(parts)


def c15():
    res = cli.prop_scaling_roundtrip(np.random.default_rng(15), cli.Settings(), samples=5)
    return res.passed, res.detail


def c16():
    limit = 10 * DEFAULT_CONFIG.energy_tolerance
    worst, where = 0.0, ""
    for name, prob in cli.matrix_problems(cli.Settings()).items():
        gap = abs(solve_ground_shooting(prob).energy - solve_ground_sturm(prob).energy)
        if gap >= worst:
            worst, where = gap, name
    return worst <= limit, f"max |shooting - sturm| = {worst:.2e} at {where}, limit {limit:.0e}"


CRITERIA = {
    1: ("oscillator e2", c01),
    2: ("quartic e4", c02),
    3: ("quartic minus quadratic exact", c03),
    4: ("Weyl nonrelativistic bound and omega", c04),
    5: ("Airy constant", c05),
    6: ("tangential bounds", c06),
    7: ("exact massive oscillator to 6 digits", c07),
    8: ("difference bounds and their location", c08),
    9: ("linear limit 4/sqrt(pi)", c09),
    10: ("Hermite oracle", c10),
    11: ("perturbative slope", c11),
    12: ("tangent dominance sampling", c12),
    13: ("Weyl inequality sampling", c13),
    14: ("bound validity and ordering", c14),
    15: ("scaling round trips", c15),
    16: ("cross-oracle agreement", c16),
}


def evaluate(number: int) -> tuple[bool, str]:
    name, fn = CRITERIA[number]
    ok, detail = fn()
    line = f"[{'PASS' if ok else 'FAIL'}] {number:2d} {name}: {detail}"
    ACCEPTANCE_LINES[number] = line
    print(line)
    return ok, line


if pytest is not None:

    @pytest.mark.parametrize("number", sorted(CRITERIA), ids=lambda n: f"{n:02d}-{CRITERIA[n][0].replace(' ', '_')}")
    def test_criterion(number):
        ok, line = evaluate(number)
        assert ok, line


if __name__ == "__main__":
    results = [evaluate(n)[0] for n in sorted(CRITERIA)]
    print(f"{sum(results)}/{len(results)} criteria pass")
    sys.exit(0 if all(results) else 1)
