"""Derivative-free minimisers used by the bound constructions."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable

from .errors import OptimizationFailureError

INV_PHI = (math.sqrt(5.0) - 1.0) / 2.0


@dataclass
class Trace:
    """Records every objective evaluation in call order."""

    fn: Callable[[float], float]
    points: list[tuple[float, float]] = field(default_factory=list)

    def __call__(self, x: float) -> float:
        y = self.fn(x)
        self.points.append((x, y))
        return y


def bracket_minimum(f, x0: float, step: float = 0.5, lower: float = -40.0, upper: float = 40.0, max_iter: int = 80):
    """Geometric expansion from ``x0`` until ``f`` rises on both sides.

    Returns ``(a, b, c)`` with ``a < b < c`` and ``f(b) <= min(f(a), f(c))``.
    """
    fa, fb = f(x0 - step), f(x0)
    a, b = x0 - step, x0
    if fa < fb:
        a, b, fa, fb = b, a, fb, fa
        step = -step
    c = b + step
    fc = f(c)
    it = 0
    while fc < fb:
        it += 1
        if it > max_iter or not lower <= c <= upper:
            side = "lower" if step < 0 else "upper"
            raise OptimizationFailureError(
                f"objective still decreasing towards the {side} end of the search interval "
                f"(x = {c:.6g}, f = {fc:.10g}); no interior minimum"
            )
        step *= 2.0
        a, fa, b, fb = b, fb, c, fc
        c = b + step
        fc = f(c)
    lo, hi = sorted((a, c))
    return lo, b, hi


def golden_section(f, lo: float, hi: float, width: float = 1e-8, max_iter: int = 200) -> tuple[float, float]:
    """Minimise a unimodal ``f`` on ``[lo, hi]``; returns ``(x_min, f_min)``."""
    x1 = hi - INV_PHI * (hi - lo)
    x2 = lo + INV_PHI * (hi - lo)
    f1, f2 = f(x1), f(x2)
    for _ in range(max_iter):
        if hi - lo <= width:
            break
        if f1 <= f2:
            hi, x2, f2 = x2, x1, f1
            x1 = hi - INV_PHI * (hi - lo)
            f1 = f(x1)
        else:
            lo, x1, f1 = x1, x2, f2
            x2 = lo + INV_PHI * (hi - lo)
            f2 = f(x2)
    return (x1, f1) if f1 <= f2 else (x2, f2)


def minimize_1d(f, x0: float, width: float = 1e-8) -> tuple[float, float]:
    lo, _, hi = bracket_minimum(f, x0)
    return golden_section(f, lo, hi, width)


def aitken_limit(values: list[float]) -> float:
    """Delta-squared extrapolation from the last three terms of a convergent sequence."""
    if len(values) < 3:
        return values[-1]
    x0, x1, x2 = values[-3:]
    denom = (x2 - x1) - (x1 - x0)
    if denom == 0.0 or abs(x2 - x1) >= abs(x1 - x0):
        return x2
    return x2 - (x2 - x1) ** 2 / denom
