"""Command-line front end.

Subcommands::

    salpeter-bounds tangential --mass 1 --potential "r^2"
    salpeter-bounds difference --mass 0 --potential "r^2" [--alt]
    salpeter-bounds weyl --alpha 1 --beta 1
    salpeter-bounds solve --potential "r^4 - r^2" [--kinetic 1] [--method cross]
    salpeter-bounds reproduce-paper [--json | --csv]
    salpeter-bounds check [--seed 0]

Exit codes: 0 success, 1 a comparison or property failed (or a solver error),
2 bad input (unparseable potential, bad option or config), 3 optimisation
failure, 4 infeasible domination condition.
"""

from __future__ import annotations

import argparse
import csv
import dataclasses
import io
import json
import math
import sys
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from decimal import ROUND_DOWN, Decimal
from pathlib import Path

import numpy as np

from . import bounds, oracles, scaling
from .errors import (
    DomainError,
    InfeasibleDomainError,
    OptimizationFailureError,
    PotentialParseError,
    SalpeterBoundsError,
)
from .potentials import Hamiltonian, RadialPotential, SchrodingerProblem, fourier_swap, parse_potential
from .radial_solver import (
    DEFAULT_CONFIG,
    SolverConfig,
    cross_validate,
    solve_ground_shooting,
    solve_ground_sturm,
)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_PARSE = 2
EXIT_OPTIMIZATION = 3
EXIT_INFEASIBLE = 4

FOUR_OVER_SQRT_PI = 4.0 / math.sqrt(math.pi)
TWO_OVER_SQRT_PI = 2.0 / math.sqrt(math.pi)

_SOLVER_KEYS = {f.name: f.type for f in dataclasses.fields(SolverConfig)}
_DOMAIN_KEYS = {f.name: f.type for f in dataclasses.fields(bounds.DifferenceDomain)}


def fmt(x) -> str:
    """Seven significant digits for tables."""
    if x is None:
        return "-"
    if isinstance(x, bool):
        return str(x).lower()
    if isinstance(x, (int, np.integer)):
        return str(int(x))
    return f"{float(x):.7g}"


# ---------------------------------------------------------------------------
# report types


@dataclass
class Comparison:
    """A computed number against a reference, with its pass rule.

    ``decimals`` switches from the absolute tolerance to agreement of the
    decimal expansions truncated after that many places.
    """

    label: str
    computed: float
    reference: float
    provenance: str
    tolerance: float | None = None
    decimals: int | None = None
    requires: bool = True
    settings: str = ""

    @property
    def abs_error(self) -> float:
        return abs(self.computed - self.reference)

    @property
    def rel_error(self) -> float:
        return self.abs_error / abs(self.reference) if self.reference else math.inf

    @property
    def rule(self) -> str:
        if self.decimals is not None:
            return f"{self.decimals} dp"
        return f"{self.tolerance:.0e}"

    @property
    def passed(self) -> bool:
        if not self.requires or not math.isfinite(self.computed):
            return False
        if self.decimals is not None:
            q = Decimal(1).scaleb(-self.decimals)
            trunc = lambda x: Decimal(repr(float(x))).quantize(q, rounding=ROUND_DOWN)  # noqa: E731
            return trunc(self.computed) == trunc(self.reference)
        return self.abs_error <= self.tolerance

    def to_dict(self) -> dict:
        return {
            "label": self.label,
            "computed": self.computed,
            "reference": self.reference,
            "abs_error": self.abs_error,
            "rel_error": self.rel_error,
            "provenance": self.provenance,
            "rule": self.rule,
            "passed": self.passed,
            "settings": self.settings,
        }


@dataclass
class PropertyResult:
    name: str
    passed: bool
    detail: str
    falsifying: dict | None = None

    def to_dict(self) -> dict:
        return {
            "kind": "PropertyResult",
            "name": self.name,
            "passed": self.passed,
            "detail": self.detail,
            "falsifying": self.falsifying,
        }


@dataclass
class RunReport:
    command: str
    inputs: dict
    results: list = field(default_factory=list)
    comparisons: list[Comparison] = field(default_factory=list)
    wall_time: float = 0.0

    @property
    def passed(self) -> bool:
        ok = all(c.passed for c in self.comparisons)
        return ok and all(r.passed for r in self.results if isinstance(r, PropertyResult))

    def to_dict(self) -> dict:
        return {
            "command": self.command,
            "inputs": dict(self.inputs),
            "results": [r.to_dict() for r in self.results],
            "comparisons": [c.to_dict() for c in self.comparisons],
            "wall_time": self.wall_time,
        }


def _stringify(obj):
    """Replace every real by its shortest round-tripping decimal string."""
    if isinstance(obj, bool) or obj is None or isinstance(obj, str):
        return obj
    if isinstance(obj, (int, np.integer)):
        return int(obj)
    if isinstance(obj, (float, np.floating)):
        return repr(float(obj))
    if isinstance(obj, dict):
        return {str(k): _stringify(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_stringify(v) for v in obj]
    return str(obj)


def report_json(report: RunReport) -> str:
    return json.dumps(_stringify(report.to_dict()), indent=2)


def comparisons_csv(comparisons: list[Comparison]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["label", "computed", "reference", "abs_error", "rel_error", "provenance"])
    for c in comparisons:
        writer.writerow(
            [c.label, repr(c.computed), repr(c.reference), repr(c.abs_error), repr(c.rel_error), c.provenance]
        )
    return buf.getvalue()


def comparisons_table(comparisons: list[Comparison]) -> str:
    show_settings = any(c.settings for c in comparisons)
    head = ["status", "label", "computed", "reference", "abs_error", "rule", "provenance"]
    if show_settings:
        head.append("settings")
    rows = [head]
    for c in comparisons:
        row = [
            "PASS" if c.passed else "FAIL",
            c.label,
            fmt(c.computed),
            fmt(c.reference),
            f"{c.abs_error:.2e}",
            c.rule,
            c.provenance,
        ]
        if show_settings:
            row.append(c.settings)
        rows.append(row)
    widths = [max(len(r[i]) for r in rows) for i in range(len(head))]
    lines = ["  ".join(cell.ljust(w) for cell, w in zip(r, widths)).rstrip() for r in rows]
    lines.insert(1, "  ".join("-" * w for w in widths))
    return "\n".join(lines)


# ---------------------------------------------------------------------------
# settings


@dataclass(frozen=True)
class Settings:
    solver: SolverConfig = DEFAULT_CONFIG
    domain: bounds.DifferenceDomain = bounds.DifferenceDomain()

    def overrides(self) -> str:
        """Non-default entries, for annotating report rows."""
        parts = []
        for obj, default in ((self.solver, DEFAULT_CONFIG), (self.domain, bounds.DifferenceDomain())):
            for f in dataclasses.fields(obj):
                value = getattr(obj, f.name)
                if value != getattr(default, f.name):
                    parts.append(f"{f.name}={value}")
        return ",".join(parts)

    def to_dict(self) -> dict:
        return {"solver": dataclasses.asdict(self.solver), "domain": dataclasses.asdict(self.domain)}


def _convert(key: str, text: str):
    kind = _SOLVER_KEYS.get(key) or _DOMAIN_KEYS.get(key)
    if "int" in str(kind):
        return int(text)
    if text.strip().lower() in ("none", ""):
        return None
    return float(text)


def read_config(path: Path) -> dict:
    """Parse ``key = value`` lines; ``#`` starts a comment."""
    values = {}
    for number, raw in enumerate(path.read_text().splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise DomainError(f"{path}:{number}: expected key = value, got {raw!r}")
        key, text = (s.strip() for s in line.split("=", 1))
        if key not in _SOLVER_KEYS and key not in _DOMAIN_KEYS:
            raise DomainError(f"{path}:{number}: unknown setting {key!r}")
        try:
            values[key] = _convert(key, text)
        except ValueError as exc:
            raise DomainError(f"{path}:{number}: bad value for {key}: {text!r}") from exc
    return values


def build_settings(args) -> Settings:
    values = read_config(Path(args.config)) if getattr(args, "config", None) else {}
    if getattr(args, "tol", None) is not None:
        values["energy_tolerance"] = args.tol
    solver = {k: v for k, v in values.items() if k in _SOLVER_KEYS}
    domain = {k: v for k, v in values.items() if k in _DOMAIN_KEYS}
    return Settings(SolverConfig(**solver), bounds.DifferenceDomain(**domain))


# ---------------------------------------------------------------------------
# single computations


def cmd_tangential(args, settings: Settings) -> RunReport:
    potential = parse_potential(args.potential)
    res = bounds.tangential_bound(args.mass, potential, settings.solver)
    report = RunReport("tangential", {"mass": args.mass, "potential": str(potential)}, [res])
    if not args.json:
        p = res.optimal_parameters
        trace = [v for _, v in res.optimizer_trace]
        print(f"tangential bound  E <= {fmt(res.bound_value)}")
        print(f"contact point     t = {fmt(p['t'])}  (mu = {fmt(p['mu'])})")
        print(f"tangent           a(t) = {fmt(p['a'])}, b(t) = {fmt(p['b'])}")
        print(f"trace             {len(trace)} evaluations, first {fmt(trace[0])}, best {fmt(min(trace))}")
    return report


def cmd_difference(args, settings: Settings) -> RunReport:
    potential = parse_potential(args.potential)
    fn = bounds.difference_bound_alt if args.alt else bounds.difference_bound
    res = fn(args.mass, potential, settings.solver, settings.domain)
    inputs = {"mass": args.mass, "potential": str(potential), "alt": args.alt}
    report = RunReport("difference", inputs, [res])
    if not args.json:
        name = "E_u(-)" if args.alt else "E_u"
        e1, e2 = res.component_energies
        p = res.optimal_parameters
        print(f"difference bound  {name} = {fmt(res.bound_value)}")
        print(f"parameters        a = {fmt(p['a'])}, b = {fmt(p['b'])}")
        print(f"components        E1 = {fmt(e1)}, E2 = {fmt(e2)}")
        print(f"boundary_infimum  {fmt(res.boundary_infimum)}")
        if res.limit_estimate is not None:
            print(f"limit estimate    {fmt(res.limit_estimate)}")
        for note in res.notes:
            print(f"note              {note}")
    return report


def cmd_weyl(args, settings: Settings) -> RunReport:
    res = bounds.weyl_nonrel_bound(args.alpha, args.beta, settings.solver)
    report = RunReport("weyl", {"alpha": args.alpha, "beta": args.beta}, [res])
    if not args.json:
        e1, e2 = res.component_energies
        print(f"Weyl bound        E_u = {fmt(res.bound_value)}")
        print(f"omega             {fmt(res.optimal_parameters['omega'])}")
        print(f"components        E1 = {fmt(e1)}, E2 = {fmt(e2)}")
    return report


def cmd_solve(args, settings: Settings) -> RunReport:
    problem = SchrodingerProblem(args.kinetic, parse_potential(args.potential))
    solver = {"shooting": solve_ground_shooting, "sturm": solve_ground_sturm, "cross": cross_validate}[args.method]
    res = solver(problem, settings.solver)
    inputs = {"kinetic": args.kinetic, "potential": str(problem.potential), "method": args.method}
    report = RunReport("solve", inputs, [res])
    if not args.json:
        print(f"ground energy     E = {fmt(res.energy)}")
        print(f"method            {res.method.value}")
        print(f"nodes             {res.node_count}")
        print(f"residual          {res.residual:.3e}")
        print(f"r_max             {fmt(res.config_used.r_max)}  ({res.config_used.grid_points} intervals)")
    return report


# ---------------------------------------------------------------------------
# reproduction matrix

PUBLISHED = "published value"
CLOSED = "closed form"

PUBLISHED_AB = {(0, 2): (0.59, 3.04), (1, 2): (0.59, 3.53)}


def _local(c: float, text: str) -> SchrodingerProblem:
    return SchrodingerProblem(c, parse_potential(text))


def _row_solves(s: Settings):
    cases = [
        ("ground state p^2 + r^2", "r^2", 3.0, 1e-6, CLOSED),
        ("ground state p^2 + r^4", "r^4", 3.799673, 2e-6, PUBLISHED),
        ("ground state p^2 + r^4 - r^2", "r^4 - r^2", 2.8345362, 1e-6, PUBLISHED),
        ("Airy constant, ground state p^2 + r", "r", 2.3381074, 1e-6, PUBLISHED),
    ]
    results, comps = [], []
    for label, text, ref, tol, prov in cases:
        res = cross_validate(_local(1.0, text), s.solver)
        results.append(res)
        comps.append(Comparison(label, res.energy, ref, prov, tol))
    return results, comps


def _row_weyl(s: Settings):
    res = bounds.weyl_nonrel_bound(1.0, 1.0, s.solver)
    return [res], [
        Comparison("Weyl bound p^2 + r^4 - r^2, value", res.bound_value, 2.85525, PUBLISHED, 1e-4),
        Comparison("Weyl bound p^2 + r^4 - r^2, omega", res.optimal_parameters["omega"], 0.818584, PUBLISHED, 1e-3),
    ]


def _row_tangential(s: Settings):
    cases = [
        (0.0, "r^2", 2.47644, 1e-4, PUBLISHED),
        (1.0, "r^2", 11.0 / 4.0, 1e-5, CLOSED),
        (0.0, "r", 2.3461, 1e-4, PUBLISHED),
    ]
    results, comps = [], []
    for m, text, ref, tol, prov in cases:
        res = bounds.tangential_bound(m, parse_potential(text), s.solver)
        results.append(res)
        comps.append(Comparison(f"tangential bound m={m:g}, V={text}", res.bound_value, ref, prov, tol))
    return results, comps


def _row_exact_oscillator(s: Settings):
    res = cross_validate(fourier_swap(_hamiltonian(1.0, "r^2")).to_problem(), s.solver)
    return [res], [
        Comparison("exact sqrt(1+p^2) + r^2 (6 significant digits)", res.energy, 2.664016, PUBLISHED, decimals=5)
    ]


def _hamiltonian(m: float, text: str) -> Hamiltonian:
    """``sqrt(m^2 + p^2) + V(r)``."""
    return Hamiltonian(RadialPotential.salpeter(m), parse_potential(text))


def _row_difference(m: float, published: float, e1_pub: float, e2_pub: float):
    def run(s: Settings):
        v = parse_potential("r^2")
        res = bounds.difference_bound(m, v, s.solver, s.domain)
        a, b = PUBLISHED_AB[(int(m), 2)]
        e1, e2 = bounds.component_energies(m, v, a, b, s.solver)
        tag = f"m={m:g}, V=r^2"
        return [res], [
            Comparison(f"difference bound {tag}", res.bound_value, published, PUBLISHED, 5e-4),
            Comparison(f"E1 - E2 at a={a}, b={b}, {tag}", e1 - e2, published, PUBLISHED, 5e-4),
            Comparison(f"E1 at a={a}, b={b}, {tag}", e1, e1_pub, PUBLISHED, 5e-5),
            Comparison(f"E2 at a={a}, b={b}, {tag}", e2, e2_pub, PUBLISHED, 5e-5),
        ]

    return run


def _row_difference_linear(s: Settings):
    res = bounds.difference_bound(0.0, parse_potential("r"), s.solver, s.domain)
    limit = res.limit_estimate if res.limit_estimate is not None else float("nan")
    return [res], [
        Comparison(
            "difference bound m=0, V=r (boundary infimum)",
            limit,
            FOUR_OVER_SQRT_PI,
            CLOSED + " 4/sqrt(pi)",
            1e-5,
            requires=res.boundary_infimum,
        )
    ]


def _row_linear_limit(s: Settings):
    rep = oracles.linear_case_limit_check(config=s.solver)
    return [], [
        Comparison(
            "E1(s^4,s^4) - E2(s^4,s^4) at s=5, V=r (decreasing in s)",
            rep.values[-1],
            FOUR_OVER_SQRT_PI,
            CLOSED + " 4/sqrt(pi)",
            1e-2,
            requires=rep.monotone_decreasing,
        )
    ]


def _row_hermite(s: Settings):
    conv = oracles.hermite_convergence((1, 8, 16, 24, 32))
    return [], [
        Comparison("Hermite basis bottom of p + r, N=32", conv[32], 2.2322, PUBLISHED, decimals=4),
        Comparison("Hermite basis bottom of p + r, N=1", conv[1], FOUR_OVER_SQRT_PI, CLOSED + " 4/sqrt(pi)", 1e-6),
    ]


def _row_slope(s: Settings):
    slope = oracles.perturbed_oscillator_slope(config=s.solver)
    return [], [Comparison("slope de/dlambda of p^2 + r^2 + lambda r", slope, TWO_OVER_SQRT_PI, CLOSED + " 2/sqrt(pi)", 1e-4)]


MATRIX = [
    _row_solves,
    _row_weyl,
    _row_tangential,
    _row_exact_oscillator,
    _row_difference(0.0, 2.3433, 5.63456, 3.29126),
    _row_difference(1.0, 2.6689, 6.33418, 3.66528),
    _row_difference_linear,
    _row_linear_limit,
    _row_hermite,
    _row_slope,
]


def reproduction_matrix(settings: Settings = Settings(), workers: int | None = None):
    """Run every row (in parallel); returns ``(results, comparisons)`` in a fixed order."""
    with ThreadPoolExecutor(max_workers=workers) as pool:
        outputs = list(pool.map(lambda row: row(settings), MATRIX))
    results, comps = [], []
    tag = settings.overrides()
    for res, cs in outputs:
        results.extend(res)
        for c in cs:
            c.settings = tag
            comps.append(c)
    return results, comps


def cmd_reproduce(args, settings: Settings) -> RunReport:
    results, comps = reproduction_matrix(settings)
    report = RunReport("reproduce-paper", {"settings": settings.to_dict()}, results, comps)
    if args.csv:
        sys.stdout.write(comparisons_csv(comps))
    elif not args.json:
        print(comparisons_table(comps))
        failed = sum(not c.passed for c in comps)
        print(f"\n{len(comps) - failed}/{len(comps)} rows pass")
    return report


# ---------------------------------------------------------------------------
# property checks


def prop_tangent_dominance(rng: np.random.Generator, samples: int = 4000) -> PropertyResult:
    worst = None
    for _ in range(samples):
        m = float(rng.choice([0.0, 0.5, 1.0, 2.0]))
        t = float(np.exp(rng.uniform(np.log(1e-3), np.log(100.0 * (m * m + 1.0)))))
        x = float(rng.uniform(0.0, 100.0 * (m * m + 1.0)))
        tc = bounds.tangent_coefficients(m, t)
        slack = tc.a * x + tc.b - math.sqrt(m * m + x)
        if worst is None or slack < worst[0]:
            worst = (slack, {"m": m, "t": t, "x": x, "slack": slack})
    ok = worst[0] >= -1e-12
    return PropertyResult(
        "tangent_dominance",
        ok,
        f"{samples} samples, min slack {worst[0]:.3e}",
        None if ok else worst[1],
    )


def prop_weyl_inequality(rng: np.random.Generator, settings: Settings, samples: int = 50) -> PropertyResult:
    v = parse_potential("r^2")
    worst = None
    for m in (0.0, 1.0):
        reference = bounds.exact_oscillator_energy(m, v, settings.solver)
        for _ in range(samples):
            a = float(np.exp(rng.uniform(np.log(0.05), np.log(20.0))))
            b = float(np.exp(rng.uniform(np.log(1.001), np.log(20.0))))
            chk = bounds.weyl_inequality_check(m, v, a, b, settings.solver, reference=reference)
            if worst is None or chk.slack < worst[0]:
                worst = (chk.slack, {"m": m, "a": a, "b": b, "E1": chk.e1, "E2": chk.e2, "E": reference})
    ok = worst[0] >= -1e-6
    return PropertyResult(
        "weyl_inequality",
        ok,
        f"{2 * samples} (a, b) points, min slack {worst[0]:.3e}",
        None if ok else worst[1],
    )


def prop_scaling_roundtrip(rng: np.random.Generator, settings: Settings, samples: int = 5) -> PropertyResult:
    worst = (0.0, None)
    for q in (1.0, 2.0, 4.0):
        base = scaling.base_energy(q, settings.solver)
        for _ in range(samples):
            v = float(rng.uniform(0.1, 10.0))
            c = float(rng.uniform(0.5, 2.0))
            direct = cross_validate(
                SchrodingerProblem(c, RadialPotential.power(v, q)), settings.solver
            ).energy
            predicted = scaling.scale_kinetic(base, c, v)
            via_coupling = scaling.scale_energy(base, v * c ** (q / 2.0))
            err = max(abs(predicted - direct) / abs(direct), abs(predicted - via_coupling) / abs(direct))
            if err > worst[0]:
                worst = (err, {"q": q, "c": c, "v": v, "direct": direct, "scaled": predicted})
    ok = worst[0] <= 1e-5
    return PropertyResult(
        "scaling_roundtrip",
        ok,
        f"{3 * samples} couplings, max relative error {worst[0]:.3e}",
        None if ok else worst[1],
    )


def prop_airy_triangle(settings: Settings) -> PropertyResult:
    from scipy.special import ai_zeros

    routes = {
        "solve p^2 + r": oracles.airy_zero(settings.solver),
        "swap of p + r^2": cross_validate(
            fourier_swap(_hamiltonian(0.0, "r^2")).to_problem(), settings.solver
        ).energy,
        "scipy ai_zeros": -float(ai_zeros(1)[0][0]),
    }
    names = list(routes)
    gap = max(abs(routes[x] - routes[y]) for i, x in enumerate(names) for y in names[i + 1:])
    tangential = bounds.tangential_bound(0.0, parse_potential("r"), settings.solver).bound_value
    z = routes["solve p^2 + r"]
    closed = (4.0 / 3.0) * (3.0 * z**3 / 4.0) ** 0.25
    gap = max(gap, abs(tangential - closed))
    ok = gap <= 1e-5
    detail = ", ".join(f"{k} {fmt(v)}" for k, v in routes.items())
    return PropertyResult(
        "airy_triangle",
        ok,
        f"{detail}; tangential p + r {fmt(tangential)} vs closed form {fmt(closed)}; max gap {gap:.2e}",
        None if ok else {**routes, "tangential": tangential, "closed_form": closed},
    )


def matrix_problems(settings: Settings) -> dict[str, SchrodingerProblem]:
    """Every local problem solved by the reproduction matrix at a fixed point."""
    probs = {
        "p^2 + r^2": _local(1.0, "r^2"),
        "p^2 + r^4": _local(1.0, "r^4"),
        "p^2 + r^4 - r^2": _local(1.0, "r^4 - r^2"),
        "p^2 + r": _local(1.0, "r"),
        "p^2 + sqrt(1+r^2)": fourier_swap(_hamiltonian(1.0, "r^2")).to_problem(),
    }
    for (m, _), (a, b) in PUBLISHED_AB.items():
        probs[f"H1 m={m} a={a} b={b}"] = fourier_swap(bounds._oscillator_hamiltonian(m, a, b, +1)).to_problem()
        probs[f"H2 m={m} a={a} b={b}"] = SchrodingerProblem(a, RadialPotential.power(b - 1.0, 2))
    for m, text in ((0.0, "r^2"), (1.0, "r^2"), (0.0, "r")):
        t = bounds.tangential_bound(m, parse_potential(text), settings.solver).optimal_parameters["t"]
        tc = bounds.tangent_coefficients(m, t)
        probs[f"tangential m={m:g} V={text}"] = SchrodingerProblem(tc.a, parse_potential(text))
    return probs


def prop_cross_oracle(settings: Settings) -> PropertyResult:
    limit = 10.0 * settings.solver.energy_tolerance
    worst = (0.0, None)
    for name, problem in matrix_problems(settings).items():
        shoot = solve_ground_shooting(problem, settings.solver).energy
        sturm = solve_ground_sturm(problem, settings.solver).energy
        gap = abs(shoot - sturm)
        if gap >= worst[0]:
            worst = (gap, {"problem": name, "shooting": shoot, "sturm": sturm})
    ok = worst[0] <= limit
    return PropertyResult(
        "cross_oracle_agreement",
        ok,
        f"max |shooting - sturm| {worst[0]:.2e} (limit {limit:.1e}) at {worst[1]['problem']}",
        None if ok else worst[1],
    )


def prop_hermite(settings: Settings) -> PropertyResult:
    gram = oracles.hermite_gram_matrix(oracles.HermiteBasisSpec(32))
    gram_err = float(np.max(np.abs(gram - np.eye(32))))
    conv = oracles.hermite_convergence((8, 16, 24, 32))
    values = list(conv.values())
    nested = all(b <= a for a, b in zip(values, values[1:]))
    ok = gram_err <= 1e-12 and nested
    return PropertyResult(
        "hermite_basis",
        ok,
        f"Gram error {gram_err:.1e}; N = 8, 16, 24, 32 -> " + ", ".join(fmt(v) for v in values),
        None if ok else {"gram_error": gram_err, "values": values},
    )


def run_checks(seed: int = 0, settings: Settings = Settings()) -> list[PropertyResult]:
    rng = np.random.default_rng(seed)
    checks = [
        lambda: prop_tangent_dominance(rng),
        lambda: prop_weyl_inequality(rng, settings),
        lambda: prop_scaling_roundtrip(rng, settings),
        lambda: prop_airy_triangle(settings),
        lambda: prop_cross_oracle(settings),
        lambda: prop_hermite(settings),
    ]
    names = ["tangent_dominance", "weyl_inequality", "scaling_roundtrip", "airy_triangle",
             "cross_oracle_agreement", "hermite_basis"]
    out = []
    for name, check in zip(names, checks):
        try:
            out.append(check())
        except SalpeterBoundsError as exc:
            out.append(PropertyResult(name, False, f"{type(exc).__name__}: {exc}", {"error": str(exc)}))
    return out


def cmd_check(args, settings: Settings) -> RunReport:
    results = run_checks(args.seed, settings)
    report = RunReport("check", {"seed": args.seed, "settings": settings.to_dict()}, results)
    if args.csv:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["name", "passed", "detail"])
        for r in results:
            writer.writerow([r.name, r.passed, r.detail])
        sys.stdout.write(buf.getvalue())
    elif not args.json:
        for r in results:
            print(f"{'PASS' if r.passed else 'FAIL'} {r.name}: {r.detail}")
            if r.falsifying:
                print(f"     falsifying instance: {json.dumps(_stringify(r.falsifying))}")
    return report


# ---------------------------------------------------------------------------
# entry point


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--tol", type=float, help="solver energy tolerance (overrides the config file)")
    common.add_argument("--config", help="key = value file overriding solver and search-box settings")
    common.add_argument("--json", action="store_true", help="print the run report as JSON")

    parser = argparse.ArgumentParser(
        prog="salpeter-bounds",
        description="Schrodinger-operator upper bounds on spinless Salpeter ground states.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("tangential", parents=[common], help="best tangential (envelope) bound")
    p.add_argument("--mass", type=float, required=True)
    p.add_argument("--potential", required=True, help='e.g. "r^2", "0.5*r^4 - r^2", "salpeter(m=1)"')
    p.set_defaults(func=cmd_tangential)

    p = sub.add_parser("difference", parents=[common], help="oscillator difference bound")
    p.add_argument("--mass", type=float, required=True)
    p.add_argument("--potential", required=True)
    p.add_argument("--alt", action="store_true", help="use the alternative orientation E2(-) - E1(-)")
    p.set_defaults(func=cmd_difference)

    p = sub.add_parser("weyl", parents=[common], help="nonrelativistic p^2 + alpha r^4 - beta r^2 bound")
    p.add_argument("--alpha", type=float, default=1.0)
    p.add_argument("--beta", type=float, default=1.0)
    p.set_defaults(func=cmd_weyl)

    p = sub.add_parser("solve", parents=[common], help="ground state of c p^2 + V(r)")
    p.add_argument("--potential", required=True)
    p.add_argument("--kinetic", type=float, default=1.0, help="coefficient c of p^2")
    p.add_argument("--method", choices=["shooting", "sturm", "cross"], default="cross")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("reproduce-paper", parents=[common], help="computed vs published values")
    p.add_argument("--csv", action="store_true")
    p.set_defaults(func=cmd_reproduce)

    p = sub.add_parser("check", parents=[common], help="sampled property checks")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--csv", action="store_true")
    p.set_defaults(func=cmd_check)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    start = time.perf_counter()
    try:
        settings = build_settings(args)
        report = args.func(args, settings)
    except (PotentialParseError, DomainError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except OptimizationFailureError as exc:
        print(f"optimisation failed: {exc}", file=sys.stderr)
        return EXIT_OPTIMIZATION
    except InfeasibleDomainError as exc:
        print(f"infeasible: {exc}", file=sys.stderr)
        return EXIT_INFEASIBLE
    except SalpeterBoundsError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_FAILED
    report.wall_time = time.perf_counter() - start
    if args.json:
        print(report_json(report))
    return EXIT_OK if report.passed else EXIT_FAILED


if __name__ == "__main__":
    sys.exit(main())
