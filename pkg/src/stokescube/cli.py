"""Command-line front end: configures and runs the verification suites.

Every closed form in the library is exercised by at least one check when all
suites run.  A check compares a computed quantity against a reference at a
stated tolerance (two-sided for equality claims, one-sided for bounds) and is
reported as ``pass`` or ``fail``; the W-family directional sup-norm records
are reported as ``adjudicated`` instead, carrying both the formula and the
oracle value without asserting either.

Randomized inputs (sample points, directions, shifts) are drawn from
numpy's PCG64 generator, seeded per suite from ``SuiteConfig.seed`` through
``SeedSequence(seed, spawn_key=(suite_index,))``, so a fixed configuration
reproduces the same samples regardless of which suites are selected.

Exit codes: 0 when every check passes or is adjudicated, 1 when any check
fails (or the report cannot be written), 2 on a usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
import time
from dataclasses import asdict, dataclass, field

import numpy as np

from . import __version__
from .eigenbasis import (
    PI,
    PI3,
    Mode,
    QuadSpec,
    divergence,
    eigenvalue,
    enumerate_modes,
    evaluate,
    factorization_residual,
    fd_residual,
    grad_inner_product,
    gram_matrix,
)
from .errors import AccuracyError, IntegrityError
from .gamma_opt import (
    K0,
    K1,
    K2,
    SphereSearchSpec,
    find_sigma,
    g_profile,
    gamma,
    gamma_max_closed,
    gamma_max_oracle,
    gamma_restricted,
)
from .integrals import (
    IntegralQuery,
    SumSpec,
    closed_integral,
    combined_sum_bound,
    family_sum_bound,
    family_sum_partial,
    quad_integral,
    upsilon,
    upsilon_db,
)
from .supnorms import (
    Direction,
    GridSpec,
    case22_value,
    corner_profile,
    dir_sup_norm_sq,
    dir_sup_norm_sq_raw,
    grid_sup_sq_oracle,
    grid_sup_sq_oracle_batch,
    sup_norm_sq,
)

SUITES = ("basis", "supnorms", "integrals", "sums", "gamma")
FORMATS = ("json", "csv", "text")

# Frozen spot values; each is derived next to its twin in the test suite.
_SQRT_2_PI3 = math.sqrt(2.0 / PI3)            # X0(1,1) peak, second component
_W_AXIS_PEAK = 0.41473869320782053            # 4 sqrt(2) / sqrt(6 pi^3)


@dataclass(frozen=True)
class SuiteConfig:
    """Run configuration; the defaults reproduce the acceptance-scale run."""

    suites: tuple[str, ...] = SUITES
    max_index: int = 4
    grid_2d: int = 400
    grid_3d: int = 120
    quad_tol: float = 1e-8
    seed: int = 0
    output_format: str = "text"
    out_path: str | None = None


@dataclass
class CheckResult:
    check_id: str
    status: str
    computed: float
    reference: float
    tolerance: float
    elapsed_ms: float
    note: str = ""


@dataclass
class Report:
    config: SuiteConfig
    results: list[CheckResult] = field(default_factory=list)

    def counts(self) -> tuple[int, int, int]:
        passed = sum(1 for r in self.results if r.status == "pass")
        failed = sum(1 for r in self.results if r.status == "fail")
        adjudicated = sum(1 for r in self.results
                          if r.status == "adjudicated")
        return passed, failed, adjudicated


# --------------------------------------------------------------------------
# Argument parsing.

def _positive_int(value: str) -> int:
    n = int(value)
    if n < 1:
        raise argparse.ArgumentTypeError(f"must be a positive integer: {value}")
    return n


def _grid_points(value: str) -> int:
    n = int(value)
    if n < 8:
        raise argparse.ArgumentTypeError(f"grid needs at least 8 points: {value}")
    return n


def _positive_float(value: str) -> float:
    x = float(value)
    if not x > 0.0:
        raise argparse.ArgumentTypeError(f"must be positive: {value}")
    return x


def _seed(value: str) -> int:
    n = int(value)
    if not 0 <= n < 2 ** 64:
        raise argparse.ArgumentTypeError(f"seed must fit in 64 bits: {value}")
    return n


def parse_config(argv: list[str] | None = None) -> SuiteConfig:
    """Parse CLI flags into a :class:`SuiteConfig`.

    Unknown flags and invalid values terminate with exit code 2 and a
    message on stderr (argparse behaviour).
    """
    parser = argparse.ArgumentParser(
        prog="stokescube",
        description="Certify the closed-form eigenfield bounds against "
                    "brute-force oracles and report per-check results.")
    parser.add_argument("--suite", action="append", choices=SUITES,
                        metavar="NAME", dest="suites",
                        help="suite to run (repeatable; default: all of "
                             + ", ".join(SUITES) + ")")
    parser.add_argument("--max-index", type=_positive_int, default=4,
                        help="largest wavenumber index per axis (default 4)")
    parser.add_argument("--grid2d", type=_grid_points, default=400,
                        help="grid points per axis for planar searches "
                             "(default 400)")
    parser.add_argument("--grid3d", type=_grid_points, default=120,
                        help="grid points per axis for full-cube searches "
                             "(default 120)")
    parser.add_argument("--quad-tol", type=_positive_float, default=1e-8,
                        help="absolute quadrature target for the angular and "
                             "planar integrals; the octant integrals use "
                             "100x this value (default 1e-8)")
    parser.add_argument("--seed", type=_seed, default=0,
                        help="seed for all sampled points and directions "
                             "(default 0)")
    parser.add_argument("--format", choices=FORMATS, default="text",
                        dest="output_format", help="report format")
    parser.add_argument("--out", metavar="FILE", default=None,
                        dest="out_path",
                        help="write the report to FILE instead of stdout")
    args = parser.parse_args(argv)
    suites = tuple(s for s in SUITES if s in (args.suites or SUITES))
    return SuiteConfig(suites=suites, max_index=args.max_index,
                       grid_2d=args.grid2d, grid_3d=args.grid3d,
                       quad_tol=args.quad_tol, seed=args.seed,
                       output_format=args.output_format,
                       out_path=args.out_path)


# --------------------------------------------------------------------------
# Check recording.

class _Recorder:
    def __init__(self):
        self.results: list[CheckResult] = []
        self._mark = time.perf_counter()

    def _elapsed(self) -> float:
        now = time.perf_counter()
        ms = (now - self._mark) * 1000.0
        self._mark = now
        return ms

    def eq(self, check_id: str, computed: float, reference: float,
           tol: float, note: str = "") -> None:
        status = "pass" if abs(computed - reference) <= tol else "fail"
        self.results.append(CheckResult(check_id, status, float(computed),
                                        float(reference), float(tol),
                                        self._elapsed(), note))

    def le(self, check_id: str, computed: float, reference: float,
           tol: float, note: str = "") -> None:
        status = "pass" if computed <= reference + tol else "fail"
        self.results.append(CheckResult(check_id, status, float(computed),
                                        float(reference), float(tol),
                                        self._elapsed(), note))

    def adjudicated(self, check_id: str, computed: float, reference: float,
                    note: str = "") -> None:
        self.results.append(CheckResult(check_id, "adjudicated",
                                        float(computed), float(reference),
                                        0.0, self._elapsed(), note))

    def failure(self, check_id: str, note: str) -> None:
        self.results.append(CheckResult(check_id, "fail", math.nan, math.nan,
                                        0.0, self._elapsed(), note))


def _suite_rng(config: SuiteConfig, suite: str) -> np.random.Generator:
    index = SUITES.index(suite)
    return np.random.Generator(np.random.PCG64(
        np.random.SeedSequence(config.seed, spawn_key=(index,))))


def _random_direction(rng: np.random.Generator) -> Direction:
    v = rng.standard_normal(3)
    v /= np.linalg.norm(v)
    return Direction(*(float(t) for t in v))


def _random_point(rng: np.random.Generator, margin: float = 0.05):
    return tuple(float(t) for t in rng.uniform(margin, PI - margin, 3))


def _planar_modes(kmax: int) -> list[Mode]:
    out = []
    for i in range(1, kmax + 1):
        for j in range(1, kmax + 1):
            out.extend([Mode.x0(i, j), Mode.y0(i, j), Mode.z0(i, j)])
    return out


def _full_modes(family: str, kmax: int) -> list[Mode]:
    ctor = Mode.v if family == "V" else Mode.w
    return [ctor(m, n, p)
            for m in range(1, kmax + 1)
            for n in range(1, kmax + 1)
            for p in range(1, kmax + 1)]


def _mode_tag(mode: Mode) -> str:
    return f"{mode.family}_{mode.m}_{mode.n}_{mode.p}"


# --------------------------------------------------------------------------
# Suites.

def _run_basis(config: SuiteConfig, rec: _Recorder,
               rng: np.random.Generator) -> None:
    rec.eq("basis.eigenvalue.X0_0_1_1", eigenvalue(Mode.x0(1, 1)), 2, 0)
    rec.eq("basis.eigenvalue.W_1_1_1", eigenvalue(Mode.w(1, 1, 1)), 3, 0)
    rec.eq("basis.eigenvalue.Z0_2_3_0", eigenvalue(Mode.z0(2, 3)), 13, 0)

    rec.eq("basis.enumerate.count_lambda_2", len(enumerate_modes(2)), 3, 0)
    rec.eq("basis.enumerate.count_lambda_3", len(enumerate_modes(3)), 5, 0)
    rec.eq("basis.enumerate.count_lambda_5", len(enumerate_modes(5)), 11, 0)
    small = enumerate_modes(10)
    large = enumerate_modes(20)
    rec.eq("basis.enumerate.prefix_monotone",
           1.0 if large[:len(small)] == small else 0.0, 1.0, 0,
           note="listing for lambda<=10 is a prefix of lambda<=20")

    val = evaluate(Mode.x0(1, 1), (0.0, PI / 2, 0.0))
    rec.eq("basis.evaluate.X0_peak_component", float(val[1]), _SQRT_2_PI3,
           1e-15, note="X0(1,1) at (0, pi/2, 0), second component")
    val = evaluate(Mode.w(1, 1, 1), (PI / 2, 0.0, 0.0))
    rec.eq("basis.evaluate.W_axis_component", float(val[0]), _W_AXIS_PEAK,
           1e-15, note="W(1,1,1) at (pi/2, 0, 0), first component")

    modes20 = [m for m, _ in enumerate_modes(20)]
    gram = gram_matrix(modes20)
    dev = float(np.max(np.abs(gram - np.eye(len(modes20)))))
    rec.le("basis.orthonormality.gram_identity", dev, 0.0, 1e-9,
           note=f"{len(modes20)} modes with eigenvalue <= 20")

    pairs = [(modes20[0], modes20[0]), (modes20[0], modes20[1]),
             (modes20[3], modes20[3]), (modes20[3], modes20[4]),
             (modes20[4], modes20[4])]
    gdev = 0.0
    for mi, mj in pairs:
        want = float(eigenvalue(mi)) if mi == mj else 0.0
        gdev = max(gdev, abs(grad_inner_product(mi, mj) - want))
    rec.le("basis.orthonormality.gradient_pairing", gdev, 0.0, 1e-8,
           note="optional diagnostic: Jacobian pairing = eigenvalue * delta")

    kmax = min(3, config.max_index)
    modes = _planar_modes(kmax) + _full_modes("V", kmax) \
        + _full_modes("W", kmax)
    points = [_random_point(rng) for _ in range(100)]
    div_worst = 0.0
    for mode in modes:
        for pt in points:
            div_worst = max(div_worst, abs(divergence(mode, pt)))
    rec.le("basis.divergence.analytic", div_worst, 0.0, 1e-12,
           note=f"{len(modes)} modes x 100 interior points")

    eig_worst = 0.0
    divfd_worst = 0.0
    spec = QuadSpec(fd_step=1e-4)
    for mode in modes:
        for pt in points[:25]:
            e_res, d_res = fd_residual(mode, pt, spec)
            eig_worst = max(eig_worst, e_res)
            divfd_worst = max(divfd_worst, d_res)
    rec.le("basis.fd.eigen_residual", eig_worst, 0.0, 1e-4,
           note="central differences, h = 1e-4")
    rec.le("basis.fd.divergence_residual", divfd_worst, 0.0, 1e-4)

    trace_worst = 0.0
    deriv_worst = 0.0
    h = 1e-4
    samples = rng.uniform(0.0, PI, (20, 2))
    for mode in modes:
        for axis in range(3):
            for face in (0.0, PI):
                for s1, s2 in samples:
                    pt = [float(s1), float(s2)]
                    pt.insert(axis, face)
                    phi = evaluate(mode, tuple(pt))
                    trace_worst = max(trace_worst, abs(float(phi[axis])))
                    lo, hi = list(pt), list(pt)
                    lo[axis] -= h
                    hi[axis] += h
                    dphi = (evaluate(mode, tuple(hi))
                            - evaluate(mode, tuple(lo))) / (2 * h)
                    for other in range(3):
                        if other != axis:
                            deriv_worst = max(deriv_worst,
                                              abs(float(dphi[other])))
    rec.le("basis.boundary.normal_component", trace_worst, 0.0, 1e-12,
           note="component i vanishes on the two faces with normal i")
    rec.le("basis.boundary.tangential_derivative", deriv_worst, 0.0, 1e-6,
           note="normal derivative of tangential components, fd h = 1e-4")

    fact_pts = [_random_point(rng, margin=0.0) for _ in range(1000)]
    for family, ctor in (("V", Mode.v), ("W", Mode.w)):
        worst = 0.0
        for m in range(1, kmax + 1):
            for n in range(1, kmax + 1):
                for p in range(1, kmax + 1):
                    mode = ctor(m, n, p)
                    for pt in fact_pts[::20]:
                        worst = max(worst, factorization_residual(mode, pt))
        mode = ctor(1, 1, 1)
        for pt in fact_pts:
            worst = max(worst, factorization_residual(mode, pt))
        rec.le(f"basis.factorization.{family}", worst, 0.0, 1e-12,
               note="identity through the planar families")


def _run_supnorms(config: SuiteConfig, rec: _Recorder,
                  rng: np.random.Generator) -> None:
    grid2 = GridSpec(config.grid_2d, refine=True)
    grid3 = GridSpec(config.grid_3d, refine=True)
    kmax = config.max_index

    sup_modes = _planar_modes(kmax) + _full_modes("V", kmax) \
        + _full_modes("W", kmax)
    excess = -math.inf
    for mode in sup_modes:
        formula = sup_norm_sq(mode)
        grid = grid3 if mode.family == "W" else grid2
        oracle = grid_sup_sq_oracle(mode, None, grid).value
        excess = max(excess, oracle - formula)
        rec.eq(f"supnorms.supsq.{_mode_tag(mode)}", oracle, formula,
               0.01 * formula)
    rec.le("supnorms.supsq.never_exceeds", excess, 0.0, 1e-10,
           note="grid maximum is a lower bound of each closed form")

    kdir = min(3, config.max_index)
    directions = [_random_direction(rng) for _ in range(20)]
    dir_modes = _planar_modes(kdir) + _full_modes("V", kdir)
    for mode in dir_modes:
        worst = 0.0
        for e in directions:
            formula = dir_sup_norm_sq(mode, e)
            if formula == 0.0:
                continue
            oracle = grid_sup_sq_oracle(mode, e, grid2).value
            worst = max(worst, abs(oracle / formula - 1.0))
        rec.le(f"supnorms.dir.{_mode_tag(mode)}", worst, 0.0, 0.01,
               note="worst relative deviation over 20 seeded directions")

    axis_dev = 0.0
    for mode in _planar_modes(kdir):
        m, n, p = mode.m, mode.n, mode.p
        if mode.family == "X0":
            cases = ((Direction(0, 1, 0), 4 * p * p / (PI3 * (n * n + p * p))),
                     (Direction(0, 0, 1), 4 * n * n / (PI3 * (n * n + p * p))))
        elif mode.family == "Y0":
            cases = ((Direction(1, 0, 0), 4 * p * p / (PI3 * (m * m + p * p))),
                     (Direction(0, 0, 1), 4 * m * m / (PI3 * (m * m + p * p))))
        else:
            cases = ((Direction(1, 0, 0), 4 * n * n / (PI3 * (m * m + n * n))),
                     (Direction(0, 1, 0), 4 * m * m / (PI3 * (m * m + n * n))))
        for e, component_sup in cases:
            axis_dev = max(axis_dev,
                           abs(dir_sup_norm_sq(mode, e) - component_sup))
    rec.le("supnorms.dir.axis_reduction", axis_dev, 0.0, 1e-15,
           note="coordinate directions reduce to single-component sup norms")

    scale_dev = 0.0
    for _ in range(50):
        e = _random_direction(rng)
        t = float(rng.uniform(0.1, 10.0))
        mode = Mode.w(int(rng.integers(1, 4)), int(rng.integers(1, 4)),
                      int(rng.integers(1, 4)))
        base = dir_sup_norm_sq_raw(mode, e.a, e.b, e.c)
        scaled = dir_sup_norm_sq_raw(mode, t * e.a, t * e.b, t * e.c)
        scale_dev = max(scale_dev, abs(scaled / (t * t * base) - 1.0))
    rec.le("supnorms.dir.scaling_degree_two", scale_dev, 0.0, 1e-12,
           note="raw formulas are homogeneous of degree 2 in the direction")

    special = Direction(1.0 / 3.0, -2.0 / 3.0, -2.0 / 3.0)
    adj_dirs = [special] + [_random_direction(rng) for _ in range(49)]
    ratio_lo, ratio_hi = math.inf, -math.inf
    for mode in _full_modes("W", kdir):
        results = grid_sup_sq_oracle_batch(mode, adj_dirs, grid3)
        worst_ratio = -math.inf
        worst = None
        for e, res in zip(adj_dirs, results):
            formula = dir_sup_norm_sq(mode, e)
            ratio = res.value / formula
            ratio_lo = min(ratio_lo, ratio)
            ratio_hi = max(ratio_hi, ratio)
            if ratio > worst_ratio:
                worst_ratio = ratio
                worst = (e, res.value, formula)
            if mode == Mode.w(1, 1, 1) and e is special:
                rec.adjudicated(
                    "supnorms.W.dir.adjudication", res.value, formula,
                    note=f"oracle/formula = {ratio:.9f} at direction "
                         f"(1/3, -2/3, -2/3); argmax = {res.argmax}")
        e, oracle, formula = worst
        rec.adjudicated(
            f"supnorms.W.dir.adjudicated.{_mode_tag(mode)}", oracle, formula,
            note=f"worst oracle/formula = {worst_ratio:.9f} over 50 seeded "
                 f"directions, at e = ({e.a:.6f}, {e.b:.6f}, {e.c:.6f})")
    rec.le("supnorms.W.dir.envelope_upper", ratio_hi, 4.0 / 3.0, 0.0134,
           note="oracle never exceeds 4/3 of the formula")
    rec.le("supnorms.W.dir.envelope_lower", 1.0 - ratio_lo, 0.0, 0.01,
           note="oracle never falls below the formula beyond grid error")

    ys = np.linspace(0.0, 1.0, 801)
    corner_dev = 0.0
    for n in range(1, 7):
        for p in range(1, 7):
            vals = corner_profile(n, p, ys[:, None], ys[None, :])
            corner_dev = max(corner_dev,
                             abs(float(vals.max()) - max(n * n, p * p)))
    rec.le("supnorms.corner_profile.max_at_corner", corner_dev, 0.0, 1e-9,
           note="bilinear profile peaks at a corner of the unit square")

    diag_dev = 0.0
    for alpha in np.linspace(0.01, 0.99, 99):
        diag_dev = max(diag_dev,
                       abs(case22_value(float(alpha), 1.0 - float(alpha)).D
                           - 1.0))
    rec.le("supnorms.case22.diagonal_value", diag_dev, 0.0, 1e-14,
           note="D(alpha, 1 - alpha) = 1")
    corner = case22_value(1.0, 1.0)
    rec.eq("supnorms.case22.corner_value", corner.D, 4.0 / 3.0, 1e-12,
           note=f"cos^2 = {corner.cos_sq}, feasible = {corner.feasible}")


def _run_integrals(config: SuiteConfig, rec: _Recorder,
                   rng: np.random.Generator) -> None:
    tol_plane = config.quad_tol
    tol_oct = 100.0 * config.quad_tol

    bs = np.linspace(0.0, 1.0, 101)
    diag_dev = float(np.max(np.abs(upsilon(bs, bs) - (1 + PI / 2) * bs * bs)))
    rec.le("integrals.upsilon.diagonal", diag_dev, 0.0, 1e-14,
           note="upsilon(b, b) = (1 + pi/2) b^2")
    pairs = rng.uniform(-1.0, 1.0, (1000, 2))
    sym_dev = float(np.max(np.abs(upsilon(pairs[:, 0], pairs[:, 1])
                                  - upsilon(pairs[:, 1], pairs[:, 0]))))
    rec.le("integrals.upsilon.symmetry", sym_dev, 0.0, 1e-15)
    rec.eq("integrals.upsilon.spot_0p6_0p8", upsilon(0.6, 0.8),
           1.2256669881082823, 1e-15,
           note="0.36 atan(4/3) + 0.64 atan(3/4) + 0.48")
    rec.eq("integrals.upsilon.axis", upsilon(0.7, 0.0), 0.0, 0.0,
           note="upsilon vanishes when either argument is zero")

    # Oracle validation anchors: cases with elementary independent values.
    b = 1 / math.sqrt(2.0)
    val = quad_integral(IntegralQuery("I1", b=b, c=b, mu=1.0), tol=tol_plane)
    ref = (1 + PI / 2) * b * b / 4.0
    rec.eq("integrals.quad.anchor_I1_diagonal", val, ref, 1e-8 * ref,
           note="equal coefficients: integral = (1 + pi/2) b^2 / (4 mu)")
    val = quad_integral(IntegralQuery("I1", b=0.8, c=0.0, mu=2.0),
                        tol=tol_plane)
    ref = PI * 0.64 / 16.0
    rec.eq("integrals.quad.anchor_I1_axis", val, ref, 1e-8 * ref,
           note="single branch: integral = pi b^2 / (8 mu)")
    val = quad_integral(IntegralQuery("I2", b=b, c=b, mu=4.0), tol=tol_oct)
    ref = PI * (1 + PI / 2) * b * b / (8.0 * 2.0)
    rec.eq("integrals.quad.anchor_I2_diagonal", val, ref, 1e-6 * ref)
    val = quad_integral(IntegralQuery("I2", b=0.0, c=0.9, mu=1.0),
                        tol=tol_oct)
    ref = PI * PI * 0.81 / 16.0
    rec.eq("integrals.quad.anchor_I2_axis", val, ref, 1e-6 * ref,
           note="single branch: integral = pi^2 c^2 / (16 sqrt(mu))")
    val = quad_integral(IntegralQuery("I3", a=1.0, mu=1.0), tol=tol_oct)
    ref = PI * PI / 12.0
    rec.eq("integrals.quad.anchor_I3_peak_only", val, ref, 1e-6 * ref,
           note="b = c = 0 attains the closed bound exactly")
    val = quad_integral(IntegralQuery("I3", a=0.0, b=b, c=b, mu=1.0),
                        tol=tol_oct)
    ref = PI * (1 + PI / 2) * b * b / 24.0
    rec.eq("integrals.quad.anchor_I3_plane_diagonal", val, ref, 2e-6 * ref,
           note="a = 0 with equal coefficients attains the bound exactly")

    for i in range(20):
        phi = float(rng.uniform(0.0, PI / 2))
        r = float(rng.uniform(0.2, 1.0))
        bb, cc = r * math.cos(phi), r * math.sin(phi)
        mu = float(10.0 ** rng.uniform(-1.0, 1.0))
        tag = f"b={bb:.4f} c={cc:.4f} mu={mu:.4f}"

        q = IntegralQuery("angular", b=bb, c=cc)
        quad = quad_integral(q, tol=min(tol_plane, 1e-11))
        rec.eq(f"integrals.angular.sample{i:02d}", quad, closed_integral(q),
               1e-10, note=tag)
        q = IntegralQuery("I1", b=bb, c=cc, mu=mu)
        quad = quad_integral(q, tol=tol_plane)
        closed = closed_integral(q)
        rec.eq(f"integrals.I1.sample{i:02d}", quad, closed, 1e-7 * closed,
               note=tag)
        q = IntegralQuery("I2", b=bb, c=cc, mu=mu)
        quad = quad_integral(q, tol=tol_oct)
        closed = closed_integral(q)
        rec.eq(f"integrals.I2.sample{i:02d}", quad, closed, 1e-5 * closed,
               note=tag)

    for i in range(20):
        e = _random_direction(rng)
        mu = float(10.0 ** rng.uniform(-1.0, 1.0))
        q = IntegralQuery("I3", a=e.a, b=e.b, c=e.c, mu=mu)
        try:
            quad = quad_integral(q, tol=tol_oct)
        except AccuracyError as exc:
            rec.failure(f"integrals.I3.sample{i:02d}",
                        note=f"quadrature budget exhausted: {exc}")
            continue
        closed = closed_integral(q)
        rec.le(f"integrals.I3.sample{i:02d}", quad, closed, 1e-8,
               note=f"a={e.a:.4f} b={e.b:.4f} c={e.c:.4f} mu={mu:.4f}; "
                    f"claimed upper bound")


def _run_sums(config: SuiteConfig, rec: _Recorder,
              rng: np.random.Generator) -> None:
    e = Direction(0.0, 1.0, 0.0)
    val = family_sum_partial(SumSpec("X0", e, (0.0, PI / 2, 0.0), 1.0, 1))
    rec.eq("sums.partial.single_term", val, 2.0 / (9.0 * PI3), 1e-16,
           note="one mode: (2/pi^3)/9")
    e2 = _random_direction(rng)
    val = family_sum_partial(SumSpec("X0", e2, (0.0, 0.0, 0.0), 1.0, 10))
    rec.eq("sums.partial.vanishes_at_origin", val, 0.0, 0.0)

    mono_worst = 0.0
    point = _random_point(rng)
    e3 = _random_direction(rng)
    for family in ("X0", "Y0", "Z0", "V", "W"):
        prev = 0.0
        for cutoff in (1, 2, 4, 8, 16, 24, 32, 40):
            cur = family_sum_partial(SumSpec(family, e3, point, 1.0, cutoff))
            mono_worst = max(mono_worst, prev - cur)
            prev = cur
    rec.le("sums.monotonicity.cutoff", mono_worst, 0.0, 0.0,
           note="partial sums are nondecreasing in the cutoff")

    samples = [(_random_point(rng), _random_direction(rng))
               for _ in range(10)]
    for family in ("X0", "Y0", "Z0", "V", "W"):
        worst = -math.inf
        where = ""
        for idx, (pt, ee) in enumerate(samples):
            for mu in (0.5, 1.0, 2.0, 5.0):
                part = family_sum_partial(SumSpec(family, ee, pt, mu, 40))
                bound = family_sum_bound(family, ee, mu)
                if part - bound > worst:
                    worst = part - bound
                    where = (f"sample {idx}, mu={mu}, partial={part:.6e}, "
                             f"bound={bound:.6e}")
        rec.le(f"sums.domination.{family}", worst, 0.0, 0.0,
               note=f"worst (partial - bound) at cutoff 40: {where}")

    comb_worst = 0.0
    for _ in range(100):
        ee = _random_direction(rng)
        total = sum(family_sum_bound(f, ee, 2.0)
                    for f in ("X0", "Y0", "Z0", "V", "W"))
        comb_worst = max(comb_worst, abs(total - combined_sum_bound(ee)))
    rec.le("sums.combination.identity_mu2", comb_worst, 0.0, 1e-12,
           note="five family bounds at mu = 2 collapse to the sphere "
                "objective over 2 pi^3")


def _run_gamma(config: SuiteConfig, rec: _Recorder,
               rng: np.random.Generator) -> None:
    rec.eq("gamma.constants.k0", K0, 1.0 + 4.0 * math.sqrt(2.0) * PI / 3.0,
           0.0)
    rec.eq("gamma.constants.k1", K1, 9.305152266185111, 1e-12)
    rec.eq("gamma.constants.k2", K2, 8.899896255262279, 1e-12)

    rec.eq("gamma.value.a_axis", gamma(1.0, 0.0, 0.0), K1, 1e-12)
    rec.eq("gamma.value.b_axis", gamma(0.0, 1.0, 0.0), 0.0, 0.0)
    half = 1 / math.sqrt(2.0)
    rec.eq("gamma.value.bc_diagonal", gamma(0.0, half, half), K2, 1e-12,
           note="k0 (1 + pi/2)/2")

    sym_worst = 0.0
    for _ in range(200):
        e = _random_direction(rng)
        base = gamma(e.a, e.b, e.c)
        sym_worst = max(sym_worst,
                        abs(gamma(-e.a, e.b, -e.c) - base),
                        abs(gamma(abs(e.a), abs(e.b), abs(e.c)) - base),
                        abs(gamma(e.a, e.c, e.b) - base))
    rec.le("gamma.symmetry.octant_and_swap", sym_worst, 0.0, 1e-15)

    g0, gp0 = g_profile(0.0)
    rec.eq("gamma.profile.value_at_zero", g0, K1 - K2 - PI / 2, 1e-14)
    rec.eq("gamma.profile.slope_at_zero", gp0, 1.0, 0.0)

    xs = np.linspace(0.0, 10.0, 10001)
    _, slopes = g_profile(xs)
    signs = np.sign(slopes)
    flips = int(np.count_nonzero(signs[:-1] * signs[1:] < 0))
    rec.eq("gamma.profile.unique_slope_zero", flips, 1, 0,
           note="sign scan with step 1e-3 on [0, 10]")

    try:
        sigma = find_sigma(1e-12)
    except IntegrityError as exc:
        rec.failure("gamma.sigma.location", note=str(exc))
        return
    rec.eq("gamma.sigma.location", sigma, 0.672, 0.002)
    rec.le("gamma.sigma.bisection_contract",
           abs(find_sigma(1e-3) - sigma), 0.0, 1e-3)
    gs, _ = g_profile(sigma)
    rec.eq("gamma.sigma.profile_value", gs, 0.435, 0.002)

    closed = gamma_max_closed()
    rec.eq("gamma.max_closed", closed, 10.91, 0.01,
           note="sphere maximum via the scalar profile")
    rec.eq("gamma.max_consistency", closed, gs + PI / 2 + K2, 1e-12)

    value, argmax = gamma_max_oracle(SphereSearchSpec(256, 3))
    rec.eq("gamma.max_oracle", value, closed, 5e-3,
           note=f"argmax = ({argmax[0]:.6f}, {argmax[1]:.6f}, "
                f"{argmax[2]:.6f})")
    rec.le("gamma.argmax.bc_symmetry", abs(argmax[1] - argmax[2]), 0.0, 1e-3,
           note="the two transverse components coincide at the maximum")
    a_star = 1.0 / math.sqrt(1.0 + 2.0 * sigma * sigma)
    rec.eq("gamma.argmax.a_component", argmax[0], a_star, 1e-2)

    rec.eq("gamma.restricted.at_zero", gamma_restricted(0.0), K2, 1e-12)
    rec.eq("gamma.restricted.at_one", gamma_restricted(1.0), K1, 1e-12)
    rec.eq("gamma.restricted.peak", gamma_restricted(a_star), closed, 1e-9)

    ident_worst = 0.0
    for a in np.linspace(1e-3, 1.0, 500):
        s = math.sqrt(1.0 - a * a) / (a * math.sqrt(2.0))
        lhs = gamma_restricted(float(a))
        rhs = g_profile(s)[0] + PI / 2 + K2
        ident_worst = max(ident_worst, abs(lhs - rhs))
    rec.le("gamma.identity.restricted_profile", ident_worst, 0.0, 1e-12,
           note="restricted objective = profile + pi/2 + k2 on 500 points")

    fd_worst = 0.0
    neg_worst = 0.0
    h = 1e-6
    for _ in range(100):
        bb = float(rng.uniform(0.05, 1.0))
        cc = float(rng.uniform(0.05, 1.0))
        fd = (upsilon(bb + h, cc) - upsilon(bb - h, cc)) / (2 * h)
        val = upsilon_db(bb, cc)
        fd_worst = max(fd_worst, abs(val - fd))
        neg_worst = max(neg_worst, -val)
    rec.le("gamma.upsilon_db.matches_fd", fd_worst, 0.0, 1e-6,
           note="closed partial derivative vs centered differences")
    rec.le("gamma.upsilon_db.nonnegative", neg_worst, 0.0, 0.0)


_SUITE_RUNNERS = {
    "basis": _run_basis,
    "supnorms": _run_supnorms,
    "integrals": _run_integrals,
    "sums": _run_sums,
    "gamma": _run_gamma,
}


def run_suite(config: SuiteConfig) -> Report:
    """Run the selected suites and return the ordered report.

    Checks are ordered by suite (in canonical order) and then by check_id;
    internal errors inside a suite are recorded as failing checks rather
    than raised.
    """
    report = Report(config=config)
    for suite in SUITES:
        if suite not in config.suites:
            continue
        rec = _Recorder()
        rng = _suite_rng(config, suite)
        try:
            _SUITE_RUNNERS[suite](config, rec, rng)
        except Exception as exc:  # record, never panic
            rec.failure(f"{suite}.internal_error",
                        note=f"{type(exc).__name__}: {exc}")
        report.results.extend(sorted(rec.results, key=lambda r: r.check_id))
    return report


# --------------------------------------------------------------------------
# Report emission.

def _config_dict(config: SuiteConfig) -> dict:
    data = asdict(config)
    data["suites"] = list(config.suites)
    return data


def emit_report(report: Report, output_format: str) -> str:
    """Render the report as json, csv, or an aligned text table."""
    if output_format == "json":
        payload = {
            "version": __version__,
            "config": _config_dict(report.config),
            "results": [asdict(r) for r in report.results],
        }
        return json.dumps(payload, indent=2) + "\n"

    if output_format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["check_id", "status", "computed", "reference",
                         "tolerance", "elapsed_ms", "note"])
        for r in report.results:
            writer.writerow([r.check_id, r.status, f"{r.computed:.17g}",
                             f"{r.reference:.17g}", f"{r.tolerance:.17g}",
                             f"{r.elapsed_ms:.17g}", r.note])
        return buf.getvalue()

    if output_format != "text":
        raise ValueError(f"unknown output format {output_format!r}")
    width = max([len(r.check_id) for r in report.results] or [8])
    header = (f"{'check':<{width}}  {'status':<11} {'computed':>24} "
              f"{'reference':>24} {'tolerance':>12}")
    lines = [header, "-" * len(header)]
    for r in report.results:
        lines.append(f"{r.check_id:<{width}}  {r.status:<11} "
                     f"{r.computed:>24.17g} {r.reference:>24.17g} "
                     f"{r.tolerance:>12.5g}")
        if r.note:
            lines.append(f"{'':<{width}}    note: {r.note}")
    passed, failed, adjudicated = report.counts()
    lines.append("-" * len(header))
    lines.append(f"{passed} passed, {failed} failed, "
                 f"{adjudicated} adjudicated")
    return "\n".join(lines) + "\n"


def exit_code(report: Report) -> int:
    return 0 if all(r.status in ("pass", "adjudicated")
                    for r in report.results) else 1


def main(argv: list[str] | None = None) -> int:
    config = parse_config(argv)
    report = run_suite(config)
    text = emit_report(report, config.output_format)
    if config.out_path is None:
        sys.stdout.write(text)
    else:
        try:
            with open(config.out_path, "w", encoding="utf-8") as fh:
                fh.write(text)
        except OSError as exc:
            print(f"error: cannot write report: {exc}", file=sys.stderr)
            return 1
    return exit_code(report)


if __name__ == "__main__":
    sys.exit(main())
