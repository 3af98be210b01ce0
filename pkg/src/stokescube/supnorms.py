"""Closed-form sup norms of the eigenfields and a grid maximization oracle.

Two groups of closed forms are implemented: the squared L-infinity norm of
each field and the squared L-infinity norm of its scalar projection onto a
unit direction.  A dense tensor-grid search with one level of local
refinement provides a certified lower bound for either supremum and is used
to adjudicate the closed forms.

The projection formula for the W family is returned exactly as claimed; the
oracle can exceed it by up to a factor 4/3 at directions where the interior
critical-point system of the projection admits a feasible solution (see
``case22_value``), so W-projection comparisons are reported side by side
rather than asserted.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .eigenbasis import PI, PI3, Mode, field_on_grid
from .errors import DomainError


@dataclass(frozen=True)
class Direction:
    """Unit direction e = (a, b, c); the unit constraint is enforced."""

    a: float
    b: float
    c: float

    def __post_init__(self):
        r = self.a * self.a + self.b * self.b + self.c * self.c
        if abs(r - 1.0) > 1e-12:
            raise DomainError(f"direction {self} is not a unit vector")

    @classmethod
    def normalized(cls, a: float, b: float, c: float) -> "Direction":
        r = math.sqrt(a * a + b * b + c * c)
        if r == 0.0:
            raise DomainError("cannot normalize the zero vector")
        return cls(a / r, b / r, c / r)

    def as_tuple(self) -> tuple[float, float, float]:
        return (self.a, self.b, self.c)


@dataclass(frozen=True)
class GridSpec:
    """Tensor-grid search settings."""

    points_per_axis: int = 120
    refine: bool = True

    def __post_init__(self):
        if self.points_per_axis < 8:
            raise DomainError("points_per_axis must be >= 8")


@dataclass(frozen=True)
class ProjectionCoeffs:
    """Amplitudes of the three product terms of a projected W field."""

    A: float
    B: float
    C: float

    @classmethod
    def from_w_mode(cls, mode: Mode, e: Direction) -> "ProjectionCoeffs":
        if mode.family != "W":
            raise DomainError("projection coefficients are defined for W modes")
        m, n, p = mode.m, mode.n, mode.p
        return cls(e.a * (n * n + p * p), -e.b * m * n, -e.c * m * p)

    def dominant_ratios(self) -> tuple[float, float]:
        """(alpha, beta): the two smaller squared amplitudes over the largest."""
        sq = sorted((self.A * self.A, self.B * self.B, self.C * self.C))
        if sq[2] == 0.0:
            raise DomainError("all three amplitudes vanish")
        return sq[0] / sq[2], sq[1] / sq[2]


class GridMax(NamedTuple):
    value: float
    argmax: tuple[float, float, float]


class Case22(NamedTuple):
    D: float
    cos_sq: tuple[float, float, float]
    feasible: bool


# --------------------------------------------------------------------------
# Closed forms.

def sup_norm_sq(mode: Mode) -> float:
    """Squared sup norm of the field over the cube."""
    m, n, p = mode.m, mode.n, mode.p
    if mode.family == "X0":
        return 4.0 * max(n * n, p * p) / (PI3 * (n * n + p * p))
    if mode.family == "Y0":
        return 4.0 * max(m * m, p * p) / (PI3 * (m * m + p * p))
    if mode.family == "Z0":
        return 4.0 * max(m * m, n * n) / (PI3 * (m * m + n * n))
    if mode.family == "V":
        return 8.0 * max(n * n, p * p) / (PI3 * (n * n + p * p))
    np2 = n * n + p * p
    return 8.0 * max(np2 * np2, m * m * n * n, m * m * p * p) \
        / (PI3 * np2 * (m * m + n * n + p * p))


def dir_sup_norm_sq_raw(mode: Mode, a: float, b: float, c: float) -> float:
    """Projection sup-norm formula for an arbitrary (not necessarily unit)
    coefficient triple; homogeneous of degree 2 in (a, b, c)."""
    m, n, p = mode.m, mode.n, mode.p
    if mode.family == "X0":
        return 4.0 * max(b * b * p * p, c * c * n * n) / (PI3 * (n * n + p * p))
    if mode.family == "Y0":
        return 4.0 * max(a * a * p * p, c * c * m * m) / (PI3 * (m * m + p * p))
    if mode.family == "Z0":
        return 4.0 * max(a * a * n * n, b * b * m * m) / (PI3 * (m * m + n * n))
    if mode.family == "V":
        return 8.0 * max(b * b * p * p, c * c * n * n) / (PI3 * (n * n + p * p))
    np2 = n * n + p * p
    return 8.0 * max(a * a * np2 * np2, b * b * m * m * n * n,
                     c * c * m * m * p * p) \
        / (PI3 * np2 * (m * m + n * n + p * p))


def dir_sup_norm_sq(mode: Mode, e: Direction) -> float:
    """Claimed squared sup norm of the projection e . field.

    Exact for X0, Y0, Z0 and V.  For W this is the claim under test: the
    grid oracle adjudicates it and may exceed it (factor up to 4/3).
    """
    return dir_sup_norm_sq_raw(mode, e.a, e.b, e.c)


def corner_profile(n: int, p: int, Y, Z):
    """Bilinear profile p^2 Y (1-Z) + n^2 (1-Y) Z on the unit square.

    Its maximum is max(n^2, p^2), attained at a corner; this is the reduced
    form of the planar-family squared-amplitude maximization.
    """
    Y = np.asarray(Y, dtype=float)
    Z = np.asarray(Z, dtype=float)
    return p * p * Y * (1.0 - Z) + n * n * (1.0 - Y) * Z


# --------------------------------------------------------------------------
# Grid oracle.

def _projection_sq_on_grid(mode: Mode, e: Direction | None,
                           xs, ys, zs) -> np.ndarray:
    comps = field_on_grid(mode, xs, ys, zs)
    if e is None:
        return comps[0] ** 2 + comps[1] ** 2 + comps[2] ** 2
    return (e.a * comps[0] + e.b * comps[1] + e.c * comps[2]) ** 2


def _refined_axes(axes: list[np.ndarray], idx, steps: list[float]
                  ) -> list[np.ndarray]:
    out = []
    for ax, i, step in zip(axes, idx, steps):
        if ax.size == 1:
            out.append(ax)
            continue
        center = ax[i]
        lo = max(0.0, center - step)
        hi = min(PI, center + step)
        out.append(np.linspace(lo, hi, 21))
    return out


def _base_axes(mode: Mode, grid: GridSpec) -> list[np.ndarray]:
    line = np.linspace(0.0, PI, grid.points_per_axis)
    fixed = {"X0": 0, "Y0": 1, "Z0": 2}.get(mode.family)
    axes = [line.copy() for _ in range(3)]
    if fixed is not None:
        axes[fixed] = np.array([0.0])
    return axes


def _locate(values: np.ndarray, axes: list[np.ndarray]
            ) -> tuple[float, tuple, tuple]:
    flat = int(np.argmax(values))
    idx = np.unravel_index(flat, values.shape)
    point = tuple(float(ax[i]) for ax, i in zip(axes, idx))
    return float(values[idx]), idx, point


def _refine_once(mode: Mode, e: Direction | None, axes, idx, step,
                 value: float, point) -> GridMax:
    raxes = _refined_axes(axes, idx, [step] * 3)
    rvalues = _projection_sq_on_grid(mode, e, *raxes)
    rvalue, _, rpoint = _locate(rvalues, raxes)
    if rvalue > value:
        return GridMax(rvalue, rpoint)
    return GridMax(value, point)


def grid_sup_sq_oracle(mode: Mode, e: Direction | None = None,
                       grid: GridSpec | None = None) -> GridMax:
    """Dense-grid maximum of the squared field magnitude (or of the squared
    projection when a direction is given), with one level of 10x local
    refinement around the incumbent when ``grid.refine`` is set.

    The returned value is a certified lower bound of the true supremum.
    Planar families reduce to a 2-D search in their active coordinates and
    V reduces to twice the X0 search; W uses the full 3-D grid.  Ties are
    broken toward the lexicographically smallest grid index.
    """
    if grid is None:
        grid = GridSpec()
    if mode.family == "V":
        sub = grid_sup_sq_oracle(Mode.x0(mode.n, mode.p), e, grid)
        return GridMax(2.0 * sub.value, (0.0, sub.argmax[1], sub.argmax[2]))

    axes = _base_axes(mode, grid)
    values = _projection_sq_on_grid(mode, e, *axes)
    value, idx, point = _locate(values, axes)
    if grid.refine:
        step = PI / (grid.points_per_axis - 1)
        return _refine_once(mode, e, axes, idx, step, value, point)
    return GridMax(value, point)


def grid_sup_sq_oracle_batch(mode: Mode, directions: list[Direction],
                             grid: GridSpec | None = None) -> list[GridMax]:
    """Directional oracles for many directions, sharing one field grid.

    Equivalent to calling :func:`grid_sup_sq_oracle` per direction but the
    component arrays are evaluated only once per mode.
    """
    if grid is None:
        grid = GridSpec()
    if mode.family == "V":
        subs = grid_sup_sq_oracle_batch(Mode.x0(mode.n, mode.p), directions,
                                        grid)
        return [GridMax(2.0 * r.value, (0.0, r.argmax[1], r.argmax[2]))
                for r in subs]
    axes = _base_axes(mode, grid)
    comps = field_on_grid(mode, *axes)
    step = PI / (grid.points_per_axis - 1)
    out = []
    for e in directions:
        values = (e.a * comps[0] + e.b * comps[1] + e.c * comps[2]) ** 2
        value, idx, point = _locate(values, axes)
        if grid.refine:
            out.append(_refine_once(mode, e, axes, idx, step, value, point))
        else:
            out.append(GridMax(value, point))
    return out


# --------------------------------------------------------------------------
# Interior critical values of the projected W amplitude.

def case22_value(alpha: float, beta: float) -> Case22:
    """Interior critical value D and squared cosines for the normalized
    projected-W amplitude, with the largest squared amplitude scaled to 1.

    ``alpha`` and ``beta`` are the two smaller squared amplitudes divided by
    the largest; both must lie in (0, 1].  D(alpha, beta) =
    4 alpha beta / (2(alpha beta + alpha + beta) - alpha^2 - beta^2 - 1);
    a nonpositive denominator is outside the admissible region and raises.
    ``feasible`` reports whether all three squared cosines land in [0, 1].
    """
    for name, v in (("alpha", alpha), ("beta", beta)):
        if not 0.0 < v <= 1.0:
            raise DomainError(f"{name} must lie in (0, 1], got {v}")
    denom = 2.0 * (alpha * beta + alpha + beta) \
        - alpha * alpha - beta * beta - 1.0
    if denom <= 0.0:
        raise DomainError(
            f"(alpha, beta)=({alpha}, {beta}) outside the admissible region "
            f"(denominator {denom} <= 0)")
    d = 4.0 * alpha * beta / denom
    cos_sq = (
        2.0 * alpha * (beta + 1.0 - alpha) / denom,
        2.0 * beta * (alpha + 1.0 - beta) / denom,
        2.0 * (alpha + beta - 1.0) / denom,
    )
    tol = 1e-12
    feasible = all(-tol <= v <= 1.0 + tol for v in cos_sq)
    return Case22(d, cos_sq, feasible)
