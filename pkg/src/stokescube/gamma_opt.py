"""Maximization of the combined bound objective over the unit sphere.

The objective is

    Gamma(a, b, c) = k0 upsilon(b, c) + upsilon(a, c) + upsilon(a, b) + k1 a^2

with k0 = 1 + 4 sqrt(2) pi / 3 and k1 = (2/3) sqrt(2) pi^2.  Symmetry pins
b = c at the maximum, which reduces the problem to a scalar profile

    G(s) = (2 (1 - s^2) arctan s + 2 s + k1 - k2 - pi/2) / (1 + 2 s^2)

over s >= 0 with k2 = (pi + 2) k0 / 4; the constrained maximum is
G(sigma) + pi/2 + k2 where sigma is the unique zero of the slope channel.
An octant grid search over the sphere provides the independent check.

Note on the slope channel: ``g_profile`` returns the closed rational form

    (1 - (s^3 + s)(3 arctan s + k1 - k2 - pi/2) - 2 s^4)
        / ((1 + 2 s^2)^2 (1 + s^2)),

which equals dG/ds divided by the constant 4.  Its sign pattern and zero are
therefore those of the true derivative, which is all the root isolation and
uniqueness scan rely on.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, IntegrityError
from .integrals import upsilon

K0 = 1.0 + 4.0 * math.sqrt(2.0) * math.pi / 3.0
K1 = (2.0 / 3.0) * math.sqrt(2.0) * math.pi ** 2
K2 = 0.25 * (math.pi + 2.0) * K0
_KAPPA = K1 - K2 - 0.5 * math.pi


@dataclass(frozen=True)
class Constants:
    """The three derived constants of the combined bound."""

    k0: float = K0
    k1: float = K1
    k2: float = K2


CONSTANTS = Constants()


@dataclass(frozen=True)
class SphereSearchSpec:
    """Octant grid-search settings for the sphere oracle."""

    grid_per_angle: int = 256
    refine_rounds: int = 3

    def __post_init__(self):
        if self.grid_per_angle < 16:
            raise DomainError("grid_per_angle must be >= 16")
        if self.refine_rounds < 0:
            raise DomainError("refine_rounds must be >= 0")


def gamma(a: float, b: float, c: float) -> float:
    """Objective value on the unit sphere; invariant under sign flips of any
    component and under swapping b and c."""
    r = a * a + b * b + c * c
    if abs(r - 1.0) > 1e-9:
        raise DomainError(f"(a, b, c) must be a unit vector, got |.|^2 = {r}")
    return _gamma_unchecked(a, b, c)


def _gamma_unchecked(a, b, c):
    # The middle pair is grouped so swapping b and c is exact in floats.
    return K0 * upsilon(b, c) + (upsilon(a, c) + upsilon(a, b)) \
        + K1 * np.asarray(a, dtype=float) ** 2


def g_profile(s):
    """(G, slope) of the scalar profile at s >= 0 (scalars or arrays).

    Both channels stay finite for arbitrarily large s: past s = 1 the same
    rational expressions are evaluated in inverse powers of s.  The slope
    channel is the closed form described in the module docstring (dG/ds
    divided by 4); its zero and sign changes coincide with those of dG/ds.
    """
    arr = np.asarray(s, dtype=float)
    if np.any(arr < 0.0):
        raise DomainError("the profile is defined for s >= 0")
    scalar = arr.ndim == 0
    arr = np.atleast_1d(arr)
    g = np.empty_like(arr)
    gp = np.empty_like(arr)

    at = np.arctan(arr)
    small = arr <= 1.0
    sm = arr[small]
    g[small] = (2.0 * (1.0 - sm * sm) * at[small] + 2.0 * sm + _KAPPA) \
        / (1.0 + 2.0 * sm * sm)
    gp[small] = (1.0 - (sm ** 3 + sm) * (3.0 * at[small] + _KAPPA)
                 - 2.0 * sm ** 4) \
        / ((1.0 + 2.0 * sm * sm) ** 2 * (1.0 + sm * sm))

    big = ~small
    if np.any(big):
        sb = arr[big]
        inv = 1.0 / sb
        inv2 = inv * inv
        g[big] = (2.0 * (inv2 - 1.0) * at[big] + 2.0 * inv + _KAPPA * inv2) \
            / (inv2 + 2.0)
        num = inv2 ** 3 - (inv ** 3 + inv2 * inv2 * inv) \
            * (3.0 * at[big] + _KAPPA) - 2.0 * inv2
        den = (inv2 + 2.0) ** 2 * (inv2 + 1.0)
        gp[big] = num / den

    if scalar:
        return float(g[0]), float(gp[0])
    return g, gp


def find_sigma(tol: float = 1e-12) -> float:
    """Unique zero of the profile slope on [0, 10].

    A fixed sign scan with step 0.01 isolates the bracket and must see
    exactly one sign change (anything else raises
    :class:`~stokescube.errors.IntegrityError`); bisection then narrows the
    bracket to width ``tol``.
    """
    if tol < 1e-14:
        raise DomainError("tol must be >= 1e-14")
    xs = np.linspace(0.0, 10.0, 1001)
    _, slopes = g_profile(xs)
    signs = np.sign(slopes)
    flips = np.nonzero(signs[:-1] * signs[1:] < 0.0)[0]
    if flips.size != 1:
        raise IntegrityError(
            f"expected exactly one sign change of the slope on [0, 10], "
            f"found {flips.size}")
    lo, hi = float(xs[flips[0]]), float(xs[flips[0] + 1])
    _, s_lo = g_profile(lo)
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        _, s_mid = g_profile(mid)
        if s_mid == 0.0:
            return mid
        if (s_mid > 0.0) == (s_lo > 0.0):
            lo, s_lo = mid, s_mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def gamma_max_closed() -> float:
    """Constrained maximum via the scalar reduction: G(sigma) + pi/2 + k2."""
    sigma = find_sigma(1e-12)
    g, _ = g_profile(sigma)
    return g + 0.5 * math.pi + K2


def gamma_restricted(a: float) -> float:
    """Objective along the symmetric slice b = c = sqrt((1 - a^2)/2):

    k0 (1 + pi/2)(1 - a^2)/2 + 2 upsilon(a, sqrt((1-a^2)/2)) + k1 a^2.

    Satisfies gamma_restricted(a) = G(s(a)) + pi/2 + k2 with
    s(a) = sqrt(1 - a^2)/(a sqrt(2)) on (0, 1].
    """
    if not 0.0 <= a <= 1.0:
        raise DomainError(f"a must lie in [0, 1], got {a}")
    half = math.sqrt((1.0 - a * a) / 2.0)
    return K0 * (1.0 + 0.5 * math.pi) * (1.0 - a * a) / 2.0 \
        + 2.0 * upsilon(a, half) + K1 * a * a


def gamma_max_oracle(spec: SphereSearchSpec | None = None
                     ) -> tuple[float, tuple[float, float, float]]:
    """Octant grid search for the sphere maximum, with local refinement.

    The octant is parametrized by polar angle from the a-axis and azimuth in
    the (b, c) plane, both on [0, pi/2] inclusive (so the boundary arcs are
    covered); each refinement round re-grids a one-step window around the
    incumbent.  Ties break toward lexicographically smallest angles, so the
    result is deterministic.
    """
    if spec is None:
        spec = SphereSearchSpec()
    g = spec.grid_per_angle
    t_lo, t_hi = 0.0, 0.5 * math.pi
    f_lo, f_hi = 0.0, 0.5 * math.pi
    best_val = -math.inf
    best = (1.0, 0.0, 0.0)
    for _ in range(spec.refine_rounds + 1):
        thetas = np.linspace(t_lo, t_hi, g)
        phis = np.linspace(f_lo, f_hi, g)
        a = np.cos(thetas)[:, None]
        st = np.sin(thetas)[:, None]
        b = st * np.cos(phis)[None, :]
        c = st * np.sin(phis)[None, :]
        vals = _gamma_unchecked(a, b, c)
        flat = int(np.argmax(vals))
        i, j = np.unravel_index(flat, vals.shape)
        if float(vals[i, j]) > best_val:
            best_val = float(vals[i, j])
            best = (float(a[i, 0]), float(b[i, j]), float(c[i, j]))
        t_step = (t_hi - t_lo) / (g - 1)
        f_step = (f_hi - f_lo) / (g - 1)
        t_lo, t_hi = (max(0.0, thetas[i] - t_step),
                      min(0.5 * math.pi, thetas[i] + t_step))
        f_lo, f_hi = (max(0.0, phis[j] - f_step),
                      min(0.5 * math.pi, phis[j] + f_step))
    return best_val, best
