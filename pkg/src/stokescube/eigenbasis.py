"""Explicit trigonometric eigenfields on the cube (0, pi)^3.

Five families of divergence-free vector eigenfunctions of ``-laplace`` under
free-slip boundary conditions are provided in closed form, together with
their eigenvalues, deterministic enumeration by eigenvalue, mean-square
inner products over the cube, and independent finite-difference residual
checks of the eigen-equation.

Index conventions (m, n, p are positive integers; a family that does not use
an index stores 0 in its place):

    X0(n, p):  2/sqrt(pi^3 (n^2+p^2)) * (0,  p sin(ny) cos(pz), -n cos(ny) sin(pz))
    Y0(m, p):  2/sqrt(pi^3 (m^2+p^2)) * (-p sin(mx) cos(pz), 0,  m cos(mx) sin(pz))
    Z0(m, n):  2/sqrt(pi^3 (m^2+n^2)) * (n sin(mx) cos(ny), -m cos(mx) sin(ny), 0)
    V(m, n, p):  sqrt(2) cos(mx) * X0(n, p)
    W(m, n, p):  2 sqrt(2)/sqrt(pi^3 (m^2+n^2+p^2)(n^2+p^2))
                 * ((n^2+p^2) sin(mx) cos(ny) cos(pz),
                    -mn cos(mx) sin(ny) cos(pz),
                    -mp cos(mx) cos(ny) sin(pz))

Eigenvalues are n^2+p^2, m^2+p^2, m^2+n^2 for the planar families and
m^2+n^2+p^2 for V and W.  Points are any 3-sequences of coordinates in the
closed cube [0, pi]^3; evaluation uses the closed forms, which extend
smoothly past the boundary (finite-difference probes rely on this).

All functions are pure; nothing here keeps mutable state.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, NamedTuple

import numpy as np

from .errors import DomainError

PI = math.pi
PI3 = math.pi ** 3

FAMILIES = ("X0", "Y0", "Z0", "V", "W")
_FAMILY_ORDER = {fam: i for i, fam in enumerate(FAMILIES)}


@dataclass(frozen=True)
class Mode:
    """One eigenfield: a family tag plus the integer index triple (m, n, p)."""

    family: str
    m: int
    n: int
    p: int

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise DomainError(f"unknown family {self.family!r}")
        for name, value in (("m", self.m), ("n", self.n), ("p", self.p)):
            if not isinstance(value, (int, np.integer)) or isinstance(value, bool):
                raise DomainError(f"index {name} must be an integer, got {value!r}")
            if value < 0:
                raise DomainError(f"index {name} must be nonnegative, got {value}")
        zero_slot = {"X0": "m", "Y0": "n", "Z0": "p"}.get(self.family)
        if zero_slot is not None:
            active = [v for s, v in (("m", self.m), ("n", self.n), ("p", self.p))
                      if s != zero_slot]
            if getattr(self, zero_slot) != 0:
                raise DomainError(
                    f"family {self.family} requires {zero_slot}=0, got mode {self}")
            if min(active) < 1:
                raise DomainError(
                    f"family {self.family} requires its two active indices >= 1")
        else:
            if min(self.m, self.n, self.p) < 1:
                raise DomainError(
                    f"family {self.family} requires m, n, p >= 1, got mode {self}")

    @classmethod
    def x0(cls, n: int, p: int) -> "Mode":
        return cls("X0", 0, n, p)

    @classmethod
    def y0(cls, m: int, p: int) -> "Mode":
        return cls("Y0", m, 0, p)

    @classmethod
    def z0(cls, m: int, n: int) -> "Mode":
        return cls("Z0", m, n, 0)

    @classmethod
    def v(cls, m: int, n: int, p: int) -> "Mode":
        return cls("V", m, n, p)

    @classmethod
    def w(cls, m: int, n: int, p: int) -> "Mode":
        return cls("W", m, n, p)

    def max_wavenumber(self) -> int:
        return max(self.m, self.n, self.p)


@dataclass(frozen=True)
class QuadSpec:
    """Settings for cube quadrature and finite-difference probes."""

    nodes_per_axis: int = 32
    scheme: str = "uniform-trapezoid"
    fd_step: float = 1e-4

    def __post_init__(self):
        if self.nodes_per_axis < 2:
            raise DomainError("nodes_per_axis must be >= 2")
        if self.scheme not in ("uniform-trapezoid", "gauss"):
            raise DomainError(f"unknown scheme {self.scheme!r}")
        if not 0.0 < self.fd_step <= 0.01:
            raise DomainError("fd_step must lie in (0, 0.01]")


def eigenvalue(mode: Mode) -> int:
    """Eigenvalue of ``-laplace`` for the mode (an integer >= 2)."""
    m, n, p = mode.m, mode.n, mode.p
    if mode.family == "X0":
        return n * n + p * p
    if mode.family == "Y0":
        return m * m + p * p
    if mode.family == "Z0":
        return m * m + n * n
    return m * m + n * n + p * p


# --------------------------------------------------------------------------
# Separable-term representation.  Every component of every family is a single
# product  coeff * f(x) * g(y) * h(z)  with each factor sin(k.), cos(k.) or 1;
# evaluation, differentiation and tensor-grid work all derive from this.

class _Term(NamedTuple):
    coeff: float
    axes: tuple[tuple[str, int], tuple[str, int], tuple[str, int]]


_ONE = ("one", 0)


def _component_terms(mode: Mode):
    m, n, p = mode.m, mode.n, mode.p
    if mode.family == "X0":
        pref = 2.0 / math.sqrt(PI3 * (n * n + p * p))
        return (
            None,
            _Term(pref * p, (_ONE, ("sin", n), ("cos", p))),
            _Term(-pref * n, (_ONE, ("cos", n), ("sin", p))),
        )
    if mode.family == "Y0":
        pref = 2.0 / math.sqrt(PI3 * (m * m + p * p))
        return (
            _Term(-pref * p, (("sin", m), _ONE, ("cos", p))),
            None,
            _Term(pref * m, (("cos", m), _ONE, ("sin", p))),
        )
    if mode.family == "Z0":
        pref = 2.0 / math.sqrt(PI3 * (m * m + n * n))
        return (
            _Term(pref * n, (("sin", m), ("cos", n), _ONE)),
            _Term(-pref * m, (("cos", m), ("sin", n), _ONE)),
            None,
        )
    if mode.family == "V":
        pref = 2.0 * math.sqrt(2.0) / math.sqrt(PI3 * (n * n + p * p))
        return (
            None,
            _Term(pref * p, (("cos", m), ("sin", n), ("cos", p))),
            _Term(-pref * n, (("cos", m), ("cos", n), ("sin", p))),
        )
    pref = 2.0 * math.sqrt(2.0) / math.sqrt(
        PI3 * (m * m + n * n + p * p) * (n * n + p * p))
    return (
        _Term(pref * (n * n + p * p), (("sin", m), ("cos", n), ("cos", p))),
        _Term(-pref * m * n, (("cos", m), ("sin", n), ("cos", p))),
        _Term(-pref * m * p, (("cos", m), ("cos", n), ("sin", p))),
    )


def _axis_eval(kind: str, k: int, t):
    if kind == "sin":
        return np.sin(k * np.asarray(t, dtype=float))
    if kind == "cos":
        return np.cos(k * np.asarray(t, dtype=float))
    return np.ones_like(np.asarray(t, dtype=float))


def _eval_term(term: _Term, x, y, z):
    (kx, mx), (ky, my), (kz, mz) = term.axes
    return term.coeff * _axis_eval(kx, mx, x) * _axis_eval(ky, my, y) \
        * _axis_eval(kz, mz, z)


def _diff_term(term: _Term, axis: int):
    kind, k = term.axes[axis]
    if kind == "one":
        return None
    if kind == "sin":
        new_axis, factor = ("cos", k), float(k)
    else:
        new_axis, factor = ("sin", k), -float(k)
    axes = list(term.axes)
    axes[axis] = new_axis
    return _Term(term.coeff * factor, tuple(axes))


# --------------------------------------------------------------------------
# Pointwise evaluation.

def evaluate(mode: Mode, point) -> np.ndarray:
    """Field value at a point; broadcasting triples of arrays are accepted,
    in which case the leading axis of the result indexes components."""
    x, y, z = point
    comps = []
    for term in _component_terms(mode):
        if term is None:
            comps.append(np.zeros(np.broadcast(
                np.asarray(x, float), np.asarray(y, float),
                np.asarray(z, float)).shape))
        else:
            comps.append(_eval_term(term, x, y, z))
    out = np.stack([np.asarray(c, dtype=float) for c in comps])
    return out


def divergence(mode: Mode, point) -> float:
    """Analytic divergence at a point (term-wise differentiation).

    Zero in exact arithmetic for every valid mode; rounding leaves at most
    a few ulp of the individual terms.
    """
    x, y, z = point
    total = 0.0
    for axis, term in enumerate(_component_terms(mode)):
        if term is None:
            continue
        d = _diff_term(term, axis)
        if d is not None:
            total = total + _eval_term(d, x, y, z)
    if np.ndim(total) == 0:
        return float(total)
    return total


def gradient(mode: Mode, point) -> np.ndarray:
    """Jacobian J[i, j] = d(component i)/d(axis j), analytic."""
    x, y, z = point
    out = np.zeros((3, 3))
    for i, term in enumerate(_component_terms(mode)):
        if term is None:
            continue
        for j in range(3):
            d = _diff_term(term, j)
            if d is not None:
                out[i, j] = _eval_term(d, x, y, z)
    return out


def fd_residual(mode: Mode, point, spec: QuadSpec | None = None
                ) -> tuple[float, float]:
    """Central-difference residuals of the eigen-equation at an interior point.

    Returns ``(eigen_residual, div_residual)`` where the first is the max
    norm of ``-laplace_h(phi) - lambda phi`` with second differences of step
    ``spec.fd_step`` and the second is ``|div_h(phi)|`` with first
    differences.  Both are O(h^2) times a derivative scale.
    """
    if spec is None:
        spec = QuadSpec()
    h = spec.fd_step
    x, y, z = (float(c) for c in point)
    for c in (x, y, z):
        if min(c, PI - c) < 2.0 * h:
            raise DomainError(
                f"point {point} is within 2*fd_step of the boundary")
    lam = float(eigenvalue(mode))
    center = evaluate(mode, (x, y, z))
    lap = np.zeros(3)
    div = 0.0
    for j, offset in enumerate(((h, 0.0, 0.0), (0.0, h, 0.0), (0.0, 0.0, h))):
        plus = evaluate(mode, (x + offset[0], y + offset[1], z + offset[2]))
        minus = evaluate(mode, (x - offset[0], y - offset[1], z - offset[2]))
        lap += (plus - 2.0 * center + minus) / (h * h)
        div += (plus[j] - minus[j]) / (2.0 * h)
    eigen_res = float(np.max(np.abs(-lap - lam * center)))
    return eigen_res, abs(float(div))


# --------------------------------------------------------------------------
# Enumeration.

def enumerate_modes(lambda_max: float) -> list[tuple[Mode, int]]:
    """All modes with eigenvalue <= lambda_max, each paired with its
    eigenvalue, sorted by (eigenvalue, family order X0<Y0<Z0<V<W, (m, n, p)).

    Returns an empty list when lambda_max < 2.
    """
    out: list[tuple[Mode, int]] = []
    if lambda_max < 2.0:
        return out
    kmax = int(math.isqrt(int(lambda_max)))
    for n in range(1, kmax + 1):
        for p in range(1, kmax + 1):
            lam = n * n + p * p
            if lam <= lambda_max:
                out.append((Mode.x0(n, p), lam))
                out.append((Mode.y0(n, p), lam))
                out.append((Mode.z0(n, p), lam))
    for m in range(1, kmax + 1):
        for n in range(1, kmax + 1):
            for p in range(1, kmax + 1):
                lam = m * m + n * n + p * p
                if lam <= lambda_max:
                    out.append((Mode.v(m, n, p), lam))
                    out.append((Mode.w(m, n, p), lam))
    out.sort(key=lambda item: (item[1], _FAMILY_ORDER[item[0].family],
                               item[0].m, item[0].n, item[0].p))
    return out


# --------------------------------------------------------------------------
# Quadrature over the cube.  The uniform composite trapezoid rule on [0, pi]
# integrates every product of the occurring sin/cos factors exactly once the
# node count clears the aliasing threshold, so inner products are exact up to
# rounding.

def _axis_rule(spec: QuadSpec, nodes: int):
    if spec.scheme == "gauss":
        t, w = np.polynomial.legendre.leggauss(nodes)
        return 0.5 * PI * (t + 1.0), 0.5 * PI * w
    xs = np.linspace(0.0, PI, nodes)
    step = PI / (nodes - 1)
    w = np.full(nodes, step)
    w[0] = w[-1] = 0.5 * step
    return xs, w


def _required_nodes(*modes: Mode) -> int:
    kmax = max(mode.max_wavenumber() for mode in modes)
    return 2 * kmax + 2


def field_on_grid(mode: Mode, xs, ys, zs) -> list[np.ndarray]:
    """Components on the tensor grid of the given 1-D node arrays.

    Each entry has shape (len(xs), len(ys), len(zs)); identically zero
    components are returned as zero arrays.
    """
    xs = np.asarray(xs, dtype=float)
    ys = np.asarray(ys, dtype=float)
    zs = np.asarray(zs, dtype=float)
    shape = (xs.size, ys.size, zs.size)
    comps = []
    for term in _component_terms(mode):
        if term is None:
            comps.append(np.zeros(shape))
            continue
        (kx, mx), (ky, my), (kz, mz) = term.axes
        fx = _axis_eval(kx, mx, xs).reshape(-1, 1, 1)
        fy = _axis_eval(ky, my, ys).reshape(1, -1, 1)
        fz = _axis_eval(kz, mz, zs).reshape(1, 1, -1)
        comps.append(np.broadcast_to(term.coeff * fx * fy * fz, shape))
    return comps


def _resolve_spec(spec: QuadSpec | None, *modes: Mode) -> QuadSpec:
    need = _required_nodes(*modes)
    if spec is None:
        return QuadSpec(nodes_per_axis=max(need, 10))
    if spec.nodes_per_axis < need:
        raise DomainError(
            f"nodes_per_axis={spec.nodes_per_axis} risks aliasing; "
            f"need >= {need} for these modes")
    return spec


def inner_product(mode_i: Mode, mode_j: Mode,
                  spec: QuadSpec | None = None) -> float:
    """Mean-square pairing of two modes over the cube.

    The default node count is chosen from the wavenumbers so the rule is
    exact; an explicit spec below the aliasing threshold is rejected.
    """
    spec = _resolve_spec(spec, mode_i, mode_j)
    xs, wx = _axis_rule(spec, spec.nodes_per_axis)
    w3 = wx[:, None, None] * wx[None, :, None] * wx[None, None, :]
    fi = field_on_grid(mode_i, xs, xs, xs)
    fj = field_on_grid(mode_j, xs, xs, xs)
    total = 0.0
    for a, b in zip(fi, fj):
        total += float(np.sum(w3 * a * b))
    return total


def gram_matrix(modes: Iterable[Mode], spec: QuadSpec | None = None
                ) -> np.ndarray:
    """Matrix of pairwise inner products, computed in one BLAS product."""
    modes = list(modes)
    if not modes:
        return np.zeros((0, 0))
    spec = _resolve_spec(spec, *modes)
    xs, wx = _axis_rule(spec, spec.nodes_per_axis)
    sq = np.sqrt(wx)
    sw = sq[:, None, None] * sq[None, :, None] * sq[None, None, :]
    rows = np.empty((len(modes), 3 * xs.size ** 3))
    for i, mode in enumerate(modes):
        comps = field_on_grid(mode, xs, xs, xs)
        rows[i] = np.concatenate([(c * sw).ravel() for c in comps])
    return rows @ rows.T


def grad_inner_product(mode_i: Mode, mode_j: Mode,
                       spec: QuadSpec | None = None) -> float:
    """Pairing of the two Jacobians over the cube (optional diagnostic).

    Equals ``eigenvalue(mode_i)`` times the Kronecker delta for this basis;
    exposed as a cross-check, not as the defining pairing.
    """
    spec = _resolve_spec(spec, mode_i, mode_j)
    xs, wx = _axis_rule(spec, spec.nodes_per_axis)
    w3 = wx[:, None, None] * wx[None, :, None] * wx[None, None, :]
    grids = [np.asarray(v) for v in (xs, xs, xs)]
    total = 0.0
    for ti, tj in zip(_component_terms(mode_i), _component_terms(mode_j)):
        if ti is None or tj is None:
            continue
        for axis in range(3):
            di, dj = _diff_term(ti, axis), _diff_term(tj, axis)
            if di is None or dj is None:
                continue
            gi = _term_on_grid(di, *grids)
            gj = _term_on_grid(dj, *grids)
            total += float(np.sum(w3 * gi * gj))
    return total


def _term_on_grid(term: _Term, xs, ys, zs) -> np.ndarray:
    (kx, mx), (ky, my), (kz, mz) = term.axes
    fx = _axis_eval(kx, mx, xs).reshape(-1, 1, 1)
    fy = _axis_eval(ky, my, ys).reshape(1, -1, 1)
    fz = _axis_eval(kz, mz, zs).reshape(1, 1, -1)
    return np.broadcast_to(term.coeff * fx * fy * fz,
                           (xs.size, ys.size, zs.size))


# --------------------------------------------------------------------------
# Structural identities between the families.

def factorization_residual(mode: Mode, point) -> float:
    """Max-norm mismatch of the V/W factorizations through planar modes.

    V(m,n,p) = sqrt(2) cos(mx) X0(n,p); W(m,n,p) splits into cos(pz) Z0(m,n)
    and cos(ny) Y0(m,p) with eigenvalue-ratio weights.  Zero in exact
    arithmetic.
    """
    if mode.family not in ("V", "W"):
        raise DomainError("factorization identities exist only for V and W")
    x, y, z = point
    lhs = evaluate(mode, point)
    m, n, p = mode.m, mode.n, mode.p
    if mode.family == "V":
        rhs = math.sqrt(2.0) * np.cos(m * np.asarray(x, float)) \
            * evaluate(Mode.x0(n, p), point)
    else:
        denom = math.sqrt((m * m + n * n + p * p) * (n * n + p * p))
        c_z = n * math.sqrt(2.0) * math.sqrt(m * m + n * n) / denom
        c_y = p * math.sqrt(2.0) * math.sqrt(m * m + p * p) / denom
        rhs = c_z * np.cos(p * np.asarray(z, float)) \
            * evaluate(Mode.z0(m, n), point) \
            - c_y * np.cos(n * np.asarray(y, float)) \
            * evaluate(Mode.y0(m, p), point)
    return float(np.max(np.abs(lhs - rhs)))
