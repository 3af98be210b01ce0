"""Tests for the eigenfield families: values, residuals, enumeration,
orthonormality and the structural factorizations."""

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from stokescube import (
    DomainError,
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
    inner_product,
)
from stokescube.eigenbasis import PI, gradient

# Frozen from 40-digit evaluation of the closed forms.
SQRT_2_OVER_PI3 = 0.2539745437369639          # sqrt(2 / pi^3)
W_AXIS_COMPONENT = 0.4147386932078204         # 4 sqrt(2) / sqrt(6 pi^3)


def random_interior(rng, count, margin=0.05):
    return [tuple(float(v) for v in rng.uniform(margin, PI - margin, 3))
            for _ in range(count)]


class TestMode:
    def test_constructors_store_expected_indices(self):
        assert Mode.x0(2, 3) == Mode("X0", 0, 2, 3)
        assert Mode.y0(2, 3) == Mode("Y0", 2, 0, 3)
        assert Mode.z0(2, 3) == Mode("Z0", 2, 3, 0)
        assert Mode.v(1, 2, 3) == Mode("V", 1, 2, 3)
        assert Mode.w(1, 2, 3) == Mode("W", 1, 2, 3)

    @pytest.mark.parametrize("bad", [
        lambda: Mode("X0", 1, 1, 1),     # X0 requires m = 0
        lambda: Mode("Y0", 1, 2, 1),     # Y0 requires n = 0
        lambda: Mode("Z0", 1, 1, 1),     # Z0 requires p = 0
        lambda: Mode("X0", 0, 0, 1),     # active indices must be >= 1
        lambda: Mode("V", 0, 1, 1),
        lambda: Mode("W", 1, 1, 0),
        lambda: Mode("Q", 1, 1, 1),      # unknown family
        lambda: Mode("W", 1, 1, -2),
    ])
    def test_invalid_modes_rejected(self, bad):
        with pytest.raises(DomainError):
            bad()


class TestEigenvalue:
    @pytest.mark.parametrize("mode, expected", [
        (Mode.x0(1, 1), 2),
        (Mode.y0(1, 1), 2),
        (Mode.z0(2, 3), 13),
        (Mode.v(1, 2, 2), 9),
        (Mode.w(1, 1, 1), 3),
    ])
    def test_values(self, mode, expected):
        assert eigenvalue(mode) == expected

    def test_minimum_is_two(self):
        assert min(lam for _, lam in enumerate_modes(50)) == 2


class TestEvaluate:
    def test_x0_peak(self):
        val = evaluate(Mode.x0(1, 1), (0.0, PI / 2, 0.0))
        assert val == pytest.approx([0.0, SQRT_2_OVER_PI3, 0.0], abs=1e-15)

    def test_x0_vanishes_at_origin(self):
        assert np.all(evaluate(Mode.x0(1, 1), (0.0, 0.0, 0.0)) == 0.0)

    def test_w_on_axis(self):
        val = evaluate(Mode.w(1, 1, 1), (PI / 2, 0.0, 0.0))
        assert val == pytest.approx([W_AXIS_COMPONENT, 0.0, 0.0], abs=1e-15)

    def test_matches_symbolic_fields(self):
        """Transcription oracle: rebuild each family in sympy and compare."""
        sympy = pytest.importorskip("sympy")
        x, y, z = sympy.symbols("x y z")
        rng = np.random.default_rng(11)
        cases = [
            (Mode.x0(2, 3), 2, 3, None),
            (Mode.y0(1, 2), 1, 2, None),
            (Mode.z0(3, 1), 3, 1, None),
            (Mode.v(2, 1, 3), None, None, None),
            (Mode.w(3, 2, 1), None, None, None),
        ]
        for mode, *_ in cases:
            m, n, p = mode.m, mode.n, mode.p
            pi3 = sympy.pi ** 3
            if mode.family == "X0":
                pref = 2 / sympy.sqrt(pi3 * (n * n + p * p))
                field = (0, pref * p * sympy.sin(n * y) * sympy.cos(p * z),
                         -pref * n * sympy.cos(n * y) * sympy.sin(p * z))
            elif mode.family == "Y0":
                pref = 2 / sympy.sqrt(pi3 * (m * m + p * p))
                field = (-pref * p * sympy.sin(m * x) * sympy.cos(p * z), 0,
                         pref * m * sympy.cos(m * x) * sympy.sin(p * z))
            elif mode.family == "Z0":
                pref = 2 / sympy.sqrt(pi3 * (m * m + n * n))
                field = (pref * n * sympy.sin(m * x) * sympy.cos(n * y),
                         -pref * m * sympy.cos(m * x) * sympy.sin(n * y), 0)
            elif mode.family == "V":
                pref = 2 * sympy.sqrt(2) * sympy.cos(m * x) \
                    / sympy.sqrt(pi3 * (n * n + p * p))
                field = (0, pref * p * sympy.sin(n * y) * sympy.cos(p * z),
                         -pref * n * sympy.cos(n * y) * sympy.sin(p * z))
            else:
                pref = 2 * sympy.sqrt(2) / sympy.sqrt(
                    pi3 * (m * m + n * n + p * p) * (n * n + p * p))
                field = (pref * (n * n + p * p) * sympy.sin(m * x)
                         * sympy.cos(n * y) * sympy.cos(p * z),
                         -pref * m * n * sympy.cos(m * x) * sympy.sin(n * y)
                         * sympy.cos(p * z),
                         -pref * m * p * sympy.cos(m * x) * sympy.cos(n * y)
                         * sympy.sin(p * z))
            fns = [sympy.lambdify((x, y, z), comp, "numpy")
                   for comp in field]
            for pt in random_interior(rng, 5, margin=0.0):
                got = evaluate(mode, pt)
                want = [float(fn(*pt)) for fn in fns]
                assert got == pytest.approx(want, abs=1e-14)

    def test_symbolic_eigen_equation(self):
        """The implemented fields satisfy -laplace(phi) = lambda phi and
        div(phi) = 0 exactly (symbolic check with symbolic indices)."""
        sympy = pytest.importorskip("sympy")
        x, y, z = sympy.symbols("x y z")
        m, n, p = sympy.symbols("m n p", positive=True, integer=True)
        fields = {
            "X0": ((0,
                    p * sympy.sin(n * y) * sympy.cos(p * z),
                    -n * sympy.cos(n * y) * sympy.sin(p * z)), n**2 + p**2),
            "W": (((n**2 + p**2) * sympy.sin(m * x) * sympy.cos(n * y)
                   * sympy.cos(p * z),
                   -m * n * sympy.cos(m * x) * sympy.sin(n * y)
                   * sympy.cos(p * z),
                   -m * p * sympy.cos(m * x) * sympy.cos(n * y)
                   * sympy.sin(p * z)), m**2 + n**2 + p**2),
            "V": ((0,
                   sympy.cos(m * x) * p * sympy.sin(n * y) * sympy.cos(p * z),
                   -sympy.cos(m * x) * n * sympy.cos(n * y)
                   * sympy.sin(p * z)), m**2 + n**2 + p**2),
        }
        for family, (field, lam) in fields.items():
            div = sum(sympy.diff(comp, var)
                      for comp, var in zip(field, (x, y, z)))
            assert sympy.simplify(div) == 0, family
            for comp in field:
                if comp == 0:
                    continue
                lap = sum(sympy.diff(comp, var, 2) for var in (x, y, z))
                assert sympy.simplify(-lap - lam * comp) == 0, family


class TestDivergence:
    def test_x0_exactly_zero(self):
        rng = np.random.default_rng(0)
        for pt in random_interior(rng, 20):
            assert divergence(Mode.x0(2, 3), pt) == 0.0

    @pytest.mark.parametrize("mode, point", [
        (Mode.v(1, 2, 2), (1.0, 2.0, 0.5)),
        (Mode.w(2, 1, 3), (0.3, 0.7, 2.1)),
    ])
    def test_spot_values(self, mode, point):
        assert abs(divergence(mode, point)) <= 1e-12

    def test_all_families_small_everywhere(self):
        rng = np.random.default_rng(1)
        points = random_interior(rng, 100)
        modes = []
        for i in range(1, 5):
            for j in range(1, 5):
                modes += [Mode.x0(i, j), Mode.y0(i, j), Mode.z0(i, j)]
                for k in range(1, 5):
                    modes += [Mode.v(i, j, k), Mode.w(i, j, k)]
        worst = max(abs(divergence(mode, pt))
                    for mode in modes for pt in points[::10])
        assert worst <= 1e-12


class TestFdResidual:
    def test_x0_spot(self):
        eig, _ = fd_residual(Mode.x0(1, 1), (1.0, 1.0, 1.0))
        assert eig <= 1e-6

    def test_w_div_spot(self):
        _, div = fd_residual(Mode.w(1, 1, 1), (1.5, 0.5, 0.5))
        assert div <= 1e-6

    def test_y0_coarse_step(self):
        eig, _ = fd_residual(Mode.y0(1, 1), (PI / 2, 1.0, PI / 2),
                             QuadSpec(fd_step=1e-3))
        assert eig <= 1e-4

    def test_rejects_points_near_boundary(self):
        with pytest.raises(DomainError):
            fd_residual(Mode.x0(1, 1), (1e-5, 1.0, 1.0))

    def test_consistent_with_eigenvalue(self):
        rng = np.random.default_rng(2)
        for mode in (Mode.x0(2, 1), Mode.y0(3, 2), Mode.z0(1, 4),
                     Mode.v(2, 2, 1), Mode.w(1, 3, 2)):
            for pt in random_interior(rng, 10):
                eig, div = fd_residual(mode, pt)
                assert eig <= 1e-4
                assert div <= 1e-4


class TestEnumerate:
    def test_empty_below_first_eigenvalue(self):
        assert enumerate_modes(1.5) == []

    def test_first_shell(self):
        got = enumerate_modes(2)
        assert [(m.family, m.m, m.n, m.p) for m, _ in got] == [
            ("X0", 0, 1, 1), ("Y0", 1, 0, 1), ("Z0", 1, 1, 0)]
        assert all(lam == 2 for _, lam in got)

    def test_second_shell_appends_v_and_w(self):
        got = enumerate_modes(3)
        assert len(got) == 5
        assert [(m.family, lam) for m, lam in got[3:]] == [("V", 3), ("W", 3)]

    @pytest.mark.parametrize("bound, count", [(2, 3), (3, 5), (5, 11)])
    def test_golden_counts(self, bound, count):
        assert len(enumerate_modes(bound)) == count

    def test_sorted_by_contract(self):
        got = enumerate_modes(30)
        order = {"X0": 0, "Y0": 1, "Z0": 2, "V": 3, "W": 4}
        keys = [(lam, order[m.family], m.m, m.n, m.p) for m, lam in got]
        assert keys == sorted(keys)

    @settings(max_examples=30, deadline=None)
    @given(st.integers(min_value=2, max_value=25),
           st.integers(min_value=0, max_value=15))
    def test_prefix_monotone(self, lo, extra):
        small = enumerate_modes(lo)
        large = enumerate_modes(lo + extra)
        assert large[:len(small)] == small


class TestInnerProduct:
    def test_normalized(self):
        assert inner_product(Mode.x0(1, 1), Mode.x0(1, 1)) == \
            pytest.approx(1.0, abs=1e-10)

    @pytest.mark.parametrize("a, b", [
        (Mode.x0(1, 1), Mode.y0(1, 1)),
        (Mode.w(1, 1, 1), Mode.v(1, 1, 1)),
        (Mode.x0(1, 2), Mode.x0(2, 1)),
        (Mode.z0(1, 1), Mode.w(1, 1, 1)),
    ])
    def test_orthogonal(self, a, b):
        assert abs(inner_product(a, b)) <= 1e-10

    def test_insufficient_nodes_rejected(self):
        with pytest.raises(DomainError):
            inner_product(Mode.x0(4, 4), Mode.x0(4, 4),
                          QuadSpec(nodes_per_axis=6))

    def test_gauss_scheme_agrees(self):
        spec = QuadSpec(nodes_per_axis=24, scheme="gauss")
        assert inner_product(Mode.w(1, 2, 1), Mode.w(1, 2, 1), spec) == \
            pytest.approx(1.0, abs=1e-10)

    def test_gram_identity_small(self):
        modes = [m for m, _ in enumerate_modes(6)]
        gram = gram_matrix(modes)
        assert np.max(np.abs(gram - np.eye(len(modes)))) <= 1e-10

    def test_gradient_pairing_matches_eigenvalue(self):
        # Optional diagnostic: the Jacobian pairing reproduces the
        # eigenvalue on the diagonal and vanishes off it.
        modes = [Mode.x0(1, 1), Mode.y0(1, 1), Mode.v(1, 1, 1),
                 Mode.w(1, 1, 1), Mode.w(1, 2, 1)]
        for i, mi in enumerate(modes):
            for mj in modes[i:]:
                want = float(eigenvalue(mi)) if mi == mj else 0.0
                assert grad_inner_product(mi, mj) == \
                    pytest.approx(want, abs=1e-9)


class TestGradient:
    def test_matches_finite_differences(self):
        rng = np.random.default_rng(5)
        h = 1e-6
        for mode in (Mode.x0(1, 2), Mode.w(2, 1, 1)):
            for pt in random_interior(rng, 5):
                jac = gradient(mode, pt)
                for axis in range(3):
                    lo = list(pt)
                    hi = list(pt)
                    lo[axis] -= h
                    hi[axis] += h
                    fd = (evaluate(mode, hi) - evaluate(mode, lo)) / (2 * h)
                    assert jac[:, axis] == pytest.approx(fd, abs=1e-8)


class TestBoundaryConditions:
    def test_normal_components_and_tangential_derivatives(self):
        rng = np.random.default_rng(7)
        modes = [Mode.x0(1, 2), Mode.y0(2, 1), Mode.z0(2, 2),
                 Mode.v(1, 1, 2), Mode.w(2, 1, 3)]
        h = 1e-4
        for mode in modes:
            for axis in range(3):
                for face in (0.0, PI):
                    for s1, s2 in rng.uniform(0, PI, (10, 2)):
                        pt = [float(s1), float(s2)]
                        pt.insert(axis, face)
                        phi = evaluate(mode, tuple(pt))
                        assert abs(float(phi[axis])) <= 1e-12
                        lo, hi = list(pt), list(pt)
                        lo[axis] -= h
                        hi[axis] += h
                        dphi = (evaluate(mode, tuple(hi))
                                - evaluate(mode, tuple(lo))) / (2 * h)
                        for other in range(3):
                            if other != axis:
                                assert abs(float(dphi[other])) <= 1e-6


class TestFactorization:
    @pytest.mark.parametrize("mode, point", [
        (Mode.v(1, 1, 1), (0.4, 1.1, 2.2)),
        (Mode.w(2, 1, 1), (1.0, 1.0, 1.0)),
        (Mode.v(3, 2, 1), (PI, 0.5, 0.5)),
    ])
    def test_spot_values(self, mode, point):
        assert factorization_residual(mode, point) <= 1e-12

    def test_planar_families_rejected(self):
        with pytest.raises(DomainError):
            factorization_residual(Mode.x0(1, 1), (1.0, 1.0, 1.0))

    def test_random_points_all_small_indices(self):
        rng = np.random.default_rng(9)
        points = random_interior(rng, 1000, margin=0.0)
        for ctor in (Mode.v, Mode.w):
            for m in (1, 2, 3):
                for n in (1, 2, 3):
                    for p in (1, 2, 3):
                        mode = ctor(m, n, p)
                        worst = max(factorization_residual(mode, pt)
                                    for pt in points[::50])
                        assert worst <= 1e-12
