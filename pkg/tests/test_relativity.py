import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from squeeze_lorentz.errors import NotLorentz, SuperluminalInput
from squeeze_lorentz.relativity import (METRIC, Boost3, Velocity2,
                                        add_velocities, boost_matrix_rapidity,
                                        boost_matrix_velocity,
                                        boost_polar_decompose,
                                        galilean_limit_check, gamma,
                                        gamma_compose, rotation_matrix)
from squeeze_lorentz.verify import random_velocity


@st.composite
def velocities(draw, speed_max=0.999):
    speed = draw(st.floats(0.0, speed_max))
    ang = draw(st.floats(-math.pi, math.pi))
    return Velocity2(speed * math.cos(ang), speed * math.sin(ang))


def test_superluminal_rejected():
    with pytest.raises(SuperluminalInput):
        Velocity2(0.8, 0.6)
    with pytest.raises(SuperluminalInput):
        Velocity2(float("nan"), 0.0)
    Velocity2(1 - 1e-6, 0.0)


@pytest.mark.parametrize("v, g", [((0, 0), 1.0), ((0.6, 0), 1.25),
                                  ((0.3, 0.4), 1.1547005383792515290)])
def test_gamma(v, g):
    assert gamma(Velocity2(*v)) == pytest.approx(g, rel=1e-15)


class TestBoostMatrices:
    def test_zero_velocity(self):
        assert np.array_equal(boost_matrix_velocity(Velocity2(0, 0)).m, np.eye(3))

    def test_x_boost_first_row(self):
        m = boost_matrix_velocity(Velocity2(0.6, 0)).m
        assert m[0] == pytest.approx([1.25, -0.75, 0.0], abs=1e-15)

    def test_oblique_entries(self):
        # evaluated entrywise at 30 digits
        expected = np.array([
            [1.1547005383792515290, -0.34641016151377544589, -0.46188021535170063725],
            [-0.34641016151377544589, 1.0556921938165305463, 0.074256258422040735303],
            [-0.46188021535170063725, 0.074256258422040735303, 1.0990083445627209896],
        ])
        b = boost_matrix_velocity(Velocity2(0.3, 0.4))
        np.testing.assert_allclose(b.m, expected, rtol=0, atol=1e-15)
        assert b.metric_residual() < 1e-14
        rho = math.atanh(0.5)
        np.testing.assert_allclose(boost_matrix_rapidity(rho, math.atan2(0.4, 0.3)).m, b.m,
                                   atol=1e-14)

    def test_rapidity_zero(self):
        for phi in (0.0, 1.0, -2.5):
            np.testing.assert_allclose(boost_matrix_rapidity(0.0, phi).m, np.eye(3), atol=0)

    def test_textbook_x_boost(self):
        rho = 0.9
        m = boost_matrix_rapidity(rho, 0.0).m
        ch, sh = math.cosh(rho), math.sinh(rho)
        expected = np.array([[ch, -sh, 0], [-sh, ch, 0], [0, 0, 1]])
        np.testing.assert_allclose(m, expected, atol=1e-15)

    def test_textbook_y_boost(self):
        rho = 0.9
        m = boost_matrix_rapidity(rho, math.pi / 2).m
        ch, sh = math.cosh(rho), math.sinh(rho)
        expected = np.array([[ch, 0, -sh], [0, 1, 0], [-sh, 0, ch]])
        np.testing.assert_allclose(m, expected, atol=1e-15)

    def test_rapidity_one(self):
        m = boost_matrix_rapidity(1.0, math.pi / 3).m
        assert m[0, 0] == math.cosh(1.0)

    def test_rejects_negative_rapidity(self):
        with pytest.raises(ValueError):
            boost_matrix_rapidity(-1.0, 0.0)

    def test_metric_random(self):
        rng = np.random.default_rng(11)
        worst = max(boost_matrix_velocity(random_velocity(rng, 0.999)).metric_residual()
                    for _ in range(1000))
        assert worst < 1e-10

    @given(velocities())
    def test_boost_invariants(self, v):
        b = boost_matrix_velocity(v)
        assert b.symmetry_residual() == 0
        assert b.metric_residual() < 1e-10
        assert b.m[0, 0] >= 1

    @given(st.floats(0, 5), st.floats(-math.pi, math.pi))
    def test_parametrizations_agree(self, rho, phi):
        # relative to the largest entry: v -> gamma is ill-conditioned as |v| -> 1
        br = boost_matrix_rapidity(rho, phi).m
        bv = boost_matrix_velocity(Velocity2(math.tanh(rho) * math.cos(phi),
                                             math.tanh(rho) * math.sin(phi))).m
        assert np.max(np.abs(br - bv)) <= 1e-12 * np.max(np.abs(br))

    def test_boost3_read_only(self):
        b = Boost3(np.eye(3))
        with pytest.raises(ValueError):
            b.m[0, 0] = 2.0


class TestAddVelocities:
    def test_zero_left(self):
        v = Velocity2(0.3, -0.5)
        w = add_velocities(Velocity2(0, 0), v)
        assert w.array == pytest.approx(v.array, abs=1e-16)

    def test_collinear(self):
        w = add_velocities(Velocity2(0.5, 0), Velocity2(0.5, 0))
        assert w.array == pytest.approx([0.8, 0.0], abs=1e-15)

    def test_perpendicular(self):
        w = add_velocities(Velocity2(0.5, 0), Velocity2(0, 0.5))
        assert w.array == pytest.approx([0.5, 0.43301270189221932338], abs=1e-15)
        # independent route: velocity read off the product of boost matrices
        m = boost_matrix_velocity(Velocity2(0.5, 0)).m @ boost_matrix_velocity(Velocity2(0, 0.5)).m
        dec = boost_polar_decompose(m)
        assert -dec.boost.m[1:, 0] / dec.boost.m[0, 0] == pytest.approx(w.array, abs=1e-14)

    @pytest.mark.parametrize("ang_u, ang_v", [(0, 0), (0, math.pi / 2), (0.3, 2.0), (1.0, 1.0 + math.pi)])
    def test_closure_at_extremes(self, ang_u, ang_v):
        s = 1 - 1e-6
        u = Velocity2(s * math.cos(ang_u), s * math.sin(ang_u))
        v = Velocity2(s * math.cos(ang_v), s * math.sin(ang_v))
        w = add_velocities(u, v)
        assert w.speed < 1

    @given(velocities(), velocities())
    def test_gamma_triangle(self, u, v):
        # 1 - |w|^2 cancels catastrophically, so gamma(w) carries ~eps * gamma^2
        gw = gamma_compose(u, v)
        assert gw == pytest.approx(gamma(add_velocities(u, v)), rel=1e-12 + 1e-15 * gw**2)

    def test_gamma_triangle_random(self):
        rng = np.random.default_rng(5)
        worst = 0.0
        for _ in range(1000):
            u, v = random_velocity(rng), random_velocity(rng)
            worst = max(worst, abs(gamma_compose(u, v) / gamma(add_velocities(u, v)) - 1))
        assert worst < 1e-12

    @pytest.mark.parametrize("u, v, g", [
        ((0, 0), (0.6, 0), 1.25),
        ((0.5, 0), (0, 0.5), 4 / 3),
        ((0.5, 0), (0.5, 0), 5 / 3),
    ])
    def test_gamma_compose_values(self, u, v, g):
        assert gamma_compose(Velocity2(*u), Velocity2(*v)) == pytest.approx(g, rel=1e-15)

    def test_non_commutative(self):
        u, v = Velocity2(0.6, 0.1), Velocity2(-0.2, 0.7)
        uv, vu = add_velocities(u, v), add_velocities(v, u)
        assert np.linalg.norm(uv.array - vu.array) > 1e-3
        assert uv.speed == pytest.approx(vu.speed, abs=1e-12)

    @given(velocities(), velocities())
    def test_magnitudes_symmetric(self, u, v):
        assert add_velocities(u, v).speed == pytest.approx(add_velocities(v, u).speed, abs=1e-12)


class TestPolarDecompose:
    def test_pure_boost(self):
        b = boost_matrix_velocity(Velocity2(0.2, -0.6))
        dec = boost_polar_decompose(b.m)
        np.testing.assert_allclose(dec.boost.m, b.m, atol=1e-14)
        assert dec.angle == pytest.approx(0.0, abs=1e-14)

    def test_pure_rotation(self):
        dec = boost_polar_decompose(rotation_matrix(1.2))
        np.testing.assert_allclose(dec.boost.m, np.eye(3), atol=1e-15)
        assert dec.angle == pytest.approx(1.2, abs=1e-15)

    @given(velocities(0.99), velocities(0.99))
    def test_reconstruction(self, u, v):
        m = boost_matrix_velocity(u).m @ boost_matrix_velocity(v).m
        dec = boost_polar_decompose(m)
        rebuilt = dec.boost.m @ rotation_matrix(dec.angle)
        assert np.max(np.abs(rebuilt - m)) < 1e-10 * np.max(np.abs(m))
        assert -math.pi < dec.angle <= math.pi
        np.testing.assert_allclose(dec.boost.m, boost_matrix_velocity(add_velocities(u, v)).m,
                                   atol=1e-9 * np.max(np.abs(m)))

    def test_rejects_non_lorentz(self):
        with pytest.raises(NotLorentz, match="metric"):
            boost_polar_decompose(2 * np.eye(3))

    def test_rejects_time_reversal(self):
        with pytest.raises(NotLorentz, match="orthochronous"):
            boost_polar_decompose(-np.eye(3))

    def test_rejects_reflection(self):
        with pytest.raises(NotLorentz, match="det"):
            boost_polar_decompose(np.diag([1.0, -1.0, 1.0]))

    def test_metric_constant(self):
        assert np.array_equal(METRIC, np.diag([1.0, -1.0, -1.0]))


class TestGalilean:
    def test_zero(self):
        assert galilean_limit_check(Velocity2(0, 0), Velocity2(0, 0), 1.0) == 0.0

    def test_scaling_ratio(self):
        u, v = Velocity2(0.5, 0), Velocity2(0, 0.5)
        ratio = galilean_limit_check(u, v, 10) / galilean_limit_check(u, v, 100)
        assert 80 < ratio < 120

    def test_fitted_exponent(self):
        u, v = Velocity2(0.5, 0), Velocity2(0, 0.5)
        scales = np.array([10.0, 100.0, 1000.0])
        devs = [galilean_limit_check(u, v, s) for s in scales]
        slope = np.polyfit(np.log(scales), np.log(devs), 1)[0]
        assert slope == pytest.approx(-2.0, abs=0.1)

    def test_monotone(self):
        u, v = np.array([3.0, 1.0]), np.array([-2.0, 4.0])
        devs = [galilean_limit_check(u, v, s) for s in (10, 30, 100, 300, 1000)]
        assert all(a > b for a, b in zip(devs, devs[1:]))

    def test_scale_below_one_rejected(self):
        with pytest.raises(ValueError):
            galilean_limit_check(Velocity2(0, 0), Velocity2(0, 0), 0.5)
