import math

import numpy as np
import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from sicsets.projective import (
    ProjectivePoint,
    cross_ratio,
    is_correctly_separated,
    moment_map,
    on_incircle,
    point,
)
from sicsets.heisenberg import hesse_midpoint_solution, s_theta
from sicsets.torus import (
    PINCH,
    UNCONSTRAINED,
    Z1,
    Z2,
    TorusCoord,
    incircle_angle,
    incircle_point,
    pinch_discriminant_threshold,
    pinch_rule,
    separation_cos,
    separation_cos_trig,
    separation_curve,
    sigma_pi_quadratic,
    sigma_solutions,
    torus_coord_of,
    z_of,
    z_vector,
)

angle = st.floats(-math.pi, math.pi, allow_nan=False)
phi_ok = st.floats(-1.4, 1.4, allow_nan=False)


def test_z1_z2_and_pinch():
    assert Z1 == point(0, 1, -np.exp(2j * math.pi / 3))
    assert is_correctly_separated(Z1, Z2)
    assert z_of((2.3, math.pi / 2)) == PINCH


def test_torus_coord_normalisation():
    c = TorusCoord(7.0, 2.0)
    assert -math.pi < c.sigma <= math.pi and -math.pi / 2 < c.phi <= math.pi / 2
    assert c.sigma == pytest.approx(7.0 - 2 * math.pi)
    assert c.phi == pytest.approx(2.0 - math.pi)
    assert TorusCoord(1.0, -math.pi / 2) == TorusCoord(0.0, math.pi / 2)
    assert TorusCoord(1.0, math.pi / 2).is_pinch


@given(angle, phi_ok)
def test_torus_points_separated_from_z1_z2(sigma, phi):
    z = z_of((sigma, phi))
    assert is_correctly_separated(z, Z1) and is_correctly_separated(z, Z2)


def test_grid_separated_from_z1_z2():
    for sigma in np.linspace(-math.pi, math.pi, 64):
        for phi in np.linspace(-math.pi / 2, math.pi / 2, 64):
            z = ProjectivePoint(z_vector(sigma, phi))
            assert abs(cross_ratio(z, Z1) - 0.25) <= 1e-12
            assert abs(cross_ratio(z, Z2) - 0.25) <= 1e-12


@given(angle, st.floats(-math.pi / 2, math.pi / 2))
def test_moment_image_is_incircle_point(sigma, phi):
    x = moment_map(z_of((sigma, phi)))
    assert np.allclose(x, incircle_point(phi), atol=1e-12)
    assert on_incircle(x)


@given(angle, phi_ok)
def test_phi_shift_by_pi(sigma, phi):
    assert np.allclose(z_vector(sigma, phi + math.pi), -z_vector(sigma, phi), atol=1e-15)


@given(angle, phi_ok)
def test_torus_coord_round_trip(sigma, phi):
    assume(abs(math.cos(phi)) > 1e-3)
    c = TorusCoord(sigma, phi)
    back = torus_coord_of(z_of(c))
    assert abs(back.phi - c.phi) < 1e-9
    assert abs(math.remainder(back.sigma - c.sigma, 2 * math.pi)) < 1e-7


def test_torus_coord_of_rejects_far_points():
    with pytest.raises(ValueError):
        torus_coord_of(point(1, 0, 0))


@given(angle)
def test_incircle_angle_inverts(theta):
    t = TorusCoord(0.0, theta).phi
    assert abs(math.remainder(incircle_angle(incircle_point(t)) - t, math.pi)) < 1e-9


# ----------------------------------------------------------- correct separation on the torus

def test_separation_cos_examples():
    assert separation_cos(0, 0) == pytest.approx(-11 / 16)
    assert separation_cos(1, -1 / 3) is UNCONSTRAINED
    assert separation_cos(1 / math.sqrt(3), 1 / math.sqrt(3)) == pytest.approx(-0.5)


def test_trig_form_matches_rational_form():
    rng = np.random.default_rng(100)
    done = 0
    while done < 100:
        phi, psi = rng.uniform(-1.3, 1.3, 2)
        x, y = math.tan(phi), math.tan(psi)
        if abs(1 + 3 * x * y) < 0.05:
            continue
        assert abs(separation_cos(x, y) - separation_cos_trig(phi, psi)) <= 1e-12 * max(1, abs(separation_cos(x, y)))
        done += 1


def test_sigma_solutions_are_separated():
    rng = np.random.default_rng(4)
    hits = 0
    for _ in range(300):
        phi, psi, tau = rng.uniform(-1.4, 1.4), rng.uniform(-1.4, 1.4), rng.uniform(-math.pi, math.pi)
        sols = sigma_solutions(phi, psi, tau)
        if sols is UNCONSTRAINED:
            continue
        anchor = z_of((tau, psi))
        for s in sols:
            hits += 1
            assert abs(cross_ratio(z_of((s, phi)), anchor) - 0.25) <= 1e-9
        # a sigma away from the solutions is not separated
        probe = tau + 0.123
        if all(abs(math.remainder(probe - s, 2 * math.pi)) > 1e-3 for s in sols):
            assert abs(cross_ratio(z_of((probe, phi)), anchor) - 0.25) > 1e-9
    assert hits > 100


def test_sigma_solutions_unconstrained_on_c2_c3():
    # 1 + 3xy = 0 puts the points over the midpoints of two sides, where any phase works
    phi, psi = math.atan(1 / math.sqrt(3)), math.atan(-1 / math.sqrt(3))
    assert sigma_solutions(phi, psi, 0.0) is UNCONSTRAINED
    for s in np.linspace(-3, 3, 7):
        assert abs(cross_ratio(z_of((s, phi)), z_of((0.0, psi))) - 0.25) <= 1e-12


def test_sigma_solutions_pinch_rejected():
    with pytest.raises(ValueError):
        sigma_solutions(math.pi / 2, 0.0, 0.0)


@pytest.mark.parametrize("t", [-0.4, 0.0, 0.2, 0.9])
def test_sigma_pi_quadratic_roots(t):
    a, b, c = sigma_pi_quadratic(t)
    disc = b * b - 4 * a * c
    for x in np.roots([a, b, c]) if disc >= 0 else []:
        assert separation_cos(float(x), t) == pytest.approx(-1.0, abs=1e-9)


def test_pinch_threshold_is_discriminant_root():
    t = pinch_discriminant_threshold()
    a, b, c = sigma_pi_quadratic(t)
    assert abs(b * b - 4 * a * c) < 1e-9
    assert t == pytest.approx(math.sqrt(5 / 27), abs=1e-15)


# ----------------------------------------------------------- separation curves

def test_curve_samples_are_separated():
    curve = separation_curve((0.4, 0.3), 400)
    anchor = z_of(curve.anchor)
    assert curve.samples
    for s, phi, _ in curve.samples:
        assert abs(cross_ratio(z_of((s, phi)), anchor) - 0.25) <= 1e-9


@pytest.mark.parametrize("theta,expected", [
    (math.pi / 7, 2), (math.pi / 16, 1), (-math.pi / 7, 2),
    # the gap between the two pieces is ~1e-3 wide in tan(phi) here, finer than the grid
    (math.atan(0.6), 2), (1.2, 2),
])
def test_curve_components(theta, expected):
    assert separation_curve((0.0, theta)).components == expected


def test_curve_component_transition():
    resolution = 2000
    lo, hi = 0.3, 0.6
    assert separation_curve((0.0, math.atan(lo)), resolution).components == 1
    assert separation_curve((0.0, math.atan(hi)), resolution).components == 2
    while hi - lo > 1e-7:
        mid = (lo + hi) / 2
        if separation_curve((0.0, math.atan(mid)), resolution).components == 1:
            lo = mid
        else:
            hi = mid
    assert abs(lo - math.sqrt(5 / 27)) <= math.pi / resolution


def test_curve_over_side_midpoint_uses_grid():
    curve = separation_curve((0.0, math.pi / 6), 400)
    assert curve.components >= 1
    anchor = z_of(curve.anchor)
    for s, phi, _ in curve.samples[:50]:
        assert abs(cross_ratio(z_of((s, phi)), anchor) - 0.25) <= 1e-9


def test_curve_bad_input():
    with pytest.raises(ValueError):
        separation_curve((0.0, math.pi / 2))
    with pytest.raises(ValueError):
        separation_curve((0.0, 0.1), resolution=1)


# ----------------------------------------------------------- pinch rule

def test_pinch_rule_on_hesse():
    c = hesse_midpoint_solution()
    verdict = pinch_rule(c)
    assert verdict.contains_pinch
    for p in c:
        if p in (Z1, Z2, PINCH):
            continue
        x = moment_map(p)
        assert min(x) < 1e-12
        assert verdict.admits(incircle_angle(x))


def test_pinch_rule_without_pinch():
    v = pinch_rule(s_theta(0.3))
    assert not v.contains_pinch and v.admits(0.123)
    with pytest.raises(ValueError):
        pinch_rule([Z1, PINCH])
