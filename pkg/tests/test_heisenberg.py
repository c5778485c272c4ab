import itertools
import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from sicsets.heisenberg import (
    SIX_FIXED,
    circle_triple,
    classify_fiducial,
    clifford_M,
    clifford_residuals,
    clock_matrix,
    cos3_fiducial,
    cp3_fiducial,
    h_orbit,
    hesse_midpoint_solution,
    m_eigen_config,
    m_eigenvectors,
    midpoint_solution,
    s_theta,
    shift_matrix,
    tetrahedra_cp1,
    wh_elements,
    wh_orbit,
)
from sicsets.projective import (
    OMEGA,
    ProjectivePoint,
    collinear_triples,
    cross_ratio,
    moment_map,
    on_incircle,
    point,
    verify_sic,
)
from sicsets.torus import incircle_point, z_of

THETAS = [-math.pi / 2 + k * math.pi / 32 for k in range(32)]
MIDPOINTS = {(0.0, 0.5, 0.5), (0.5, 0.0, 0.5), (0.5, 0.5, 0.0)}


def fibre_point(x, alpha, beta):
    return ProjectivePoint(np.sqrt(np.clip(x, 0, None)) * np.array([1, np.exp(1j * alpha), np.exp(1j * beta)]))


# ----------------------------------------------------------- shift and clock

def test_generators():
    assert np.array_equal(shift_matrix(3), np.array([[0, 1, 0], [0, 0, 1], [1, 0, 0]]))
    assert np.allclose(clock_matrix(3), np.diag([1, OMEGA, OMEGA**2]))
    assert len(wh_elements(3)) == 9 and len(wh_elements(4)) == 16


def test_weyl_relation():
    # with this shift the commutation reads B A^-1 = w A^-1 B (equivalently A B = w B A)
    a, b = shift_matrix(3), clock_matrix(3)
    ainv = np.linalg.inv(a)
    assert np.max(np.abs(b @ ainv - OMEGA * ainv @ b)) <= 1e-15
    assert np.max(np.abs(a @ b - OMEGA * b @ a)) <= 1e-15


@pytest.mark.parametrize("u", ["A", "B"])
def test_wh_orbit_equivariant(u):
    m = shift_matrix(3) if u == "A" else clock_matrix(3)
    rng = np.random.default_rng(1)
    for _ in range(10):
        z = ProjectivePoint(rng.normal(size=3) + 1j * rng.normal(size=3))
        lhs = wh_orbit(z.transformed(m))
        assert lhs.same_set(wh_orbit(z).transformed(m))


# ----------------------------------------------------------- SIC constructions

def test_wh_orbit_midpoint_fiducial():
    c = wh_orbit([0, 1, 1])
    r = verify_sic(c)
    assert r.is_sic and r.max_deviation <= 1e-12 and r.resolution_defect <= 1e-12
    assert r.separated_pairs == 36


def test_degenerate_orbit_kept_with_repetitions():
    c = wh_orbit([1, 0, 0])
    assert len(c) == 9 and len({p for p in c}) == 3
    assert not verify_sic(c).is_sic


def test_cp3_fiducial_orbit():
    r = verify_sic(wh_orbit(cp3_fiducial()))
    assert r.is_sic and r.total_pairs == 120
    assert r.max_deviation <= 1e-11 and abs(r.kappa - 0.2) < 1e-15


def test_tetrahedra():
    for c in tetrahedra_cp1():
        r = verify_sic(c)
        assert r.is_sic and r.max_deviation <= 1e-12 and r.resolution_defect <= 1e-12


@pytest.mark.parametrize("theta", [-1.3, -0.4, 0.0, 0.3, 0.9, 1.5])
@pytest.mark.parametrize("j,k", list(itertools.product(range(3), repeat=2)))
def test_cos3_fiducials(theta, j, k):
    z = cos3_fiducial(theta, j, k)
    assert classify_fiducial(z).is_fiducial
    assert verify_sic(wh_orbit(z)).is_sic


def test_classify_fiducial_negatives():
    v = classify_fiducial(point(1, 0, 0))
    assert not v.is_fiducial and not v.orbit_is_sic
    z = cos3_fiducial(0.3, 1, 2)
    bumped = ProjectivePoint(z.rep + np.array([0, 0, 1e-3]))
    v = classify_fiducial(bumped)
    assert not v.is_fiducial and not v.orbit_is_sic
    # on the incircle but with Delta != 0: a generic phase choice
    x = incircle_point(0.4)
    v = classify_fiducial(fibre_point(x, 0.7, -1.9))
    assert not v.is_fiducial and not v.orbit_is_sic
    with pytest.raises(ValueError):
        classify_fiducial(point(1, 1))


def test_classification_agrees_with_orbit_check():
    rng = np.random.default_rng(2)
    for _ in range(40):
        x = incircle_point(rng.uniform(-math.pi, math.pi))
        z = fibre_point(x, *rng.uniform(-math.pi, math.pi, 2))
        v = classify_fiducial(z)
        assert v.is_fiducial == v.orbit_is_sic


# ----------------------------------------------------------- fibres over the incircle

def test_h_orbit_on_incircle_is_separated():
    rng = np.random.default_rng(64)
    for _ in range(64):
        x = incircle_point(rng.uniform(-math.pi, math.pi))
        trio = h_orbit(fibre_point(x, *rng.uniform(-math.pi, math.pi, 2)))
        assert np.all(np.abs(trio.pair_values() - 0.25) <= 1e-9)


def test_h_orbit_off_incircle_not_separated():
    rng = np.random.default_rng(65)
    done = 0
    while done < 64:
        x = rng.dirichlet([1, 1, 1])
        if abs(np.sum(x**2) - 0.5) <= 1e-3:
            continue
        trio = h_orbit(fibre_point(x, *rng.uniform(-math.pi, math.pi, 2)))
        assert np.all(np.abs(trio.pair_values() - 0.25) > 1e-9)
        done += 1


# ----------------------------------------------------------- midpoint solutions

def test_circle_triples_lie_over_midpoints():
    for i in (1, 2, 3):
        for p in circle_triple(i, 0.37):
            x = moment_map(p)
            assert abs(x[i - 1]) < 1e-15 and on_incircle(x)


@given(st.tuples(*[st.floats(-math.pi, math.pi)] * 3))
def test_midpoint_solutions_are_sic(phases):
    assert verify_sic(midpoint_solution(phases)).is_sic


def test_midpoint_solution_requires_three_phases():
    with pytest.raises(ValueError):
        midpoint_solution((0.0, 0.0))


def test_hesse_configuration():
    c = hesse_midpoint_solution()
    assert verify_sic(c).is_sic
    lines = collinear_triples(c)
    assert len(lines) == 12
    per_point = [sum(i in t for t in lines) for i in range(9)]
    assert per_point == [4] * 9
    # flexes of x^3 + y^3 + z^3
    for p in c:
        assert abs(np.sum(p.rep**3)) < 1e-12


# ----------------------------------------------------------- S_theta

@pytest.mark.parametrize("theta", THETAS)
def test_s_theta_is_sic(theta):
    r = verify_sic(s_theta(theta))
    assert r.is_sic and r.max_deviation <= 1e-10


def test_s_theta_special_members():
    assert s_theta(math.pi / 6).same_set(hesse_midpoint_solution())
    assert s_theta(0.0)[7] == point(2, -1, -1)
    assert all(p in s_theta(0.8).points for p in SIX_FIXED)


@pytest.mark.parametrize("theta", THETAS[::4] + [0.2])
def test_M_sends_s_theta_to_midpoint_circles(theta):
    m = clifford_M().matrix
    images = [tuple(np.round(moment_map(p.transformed(m)), 10) + 0.0) for p in s_theta(theta)]
    assert set(images) <= MIDPOINTS
    assert all(images.count(mp) == 3 for mp in MIDPOINTS)


@pytest.mark.parametrize("theta", [-1.0, 0.0, 0.45, 1.2])
def test_M_image_of_torus_point(theta):
    img = z_of((0.0, theta)).transformed(clifford_M().matrix)
    assert img == point(np.exp(2j * theta), OMEGA, 0)


# ----------------------------------------------------------- the Clifford element

def test_M_is_unitary_with_stated_entries():
    m = clifford_M().matrix
    w = OMEGA
    assert np.allclose(m * math.sqrt(3), [[w**2, w, 1], [1, w, w**2], [1, 1, 1]], atol=1e-15)


def test_clifford_cube_and_shift():
    r = clifford_residuals()
    assert r.cube <= 1e-13 and r.conj_shift <= 1e-13


def test_clifford_clock_relation_holds_with_omega():
    # M B M^-1 equals w A^-1 B^-1 for this M; the w^2 version misses by sqrt(3)
    r = clifford_residuals()
    assert r.conj_clock_w <= 1e-13
    assert abs(r.conj_clock - math.sqrt(3)) < 1e-12


def test_M_normalizes_heisenberg_group():
    m = clifford_M().matrix
    minv = m.conj().T
    elements = [g.matrix for g in wh_elements(3)]
    for g in elements:
        h = m @ g @ minv
        assert any(np.allclose(h, OMEGA**k * e, atol=1e-13) or np.allclose(h, -OMEGA**k * e, atol=1e-13)
                   for e in elements for k in range(3))


# ----------------------------------------------------------- eigenvector configuration

def test_m_eigenvectors():
    vals, vecs = m_eigenvectors()
    m = clifford_M().matrix
    assert np.allclose(m @ vecs, vecs * vals, atol=1e-13)
    assert np.allclose(np.abs(vals), 1)
    assert np.all(np.diff(np.angle(vals)) > 0)


@pytest.mark.parametrize("index", [0, 1, 2])
def test_m_eigen_config(index):
    c, stats = m_eigen_config(index)
    assert stats.count_near(1 / 3) == 27 and stats.count_near(0.0) == 9
    lines = collinear_triples(c)
    assert len(lines) == 9
    # the orthogonal pairs close up into three orthonormal bases
    zero = [(i, j) for i, j in itertools.combinations(range(9), 2) if c.gram[i, j] <= 1e-9]
    triples = [t for t in itertools.combinations(range(9), 3)
               if all(pair in zero for pair in itertools.combinations(t, 2))]
    assert len(triples) == 3
    for t in triples:
        basis = np.array([c[i].rep for i in t])
        assert np.allclose(basis @ basis.conj().T, np.eye(3), atol=1e-12)
        assert t not in lines


def test_m_eigen_config_index_checked():
    with pytest.raises(ValueError):
        m_eigen_config(3)


def test_m_eigen_statistics_identical():
    base = np.sort(m_eigen_config(0)[1].kappas)
    for i in (1, 2):
        assert np.allclose(np.sort(m_eigen_config(i)[1].kappas), base, atol=1e-12)


def test_kappa_of_fixed_points():
    assert cross_ratio(SIX_FIXED[0], SIX_FIXED[1]) == pytest.approx(0.25, abs=1e-15)
