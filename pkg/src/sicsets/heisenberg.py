"""Explicit SIC sets and near misses: Weyl-Heisenberg orbits, midpoint
solutions, the one-parameter family S_theta, the Clifford element M and its
eigenvector configuration, and the two CP^1 tetrahedra."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .projective import (
    GEOMETRIC_TOL,
    OMEGA,
    Configuration,
    ProjectivePoint,
    delta_invariant,
    moment_map,
    on_incircle,
    point,
    verify_sic,
)
from .torus import Z1, Z2, z_of


@dataclass(frozen=True)
class UnitaryMatrix:
    matrix: np.ndarray
    label: str = ""

    def __post_init__(self):
        m = self.matrix
        if not np.allclose(m.conj().T @ m, np.eye(m.shape[0]), atol=1e-12, rtol=0):
            raise ValueError(f"{self.label or 'matrix'} is not unitary")

    def __matmul__(self, other):
        other = other.matrix if isinstance(other, UnitaryMatrix) else other
        return self.matrix @ other


def root_of_unity(n: int) -> complex:
    return complex(np.exp(2j * np.pi / n))


def shift_matrix(n: int) -> np.ndarray:
    """Cyclic shift generating W; for n = 3 this is [[0,1,0],[0,0,1],[1,0,0]]."""
    return np.roll(np.eye(n, dtype=complex), 1, axis=1)


def clock_matrix(n: int) -> np.ndarray:
    """diag(1, w, ..., w^{n-1}) with w = e^{2 pi i/n}, generating H."""
    return np.diag(root_of_unity(n) ** np.arange(n))


@dataclass(frozen=True)
class WHGroupElement:
    j: int
    k: int
    matrix: np.ndarray


def wh_elements(n: int) -> list[WHGroupElement]:
    a, b = shift_matrix(n), clock_matrix(n)
    out = []
    for j in range(n):
        aj = np.linalg.matrix_power(a, j)
        for k in range(n):
            out.append(WHGroupElement(j, k, aj @ np.linalg.matrix_power(b, k)))
    return out


def wh_orbit(fiducial: ProjectivePoint | Sequence[complex]) -> Configuration:
    """The n^2 points [A^j B^k z], repetitions kept."""
    if not isinstance(fiducial, ProjectivePoint):
        fiducial = ProjectivePoint(fiducial)
    return Configuration([ProjectivePoint(g.matrix @ fiducial.rep) for g in wh_elements(fiducial.n)])


def h_orbit(z: ProjectivePoint) -> Configuration:
    """The three points [B^k z] (the clock subgroup orbit)."""
    b = clock_matrix(z.n)
    return Configuration([ProjectivePoint(np.linalg.matrix_power(b, k) @ z.rep) for k in range(z.n)])


def cos3_fiducial(theta: float, j: int = 0, k: int = 0) -> ProjectivePoint:
    """[cos t, w^j cos(t + 2pi/3), w^k cos(t + 4pi/3)]."""
    return point(math.cos(theta),
                 OMEGA**j * math.cos(theta + 2 * math.pi / 3),
                 OMEGA**k * math.cos(theta + 4 * math.pi / 3))


def cp3_fiducial() -> ProjectivePoint:
    r, s = math.sqrt(2), math.sqrt(2 + math.sqrt(5))
    return point(-s - 1j * (r + s), 1 - r + 1j, s + 1j * (s - r), 1 + r + 1j)


@dataclass(frozen=True)
class FiducialVerdict:
    is_fiducial: bool
    reason: str
    orbit_is_sic: bool


def classify_fiducial(z: ProjectivePoint, tol: float = GEOMETRIC_TOL) -> FiducialVerdict:
    """Decide whether the W x H orbit of a point of CP^2 is a SIC set.

    The test is: moment image on the incircle and Delta = 0.  A vanishing
    coordinate makes Delta vanish, so the midpoint-circle case is covered.
    The verdict is cross-checked against direct verification of the orbit.
    """
    if z.n != 3:
        raise ValueError("classification is for CP^2")
    x = moment_map(z)
    orbit_ok = verify_sic(wh_orbit(z), tol=max(tol, 1e-9)).is_sic
    if not on_incircle(x, tol):
        return FiducialVerdict(False, "moment image is off the incircle", orbit_ok)
    d = abs(delta_invariant(z))
    if d > tol:
        return FiducialVerdict(False, f"|Delta| = {d:.3g} is nonzero", orbit_ok)
    if np.min(np.abs(z.rep)) <= tol:
        reason = "a coordinate vanishes (point of a midpoint circle)"
    else:
        reason = "moment image on the incircle and Delta = 0"
    return FiducialVerdict(True, reason, orbit_ok)


def circle_triple(circle: int, sigma: float) -> list[ProjectivePoint]:
    """Three equally spaced points of the midpoint circle C_i with base phase sigma.

    C_1: [0, e^{i s}, w^k]; C_2 and C_3 are its cyclic shifts
    [w^k, 0, e^{i s}] and [e^{i s}, w^k, 0].
    """
    e = np.exp(1j * sigma)
    out = []
    for k in range(3):
        v = [0, e, OMEGA**k]
        shift = circle - 1
        v = v[-shift:] + v[:-shift] if shift else v
        out.append(point(*v))
    return out


def midpoint_solution(phases: Sequence[float] = (0.0, 0.0, 0.0)) -> Configuration:
    """Three equally spaced points on each of C_1, C_2, C_3, one base phase per circle."""
    if len(phases) != 3:
        raise ValueError("need one base phase per midpoint circle")
    pts = []
    for i, s in enumerate(phases, start=1):
        pts += circle_triple(i, float(s))
    return Configuration(pts)


def hesse_midpoint_solution() -> Configuration:
    """The midpoint solution {[0,1,-w^k]} and shifts: the nine flexes of x^3+y^3+z^3."""
    return midpoint_solution((math.pi, math.pi, math.pi))


SIX_FIXED = (
    Z1, Z2,
    point(1, 0, -OMEGA), point(1, 0, -OMEGA**2),
    point(1, -OMEGA, 0), point(1, -OMEGA**2, 0),
)


def s_theta(theta: float) -> Configuration:
    """Six fixed points (two on each midpoint circle) plus z[0, theta - pi/3], z[0, theta], z[0, theta + pi/3]."""
    third = [z_of((0.0, theta + d)) for d in (-math.pi / 3, 0.0, math.pi / 3)]
    return Configuration(list(SIX_FIXED) + third)


def clifford_M() -> UnitaryMatrix:
    w = OMEGA
    m = np.array([[w**2, w, 1], [1, w, w**2], [1, 1, 1]]) / math.sqrt(3)
    return UnitaryMatrix(m, "M")


@dataclass(frozen=True)
class CliffordResiduals:
    cube: float          # |M^3 - i w^2 I|
    conj_shift: float    # |M A M^-1 - w B|
    conj_clock: float    # |M B M^-1 - w^2 A^-1 B^-1|, the relation as usually quoted
    conj_clock_w: float  # |M B M^-1 - w A^-1 B^-1|, what this M actually satisfies

    def max(self) -> float:
        return max(self.cube, self.conj_shift, self.conj_clock)


def clifford_residuals() -> CliffordResiduals:
    """Entrywise residuals of the conjugation relations for M, A = shift, B = clock."""
    m = clifford_M().matrix
    minv = m.conj().T
    a, b = shift_matrix(3), clock_matrix(3)
    ab_inv = np.linalg.inv(a) @ np.linalg.inv(b)
    mbm = m @ b @ minv
    w = OMEGA
    return CliffordResiduals(
        cube=float(np.max(np.abs(m @ m @ m - 1j * w**2 * np.eye(3)))),
        conj_shift=float(np.max(np.abs(m @ a @ minv - w * b))),
        conj_clock=float(np.max(np.abs(mbm - w**2 * ab_inv))),
        conj_clock_w=float(np.max(np.abs(mbm - w * ab_inv))),
    )


@dataclass(frozen=True)
class PairStatistics:
    kappas: np.ndarray  # one per unordered pair

    def count_near(self, value: float, tol: float = 1e-9) -> int:
        return int(np.count_nonzero(np.abs(self.kappas - value) <= tol))


def m_eigenvectors() -> tuple[np.ndarray, np.ndarray]:
    """Eigenvalues and unit eigenvectors (columns) of M, sorted by eigenvalue phase."""
    vals, vecs = np.linalg.eig(clifford_M().matrix)
    order = np.argsort(np.angle(vals))
    vals, vecs = vals[order], vecs[:, order]
    gaps = [abs(vals[i] - vals[j]) for i in range(3) for j in range(i + 1, 3)]
    if min(gaps) < 1e-6:
        raise ArithmeticError("M has a degenerate eigenspace")
    return vals, vecs


def m_eigen_config(index: int = 0) -> tuple[Configuration, PairStatistics]:
    """W x H orbit of the index-th eigenvector of M and its pairwise cross ratios."""
    if index not in (0, 1, 2):
        raise ValueError("eigenvector index must be 0, 1 or 2")
    _, vecs = m_eigenvectors()
    c = wh_orbit(ProjectivePoint(vecs[:, index]))
    return c, PairStatistics(c.pair_values())


def tetrahedra_cp1() -> tuple[Configuration, Configuration]:
    r2 = math.sqrt(2)
    first = Configuration([point(0, 1), point(r2, 1), point(r2, OMEGA), point(r2, OMEGA**2)])
    v = (1 + 1j) / (1 + math.sqrt(3))
    second = Configuration([point(1, v), point(v, 1), point(1, -v), point(v, -1)])
    return first, second
