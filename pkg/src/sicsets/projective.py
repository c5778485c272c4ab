"""Rays in C^n (n = 2, 3, 4), cross ratios, Fubini-Study distance, rank-one
projectors, the torus moment map and SIC verification.

Every point is stored through a canonical unit representative whose first
non-negligible coordinate is real and positive, so that two rays built from
different representatives compare (and hash) the same way.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

GEOMETRIC_TOL = 1e-9
ALGEBRAIC_TOL = 1e-12
SUPPORTED_DIMENSIONS = (2, 3, 4)

OMEGA = np.exp(2j * np.pi / 3)


class DimensionError(ValueError):
    """Raised when points of different (or unsupported) dimension are mixed."""


def _canonical(z: np.ndarray, phase_tol: float = 1e-9) -> np.ndarray:
    norm = np.linalg.norm(z)
    z = z / norm
    for entry in z:
        mod = abs(entry)
        if mod > phase_tol:
            z = z * (np.conj(entry) / mod)
            break
    # the pivot entry is real positive up to rounding; make it exactly so
    for i, entry in enumerate(z):
        if abs(entry) > phase_tol:
            z[i] = complex(abs(entry), 0.0)
            break
    return z


@dataclass(frozen=True, eq=False)
class ProjectivePoint:
    """A point [z] of CP^{n-1}.

    Build it from any nonzero representative; ``rep`` holds the canonical one.
    Equality means cross ratio 1 within ``GEOMETRIC_TOL``.
    """

    rep: np.ndarray

    def __init__(self, coords: Iterable[complex], tol: float = ALGEBRAIC_TOL):
        z = np.asarray(list(coords) if not isinstance(coords, np.ndarray) else coords,
                       dtype=complex).ravel()
        if z.size not in SUPPORTED_DIMENSIONS:
            raise DimensionError(f"dimension {z.size} not supported (use 2, 3 or 4)")
        if not np.all(np.isfinite(z)):
            raise ValueError("non-finite coordinates")
        if float(np.vdot(z, z).real) <= tol:
            raise ValueError("zero vector does not define a point")
        rep = _canonical(z.copy())
        rep.flags.writeable = False
        object.__setattr__(self, "rep", rep)

    @property
    def n(self) -> int:
        return self.rep.size

    def __eq__(self, other):
        if not isinstance(other, ProjectivePoint):
            return NotImplemented
        return self.n == other.n and abs(cross_ratio(self, other) - 1.0) <= GEOMETRIC_TOL

    def __hash__(self):
        return hash(tuple(np.round(self.rep, 8).tolist()))

    def __repr__(self):
        body = ", ".join(f"{c.real:.6g}{c.imag:+.6g}j" for c in self.rep)
        return f"ProjectivePoint([{body}])"

    def transformed(self, matrix: np.ndarray) -> "ProjectivePoint":
        return ProjectivePoint(np.asarray(matrix) @ self.rep)

    def conjugate(self) -> "ProjectivePoint":
        return ProjectivePoint(np.conj(self.rep))


def point(*coords: complex) -> ProjectivePoint:
    """Shorthand: ``point(0, 1, -OMEGA)`` is [0, 1, -omega]."""
    return ProjectivePoint(coords)


def _check_same_dim(p: ProjectivePoint, q: ProjectivePoint) -> None:
    if p.n != q.n:
        raise DimensionError(f"dimension mismatch: {p.n} vs {q.n}")


def cross_ratio(p: ProjectivePoint, q: ProjectivePoint) -> float:
    """|<w,z>|^2 / (|w|^2 |z|^2); symmetric, in [0, 1]."""
    _check_same_dim(p, q)
    # |<w,z>| = |<z,w>| so summing the same products keeps the result symmetric
    s = np.sum(p.rep.conj() * q.rep)
    k = s.real * s.real + s.imag * s.imag
    return float(min(max(k, 0.0), 1.0))


def fs_distance(p: ProjectivePoint, q: ProjectivePoint) -> float:
    """Fubini-Study distance 2 arccos sqrt(kappa), diameter pi."""
    return 2.0 * float(np.arccos(np.sqrt(cross_ratio(p, q))))


@dataclass(frozen=True)
class HermitianProjector:
    matrix: np.ndarray

    def __post_init__(self):
        m = self.matrix
        if not np.allclose(m, m.conj().T, atol=ALGEBRAIC_TOL, rtol=0):
            raise ValueError("projector is not Hermitian")
        if not np.allclose(m @ m, m, atol=ALGEBRAIC_TOL, rtol=0):
            raise ValueError("projector is not idempotent")
        if abs(np.trace(m) - 1) > ALGEBRAIC_TOL:
            raise ValueError("projector does not have trace one")


def projector_of(p: ProjectivePoint) -> HermitianProjector:
    """P = z z^dagger for the unit representative."""
    z = p.rep
    return HermitianProjector(np.outer(z, z.conj()))


def moment_map(p: ProjectivePoint) -> np.ndarray:
    """(|z_1|^2, ..., |z_n|^2) of the unit representative; lands in the simplex."""
    return np.abs(p.rep) ** 2


def on_incircle(x: Sequence[float], tol: float = GEOMETRIC_TOL) -> bool:
    """Is x on the circle inscribed in the moment triangle?"""
    x = np.asarray(x, dtype=float)
    if x.size != 3:
        raise DimensionError("incircle test needs a point of R^3")
    return bool(abs(x.sum() - 1.0) <= tol and abs(np.dot(x, x) - 0.5) <= tol)


def is_correctly_separated(p: ProjectivePoint, q: ProjectivePoint, n: int | None = None,
                           tol: float = GEOMETRIC_TOL) -> bool:
    n = p.n if n is None else n
    return abs(cross_ratio(p, q) - 1.0 / (n + 1)) <= tol


class Configuration:
    """An ordered list of points of one CP^{n-1} with their cross-ratio matrix."""

    def __init__(self, points: Sequence[ProjectivePoint]):
        points = tuple(points)
        if not points:
            raise ValueError("empty configuration")
        n = points[0].n
        for p in points:
            if p.n != n:
                raise DimensionError("all points of a configuration must share n")
        self._points = points
        reps = np.array([p.rep for p in points])
        g = np.abs(reps.conj() @ reps.T) ** 2
        g = np.clip((g + g.T) / 2, 0.0, 1.0)
        np.fill_diagonal(g, 1.0)
        g.flags.writeable = False
        self._gram = g

    @property
    def points(self) -> tuple[ProjectivePoint, ...]:
        return self._points

    @property
    def gram(self) -> np.ndarray:
        return self._gram

    @property
    def n(self) -> int:
        return self._points[0].n

    def __len__(self):
        return len(self._points)

    def __iter__(self):
        return iter(self._points)

    def __getitem__(self, i):
        return self._points[i]

    def __repr__(self):
        return f"Configuration(n={self.n}, {len(self)} points)"

    def transformed(self, matrix: np.ndarray) -> "Configuration":
        return Configuration([p.transformed(matrix) for p in self._points])

    def pair_values(self) -> np.ndarray:
        """Off-diagonal cross ratios, one per unordered pair."""
        iu = np.triu_indices(len(self), k=1)
        return self._gram[iu]

    def same_set(self, other: "Configuration") -> bool:
        """Equal as unordered sets of points (multiplicities respected)."""
        if len(self) != len(other) or self.n != other.n:
            return False
        unused = list(other.points)
        for p in self._points:
            for i, q in enumerate(unused):
                if p == q:
                    del unused[i]
                    break
            else:
                return False
        return True


@dataclass(frozen=True)
class SICReport:
    is_sic: bool
    max_deviation: float
    resolution_defect: float
    separated_pairs: int
    total_pairs: int
    kappa: float = field(default=float("nan"))


def verify_sic(c: Configuration, tol: float = GEOMETRIC_TOL) -> SICReport:
    """Check all pairwise cross ratios against 1/(n+1) and the resolution of
    the identity (1/n) sum P_i = I."""
    n = c.n
    if len(c) != n * n:
        raise ValueError(f"a SIC set in CP^{n - 1} has {n * n} points, got {len(c)}")
    kappa = 1.0 / (n + 1)
    dev = np.abs(c.pair_values() - kappa)
    reps = np.array([p.rep for p in c])
    frame = np.einsum("ki,kj->ij", reps, reps.conj()) / n
    defect = float(np.max(np.abs(frame - np.eye(n))))
    return SICReport(
        is_sic=bool(dev.max() <= tol),
        max_deviation=float(dev.max()),
        resolution_defect=defect,
        separated_pairs=int(np.count_nonzero(dev <= tol)),
        total_pairs=dev.size,
        kappa=kappa,
    )


def separated_pairs(c: Configuration, tol: float = GEOMETRIC_TOL) -> list[tuple[int, int]]:
    kappa = 1.0 / (c.n + 1)
    return [(i, j) for i, j in itertools.combinations(range(len(c)), 2)
            if abs(c.gram[i, j] - kappa) <= tol]


def collinear_triples(c: Configuration, tol: float = GEOMETRIC_TOL) -> list[tuple[int, int, int]]:
    """Unordered triples of points of CP^2 lying on a common projective line."""
    if c.n != 3:
        raise DimensionError("collinearity is only defined here for CP^2")
    reps = np.array([p.rep for p in c])
    return [tri for tri in itertools.combinations(range(len(c)), 3)
            if abs(np.linalg.det(reps[list(tri)])) <= tol]


def delta_invariant(p: ProjectivePoint) -> complex:
    """z1^2 z2* z3* + z2^2 z3* z1* + z3^2 z1* z2* for the unit representative."""
    if p.n != 3:
        raise DimensionError("delta invariant is defined for CP^2")
    z1, z2, z3 = p.rep
    c1, c2, c3 = np.conj(p.rep)
    return complex(z1 * z1 * c2 * c3 + z2 * z2 * c3 * c1 + z3 * z3 * c1 * c2)
