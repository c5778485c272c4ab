"""The pinched torus of points correctly separated from [0,1,-w] and [0,1,-w^2].

Points are addressed by (sigma, phi): sigma is the phase of the first
coordinate, phi the angle around the incircle of the moment triangle.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .projective import (
    OMEGA,
    Configuration,
    ProjectivePoint,
    is_correctly_separated,
    moment_map,
    point,
)

TWO_PI_3 = 2 * math.pi / 3
SQRT3 = math.sqrt(3.0)

# the two points fixed once and for all on the midpoint circle C_1
Z1 = point(0, 1, -OMEGA)
Z2 = point(0, 1, -OMEGA**2)
PINCH = point(0, 1, -1)


def _wrap_sigma(s: float) -> float:
    s = math.remainder(s, 2 * math.pi)
    return math.pi if s <= -math.pi else s


@dataclass(frozen=True)
class TorusCoord:
    """(sigma, phi) normalised to (-pi, pi] x (-pi/2, pi/2].

    Moving phi by pi negates the vector, so phi is reduced mod pi; every
    coordinate with phi = pi/2 is the pinch point and gets sigma = 0.
    """

    sigma: float
    phi: float

    def __post_init__(self):
        phi = math.remainder(self.phi, math.pi)
        if phi <= -math.pi / 2 + 1e-15:
            phi += math.pi
        sigma = _wrap_sigma(self.sigma)
        if abs(phi - math.pi / 2) < 1e-15:
            sigma = 0.0
        object.__setattr__(self, "phi", phi)
        object.__setattr__(self, "sigma", sigma)

    @property
    def is_pinch(self) -> bool:
        return abs(self.phi - math.pi / 2) < 1e-12

    @property
    def tan(self) -> float:
        return math.tan(self.phi)


def z_vector(sigma: float, phi: float) -> np.ndarray:
    """The unit vector sqrt(2/3) (e^{i sigma} cos phi, cos(phi + 2pi/3), cos(phi + 4pi/3)),
    evaluated from the raw angles."""
    return math.sqrt(2 / 3) * np.array([
        np.exp(1j * sigma) * math.cos(phi),
        math.cos(phi + TWO_PI_3),
        math.cos(phi + 2 * TWO_PI_3),
    ])


def z_of(c: TorusCoord | tuple[float, float]) -> ProjectivePoint:
    if not isinstance(c, TorusCoord):
        c = TorusCoord(*c)
    return ProjectivePoint(z_vector(c.sigma, c.phi))


def torus_coord_of(p: ProjectivePoint, tol: float = 1e-9) -> TorusCoord:
    """Inverse of ``z_of`` for a point of the pinched torus."""
    if not (is_correctly_separated(p, Z1, tol=tol) and is_correctly_separated(p, Z2, tol=tol)):
        raise ValueError("point is not correctly separated from [z1], [z2]")
    x1, x2, x3 = moment_map(p)
    phi = 0.5 * math.atan2(SQRT3 * (x2 - x3), 3 * x1 - 1)
    c = TorusCoord(0.0, phi)
    if c.is_pinch or abs(math.cos(c.phi)) < 1e-9:
        return c
    w = p.rep
    ref = z_vector(0.0, c.phi)
    k = 1 if abs(ref[1]) >= abs(ref[2]) else 2
    # w = lambda * z(sigma, phi); the phase of lambda is read off coordinate k
    lam = w[k] / ref[k]
    sigma = float(np.angle(w[0] / (lam * ref[0])))
    return TorusCoord(sigma, c.phi)


def incircle_point(theta: float) -> np.ndarray:
    """(2/3)(cos^2 t, cos^2(t + 2pi/3), cos^2(t + 4pi/3)), a point of the incircle."""
    return (2 / 3) * np.cos(np.array([theta, theta + TWO_PI_3, theta + 2 * TWO_PI_3])) ** 2


class _Unconstrained:
    def __repr__(self):
        return "UNCONSTRAINED"


#: returned where 1 + 3xy = 0: the two points lie on C_2 and C_3 and the phases are free
UNCONSTRAINED = _Unconstrained()


def separation_cos(x: float, y: float, tol: float = 1e-12):
    """cos(sigma - tau) forced on z[sigma, arctan x], z[tau, arctan y] by correct separation.

    Returns ``UNCONSTRAINED`` when 1 + 3xy vanishes.
    """
    den = 1 + 3 * x * y
    if abs(den) <= tol:
        return UNCONSTRAINED
    return (-11 + 9 * x * x + 9 * y * y - 27 * x * x * y * y - 24 * x * y) / (16 * den)


def separation_cos_trig(phi: float, psi: float) -> float:
    """Same quantity from the trigonometric form 1 - cos = 9(1 + 2cos 2(phi-psi)) sec sec / (16(...))."""
    num = 9 * (1 + 2 * math.cos(2 * (phi - psi))) / (math.cos(phi) * math.cos(psi))
    den = 16 * (math.cos(phi) * math.cos(psi) + 3 * math.sin(phi) * math.sin(psi))
    return 1 - num / den


def _clamp_acos(c: float, slack: float = 1e-12) -> float | None:
    if c > 1:
        if c - 1 > slack:
            return None
        c = 1.0
    elif c < -1:
        if -1 - c > slack:
            return None
        c = -1.0
    return math.acos(c)


def sigma_solutions(phi: float, psi: float, tau: float):
    """All sigma in (-pi, pi] with z[sigma, phi] correctly separated from z[tau, psi].

    Returns a sorted tuple of 0, 1 or 2 angles, or ``UNCONSTRAINED``.
    """
    if abs(math.cos(phi)) < 1e-12 or abs(math.cos(psi)) < 1e-12:
        raise ValueError("pinch point: use pinch_rule")
    c = separation_cos(math.tan(phi), math.tan(psi))
    if c is UNCONSTRAINED:
        return UNCONSTRAINED
    delta = _clamp_acos(c)
    if delta is None:
        return ()
    if delta < 1e-12 or abs(delta - math.pi) < 1e-12:
        return (_wrap_sigma(tau + delta),)
    return tuple(sorted({_wrap_sigma(tau + delta), _wrap_sigma(tau - delta)}))


@dataclass(frozen=True)
class SeparationCurve:
    anchor: TorusCoord
    samples: tuple[tuple[float, float, int], ...]  # (sigma, phi, component)
    components: int


def _feasible_runs(t: float) -> list[tuple[float, float]] | None:
    """Maximal x = tan(phi) intervals on which |cos(sigma - tau)| <= 1 for an anchor with tan = t.

    The interval ends are real roots of the c = -1 and c = +1 quadratics and
    the pole 1 + 3xt = 0.  Returns None when the anchor lies over a side
    midpoint (t^2 = 1/3), where a whole phase circle is separated.
    """
    lead = 9 * (1 - 3 * t * t)
    if abs(lead) < 1e-12:
        return None
    cuts = set()
    for b, c in ((24 * t, 9 * t * t + 5), (-72 * t, 9 * t * t - 27)):
        disc = b * b - 4 * lead * c
        if disc >= 0:
            r = math.sqrt(disc)
            cuts.update(((-b - r) / (2 * lead), (-b + r) / (2 * lead)))
    if t != 0:
        cuts.add(-1 / (3 * t))
    cuts = sorted(cuts)
    edges = [-math.inf] + cuts + [math.inf]
    runs: list[list[float]] = []
    for a, b in zip(edges, edges[1:]):
        if a == b:
            continue
        mid = (a + b) / 2 if math.isfinite(a) and math.isfinite(b) else (b - 1 if math.isfinite(b) else a + 1)
        c = separation_cos(mid, t)
        ok = c is UNCONSTRAINED or abs(c) <= 1
        if not ok:
            continue
        if runs and runs[-1][1] == a:
            runs[-1][1] = b
        else:
            runs.append([a, b])
    return [(a, b) for a, b in runs]


def separation_curve(anchor: TorusCoord | tuple[float, float], resolution: int = 2000) -> SeparationCurve:
    """Points z[sigma, phi] at distance 2pi/3 from the anchor, swept over a phi grid.

    Components are the maximal phi-intervals on which a separating sigma
    exists, located exactly from the boundary quadratics so that gaps finer
    than the grid are still seen.  For an anchor over a side midpoint the
    grid is used: components split where consecutive valid samples are more
    than two steps apart.
    """
    if not isinstance(anchor, TorusCoord):
        anchor = TorusCoord(*anchor)
    if anchor.is_pinch:
        raise ValueError("anchor at the pinch point")
    if resolution < 2:
        raise ValueError("resolution must be at least 2")
    step = math.pi / resolution
    phis = -math.pi / 2 + step * (np.arange(resolution) + 0.5)
    valid: list[tuple[int, tuple[float, ...]]] = []
    for i, phi in enumerate(phis):
        sols = sigma_solutions(float(phi), anchor.phi, anchor.sigma)
        if sols is UNCONSTRAINED:
            sols = tuple(np.linspace(-math.pi, math.pi, 16, endpoint=False) + math.pi / 16)
        if sols:
            valid.append((i, sols))
    runs = _feasible_runs(anchor.tan)
    if runs is not None:
        def run_of(phi: float) -> int:
            x = math.tan(phi)
            return min(range(len(runs)), key=lambda k: max(runs[k][0] - x, x - runs[k][1], 0.0))
        samples = tuple((s, float(phis[i]), run_of(float(phis[i]))) for i, sols in valid for s in sols)
        return SeparationCurve(anchor, samples, len(runs))
    if not valid:
        return SeparationCurve(anchor, (), 0)
    labels = [0]
    for (i0, _), (i1, _) in zip(valid, valid[1:]):
        labels.append(labels[-1] + (1 if i1 - i0 > 2 else 0))
    ncomp = labels[-1] + 1
    # wrap-around through the pinch
    if ncomp > 1 and valid[0][0] + resolution - valid[-1][0] <= 2:
        labels = [0 if lab == ncomp - 1 else lab for lab in labels]
        ncomp -= 1
    samples = tuple((s, float(phis[i]), lab) for (i, sols), lab in zip(valid, labels) for s in sols)
    return SeparationCurve(anchor, samples, ncomp)


@dataclass(frozen=True)
class PinchVerdict:
    contains_pinch: bool
    #: phi values a further point may take; None means no restriction from the pinch
    admissible_phis: tuple[float, ...] | None

    def admits(self, phi: float, tol: float = 1e-9) -> bool:
        if self.admissible_phis is None:
            return True
        # correct separation from [0,1,-1] means sin(phi) = +-1/2
        return abs(abs(math.sin(phi)) - 0.5) <= tol


def pinch_rule(config: Configuration | Sequence[ProjectivePoint]) -> PinchVerdict:
    """What the pinch point [0,1,-1] forces on a set already holding [z1], [z2].

    If the pinch is present, every further point of the set lies on C_2 or C_3.
    """
    pts = list(config)
    if not any(p == Z1 for p in pts) or not any(p == Z2 for p in pts):
        raise ValueError("configuration must contain [z1] and [z2]")
    if any(p == PINCH for p in pts):
        return PinchVerdict(True, (-math.pi / 6, math.pi / 6))
    return PinchVerdict(False, None)


def pinch_discriminant_threshold() -> float:
    """|tan theta| above which the curve at distance 2pi/3 from z[0, theta] splits in two."""
    return math.sqrt(5 / 27)


def sigma_pi_quadratic(t: float) -> tuple[float, float, float]:
    """Coefficients (A, B, C) of A x^2 + B x + C = 0 for z[pi, arctan x] separated from z[0, arctan t]."""
    return 9 * (1 - 3 * t * t), 24 * t, 9 * t * t + 5


def incircle_angle(x: Sequence[float]) -> float:
    """Angle theta with incircle_point(theta) = x, in (-pi/2, pi/2]."""
    x1, x2, x3 = x
    return TorusCoord(0.0, 0.5 * math.atan2(SQRT3 * (x2 - x3), 3 * x1 - 1)).phi
