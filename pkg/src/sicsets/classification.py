"""Elimination data for SIC sets containing [0,1,-w] and [0,1,-w^2].

Four further points z[s_i, arctan x_i] of such a set give tangents
(t, x, y, z) that solve F1 = F2 = F3 = F4 = 0 in their elementary
symmetric functions a, b, c, d.  This module holds the transcribed
polynomials, re-derives them from the separation cosine, enumerates the
special branches, and solves the generic branch 19 + 9b + 27d = 0 for
fixed rational t.
"""

from __future__ import annotations

import functools
import hashlib
import itertools
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping, Sequence

import mpmath

from . import tables
from .poly import (
    MultiPoly,
    UniRealPoly,
    divided_difference,
    from_text,
    isolate_roots,
    poly_ring,
    real_roots,
    refine_root,
    resultant,
    symmetric_reduce,
    to_text,
)
from .projective import Configuration, ProjectivePoint, cross_ratio
from .torus import UNCONSTRAINED, Z1, Z2, sigma_solutions, z_of

VARS3 = ("p", "q", "r")
VARS4 = ("a", "b", "c", "d")
INV_SQRT3 = 1 / math.sqrt(3)
WORK_DPS = 50


# ---------------------------------------------------------------- data

def _table_text(name: str, source: Mapping[str, str] | None = None) -> str:
    if source is not None and name in source:
        return source[name]
    return getattr(tables, f"{name}_TEXT")


@lru_cache(maxsize=None)
def _cached_poly(name: str) -> MultiPoly:
    return from_text(_table_text(name), tables.MANIFEST[name][0])


def table_poly(name: str, source: Mapping[str, str] | None = None) -> MultiPoly:
    """One of F0, F1, F2, F3, F4, G as an exact polynomial.

    ``source`` overrides the built-in text (used for fault injection).
    """
    if name not in tables.MANIFEST:
        raise KeyError(f"unknown table {name!r}")
    if source is None:
        return _cached_poly(name)
    return from_text(_table_text(name, source), tables.MANIFEST[name][0])


def table_digest(poly: MultiPoly) -> str:
    return hashlib.sha256(to_text(poly).encode()).hexdigest()[:16]


def _evaluate(poly: MultiPoly, values: Sequence):
    if all(isinstance(v, (int, Fraction)) for v in values):
        return poly.eval(list(values))
    if any(isinstance(v, (mpmath.mpf, mpmath.mpc)) for v in values):
        return poly.eval([_mp(v) for v in values])
    return poly.eval([float(v) for v in values])


def _mp(v):
    if isinstance(v, Fraction):
        return mpmath.mpf(v.numerator) / v.denominator
    return mpmath.mpmathify(v)


def F_of(p, q, r):
    """F(p, q, r); exact for rational input."""
    return _evaluate(table_poly("F0"), (p, q, r))


def F1_of(a, b, c, d):
    return _evaluate(table_poly("F1"), (a, b, c, d))


def F2_of(a, b, c, d):
    return _evaluate(table_poly("F2"), (a, b, c, d))


def F3_of(a, b, c, d):
    return _evaluate(table_poly("F3"), (a, b, c, d))


def F4_of(a, b, c, d):
    return _evaluate(table_poly("F4"), (a, b, c, d))


def G_of(a, b, c, d):
    """81 g(1/sqrt3) g(-1/sqrt3) for the quartic g with these coefficients."""
    return _evaluate(table_poly("G"), (a, b, c, d))


# ---------------------------------------------------------------- states

def _elementary(values: Sequence) -> list:
    out = [0] * (len(values) + 1)
    out[0] = 1
    for v in values:
        for k in range(len(values), 0, -1):
            out[k] = out[k] + out[k - 1] * v
    return out[1:]


@dataclass(frozen=True)
class SymmetricState:
    """Elementary symmetric values (a, b, c, d) of four tangents.

    ``exact`` is True when all four are rationals.
    """

    a: object
    b: object
    c: object
    d: object

    @property
    def exact(self) -> bool:
        return all(isinstance(v, (int, Fraction)) for v in self.values)

    @property
    def values(self) -> tuple:
        return (self.a, self.b, self.c, self.d)

    @classmethod
    def from_roots(cls, t, x, y, z) -> "SymmetricState":
        return cls(*_elementary([t, x, y, z]))

    def quartic(self) -> list:
        """Coefficients of x^4 - a x^3 + b x^2 - c x + d, highest first."""
        return [1, -self.a, self.b, -self.c, self.d]

    def quartic_roots(self, dps: int = 30) -> list:
        with mpmath.workdps(dps):
            roots = mpmath.polyroots([_mp(v) for v in self.quartic()], maxsteps=200, extraprec=4 * dps)
            return [complex(z) for z in roots]

    def real_roots(self, tol: float = 1e-9) -> list[float]:
        return sorted(z.real for z in self.quartic_roots() if abs(z.imag) <= tol)

    def residuals(self) -> tuple[float, float, float, float]:
        """|F1|, ..., |F4| evaluated at high precision."""
        with mpmath.workdps(WORK_DPS):
            vals = [_mp(v) for v in self.values]
            return tuple(float(abs(table_poly(n).eval(vals))) for n in ("F1", "F2", "F3", "F4"))

    def max_residual(self) -> float:
        return max(self.residuals())

    def G(self) -> float:
        with mpmath.workdps(WORK_DPS):
            return float(table_poly("G").eval([_mp(v) for v in self.values]))


def triple_symmetric(x, y, z) -> tuple:
    """(p, q, r) = (x + y + z, xy + yz + zx, xyz)."""
    return tuple(_elementary([x, y, z]))


KEY5_CONDITIONS = (
    ("d = 1", lambda s: s.d - 1),
    ("d = 1/3", lambda s: 3 * s.d - 1),
    ("d = 1/9", lambda s: 9 * s.d - 1),
    ("b = -(3d + 3)", lambda s: s.b + 3 * s.d + 3),
    ("b = -(9d + 1)/3", lambda s: 3 * s.b + 9 * s.d + 1),
    ("b = -(27d + 19)/9", lambda s: 9 * s.b + 27 * s.d + 19),
)


def key5_check(s: SymmetricState, tol: float = 1e-9) -> list[str]:
    """Which of the six alternatives the state satisfies (exactly, for rational states)."""
    out = []
    for label, fn in KEY5_CONDITIONS:
        v = fn(s)
        if (v == 0) if s.exact else abs(float(v)) <= tol:
            out.append(label)
    return out


# ---------------------------------------------------------------- derivation

def separation_parts(u: MultiPoly, v: MultiPoly) -> tuple[MultiPoly, MultiPoly]:
    """Numerator N and D = 1 + 3uv of the separation cosine N / (16 D)."""
    n = -11 + 9 * u**2 + 9 * v**2 - 27 * u**2 * v**2 - 24 * u * v
    return n, 1 + 3 * u * v


def derive_f() -> MultiPoly:
    """The symmetric polynomial f(x, y, z) from cos^2 A + cos^2 B + cos^2 C = 1 + 2 cos A cos B cos C.

    With c = N / (16 D) for each pair, clearing 256 (Dxy Dyz Dzx)^2 gives
    the numerator below; every coefficient is divisible by 243.
    """
    x, y, z = poly_ring(("x", "y", "z"))
    nxy, dxy = separation_parts(x, y)
    nyz, dyz = separation_parts(y, z)
    nzx, dzx = separation_parts(z, x)
    num = (8 * (nxy**2 * dyz**2 * dzx**2 + nyz**2 * dzx**2 * dxy**2 + nzx**2 * dxy**2 * dyz**2)
           - 2048 * (dxy * dyz * dzx) ** 2
           - nxy * nyz * nzx * dxy * dyz * dzx)
    if any(Fraction(c) % 243 for c in num.terms.values()):
        raise ArithmeticError("numerator is not divisible by 243")
    return num / 243


def derive_system() -> dict[str, MultiPoly]:
    """F0 in (p, q, r) and F1..F4 in (a, b, c, d), all re-derived from f."""
    f3 = derive_f()
    out = {"F0": symmetric_reduce(f3, names=VARS3)}
    V = ("t", "x", "y", "z")
    gens = dict(zip(V, poly_ring(V)))

    def f_at(*args: str) -> MultiPoly:
        return f3.substitute({"x": gens[args[0]], "y": gens[args[1]], "z": gens[args[2]]}, vars=V)

    def at(poly: MultiPoly, *args: str) -> MultiPoly:
        return poly.permute(dict(zip(V, args)))

    f1 = f_at("x", "y", "z") + f_at("t", "y", "z") + f_at("t", "x", "z") + f_at("t", "x", "y")
    g = divided_difference(f_at("t", "x", "y"), "y", "z")
    f2 = sum((at(g, *s) for s in ("txyz", "tyzx", "tzxy", "xytz", "xzty", "yzxt")),
             MultiPoly({}, V))
    h = divided_difference(g, "x", "y", swap=True)
    f3_ = sum((at(h, *s) for s in ("txyz", "tyzx", "tzxy", "xytz", "xzty", "yxtz",
                                   "zxyt", "xyzt", "yzxt", "zytx", "yztx", "zxty")),
              MultiPoly({}, V))
    f4 = divided_difference(h, "t", "x", swap=True)
    for name, poly in (("F1", f1), ("F2", f2), ("F3", f3_), ("F4", f4)):
        out[name] = symmetric_reduce(poly, names=VARS4)
    return out


@dataclass(frozen=True)
class DerivationCheck:
    name: str
    listed_terms: int
    derived_terms: int
    mismatches: int
    first_mismatch: tuple[str, Fraction, Fraction] | None  # (monomial, listed, derived)

    @property
    def ok(self) -> bool:
        return self.mismatches == 0


@dataclass(frozen=True)
class DerivationReport:
    checks: tuple[DerivationCheck, ...]
    seconds: float

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def lines(self) -> list[str]:
        out = []
        for c in self.checks:
            if c.ok:
                out.append(f"{c.name}: {c.derived_terms} terms, exact match")
            else:
                mono, want, got = c.first_mismatch
                out.append(f"{c.name}: {c.mismatches} mismatched monomials; first {mono} "
                           f"listed {want} derived {got}")
        return out


def _monomial_text(e: tuple[int, ...], vars: Sequence[str]) -> str:
    parts = [v if k == 1 else f"{v}^{k}" for v, k in zip(vars, e) if k]
    return "*".join(parts) or "1"


def compare_polys(name: str, listed: MultiPoly, derived: MultiPoly) -> DerivationCheck:
    keys = sorted(set(listed.terms) | set(derived.terms), reverse=True)
    bad = [e for e in keys if listed.terms.get(e, 0) != derived.terms.get(e, 0)]
    first = None
    if bad:
        e = bad[0]
        first = (_monomial_text(e, listed.vars), Fraction(listed.terms.get(e, 0)),
                 Fraction(derived.terms.get(e, 0)))
    return DerivationCheck(name, len(listed.terms), len(derived.terms), len(bad), first)


def verify_derivations(source: Mapping[str, str] | None = None) -> DerivationReport:
    """Re-derive F0..F4 and compare with the tables coefficient by coefficient."""
    import time

    t0 = time.perf_counter()
    derived = derive_system()
    checks = tuple(compare_polys(n, table_poly(n, source), derived[n])
                   for n in ("F0", "F1", "F2", "F3", "F4"))
    return DerivationReport(checks, time.perf_counter() - t0)


def trig_identity_residual(A: float, B: float) -> float:
    """cos^2 A + cos^2 B + cos^2 C - 1 - 2 cos A cos B cos C with C = -A - B."""
    C = -A - B
    ca, cb, cc = math.cos(A), math.cos(B), math.cos(C)
    return ca * ca + cb * cb + cc * cc - 1 - 2 * ca * cb * cc


# ---------------------------------------------------------------- special branches

@dataclass(frozen=True)
class Branch:
    label: str
    state: SymmetricState
    disposition: str
    residual: float                   # max |F_i| at high precision
    real_roots: tuple[float, ...]

    @property
    def solves_system(self) -> bool:
        return self.residual <= 1e-9

    @property
    def has_inv_sqrt3_root(self) -> bool:
        return any(abs(abs(x) - INV_SQRT3) <= 1e-9 for x in self.real_roots)


def _branch(label: str, state: SymmetricState, disposition: str) -> Branch:
    return Branch(label, state, disposition, state.max_residual(), tuple(state.real_roots()))


def fake_c(outer: int = -1, inner: int = -1) -> float:
    """c = outer * (8/27) sqrt(26 + inner * 2 sqrt 97)."""
    return outer * 8 / 27 * math.sqrt(26 + inner * 2 * math.sqrt(97))


def _high_precision(fn):
    @functools.wraps(fn)
    def wrapper(*args, **kwargs):
        with mpmath.workdps(WORK_DPS):
            return fn(*args, **kwargs)
    return wrapper


@_high_precision
def case_i_analysis(t: Fraction = Fraction(2)) -> list[Branch]:
    """The d = 1/9 branches; the double-root family is sampled at ``t``."""
    s3 = mpmath.sqrt(3)
    out = [_branch("b = (27c^2 - 8)/12", SymmetricState.from_roots(t, t, -1 / (3 * t), -1 / (3 * t)),
                   "double roots t, -1/(3t): excluded, two points share a tangent"),
           _branch("b = -2/3", SymmetricState(0, Fraction(-2, 3), 0, Fraction(1, 9)),
                   "all roots are +-1/sqrt3")]
    for sign in (1, -1):
        out.append(_branch(f"b = -10/3, c = {'+' if sign > 0 else '-'}8/(3 sqrt3)",
                           SymmetricState(0, Fraction(-10, 3), sign * 8 / (3 * s3), Fraction(1, 9)),
                           "a root is +-1/sqrt3"))
    for outer, inner in itertools.product((1, -1), repeat=2):
        c = outer * mpmath.mpf(8) / 27 * mpmath.sqrt(26 + inner * 2 * mpmath.sqrt(97))
        kind = "four distinct real roots: the fake SIC" if inner < 0 else "two non-real roots"
        out.append(_branch(f"b = -22/9, c = {'+' if outer > 0 else '-'}(8/27)sqrt(26"
                           f"{'+' if inner > 0 else '-'}2sqrt97)",
                           SymmetricState(0, Fraction(-22, 9), c, Fraction(1, 9)), kind))
    return out


@_high_precision
def case_ii_iii_solutions() -> list[Branch]:
    """The enumerated states of the 1 + 3b + 9d = 0 and 3 + b + 3d = 0 branches.

    The state (+-8/sqrt3, 0, 0, -1) is reported as listed even though it does
    not solve the system; the solution on that branch is
    (+-10/sqrt3, 0, -+2 sqrt3, -1), returned alongside it.
    """
    s3 = mpmath.sqrt(3)
    out = [_branch("1 + 3b + 9d = 0, d = 1", SymmetricState(0, Fraction(-10, 3), 0, 1),
                   "roots +-sqrt3, +-1/sqrt3")]
    for sign in (1, -1):
        out.append(_branch(f"3 + b + 3d = 0, d = 1, a = {'+' if sign > 0 else '-'}8/sqrt3",
                           SymmetricState(sign * 8 / s3, -6, 0, 1), "a root is +-1/sqrt3"))
    for sign in (1, -1):
        out.append(_branch(f"3 + b + 3d = 0, d = -1, a = {'+' if sign > 0 else '-'}8/sqrt3 (listed)",
                           SymmetricState(sign * 8 / s3, 0, 0, -1), "two non-real roots"))
    for sign in (1, -1):
        out.append(_branch(f"3 + b + 3d = 0, d = -1, a = {'+' if sign > 0 else '-'}10/sqrt3",
                           SymmetricState(sign * 10 / s3, 0, -sign * 2 * s3, -1), "a root is +-1/sqrt3"))
    return out


# ---------------------------------------------------------------- generic branch

E1_TEXT = "16 + 9a^2 + 27a c - 144d"
E2_TEXT = ("4194304 - 73728a^2 - 132192a^4 + 6561a^6 - 4866048a c - 746496a^3c + 78732a^5c"
           " - 8626176c^2 - 699840a^2c^2 + 354294a^4c^2 + 1679616a c^3 + 708588a^3c^3"
           " + 1889568c^4 + 531441a^2c^4")


class ExcludedParameter(ValueError):
    pass


class UnexpectedDegree(ArithmeticError):
    def __init__(self, message: str, raw: MultiPoly):
        super().__init__(message)
        self.raw = raw


def _check_t(t) -> Fraction:
    t = Fraction(t)
    if abs(float(t)) <= 1e-9 or abs(abs(float(t)) - INV_SQRT3) <= 1e-9:
        raise ExcludedParameter(f"t = {t} is excluded (t = 0 or |t| = 1/sqrt3)")
    return t


@lru_cache(maxsize=512)
def _case_iv_system(t: Fraction) -> tuple[MultiPoly, MultiPoly, MultiPoly]:
    """(e1, e2, q) over (p, r) after a = t + p, b = tp + q, c = tq + r, d = tr and q eliminated."""
    V = ("p", "r")
    p, r = poly_ring(V)
    q = (-(19 + 9 * t * p + 27 * t * r)) / 9
    sub = {"a": t + p, "b": t * p + q, "c": t * q + r, "d": t * r}
    e1 = from_text(E1_TEXT, VARS4).substitute(sub, vars=V)
    e2 = from_text(E2_TEXT, VARS4).substitute(sub, vars=V)
    return e1, e2, q


def case_iv_raw(t) -> MultiPoly:
    """Res_p(e1, e2) before cleanup, a polynomial in r."""
    e1, e2, _ = _case_iv_system(_check_t(t))
    return resultant(e1, e2, "p")


def case_iv_univariate(t) -> UniRealPoly:
    """Degree-6 polynomial in r whose roots carry the generic solutions at this t."""
    t = _check_t(t)
    raw = case_iv_raw(t)
    coeffs = [c.constant_value() for c in raw.coeffs_in("r")]
    u = UniRealPoly(coeffs)
    if u.is_zero():
        raise UnexpectedDegree("resultant vanished identically", raw)
    u = UniRealPoly([c / _content(coeffs) for c in u.coeffs]).squarefree()
    if u.degree != 6:
        raise UnexpectedDegree(f"cleaned resultant has degree {u.degree}, expected 6", raw)
    return u


def _content(coeffs: Sequence[Fraction]) -> Fraction:
    nums = [abs(Fraction(c).numerator) for c in coeffs if c]
    dens = [Fraction(c).denominator for c in coeffs if c]
    return Fraction(math.gcd(*nums), math.lcm(*dens))


@dataclass(frozen=True)
class CaseIVSolution:
    t: float
    triple: tuple[float, float, float]
    residual: float                      # max |F_i| at (t, x, y, z)
    p: float
    q: float
    r: float

    @property
    def state(self) -> SymmetricState:
        return SymmetricState.from_roots(self.t, *self.triple)


def _mp_poly_eval(poly: MultiPoly, point: Sequence) -> mpmath.mpf:
    return poly.eval(list(point))


def _real_r_roots(u: UniRealPoly, squarefree: bool) -> list:
    """Real roots of the r-polynomial at working precision."""
    if not squarefree:
        roots = mpmath.polyroots([_mp(c) for c in reversed(u.coeffs)], maxsteps=400, extraprec=400)
        return sorted(z.real if isinstance(z, mpmath.mpc) else z
                      for z in roots if abs(mpmath.im(z)) <= mpmath.mpf(10) ** (-20))
    out = []
    du = u.derivative()
    for a, b in isolate_roots(u):
        a, b = refine_root(u, a, b, Fraction(1, 10**18))
        x = _mp(a + b) / 2
        for _ in range(6):
            d = _mp_poly_eval_uni(du, x)
            if d == 0:
                break
            x -= _mp_poly_eval_uni(u, x) / d
        out.append(x)
    return out


def _mp_poly_eval_uni(u: UniRealPoly, x):
    acc = mpmath.mpf(0)
    for c in reversed(u.coeffs):
        acc = acc * x + _mp(c)
    return acc


def _cubic_is_real(p, q, r) -> bool:
    # discriminant of x^3 - p x^2 + q x - r
    disc = 18 * p * q * r - 4 * p**3 * r + p**2 * q**2 - 4 * q**3 - 27 * r**2
    scale = max(1, abs(p), abs(q), abs(r)) ** 4
    return disc >= -mpmath.mpf(10) ** (-30) * scale


def case_iv_solutions(t, dedup: float = 1e-6, squarefree: bool = True) -> list[CaseIVSolution]:
    """Real generic-branch solutions (x, y, z) for this t, sorted by x.

    ``squarefree=False`` takes roots of the raw resultant instead of its
    square-free part; counts agree after back-substitution.
    """
    t = _check_t(t)
    e1, e2, qpoly = _case_iv_system(t)
    if squarefree:
        u = case_iv_univariate(t)
    else:
        raw = case_iv_raw(t)
        u = UniRealPoly([c.constant_value() for c in raw.coeffs_in("r")])
    sols: list[CaseIVSolution] = []
    with mpmath.workdps(WORK_DPS):
        tm = _mp(t)
        e1_p = e1.coeffs_in("p")
        for r in _real_r_roots(u, squarefree):
            cs = [c.eval([0, r]) for c in e1_p]
            cs = [_mp(c) for c in cs]
            while len(cs) > 1 and cs[-1] == 0:
                cs.pop()
            if len(cs) < 2:
                continue
            cands = mpmath.polyroots(list(reversed(cs)), maxsteps=200, extraprec=200)
            p = min(cands, key=lambda z: abs(e2.eval([z, r])))
            if abs(mpmath.im(p)) > mpmath.mpf(10) ** (-20):
                continue
            p = mpmath.re(p)
            q = qpoly.eval([p, r])
            if not _cubic_is_real(p, q, r):
                continue
            xs = sorted(mpmath.re(z) for z in mpmath.polyroots([1, -p, q, -r], maxsteps=200, extraprec=200))
            if any(abs(abs(v) - INV_SQRT3) <= 1e-9 for v in (*xs, tm)):
                continue
            vals = _elementary([tm, *xs])
            res = max(abs(table_poly(n).eval(vals)) for n in ("F1", "F2", "F3", "F4"))
            triple = tuple(float(v) for v in xs)
            if any(max(abs(a - b) for a, b in zip(triple, s.triple)) <= dedup for s in sols):
                continue
            sols.append(CaseIVSolution(float(tm), triple, float(res), float(p), float(q), float(r)))
    sols.sort(key=lambda s: s.triple)
    return sols


def f_direct_residual(sol: CaseIVSolution) -> float:
    """max |f| over the four triples of (t, x, y, z), f evaluated from its own definition."""
    f = _f_poly()
    pts = (sol.t, *sol.triple)
    with mpmath.workdps(WORK_DPS):
        vals = [mpmath.mpf(v) for v in pts]
        return float(max(abs(f.eval([vals[i] for i in idx]))
                         for idx in itertools.combinations(range(4), 3)))


@lru_cache(maxsize=1)
def _f_poly() -> MultiPoly:
    return derive_f()


def _count_at(t: Fraction) -> int:
    return len(case_iv_solutions(t))


@dataclass(frozen=True)
class ScanTable:
    rows: tuple[tuple[Fraction, int], ...]
    breakpoints: tuple[float, ...]
    skipped: tuple[Fraction, ...] = field(default=())

    def counts(self) -> dict[float, int]:
        return {float(t): n for t, n in self.rows}


def _map(fn, items: list, workers: int) -> list:
    if workers <= 1 or len(items) <= 1:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items, chunksize=max(1, len(items) // (4 * workers))))


def scan_table(t_grid: Iterable, workers: int = 1, breakpoint_tol: float = 1e-4) -> ScanTable:
    """Solution counts over a t grid, with count changes localized by bisection.

    Grid values must be rational (floats are converted exactly via their
    decimal string).  Excluded values are skipped and reported.
    """
    grid, skipped = [], []
    for t in t_grid:
        t = t if isinstance(t, Fraction) else Fraction(str(t))
        try:
            _check_t(t)
        except ExcludedParameter:
            skipped.append(t)
            continue
        grid.append(t)
    grid.sort()
    counts = _map(_count_at, grid, workers)
    rows = tuple(zip(grid, counts))
    gaps = [(a, b) for (a, na), (b, nb) in zip(rows, rows[1:])
            if na != nb and (a > 0) == (b > 0)]
    bps = _map(_BisectJob(breakpoint_tol), gaps, workers)
    return ScanTable(rows, tuple(bps), tuple(skipped))


@dataclass(frozen=True)
class _BisectJob:
    tol: float

    def __call__(self, gap: tuple[Fraction, Fraction]) -> float:
        lo, hi = gap
        n_lo = _count_at(lo)
        while hi - lo > self.tol:
            mid = (lo + hi) / 2
            # keep bisection points short rationals
            mid = Fraction(round(mid * 10**8), 10**8)
            try:
                n_mid = _count_at(mid)
            except ExcludedParameter:
                break
            if n_mid == n_lo:
                lo = mid
            else:
                hi = mid
        return float((lo + hi) / 2)


# ---------------------------------------------------------------- point sets from tangents

def _positive_sigma(phi: float, anchor_phi: float) -> float:
    sols = sigma_solutions(phi, anchor_phi, 0.0)
    if sols is UNCONSTRAINED or not sols:
        raise ArithmeticError(f"no separating phase for phi = {phi}")
    return max(sols)


def candidate_points(t: float, xs: Sequence[float]) -> tuple[list[ProjectivePoint], list[str]]:
    """[z1], [z2], z[0, arctan t] and z[+-s_i, arctan x_i] with s_i > 0 separating from the third."""
    phi3 = math.atan(t)
    pts = [Z1, Z2, z_of((0.0, phi3))]
    labels = ["z1", "z2", "z3"]
    for i, x in enumerate(xs, start=4):
        phi = math.atan(x)
        s = _positive_sigma(phi, phi3)
        for sign, tag in ((1, "+"), (-1, "-")):
            pts.append(z_of((sign * s, phi)))
            labels.append(f"z{i}{tag}")
    return pts, labels


def separation_graph(points: Sequence[ProjectivePoint], tol: float = 1e-9) -> set[tuple[int, int]]:
    kappa = 1 / (points[0].n + 1)
    return {(i, j) for i, j in itertools.combinations(range(len(points)), 2)
            if abs(cross_ratio(points[i], points[j]) - kappa) <= tol}


def max_clique(n: int, edges: set[tuple[int, int]]) -> tuple[int, ...]:
    """Largest set of vertices pairwise joined (exhaustive; n is small)."""
    adj = {i: set() for i in range(n)}
    for i, j in edges:
        adj[i].add(j)
        adj[j].add(i)
    best: tuple[int, ...] = ()

    def grow(clique: list[int], cands: set[int]):
        nonlocal best
        if len(clique) > len(best):
            best = tuple(clique)
        if len(clique) + len(cands) <= len(best):
            return
        for v in sorted(cands):
            grow(clique + [v], {u for u in cands if u > v and u in adj[v]})

    grow([], set(range(n)))
    return best


@dataclass(frozen=True)
class ExtensionCheck:
    solution: CaseIVSolution
    clique: tuple[str, ...]

    @property
    def extends_to_sic(self) -> bool:
        return len(self.clique) >= 9


def extension_check(sol: CaseIVSolution, tol: float = 1e-9) -> ExtensionCheck:
    """Largest mutually separated subset of the candidate points a solution generates."""
    pts, labels = candidate_points(sol.t, sol.triple)
    clique = max_clique(len(pts), separation_graph(pts, tol))
    return ExtensionCheck(sol, tuple(labels[i] for i in clique))


@dataclass(frozen=True)
class FakeSIC:
    configuration: Configuration
    labels: tuple[str, ...]
    roots: tuple[float, float, float, float]
    separated: tuple[tuple[str, str], ...]
    extra_pairs: tuple[tuple[str, str], ...]  # separated pairs among the six z[+-s_i, phi_i]

    @property
    def separated_count(self) -> int:
        return len(self.separated)

    def extra_pattern(self, flip: Sequence[str] = ()) -> frozenset:
        """Extra pairs as label sets, with the sign labels of the points in ``flip`` exchanged."""
        def relabel(lab: str) -> str:
            if lab[:-1] in flip:
                return lab[:-1] + ("-" if lab[-1] == "+" else "+")
            return lab
        return frozenset(frozenset(map(relabel, pair)) for pair in self.extra_pairs)

    def pattern_relabelings(self) -> list[tuple[str, ...]]:
        """Sets of points whose sign labels must be exchanged to reach the listed pattern."""
        names = ("z4", "z5", "z6")
        return [flip for k in range(4) for flip in itertools.combinations(names, k)
                if self.extra_pattern(flip) == EXPECTED_EXTRA_PAIRS]


EXPECTED_EXTRA_PAIRS = frozenset({
    frozenset({"z4+", "z5+"}), frozenset({"z4+", "z6+"}), frozenset({"z5+", "z6-"}),
    frozenset({"z4-", "z5-"}), frozenset({"z4-", "z6-"}), frozenset({"z5-", "z6+"}),
})


def fake_sic_quartic() -> UniRealPoly:
    """27 x^4 - 66 x^2 + 8 sqrt(26 - 2 sqrt 97) x + 3 in double precision."""
    return UniRealPoly([3.0, 8 * math.sqrt(26 - 2 * math.sqrt(97)), -66.0, 0.0, 27.0], exact=False)


def fake_sic(tol: float = 1e-9) -> FakeSIC:
    """Nine points with 27 of 36 pairs correctly separated, from a = 0, b = -22/9, d = 1/9."""
    roots = real_roots(fake_sic_quartic())
    if len(roots) != 4:
        raise ArithmeticError(f"expected four real roots, found {len(roots)}")
    pts, labels = candidate_points(roots[0], roots[1:])
    edges = separation_graph(pts, tol)
    named = tuple((labels[i], labels[j]) for i, j in sorted(edges))
    six = set(range(3, 9))
    extra = tuple((labels[i], labels[j]) for i, j in sorted(edges) if i in six and j in six)
    return FakeSIC(Configuration(pts), tuple(labels), tuple(roots), named, extra)
