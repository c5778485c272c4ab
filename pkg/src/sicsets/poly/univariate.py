"""Univariate real polynomials, Sturm chains and real root isolation.

Two coefficient modes: exact (ints/Fractions, the default when every
coefficient is rational) and float.  In float mode Sturm remainders have
coefficients below ``FLOAT_FLOOR`` (relative to the largest one) dropped.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Sequence

FLOAT_FLOOR = 1e-13


class RootFindingError(RuntimeError):
    def __init__(self, message: str, partial: list[float] | None = None):
        super().__init__(message)
        self.partial = partial or []


def _is_exact(c) -> bool:
    return isinstance(c, (int, Fraction)) or isinstance(c, Rational)


class UniRealPoly:
    """Coefficients ascending by degree: ``UniRealPoly([-2, 0, 1])`` is x^2 - 2."""

    __slots__ = ("coeffs", "exact")

    def __init__(self, coeffs: Sequence, exact: bool | None = None, tol: float = 0.0):
        cs = list(coeffs)
        if exact is None:
            exact = all(_is_exact(c) for c in cs)
        if exact:
            cs = [Fraction(c) for c in cs]
            while cs and cs[-1] == 0:
                cs.pop()
        else:
            cs = [float(c) for c in cs]
            scale = max((abs(c) for c in cs), default=0.0)
            while cs and abs(cs[-1]) <= tol * scale:
                cs.pop()
            if cs and cs[-1] == 0.0:
                cs.pop()
        self.coeffs = cs
        self.exact = exact

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __repr__(self):
        kind = "exact" if self.exact else "float"
        return f"UniRealPoly({[str(c) if self.exact else c for c in self.coeffs]}, {kind})"

    def __eq__(self, other):
        return isinstance(other, UniRealPoly) and self.coeffs == other.coeffs

    def to_float(self) -> "UniRealPoly":
        return UniRealPoly([float(c) for c in self.coeffs], exact=False)

    def derivative(self) -> "UniRealPoly":
        return UniRealPoly([c * k for k, c in enumerate(self.coeffs)][1:], exact=self.exact)

    def monic(self) -> "UniRealPoly":
        lead = self.coeffs[-1]
        return UniRealPoly([c / lead for c in self.coeffs], exact=self.exact)

    def divmod(self, other: "UniRealPoly") -> tuple["UniRealPoly", "UniRealPoly"]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        exact = self.exact and other.exact
        rem = list(self.coeffs)
        d = other.degree
        lead = other.coeffs[-1]
        quot = [0] * max(len(rem) - d, 0)
        for k in range(len(rem) - 1 - d, -1, -1):
            q = rem[k + d] / lead
            quot[k] = q
            if q:
                for i, c in enumerate(other.coeffs):
                    rem[k + i] -= q * c
            rem[k + d] = 0
        return (UniRealPoly(quot, exact=exact),
                UniRealPoly(rem[:d] if d > 0 else [], exact=exact, tol=0 if exact else FLOAT_FLOOR))

    def gcd(self, other: "UniRealPoly") -> "UniRealPoly":
        a, b = self, other
        while not b.is_zero():
            a, b = b, a.divmod(b)[1]
        return a.monic() if not a.is_zero() else a

    def squarefree(self) -> "UniRealPoly":
        """Product of the distinct irreducible factors (p / gcd(p, p'))."""
        if self.degree <= 1:
            return self
        g = self.gcd(self.derivative())
        if g.degree <= 0:
            return self
        return self.divmod(g)[0]

    def root_bound(self) -> float:
        """Cauchy bound: every real root has |x| < 1 + max |a_k / a_n|."""
        lead = abs(self.coeffs[-1])
        return 1 + float(max((abs(c) for c in self.coeffs[:-1]), default=0) / lead)


@dataclass(frozen=True)
class SturmChain:
    polys: tuple[UniRealPoly, ...]

    def sign_changes(self, x) -> int:
        count = 0
        prev = 0
        for p in self.polys:
            v = p(x)
            s = (v > 0) - (v < 0)
            if s:
                if prev and s != prev:
                    count += 1
                prev = s
        return count

    def count(self, lo, hi) -> int:
        """Distinct real roots in (lo, hi]."""
        return self.sign_changes(lo) - self.sign_changes(hi)


def sturm_chain(p: UniRealPoly) -> SturmChain:
    p = p.squarefree()
    chain = [p, p.derivative()]
    while chain[-1].degree > 0:
        r = chain[-2].divmod(chain[-1])[1]
        if r.is_zero():
            break
        chain.append(UniRealPoly([-c for c in r.coeffs], exact=r.exact))
    return SturmChain(tuple(chain))


def sturm_count(p: UniRealPoly, lo, hi) -> int:
    """Number of distinct real roots of p in (lo, hi]."""
    if p.degree <= 0:
        return 0
    return sturm_chain(p).count(lo, hi)


def _as_point(x, exact: bool):
    return Fraction(x) if exact else float(x)


def isolate_roots(p: UniRealPoly, lo=None, hi=None, max_iter: int = 200):
    """Disjoint intervals (a, b] containing exactly one root each, ascending.

    Exact polynomials are isolated with rational endpoints.
    """
    p = p.squarefree()
    if p.degree <= 0:
        return []
    chain = sturm_chain(p)
    bound = p.root_bound()
    lo = _as_point(-bound if lo is None else lo, p.exact)
    hi = _as_point(bound if hi is None else hi, p.exact)
    out = []
    stack = [(lo, hi, chain.count(lo, hi), 0)]
    while stack:
        a, b, n, depth = stack.pop()
        if n == 0:
            continue
        if n == 1:
            out.append((a, b))
            continue
        if depth > max_iter:
            raise RootFindingError("could not separate clustered roots",
                                   [float(a) for a, _ in out])
        m = (a + b) / 2
        n_left = chain.count(a, m)
        stack.append((m, b, n - n_left, depth + 1))
        stack.append((a, m, n_left, depth + 1))
    out.sort(key=lambda ab: ab[0])
    return out


def refine_root(p: UniRealPoly, a, b, width, max_iter: int = 400):
    """Bisect (a, b] holding a single root of squarefree p down to ``width``.

    Only the sign at the closed end b is used, so a root of p sitting exactly
    on the open end a does not disturb the search.
    """
    fb = p(b)
    if fb == 0:
        return b, b
    it = 0
    while b - a > width:
        it += 1
        if it > max_iter:
            raise RootFindingError("bisection did not converge")
        m = (a + b) / 2
        fm = p(m)
        if fm == 0:
            return m, m
        if (fm > 0) == (fb > 0):
            b, fb = m, fm
        else:
            a = m
    return a, b


def real_roots(p: UniRealPoly, interval=None, tol: float = 1e-12,
               max_iter: int = 400) -> list[float]:
    """All distinct real roots in the interval, ascending, to about ``tol``.

    Sturm-guided isolation, bisection to width ``tol``, then a Newton polish
    that is accepted only if it stays inside the isolating interval.
    """
    sq = p.squarefree()
    if sq.degree <= 0:
        return []
    lo, hi = interval if interval is not None else (None, None)
    roots: list[float] = []
    try:
        boxes = isolate_roots(sq, lo, hi)
    except RootFindingError as exc:
        raise RootFindingError(str(exc), exc.partial) from exc
    fp = sq.to_float()
    dfp = fp.derivative()
    for a, b in boxes:
        try:
            a2, b2 = refine_root(sq, a, b, _as_point(tol, sq.exact), max_iter)
        except RootFindingError as exc:
            raise RootFindingError(str(exc), roots) from exc
        x = float((a2 + b2) / 2)
        for _ in range(3):
            d = dfp(x)
            if d == 0:
                break
            nx = x - fp(x) / d
            if not (float(a) - tol <= nx <= float(b) + tol) or not math.isfinite(nx):
                break
            x = nx
        if not roots or abs(x - roots[-1]) > tol:
            roots.append(x)
    return roots
