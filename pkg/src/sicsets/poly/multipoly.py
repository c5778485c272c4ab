"""Sparse multivariate polynomials with exact rational coefficients.

Coefficients are Python ints where possible and ``fractions.Fraction``
otherwise; exponent vectors are tuples ordered like ``vars``.  Comparing
exponent tuples directly gives the lexicographic monomial order with the
first variable largest.
"""

from __future__ import annotations

import re
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Mapping, Sequence

Coeff = int | Fraction


def _norm(c) -> Coeff:
    if isinstance(c, Fraction):
        return c.numerator if c.denominator == 1 else c
    if isinstance(c, int):
        return c
    if isinstance(c, Rational):
        return _norm(Fraction(c.numerator, c.denominator))
    raise TypeError(f"exact coefficient expected, got {type(c).__name__}")


class VariableMismatch(ValueError):
    pass


class InexactDivision(ArithmeticError):
    """Raised when a division that must be exact leaves a remainder."""


class MultiPoly:
    __slots__ = ("vars", "terms")

    def __init__(self, terms: Mapping[tuple[int, ...], Coeff] | None = None,
                 vars: Sequence[str] = ()):
        self.vars = tuple(vars)
        nv = len(self.vars)
        clean = {}
        for e, c in (terms or {}).items():
            e = tuple(e)
            if len(e) != nv:
                raise ValueError(f"exponent {e} does not match variables {self.vars}")
            c = _norm(c)
            if c:
                clean[e] = clean.get(e, 0) + c
                if not clean[e]:
                    del clean[e]
        self.terms = clean

    @classmethod
    def _raw(cls, terms: dict, vars: tuple[str, ...]) -> "MultiPoly":
        p = object.__new__(cls)
        p.vars = vars
        p.terms = terms
        return p

    # construction
    @classmethod
    def const(cls, c, vars: Sequence[str]) -> "MultiPoly":
        vars = tuple(vars)
        c = _norm(c)
        return cls._raw({(0,) * len(vars): c} if c else {}, vars)

    @classmethod
    def var(cls, name: str, vars: Sequence[str]) -> "MultiPoly":
        vars = tuple(vars)
        e = [0] * len(vars)
        e[vars.index(name)] = 1
        return cls._raw({tuple(e): 1}, vars)

    @classmethod
    def gens(cls, vars: Sequence[str]) -> tuple["MultiPoly", ...]:
        return tuple(cls.var(v, vars) for v in vars)

    # basic queries
    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(not any(e) for e in self.terms)

    def constant_value(self) -> Coeff:
        if not self.is_constant():
            raise ValueError("polynomial is not constant")
        return self.terms.get((0,) * len(self.vars), 0)

    def __len__(self):
        return len(self.terms)

    def degree(self, var: str | None = None) -> int:
        if not self.terms:
            return -1
        if var is None:
            return max(sum(e) for e in self.terms)
        i = self.vars.index(var)
        return max(e[i] for e in self.terms)

    def leading_term(self) -> tuple[tuple[int, ...], Coeff]:
        e = max(self.terms)
        return e, self.terms[e]

    def coefficient(self, exps: Sequence[int]) -> Coeff:
        return self.terms.get(tuple(exps), 0)

    def _check(self, other: "MultiPoly") -> None:
        if self.vars != other.vars:
            raise VariableMismatch(f"{self.vars} vs {other.vars}")

    def _coerce(self, other) -> "MultiPoly":
        if isinstance(other, MultiPoly):
            self._check(other)
            return other
        return MultiPoly.const(other, self.vars)

    # ring operations
    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = _norm(v)
            else:
                out.pop(e, None)
        return MultiPoly._raw(out, self.vars)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly._raw({e: -c for e, c in self.terms.items()}, self.vars)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> "MultiPoly":
        c = _norm(c)
        if not c:
            return MultiPoly._raw({}, self.vars)
        return MultiPoly._raw({e: _norm(v * c) for e, v in self.terms.items()}, self.vars)

    def __mul__(self, other):
        if not isinstance(other, MultiPoly):
            return self.scale(other)
        self._check(other)
        out: dict = {}
        get = out.get
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple([a + b for a, b in zip(e1, e2)])
                out[e] = get(e, 0) + c1 * c2
        return MultiPoly._raw({e: _norm(c) for e, c in out.items() if c}, self.vars)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        result = MultiPoly.const(1, self.vars)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __truediv__(self, c):
        if isinstance(c, MultiPoly):
            return self.exact_div(c)
        return self.scale(Fraction(1) / _norm(c))

    def __eq__(self, other):
        if isinstance(other, MultiPoly):
            return self.vars == other.vars and self.terms == other.terms
        try:
            return self == MultiPoly.const(other, self.vars)
        except TypeError:
            return NotImplemented

    def __hash__(self):
        return hash((self.vars, frozenset(self.terms.items())))

    # division
    def divmod(self, divisor: "MultiPoly") -> tuple["MultiPoly", "MultiPoly"]:
        """Multivariate division by a single polynomial in lex order."""
        self._check(divisor)
        if divisor.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        lead_e, lead_c = divisor.leading_term()
        rest = [(e, c) for e, c in divisor.terms.items() if e != lead_e]
        work = dict(self.terms)
        quot: dict = {}
        rem: dict = {}
        while work:
            e = max(work)
            c = work.pop(e)
            if all(a >= b for a, b in zip(e, lead_e)):
                shift = tuple([a - b for a, b in zip(e, lead_e)])
                q = _norm(Fraction(c) / lead_c) if not isinstance(c, int) or c % lead_c else c // lead_c
                quot[shift] = q
                for e2, c2 in rest:
                    ee = tuple([a + b for a, b in zip(shift, e2)])
                    v = work.get(ee, 0) - q * c2
                    if v:
                        work[ee] = _norm(v)
                    else:
                        work.pop(ee, None)
            else:
                rem[e] = c
        return MultiPoly._raw(quot, self.vars), MultiPoly._raw(rem, self.vars)

    def exact_div(self, divisor: "MultiPoly") -> "MultiPoly":
        q, r = self.divmod(divisor)
        if not r.is_zero():
            raise InexactDivision(f"remainder with {len(r)} terms")
        return q

    # calculus and substitution
    def diff(self, var: str) -> "MultiPoly":
        i = self.vars.index(var)
        out = {}
        for e, c in self.terms.items():
            if e[i]:
                ee = list(e)
                ee[i] -= 1
                out[tuple(ee)] = c * e[i]
        return MultiPoly._raw(out, self.vars)

    def permute(self, mapping: Mapping[str, str]) -> "MultiPoly":
        """Rename variables by a permutation of ``vars`` (e.g. swap y and z)."""
        images = [mapping.get(v, v) for v in self.vars]
        if sorted(images) != sorted(self.vars):
            raise ValueError("mapping must permute the variable set")
        pos = [self.vars.index(v) for v in images]
        out = {}
        for e, c in self.terms.items():
            ee = [0] * len(e)
            for i, k in enumerate(e):
                ee[pos[i]] = k
            out[tuple(ee)] = c
        return MultiPoly._raw(out, self.vars)

    def with_vars(self, vars: Sequence[str]) -> "MultiPoly":
        """Re-express over a different variable list (must contain every variable used)."""
        vars = tuple(vars)
        idx = []
        for i, v in enumerate(self.vars):
            if v in vars:
                idx.append(vars.index(v))
            elif any(e[i] for e in self.terms):
                raise VariableMismatch(f"variable {v} is used but missing from {vars}")
            else:
                idx.append(None)
        out = {}
        for e, c in self.terms.items():
            ee = [0] * len(vars)
            for i, k in enumerate(e):
                if idx[i] is not None:
                    ee[idx[i]] = k
            out[tuple(ee)] = c
        return MultiPoly._raw(out, vars)

    def substitute(self, mapping: Mapping[str, "MultiPoly | Coeff"],
                   vars: Sequence[str] | None = None) -> "MultiPoly":
        """Replace variables by polynomials (or exact constants).

        The result lives over ``vars`` (default: the substituted polynomials'
        variables, or ``self.vars`` if only constants are substituted).
        Unsubstituted variables must appear in the target variable list.
        """
        if vars is None:
            polys = [v for v in mapping.values() if isinstance(v, MultiPoly)]
            vars = polys[0].vars if polys else self.vars
        vars = tuple(vars)
        images = []
        for v in self.vars:
            if v in mapping:
                img = mapping[v]
                images.append(img.with_vars(vars) if isinstance(img, MultiPoly)
                              else MultiPoly.const(img, vars))
            elif v in vars:
                images.append(MultiPoly.var(v, vars))
            else:
                images.append(None)
        cache: dict[tuple[int, int], MultiPoly] = {}

        def power(i, k):
            key = (i, k)
            if key not in cache:
                cache[key] = images[i] if k == 1 else power(i, k - 1) * images[i]
            return cache[key]

        out: dict = {}
        one = MultiPoly.const(1, vars)
        for e, c in self.terms.items():
            term = one
            for i, k in enumerate(e):
                if k:
                    if images[i] is None:
                        raise VariableMismatch(f"variable {self.vars[i]} has no image")
                    term = term * power(i, k)
            for ee, cc in term.terms.items():
                v = out.get(ee, 0) + c * cc
                if v:
                    out[ee] = v
                else:
                    out.pop(ee, None)
        return MultiPoly._raw({e: _norm(c) for e, c in out.items()}, vars)

    def eval(self, point: Mapping[str, object] | Sequence[object]):
        """Evaluate at a point (dict by name, or sequence in ``vars`` order).

        Exact for int/Fraction inputs; approximate for floats or complex.
        """
        if isinstance(point, Mapping):
            vals = [point[v] for v in self.vars]
        else:
            vals = list(point)
            if len(vals) != len(self.vars):
                raise VariableMismatch("point has the wrong number of coordinates")
        degs = [max((e[i] for e in self.terms), default=0) for i in range(len(vals))]
        pows = []
        for v, d in zip(vals, degs):
            row = [1]
            for _ in range(d):
                row.append(row[-1] * v)
            pows.append(row)
        total = 0
        for e, c in self.terms.items():
            term = c
            for i, k in enumerate(e):
                if k:
                    term = term * pows[i][k]
            total = total + term
        return total

    def coeffs_in(self, var: str) -> list["MultiPoly"]:
        """Coefficients (ascending) of self viewed as a polynomial in ``var``."""
        i = self.vars.index(var)
        d = self.degree(var)
        out = [dict() for _ in range(max(d, 0) + 1)]
        for e, c in self.terms.items():
            ee = list(e)
            k = ee[i]
            ee[i] = 0
            out[k][tuple(ee)] = c
        return [MultiPoly._raw(t, self.vars) for t in out]

    def content(self) -> Fraction:
        """Positive rational g with self / g primitive over Z."""
        from math import gcd, lcm
        if not self.terms:
            return Fraction(0)
        nums, dens = [], []
        for c in self.terms.values():
            c = Fraction(c)
            nums.append(abs(c.numerator))
            dens.append(c.denominator)
        g = 0
        for n in nums:
            g = gcd(g, n)
        return Fraction(g, lcm(*dens))

    def primitive(self) -> "MultiPoly":
        g = self.content()
        p = self.scale(1 / g)
        if p.leading_term()[1] < 0:
            p = -p
        return p

    # text format
    def __str__(self):
        return to_text(self)

    def __repr__(self):
        return f"MultiPoly({to_text(self)!r}, vars={self.vars})"


def poly_ring(names: str | Sequence[str]):
    """``t, x = poly_ring('t x')`` returns generators over those variables."""
    vars = tuple(names.split()) if isinstance(names, str) else tuple(names)
    return MultiPoly.gens(vars)


def to_text(p: MultiPoly) -> str:
    """``coef*var^k*...`` terms, lex-descending; coefficients int or num/den."""
    if not p.terms:
        return "0"
    parts = []
    for e in sorted(p.terms, reverse=True):
        c = Fraction(p.terms[e])
        mono = "*".join(v if k == 1 else f"{v}^{k}" for v, k in zip(p.vars, e) if k)
        mag = abs(c)
        cs = str(mag.numerator) if mag.denominator == 1 else f"{mag.numerator}/{mag.denominator}"
        if mono:
            body = mono if mag == 1 else f"{cs}*{mono}"
        else:
            body = cs
        sign = "-" if c < 0 else "+"
        parts.append((sign, body))
    first_sign, first = parts[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


_TERM_SPLIT = re.compile(r"(?<=[^\s*/^])\s*(?=[+-])")
_TOKEN = re.compile(r"[\s*]*(?:(\d+)(?:\s*/\s*(\d+))?|([A-Za-z_][A-Za-z_0-9]*)(?:\^(\d+))?)[\s*]*")


class ParseError(ValueError):
    pass


def from_text(text: str, vars: Sequence[str]) -> MultiPoly:
    """Parse the text format; factors may be joined by ``*`` or by whitespace."""
    vars = tuple(vars)
    s = text.strip()
    if not s:
        raise ParseError("empty polynomial")
    terms: dict = {}
    for chunk in _TERM_SPLIT.split(s):
        chunk = chunk.strip()
        if not chunk:
            continue
        sign = 1
        while chunk and chunk[0] in "+-":
            if chunk[0] == "-":
                sign = -sign
            chunk = chunk[1:].strip()
        if not chunk:
            raise ParseError("dangling sign")
        coef = Fraction(sign)
        exps = [0] * len(vars)
        body = chunk
        pos = 0
        while pos < len(body):
            m = _TOKEN.match(body, pos)
            if not m or m.end() == pos:
                raise ParseError(f"cannot parse {chunk!r} at {body[pos:]!r}")
            pos = m.end()
            num, den, name, power = m.groups()
            if num:
                coef *= Fraction(int(num), int(den or 1))
                continue
            k = int(power or 1)
            if name in vars:
                exps[vars.index(name)] += k
            elif all(ch in vars for ch in name):
                # single-letter variables written side by side, e.g. "pq^2"
                for ch in name[:-1]:
                    exps[vars.index(ch)] += 1
                exps[vars.index(name[-1])] += k
            else:
                raise ParseError(f"unknown variable {name!r}")
        e = tuple(exps)
        terms[e] = terms.get(e, 0) + coef
    return MultiPoly(terms, vars)


def lcm_denominator(polys: Iterable[MultiPoly]) -> int:
    from math import lcm
    d = 1
    for p in polys:
        for c in p.terms.values():
            d = lcm(d, Fraction(c).denominator)
    return d
