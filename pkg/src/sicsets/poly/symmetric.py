"""Elementary symmetric polynomials, symmetric reduction and divided differences."""

from __future__ import annotations

from typing import Sequence

from .multipoly import InexactDivision, MultiPoly


class NotSymmetric(ValueError):
    pass


def elementary_symmetric(vars: Sequence[str]) -> list[MultiPoly]:
    """e_1, ..., e_n in the given variables."""
    vars = tuple(vars)
    n = len(vars)
    # coefficients of prod (1 + v_i T), read off degree by degree
    terms_by_deg: list[dict] = [{(0,) * n: 1}] + [{} for _ in range(n)]
    for i in range(n):
        for k in range(i + 1, 0, -1):
            for e, c in terms_by_deg[k - 1].items():
                ee = list(e)
                ee[i] += 1
                terms_by_deg[k][tuple(ee)] = c
    return [MultiPoly(t, vars) for t in terms_by_deg[1:]]


def is_symmetric(f: MultiPoly, vars: Sequence[str] | None = None) -> bool:
    """Exact test: invariance under a transposition and a full cycle generates S_n."""
    vars = tuple(vars or f.vars)
    if len(vars) < 2:
        return True
    swap = {vars[0]: vars[1], vars[1]: vars[0]}
    cycle = {v: vars[(i + 1) % len(vars)] for i, v in enumerate(vars)}
    return f.permute(swap) == f and f.permute(cycle) == f


def symmetric_reduce(f: MultiPoly, names: Sequence[str] | None = None,
                     check: bool = True) -> MultiPoly:
    """Write a symmetric polynomial in terms of elementary symmetric ones.

    The classical algorithm: repeatedly strip the lex-leading monomial
    c x^L by subtracting c e_1^{L1-L2} e_2^{L2-L3} ... e_n^{Ln}.  Only the
    monomials with non-increasing exponents are tracked, since they determine
    a symmetric polynomial.  ``names`` labels the result's variables
    (default s1, s2, ...).
    """
    n = len(f.vars)
    names = tuple(names or [f"s{i + 1}" for i in range(n)])
    if len(names) != n:
        raise ValueError("need one name per elementary symmetric polynomial")
    if check and not is_symmetric(f):
        raise NotSymmetric("input polynomial is not symmetric")
    es = elementary_symmetric(f.vars)

    def sorted_part(p: MultiPoly) -> dict:
        return {e: c for e, c in p.terms.items()
                if all(e[i] >= e[i + 1] for i in range(n - 1))}

    cache: dict[tuple[int, ...], dict] = {(0,) * n: {(0,) * n: 1}}

    def e_power(mu: tuple[int, ...]) -> dict:
        if mu in cache:
            return cache[mu]
        # peel one factor off the last nonzero slot and reuse the cached rest
        j = max(i for i, m in enumerate(mu) if m)
        prev = list(mu)
        prev[j] -= 1
        base = MultiPoly(e_power(tuple(prev)), f.vars) * es[j]
        cache[mu] = base.terms
        return cache[mu]

    work = sorted_part(f)
    out: dict = {}
    while work:
        lead = max(work)
        c = work[lead]
        mu = tuple(lead[i] - (lead[i + 1] if i + 1 < n else 0) for i in range(n))
        if any(m < 0 for m in mu):
            raise NotSymmetric("leading monomial is not a partition")
        out[mu] = c
        for e, cc in e_power(mu).items():
            if all(e[i] >= e[i + 1] for i in range(n - 1)):
                v = work.get(e, 0) - c * cc
                if v:
                    work[e] = v
                else:
                    work.pop(e, None)
    return MultiPoly(out, names)


def expand_symmetric(F: MultiPoly, vars: Sequence[str]) -> MultiPoly:
    """Substitute e_1, ..., e_n of ``vars`` for the variables of F (inverse of the reduction)."""
    es = elementary_symmetric(vars)
    return F.substitute(dict(zip(F.vars, es)), vars=tuple(vars))


def divided_difference(f: MultiPoly, u: str, v: str, swap: bool = False) -> MultiPoly:
    """(f - f') / (u - v), where f' replaces u by v (or, with ``swap``, exchanges u and v).

    The division must be exact; a remainder raises ``InexactDivision``.
    """
    if swap:
        other = f.permute({u: v, v: u})
    else:
        other = f.substitute({u: MultiPoly.var(v, f.vars)}, vars=f.vars)
    num = f - other
    den = MultiPoly.var(u, f.vars) - MultiPoly.var(v, f.vars)
    q, r = num.divmod(den)
    if not r.is_zero():
        raise InexactDivision("divided difference left a remainder")
    return q
