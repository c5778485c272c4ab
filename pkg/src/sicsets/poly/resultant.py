"""Sylvester resultants of multivariate polynomials, evaluated fraction-free."""

from __future__ import annotations

from .multipoly import MultiPoly


def sylvester_matrix(f: MultiPoly, g: MultiPoly, var: str) -> list[list[MultiPoly]]:
    """(m + n) x (m + n) matrix, n rows of f's coefficients then m rows of g's.

    m and n are the degrees of f and g in ``var``; entries are polynomials in
    the remaining variables.
    """
    if f.vars != g.vars:
        raise ValueError("polynomials must share a variable list")
    m, n = f.degree(var), g.degree(var)
    if m < 1 or n < 1:
        raise ValueError(f"both polynomials need positive degree in {var}")
    fc = f.coeffs_in(var)[::-1]  # leading coefficient first
    gc = g.coeffs_in(var)[::-1]
    zero = MultiPoly({}, f.vars)
    size = m + n
    rows = []
    for i in range(n):
        rows.append([zero] * i + fc + [zero] * (size - i - len(fc)))
    for i in range(m):
        rows.append([zero] * i + gc + [zero] * (size - i - len(gc)))
    return rows


def bareiss_determinant(matrix: list[list[MultiPoly]]) -> MultiPoly:
    """Determinant by Bareiss elimination; every division is exact."""
    a = [list(row) for row in matrix]
    n = len(a)
    if n == 0 or any(len(row) != n for row in a):
        raise ValueError("need a non-empty square matrix")
    vars_ = a[0][0].vars
    sign = 1
    prev = MultiPoly.const(1, vars_)
    for k in range(n - 1):
        if a[k][k].is_zero():
            swap = next((i for i in range(k + 1, n) if not a[i][k].is_zero()), None)
            if swap is None:
                return MultiPoly({}, vars_)
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        piv = a[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = piv * a[i][j] - a[i][k] * a[k][j]
                a[i][j] = num.exact_div(prev) if not prev.is_constant() or prev.constant_value() != 1 else num
            a[i][k] = MultiPoly({}, vars_)
        prev = piv
    det = a[n - 1][n - 1]
    return det if sign == 1 else -det


def resultant(f: MultiPoly, g: MultiPoly, var: str) -> MultiPoly:
    """Res_var(f, g), returned over the same variable list (``var`` no longer occurs)."""
    return bareiss_determinant(sylvester_matrix(f, g, var))
