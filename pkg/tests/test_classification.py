import itertools
import math
from fractions import Fraction

import mpmath
import pytest
import sympy

from sicsets.classification import (
    EXPECTED_EXTRA_PAIRS,
    KEY5_CONDITIONS,
    ExcludedParameter,
    SymmetricState,
    case_i_analysis,
    case_ii_iii_solutions,
    case_iv_raw,
    case_iv_solutions,
    case_iv_univariate,
    compare_polys,
    derive_f,
    extension_check,
    f_direct_residual,
    F_of,
    F1_of,
    F2_of,
    F3_of,
    F4_of,
    fake_c,
    fake_sic,
    fake_sic_quartic,
    G_of,
    key5_check,
    max_clique,
    scan_table,
    table_digest,
    table_poly,
    trig_identity_residual,
    triple_symmetric,
    verify_derivations,
)
from sicsets.poly import MultiPoly, sturm_count, to_text
from sicsets.projective import cross_ratio
from sicsets.tables import MANIFEST

X, Y, Z = sympy.symbols("x y z")


def sympy_f():
    """f from the cosine identity, computed independently in sympy."""
    def parts(u, v):
        return -11 + 9 * u**2 + 9 * v**2 - 27 * u**2 * v**2 - 24 * u * v, 1 + 3 * u * v
    (nxy, dxy), (nyz, dyz), (nzx, dzx) = parts(X, Y), parts(Y, Z), parts(Z, X)
    cxy, cyz, czx = nxy / (16 * dxy), nyz / (16 * dyz), nzx / (16 * dzx)
    identity = cxy**2 + cyz**2 + czx**2 - 1 - 2 * cxy * cyz * czx
    # clear the 16^2 denominators, an extra 8 for the product term, and the common 243
    return sympy.expand(sympy.cancel(identity * 2048 * (dxy * dyz * dzx) ** 2 / 243))


def as_sympy(p: MultiPoly):
    syms = sympy.symbols(p.vars)
    return sympy.sympify(to_text(p).replace("^", "**"), locals=dict(zip(p.vars, syms)))


# ----------------------------------------------------------- tables

@pytest.mark.parametrize("name", list(MANIFEST))
def test_manifest(name):
    vars_, nterms, digest = MANIFEST[name]
    poly = table_poly(name)
    assert poly.vars == tuple(vars_)
    assert len(poly.terms) == nterms
    assert table_digest(poly) == digest


def test_f1_term_count():
    # 99 distinct monomials after collecting like terms
    assert len(table_poly("F1").terms) == 99


def test_G_examples():
    assert G_of(0, Fraction(-2, 3), 0, Fraction(1, 9)) == 0
    assert G_of(0, 0, 0, 0) != 0


def test_F_of_exact_root():
    # tangents 0 and +-sqrt3 are mutually separated and give p = 0, q = -3, r = 0
    assert F_of(0, -3, 0) == 0
    assert triple_symmetric(1, 2, 3) == (6, 11, 6)


def test_table_override_for_fault_injection():
    text = to_text(table_poly("F1")).replace("4*a^2", "5*a^2", 1)
    bad = table_poly("F1", {"F1": text})
    assert bad != table_poly("F1")


# ----------------------------------------------------------- derivation

def test_derive_f_matches_sympy():
    assert sympy.expand(as_sympy(derive_f()) - sympy_f()) == 0


def test_f0_matches_sympy_symmetrization():
    sym, rem, defs = sympy.polys.polyfuncs.symmetrize(sympy_f(), X, Y, Z, formal=True)
    assert rem == 0
    names = sympy.symbols("p q r")
    oracle = sym.subs({d[0]: n for d, n in zip(defs, names)})
    assert sympy.expand(as_sympy(table_poly("F0")) - oracle) == 0


def test_verify_derivations_exact():
    report = verify_derivations()
    assert report.ok
    assert [c.mismatches for c in report.checks] == [0] * 5
    assert [c.derived_terms for c in report.checks] == [41, 99, 86, 82, 56]


def test_corrupted_table_is_reported():
    good = table_poly("F2")
    e = max(good.terms)
    terms = dict(good.terms)
    terms[e] += 1
    check = compare_polys("F2", MultiPoly(terms, good.vars), good)
    assert not check.ok and check.mismatches == 1
    mono, listed, derived = check.first_mismatch
    assert listed == derived + 1 and mono.startswith("a")


def test_system_vanishes_on_symmetric_sets():
    # the double-root family t, t, -1/(3t), -1/(3t) solves the system exactly
    for t in (Fraction(2), Fraction(-3, 5), Fraction(7)):
        s = SymmetricState.from_roots(t, t, -1 / (3 * t), -1 / (3 * t))
        assert s.exact
        assert [fn(*s.values) for fn in (F1_of, F2_of, F3_of, F4_of)] == [0, 0, 0, 0]
        assert s.max_residual() <= 1e-30


def test_trig_identity():
    rng = __import__("numpy").random.default_rng(8)
    for A, B in rng.uniform(-math.pi, math.pi, (100, 2)):
        assert abs(trig_identity_residual(A, B)) <= 1e-12


def test_power_sum_identity():
    # s1 (-a+b+c)(a-b+c)(a+b-c) = s2^2 - 2 s4, checked symbolically
    a, b, c = sympy.symbols("a b c")
    s = {k: a**k + b**k + c**k for k in (1, 2, 4)}
    assert sympy.expand(s[1] * (-a + b + c) * (a - b + c) * (a + b - c) - (s[2] ** 2 - 2 * s[4])) == 0


# ----------------------------------------------------------- key alternatives

def test_key5_examples():
    assert key5_check(SymmetricState(0, Fraction(-10, 3), 0, 1)) == ["d = 1", "b = -(9d + 1)/3"]
    assert key5_check(SymmetricState(0, Fraction(-22, 9), fake_c(), Fraction(1, 9))) == [
        "d = 1/9", "b = -(27d + 19)/9"]
    assert key5_check(SymmetricState(1, 2, 3, 4)) == []
    assert len(KEY5_CONDITIONS) == 6


def test_key5_tolerance_for_float_states():
    s = SymmetricState(0.3, -10 / 3 + 1e-12, 0.1, 1.0)
    assert "d = 1" in key5_check(s)
    assert "b = -(9d + 1)/3" in key5_check(s)
    assert key5_check(s, tol=1e-14) == ["d = 1"]


# ----------------------------------------------------------- special branches

def test_case_i_branches():
    branches = case_i_analysis()
    assert all(b.solves_system for b in branches)
    fake = [b for b in branches if "26-2sqrt97" in b.label]
    assert len(fake) == 2 and all(len(b.real_roots) == 4 for b in fake)
    nonreal = [b for b in branches if "26+2sqrt97" in b.label]
    assert all(len(b.real_roots) == 2 for b in nonreal)
    assert all(b.has_inv_sqrt3_root for b in branches if "-10/3" in b.label or "-2/3" in b.label)


def test_case_ii_roots_are_distinct():
    (b,) = [b for b in case_ii_iii_solutions() if b.label.startswith("1 + 3b")]
    assert b.solves_system
    assert b.real_roots == pytest.approx([-math.sqrt(3), -1 / math.sqrt(3), 1 / math.sqrt(3), math.sqrt(3)])


def test_case_iii_listed_state_does_not_solve():
    branches = case_ii_iii_solutions()
    listed = [b for b in branches if "(listed)" in b.label]
    assert len(listed) == 2 and not any(b.solves_system for b in listed)
    fixed = [b for b in branches if "10/sqrt3" in b.label]
    assert len(fixed) == 2 and all(b.solves_system and b.has_inv_sqrt3_root for b in fixed)


def test_case_iii_solution_is_a_resultant_root():
    # on b = 0, d = -1: eliminate c from F1, F2 and look for 3a^2 - 100 among the factors
    a, c = sympy.symbols("a c")
    F1 = as_sympy(table_poly("F1")).subs({sympy.Symbol("b"): 0, sympy.Symbol("d"): -1})
    F2 = as_sympy(table_poly("F2")).subs({sympy.Symbol("b"): 0, sympy.Symbol("d"): -1})
    res = sympy.resultant(F1, F2, c)
    assert sympy.rem(sympy.Poly(res, a), sympy.Poly(3 * a**2 - 100, a)).is_zero


def test_fake_branch_roots_match_quartic():
    with mpmath.workdps(30):
        s = SymmetricState(0, Fraction(-22, 9), fake_c(), Fraction(1, 9))
        assert s.real_roots() == pytest.approx([-1.68710, -0.10989, 0.44246, 1.35453], abs=1e-5)


# ----------------------------------------------------------- generic branch

def test_case_iv_excluded_parameters():
    for t in (0, Fraction(0), 1 / math.sqrt(3)):
        with pytest.raises(ExcludedParameter):
            case_iv_solutions(t)


@pytest.mark.parametrize("t", [Fraction(1, 10), Fraction(1, 2), Fraction(6, 5)])
def test_case_iv_univariate_degree(t):
    u = case_iv_univariate(t)
    assert u.degree == 6 and u.exact
    raw = case_iv_raw(t)
    assert raw.degree("r") >= 6
    # oracle: sympy resultant of the same e1, e2 has the same real roots
    from sicsets.classification import _case_iv_system
    e1, e2, _ = _case_iv_system(t)
    p, r = sympy.symbols("p r")
    theirs = sympy.Poly(sympy.resultant(as_sympy(e1), as_sympy(e2), p), r)
    oracle = sorted({float(z) for z in sympy.real_roots(sympy.Poly(sympy.sqf_part(theirs.as_expr()), r))})
    assert sturm_count(u, -10**6, 10**6) == len(oracle)


@pytest.mark.parametrize("t,count", [("0.1", 2), ("0.3", 3), ("0.5", 5), ("0.7", 4), ("1.2", 3)])
def test_case_iv_counts(t, count):
    sols = case_iv_solutions(Fraction(t))
    assert len(sols) == count
    for s in sols:
        assert s.residual <= 1e-9
        assert f_direct_residual(s) <= 1e-8
        assert all(abs(abs(v) - 1 / math.sqrt(3)) > 1e-9 for v in s.triple)


def test_case_iv_raw_path_agrees():
    for t in ("0.3", "0.5"):
        a = case_iv_solutions(Fraction(t))
        b = case_iv_solutions(Fraction(t), squarefree=False)
        assert len(a) == len(b)
        for s1, s2 in zip(a, b):
            assert s1.triple == pytest.approx(s2.triple, abs=1e-8)


def test_case_iv_sign_symmetry():
    plus = case_iv_solutions(Fraction(1, 2))
    minus = case_iv_solutions(Fraction(-1, 2))
    assert sorted(tuple(sorted(-v for v in s.triple)) for s in plus) == pytest.approx(
        sorted(s.triple for s in minus), abs=1e-8)


def test_case_iv_solutions_are_separated_quadruples():
    # each solution's four tangents admit phases making z3..z6 pairwise separated in at least one pair
    s = case_iv_solutions(Fraction(7, 10))[0]
    check = extension_check(s)
    assert 5 <= len(check.clique) < 9
    assert {"z1", "z2"} <= set(check.clique)


def test_scan_table_small():
    table = scan_table(["0.1", "0.2", "0", "0.3"])
    assert table.counts() == {0.1: 2, 0.2: 3, 0.3: 3}
    assert table.skipped == (Fraction(0),)
    assert len(table.breakpoints) == 1 and abs(table.breakpoints[0] - 0.1898) < 1e-3


def test_max_clique():
    edges = {(0, 1), (1, 2), (0, 2), (2, 3)}
    assert max_clique(4, edges) == (0, 1, 2)
    assert max_clique(3, set()) == (0,)


# ----------------------------------------------------------- fake SIC

def test_fake_quartic_vieta_exact():
    x = sympy.Symbol("x")
    s = sympy.sqrt(26 - 2 * sympy.sqrt(97))
    monic = sympy.Poly(27 * x**4 - 66 * x**2 + 8 * s * x + 3, x).monic()
    one, a3, b, c3, d = monic.all_coeffs()
    assert a3 == 0 and b == sympy.Rational(-22, 9) and d == sympy.Rational(1, 9)
    assert float(-c3) == pytest.approx(fake_c(), abs=1e-14)
    assert fake_sic_quartic().degree == 4


def test_fake_sic():
    f = fake_sic()
    assert f.roots == pytest.approx((-1.687, -0.109, 0.442, 1.354), abs=1e-3)
    assert f.separated_count == 27
    assert len(f.configuration) == 9
    assert len(f.extra_pairs) == 6
    # kappa check independent of the stored edge list
    pairs = sum(abs(cross_ratio(p, q) - 0.25) <= 1e-9
                for p, q in itertools.combinations(f.configuration.points, 2))
    assert pairs == 27


def test_fake_sic_sign_pattern():
    f = fake_sic()
    assert f.extra_pattern() != EXPECTED_EXTRA_PAIRS
    assert f.pattern_relabelings() == [("z5",), ("z4", "z6")]
