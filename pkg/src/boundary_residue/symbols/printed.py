"""Printed closed forms, transcribed as data for the audit.

Every entry is a symbol at x_0 on |xi'| = 1 written exactly as published
(with h' = H1, h'' = H2 and d_{x_n} c(xi') = (H1/2) c(xi')).  Nothing
here feeds the engine; the audit compares engine output against it.
"""
from __future__ import annotations

from fractions import Fraction

from ..clifford import NORMAL, CliffordElement
from ..coefficients import GaussianRational, Scalar, V, dx, xcomp, xi
from ..xirational import XN, XiPoles
from .library import (TANGENT, _word, c_xi_prime_sym, c_xi_sym, dn_c_xi_prime_sym,
                      gamma, inv_e)
from .sym import Sym, SymPoles

I = GaussianRational(0, 1)
H1, H2 = V("H1"), V("H2")
X = V(XN)


def _cp() -> CliffordElement:
    return CliffordElement({1 << (j - 1): V(xi(j)) for j in TANGENT})


def _g5() -> CliffordElement:
    return CliffordElement.gen(NORMAL)


def _poles(num, a: int, b: int = 0) -> XiPoles:
    return XiPoles(Scalar.coerce(num), a, b)


def _sp(*pairs) -> SymPoles:
    out = SymPoles()
    for elem, f in pairs:
        out = out + SymPoles.clifford(elem, f)
    return out


def _half_h1(e: CliffordElement) -> CliffordElement:
    return e * (H1 * Fraction(1, 2))


def d3_xin_q1() -> SymPoles:
    e = (24 * X - 24 * X ** 3) * I, (-6 * X ** 4 + 36 * X ** 2 - 6) * I
    return _sp((_cp(), _poles(e[0], 4, 4)), (_g5(), _poles(e[1], 4, 4)))


def d2_xn_piplus_q1() -> SymPoles:
    """The printed second normal derivative of pi+ q_-1."""
    cp, g5 = _cp(), _g5()
    first = _sp((cp, _poles(H1 * H1 * Fraction(3, 8) - H2 * Fraction(1, 4), 1)))
    second = _sp((_half_h1(cp), _poles(-H1 * (X - 2 * I) * Fraction(1, 2), 2)))
    third = _sp((cp, _poles(-H2 * (X - 2 * I) * Fraction(1, 4), 2)),
                (g5, _poles(-H2 * Fraction(1, 4), 2)))
    fourth = _sp((cp, _poles(H1 * H1 * 2 * I * (-3 * I * X ** 2 - 9 * X + 8 * I) * Fraction(1, 16), 3)),
                 (g5, _poles(H1 * H1 * 2 * I * (-I * X - 3) * Fraction(1, 16), 3)))
    return first + second + third + fourth


def d2_xin_dxn_piplus_q1() -> SymPoles:
    """Printed form, reading the denominators (xi_n - 1) as (xi_n - i)."""
    cp, g5 = _cp(), _g5()
    return _sp((_half_h1(cp), _poles(1, 3)),
               (cp, _poles(H1 * (4 * I - X) * Fraction(1, 2), 4)),
               (g5, _poles(H1 * Fraction(-3, 2), 4)))


def dxin_piplus_dxi_q1(i: int) -> SymPoles:
    cp, g5 = _cp(), _g5()
    xi_i = V(xi(i))
    return _sp((CliffordElement.gen(i), _poles(Fraction(-1, 2), 2)),
               (cp, _poles(-xi_i * (3 * I - X) * Fraction(1, 2), 3)),
               (g5, _poles(xi_i, 3)))


def d2_xin_piplus_q1() -> SymPoles:
    return _sp((_cp(), _poles(1, 3)), (_g5(), _poles(I * Fraction(1, 2), 3)))


def d2_xin_q1() -> SymPoles:
    return _sp((_cp(), _poles((6 * X ** 2 - 2) * I, 3, 3)),
               (_g5(), _poles((2 * X ** 3 - 6 * X) * I, 3, 3)))


def d2_xin_dxn_q1() -> SymPoles:
    cp, g5 = _cp(), _g5()
    return _sp((_half_h1(cp), _poles(6 * I * X ** 2 - 2 * I, 3, 3)),
               (cp, _poles(I * H1 * 4 * (1 - 5 * X ** 2), 4, 4)),
               (g5, _poles(-I * H1 * 12 * X * (X ** 2 - 1), 4, 4)))


def piplus_cxi_over_e2() -> SymPoles:
    cp, g5 = _cp(), _g5()
    return _sp((cp, _poles(-I * Fraction(1, 4), 1)),
               (cp, _poles(Fraction(-1, 4), 2)),
               (g5, _poles(-I * Fraction(1, 4), 2)))


def _g_prime() -> Scalar:
    return sum((V(xcomp(j)) * V(xi(j)) for j in TANGENT), Scalar())


def piplus_pairing_cxi_over_e2() -> SymPoles:
    cp, g5 = _cp(), _g5()
    g, an = _g_prime(), V("AN")
    return _sp((cp, _poles(g * (-I * X - 2) * Fraction(1, 4), 2)),
               (g5, _poles(g * -I * Fraction(1, 4), 2)),
               (cp, _poles(an * -I * Fraction(1, 4), 2)),
               (g5, _poles(an * -I * X * Fraction(1, 4), 2)))


def _c_one_form() -> CliffordElement:
    return CliffordElement({1 << (j - 1): V(xcomp(j)) for j in range(1, 6)})


def piplus_cx_over_e() -> SymPoles:
    return _sp((_c_one_form(), _poles(-I * Fraction(1, 2), 1)))


def dxin_piplus_sigma2_dirac() -> SymPoles:
    cp, g5 = _cp(), _g5()
    dcp = _half_h1(cp)
    cg5c = cp * g5 * cp
    cg5dc = cp * g5 * dcp
    return _sp((cg5c, _poles(H1 * (-I * X - 3) * Fraction(1, 4), 3)),
               (cp, _poles(H1 * I, 3)),
               (g5, _poles(H1 * (I * X - 1) * Fraction(1, 4), 3)),
               (dcp, _poles(-I * Fraction(1, 2), 3)),
               (cg5dc, _poles((I * X + 3) * Fraction(1, 4), 3)),
               (cp, _poles(H1 * (-2 * I * X - 8) * Fraction(1, 8), 4)),
               (g5, _poles(H1 * (I * X ** 2 + 4 * X - 9 * I) * Fraction(1, 8), 4)))


def dxin_piplus_q1() -> SymPoles:
    return _sp((_cp(), _poles(Fraction(-1, 2), 2)), (_g5(), _poles(-I * Fraction(1, 2), 2)))


def dxin_q1() -> SymPoles:
    return _sp((_cp(), _poles(-2 * X * I, 2, 2)), (_g5(), _poles((1 - X ** 2) * I, 2, 2)))


# printed R_-3 -------------------------------------------------------------

def _c_one_form_sym() -> Sym:
    return Sym.clifford(_c_one_form())


def _dj_c_one_form(j: int) -> Sym:
    """Tangential derivative of c(X) at x_0 (frame derivatives vanish)."""
    return Sym.clifford(CliffordElement({1 << (k - 1): V(dx(j, k)) for k in range(1, 6)}))


def _dn_c_one_form() -> Sym:
    terms = {1 << (k - 1): V(dx(NORMAL, k)) + V(xcomp(k)) * H1 * Fraction(1, 2) for k in TANGENT}
    terms[1 << (NORMAL - 1)] = V(dx(NORMAL, NORMAL))
    return Sym.clifford(CliffordElement(terms))


def printed_r3_groups() -> dict[str, Sym]:
    """The fifteen printed terms of R_-3, grouped by the recursion piece they
    stand for.  Tangential sums run over j < n."""
    c, cp, g5 = c_xi_sym(), c_xi_prime_sym(), gamma(NORMAL)
    dc = dn_c_xi_prime_sym()
    cx = _c_one_form_sym()
    an = V("AN")
    g_t = _g_prime()
    g_full = g_t + an * X
    dn_g = g_t * H1 + sum((V(dx(NORMAL, j)) * V(xi(j)) for j in TANGENT), Scalar()) + V(dx(NORMAL, NORMAL)) * X
    mi = -I
    groups: dict[str, Sym] = {}
    groups["x_sigma2"] = (
        _word(c, cx, g5) * inv_e(4, mi * (X ** 4 + X ** 2 - 2) * H1)
        + _word(c, cx, cp) * inv_e(4, mi * (2 * X ** 3 + 4 * X) * H1)
        + _word(c, cx, cp, g5, dc) * inv_e(3, mi)
        + _word(c, cx, dc) * inv_e(3, I * X)
    )
    groups["zeroth"] = (
        _word(c, cx) * inv_e(2, mi)
        + _word(c, c) * inv_e(3, g_t * 2 * I)
        + _word(c, c) * inv_e(3, an * X * 2 * I)
    )
    tang = Sym()
    for j in TANGENT:
        dg = sum((V(dx(j, k)) * V(xi(k)) for k in TANGENT), Scalar())
        tang = tang + _word(c, gamma(j), _dj_c_one_form(j)) * inv_e(2, mi)
        tang = tang + _word(c, gamma(j), c) * inv_e(3, dg * 2 * I)
        tang = tang + _word(c, gamma(j), c) * inv_e(3, V(dx(j, NORMAL)) * X * 2 * I)
    groups["tangential"] = tang
    groups["normal"] = (
        _word(c, g5, _dn_c_one_form()) * inv_e(2, mi)
        + _word(c, g5, cx) * inv_e(3, H1 * I)
        + _word(c, g5, c) * inv_e(3, dn_g * 2 * I)
        + _word(c, g5, dc) * inv_e(3, g_full * 2 * I)
        + _word(c, g5, c) * inv_e(4, g_full * H1 * -4 * I)
    )
    return groups


def printed_r3() -> Sym:
    return sum(printed_r3_groups().values(), Sym())


# printed trace integrands (before the line integral) ----------------------

def case7_one_form_trace() -> XiPoles:
    """Printed trace for the one-form part of the integration-by-parts form of
    the first (-1, -2) case, after odd xi' moments are dropped."""
    return _poles(V("AN") * H1 * (-6 * X ** 2 + 8 * I * X + 6), 6, 2)


def case8_one_form_trace() -> XiPoles:
    """Printed trace for the one-form part of the tangential-derivative case,
    summed over the tangential direction, before the cosphere integral."""
    div = sum((V(dx(j, j)) for j in TANGENT), Scalar())
    pairs = sum((V(xi(i)) * V(xi(j)) * V(dx(i, j)) for i in TANGENT for j in TANGENT), Scalar())
    return _poles(div * 2, 3, 1) + _poles(pairs * (-2 * X ** 3 + 6 * I * X ** 2 - 2 * X - 2 * I), 5, 2)


PRINTED_FORMULAS = {
    "d3_xin_q1": d3_xin_q1,
    "d2_xn_piplus_q1": d2_xn_piplus_q1,
    "d2_xin_dxn_piplus_q1": d2_xin_dxn_piplus_q1,
    "d2_xin_piplus_q1": d2_xin_piplus_q1,
    "d2_xin_q1": d2_xin_q1,
    "d2_xin_dxn_q1": d2_xin_dxn_q1,
    "piplus_cxi_over_e2": piplus_cxi_over_e2,
    "piplus_pairing_cxi_over_e2": piplus_pairing_cxi_over_e2,
    "piplus_cx_over_e": piplus_cx_over_e,
    "dxin_piplus_sigma2_dirac": dxin_piplus_sigma2_dirac,
    "dxin_piplus_q1": dxin_piplus_q1,
    "dxin_q1": dxin_q1,
}
