"""Closed-form symbols consumed as data.

``sigma2_dirac_closed`` is the standard closed expression for the order -2
symbol of the unperturbed inverse, written with jets so it can be checked
against the recursion.  ``sigma3_dirac`` is the published order -3 symbol
of the unperturbed inverse at the boundary point on the cosphere; it
involves boundary curvature and is not re-derived here.
"""
from __future__ import annotations

from fractions import Fraction

from ..clifford import NORMAL, CliffordElement
from ..coefficients import GaussianRational, Scalar, V, xi
from ..sphere import riemann
from ..xirational import XN
from .geometry import BoundaryModel
from .jets import Jet, Unavailable, jet_sum
from .sym import Sym

I = GaussianRational(0, 1)
TANGENT = (1, 2, 3, 4)


def gamma(j: int, coeff=1) -> Sym:
    return Sym.clifford(CliffordElement.gen(j, coeff))


def c_xi_prime_sym() -> Sym:
    return Sym.clifford(CliffordElement({1 << (j - 1): V(xi(j)) for j in TANGENT}))


def c_xi_sym() -> Sym:
    return c_xi_prime_sym() + gamma(NORMAL, V(XN))


def dn_c_xi_prime_sym() -> Sym:
    """Normal derivative of c(xi') at x_0: (H1/2) c(xi')."""
    return c_xi_prime_sym() * (V("H1") * Fraction(1, 2))


def inv_e(k: int, coeff=1) -> Sym:
    return Sym.scalar(coeff, k)


def at_point(value: Sym, name: str) -> Jet:
    """A symbol known only at x_0."""

    def fn(key):
        if key:
            raise Unavailable(f"{name} is only given at the boundary point")
        return value

    return Jet(fn, name)


def sigma2_dirac_closed(model: BoundaryModel) -> Jet:
    """c(xi) p0 c(xi)/|xi|^4 + c(xi)/|xi|^6 sum_j c(dx_j)[d_j c(xi) |xi|^2 - c(xi) d_j |xi|^2]."""
    cxi, e = model.c_xi, model.xi_norm2
    first = cxi * model.p0_dirac * cxi * model.inv_norm_power(2)
    bracket = jet_sum(model.c_dx(j) * (cxi.deriv(j) * e - cxi * e.deriv(j)) for j in (1, 2, 3, 4, 5))
    second = cxi * bracket * model.inv_norm_power(3)
    return first + second


def _word(*factors: Sym) -> Sym:
    out = factors[0]
    for f in factors[1:]:
        out = out * f
    return out


def sigma3_dirac() -> Sym:
    """Order -3 symbol of the unperturbed inverse at x_0 on |xi'| = 1."""
    h1, h2 = V("H1"), V("H2")
    c, cn, dc = c_xi_sym(), gamma(NORMAL), dn_c_xi_prime_sym()
    mi = GaussianRational(0, -1)
    five = _word(c, cn, c, cn, c)
    out = Sym()
    out = out + five * inv_e(3, h1 * h1 * mi)
    out = out + _word(c, cn, c, cn, dc) * inv_e(3, h1 * I)
    out = out + five * inv_e(4, h1 * h1 * mi)

    left = {i: _word(c, gamma(i), c) for i in TANGENT}

    # (1/8) sum R_{b i s a} c(xi) E_i c(xi) E_b E_s E_a c(xi), coefficient -i/E^3
    acc = Sym()
    for i in TANGENT:
        inner = CliffordElement()
        for b in TANGENT:
            for s in TANGENT:
                for a in TANGENT:
                    r = riemann(b, i, s, a)
                    if r:
                        inner = inner + CliffordElement.word((b, s, a), r)
        if not inner.is_zero():
            acc = acc + left[i] * Sym.clifford(inner) * c
    out = out + acc * inv_e(3, mi * Fraction(1, 8))

    # (1/6) sum xi_l (R_tilj + R_tjli) c(xi) E_i c(xi) c(dx_j) E_t, coefficient -i/E^3
    acc = Sym()
    for i in TANGENT:
        inner = CliffordElement()
        for l in TANGENT:
            for t in TANGENT:
                for j in TANGENT:
                    r = (riemann(t, i, l, j) + riemann(t, j, l, i)) * V(xi(l))
                    if r:
                        inner = inner + CliffordElement.word((j, t), r)
        if not inner.is_zero():
            acc = acc + left[i] * Sym.clifford(inner)
    out = out + acc * inv_e(3, mi * Fraction(1, 6))

    # (1/3) sum (R_iajb + R_ibja) xi_a xi_b c(xi) E_i c(xi) c(dx_j) c(xi), coefficient i/E^4
    acc = Sym()
    for i in TANGENT:
        inner = CliffordElement()
        for j in TANGENT:
            r = Scalar()
            for a in TANGENT:
                for b in TANGENT:
                    r = r + (riemann(i, a, j, b) + riemann(i, b, j, a)) * V(xi(a)) * V(xi(b))
            if r:
                inner = inner + CliffordElement.gen(j, r)
        if not inner.is_zero():
            acc = acc + left[i] * Sym.clifford(inner) * c
    out = out + acc * inv_e(4, I * Fraction(1, 3))

    out = out + _word(c, cn, dc, cn, c) * (inv_e(3, h1 * I) + inv_e(4, h1 * I))
    out = out - five * (inv_e(3, (h1 * h1 - h2) * I) + inv_e(4, (h1 * h1 * 2 - h2) * I) + inv_e(5, h1 * h1 * 3 * I))
    out = out + _word(c, cn, c, cn, dc) * (inv_e(3, h1 * I) + inv_e(4, h1 * 3 * I))
    out = out + _word(c, cn, dc, cn, dc) * inv_e(3, mi)
    coeff = h1 * h1 * Fraction(3, 4) - h2 * Fraction(1, 2)
    out = out + _word(c, cn, c, cn, c_xi_prime_sym()) * inv_e(4, coeff * mi)
    return out


def sigma3_dirac_flat() -> Sym:
    """The same expression with the boundary curvature set to zero."""
    s = sigma3_dirac()
    names = {v for (_, _), n in s.terms.items() for v in n.variables() if v.startswith("R")}
    return s.subs({n: Scalar() for n in names})
