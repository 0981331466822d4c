"""Jets of the collar geometry and of the one-form at the boundary point.

The metric is ``g = (1/h(x_n)) g_boundary + dx_n^2`` with
``h = 1 + H1 x_n + H2 x_n^2 / 2`` and boundary normal coordinates at x_0.
Jets of order at most two are modelled:

* tangential first derivatives and mixed tangential/normal derivatives of
  metric quantities vanish;
* pure tangential second derivatives carry curvature and are unavailable,
  except in the flat-boundary model where they vanish;
* the Dirac zeroth-order symbol along the normal line is ``-(h'/h) c(dx_n)``;
  its tangential jets are unavailable (zero in the flat model).
"""
from __future__ import annotations

from fractions import Fraction
from functools import cached_property
from math import factorial

from ..clifford import NORMAL, CliffordElement
from ..coefficients import GaussianRational, Scalar, V, XI2, dx, ddx, xcomp, xi
from ..xirational import XN
from .jets import Jet, Unavailable
from .sym import Sym

TANGENT = (1, 2, 3, 4)
MAX_ORDER = 2


def _split(key):
    normal = sum(1 for d in key if d == NORMAL)
    return len(key) - normal, normal


def h_variable(m: int) -> str:
    return f"H{m}"


def _h_series(order: int) -> list[Scalar]:
    """Taylor coefficients of h - 1 = sum_m H_m x^m / m!."""
    out = [Scalar()]
    for m in range(1, order + 1):
        out.append(V(h_variable(m)) * Fraction(1, factorial(m)))
    return out


def _series_mul(a: list[Scalar], b: list[Scalar], order: int) -> list[Scalar]:
    out = [Scalar() for _ in range(order + 1)]
    for i, x in enumerate(a):
        if not x:
            continue
        for j, y in enumerate(b[: order + 1 - i]):
            out[i + j] = out[i + j] + x * y
    return out


def h_power_derivatives(p: Fraction, order: int) -> list[Scalar]:
    """d^m/dx_n^m h^p at x_n = 0 for m = 0..order (binomial series in h - 1)."""
    u = _h_series(order)
    total = [Scalar.const(1)] + [Scalar() for _ in range(order)]
    power = [Scalar.const(1)] + [Scalar() for _ in range(order)]
    binom = Fraction(1)
    for m in range(1, order + 1):
        power = _series_mul(power, u, order)
        binom = binom * (p - m + 1) / m
        total = [t + c * binom for t, c in zip(total, power)]
    return [c * factorial(m) for m, c in enumerate(total)]


def log_derivative_derivatives(order: int) -> list[Scalar]:
    """d^m/dx_n^m (h'/h) at x_n = 0 for m = 0..order."""
    hp = [c * Fraction(1, factorial(m)) for m, c in enumerate(h_power_derivatives(Fraction(1), order + 1))]
    dh = [hp[m + 1] * (m + 1) for m in range(order + 1)]
    inv = [c * Fraction(1, factorial(m)) for m, c in enumerate(h_power_derivatives(Fraction(-1), order))]
    ser = _series_mul(dh, inv, order)
    return [c * factorial(m) for m, c in enumerate(ser)]


def set_partitions(items: tuple):
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in set_partitions(rest):
        yield [(first,)] + part
        for i in range(len(part)):
            yield part[:i] + [(first,) + part[i]] + part[i + 1:]


class BoundaryModel:
    """Factory of the basic jets; ``flat`` switches off boundary curvature.

    ``max_order`` bounds the x-jets; orders above two only make sense for
    the flat model and bring in formal H3, H4, ... for the normal profile.
    """

    def __init__(self, flat: bool = False, max_order: int = MAX_ORDER):
        self.flat = flat
        self.max_order = max_order

    def _check(self, key):
        if len(key) > self.max_order:
            raise Unavailable(f"jet of order {len(key)}")

    # scalar metric factors -------------------------------------------------
    def h_power(self, p: Fraction) -> Jet:
        """Jet of h^p times the (isotropic) boundary metric factor."""
        p = Fraction(p)
        normal_jets = h_power_derivatives(p, self.max_order)

        def fn(key):
            self._check(key)
            tang, normal = _split(key)
            if tang >= 2:
                if self.flat:
                    return Sym()
                raise Unavailable("tangential second derivative of the boundary metric")
            if tang == 1:
                return Sym()
            return Sym.scalar(normal_jets[normal])

        return Jet(fn, f"h^{p}")

    @cached_property
    def xi_norm2(self) -> Jet:
        """|xi|^2 = h |xi'|^2 + xi_n^2 (numerator form, k = 0)."""
        h = self.h_power(1)
        xn2 = Sym.scalar(V(XN, 2))

        def fn(key):
            base = h[key] * V(XI2)
            return base + xn2 if not key else base

        return Jet(fn, "|xi|^2")

    def inv_norm_power(self, k: int) -> Jet:
        """|xi|^(-2k) by Faa di Bruno on the jets of |xi|^2."""
        e = self.xi_norm2

        def scal(key) -> Scalar:
            return e[key].terms.get((0, 0), Scalar())

        def fn(key):
            self._check(key)
            out = Sym()
            for part in set_partitions(tuple(range(len(key)))):
                blocks = len(part)
                coeff = Scalar.const(1)
                for block in part:
                    coeff = coeff * scal(tuple(key[i] for i in block))
                    if not coeff:
                        break
                if not coeff:
                    continue
                falling = 1
                for r in range(blocks):
                    falling *= -k - r
                out = out + Sym.scalar(coeff * falling, k + blocks)
            return out

        return Jet(fn, f"|xi|^-{2 * k}")

    # Clifford frame ------------------------------------------------------
    def c_dx(self, j: int) -> Jet:
        if j == NORMAL:
            return Jet.constant(Sym.clifford(CliffordElement.gen(NORMAL)), "c(dx_n)")
        half = self.h_power(Fraction(1, 2))
        g = CliffordElement.gen(j)
        return Jet(lambda key: half[key] * Sym.clifford(g), f"c(dx_{j})")

    @cached_property
    def c_xi(self) -> Jet:
        half = self.h_power(Fraction(1, 2))
        tang = Sym.clifford(CliffordElement({1 << (j - 1): V(xi(j)) for j in TANGENT}))
        normal = Sym.clifford(CliffordElement.gen(NORMAL, V(XN)))

        def fn(key):
            v = half[key] * tang
            return v + normal if not key else v

        return Jet(fn, "c(xi)")

    @cached_property
    def c_xi_prime(self) -> Jet:
        half = self.h_power(Fraction(1, 2))
        tang = Sym.clifford(CliffordElement({1 << (j - 1): V(xi(j)) for j in TANGENT}))
        return Jet(lambda key: half[key] * tang, "c(xi')")

    # one-form ----------------------------------------------------------------
    def component(self, j: int) -> Jet:
        """Coordinate component X_j (j = 5 gives a_n) as a scalar jet."""

        def fn(key):
            if not key:
                return Sym.scalar(V(xcomp(j)))
            if len(key) == 1:
                return Sym.scalar(V(dx(key[0], j)))
            if len(key) == 2:
                return Sym.scalar(V(ddx(key[0], key[1], j)))
            self._check(key)
            return Sym.scalar(V("D" * len(key) + "X" + "".join(map(str, key)) + f"_{j}"))

        return Jet(fn, f"X_{j}")

    @cached_property
    def c_one_form(self) -> Jet:
        parts = [self.component(j) * self.c_dx(j) for j in range(1, 6)]
        return Jet(lambda key: sum((p[key] for p in parts), Sym()), "c(X)")

    @cached_property
    def pairing(self) -> Jet:
        """g(X, xi) = h sum_j X_j xi_j + a_n xi_n."""
        h = self.h_power(1)
        tang = [self.component(j).map(lambda s, j=j: s * V(xi(j))) for j in TANGENT]
        tsum = Jet(lambda key: sum((t[key] for t in tang), Sym()), "X'.xi'")
        normal = self.component(5).map(lambda s: s * V(XN))
        return h * tsum + normal

    # zeroth order Dirac symbol ------------------------------------------------
    @cached_property
    def p0_dirac(self) -> Jet:
        """-(h'/h) c(dx_n) along the normal line."""
        gn = CliffordElement.gen(NORMAL)
        log_jets = log_derivative_derivatives(self.max_order)

        def fn(key):
            self._check(key)
            tang, normal = _split(key)
            if tang:
                if self.flat:
                    return Sym()
                raise Unavailable("tangential jet of the spin connection")
            if self.max_order <= MAX_ORDER and normal == MAX_ORDER:
                raise Unavailable("second normal jet of the zeroth-order symbol")
            return Sym.clifford(gn * (-log_jets[normal]))

        return Jet(fn, "p0_D")

    @cached_property
    def p1(self) -> Jet:
        return self.c_xi.scale(GaussianRational(0, 1))

    @cached_property
    def p0(self) -> Jet:
        return self.p0_dirac + self.c_one_form
