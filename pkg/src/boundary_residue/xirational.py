"""Rational functions of the normal covariable xi_n.

Before restriction to the cosphere a function is a sum of ``N_k / E^k`` with
``E = |xi|^2 = XI2 + XN^2``.  Setting ``XI2 = 1`` factors ``E`` into
``(XN - i)(XN + i)`` and the function becomes a single fraction
``N / ((XN - i)^a (XN + i)^b)``.  Numerators are Scalars in which ``XN``
is an ordinary variable; all other variables are parameters.
"""
from __future__ import annotations

from functools import lru_cache
from math import comb
from typing import Mapping

from .coefficients import ONE, GaussianRational, I, PI, Scalar, V, XI2, xi

XN = "XN"
TWO_PI_I = GaussianRational(0, 2)


class DecayError(ValueError):
    """The function does not decay fast enough for the requested operation."""


def _xn() -> Scalar:
    return V(XN)


@lru_cache(maxsize=None)
def _linear_power(root_im: int, k: int) -> Scalar:
    """(XN - root_im * i)^k."""
    base = _xn() - Scalar.const(GaussianRational(0, root_im))
    return base ** k


def minus_pole(k: int) -> Scalar:
    return _linear_power(1, k)


def plus_pole(k: int) -> Scalar:
    return _linear_power(-1, k)


@lru_cache(maxsize=None)
def _e_power(k: int) -> Scalar:
    return (V(XI2) + V(XN, 2)) ** k


def xn_coefficients(n: Scalar) -> dict[int, Scalar]:
    return n.collect(XN)


def xn_degree(n: Scalar) -> int:
    if n.is_zero():
        return -1
    return n.degree(XN)


def _eval_at(coeffs: Mapping[int, Scalar], point: GaussianRational) -> Scalar:
    total = Scalar()
    for d, c in coeffs.items():
        total = total + c * (point ** d)
    return total


def _taylor(n: Scalar, point: GaussianRational, other: GaussianRational, b: int, order: int) -> list[Scalar]:
    """First ``order`` Taylor coefficients in u of N(point+u) / (point-other+u)^b."""
    coeffs = xn_coefficients(n)
    shifted = []
    for m in range(order):
        s = Scalar()
        for d, c in coeffs.items():
            if d >= m:
                s = s + c * (GaussianRational(comb(d, m)) * point ** (d - m))
        shifted.append(s)
    gap = point - other
    inv_gap = gap.inverse()
    series = []
    for m in range(order):
        # binom(-b, m) gap^(-b-m)
        coef = GaussianRational((-1) ** m * comb(b + m - 1, m)) if b else GaussianRational(1 if m == 0 else 0)
        series.append(coef * inv_gap ** (b + m))
    out = []
    for m in range(order):
        s = Scalar()
        for t in range(m + 1):
            if series[m - t]:
                s = s + shifted[t] * series[m - t]
        out.append(s)
    return out


def sphere_normal_form(n: Scalar) -> Scalar:
    """Normal form modulo |xi'|^2 = 1: |xi|^2 -> 1 and XI4^2 -> 1 - XI1^2 - XI2^2 - XI3^2."""
    n = n.subs({XI2: ONE}) if XI2 in n.variables() else n
    last = xi(4)
    if n.degree(last) < 2:
        return n
    rest = Scalar.const(1) - V(xi(1), 2) - V(xi(2), 2) - V(xi(3), 2)
    out = Scalar()
    for e, c in n.collect(last).items():
        out = out + c * V(last, e % 2) * rest ** (e // 2)
    return out


class XiPoles:
    """N / ((XN - i)^a (XN + i)^b), post restriction."""

    __slots__ = ("num", "a", "b")

    def __init__(self, num: Scalar, a: int = 0, b: int = 0):
        if a < 0 or b < 0:
            raise ValueError("pole orders must be non-negative")
        self.num = Scalar.coerce(num)
        self.a = a if self.num else 0
        self.b = b if self.num else 0

    @classmethod
    def zero(cls) -> "XiPoles":
        return cls(Scalar())

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def _lift(self, a: int, b: int) -> Scalar:
        return self.num * minus_pole(a - self.a) * plus_pole(b - self.b)

    def __add__(self, other: "XiPoles") -> "XiPoles":
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        a, b = max(self.a, other.a), max(self.b, other.b)
        return XiPoles(self._lift(a, b) + other._lift(a, b), a, b)

    def __neg__(self):
        return XiPoles(-self.num, self.a, self.b)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, XiPoles):
            return XiPoles(self.num * other.num, self.a + other.a, self.b + other.b)
        return XiPoles(self.num * Scalar.coerce(other), self.a, self.b)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, XiPoles):
            return NotImplemented
        return (self - other).is_zero()

    def __hash__(self):
        return hash(self.reduced().num)

    def equals(self, other: "XiPoles") -> bool:
        return (self - other).is_zero()

    def degree(self) -> int:
        return xn_degree(self.num)

    def reduced(self) -> "XiPoles":
        """Cancel common (XN -/+ i) factors."""
        num, a, b = self.num, self.a, self.b
        if num.is_zero():
            return XiPoles.zero()
        for root, attr in ((I, "a"), (-I, "b")):
            while (a if attr == "a" else b) > 0:
                coeffs = xn_coefficients(num)
                if not _eval_at(coeffs, root).is_zero():
                    break
                num = _divide_linear(coeffs, root)
                if attr == "a":
                    a -= 1
                else:
                    b -= 1
        return XiPoles(num, a, b)

    def d_xn(self, k: int = 1) -> "XiPoles":
        out = self
        for _ in range(k):
            out = out._d_once()
        return out

    def _d_once(self) -> "XiPoles":
        if self.is_zero():
            return self
        n, a, b = self.num, self.a, self.b
        dn = n.diff(XN)
        u, v = minus_pole(1), plus_pole(1)
        num = dn * u * v
        if a:
            num = num - n * v * a
        if b:
            num = num - n * u * b
        return XiPoles(num, a + 1, b + 1).reduced()

    def map_coefficients(self, fn) -> "XiPoles":
        return XiPoles(fn(self.num), self.a, self.b)

    # partial fractions ------------------------------------------------------
    def partial_fractions(self) -> tuple[dict[int, Scalar], dict[int, Scalar], Scalar]:
        """Return (A, B, P) with f = sum A_p/(XN-i)^p + sum B_q/(XN+i)^q + P."""
        f = self.reduced()
        if f.is_zero():
            return {}, {}, Scalar()
        plus = _taylor(f.num, I, -I, f.b, f.a) if f.a else []
        minus = _taylor(f.num, -I, I, f.a, f.b) if f.b else []
        A = {f.a - m: c for m, c in enumerate(plus) if c}
        B = {f.b - m: c for m, c in enumerate(minus) if c}
        rest = f
        for p, c in A.items():
            rest = rest - XiPoles(c, p, 0)
        for q, c in B.items():
            rest = rest - XiPoles(c, 0, q)
        rest = rest.reduced()
        if rest.a or rest.b:
            raise ArithmeticError("partial fraction remainder is not polynomial")
        return A, B, rest.num

    def _check_proper(self):
        if self.degree() >= self.a + self.b:
            raise DecayError("function has a polynomial part in xi_n")

    def pi_plus(self) -> "XiPoles":
        """Keep the part with poles at XN = +i."""
        f = self.reduced()
        if f.is_zero():
            return f
        f._check_proper()
        if not f.a:
            return XiPoles.zero()
        coeffs = _taylor(f.num, I, -I, f.b, f.a)
        num = Scalar()
        for m, c in enumerate(coeffs):
            if c:
                num = num + c * minus_pole(m)
        return XiPoles(num, f.a, 0).reduced()

    def pi_minus(self) -> "XiPoles":
        f = self.reduced()
        if f.is_zero():
            return f
        f._check_proper()
        return (f - f.pi_plus()).reduced()

    def residue_plus(self) -> Scalar:
        f = self.reduced()
        if f.is_zero() or not f.a:
            return Scalar()
        return _taylor(f.num, I, -I, f.b, f.a)[f.a - 1]

    def integrate_line(self) -> Scalar:
        """Integral over the real line, 2 pi i Res_{+i}; result carries PI."""
        f = self.reduced()
        if f.is_zero():
            return Scalar()
        if f.degree() > f.a + f.b - 2:
            raise DecayError("integrand decays slower than 1/xi_n^2")
        return f.residue_plus() * TWO_PI_I * V(PI)

    # numeric view -----------------------------------------------------------
    def numeric(self, assignment: Mapping[str, object]):
        """Return a float callable of xi_n after substituting parameters."""
        coeffs = {d: complex(c.evaluate(assignment)) for d, c in xn_coefficients(self.num).items()}
        a, b = self.a, self.b

        def fn(x: float) -> complex:
            z = complex(x)
            val = sum(c * z ** d for d, c in coeffs.items())
            return val / ((z - 1j) ** a * (z + 1j) ** b)

        return fn

    def __repr__(self):
        return f"XiPoles(({self.num}) / ((XN-i)^{self.a} (XN+i)^{self.b}))"


def _divide_linear(coeffs: Mapping[int, Scalar], root: GaussianRational) -> Scalar:
    """Exact quotient of sum c_d XN^d by (XN - root), remainder assumed zero."""
    top = max(coeffs)
    q: dict[int, Scalar] = {}
    carry = Scalar()
    for d in range(top, 0, -1):
        carry = coeffs.get(d, Scalar()) + carry * root
        q[d - 1] = carry
    out = Scalar()
    for d, c in q.items():
        out = out + c * V(XN, d) if d else out + c
    return out


class XiRational:
    """sum_k N_k / |xi|^(2k), pre restriction."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[int, Scalar] | None = None):
        self.terms = {k: Scalar.coerce(v) for k, v in (terms or {}).items()}
        self.terms = {k: v for k, v in self.terms.items() if v}

    @classmethod
    def of(cls, num, k: int = 0) -> "XiRational":
        return cls({k: Scalar.coerce(num)})

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other):
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out[k] + v if k in out else v
        return XiRational(out)

    def __neg__(self):
        return XiRational({k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, XiRational):
            out: dict[int, Scalar] = {}
            for k1, v1 in self.terms.items():
                for k2, v2 in other.terms.items():
                    k = k1 + k2
                    out[k] = out[k] + v1 * v2 if k in out else v1 * v2
            return XiRational(out)
        s = Scalar.coerce(other)
        return XiRational({k: v * s for k, v in self.terms.items()})

    __rmul__ = __mul__

    def d_xn(self) -> "XiRational":
        out: dict[int, Scalar] = {}
        x = _xn()
        for k, v in self.terms.items():
            dv = v.diff(XN)
            if dv:
                out[k] = out[k] + dv if k in out else dv
            if k:
                t = v * x * (-2 * k)
                out[k + 1] = out[k + 1] + t if k + 1 in out else t
        return XiRational(out)

    def d_xi(self, j: int) -> "XiRational":
        name = xi(j)
        rules = {XI2: V(name) * 2}
        out: dict[int, Scalar] = {}
        for k, v in self.terms.items():
            dv = v.diff(name, rules)
            if dv:
                out[k] = out[k] + dv if k in out else dv
            if k:
                t = v * V(name) * (-2 * k)
                out[k + 1] = out[k + 1] + t if k + 1 in out else t
        return XiRational(out)

    def combined(self) -> tuple[Scalar, int]:
        """Single numerator over E^K."""
        if not self.terms:
            return Scalar(), 0
        top = max(self.terms)
        num = Scalar()
        for k, v in self.terms.items():
            num = num + v * _e_power(top - k)
        return num, top

    def equals(self, other: "XiRational") -> bool:
        return (self - other).combined()[0].is_zero()

    def restrict(self) -> XiPoles:
        """Set |xi'| = 1."""
        if not self.terms:
            return XiPoles.zero()
        top = max(self.terms)
        one_plus = Scalar.const(1) + V(XN, 2)
        num = Scalar()
        for k, v in self.terms.items():
            num = num + sphere_normal_form(v) * one_plus ** (top - k)
        return XiPoles(num, top, top).reduced()


def restrict_cosphere(f: XiRational) -> XiPoles:
    return f.restrict()


def partial_fractions(f: XiPoles):
    return f.partial_fractions()


def pi_plus(f: XiPoles) -> XiPoles:
    return f.pi_plus()


def deriv_xin(f, k: int = 1):
    if isinstance(f, XiRational):
        for _ in range(k):
            f = f.d_xn()
        return f
    return f.d_xn(k)


def integrate_line(f: XiPoles) -> Scalar:
    return f.integrate_line()


def poles(num, a: int, b: int) -> XiPoles:
    """Convenience constructor for literal formulas."""
    return XiPoles(Scalar.coerce(num), a, b)


def one_plus_xn2(k: int) -> tuple[int, int]:
    return k, k
