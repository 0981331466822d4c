"""Exact commutative coefficients.

``GaussianRational`` is the scalar field Q(i).  ``Scalar`` is a sparse
polynomial over it in named formal variables: geometric parameters
(``H1`` = h'(0), ``H2`` = h''(0), ``AN``, ...), the tangential covariables
``XI1``..``XI4``, the formal ``XI2`` = |xi'|^2 and the graded symbol ``PI``.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Callable, Iterable, Iterator, Mapping, Union

from gmpy2 import mpq

# Components are stored as gmpy2 rationals, which compare and hash like
# Fraction but multiply about ten times faster.
Rational = Union[int, Fraction, mpq]
EXACT_TYPES = (int, Fraction, type(mpq(0)))
_MPQ = type(mpq(0))
_FZERO = mpq(0)


class GaussianRational:
    __slots__ = ("re", "im")

    def __init__(self, re: Rational | str = 0, im: Rational | str = 0):
        self.re = re if type(re) is _MPQ else mpq(re)
        self.im = im if type(im) is _MPQ else mpq(im)

    @classmethod
    def _raw(cls, re: Fraction, im: Fraction) -> "GaussianRational":
        out = object.__new__(cls)
        out.re = re
        out.im = im
        return out

    @classmethod
    def coerce(cls, value) -> "GaussianRational":
        if isinstance(value, GaussianRational):
            return value
        if isinstance(value, complex):
            raise TypeError("floating complex values are not exact")
        if isinstance(value, float):
            raise TypeError("floats are not exact")
        return cls(value, 0)

    def __add__(self, other):
        o = _gauss(other)
        if o is None:
            return NotImplemented
        return GaussianRational._raw(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = _gauss(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = _gauss(other)
        if o is None:
            return NotImplemented
        return GaussianRational(o.re - self.re, o.im - self.im)

    def __neg__(self):
        return GaussianRational._raw(-self.re, -self.im)

    def __mul__(self, other):
        o = _gauss(other)
        if o is None:
            return NotImplemented
        raw = GaussianRational._raw
        if not o.im:
            if not self.im:
                return raw(self.re * o.re, _FZERO)
            if not self.re:
                return raw(_FZERO, self.im * o.re)
            return raw(self.re * o.re, self.im * o.re)
        if not o.re:
            if not self.im:
                return raw(_FZERO, self.re * o.im)
            if not self.re:
                return raw(-(self.im * o.im), _FZERO)
            return raw(-(self.im * o.im), self.re * o.im)
        if not self.im:
            return raw(self.re * o.re, self.re * o.im)
        return raw(self.re * o.re - self.im * o.im,
                   self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def norm(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def inverse(self) -> "GaussianRational":
        n = self.norm()
        if not n:
            raise ZeroDivisionError("GaussianRational division by zero")
        return GaussianRational(self.re / n, -self.im / n)

    def __truediv__(self, other):
        o = _gauss(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = _gauss(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out, base = ONE, self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        o = _gauss(other)
        if o is None:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    def is_real(self) -> bool:
        return not self.im

    def __repr__(self):
        return f"GaussianRational({str(self.re)!r}, {str(self.im)!r})"

    def __str__(self):
        if not self.im:
            return str(self.re)
        if not self.re:
            return _imag_str(self.im)
        sign = "+" if self.im > 0 else "-"
        return f"({self.re} {sign} {_imag_str(abs(self.im))})"


def _imag_str(v: Fraction) -> str:
    if v == 1:
        return "i"
    if v == -1:
        return "-i"
    return f"{v}*i"


def _gauss(value) -> GaussianRational | None:
    if isinstance(value, GaussianRational):
        return value
    if isinstance(value, EXACT_TYPES):
        return GaussianRational(value, 0)
    return None


ZERO = GaussianRational(0)
ONE = GaussianRational(1)
I = GaussianRational(0, 1)

Monomial = tuple  # tuple[tuple[str, int], ...], sorted by variable name


@lru_cache(maxsize=1 << 18)
def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    if not a:
        return b
    if not b:
        return a
    d = dict(a)
    for v, e in b:
        d[v] = d.get(v, 0) + e
    return tuple(sorted(d.items()))


def mono_degree(m: Monomial, var: str) -> int:
    for v, e in m:
        if v == var:
            return e
    return 0


def mono_without(m: Monomial, var: str) -> Monomial:
    return tuple(p for p in m if p[0] != var)


def _mono_str(m: Monomial) -> str:
    return "*".join(v if e == 1 else f"{v}^{e}" for v, e in m)


class Scalar:
    """Sparse polynomial with GaussianRational coefficients.

    Immutable by convention: no method mutates ``self.terms`` after
    construction.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Monomial, GaussianRational] | None = None):
        self.terms: dict = {} if terms is None else {m: c for m, c in terms.items() if c}

    # construction -----------------------------------------------------
    @classmethod
    def const(cls, c) -> "Scalar":
        c = GaussianRational.coerce(c)
        return cls({(): c}) if c else cls()

    @classmethod
    def var(cls, name: str, power: int = 1) -> "Scalar":
        return cls({((name, power),): ONE}) if power else cls.const(1)

    @classmethod
    def monomial(cls, mono: Iterable[tuple[str, int]], coeff=1) -> "Scalar":
        m = tuple(sorted((v, e) for v, e in mono if e))
        return cls({m: GaussianRational.coerce(coeff)})

    @classmethod
    def coerce(cls, value) -> "Scalar":
        if isinstance(value, Scalar):
            return value
        return cls.const(value)

    # ring operations ----------------------------------------------------
    def __add__(self, other):
        o = _scalar(other)
        if o is None:
            return NotImplemented
        if not o.terms:
            return self
        if not self.terms:
            return o
        out = dict(self.terms)
        for m, c in o.terms.items():
            s = out.get(m)
            if s is None:
                out[m] = c
            else:
                s = s + c
                if s:
                    out[m] = s
                else:
                    del out[m]
        return _raw(out)

    __radd__ = __add__

    def __neg__(self):
        return _raw({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        o = _scalar(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = _scalar(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        if isinstance(other, (*EXACT_TYPES, GaussianRational)):
            c = GaussianRational.coerce(other)
            if not c:
                return _raw({})
            return _raw({m: v * c for m, v in self.terms.items()})
        o = _scalar(other)
        if o is None:
            return NotImplemented
        if len(o.terms) == 1 and () in o.terms:
            return self * o.terms[()]
        if len(self.terms) == 1 and () in self.terms:
            return o * self.terms[()]
        out: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in o.terms.items():
                m = mono_mul(m1, m2)
                s = out.get(m)
                out[m] = c1 * c2 if s is None else s + c1 * c2
        return _raw({m: c for m, c in out.items() if c})

    __rmul__ = __mul__

    def __truediv__(self, other):
        c = GaussianRational.coerce(other)
        return self * c.inverse()

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers of a polynomial are not polynomial")
        out = Scalar.const(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        o = _scalar(other)
        if o is None:
            return NotImplemented
        return self.terms == o.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __iter__(self) -> Iterator[tuple[Monomial, GaussianRational]]:
        return iter(sorted(self.terms.items()))

    def __len__(self):
        return len(self.terms)

    # structure ----------------------------------------------------------
    def variables(self) -> set[str]:
        return {v for m in self.terms for v, _ in m}

    def is_constant(self) -> bool:
        return all(not m for m in self.terms)

    def constant_value(self) -> GaussianRational:
        if not self.is_constant():
            raise ValueError(f"not a constant: {self}")
        return self.terms.get((), ZERO)

    def coefficient(self, mono: Iterable[tuple[str, int]]) -> GaussianRational:
        m = tuple(sorted((v, e) for v, e in mono if e))
        return self.terms.get(m, ZERO)

    def degree(self, var: str) -> int:
        return max((mono_degree(m, var) for m in self.terms), default=0)

    def collect(self, var: str) -> dict[int, "Scalar"]:
        """Split into {power of var: coefficient Scalar}."""
        out: dict[int, dict] = {}
        for m, c in self.terms.items():
            e = mono_degree(m, var)
            out.setdefault(e, {})[mono_without(m, var) if e else m] = c
        return {e: _raw(t) for e, t in out.items()}

    def pi_grades(self) -> set[int]:
        return {mono_degree(m, "PI") for m in self.terms}

    def map_terms(self, fn: Callable[[Monomial, GaussianRational], "Scalar"]) -> "Scalar":
        out = Scalar()
        for m, c in self.terms.items():
            out = out + fn(m, c)
        return out

    def conjugate(self) -> "Scalar":
        return _raw({m: c.conjugate() for m, c in self.terms.items()})

    def real_part(self) -> "Scalar":
        return Scalar({m: GaussianRational(c.re) for m, c in self.terms.items()})

    def imag_part(self) -> "Scalar":
        return Scalar({m: GaussianRational(c.im) for m, c in self.terms.items()})

    # calculus and substitution -----------------------------------------
    def diff(self, var: str, rules: Mapping[str, "Scalar"] | None = None) -> "Scalar":
        """Partial derivative; ``rules`` gives derivatives of other variables
        (e.g. d XI2 / d XI1 = 2 XI1)."""
        out: dict = {}
        extra = Scalar()
        for m, c in self.terms.items():
            for idx, (v, e) in enumerate(m):
                if v == var:
                    rest = m[:idx] + ((v, e - 1),) + m[idx + 1:] if e > 1 else m[:idx] + m[idx + 1:]
                    s = out.get(rest)
                    val = c * e
                    out[rest] = val if s is None else s + val
                elif rules and v in rules:
                    rest = m[:idx] + ((v, e - 1),) + m[idx + 1:] if e > 1 else m[:idx] + m[idx + 1:]
                    extra = extra + _raw({rest: c * e}) * rules[v]
        return _raw({m: c for m, c in out.items() if c}) + extra

    def subs(self, rules: Mapping[str, "Scalar | int | Fraction | GaussianRational"]) -> "Scalar":
        """Simultaneous substitution of variables by Scalars."""
        if not rules:
            return self
        rules = {k: Scalar.coerce(v) for k, v in rules.items()}
        cache: dict[tuple[str, int], Scalar] = {}
        out = Scalar()
        keep: dict = {}
        for m, c in self.terms.items():
            if not any(v in rules for v, _ in m):
                s = keep.get(m)
                keep[m] = c if s is None else s + c
                continue
            term = Scalar({tuple(p for p in m if p[0] not in rules): c})
            for v, e in m:
                if v in rules:
                    key = (v, e)
                    if key not in cache:
                        cache[key] = rules[v] ** e
                    term = term * cache[key]
            out = out + term
        return out + _raw({m: c for m, c in keep.items() if c})

    def evaluate(self, assignment: Mapping[str, object]) -> GaussianRational:
        """Exact evaluation; every variable must be assigned."""
        total = ZERO
        for m, c in self.terms.items():
            val = c
            for v, e in m:
                if v not in assignment:
                    raise KeyError(f"no value assigned to {v}")
                val = val * (GaussianRational.coerce(assignment[v]) ** e)
            total = total + val
        return total

    def __repr__(self):
        return f"Scalar({str(self)})"

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for m, c in sorted(self.terms.items()):
            ms = _mono_str(m)
            if not ms:
                parts.append(str(c))
            elif c == ONE:
                parts.append(ms)
            elif c == -ONE:
                parts.append("-" + ms)
            else:
                parts.append(f"{c}*{ms}")
        return " + ".join(parts)


def _raw(terms: dict) -> Scalar:
    s = Scalar.__new__(Scalar)
    s.terms = terms
    return s


def _scalar(value) -> Scalar | None:
    if isinstance(value, Scalar):
        return value
    if isinstance(value, (*EXACT_TYPES, GaussianRational)):
        return Scalar.const(value)
    return None


class SubstitutionCycleError(ValueError):
    pass


def substitute(s: Scalar, rules: Mapping[str, Scalar]) -> Scalar:
    """Apply ``rules`` repeatedly until no ruled variable remains.

    Rules may refer to other ruled variables (they are resolved in
    dependency order); a cycle raises ``SubstitutionCycleError``.
    """
    rules = {k: Scalar.coerce(v) for k, v in rules.items()}
    resolved: dict[str, Scalar] = {}
    visiting: set[str] = set()

    def resolve(name: str) -> Scalar:
        if name in resolved:
            return resolved[name]
        if name in visiting:
            raise SubstitutionCycleError(f"substitution cycle through {name}")
        visiting.add(name)
        body = rules[name]
        deps = {v: resolve(v) for v in body.variables() if v in rules}
        resolved[name] = body.subs(deps) if deps else body
        visiting.discard(name)
        return resolved[name]

    for name in rules:
        resolve(name)
    return s.subs(resolved)


# variable naming ---------------------------------------------------------

PI = "PI"
XI2 = "XIP2"


def xi(j: int) -> str:
    return f"XI{j}"


def xcomp(j: int) -> str:
    """Component j of the one-form; j = 5 is the normal component a_n."""
    return "AN" if j == 5 else f"X{j}"


def dx(k: int, j: int) -> str:
    """Formal first derivative d_{x_k} X_j at the boundary point."""
    return "DAN" if (k, j) == (5, 5) else f"DX{k}_{j}"


def ddx(k: int, l: int, j: int) -> str:
    a, b = sorted((k, l))
    return f"DDX{a}{b}_{j}"


def riem(i: int, j: int, k: int, l: int) -> str:
    return f"R{i}{j}{k}{l}"


def ricci(i: int, j: int) -> str:
    a, b = sorted((i, j))
    return f"RIC{a}{b}"


def pi_power(k: int) -> Scalar:
    return Scalar.var(PI, k)


def S(value) -> Scalar:
    return Scalar.coerce(value)


def V(name: str, power: int = 1) -> Scalar:
    return Scalar.var(name, power)


def parse_rational(text: str) -> Fraction:
    return Fraction(text.strip())
