"""Cosphere integrals and index contraction.

Monomials in ``XI1..XI4`` are integrated over the unit 3-sphere in closed
form.  Afterwards the explicit component sums left in a result (one-form
components, their derivatives, curvature components) are recognised as the
invariant boundary quantities they represent.
"""
from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Iterable

from .coefficients import PI, XI2, GaussianRational, Scalar, V, dx, mono_mul, riem, xi

TANGENT = (1, 2, 3, 4)

# Boundary monomial tags and the Scalar monomials they stand for.
BOUNDARY_TAGS = {
    "H1SQ": (("H1", 2),),
    "H2": (("H2", 1),),
    "SB": (("SB", 1),),
    "AN_H1": (("AN", 1), ("H1", 1)),
    "DAN": (("DAN", 1),),
    "XP2": (("XP2", 1),),
    "XP2_H1": (("H1", 1), ("XP2", 1)),
    "AN2": (("AN", 2),),
    "DIVX": (("DIVX", 1),),
    "X2": (("X2", 1),),
}
TAG_OF_MONOMIAL = {v: k for k, v in BOUNDARY_TAGS.items()}
TAG_ORDER = list(BOUNDARY_TAGS)


class ContractionError(ValueError):
    """A result still depends on individual index components."""


def _double_factorial(n: int) -> int:
    out = 1
    while n > 1:
        out *= n
        n -= 2
    return out


@lru_cache(maxsize=None)
def moment(exponents: tuple[int, ...]) -> Fraction:
    """Integral of prod xi_i^e_i over S^3, as a multiple of pi^2."""
    if any(e % 2 for e in exponents):
        return Fraction(0)
    n = len(exponents)
    if n != 4:
        raise ValueError("only the 3-sphere in R^4 is exposed")
    halves = [e // 2 for e in exponents]
    num = 1
    for a in halves:
        num *= _double_factorial(2 * a - 1)
    den = 1
    for m in range(sum(halves)):
        den *= n + 2 * m
    return Fraction(2 * num, den)


def sphere_integrate(s: Scalar) -> Scalar:
    """Replace every xi' monomial by its S^3 moment; adds pi^2."""
    names = [xi(j) for j in TANGENT]
    out: dict = {}
    for m, c in s.terms.items():
        exps = [0, 0, 0, 0]
        rest = []
        for v, e in m:
            if v == XI2:
                raise ValueError("restrict |xi'| before sphere integration")
            if v in names:
                exps[names.index(v)] = e
            else:
                rest.append((v, e))
        val = moment(tuple(exps))
        if not val:
            continue
        key = mono_mul(tuple(rest), ((PI, 2),))
        term = c * val
        out[key] = out[key] + term if key in out else term
    return Scalar(out)


# Riemann tensor ------------------------------------------------------------

_RIEM = re.compile(r"^R(\d)(\d)(\d)(\d)$")


def _canonical_riemann(i: int, j: int, k: int, l: int) -> dict[tuple, int]:
    """Riemann component as a signed combination of canonical components."""
    if i == j or k == l:
        return {}
    sign = 1
    if i > j:
        i, j, sign = j, i, -sign
    if k > l:
        k, l, sign = l, k, -sign
    if (i, j) > (k, l):
        i, j, k, l = k, l, i, j
    idx = {i, j, k, l}
    if len(idx) == 4:
        a, b, c, d = sorted(idx)
        if (i, j, k, l) == (a, d, b, c):
            # first Bianchi identity: R_adbc = R_acbd - R_abcd
            return {(a, c, b, d): sign, (a, b, c, d): -sign}
    return {(i, j, k, l): sign}


def riemann(i: int, j: int, k: int, l: int) -> Scalar:
    out = Scalar()
    for key, sgn in _canonical_riemann(i, j, k, l).items():
        out = out + V(riem(*key)) * sgn
    return out


def canonicalize_riemann(s: Scalar) -> Scalar:
    rules = {}
    for name in s.variables():
        mt = _RIEM.match(name)
        if mt:
            canon = riemann(*map(int, mt.groups()))
            if canon != V(name):
                rules[name] = canon
    return s.subs(rules) if rules else s


def ricci(i: int, j: int) -> Scalar:
    out = Scalar()
    for a in TANGENT:
        out = out + riemann(i, a, j, a)
    return out


def scalar_curvature_components() -> Scalar:
    """sum_{t,l} R_tltl in canonical components."""
    out = Scalar()
    for t in TANGENT:
        out = out + ricci(t, t)
    return out


# contraction -------------------------------------------------------------

def _expansions() -> dict[str, Scalar]:
    return {
        "XP2": sum((V(f"X{j}", 2) for j in TANGENT), Scalar()),
        "DIVX": sum((V(dx(j, j)) for j in TANGENT), Scalar()),
        "SB": scalar_curvature_components(),
    }


# representative component -> (invariant, factor) with component = factor * invariant share
_REPRESENTATIVES = (
    ("X1", 2, "XP2", Fraction(1)),
    (dx(1, 1), 1, "DIVX", Fraction(1)),
    (riem(1, 2, 1, 2), 1, "SB", Fraction(1, 2)),
)


def expand_invariants(s: Scalar) -> Scalar:
    return s.subs(_expansions())


def contract(s: Scalar) -> Scalar:
    """Rewrite component sums as XP2, DIVX and SB, validating the result."""
    s = canonicalize_riemann(s)
    out = Scalar()
    for m, c in s.terms.items():
        names = {v: e for v, e in m}
        if not any(_is_component(v) for v in names):
            out = out + Scalar({m: c})
            continue
        for rep, power, inv, factor in _REPRESENTATIVES:
            if names.get(rep) == power:
                rest = tuple((v, e) for v, e in m if v != rep)
                out = out + Scalar({mono_mul(rest, ((inv, 1),)): c * factor})
                break
    residual = expand_invariants(out) - s
    if not residual.is_zero():
        raise ContractionError(f"unresolved index components: {residual}")
    return out


def _is_component(name: str) -> bool:
    if _RIEM.match(name):
        return True
    if re.match(r"^X[1-4]$", name):
        return True
    if re.match(r"^DX[1-5]_[1-5]$", name) or name.startswith("DDX"):
        return True
    return False


def boundary_vector(s: Scalar, pi_power: int = 3) -> dict[str, GaussianRational]:
    """Coefficients of a contracted, pi-homogeneous result per boundary tag."""
    out: dict[str, GaussianRational] = {}
    for m, c in s.terms.items():
        pi = dict(m).get(PI, 0)
        if pi != pi_power:
            raise ContractionError(f"term with pi^{pi} in a pi^{pi_power} result")
        rest = tuple(p for p in m if p[0] != PI)
        tag = TAG_OF_MONOMIAL.get(rest)
        if tag is None:
            raise ContractionError(f"monomial outside the boundary basis: {rest}")
        out[tag] = c
    return out


def vector_to_scalar(vec: dict[str, GaussianRational]) -> Scalar:
    out = Scalar()
    for tag, c in vec.items():
        out = out + Scalar.monomial(BOUNDARY_TAGS[tag], c)
    return out


def canonical_components() -> Iterable[tuple[int, int, int, int]]:
    seen = set()
    for i, j in combinations(TANGENT, 2):
        for k, l in combinations(TANGENT, 2):
            for key in _canonical_riemann(i, j, k, l):
                seen.add(key)
    return sorted(seen)
