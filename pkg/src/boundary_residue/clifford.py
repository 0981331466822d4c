"""Clifford algebra on five generators with Scalar coefficients.

A word is a bitmask: bit ``j-1`` set means generator ``j`` is present, in
increasing order.  Generator 5 is the normal direction.  Every generator
squares to ``-1`` and distinct generators anticommute, so the spinor trace
of a nonempty canonical word vanishes and ``tr 1 = 4``.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping

from .coefficients import Scalar, V, xi

DIM = 5
NORMAL = 5
SPINOR_DIM = 4


def word_mask(generators: Iterable[int]) -> int:
    m = 0
    for g in generators:
        m |= 1 << (g - 1)
    return m


def mask_generators(mask: int) -> tuple[int, ...]:
    return tuple(j + 1 for j in range(DIM) if mask >> j & 1)


@lru_cache(maxsize=None)
def word_sign(a: int, b: int) -> int:
    """Sign s with gamma_a * gamma_b = s * gamma_(a xor b)."""
    swaps = 0
    for j in range(DIM):
        if b >> j & 1:
            swaps += bin(a >> (j + 1)).count("1")
    squares = bin(a & b).count("1")
    return -1 if (swaps + squares) & 1 else 1


SIGN_TABLE = [[word_sign(a, b) for b in range(1 << DIM)] for a in range(1 << DIM)]
SELF_SIGN = [SIGN_TABLE[m][m] for m in range(1 << DIM)]


def tangential_count(mask: int) -> int:
    return bin(mask & 0b01111).count("1")


class CliffordElement:
    """Immutable linear combination of canonical words."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[int, Scalar] | None = None):
        self.terms = {m: Scalar.coerce(c) for m, c in (terms or {}).items()}
        self.terms = {m: c for m, c in self.terms.items() if c}

    @classmethod
    def scalar(cls, c) -> "CliffordElement":
        return cls({0: Scalar.coerce(c)})

    @classmethod
    def gen(cls, j: int, coeff=1) -> "CliffordElement":
        return cls({1 << (j - 1): Scalar.coerce(coeff)})

    @classmethod
    def word(cls, generators: Iterable[int], coeff=1) -> "CliffordElement":
        """Product of generators in the given (possibly unsorted) order."""
        out = cls.scalar(coeff)
        for g in generators:
            out = out * cls.gen(g)
        return out

    def __add__(self, other):
        out = dict(self.terms)
        for m, c in _cl(other).terms.items():
            out[m] = out[m] + c if m in out else c
        return CliffordElement(out)

    __radd__ = __add__

    def __neg__(self):
        return CliffordElement({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-_cl(other))

    def __rsub__(self, other):
        return _cl(other) - self

    def __mul__(self, other):
        o = _cl(other)
        out: dict[int, Scalar] = {}
        for m1, c1 in self.terms.items():
            row = SIGN_TABLE[m1]
            for m2, c2 in o.terms.items():
                m = m1 ^ m2
                v = c1 * c2
                if row[m2] < 0:
                    v = -v
                out[m] = out[m] + v if m in out else v
        return CliffordElement(out)

    def __rmul__(self, other):
        return _cl(other) * self

    def __eq__(self, other):
        try:
            o = _cl(other)
        except TypeError:
            return NotImplemented
        return self.terms == o.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def is_zero(self) -> bool:
        return not self.terms

    def map_coefficients(self, fn) -> "CliffordElement":
        return CliffordElement({m: fn(c) for m, c in self.terms.items()})

    def jet_derivative(self, order: int) -> "CliffordElement":
        """Normal derivative at the boundary point of a combination of the
        coordinate generators c(dx_j).

        A word with m tangential generators carries the frame factor
        h^(m/2); with h = 1 + H1 t + H2 t^2/2 its first jet is (m/2) H1 and
        its second (m/2)(m/2 - 1) H1^2 + (m/2) H2.
        """
        if order not in (1, 2):
            raise ValueError("jet order must be 1 or 2")
        h1, h2 = V("H1"), V("H2")
        out = {}
        for m, c in self.terms.items():
            half = tangential_count(m)
            e = Fraction(half, 2)
            if order == 1:
                f = h1 * e
            else:
                f = h1 * h1 * (e * (e - 1)) + h2 * e
            out[m] = c * f
        return CliffordElement(out)

    def __repr__(self):
        return f"CliffordElement({self})"

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for m in sorted(self.terms):
            w = "".join(f"g{j}" for j in mask_generators(m)) or "1"
            parts.append(f"({self.terms[m]})*{w}")
        return " + ".join(parts)


def _cl(x) -> CliffordElement:
    if isinstance(x, CliffordElement):
        return x
    return CliffordElement.scalar(x)


def trace(a: CliffordElement) -> Scalar:
    return a.terms.get(0, Scalar()) * SPINOR_DIM


def trace_product(a: Mapping[int, object], b: Mapping[int, object]):
    """tr(A B) using only matching words; works for any coefficient ring."""
    total = None
    for m, ca in a.items():
        cb = b.get(m)
        if cb is None:
            continue
        v = ca * cb
        if SELF_SIGN[m] < 0:
            v = -v
        total = v if total is None else total + v
    if total is None:
        return None
    return total * SPINOR_DIM


VOLUME = (1 << DIM) - 1


def volume_product(a: Mapping[int, object], b: Mapping[int, object]):
    """Coefficient of the full word c(dx_1)...c(dx_5) in A B.

    In an irreducible spinor module this word acts as a scalar, so this is
    the part of the trace that the traceless-word convention drops.
    """
    total = None
    for m, ca in a.items():
        cb = b.get(m ^ VOLUME)
        if cb is None:
            continue
        v = ca * cb
        if SIGN_TABLE[m][m ^ VOLUME] < 0:
            v = -v
        total = v if total is None else total + v
    return total


def c_xi_prime() -> CliffordElement:
    """c(xi') = sum_j xi_j c(dx_j) at the boundary point."""
    return CliffordElement({1 << (j - 1): V(xi(j)) for j in range(1, 5)})


def c_xi() -> CliffordElement:
    return c_xi_prime() + CliffordElement.gen(NORMAL, V("XN"))


def c_one_form() -> CliffordElement:
    """c(X) = sum_j X_j c(dx_j) + a_n c(dx_n) at the boundary point."""
    terms = {1 << (j - 1): V(f"X{j}") for j in range(1, 5)}
    terms[1 << 4] = V("AN")
    return CliffordElement(terms)
