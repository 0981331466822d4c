"""Clifford-valued rational symbols at a boundary point.

``Sym`` is the pre-restriction form: a map ``(word, k) -> numerator`` read
as ``sum numerator * gamma_word / |xi|^(2k)``.  ``SymPoles`` is the form
after ``|xi'| = 1``: a map ``word -> XiPoles``.
"""
from __future__ import annotations

from typing import Mapping

from ..clifford import SIGN_TABLE, CliffordElement, trace_product, volume_product
from ..coefficients import GaussianRational, Scalar, V, XI2, xi
from ..xirational import XN, XiPoles, XiRational


class Sym:
    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[tuple[int, int], Scalar] | None = None):
        self.terms = {key: v for key, v in (terms or {}).items() if v}

    @classmethod
    def zero(cls) -> "Sym":
        return cls()

    @classmethod
    def scalar(cls, c, k: int = 0) -> "Sym":
        return cls({(0, k): Scalar.coerce(c)})

    @classmethod
    def clifford(cls, e: CliffordElement, k: int = 0) -> "Sym":
        return cls({(m, k): c for m, c in e.terms.items()})

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "Sym") -> "Sym":
        if not other.terms:
            return self
        if not self.terms:
            return other
        out = dict(self.terms)
        for key, v in other.terms.items():
            out[key] = out[key] + v if key in out else v
        return Sym(out)

    def __neg__(self):
        return Sym({key: -v for key, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, Sym):
            out: dict = {}
            for (m1, k1), v1 in self.terms.items():
                row = SIGN_TABLE[m1]
                for (m2, k2), v2 in other.terms.items():
                    key = (m1 ^ m2, k1 + k2)
                    v = v1 * v2
                    if row[m2] < 0:
                        v = -v
                    out[key] = out[key] + v if key in out else v
            return Sym(out)
        s = Scalar.coerce(other)
        if not s:
            return Sym()
        return Sym({key: v * s for key, v in self.terms.items()})

    def __rmul__(self, other):
        # scalars commute with everything
        return self * other

    def masks(self) -> set[int]:
        return {m for m, _ in self.terms}

    def component(self, mask: int) -> XiRational:
        return XiRational({k: v for (m, k), v in self.terms.items() if m == mask})

    def map_numerators(self, fn) -> "Sym":
        return Sym({key: fn(v) for key, v in self.terms.items()})

    def subs(self, rules) -> "Sym":
        return self.map_numerators(lambda v: v.subs(rules))

    def d_xn(self) -> "Sym":
        out = Sym()
        for m in self.masks():
            out = out + _from_rational(m, self.component(m).d_xn())
        return out

    def d_xi(self, j: int) -> "Sym":
        if j == 5:
            return self.d_xn()
        out = Sym()
        for m in self.masks():
            out = out + _from_rational(m, self.component(m).d_xi(j))
        return out

    def restrict(self) -> "SymPoles":
        return SymPoles({m: self.component(m).restrict() for m in self.masks()})

    def equals(self, other: "Sym") -> bool:
        diff = self - other
        return all(diff.component(m).combined()[0].is_zero() for m in diff.masks())

    def __repr__(self):
        return f"Sym({len(self.terms)} terms)"


def _from_rational(mask: int, f: XiRational) -> Sym:
    return Sym({(mask, k): v for k, v in f.terms.items()})


class SymPoles:
    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[int, XiPoles] | None = None):
        self.terms = {m: f for m, f in (terms or {}).items() if not f.is_zero()}

    @classmethod
    def clifford(cls, e: CliffordElement, f: XiPoles) -> "SymPoles":
        return cls({m: f * c for m, c in e.terms.items()})

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other):
        out = dict(self.terms)
        for m, f in other.terms.items():
            out[m] = out[m] + f if m in out else f
        return SymPoles(out)

    def __neg__(self):
        return SymPoles({m: -f for m, f in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, SymPoles):
            out: dict = {}
            for m1, f1 in self.terms.items():
                row = SIGN_TABLE[m1]
                for m2, f2 in other.terms.items():
                    v = f1 * f2
                    if row[m2] < 0:
                        v = -v
                    m = m1 ^ m2
                    out[m] = out[m] + v if m in out else v
            return SymPoles(out)
        s = Scalar.coerce(other)
        return SymPoles({m: f * s for m, f in self.terms.items()})

    def __rmul__(self, other):
        return self * other

    def d_xn(self, k: int = 1) -> "SymPoles":
        return SymPoles({m: f.d_xn(k) for m, f in self.terms.items()})

    def pi_plus(self) -> "SymPoles":
        return SymPoles({m: f.pi_plus() for m, f in self.terms.items()})

    def pi_minus(self) -> "SymPoles":
        return SymPoles({m: f.pi_minus() for m, f in self.terms.items()})

    def reduced(self) -> "SymPoles":
        return SymPoles({m: f.reduced() for m, f in self.terms.items()})

    def equals(self, other: "SymPoles") -> bool:
        return (self - other).reduced().is_zero()

    def subs(self, rules) -> "SymPoles":
        return SymPoles({m: f.map_coefficients(lambda n: n.subs(rules)) for m, f in self.terms.items()})

    def trace_with(self, other: "SymPoles") -> XiPoles:
        """tr(self * other) as a single XiPoles."""
        out = trace_product(self.terms, other.terms)
        return out if out is not None else XiPoles.zero()

    def volume_with(self, other: "SymPoles") -> XiPoles:
        """Coefficient of the full Clifford word in self * other."""
        out = volume_product(self.terms, other.terms)
        return out if out is not None else XiPoles.zero()

    def trace(self) -> XiPoles:
        f = self.terms.get(0)
        return f * 4 if f is not None else XiPoles.zero()

    def __repr__(self):
        return "SymPoles(" + ", ".join(f"{m}: {f!r}" for m, f in sorted(self.terms.items())) + ")"


def xi_sym(j: int) -> Scalar:
    return V(xi(j))


__all__ = ["Sym", "SymPoles", "XN", "XI2", "GaussianRational"]
