"""Parametrix recursion and symbol composition for D + c(X).

With ``p1 = i c(xi)`` and ``p0 = p0_D + c(X)`` the inverse symbols are

    q_-1 = i c(xi) / |xi|^2
    q_-2 = -q_-1 [p0 q_-1 + sum_j c(dx_j) d_j q_-1]
    q_-3 = -q_-1 [p0 q_-2 + sum_j c(dx_j) d_j q_-2]

(j runs over all five directions).  Splitting ``p0`` gives
``q_-2 = sigma_-2(D^-1) + Q_X`` with ``Q_X = -q_-1 c(X) q_-1`` and
``q_-3 = sigma_-3(D^-1) + R_-3`` where R_-3 collects every term that
involves X.
"""
from __future__ import annotations

from functools import cached_property
from itertools import combinations_with_replacement
from fractions import Fraction
from math import factorial

from ..coefficients import GaussianRational
from .geometry import BoundaryModel
from .jets import Jet, jet_sum
from .sym import Sym

I = GaussianRational(0, 1)
MINUS_I = GaussianRational(0, -1)
DIRECTIONS = (1, 2, 3, 4, 5)


class InverseSymbols:
    """Lazy jets of the parametrix components for one geometric model."""

    def __init__(self, model: BoundaryModel | None = None):
        self.model = model or BoundaryModel()

    def _transport(self, q: Jet) -> Jet:
        """sum_j c(dx_j) d_j q."""
        m = self.model
        return jet_sum(m.c_dx(j) * q.deriv(j) for j in DIRECTIONS)

    @cached_property
    def q1(self) -> Jet:
        return (self.model.c_xi * self.model.inv_norm_power(1)).scale(I)

    @cached_property
    def sigma2_dirac(self) -> Jet:
        inner = self.model.p0_dirac * self.q1 + self._transport(self.q1)
        return -(self.q1 * inner)

    @cached_property
    def q2_one_form(self) -> Jet:
        return -(self.q1 * self.model.c_one_form * self.q1)

    @cached_property
    def q2(self) -> Jet:
        return self.sigma2_dirac + self.q2_one_form

    @cached_property
    def r3(self) -> Jet:
        m = self.model
        cx, s2, qx = m.c_one_form, self.sigma2_dirac, self.q2_one_form
        inner = cx * s2 + m.p0_dirac * qx + cx * qx + self._transport(qx)
        return -(self.q1 * inner)

    def r3_groups(self) -> dict[str, Jet]:
        """R_-3 split by origin: -q_-1 times c(X) s_-2, p0_D Q_X, the tangential
        and normal transport of Q_X, and the quadratic c(X) Q_X."""
        m = self.model
        cx, s2, qx = m.c_one_form, self.sigma2_dirac, self.q2_one_form
        tangential = jet_sum(m.c_dx(j) * qx.deriv(j) for j in DIRECTIONS[:-1])
        normal = m.c_dx(DIRECTIONS[-1]) * qx.deriv(DIRECTIONS[-1])
        pieces = {
            "x_sigma2": cx * s2,
            "zeroth": m.p0_dirac * qx,
            "tangential": tangential,
            "normal": normal,
            "quadratic": cx * qx,
        }
        return {k: -(self.q1 * v) for k, v in pieces.items()}

    @cached_property
    def sigma3_dirac_recursion(self) -> Jet:
        """Pure-Dirac q_-3 from the recursion; needs tangential jets, so it is
        only evaluable in the flat-boundary model."""
        s2 = self.sigma2_dirac
        inner = self.model.p0_dirac * s2 + self._transport(s2)
        return -(self.q1 * inner)

    @cached_property
    def q3(self) -> Jet:
        inner = self.model.p0 * self.q2 + self._transport(self.q2)
        return -(self.q1 * inner)

    @cached_property
    def q4(self) -> Jet:
        """Only used to close the composition check at order -3."""
        inner = self.model.p0 * self.q3 + self._transport(self.q3)
        return -(self.q1 * inner)

    def by_order(self, order: int) -> Jet:
        return {-1: self.q1, -2: self.q2, -3: self.q3, -4: self.q4}[order]


def perturbed_dirac_symbol(model: BoundaryModel | None = None) -> dict[int, Jet]:
    model = model or BoundaryModel()
    return {1: model.p1, 0: model.p0}


def invert(p: dict[int, Jet] | None = None, depth: int = 3, model: BoundaryModel | None = None) -> dict[int, Jet]:
    """Inverse symbol components down to order ``-depth``.

    Only the first-order Dirac principal part is supported, which is the
    case the recursion above is written for.
    """
    inv = InverseSymbols(model)
    return {-k: inv.by_order(-k) for k in range(1, depth + 1)}


def _xi_derivative(s: Sym, alpha: tuple[int, ...]) -> Sym:
    for d in alpha:
        s = s.d_xi(d)
    return s


def compose(a: dict[int, Jet], b: dict[int, Jet], cutoff: int) -> dict[int, Sym]:
    """Graded symbol of a o b at x_0, orders >= cutoff.

    sigma(a o b) = sum_alpha 1/alpha! d_xi^alpha a  D_x^alpha b with
    D_x = -i d_x.
    """
    out: dict[int, Sym] = {}
    for oa, ja in a.items():
        for ob, jb in b.items():
            for size in range(0, oa + ob - cutoff + 1):
                order = oa + ob - size
                if order < cutoff:
                    continue
                for alpha in combinations_with_replacement(DIRECTIONS, size):
                    da = _xi_derivative(ja.at(), alpha)
                    if da.is_zero():
                        continue
                    weight = MINUS_I ** size * GaussianRational(Fraction(1, _alpha_factorial(alpha)))
                    db = jb[alpha]
                    term = (da * db) * weight
                    out[order] = out.get(order, Sym()) + term
    return out


def composition_identity(cutoff: int = -3) -> dict[int, bool]:
    """Check sigma(p o q) = 1 at x_0 on |xi'| = 1 for orders 0 .. cutoff.

    Runs in the flat-boundary model with one extra jet order, since the
    order ``cutoff`` part needs one more x-derivative of q than q itself
    was built from.
    """
    model = BoundaryModel(flat=True, max_order=-cutoff)
    inv = InverseSymbols(model)
    q = {o: inv.by_order(o) for o in range(-1, cutoff - 2, -1)}
    out = compose(perturbed_dirac_symbol(model), q, cutoff)
    result = {}
    for order in range(0, cutoff - 1, -1):
        s = out.get(order, Sym()).restrict()
        if order == 0:
            s = s - Sym.scalar(1).restrict()
        result[order] = s.reduced().is_zero()
    return result


def _alpha_factorial(alpha: tuple[int, ...]) -> int:
    out = 1
    for d in set(alpha):
        out *= factorial(alpha.count(d))
    return out
