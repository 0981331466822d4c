"""The fifteen boundary terms of the residue functional in dimension five.

Each term is

    prefactor * int_{|xi'|=1} int_R tr[ d_xn^j d_xi'^alpha d_xin^k pi+ sigma_r
                                        x d_x'^alpha d_xin^(j+1) d_xn^k sigma_l ] dxi_n

with prefactor (-i)^(|alpha|+j+k+1) / (alpha! (j+k+1)!) and the index
constraint r + l - k - j - |alpha| = -4.  Symbols of order -2 and -3 are
split into a pure-Dirac part ``D`` and the one-form part ``X``; each
component pair is evaluated separately so that parts which need curvature
jets of the metric can be supplied from the imported constants table.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from itertools import combinations_with_replacement
from math import factorial
from typing import Mapping

from .coefficients import GaussianRational, Scalar
from .constants import ImportedConstant, default_constants
from .sphere import TAG_ORDER, boundary_vector, contract, sphere_integrate
from .symbols.calculus import InverseSymbols
from .symbols.geometry import BoundaryModel
from .symbols.jets import Jet, Unavailable
from .symbols.library import at_point, sigma3_dirac
from .symbols.printed import printed_r3
from .symbols.sym import SymPoles
from .xirational import XiPoles

NORMAL = 5
TANGENT = (1, 2, 3, 4)
DIM = 5

Vector = dict  # tag -> GaussianRational, coefficient of pi^3


@dataclass(frozen=True)
class CaseIndex:
    number: int
    r: int
    l: int
    k: int
    j: int
    alpha: int

    def label(self) -> str:
        return f"r={self.r} l={self.l} k={self.k} j={self.j} |alpha|={self.alpha}"


# published numbering of the fifteen families
_NUMBERING = [
    (-1, -1, 0, 1, 1), (-1, -1, 0, 2, 0), (-1, -1, 0, 0, 2),
    (-1, -1, 1, 1, 0), (-1, -1, 1, 0, 1), (-1, -1, 2, 0, 0),
    (-1, -2, 0, 1, 0), (-1, -2, 0, 0, 1), (-1, -2, 1, 0, 0),
    (-2, -1, 0, 1, 0), (-2, -1, 0, 0, 1), (-2, -1, 1, 0, 0),
    (-2, -2, 0, 0, 0), (-1, -3, 0, 0, 0), (-3, -1, 0, 0, 0),
]


def enumerate_cases() -> list[CaseIndex]:
    """All (r, l, k, j, |alpha|) with r, l <= -1 and r + l - k - j - |alpha| = 1 - n."""
    found = []
    for r in range(-1, -DIM, -1):
        for l in range(-1, -DIM, -1):
            budget = r + l - (1 - DIM)
            if budget < 0:
                continue
            for k in range(budget + 1):
                for j in range(budget - k + 1):
                    found.append((r, l, k, j, budget - k - j))
    order = {t: n for n, t in enumerate(_NUMBERING, start=1)}
    if sorted(found) != sorted(_NUMBERING):
        raise AssertionError("index families do not match the published list")
    return [CaseIndex(order[t], *t) for t in sorted(found, key=order.__getitem__)]


def case_by_number(n: int) -> CaseIndex:
    for c in enumerate_cases():
        if c.number == n:
            return c
    raise KeyError(f"no case {n}")


def multi_indices(size: int):
    """Tangential multi-indices of the given length with 1/alpha!."""
    for alpha in combinations_with_replacement(TANGENT, size):
        fact = 1
        for d in set(alpha):
            fact *= factorial(alpha.count(d))
        yield alpha, Fraction(1, fact)


def case_prefactor(c: CaseIndex) -> GaussianRational:
    """(-i)^(|alpha|+j+k+1) / (j+k+1)!; the 1/alpha! sits in the alpha sum."""
    return GaussianRational(0, -1) ** (c.alpha + c.j + c.k + 1) * GaussianRational(Fraction(1, factorial(c.j + c.k + 1)))


@dataclass(frozen=True)
class Factor:
    """d_x^x_key d_xi'^alpha d_xin^xin of a symbol, optionally projected."""
    x_key: tuple = ()
    alpha: tuple = ()
    xin: int = 0
    project: bool = False

    def apply(self, jet: Jet) -> SymPoles:
        s = jet[self.x_key]
        for d in self.alpha:
            s = s.d_xi(d)
        for _ in range(self.xin):
            s = s.d_xn()
        out = s.restrict()
        return out.pi_plus() if self.project else out


def line_and_sphere(integrand) -> Scalar:
    """int over xi_n on the line, then over the unit 3-sphere."""
    return sphere_integrate(integrand.integrate_line())


def to_vector(total: Scalar) -> Vector:
    return boundary_vector(contract(total), pi_power=3)


def vector_add(*vectors: Mapping) -> Vector:
    out: dict = {}
    for v in vectors:
        for tag, c in v.items():
            out[tag] = out.get(tag, GaussianRational()) + c
    return {t: out[t] for t in TAG_ORDER if t in out and out[t]}


def vector_scale(v: Mapping, c) -> Vector:
    c = GaussianRational.coerce(c)
    return {t: x * c for t, x in v.items() if x * c}


@dataclass
class PartResult:
    pair: str
    vector: Vector
    provenance: str
    source: str = ""


@dataclass
class CaseResult:
    case: CaseIndex
    prefactor: GaussianRational
    parts: list[PartResult] = field(default_factory=list)

    @property
    def vector(self) -> Vector:
        return vector_add(*(p.vector for p in self.parts))

    def part(self, pair: str) -> PartResult | None:
        for p in self.parts:
            if p.pair == pair:
                return p
        return None

    @property
    def provenance(self) -> str:
        kinds = {p.provenance for p in self.parts}
        return "engine" if kinds == {"engine"} else "+".join(sorted(kinds))


class CaseEngine:
    """Evaluates cases for one geometric model and one choice of inputs.

    ``sigma3_source`` selects the pure-Dirac order -3 symbol: ``"printed"``
    uses the published closed form consumed as input; ``"recursion"`` uses
    the parametrix recursion, which only exists in the flat-boundary model.
    ``r3_source`` selects the one-form part of q_-3 (``"recursion"`` or the
    printed expansion ``"printed"``).
    """

    def __init__(self, constants: list[ImportedConstant] | None = None,
                 sigma3_source: str = "printed", r3_source: str = "recursion",
                 flat: bool = False):
        self.model = BoundaryModel(flat=flat)
        self.inverse = InverseSymbols(self.model)
        self.constants = default_constants() if constants is None else constants
        self.sigma3_source = sigma3_source
        self.r3_source = r3_source

    @cached_property
    def components(self) -> dict[int, dict[str, Jet]]:
        inv = self.inverse
        if self.sigma3_source == "printed":
            s3 = at_point(sigma3_dirac(), "printed sigma_-3")
        elif self.sigma3_source == "recursion":
            s3 = inv.sigma3_dirac_recursion
        else:
            raise ValueError(f"unknown sigma3 source {self.sigma3_source!r}")
        if self.r3_source == "recursion":
            r3 = inv.r3
        elif self.r3_source == "printed":
            r3 = at_point(printed_r3(), "printed R_-3")
        else:
            raise ValueError(f"unknown R_-3 source {self.r3_source!r}")
        return {
            -1: {"D": inv.q1},
            -2: {"D": inv.sigma2_dirac, "X": inv.q2_one_form},
            -3: {"D": s3, "X": r3},
        }

    def integral(self, c: CaseIndex, left: Jet, right: Jet, volume: bool = False) -> Scalar:
        """The alpha-summed, prefactored double integral for one component pair.

        With ``volume`` the full-word channel is integrated instead of the
        trace; it must vanish for the traceless-word convention to be exact.
        """
        total = Scalar()
        for f, inv_fact in self.integrands(c, left, right, volume):
            total = total + f.integrate_line() * inv_fact
        return sphere_integrate(total) * case_prefactor(c)

    def integrands(self, c: CaseIndex, left: Jet, right: Jet, volume: bool = False) -> list[tuple[XiPoles, Fraction]]:
        """Nonzero traced integrands in xi_n, one per multi-index, with 1/alpha!."""
        out = []
        for alpha, inv_fact in multi_indices(c.alpha):
            lf = Factor(x_key=(NORMAL,) * c.j, alpha=alpha, xin=c.k, project=True)
            rf = Factor(x_key=alpha + (NORMAL,) * c.k, xin=c.j + 1)
            a = lf.apply(left)
            if a.is_zero():
                continue
            b = rf.apply(right)
            if b.is_zero():
                continue
            f = a.volume_with(b) if volume else a.trace_with(b)
            if not f.is_zero():
                out.append((f, inv_fact))
        return out

    def imported(self, c: CaseIndex, pair: str) -> PartResult | None:
        rows = [k for k in self.constants if k.case == c.number and k.part == pair]
        if not rows:
            return None
        vec = vector_add(*({k.monomial: k.value} for k in rows))
        return PartResult(pair, vec, "imported", "; ".join(sorted({k.source for k in rows})))

    def evaluate(self, c: CaseIndex) -> CaseResult:
        out = CaseResult(c, case_prefactor(c))
        comps = self.components
        for n1, left in comps[c.r].items():
            for n2, right in comps[c.l].items():
                pair = n1 + n2
                try:
                    vec = to_vector(self.integral(c, left, right))
                    out.parts.append(PartResult(pair, vec, "engine"))
                except Unavailable as exc:
                    part = self.imported(c, pair)
                    if part is None:
                        raise Unavailable(f"case {c.number} part {pair}: {exc}") from exc
                    out.parts.append(part)
        return out

    def evaluate_all(self) -> list[CaseResult]:
        return [self.evaluate(c) for c in enumerate_cases()]

    def volume_channel(self, c: CaseIndex) -> dict[str, Scalar]:
        """Full-word channel per engine-evaluable component pair."""
        out = {}
        comps = self.components
        for n1, left in comps[c.r].items():
            for n2, right in comps[c.l].items():
                try:
                    out[n1 + n2] = self.integral(c, left, right, volume=True)
                except Unavailable:
                    continue
        return out

    # alternative evaluations used by the audit -------------------------------
    def case7_by_parts(self) -> Vector:
        """The first (-1,-2) case with both xi_n derivatives moved onto the
        projected factor: -1/2 int tr[d_xin^2 d_xn pi+ q_-1 x q_-2]."""
        c = case_by_number(7)
        left = Factor(x_key=(NORMAL,), xin=2, project=True).apply(self.inverse.q1)
        total = Scalar()
        for right_jet in self.components[-2].values():
            right = Factor().apply(right_jet)
            total = total + left.trace_with(right).integrate_line()
        return to_vector(sphere_integrate(total) * case_prefactor(c))


def sum_vectors(results: list[CaseResult]) -> Vector:
    return vector_add(*(r.vector for r in results))


def evaluate_case(n: int, engine: CaseEngine | None = None) -> CaseResult:
    return (engine or CaseEngine()).evaluate(case_by_number(n))


def sum_total(results: list[CaseResult] | None = None) -> Vector:
    return sum_vectors(results if results is not None else CaseEngine().evaluate_all())
