"""The invariant suite run by ``verify``.

Each check returns ``InvariantRow`` objects.  Every random input comes from
one seeded ``random.Random``, so a run is reproducible from its seed and
trial count.  Floats appear only in quadrature and Monte Carlo rows.
"""
from __future__ import annotations

import random
from fractions import Fraction
from itertools import product

from .audit import case_invariants, summation_comparisons
from .cases import CaseEngine, case_by_number, enumerate_cases, sum_vectors
from .clifford import NORMAL, CliffordElement, trace
from .coefficients import GaussianRational as G
from .coefficients import Scalar, V, xi
from .oracle import (QuadratureError, exact_numeric, gamma_rep, identity, moment_oracle,
                     monte_carlo_moment, oracle_trace, quadrature_line, random_assignment,
                     random_clifford, random_gaussian, sphere_points)
from .report import Comparison, InvariantRow
from .sphere import moment, sphere_integrate
from .symbols.calculus import composition_identity
from .symbols.geometry import BoundaryModel
from .symbols.sym import Sym
from .xirational import XN, XiPoles, sphere_normal_form

QUAD_RTOL = 1e-6
QUAD_ATOL = 1e-8
MC_TOL = 1e-3
MC_SAMPLES = 2_000_000


def _row(name: str, ok: bool, detail: str = "") -> InvariantRow:
    return InvariantRow(name, bool(ok), detail)


# Clifford traces ----------------------------------------------------------

def gamma_relations() -> list[InvariantRow]:
    bad = []
    for parity in (1, -1):
        rep = gamma_rep(parity)
        for a in range(1, 6):
            for b in range(a, 6):
                want = identity() * G(-2 if a == b else 0)
                if not (rep.anticommutator(a, b) == want).all():
                    bad.append(f"parity {parity} ({a},{b})")
    return [_row("gamma matrices: g_a g_b + g_b g_a = -2 delta_ab", not bad, ", ".join(bad))]


def oracle_traces(trials: int, rng: random.Random) -> list[InvariantRow]:
    bad = 0
    first = ""
    for t in range(trials):
        a = random_clifford(rng)
        b = random_clifford(rng)
        e = a * b
        assignment = random_assignment(("A", "B"), rng)
        engine = trace(e).evaluate(assignment)
        oracle = oracle_trace(e, assignment)
        if engine != oracle:
            bad += 1
            first = first or f"trial {t}: engine {engine} vs oracle {oracle}"
    return [_row(f"symbolic trace = gamma-matrix trace ({trials} random products)", not bad,
                 f"{bad} disagreements; {first}" if bad else "")]


def _element(s: Sym) -> CliffordElement:
    return CliffordElement({m: c for (m, k), c in s.terms.items() if k == 0})


def trace_identities() -> list[InvariantRow]:
    """The five boundary trace relations at x_0 on |xi'| = 1."""
    model = BoundaryModel()
    cp = _element(model.c_xi_prime[()])
    dcp = _element(model.c_xi_prime[(NORMAL,)])
    g5 = CliffordElement.gen(NORMAL)
    h1 = V("H1")
    cases = [
        ("tr[c(xi') c(dx_n)] = 0", cp * g5, Scalar()),
        ("tr[c(dx_n)^2] = -4", g5 * g5, Scalar.const(-4)),
        ("tr[c(xi')^2] = -4", cp * cp, Scalar.const(-4)),
        ("tr[d_xn c(xi') c(dx_n)] = 0", dcp * g5, Scalar()),
        ("tr[d_xn c(xi') c(xi')] = -2 h1", dcp * cp, h1 * -2),
    ]
    point = {"H1": G(3), **{xi(j): G(Fraction(1, 2)) for j in range(1, 5)}}
    rows = []
    for name, e, want in cases:
        engine = sphere_normal_form(trace(e) - want)
        oracle_ok = oracle_trace(e, point) == want.evaluate(point)
        detail = "" if engine.is_zero() else f"engine residual {engine}"
        if not oracle_ok:
            detail = (detail + "; " if detail else "") + "gamma-matrix trace disagrees"
        rows.append(_row("trace identity " + name, engine.is_zero() and oracle_ok, detail))
    return rows


# sphere moments -----------------------------------------------------------

def _monomials(max_degree: int):
    for e in product(range(max_degree + 1), repeat=4):
        if sum(e) <= max_degree:
            yield e


def _integrate_monomial(e: tuple[int, ...]) -> Fraction:
    s = Scalar.const(1)
    for j, k in enumerate(e, start=1):
        if k:
            s = s * V(xi(j), k)
    out = sphere_integrate(s)
    return Fraction(out.evaluate({"PI": G(1)}).re)


def sphere_moments(seed: int) -> list[InvariantRow]:
    bad = [e for e in _monomials(6) if _integrate_monomial(e) != moment_oracle(e)]
    odd = [e for e in _monomials(6) if any(k % 2 for k in e) and _integrate_monomial(e)]
    pair = all(_integrate_monomial(tuple(2 if k == j else 0 for k in range(4))) == Fraction(1, 2)
               for j in range(4))
    mixed = all(_integrate_monomial(tuple(1 if k in (a, b) else 0 for k in range(4))) == 0
                for a in range(4) for b in range(a + 1, 4))
    rows = [
        _row("sphere: area = 2 pi^2", moment((0, 0, 0, 0)) == 2),
        _row("sphere: int xi_i xi_j = (pi^2/2) delta_ij", pair and mixed),
        _row("sphere: odd moments vanish", not odd, ", ".join(map(str, odd))),
        _row("sphere: closed form = Gamma-function oracle, degree <= 6", not bad, ", ".join(map(str, bad))),
    ]
    worst, where = 0.0, None
    points = sphere_points(MC_SAMPLES, seed)
    for e in _monomials(4):
        if sum(e) != 4:
            continue
        est = monte_carlo_moment(e, points=points)
        err = abs(est - float(moment_oracle(e)))
        if err > worst:
            worst, where = err, e
    rows.append(_row(f"sphere: degree-4 moments vs Monte Carlo (tol {MC_TOL:g})", worst < MC_TOL,
                     f"max deviation {worst:.2e} at {where}"))
    return rows


# line integrals -----------------------------------------------------------

def random_poles(rng: random.Random, variables=("A", "B")) -> XiPoles:
    """A random rational function of xi_n that decays like 1/xi_n^2."""
    a = rng.randint(1, 4)
    b = rng.randint(max(0, 2 - a), 3)
    top = a + b - 2
    num = Scalar()
    for d in range(max(top, 0) + 1):
        c = Scalar.const(random_gaussian(rng))
        if variables and rng.random() < 0.5:
            c = c * V(rng.choice(variables))
        num = num + c * V(XN, d) if d else num + c
    return XiPoles(num if num else Scalar.const(1), a, b)


def _close(exact: complex, approx: complex) -> bool:
    return abs(exact - approx) <= max(QUAD_ATOL, QUAD_RTOL * abs(exact))


def quadrature_checks(rng: random.Random, trials: int = 20) -> list[InvariantRow]:
    rows = []
    worst, bad = 0.0, []
    for t in range(trials):
        f = random_poles(rng)
        assignment = random_assignment(("A", "B"), rng)
        exact = exact_numeric(f.integrate_line(), assignment)
        try:
            approx = quadrature_line(f, assignment)
        except QuadratureError as exc:
            bad.append(f"trial {t}: {exc}")
            continue
        worst = max(worst, abs(exact - approx) / max(abs(exact), 1.0))
        if not _close(exact, approx):
            bad.append(f"trial {t}: residue {exact:.10g} vs quadrature {approx:.10g}")
    rows.append(_row(f"residue = quadrature ({trials} random integrands, rtol {QUAD_RTOL:g})",
                     not bad, "; ".join(bad) or f"max relative deviation {worst:.1e}"))
    engine = CaseEngine()
    c = case_by_number(2)
    comps = engine.components
    point = {"H1": G(Fraction(rng.randint(1, 9), 7)), "H2": G(Fraction(rng.randint(-9, 9), 5))}
    point.update({xi(j): G(Fraction(1, 2)) for j in range(1, 5)})
    ok, detail = True, []
    for f, _ in engine.integrands(c, comps[c.r]["D"], comps[c.l]["D"]):
        exact = exact_numeric(f.integrate_line(), point)
        approx = quadrature_line(f, point)
        ok = ok and _close(exact, approx)
        detail.append(f"{exact:.10g} vs {approx:.10g}")
    rows.append(_row("residue = quadrature on the case 2 integrand", ok, "; ".join(detail)))
    return rows


def projection_checks(rng: random.Random, trials: int = 100) -> list[InvariantRow]:
    idem, comp, recompose = [], [], []
    for t in range(trials):
        f = random_poles(rng)
        plus, minus = f.pi_plus(), f.pi_minus()
        if not plus.pi_plus().equals(plus):
            idem.append(t)
        if not (plus + minus).equals(f) or not minus.pi_plus().is_zero():
            comp.append(t)
        A, B, P = f.partial_fractions()
        back = XiPoles(P, 0, 0)
        for p, c in A.items():
            back = back + XiPoles(c, p, 0)
        for q, c in B.items():
            back = back + XiPoles(c, 0, q)
        if not back.equals(f):
            recompose.append(t)
    return [
        _row(f"pi+ idempotent ({trials} random functions)", not idem, str(idem) if idem else ""),
        _row(f"pi+ + pi- = 1 and pi+ pi- = 0 ({trials} random functions)", not comp, str(comp) if comp else ""),
        _row(f"partial fractions recompose ({trials} random functions)", not recompose,
             str(recompose) if recompose else ""),
    ]


def composition_checks(cutoff: int = -3) -> list[InvariantRow]:
    result = composition_identity(cutoff)
    bad = [o for o, ok in result.items() if not ok]
    return [_row(f"sigma(p o q) = 1 through order {cutoff}", not bad,
                 "failing orders " + ", ".join(map(str, bad)) if bad else "")]


# suite --------------------------------------------------------------------

def run_suite(trials: int = 200, seed: int = 0, constants=None) -> tuple[list[InvariantRow], list[Comparison]]:
    rng = random.Random(seed)
    rows: list[InvariantRow] = []
    rows += gamma_relations()
    rows += oracle_traces(trials, rng)
    rows += trace_identities()
    rows += sphere_moments(seed)
    rows += quadrature_checks(rng)
    rows += projection_checks(rng)
    rows += composition_checks()
    engine = CaseEngine(constants=constants)
    results = {c.number: engine.evaluate(c) for c in enumerate_cases()}
    rows += case_invariants(engine, results)
    return rows, summation_comparisons(sum_vectors(list(results.values())))
