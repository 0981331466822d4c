"""Compare engine results with the published values.

Builds an ``AuditReport``: per-case three-way rows, the summation audit,
the geometric form, checks of every transcribed closed-form symbol, and the
internal invariants that do not need the numeric oracles.  Mismatches with
the published values are recorded, never corrected.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Callable

from . import __version__
from .cases import (NORMAL, CaseEngine, CaseResult, Factor, case_by_number, case_prefactor,
                    enumerate_cases, line_and_sphere, sum_vectors, to_vector, vector_add)
from .clifford import CliffordElement, mask_generators
from .coefficients import GaussianRational as G
from .coefficients import PI, Scalar, V, xcomp, xi
from .published import (PRINTED_CASES, PRINTED_GEOMETRIC, PRINTED_ONE_FORM_PARTS, PRINTED_TOTAL,
                        normalize_x2)
from .report import (AuditReport, CaseRow, Comparison, FormulaRow, InvariantRow, PartRow,
                     ordered, vector_text, vectors_equal)
from .sphere import sphere_integrate
from .symbols import library as L
from .symbols import printed as P
from .symbols.calculus import InverseSymbols
from .symbols.geometry import BoundaryModel
from .symbols.sym import Sym, SymPoles
from .xirational import XN, XiPoles, sphere_normal_form

HEADER = [
    "index families: r + l - k - j - |alpha| = -4 with r, l <= -1, the homogeneity "
    "constraint met by all fifteen published cases",
    "unit: coefficients of pi^3; the published table is quoted per pi*Omega3 (Omega3 = 2 pi^2)",
    "Clifford convention: c(v)^2 = -|v|^2; the product of all five generators is traceless",
    "order -3 pure-Dirac symbol: published closed form consumed as input",
    "pure-Dirac parts of cases 3 and 8 (tangential curvature jets) come from the imported constants",
]

HALF = G(Fraction(1, 2))


# geometric form -----------------------------------------------------------

def geometric_form(v: dict[str, G]) -> dict[str, G]:
    """Rewrite an H-basis vector with h''(0) = (3 h'(0)^2 + s_bd - s_M)/4,
    h'(0) = -K/2 and |X|^2 = |X'|^2 + a_n^2."""
    out: dict[str, G] = {}

    def add(tag: str, c: G) -> None:
        out[tag] = out.get(tag, G()) + c

    for tag, c in normalize_x2(v).items():
        if tag == "H1SQ":
            add("K2", c * G(Fraction(1, 4)))
        elif tag == "H2":
            add("K2", c * G(Fraction(3, 16)))
            add("SB", c * G(Fraction(1, 4)))
            add("SM", c * G(Fraction(-1, 4)))
        elif tag == "AN_H1":
            add("AN_K", -c * HALF)
        elif tag == "XP2_H1":
            add("XP2_K", -c * HALF)
        else:
            add(tag, c)
    return ordered(out)


def printed_resum() -> dict[str, G]:
    return _plain_sum(PRINTED_CASES.values())


def _plain_sum(vectors) -> dict[str, G]:
    out: dict[str, G] = {}
    for v in vectors:
        for t, c in v.items():
            out[t] = out.get(t, G()) + c
    return ordered(out)


# symbol comparisons -------------------------------------------------------

def sphere_difference(a: SymPoles, b: SymPoles) -> SymPoles:
    """a - b modulo |xi'| = 1, reduced."""
    d = (a - b).reduced()
    return SymPoles({m: f.map_coefficients(sphere_normal_form).reduced() for m, f in d.terms.items()})


def word_name(mask: int) -> str:
    if not mask:
        return "1"
    return "".join(f"c{g}" for g in mask_generators(mask))


def describe(d: SymPoles, limit: int = 4) -> str:
    parts = []
    for m in sorted(d.terms)[:limit]:
        parts.append(f"[{word_name(m)}] {d.terms[m]!r}")
    more = len(d.terms) - limit
    return "difference " + "; ".join(parts) + (f"; ... {more} more words" if more > 0 else "")


def _check(name: str, description: str, engine: SymPoles, printed: SymPoles) -> FormulaRow:
    d = sphere_difference(engine, printed)
    return FormulaRow(name, description, d.is_zero(), "" if d.is_zero() else describe(d))


def _g_full() -> Scalar:
    return sum((V(xcomp(j)) * V(xi(j)) for j in (1, 2, 3, 4)), Scalar()) + V("AN") * V(XN)


def _c_one_form() -> Sym:
    return Sym.clifford(CliffordElement({1 << (j - 1): V(xcomp(j)) for j in range(1, 6)}))


def formula_checks(inverse: InverseSymbols) -> list[FormulaRow]:
    q1 = inverse.q1
    I = G(0, 1)
    rows = [
        _check("q_minus_1", "q_-1 = i c(xi)/|xi|^2",
               q1.at().restrict(), L.c_xi_sym().__mul__(L.inv_e(1, I)).restrict()),
        _check("q_minus_2_one_form", "one-form part of q_-2 = c(X)/|xi|^2 - 2 g(X,xi) c(xi)/|xi|^4",
               inverse.q2_one_form.at().restrict(),
               (_c_one_form() * L.inv_e(1) - L.c_xi_sym() * L.inv_e(2, _g_full() * 2)).restrict()),
    ]
    closed = L.sigma2_dirac_closed(inverse.model)
    for key, label in (((), "at x_0"), ((NORMAL,), "first normal derivative")):
        rows.append(_check(f"sigma_minus_2_closed_form{'_dn' if key else ''}",
                           f"order -2 Dirac symbol, recursion vs standard closed form, {label}",
                           inverse.sigma2_dirac[key].restrict(), closed[key].restrict()))
    factor_rows: list[tuple[str, str, Callable[[], SymPoles], Callable[[], SymPoles]]] = [
        ("d3_xin_q1", "third xi_n derivative of q_-1",
         lambda: Factor(xin=3).apply(q1), P.d3_xin_q1),
        ("d2_xn_piplus_q1", "second x_n derivative of pi+ q_-1",
         lambda: Factor(x_key=(NORMAL, NORMAL), project=True).apply(q1), P.d2_xn_piplus_q1),
        ("d2_xin_dxn_piplus_q1", "d_xin^2 d_xn pi+ q_-1 (denominators read as xi_n - i)",
         lambda: Factor(x_key=(NORMAL,), project=True).apply(q1).d_xn(2), P.d2_xin_dxn_piplus_q1),
        ("d2_xin_piplus_q1", "second xi_n derivative of pi+ q_-1",
         lambda: Factor(project=True).apply(q1).d_xn(2), P.d2_xin_piplus_q1),
        ("d2_xin_q1", "second xi_n derivative of q_-1",
         lambda: Factor(xin=2).apply(q1), P.d2_xin_q1),
        ("d2_xin_dxn_q1", "d_xin^2 d_xn q_-1",
         lambda: Factor(x_key=(NORMAL,), xin=2).apply(q1), P.d2_xin_dxn_q1),
        ("dxin_piplus_q1", "first xi_n derivative of pi+ q_-1",
         lambda: Factor(project=True).apply(q1).d_xn(1), P.dxin_piplus_q1),
        ("dxin_q1", "first xi_n derivative of q_-1",
         lambda: Factor(xin=1).apply(q1), P.dxin_q1),
        ("dxin_piplus_sigma2_dirac", "first xi_n derivative of pi+ of the order -2 Dirac symbol",
         lambda: Factor(project=True).apply(inverse.sigma2_dirac).d_xn(1), P.dxin_piplus_sigma2_dirac),
        ("piplus_cxi_over_e2", "pi+ [c(xi)/|xi|^4]",
         lambda: (L.c_xi_sym() * L.inv_e(2)).restrict().pi_plus(), P.piplus_cxi_over_e2),
        ("piplus_pairing_cxi_over_e2", "pi+ [g(X,xi) c(xi)/|xi|^4]",
         lambda: (L.c_xi_sym() * L.inv_e(2, _g_full())).restrict().pi_plus(), P.piplus_pairing_cxi_over_e2),
        ("piplus_cx_over_e", "pi+ [c(X)/|xi|^2]",
         lambda: (_c_one_form() * L.inv_e(1)).restrict().pi_plus(), P.piplus_cx_over_e),
    ]
    for i in (1, 2, 3, 4):
        factor_rows.append((f"dxin_piplus_dxi{i}_q1", f"d_xin pi+ d_xi{i} q_-1",
                            lambda i=i: Factor(alpha=(i,), project=True).apply(q1).d_xn(1),
                            lambda i=i: P.dxin_piplus_dxi_q1(i)))
    for name, desc, eng, pr in factor_rows:
        rows.append(_check(name, desc, eng(), pr()))
    return rows


R3_NOTES = {
    "zeroth": "published term is -q_-1 Q_X; the recursion term is -q_-1 p0_D Q_X with p0_D = -h'(0) c(dx_n)",
    "quadratic": "the recursion term -q_-1 c(X) Q_X has no published counterpart",
}


def r3_checks(inverse: InverseSymbols) -> list[FormulaRow]:
    """Recursion R_-3 against the published expansion, group by group."""
    ours = inverse.r3_groups()
    theirs = P.printed_r3_groups()
    rows = []
    total_engine, total_printed = SymPoles(), SymPoles()
    for name, jet in ours.items():
        e = jet.at().restrict()
        p = theirs[name].restrict() if name in theirs else SymPoles()
        total_engine, total_printed = total_engine + e, total_printed + p
        row = _check(f"r3_{name}", f"R_-3 group '{name}'", e, p)
        if not row.match and name in R3_NOTES:
            row.detail = R3_NOTES[name] + "; " + row.detail
        rows.append(row)
    rows.append(_check("r3_total", "R_-3 term-for-term (sum of groups)", total_engine, total_printed))
    return rows


def sigma3_check() -> FormulaRow:
    """Published order -3 Dirac symbol at zero boundary curvature vs the
    recursion in the flat-boundary model."""
    rec = InverseSymbols(BoundaryModel(flat=True)).sigma3_dirac_recursion.at().restrict()
    return _check("sigma3_dirac_flat", "published order -3 Dirac symbol (curvature set to 0) vs recursion",
                  rec, L.sigma3_dirac_flat().restrict())


# root-cause notes ---------------------------------------------------------

def _with_left(engine: CaseEngine, n: int, left: SymPoles, comp: str, right_factor: Factor | None = None,
               sign: int = 1) -> dict[str, G]:
    c = case_by_number(n)
    rf = right_factor or Factor(x_key=(NORMAL,) * c.k, xin=c.j + 1)
    right = rf.apply(engine.components[c.l][comp])
    return to_vector(line_and_sphere(left.trace_with(right)) * case_prefactor(c) * sign)


def _average(f: XiPoles) -> XiPoles:
    """Cosphere average (divide the S^3 integral by Omega3) of a trace."""
    return f.map_coefficients(lambda n: sphere_integrate(n).subs({PI: Scalar.const(1)}) * HALF).reduced()


def _pv(v: dict[str, G]) -> str:
    return vector_text(v, Fraction(1, 2)) + " per pi*Omega3"


def _note_2(engine, results):
    v = _with_left(engine, 2, P.d2_xn_piplus_q1(), "D")
    return ("published d_xn^2 pi+ q_-1 differs from the engine's by -(h1^2 - h2) c(xi')/(2(xi_n - i)); "
            f"with the published factor the engine gives {_pv(v)}, which accounts for the h2 "
            "coefficient but not the h1^2 coefficient")


def _note_6(engine, results):
    v = _with_left(engine, 6, P.d2_xin_piplus_q1(), "D")
    return ("published d_xin^2 pi+ q_-1 carries i/2 on c(dx_n) where the engine has i; with the "
            f"published factor the engine gives {_pv(v)}; the published value repeats its case 2 value")


def _note_7(engine, results):
    inv = engine.inverse
    left = Factor(x_key=(NORMAL,), xin=2, project=True).apply(inv.q1)
    eng = _average(left.trace_with(Factor().apply(inv.q2_one_form)))
    pr = P.case7_one_form_trace()
    return (f"one-form trace by parts: engine {eng!r}, published {pr!r}; the published numerator "
            "-6 xi_n^2 + 8i xi_n + 6 should read -6 (xi_n - i)^2 = -6 xi_n^2 + 12i xi_n + 6; line "
            f"integrals {eng.integrate_line()} vs {pr.integrate_line()}")


def _note_8(engine, results):
    inv = engine.inverse
    eng = XiPoles.zero()
    for i in (1, 2, 3, 4):
        a = Factor(alpha=(i,), xin=1, project=True).apply(inv.q1)
        b = Factor(x_key=(i,)).apply(inv.q2_one_form)
        eng = eng + a.trace_with(b)
    pr = P.case8_one_form_trace()
    d = (eng - pr).reduced()
    d = XiPoles(sphere_normal_form(d.num), d.a, d.b).reduced()
    return ("one-form trace by parts, summed over the tangential direction: the engine's "
            "xi_i xi_j d_i X_j numerator is -2 xi_n^3 + 6i xi_n^2 + 6 xi_n - 2i, the published one has "
            f"-2 xi_n where +6 xi_n belongs (difference {d!r}; its odd terms integrate to zero); "
            f"cosphere integrals {sphere_integrate(eng.integrate_line())} vs "
            f"{sphere_integrate(pr.integrate_line())}")


def _note_9(engine, results):
    dd = _with_left(engine, 9, P.d2_xin_piplus_q1(), "D", Factor(x_key=(NORMAL,)), sign=-1)
    dx_ = _with_left(engine, 9, P.d2_xin_piplus_q1(), "X", Factor(x_key=(NORMAL,)), sign=-1)
    return ("by parts the case reads 1/2 int tr[d_xin^2 pi+ q_-1 x d_xn q_-2]; with the published "
            f"d_xin^2 pi+ q_-1 (i/2 on c(dx_n)) the engine gives pure-Dirac {_pv(dd)} and one-form "
            f"{_pv(dx_)}; neither reproduces the published value, so further slips remain downstream; "
            "the published pure-Dirac part is kept as imported comparison data")


def _note_13(engine, results):
    r = results.get(13) or engine.evaluate(case_by_number(13))
    return ("the one-form parts are engine-derived from the recursion: "
            + "; ".join(f"{p.pair}: {_pv(p.vector)}" for p in r.parts)
            + "; the a_n^2 coefficient was confirmed independently by hand")


def _note_14(engine, results):
    r = results.get(14) or engine.evaluate(case_by_number(14))
    alt = CaseEngine(constants=engine.constants, r3_source="printed")
    dx_ = alt.evaluate(case_by_number(14)).part("DX")
    dd = r.part("DD")
    return ("pure-Dirac part from the published order -3 symbol: "
            f"{_pv(dd.vector)} (published {_pv(_dd_printed(14))}); "
            f"with the published R_-3 the one-form part becomes {_pv(dx_.vector)}; "
            "the published R_-3 replaces -q_-1 p0 Q_X by -q_-1 Q_X and drops the c(X)-quadratic term")


_NOTES = {
    2: _note_2, 6: _note_6, 7: _note_7, 8: _note_8, 9: _note_9, 13: _note_13, 14: _note_14,
    10: lambda e, r: "same integral as case 9; see case 9",
    12: lambda e, r: "the published value repeats case 7; the engine one-form part also equals case 7's",
    15: lambda e, r: "same integral as case 14; see case 14",
}


def root_cause_notes(engine: CaseEngine, results: dict[int, CaseResult],
                     which: set[int] | None = None) -> dict[int, str]:
    """Attribution notes for mismatched cases, recomputed from the engine."""
    which = set(_NOTES) if which is None else which
    return {n: fn(engine, results) for n, fn in _NOTES.items() if n in which}


def _dd_printed(n: int) -> dict[str, G]:
    total, part = PRINTED_CASES[n], PRINTED_ONE_FORM_PARTS.get(n, {})
    return ordered({t: total.get(t, G()) - part.get(t, G()) for t in total})


# internal invariants ------------------------------------------------------

def case_invariants(engine: CaseEngine, results: dict[int, CaseResult]) -> list[InvariantRow]:
    rows = []
    for a, b in ((9, 10), (14, 15)):
        ok = results[a].vector == results[b].vector
        rows.append(InvariantRow(f"case {a} = case {b}", ok,
                                 "" if ok else f"{vector_text(results[a].vector)} vs {vector_text(results[b].vector)}"))
    ibp = engine.case7_by_parts()
    direct = results[7].vector
    rows.append(InvariantRow("case 7 by parts = direct", ibp == direct,
                             "" if ibp == direct else f"{vector_text(ibp)} vs {vector_text(direct)}"))
    bad = []
    for c in enumerate_cases():
        for pair, s in engine.volume_channel(c).items():
            if not s.is_zero():
                bad.append(f"case {c.number} {pair}")
    rows.append(InvariantRow("full-word channel vanishes", not bad, ", ".join(bad)))
    total = sum_vectors(list(results.values()))
    by_parts = vector_add(*(p.vector for r in results.values() for p in r.parts))
    rows.append(InvariantRow("total = sum of component parts", total == by_parts))
    imag = sorted({f"case {n} {t}" for n, r in results.items() for p in r.parts
                   for t, c in p.vector.items() if c.im})
    engine_imag = [x for x in imag if not _imported(results, x)]
    rows.append(InvariantRow("engine-derived values are real", not engine_imag,
                             "imaginary channels: " + (", ".join(imag) if imag else "none")))
    return rows


def _imported(results: dict[int, CaseResult], label: str) -> bool:
    n = int(label.split()[1])
    tag = label.split()[2]
    return any(p.provenance == "imported" and tag in p.vector for p in results[n].parts)


# report -------------------------------------------------------------------

def case_rows(results: dict[int, CaseResult], notes: dict[int, str]) -> list[CaseRow]:
    rows = []
    for n in sorted(results):
        r = results[n]
        c = r.case
        printed = PRINTED_CASES[n]
        match = vectors_equal(r.vector, printed)
        rows.append(CaseRow(
            number=n, r=c.r, l=c.l, k=c.k, j=c.j, alpha=c.alpha, prefactor=r.prefactor,
            engine=ordered(r.vector), printed=ordered(printed), provenance=r.provenance, match=match,
            parts=[PartRow(p.pair, ordered(p.vector), p.provenance, p.source) for p in r.parts],
            note="" if match else notes.get(n, ""),
        ))
    return rows


def summation_comparisons(engine_total: dict[str, G]) -> list[Comparison]:
    resum = printed_resum()
    out = []
    for tag in sorted(set(normalize_x2(resum)) | set(normalize_x2(PRINTED_TOTAL)), key=_tag_key):
        a = {tag: normalize_x2(resum).get(tag, G())}
        b = {tag: normalize_x2(PRINTED_TOTAL).get(tag, G())}
        out.append(Comparison(f"published per-case re-sum vs published total [{tag}]",
                              "re-sum", ordered(a), "published total", ordered(b), vectors_equal(a, b)))
    out.append(Comparison("engine total vs published total", "engine", engine_total,
                          "published total", ordered(PRINTED_TOTAL), vectors_equal(engine_total, PRINTED_TOTAL)))
    out.append(Comparison("engine total vs published re-sum", "engine", engine_total,
                          "re-sum", resum, vectors_equal(engine_total, resum)))
    conv = geometric_form(PRINTED_TOTAL)
    out.append(Comparison("published total in geometric form vs published geometric form",
                          "converted", conv, "published", ordered(PRINTED_GEOMETRIC),
                          conv == ordered(PRINTED_GEOMETRIC)))
    eng_geo = geometric_form(engine_total)
    out.append(Comparison("engine geometric form vs published geometric form",
                          "engine", eng_geo, "published", ordered(PRINTED_GEOMETRIC),
                          eng_geo == ordered(PRINTED_GEOMETRIC)))
    return out


def _tag_key(tag: str) -> int:
    from .report import ALL_TAGS
    return ALL_TAGS.index(tag)


def build_report(engine: CaseEngine | None = None, cases: list[int] | None = None) -> AuditReport:
    """The audit for the requested cases (default all).  With all fifteen
    cases the report adds totals, the geometric form, symbol checks and the
    case-level invariants."""
    engine = engine or CaseEngine()
    wanted = sorted(cases) if cases else [c.number for c in enumerate_cases()]
    results = {n: engine.evaluate(case_by_number(n)) for n in wanted}
    mismatched = {n for n, r in results.items() if not vectors_equal(r.vector, PRINTED_CASES[n])}
    report = AuditReport(header=list(HEADER), environment={"version": __version__})
    report.cases = case_rows(results, root_cause_notes(engine, results, mismatched))
    if len(results) < len(PRINTED_CASES):
        return report
    total = sum_vectors(list(results.values()))
    resum = printed_resum()
    report.totals = {"engine": total, "published re-sum": resum, "published total": ordered(PRINTED_TOTAL)}
    report.geometric = {
        "engine": geometric_form(total),
        "published re-sum": geometric_form(resum),
        "published total": geometric_form(PRINTED_TOTAL),
        "published geometric": ordered(PRINTED_GEOMETRIC),
    }
    report.comparisons = summation_comparisons(total)
    report.formulas = formula_checks(engine.inverse) + r3_checks(engine.inverse) + [sigma3_check()]
    report.invariants = case_invariants(engine, results)
    return report
