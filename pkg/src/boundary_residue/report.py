"""Audit report: data model and text / JSON / LaTeX emitters.

Every number is serialized as an exact rational string; floats only appear
inside invariant details for quadrature and Monte Carlo rows, together with
their tolerance.
"""
from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Any

from .coefficients import GaussianRational as G
from .published import GEOMETRIC_ORDER, normalize_x2
from .sphere import TAG_ORDER

SCHEMA = "boundary-residue-audit/1"

TAG_TEXT = {
    "H1SQ": "h1^2", "H2": "h2", "SB": "s_bd", "AN_H1": "an*h1", "DAN": "dn(an)",
    "XP2": "|X'|^2", "XP2_H1": "|X'|^2*h1", "AN2": "an^2", "DIVX": "div(X')", "X2": "|X|^2",
    "K2": "K^2", "SM": "s_M", "AN_K": "an*K", "XP2_K": "|X'|^2*K",
}
TAG_LATEX = {
    "H1SQ": r"(h'(0))^{2}", "H2": r"h''(0)", "SB": r"s_{\partial M}", "AN_H1": r"a_{n}h'(0)",
    "DAN": r"\partial_{x_n}(a_{n})", "XP2": r"|X'|^{2}", "XP2_H1": r"|X'|^{2}h'(0)", "AN2": r"a_{n}^{2}",
    "DIVX": r"C_{1}^{1}(\nabla^{\partial M}(X'|_{\partial M})^{*})", "X2": r"|X|^{2}",
    "K2": r"K^{2}", "SM": r"s_{M}", "AN_K": r"a_{n}K", "XP2_K": r"|X'|^{2}K",
}
ALL_TAGS = list(TAG_ORDER) + [t for t in GEOMETRIC_ORDER if t not in TAG_ORDER]


# exact (de)serialization --------------------------------------------------

def g_to_json(c: G) -> dict[str, str]:
    return {"re": str(c.re), "im": str(c.im)}


def g_from_json(d: dict[str, str]) -> G:
    return G(Fraction(d["re"]), Fraction(d["im"]))


def vector_to_json(v: dict[str, G]) -> dict[str, dict[str, str]]:
    return {t: g_to_json(v[t]) for t in ALL_TAGS if t in v and v[t]}


def vector_from_json(d: dict) -> dict[str, G]:
    return {t: g_from_json(c) for t, c in d.items()}


def ordered(v: dict[str, G]) -> dict[str, G]:
    return {t: v[t] for t in ALL_TAGS if t in v and v[t]}


def vectors_equal(a: dict[str, G], b: dict[str, G]) -> bool:
    return ordered(normalize_x2(a)) == ordered(normalize_x2(b))


def vector_diff(a: dict[str, G], b: dict[str, G]) -> dict[str, G]:
    a, b = normalize_x2(a), normalize_x2(b)
    return ordered({t: a.get(t, G()) - b.get(t, G()) for t in set(a) | set(b)})


# text formatting ----------------------------------------------------------

def coeff_text(c: G) -> str:
    if c.im == 0:
        return str(c.re)
    if c.re == 0:
        return f"{c.im}i"
    sign = "-" if c.im < 0 else "+"
    return f"{c.re} {sign} {abs(c.im)}i"


def vector_text(v: dict[str, G], scale: Fraction = Fraction(1)) -> str:
    """Human form, e.g. (29/64)h1^2 - (3/8)h2."""
    parts = []
    for t, c in ordered(v).items():
        c = c * G(scale)
        if c.im == 0:
            sign = "-" if c.re < 0 else "+"
            body = f"({abs(c.re)}){TAG_TEXT[t]}"
        else:
            sign = "+"
            body = f"({coeff_text(c)}){TAG_TEXT[t]}"
        parts.append((sign, body))
    if not parts:
        return "0"
    out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


def pi_omega_text(v: dict[str, G]) -> str:
    """A pi^3 vector written per pi*Omega_3, the unit of the printed table."""
    return f"{vector_text(v, Fraction(1, 2))} [x pi*Omega3]"


# data model ---------------------------------------------------------------

@dataclass
class PartRow:
    pair: str
    vector: dict
    provenance: str
    source: str = ""


@dataclass
class CaseRow:
    number: int
    r: int
    l: int
    k: int
    j: int
    alpha: int
    prefactor: G
    engine: dict
    printed: dict
    provenance: str
    match: bool
    parts: list[PartRow] = field(default_factory=list)
    note: str = ""


@dataclass
class Comparison:
    label: str
    left_name: str
    left: dict
    right_name: str
    right: dict
    match: bool
    note: str = ""


@dataclass
class FormulaRow:
    name: str
    description: str
    match: bool
    detail: str = ""


@dataclass
class InvariantRow:
    name: str
    passed: bool
    detail: str = ""


@dataclass
class AuditReport:
    header: list[str] = field(default_factory=list)
    cases: list[CaseRow] = field(default_factory=list)
    totals: dict[str, dict] = field(default_factory=dict)
    geometric: dict[str, dict] = field(default_factory=dict)
    comparisons: list[Comparison] = field(default_factory=list)
    formulas: list[FormulaRow] = field(default_factory=list)
    invariants: list[InvariantRow] = field(default_factory=list)
    environment: dict[str, Any] = field(default_factory=dict)

    @property
    def mismatches(self) -> bool:
        return (any(not c.match for c in self.cases)
                or any(not c.match for c in self.comparisons)
                or any(not f.match for f in self.formulas))

    @property
    def invariants_ok(self) -> bool:
        return all(i.passed for i in self.invariants)

    # JSON -------------------------------------------------------------------
    def to_dict(self) -> dict:
        return {
            "schema": SCHEMA,
            "unit": "pi^3",
            "header": list(self.header),
            "cases": [_case_to_dict(c) for c in self.cases],
            "totals": {k: vector_to_json(v) for k, v in self.totals.items()},
            "geometric": {k: vector_to_json(v) for k, v in self.geometric.items()},
            "comparisons": [
                {"label": c.label, "left_name": c.left_name, "left": vector_to_json(c.left),
                 "right_name": c.right_name, "right": vector_to_json(c.right),
                 "match": c.match, "note": c.note}
                for c in self.comparisons
            ],
            "formulas": [asdict(f) for f in self.formulas],
            "invariants": [asdict(i) for i in self.invariants],
            "environment": dict(self.environment),
            "flags": {"published_mismatch": self.mismatches, "invariants_ok": self.invariants_ok},
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, ensure_ascii=True) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "AuditReport":
        d = json.loads(text)
        if d.get("schema") != SCHEMA:
            raise ValueError(f"unknown report schema {d.get('schema')!r}")
        return cls(
            header=list(d["header"]),
            cases=[_case_from_dict(c) for c in d["cases"]],
            totals={k: vector_from_json(v) for k, v in d["totals"].items()},
            geometric={k: vector_from_json(v) for k, v in d["geometric"].items()},
            comparisons=[
                Comparison(c["label"], c["left_name"], vector_from_json(c["left"]),
                           c["right_name"], vector_from_json(c["right"]), c["match"], c["note"])
                for c in d["comparisons"]
            ],
            formulas=[FormulaRow(**f) for f in d["formulas"]],
            invariants=[InvariantRow(**i) for i in d["invariants"]],
            environment=dict(d["environment"]),
        )

    # text -------------------------------------------------------------------
    def to_text(self) -> str:
        lines: list[str] = []
        for h in self.header:
            lines.append(f"# {h}")
        if self.cases:
            lines.append("")
            lines.append("Cases (engine value; printed value; per pi*Omega3):")
        for c in self.cases:
            status = "MATCH" if c.match else "MISMATCH"
            lines.append(f"Case {c.number:2d}  r={c.r} l={c.l} k={c.k} j={c.j} |alpha|={c.alpha}  "
                         f"prefactor {coeff_text(c.prefactor)}  [{c.provenance}]")
            lines.append(f"    engine : {pi_omega_text(c.engine)}  {status}")
            if not c.match:
                lines.append(f"    printed: {pi_omega_text(c.printed)}")
            for p in c.parts:
                src = f" ({p.source})" if p.source else ""
                lines.append(f"    part {p.pair}: {vector_text(p.vector, Fraction(1, 2))} [{p.provenance}{src}]")
            if c.note:
                for n in c.note.split("\n"):
                    lines.append(f"    note: {n}")
        if self.totals:
            lines.append("")
            lines.append("Totals (per pi*Omega3):")
            for k, v in self.totals.items():
                lines.append(f"  {k:16s} {vector_text(v, Fraction(1, 2))}")
        if self.geometric:
            lines.append("")
            lines.append("Geometric form (per pi^3):")
            for k, v in self.geometric.items():
                lines.append(f"  {k:16s} {vector_text(v)}")
        if self.comparisons:
            lines.append("")
            lines.append("Comparisons (per pi^3):")
            for c in self.comparisons:
                status = "MATCH" if c.match else "MISMATCH"
                lines.append(f"  {c.label}: {status}")
                if not c.match:
                    lines.append(f"    {c.left_name}: {vector_text(c.left)}")
                    lines.append(f"    {c.right_name}: {vector_text(c.right)}")
                    lines.append(f"    difference: {vector_text(vector_diff(c.left, c.right))}")
                if c.note:
                    lines.append(f"    note: {c.note}")
        if self.formulas:
            lines.append("")
            lines.append("Closed-form symbol checks:")
            for f in self.formulas:
                lines.append(f"  {'MATCH   ' if f.match else 'MISMATCH'} {f.name}: {f.description}")
                if f.detail:
                    lines.append(f"           {f.detail}")
        if self.invariants:
            lines.append("")
            lines.append("Invariants:")
            for i in self.invariants:
                lines.append(f"  {'PASS' if i.passed else 'FAIL'} {i.name}" + (f": {i.detail}" if i.detail else ""))
        if self.environment:
            lines.append("")
            lines.append("Environment: " + ", ".join(f"{k}={v}" for k, v in sorted(self.environment.items())))
        lines.append("")
        lines.append(f"published_mismatch={'yes' if self.mismatches else 'no'} "
                     f"invariants={'ok' if self.invariants_ok else 'FAILED'}")
        return "\n".join(lines) + "\n"

    # LaTeX ------------------------------------------------------------------
    def to_latex(self) -> str:
        out = [r"\documentclass{article}", r"\usepackage{amsmath}", r"\begin{document}"]
        if self.cases:
            out.append(r"\begin{tabular}{rlll}")
            out.append(r"case & engine $(\pi\Omega_3)$ & printed $(\pi\Omega_3)$ & status\\ \hline")
            for c in self.cases:
                out.append(f"{c.number} & ${latex_vector(c.engine, Fraction(1, 2))}$ & "
                           f"${latex_vector(c.printed, Fraction(1, 2))}$ & "
                           f"{'match' if c.match else 'mismatch'}\\\\")
            out.append(r"\end{tabular}")
        for name, v in self.geometric.items():
            out.append(f"% {name}")
            out.append(r"\begin{equation*}")
            out.append(geometric_shape(v))
            out.append(r"\end{equation*}")
        out.append(r"\end{document}")
        return "\n".join(out) + "\n"


def _case_to_dict(c: CaseRow) -> dict:
    return {
        "number": c.number, "r": c.r, "l": c.l, "k": c.k, "j": c.j, "alpha": c.alpha,
        "prefactor": g_to_json(c.prefactor),
        "engine": vector_to_json(c.engine), "printed": vector_to_json(c.printed),
        "provenance": c.provenance, "match": c.match,
        "parts": [{"pair": p.pair, "vector": vector_to_json(p.vector),
                   "provenance": p.provenance, "source": p.source} for p in c.parts],
        "note": c.note,
    }


def _case_from_dict(d: dict) -> CaseRow:
    return CaseRow(
        number=d["number"], r=d["r"], l=d["l"], k=d["k"], j=d["j"], alpha=d["alpha"],
        prefactor=g_from_json(d["prefactor"]),
        engine=vector_from_json(d["engine"]), printed=vector_from_json(d["printed"]),
        provenance=d["provenance"], match=d["match"],
        parts=[PartRow(p["pair"], vector_from_json(p["vector"]), p["provenance"], p["source"]) for p in d["parts"]],
        note=d["note"],
    )


def latex_coeff(c: G) -> str:
    def frac(x: Fraction) -> str:
        s = "-" if x < 0 else ""
        x = abs(x)
        return f"{s}{x.numerator}" if x.denominator == 1 else f"{s}\\frac{{{x.numerator}}}{{{x.denominator}}}"

    if c.im == 0:
        return frac(c.re)
    if c.re == 0:
        return frac(c.im) + "i"
    return f"\\big({frac(c.re)}{'+' if c.im > 0 else '-'}{frac(abs(c.im))}i\\big)"


def latex_vector(v: dict[str, G], scale: Fraction = Fraction(1)) -> str:
    terms = []
    for t in [t for t in GEOMETRIC_ORDER if t in v] + [t for t in ordered(v) if t not in GEOMETRIC_ORDER]:
        c = v[t] * G(scale)
        if not c:
            continue
        body = latex_coeff(c)
        if body in ("1", "-1"):
            body = body[:-1]
        else:
            body += "\\,"
        if not body.startswith("-") and terms:
            body = "+" + body
        terms.append(body + TAG_LATEX[t])
    return "".join(terms) if terms else "0"


def geometric_shape(v: dict[str, G]) -> str:
    """(1/16)(a K^2 + b s_M + c s_bd) + the one-form terms, times pi^3."""
    inner = {t: v[t] * G(16) for t in ("K2", "SM", "SB") if v.get(t)}
    outer = {t: v[t] for t in ("AN_K", "XP2", "XP2_K", "AN2", "DAN", "DIVX") if v.get(t)}
    inner_tex = latex_vector(inner) if inner else "0"
    outer_tex = latex_vector(outer)
    if outer and not outer_tex.startswith("-"):
        outer_tex = "+" + outer_tex
    return (f"\\int_{{\\partial M}}\\Big[\\frac{{1}}{{16}}\\Big({inner_tex}\\Big)"
            f"{outer_tex if outer else ''}\\Big]\\pi^{{3}}\\,\\mathrm{{dvol}}_{{\\partial M}}")
