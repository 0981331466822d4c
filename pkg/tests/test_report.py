from boundary_residue.audit import build_report
from boundary_residue.report import AuditReport, g_from_json, g_to_json, pi_omega_text, vector_text
from boundary_residue.coefficients import GaussianRational as G
from fractions import Fraction

import pytest


@pytest.fixture(scope="module")
def report():
    return build_report()


def test_exact_serialisation():
    c = G(Fraction(-7, 24), Fraction(-5, 16))
    assert g_to_json(c) == {"re": "-7/24", "im": "-5/16"}
    assert g_from_json(g_to_json(c)) == c


def test_json_roundtrip_is_lossless(report):
    text = report.to_json()
    back = AuditReport.from_json(text)
    assert back.to_json() == text
    assert back == report


def test_json_has_no_floats(report):
    import json

    def walk(x):
        if isinstance(x, float):
            raise AssertionError(x)
        if isinstance(x, dict):
            for v in x.values():
                walk(v)
        if isinstance(x, list):
            for v in x:
                walk(v)

    walk(json.loads(report.to_json()))


def test_json_structure(report):
    d = report.to_dict()
    assert len(d["cases"]) == 15
    assert set(d["totals"]) == {"engine", "published re-sum", "published total"}
    assert "engine" in d["geometric"]
    assert d["flags"] == {"published_mismatch": True, "invariants_ok": True}


def test_repeatable_output():
    assert build_report().to_json() == build_report().to_json()


def test_text_forms():
    v = {"H1SQ": G(Fraction(29, 32)), "H2": G(Fraction(-3, 4))}
    assert pi_omega_text(v) == "(29/64)h1^2 - (3/8)h2 [x pi*Omega3]"
    assert vector_text({}) == "0"


def test_latex_has_geometric_shape(report):
    tex = report.to_latex()
    assert r"\frac{1}{16}" in tex and "K^{2}" in tex or "K^2" in tex
    assert tex.count(r"\begin{equation*}") == len(report.geometric)
