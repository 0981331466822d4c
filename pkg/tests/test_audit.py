from fractions import Fraction

import pytest

from boundary_residue.audit import build_report, geometric_form, printed_resum
from boundary_residue.coefficients import GaussianRational as G
from boundary_residue.published import PRINTED_GEOMETRIC, PRINTED_TOTAL, normalize_x2

F = Fraction


@pytest.fixture(scope="module")
def report():
    return build_report()


def test_geometric_conversion_rules():
    assert geometric_form({"AN_H1": G(1)}) == {"AN_K": G(F(-1, 2))}
    assert geometric_form({"H1SQ": G(1)}) == {"K2": G(F(1, 4))}
    # h2 = (3 h1^2 + s_bd - s_M)/4
    assert geometric_form({"H2": G(1)}) == {"K2": G(F(3, 16)), "SB": G(F(1, 4)), "SM": G(F(-1, 4))}
    assert geometric_form({"X2": G(-1), "AN2": G(-2)}) == {"XP2": G(-1), "AN2": G(-3)}


def test_published_total_converts_to_published_geometric_form():
    assert geometric_form(PRINTED_TOTAL) == dict(PRINTED_GEOMETRIC)


def test_resum_of_published_table():
    r = printed_resum()
    assert r["H1SQ"] == G(F(399, 128)) and r["H2"] == G(F(-29, 16))
    assert r["SB"] == G(F(-5, 48), F(-5, 16))
    assert PRINTED_TOTAL["SB"] == G(F(-17, 48), F(-5, 16))
    assert normalize_x2(r) != normalize_x2(PRINTED_TOTAL)


def test_every_mismatch_carries_a_note(report):
    mismatched = [c for c in report.cases if not c.match]
    assert {c.number for c in mismatched} == {2, 6, 7, 8, 9, 10, 12, 13, 14, 15}
    assert all(c.note for c in mismatched)


def test_matching_cases(report):
    assert {c.number for c in report.cases if c.match} == {1, 3, 4, 5, 11}


def test_invariants_pass(report):
    assert report.invariants and report.invariants_ok
    assert report.mismatches


def test_case8_is_the_only_imaginary_channel(report):
    row = next(i for i in report.invariants if i.name == "engine-derived values are real")
    assert row.detail.endswith("case 8 SB")


def test_single_case_report_has_no_totals():
    r = build_report(cases=[4])
    assert len(r.cases) == 1 and not r.totals and not r.invariants
    assert r.cases[0].match
