import random
from fractions import Fraction

import pytest

from boundary_residue.cases import CaseEngine, case_by_number, case_prefactor, enumerate_cases, sum_vectors
from boundary_residue.coefficients import GaussianRational as G
from boundary_residue.coefficients import xi
from boundary_residue.oracle import exact_numeric, quadrature_line
from boundary_residue.symbols.jets import Unavailable

F = Fraction

# engine values, coefficients of pi^3 (frozen; the residue step is
# cross-checked against quadrature below)
ENGINE = {
    1: {},
    2: {"H1SQ": F(7, 8), "H2": F(-1, 2)},
    3: {"SB": F(-1, 4)},
    4: {"H1SQ": F(-5, 8)},
    5: {},
    6: {"H1SQ": F(7, 8), "H2": F(-1, 2)},
    7: {"H1SQ": F(39, 16), "AN_H1": F(-3, 2)},
    8: {"SB": G(F(3, 8), F(-5, 16)), "DIVX": F(-3, 2)},
    9: {"H1SQ": F(-69, 16), "H2": F(9, 4), "AN_H1": F(3, 2), "DAN": F(-3, 2)},
    10: {"H1SQ": F(-69, 16), "H2": F(9, 4), "AN_H1": F(3, 2), "DAN": F(-3, 2)},
    11: {},
    12: {"H1SQ": F(39, 16), "AN_H1": F(-3, 2)},
    13: {"H1SQ": F(-111, 16), "AN_H1": F(9), "XP2": F(-3, 2), "AN2": F(-3)},
    14: {"H1SQ": F(209, 32), "H2": F(-27, 8), "SB": F(-5, 24), "AN_H1": F(-9, 2), "DAN": F(3, 2),
         "XP2": F(3, 4), "AN2": F(3, 2), "DIVX": F(3, 4)},
}
ENGINE[15] = ENGINE[14]


@pytest.fixture(scope="module")
def engine():
    return CaseEngine()


@pytest.fixture(scope="module")
def results(engine):
    return {c.number: engine.evaluate(c) for c in enumerate_cases()}


def test_fifteen_families_obey_the_index_constraint():
    cases = enumerate_cases()
    assert [c.number for c in cases] == list(range(1, 16))
    for c in cases:
        assert c.r + c.l - c.k - c.j - c.alpha == -4
        assert c.r <= -1 and c.l <= -1


def test_prefactors():
    # (-i)^(|alpha|+j+k+1)/(j+k+1)!
    c = case_by_number(2)
    assert case_prefactor(c) == G(0, -1) ** 3 * G(F(1, 6))


@pytest.mark.parametrize("n", range(1, 16))
def test_engine_values(results, n):
    want = {t: G.coerce(v) for t, v in ENGINE[n].items()}
    assert results[n].vector == want


def test_provenance(results):
    assert results[3].provenance == "imported"
    assert "imported" in results[8].provenance
    assert results[2].provenance == "engine"
    assert all(p.provenance == "engine" for n in (9, 10, 14, 15) for p in results[n].parts)


def test_one_form_channels_cancel_in_the_total(results):
    total = sum_vectors(list(results.values()))
    assert set(total) == {"H1SQ", "H2", "SB"}
    assert total["H1SQ"] == G(F(7, 2)) and total["H2"] == G(F(-13, 4))


def test_missing_constants_are_reported():
    with pytest.raises(Unavailable):
        CaseEngine(constants=[]).evaluate(case_by_number(3))


def test_printed_r3_variant():
    v = CaseEngine(r3_source="printed").evaluate(case_by_number(14))
    x = {t: c for p in v.parts if p.pair == "DX" for t, c in p.vector.items()}
    assert x == {"AN_H1": G(-3), "DAN": G(F(3, 2)), "DIVX": G(F(3, 4))}


@pytest.mark.parametrize("n", [2, 4, 6, 7, 9, 12, 13, 14])
def test_line_integrals_agree_with_quadrature(engine, n):
    rng = random.Random(n)
    c = case_by_number(n)
    point = {name: G(F(rng.randint(-9, 9), rng.randint(1, 5)))
             for name in ("H1", "H2", "AN", "DAN", "X1", "X2", "X3", "X4")}
    point.update({xi(j): G(F(1, 2)) for j in range(1, 5)})
    comps = engine.components
    checked = 0
    for left in comps[c.r].values():
        for right in comps[c.l].values():
            try:
                items = engine.integrands(c, left, right)
            except Unavailable:
                continue
            for f, _ in items:
                names = {v for m in f.num.terms for v, _ in m} - {"XN"}
                full = dict(point)
                full.update({v: G(F(1, 3)) for v in names if v not in full})
                exact = exact_numeric(f.integrate_line(), full)
                assert quadrature_line(f, full) == pytest.approx(exact, rel=1e-7, abs=1e-9)
                checked += 1
    assert checked
