from fractions import Fraction

import pytest

from boundary_residue.coefficients import GaussianRational as G
from boundary_residue.constants import ConstantsError, default_constants, dump_constants, parse_constants

GOOD = 'case=8 part=DD monomial=SB re=3/8 im=-5/16 pi=3 source="a \\"quoted\\" note"'


def test_parse_one_record():
    (rec,) = parse_constants(GOOD)
    assert rec.case == 8 and rec.part == "DD" and rec.monomial == "SB"
    assert rec.value == G(Fraction(3, 8), Fraction(-5, 16))
    assert rec.source == 'a "quoted" note'


def test_roundtrip_of_bundled_table():
    recs = default_constants()
    assert {r.case for r in recs} == {3, 8, 9, 10, 14, 15}
    assert parse_constants(dump_constants(recs)) == recs


def test_comments_and_blank_lines():
    assert parse_constants("# nothing\n\n   \n" + GOOD + "  # trailing\n")


@pytest.mark.parametrize("line, token, message", [
    ('case=3 monomial=ZZ re=1 im=0 pi=3 source="x"', "ZZ", "unknown monomial"),
    ('case=3 monomial=SB re=0.25 im=0 pi=3 source="x"', "0.25", "exact rational"),
    ('case=3 monomial=SB re=1 im=0 source="x"', None, "missing field 'pi'"),
    ('case=3 monomial=SB re=1 im=0 pi=3 source="x" colour=red', "colour", "unknown field"),
    ('case=3 part=QQ monomial=SB re=1 im=0 pi=3 source="x"', "QQ", "component pair"),
    ('case=3 monomial=SB re=1 im=0 pi=2 source="x"', "case", "pi=3"),
])
def test_errors_carry_location(line, token, message):
    col = line.index(token) + 1 if token else len(line) + 1
    with pytest.raises(ConstantsError) as err:
        parse_constants("# header\n" + line, "table.txt")
    assert err.value.line == 2 and err.value.col == col
    assert str(err.value).startswith(f"table.txt:2:{col}:")
    assert message in str(err.value)
