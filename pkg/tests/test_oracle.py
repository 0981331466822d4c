import random
from fractions import Fraction
from math import pi

import pytest

from boundary_residue.coefficients import GaussianRational as G
from boundary_residue.coefficients import Scalar, V
from boundary_residue.oracle import (QuadratureError, gamma_rep, identity, matrix_trace, moment_oracle,
                                     quadrature_line, random_clifford)
from boundary_residue.xirational import XN, XiPoles


def test_gammas_square_to_minus_one_and_are_traceless():
    for parity in (1, -1):
        rep = gamma_rep(parity)
        for g in rep.gammas:
            assert matrix_trace(g) == 0
        for a in range(1, 6):
            assert (rep.anticommutator(a, a) == identity() * G(-2)).all()


def test_parities_differ_only_in_the_full_word():
    plus, minus = gamma_rep(1), gamma_rep(-1)
    full = (1 << 5) - 1
    assert (plus.word(full) == minus.word(full) * G(-1)).all()
    assert (plus.word(0b0111) == minus.word(0b0111)).all()


def test_moment_oracle_values():
    assert moment_oracle((0, 0, 0, 0)) == 2
    assert moment_oracle((2, 0, 0, 0)) == Fraction(1, 2)
    assert moment_oracle((1, 0, 0, 0)) == 0
    with pytest.raises(ValueError):
        moment_oracle((1, 2, 3))


def test_quadrature_on_known_integrals():
    assert quadrature_line(XiPoles(Scalar.const(1), 1, 1), {}) == pytest.approx(pi)
    assert quadrature_line(XiPoles(V(XN, 2), 2, 2), {}) == pytest.approx(pi / 2)
    with pytest.raises(QuadratureError):
        quadrature_line(XiPoles(V(XN), 1, 1), {})


def test_random_elements_are_reproducible():
    a = random_clifford(random.Random(5))
    b = random_clifford(random.Random(5))
    assert a == b
