from fractions import Fraction
from itertools import product

import pytest

from boundary_residue.coefficients import PI, Scalar, V
from boundary_residue.oracle import moment_oracle, monte_carlo_moment
from boundary_residue.sphere import (ContractionError, canonical_components, contract, moment,
                                     riemann, sphere_integrate)


def test_area_and_second_moments():
    assert moment((0, 0, 0, 0)) == 2                  # Omega_3 = 2 pi^2
    for j in range(4):
        e = tuple(2 if k == j else 0 for k in range(4))
        assert moment(e) == Fraction(1, 2)            # pi^2/2 delta_ij
    assert moment((1, 1, 0, 0)) == 0


@pytest.mark.parametrize("e", [e for e in product(range(7), repeat=4) if sum(e) <= 6])
def test_moments_match_gamma_formula(e):
    assert moment(e) == moment_oracle(e)


def test_frozen_moments():
    # derived from the Gamma-function oracle
    assert moment((4, 0, 0, 0)) == Fraction(1, 4)
    assert moment((2, 2, 0, 0)) == Fraction(1, 12)
    assert moment((2, 2, 2, 0)) == Fraction(1, 96)
    assert moment((6, 0, 0, 0)) == Fraction(5, 32)


def test_monte_carlo_agrees():
    for e in ((4, 0, 0, 0), (2, 2, 0, 0), (1, 3, 0, 0)):
        assert monte_carlo_moment(e, seed=3) == pytest.approx(float(moment(e)), abs=3e-3)


def test_sphere_integrate_adds_pi_squared():
    s = V("XI1", 2) * V("H1") + V("XI2")
    assert sphere_integrate(s) == V("H1") * V(PI, 2) * Fraction(1, 2)


def test_riemann_symmetries():
    assert riemann(1, 2, 3, 4) == -riemann(2, 1, 3, 4)
    assert riemann(1, 2, 3, 4) == riemann(3, 4, 1, 2)
    assert riemann(1, 1, 2, 3).is_zero()
    bianchi = riemann(1, 2, 3, 4) + riemann(1, 3, 4, 2) + riemann(1, 4, 2, 3)
    assert bianchi.is_zero()
    assert len(canonical_components()) == 20          # independent components in dim 4


def test_contraction():
    s = sum((V(f"X{j}", 2) for j in range(1, 5)), Scalar()) * 3
    assert contract(s) == V("XP2") * 3
    with pytest.raises(ContractionError):
        contract(V("X1", 2))
