import random
from cmath import pi

import pytest
from hypothesis import given, settings, strategies as st

from boundary_residue.coefficients import GaussianRational as G
from boundary_residue.coefficients import PI, Scalar, V
from boundary_residue.oracle import exact_numeric, quadrature_line, random_assignment
from boundary_residue.verification import random_poles
from boundary_residue.xirational import XN, DecayError, XiPoles, sphere_normal_form

X = V(XN)
seeds = st.integers(0, 100_000)


def test_basic_line_integrals():
    # int dx/(1+x^2) = pi ; int dx/(1+x^2)^2 = pi/2
    assert XiPoles(Scalar.const(1), 1, 1).integrate_line() == V(PI)
    val = XiPoles(Scalar.const(1), 2, 2).integrate_line()
    assert exact_numeric(val, {}) == pytest.approx(pi / 2)


def test_slow_decay_is_rejected():
    with pytest.raises(DecayError):
        XiPoles(X, 1, 1).integrate_line()


def test_pi_plus_of_simple_fractions():
    f = XiPoles(Scalar.const(1), 1, 1)           # 1/(x^2+1) = (i/2)[1/(x+i) - 1/(x-i)]
    plus = f.pi_plus()
    assert plus.b == 0
    assert (plus + f.pi_minus()).equals(f)


@settings(max_examples=50)
@given(seeds)
def test_projections_are_complementary(seed):
    f = random_poles(random.Random(seed))
    plus = f.pi_plus()
    assert plus.pi_plus().equals(plus)
    assert f.pi_minus().pi_plus().is_zero()
    assert (plus + f.pi_minus()).equals(f)


@settings(max_examples=50)
@given(seeds)
def test_partial_fractions_recompose(seed):
    f = random_poles(random.Random(seed))
    A, B, P = f.partial_fractions()
    back = XiPoles(P)
    for p, c in A.items():
        back = back + XiPoles(c, p, 0)
    for q, c in B.items():
        back = back + XiPoles(c, 0, q)
    assert back.equals(f)


@settings(max_examples=25, deadline=None)
@given(seeds)
def test_residue_matches_quadrature(seed):
    rng = random.Random(seed)
    f = random_poles(rng)
    point = random_assignment(("A", "B"), rng)
    exact = exact_numeric(f.integrate_line(), point)
    assert quadrature_line(f, point) == pytest.approx(exact, rel=1e-8, abs=1e-10)


@settings(max_examples=25)
@given(seeds)
def test_derivative_matches_difference_quotient(seed):
    rng = random.Random(seed)
    f = random_poles(rng)
    point = random_assignment(("A", "B"), rng)
    fn, dfn = f.numeric(point), f.d_xn().numeric(point)
    x, h = 0.37, 1e-6
    assert dfn(x) == pytest.approx((fn(x + h) - fn(x - h)) / (2 * h), rel=1e-5, abs=1e-6)


def test_sphere_normal_form():
    xi4sq = V("XI4", 2)
    rest = Scalar.const(1) - V("XI1", 2) - V("XI2", 2) - V("XI3", 2)
    assert sphere_normal_form(xi4sq) == rest
    assert sphere_normal_form(V("XI4")) == V("XI4")
