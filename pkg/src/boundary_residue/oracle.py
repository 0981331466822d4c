"""Brute-force cross-checks that share no code path with the engine.

* Clifford traces from explicit 4x4 gamma matrices in exact arithmetic.
* Line integrals by adaptive quadrature (scipy).
* Sphere moments from the Gamma-function formula, plus a Monte Carlo
  estimate (numpy).
"""
from __future__ import annotations

import random
from fractions import Fraction
from math import factorial, pi
from typing import Mapping

import numpy as np
from scipy import integrate

from .clifford import DIM, CliffordElement, mask_generators
from .coefficients import GaussianRational as G
from .coefficients import Scalar
from .xirational import XiPoles

ONE, ZERO, I = G(1), G(0), G(0, 1)


def _mat(rows) -> np.ndarray:
    return np.array([[G.coerce(x) for x in row] for row in rows], dtype=object)


def _kron(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    n, m = a.shape[0], b.shape[0]
    out = np.empty((n * m, n * m), dtype=object)
    for i in range(n):
        for j in range(n):
            for k in range(m):
                for l in range(m):
                    out[i * m + k, j * m + l] = a[i, j] * b[k, l]
    return out


def _matmul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    n = a.shape[0]
    out = np.empty((n, n), dtype=object)
    for i in range(n):
        for j in range(n):
            acc = ZERO
            for k in range(n):
                acc = acc + a[i, k] * b[k, j]
            out[i, j] = acc
    return out


def identity(n: int = 4) -> np.ndarray:
    return _mat([[1 if i == j else 0 for j in range(n)] for i in range(n)])


_S1 = _mat([[0, 1], [1, 0]])
_S2 = _mat([[0, -I], [I, 0]])
_S3 = _mat([[1, 0], [0, -1]])
_I2 = identity(2)


class GammaRep:
    """Five 4x4 matrices with g_a g_b + g_b g_a = -2 delta_ab.

    ``parity`` = -1 flips the last generator, giving the inequivalent
    representation in which the product of all five has the opposite sign.
    """

    def __init__(self, parity: int = 1):
        hermitian = [_kron(_S1, _S1), _kron(_S1, _S2), _kron(_S1, _S3), _kron(_S2, _I2), _kron(_S3, _I2)]
        self.gammas = [h * I for h in hermitian]
        if parity < 0:
            self.gammas[-1] = self.gammas[-1] * G(-1)
        self.parity = parity
        self._words: dict[int, np.ndarray] = {}

    def word(self, mask: int) -> np.ndarray:
        """Ordered product of the generators in ``mask`` (cached)."""
        if mask not in self._words:
            out = identity()
            for g in mask_generators(mask):
                out = _matmul(out, self.gammas[g - 1])
            self._words[mask] = out
        return self._words[mask]

    def anticommutator(self, a: int, b: int) -> np.ndarray:
        ga, gb = self.gammas[a - 1], self.gammas[b - 1]
        return _matmul(ga, gb) + _matmul(gb, ga)


_REPS: dict[int, GammaRep] = {}


def gamma_rep(parity: int = 1) -> GammaRep:
    if parity not in _REPS:
        _REPS[parity] = GammaRep(parity)
    return _REPS[parity]


def matrix_trace(m: np.ndarray) -> G:
    acc = ZERO
    for i in range(m.shape[0]):
        acc = acc + m[i, i]
    return acc


def evaluate_clifford(e: CliffordElement, assignment: Mapping[str, object], parity: int = 1) -> np.ndarray:
    rep = gamma_rep(parity)
    out = _mat([[0] * 4 for _ in range(4)])
    for mask, coeff in e.terms.items():
        c = Scalar.coerce(coeff).evaluate(assignment)
        if c:
            out = out + rep.word(mask) * c
    return out


def _diagonal_trace(e: CliffordElement, assignment: Mapping[str, object], parity: int) -> G:
    """Sum of the diagonal entries of the represented element; off-diagonal
    entries never reach the trace, so they are not formed."""
    rep = gamma_rep(parity)
    acc = ZERO
    for mask, coeff in e.terms.items():
        c = Scalar.coerce(coeff).evaluate(assignment)
        if c:
            w = rep.word(mask)
            acc = acc + sum((w[i, i] for i in range(w.shape[0])), ZERO) * c
    return acc


def oracle_trace(e: CliffordElement, assignment: Mapping[str, object] | None = None) -> G:
    """Literal matrix trace, averaged over the two parity representations.

    In either irreducible representation the product of all five
    generators is a multiple of the identity; the average removes that
    contribution, which is the convention the engine's trace uses.
    """
    assignment = assignment or {}
    plus = _diagonal_trace(e, assignment, 1)
    minus = _diagonal_trace(e, assignment, -1)
    return (plus + minus) * G(Fraction(1, 2))


def oracle_trace_single(e: CliffordElement, assignment: Mapping[str, object] | None = None, parity: int = 1) -> G:
    return matrix_trace(evaluate_clifford(e, assignment or {}, parity))


# quadrature ---------------------------------------------------------------

class QuadratureError(ArithmeticError):
    pass


def quadrature_line(f: XiPoles, assignment: Mapping[str, object], tol: float = 1e-11) -> complex:
    """Integral over the real line by adaptive quadrature on (-inf, inf)."""
    f = f.reduced()
    if f.is_zero():
        return 0j
    if f.degree() > f.a + f.b - 2:
        raise QuadratureError("integrand does not decay like 1/xi_n^2")
    fn = f.numeric(assignment)
    parts = []
    for take in (lambda z: z.real, lambda z: z.imag):
        val, err = integrate.quad(lambda x: take(fn(x)), -np.inf, np.inf,
                                  epsabs=tol, epsrel=tol, limit=400)
        if not np.isfinite(val) or err > max(1e-8, 1e-6 * abs(val)):
            raise QuadratureError(f"quadrature did not converge (estimate {err:.2e})")
        parts.append(val)
    return complex(parts[0], parts[1])


def exact_numeric(s: Scalar, assignment: Mapping[str, object]) -> complex:
    """Evaluate a result that may carry PI, with PI set to pi."""
    total = 0j
    for m, c in s.terms.items():
        val = complex(c)
        for v, e in m:
            x = pi if v == "PI" else complex(G.coerce(assignment[v]))
            val *= x ** e
        total += val
    return total


# sphere moments -----------------------------------------------------------

def _half_gamma_over_sqrt_pi(e: int) -> Fraction:
    """Gamma((e+1)/2)/sqrt(pi) for even e."""
    k = e // 2
    return Fraction(factorial(2 * k), 4 ** k * factorial(k))


def moment_oracle(exponents: tuple[int, ...]) -> Fraction:
    """Integral over S^3 of prod xi_i^e_i as a multiple of pi^2.

    Uses int_{S^{d-1}} x^e = 2 prod Gamma((e_i+1)/2) / Gamma((|e|+d)/2).
    """
    if len(exponents) != 4 or any(e < 0 for e in exponents):
        raise ValueError("need four non-negative exponents")
    if any(e % 2 for e in exponents):
        return Fraction(0)
    num = Fraction(2)
    for e in exponents:
        num *= _half_gamma_over_sqrt_pi(e)
    return num / factorial((sum(exponents) + 4) // 2 - 1)


def sphere_points(samples: int = 400_000, seed: int = 0) -> np.ndarray:
    """Uniform points on S^3 from normalised Gaussian vectors, one row per
    coordinate."""
    rng = np.random.default_rng(seed)
    x = rng.standard_normal((4, samples))
    return x / np.sqrt((x * x).sum(axis=0))


def monte_carlo_moment(exponents: tuple[int, ...], samples: int = 400_000, seed: int = 0,
                       points: np.ndarray | None = None) -> float:
    """Estimate of the same integral divided by pi^2."""
    x = sphere_points(samples, seed) if points is None else points
    vals = np.ones(x.shape[1])
    for j, e in enumerate(exponents):
        for _ in range(e):
            vals = vals * x[j]
    return float(vals.mean() * 2.0)  # area 2 pi^2, reported per pi^2


# random inputs ------------------------------------------------------------

def random_rational(rng: random.Random, bound: int = 5) -> Fraction:
    return Fraction(rng.randint(-bound, bound), rng.randint(1, bound))


def random_gaussian(rng: random.Random, bound: int = 5) -> G:
    return G(random_rational(rng, bound), random_rational(rng, bound) if rng.random() < 0.5 else 0)


def random_assignment(variables, rng: random.Random) -> dict[str, G]:
    return {v: random_gaussian(rng) for v in sorted(variables)}


def random_clifford(rng: random.Random, variables=("A", "B"), terms: int = 4) -> CliffordElement:
    """A random element whose coefficients are small polynomials."""
    out = CliffordElement()
    for _ in range(terms):
        mask = rng.randrange(1 << DIM)
        coeff = Scalar.const(random_gaussian(rng))
        if variables and rng.random() < 0.6:
            coeff = coeff * Scalar.var(rng.choice(variables), rng.randint(1, 2))
        out = out + CliffordElement({mask: coeff})
    return out
