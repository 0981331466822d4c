import random

from hypothesis import given, settings, strategies as st

from boundary_residue.clifford import (NORMAL, CliffordElement, c_xi_prime, trace, word_mask,
                                       mask_generators)
from boundary_residue.coefficients import GaussianRational as G
from boundary_residue.coefficients import V
from boundary_residue.oracle import oracle_trace, oracle_trace_single, random_assignment, random_clifford
from boundary_residue.verification import gamma_relations, trace_identities


def test_generators_anticommute():
    for a in range(1, 6):
        for b in range(1, 6):
            ga, gb = CliffordElement.gen(a), CliffordElement.gen(b)
            want = CliffordElement.scalar(-2 if a == b else 0)
            assert ga * gb + gb * ga == want


def test_word_masks_roundtrip():
    assert mask_generators(word_mask([3, 1, 5])) == (1, 3, 5)


def test_traces_of_words():
    assert trace(CliffordElement.scalar(1)) == 4
    assert trace(CliffordElement.gen(1) * CliffordElement.gen(2)).is_zero()
    full = CliffordElement.word([1, 2, 3, 4, 5])
    assert trace(full).is_zero()


def test_full_word_is_scalar_in_each_representation():
    # +-4 (up to i) in the two inequivalent representations; the average is 0
    full = CliffordElement.word([1, 2, 3, 4, 5])
    plus, minus = oracle_trace_single(full, parity=1), oracle_trace_single(full, parity=-1)
    assert plus == -minus and plus != 0
    assert oracle_trace(full) == 0


def test_gamma_matrix_relations():
    assert all(r.passed for r in gamma_relations())


@settings(max_examples=40)
@given(st.integers(0, 10_000))
def test_trace_matches_oracle(seed):
    rng = random.Random(seed)
    e = random_clifford(rng) * random_clifford(rng)
    point = random_assignment(("A", "B"), rng)
    assert trace(e).evaluate(point) == oracle_trace(e, point)


@settings(max_examples=30)
@given(st.integers(0, 10_000))
def test_associativity(seed):
    rng = random.Random(seed)
    a, b, c = (random_clifford(rng) for _ in range(3))
    assert (a * b) * c == a * (b * c)


def test_c_xi_prime_squares_to_minus_norm():
    cp = c_xi_prime()
    norm = sum((V(f"XI{j}", 2) for j in range(1, 5)), start=V("XI1") * 0)
    assert cp * cp == CliffordElement.scalar(-norm)
    g5 = CliffordElement.gen(NORMAL)
    assert cp * g5 == -(g5 * cp)


def test_five_boundary_trace_identities():
    rows = trace_identities()
    assert len(rows) == 5 and all(r.passed for r in rows)
