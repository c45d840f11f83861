"""Tests for the exact truncated index-sum polynomials.

The formal layer replaces each index variable with a polynomial over the
finite level set {1..N}.  All identities checked here are exact lattice
statements with no analytic content, so equality is literal term-by-term
agreement of Fraction coefficients.
"""

from fractions import Fraction

import pytest

from zetagenus.formal import (
    MAX_CHAIN_BLOCKS,
    TERM_BUDGET,
    FormalPolynomial,
    chain_sum_poly_symmetrized,
    check_chain_inversion,
    check_mobius_inversion,
    monomial_poly,
    power_sum_poly,
    signed_power_sum_poly,
    substitute_exact,
    substitute_float,
)
from zetagenus.partitions import (
    SetPartition,
    coarsenings,
    enumerate_set_partitions,
)
from zetagenus.series import EvalConfig, alternating_chain_sum, symmetrize

F = Fraction


def _poly(terms, cap):
    return FormalPolynomial({m: F(c) for m, c in terms.items()}, cap)


def _pi(*blocks):
    return SetPartition.from_blocks(blocks)


# ---------------------------------------------------------------------------
# Generators: frozen small expansions
# ---------------------------------------------------------------------------


def test_power_sum_of_a_singleton():
    got = power_sum_poly(_pi((1,)), 2)
    assert got == _poly({(((1, 1)),): 1, (((1, 2)),): 1}, 2)


def test_power_sum_factorises_over_blocks():
    pi = _pi((1, 3), (2,))
    # Each block contributes an independent diagonal factor.
    single = FormalPolynomial({((1, n), (3, n)): F(1) for n in (1, 2, 3)}, 3)
    other = FormalPolynomial({((2, n),): F(1) for n in (1, 2, 3)}, 3)
    assert power_sum_poly(pi, 3) == single * other


def test_signed_power_sum_flips_odd_levels():
    got = signed_power_sum_poly(_pi((1,)), 2)
    assert got == _poly({((1, 1),): -1, ((1, 2),): 1}, 2)
    pair = signed_power_sum_poly(_pi((1, 2)), 2)
    assert pair == _poly({((1, 1), (2, 1)): -1, ((1, 2), (2, 2)): 1}, 2)


def test_signed_and_unsigned_power_sums_differ_by_level_parity():
    # One sign per block, carried by the block's shared level.
    for pi in enumerate_set_partitions(3):
        plain = power_sum_poly(pi, 3)
        signed = signed_power_sum_poly(pi, 3)
        for mono, c in plain.terms.items():
            levels = dict(mono)
            parity = sum(levels[block[0]] for block in pi.blocks) % 2
            assert signed.terms[mono] == (-c if parity else c)


def test_monomial_requires_distinct_block_levels():
    got = monomial_poly(_pi((1,), (2,)), 2)
    assert got == _poly({((1, 1), (2, 2)): 1, ((1, 2), (2, 1)): 1}, 2)
    # One block: no distinctness constraint to impose.
    assert monomial_poly(_pi((1, 2)), 3) == power_sum_poly(_pi((1, 2)), 3)
    # More blocks than levels leaves nothing.
    assert monomial_poly(_pi((1,), (2,)), 1).is_zero


def test_monomial_parity_slice():
    # Restricting the two-block monomial sum to odd first-block level and
    # even second-block level picks exactly the mixed-parity terms.
    pi = _pi((1, 2), (3,))
    sliced = {
        mono: c
        for mono, c in monomial_poly(pi, 4).terms.items()
        if dict(mono)[1] % 2 == 1 and dict(mono)[3] % 2 == 0
    }
    expected = {
        ((1, n), (2, n), (3, m)): F(1) for n in (1, 3) for m in (2, 4)
    }
    assert sliced == expected


def test_chain_sum_frozen_expansion():
    # Two singleton blocks at N = 2: both block orderings contribute,
    # equality of levels allowed only at the even level.
    got = chain_sum_poly_symmetrized(_pi((1,), (2,)), 2)
    assert got == _poly(
        {
            ((1, 2), (2, 1)): -1,
            ((1, 2), (2, 2)): 2,
            ((1, 1), (2, 2)): -1,
        },
        2,
    )


def test_chain_sum_of_one_block_is_the_signed_sum():
    for pi in (_pi((1,)), _pi((1, 2)), _pi((1, 2, 3))):
        assert chain_sum_poly_symmetrized(pi, 4) == signed_power_sum_poly(pi, 4)


def test_chain_sum_term_signs_follow_level_parity():
    poly = chain_sum_poly_symmetrized(_pi((1,), (2,), (3,)), 3)
    for mono, c in poly.terms.items():
        parity = sum(level for _, level in mono) % 2
        assert (c < 0) == bool(parity)


# ---------------------------------------------------------------------------
# Lattice identities
# ---------------------------------------------------------------------------


def test_power_sum_splits_into_monomials():
    # p_pi = sum of m_rho over coarsenings rho >= pi.
    for n in (1, 2, 3):
        for pi in enumerate_set_partitions(n):
            total = None
            for rho, _ in coarsenings(pi):
                term = monomial_poly(rho, 3)
                total = term if total is None else total + term
            assert total == power_sum_poly(pi, 3)


@pytest.mark.parametrize("n,cap", [(1, 4), (2, 4), (3, 4), (4, 3)])
def test_mobius_inversion_is_exact(n, cap):
    for pi in enumerate_set_partitions(n):
        report = check_mobius_inversion(pi, cap)
        assert report.ok, report.describe()
        assert report.first_diff is None


@pytest.mark.parametrize("n,cap", [(1, 4), (2, 4), (3, 4), (4, 3)])
def test_chain_inversion_is_exact_in_both_directions(n, cap):
    for pi in enumerate_set_partitions(n):
        report = check_chain_inversion(pi, cap)
        assert report.ok
        assert report.chain_from_signed.ok, report.chain_from_signed.describe()
        assert report.signed_from_chain.ok, report.signed_from_chain.describe()


def test_identity_report_describes_the_first_mismatch():
    lhs = _poly({((1, 1),): 1, ((1, 2),): 3}, 2)
    rhs = _poly({((1, 1),): 1, ((1, 2),): 4}, 2)
    diff = lhs.first_difference(rhs)
    assert diff == ((1, 2),)
    assert lhs.first_difference(lhs) is None


# ---------------------------------------------------------------------------
# Polynomial arithmetic
# ---------------------------------------------------------------------------


def test_polynomial_ring_operations():
    a = _poly({((1, 1),): 2}, 3)
    b = _poly({((1, 1),): -2, ((1, 2),): 5}, 3)
    assert (a + b) == _poly({((1, 2),): 5}, 3)
    assert (a - a).is_zero
    assert a.scale(F(1, 2)) == _poly({((1, 1),): 1}, 3)
    assert a.scale(0).is_zero
    product = a * b
    expected = _poly({((1, 1), (1, 1)): -4, ((1, 1), (1, 2)): 10}, 3)
    assert product == expected


def test_multiplication_concatenates_factor_multisets():
    # Factors are kept with multiplicity; the generators only ever multiply
    # polynomials over disjoint element sets, where no repeat can occur.
    a = _poly({((1, 1),): 1}, 2)
    assert (a * a) == _poly({((1, 1), (1, 1)): 1}, 2)


def test_mixed_level_caps_are_rejected():
    a = _poly({((1, 1),): 1}, 2)
    b = _poly({((1, 1),): 1}, 3)
    with pytest.raises(ValueError):
        a + b
    with pytest.raises(ValueError):
        a * b


def test_budget_guards():
    with pytest.raises(ValueError):
        power_sum_poly(_pi((1,), (2,), (3,)), 101)
    with pytest.raises(ValueError):
        power_sum_poly(_pi((1,)), 0)
    five = SetPartition.from_blocks([(i,) for i in range(1, 6)])
    assert MAX_CHAIN_BLOCKS < 5
    with pytest.raises(ValueError):
        chain_sum_poly_symmetrized(five, 2)
    assert 101 ** 3 > TERM_BUDGET


# ---------------------------------------------------------------------------
# Substitution bridges to the numeric layer
# ---------------------------------------------------------------------------


def test_exact_substitution_recovers_harmonic_products():
    # Substituting exponent 2 into the two-singleton power sum gives the
    # square of the generalised harmonic number H_N^(2).
    N = 6
    poly = power_sum_poly(_pi((1,), (2,)), N)
    h2 = sum(F(1, n**2) for n in range(1, N + 1))
    assert substitute_exact(poly, {1: 2, 2: 2}) == h2 * h2
    mono = monomial_poly(_pi((1,), (2,)), N)
    strict = sum(
        F(1, (a * b) ** 2) for a in range(1, N + 1) for b in range(1, N + 1) if a != b
    )
    assert substitute_exact(mono, {1: 2, 2: 2}) == strict


def test_float_substitution_matches_the_numeric_evaluators():
    N = 60
    cfg = EvalConfig(N)
    pi = _pi((1,), (2,))
    chain = chain_sum_poly_symmetrized(pi, N)
    got = substitute_float(chain, {1: 2.0, 2: 2.0})
    want = symmetrize("T", (2.0, 2.0), cfg).value
    assert abs(got - want) < 1e-13
    single = chain_sum_poly_symmetrized(_pi((1,)), N)
    got1 = substitute_float(single, {1: 3.0})
    want1 = alternating_chain_sum((3.0,), cfg).value
    assert abs(got1 - want1) < 1e-15


def test_exact_and_float_substitution_agree():
    poly = chain_sum_poly_symmetrized(_pi((1,), (2,)), 8)
    exact = substitute_exact(poly, {1: 2, 2: 3})
    approx = substitute_float(poly, {1: 2.0, 2: 3.0})
    assert abs(float(exact) - approx) < 1e-14
