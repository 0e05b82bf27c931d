import math
import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from k3ns8 import (
    Place,
    RationalPolynomial,
    coprime_refinement,
    gcd,
    squarefree_decompose,
    vanishing_order,
)

T = RationalPolynomial.x()


class TestArithmetic:
    def test_degree_conventions(self):
        assert RationalPolynomial.zero().degree == -1
        assert RationalPolynomial.one().degree == 0
        assert (T ** 5).degree == 5

    def test_trailing_zeros_trimmed(self):
        assert RationalPolynomial((1, 2, 0, 0)) == RationalPolynomial((1, 2))

    def test_divmod_reconstructs(self):
        p = 3 * T ** 5 - T ** 2 + 7
        q = 2 * T ** 2 + T - 1
        quotient, rem = divmod(p, q)
        assert quotient * q + rem == p
        assert rem.degree < q.degree

    def test_division_by_zero(self):
        with pytest.raises(ZeroDivisionError):
            divmod(T, RationalPolynomial.zero())

    def test_evaluate(self):
        p = T ** 3 - 2 * T
        assert p(Fraction(1, 2)) == Fraction(1, 8) - 1

    def test_string_round_trip(self):
        p = RationalPolynomial(("1/2", "0", "-3"))
        assert RationalPolynomial.from_strings(p.to_strings()) == p


class TestGcd:
    def test_shared_factors(self):
        assert gcd(T ** 3 - T, T ** 2 - 1) == T ** 2 - 1

    def test_coprime(self):
        assert gcd(T ** 2, T + 1) == RationalPolynomial.one()

    def test_high_multiplicity_with_derivative(self):
        # gcd(p, p') strips one power off each factor: expect t^8 (t^2-1)^5
        p = 4 * T ** 9 * (T ** 2 - 1) ** 6
        assert gcd(p, p.derivative()) == T ** 8 * (T ** 2 - 1) ** 5

    def test_both_zero_rejected(self):
        with pytest.raises(ValueError):
            gcd(RationalPolynomial.zero(), RationalPolynomial.zero())

    def test_result_is_monic(self):
        g = gcd(6 * T ** 2 - 6, 4 * T - 4)
        assert g == T - 1


class TestSquarefreeDecompose:
    def test_discriminant_shape(self):
        content, parts = squarefree_decompose(4 * T ** 9 * (T ** 2 - 1) ** 6)
        assert content == 4
        assert set(parts) == {(T, 9), (T ** 2 - 1, 6)}

    def test_already_squarefree(self):
        content, parts = squarefree_decompose(T ** 2 + 1)
        assert content == 1
        assert parts == [(T ** 2 + 1, 1)]

    def test_equal_multiplicities_merge(self):
        content, parts = squarefree_decompose((T - 2) ** 2 * (T + 3) ** 2)
        assert content == 1
        assert parts == [(T ** 2 + T - 6, 2)]

    def test_zero_rejected(self):
        with pytest.raises(ValueError):
            squarefree_decompose(RationalPolynomial.zero())

    def test_constant(self):
        content, parts = squarefree_decompose(RationalPolynomial((Fraction(-7, 3),)))
        assert content == Fraction(-7, 3)
        assert parts == []


class TestVanishingOrder:
    def test_finite_place(self):
        p = T ** 3 * (T ** 2 - 1) ** 2
        assert vanishing_order(p, Place.finite(T)) == 3
        assert vanishing_order(p, Place.finite(T ** 2 - 1)) == 2
        assert vanishing_order(p, Place.finite(T + 5)) == 0

    def test_infinity(self):
        p = T ** 3 * (T ** 2 - 1) ** 2  # degree 7
        assert vanishing_order(p, Place.infinity(), total_degree=8) == 1

    def test_zero_polynomial(self):
        zero = RationalPolynomial.zero()
        assert vanishing_order(zero, Place.finite(T)) == math.inf
        assert vanishing_order(zero, Place.infinity(), total_degree=8) == math.inf

    def test_infinity_requires_dominating_degree(self):
        with pytest.raises(ValueError):
            vanishing_order(T ** 3, Place.infinity(), total_degree=2)

    def test_place_validation(self):
        with pytest.raises(ValueError):
            Place.finite(T ** 2)  # not square-free
        with pytest.raises(ValueError):
            Place.finite(2 * T)  # not monic
        with pytest.raises(ValueError):
            Place.finite(RationalPolynomial.one())  # constant


class TestCoprimeRefinement:
    def test_one_gcd_step(self):
        out = coprime_refinement([T * (T ** 2 - 1), T ** 2 - 1])
        assert set(out) == {T, T ** 2 - 1}

    def test_already_coprime(self):
        out = coprime_refinement([T - 1, T + 1])
        assert set(out) == {T - 1, T + 1}

    def test_splits_shared_root(self):
        out = coprime_refinement([T ** 2 - 1, T ** 2 - 3 * T + 2])
        assert set(out) == {T - 1, T + 1, T - 2}

    def test_pairwise_coprime_and_reconstructs(self):
        rng = random.Random(7)
        lin = [T - k for k in range(-3, 4)]
        for _ in range(40):
            inputs = []
            for _ in range(rng.randrange(1, 4)):
                factors = rng.sample(lin, rng.randrange(1, 4))
                p = RationalPolynomial.one()
                for f in factors:
                    p = p * f
                inputs.append(p)
            basis = coprime_refinement(inputs)
            for i, p in enumerate(basis):
                for q in basis[i + 1:]:
                    assert gcd(p, q) == RationalPolynomial.one()
            for p in inputs:
                prod = RationalPolynomial.one()
                for q in basis:
                    if (p % q).is_zero:
                        prod = prod * q
                assert prod == p.monic()


@st.composite
def factored_polynomials(draw):
    """Random small products with known square-free structure."""
    irreducibles = [T - 2, T + 1, T, T ** 2 + 1, T ** 2 + T + 1]
    count = draw(st.integers(min_value=1, max_value=3))
    chosen = draw(st.permutations(irreducibles))[:count]
    mults = draw(st.lists(st.integers(min_value=1, max_value=4),
                          min_size=count, max_size=count))
    content = draw(st.sampled_from([1, -1, 2, Fraction(3, 5)]))
    p = RationalPolynomial((content,))
    for f, m in zip(chosen, mults):
        p = p * f ** m
    return p


@given(factored_polynomials())
def test_yun_reconstructs_input(p):
    content, parts = squarefree_decompose(p)
    rebuilt = RationalPolynomial((content,))
    for f, m in parts:
        assert f.leading_coefficient == 1
        assert f.is_squarefree()
        rebuilt = rebuilt * f ** m
    assert rebuilt == p
    assert len({m for _, m in parts}) == len(parts)
    for i, (f, _) in enumerate(parts):
        for g, _ in parts[i + 1:]:
            assert gcd(f, g) == RationalPolynomial.one()


@given(factored_polynomials(), st.integers(min_value=0, max_value=5))
def test_orders_sum_to_total_degree(p, slack):
    total = p.degree + slack
    _, parts = squarefree_decompose(p)
    places = [Place.finite(f) for f, _ in parts] + [Place.infinity()]
    acc = 0
    for place in places:
        order = vanishing_order(p, place, total_degree=total)
        acc += place.degree * order
    assert acc == total
