import random

import pytest
import sympy

from palindromic.errors import DegreeMismatchError, NotMonicError, ZeroPolynomialError
from palindromic.generate import random_graph
from palindromic.graph import cycle, path
from palindromic.hairing import hair_k
from palindromic.poly import (
    ONE,
    X,
    IntPolynomial,
    PalindromeKind,
    classify,
    coefficient_reflection_check,
    reverse_check,
    substitute_hairing,
)
from palindromic.spectral import char_poly

x = sympy.Symbol("x")


def to_sympy(p: IntPolynomial) -> sympy.Poly:
    return sympy.Poly(list(p.coeffs), x) if p.coeffs else sympy.Poly(0, x)


class TestIntPolynomial:
    """Test exact integer polynomial arithmetic"""

    def test_leading_zeros_stripped(self):
        p = IntPolynomial([0, 0, 1, -1])
        assert p.coeffs == (1, -1)
        assert p.degree == 1
        assert IntPolynomial([0]).is_zero()
        assert IntPolynomial([]).degree == -1

    def test_coefficient_out_of_range(self):
        p = IntPolynomial([1, 0, -1])
        assert p.coefficient(2) == -1
        assert p.coefficient(3) == 0
        assert p.coefficient(-1) == 0

    def test_arithmetic_matches_sympy(self):
        rng = random.Random(0)
        for _ in range(50):
            p = IntPolynomial([rng.randint(-9, 9) for _ in range(rng.randint(1, 6))])
            q = IntPolynomial([rng.randint(-9, 9) for _ in range(rng.randint(1, 6))])
            assert to_sympy(p * q) == to_sympy(p) * to_sympy(q)
            assert to_sympy(p + q) == to_sympy(p) + to_sympy(q)
            assert to_sympy(p - q) == to_sympy(p) - to_sympy(q)

    def test_power(self):
        assert (X - ONE) ** 3 == IntPolynomial([1, -3, 3, -1])
        assert X**0 == ONE
        with pytest.raises(ValueError, match="Invalid exponent"):
            X ** -1

    def test_big_coefficients(self):
        p = IntPolynomial([1, 10**40]) * IntPolynomial([1, 10**40])
        assert p.coeffs == (1, 2 * 10**40, 10**80)
        assert p.to_json()[2] == "1" + "0" * 80

    def test_json_round_trip(self):
        p = IntPolynomial([1, 0, -7, 0, 7, 0, -1])
        assert IntPolynomial.from_json(p.to_json()) == p

    def test_render(self):
        assert IntPolynomial([1, 0, -7, 0, 7, 0, -1]).render() == "λ^6-7λ^4+7λ^2-1"
        assert IntPolynomial([1, -2, 0]).render("x") == "x^2-2x"
        assert IntPolynomial([]).render() == "0"
        assert str(IntPolynomial([-3])) == "-3"

    def test_evaluate(self):
        assert IntPolynomial([1, 0, -1]).evaluate(3) == 8


class TestClassify:
    """Test palindromic classification"""

    def test_palindromic(self):
        verdict = classify(IntPolynomial([1, 0, -3, 0, 1]))
        assert verdict.kind is PalindromeKind.PALINDROMIC
        assert verdict.absolute
        assert verdict.label == "palindromic"

    def test_antipalindromic(self):
        verdict = classify(IntPolynomial([1, 0, -1]))
        assert verdict.kind is PalindromeKind.ANTIPALINDROMIC
        assert verdict.is_symmetric

    def test_absolutely_palindromic_only(self):
        verdict = classify(IntPolynomial([1, -2, 2, 1]))
        assert verdict.kind is PalindromeKind.NEITHER
        assert verdict.absolute
        assert verdict.label == "absolutely-palindromic"

    def test_neither(self):
        verdict = classify(char_poly(path(3)))
        assert verdict.kind is PalindromeKind.NEITHER
        assert not verdict.absolute
        assert verdict.label == "neither"

    def test_zero_polynomial(self):
        with pytest.raises(ZeroPolynomialError):
            classify(IntPolynomial([]))

    def test_reverse_check_agrees_with_classify(self):
        for coeffs in ([1, 0, -3, 0, 1], [1, 0, -1], [1, 0, -2, 0], [2, 3, 2]):
            p = IntPolynomial(coeffs)
            verdict = classify(p)
            palindromic, antipalindromic = reverse_check(p)
            # degree is kept by x^n p(1/x) only when the constant term is nonzero
            if p.coefficient(p.degree):
                assert palindromic == (verdict.kind is PalindromeKind.PALINDROMIC)
                assert antipalindromic == (verdict.kind is PalindromeKind.ANTIPALINDROMIC)
            else:
                assert not palindromic and not antipalindromic


class TestSubstituteHairing:
    """Test the hairing polynomial identity"""

    def test_edge(self):
        assert substitute_hairing(IntPolynomial([1, 0, -1]), 2, 1) == char_poly(path(4))

    def test_matches_direct_computation(self):
        rng = random.Random(2)
        for _ in range(20):
            g = random_graph(rng.randint(1, 6), rng.random(), rng)
            for k in (1, 2, 3):
                assert substitute_hairing(char_poly(g), g.n, k) == char_poly(hair_k(g, k))

    def test_against_sympy_substitution(self):
        p = char_poly(cycle(5))
        expected = sympy.expand(x**5 * to_sympy(p).as_expr().subs(x, x - 1 / x))
        assert to_sympy(substitute_hairing(p, 5, 1)) == sympy.Poly(expected, x)

    def test_invalid_k(self):
        with pytest.raises(ValueError, match="Invalid hairing multiplicity"):
            substitute_hairing(IntPolynomial([1, 0]), 1, 0)

    def test_degree_mismatch(self):
        with pytest.raises(DegreeMismatchError):
            substitute_hairing(IntPolynomial([1, 0, -1]), 3, 1)

    def test_not_monic(self):
        with pytest.raises(NotMonicError):
            substitute_hairing(IntPolynomial([2, 0, -1]), 2, 1)

    def test_reflection_holds_for_hairings(self):
        rng = random.Random(4)
        for _ in range(20):
            g = random_graph(rng.randint(1, 7), rng.random(), rng)
            assert coefficient_reflection_check(char_poly(hair_k(g, 1)), g.n)

    def test_reflection_degree_mismatch(self):
        with pytest.raises(DegreeMismatchError):
            coefficient_reflection_check(IntPolynomial([1, 0, -1]), 2)
