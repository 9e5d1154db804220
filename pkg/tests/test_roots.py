"""Integer and rational root machinery.

Root sets are checked against planted constructions: build the polynomial
from chosen roots, then the answer is known before the code under test
runs. The modular large-coefficient path is additionally cross-checked
against the plain divisor path on inputs where both apply.
"""

import math
import random
from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from polydecomp.parsing import parse
from polydecomp.poly import ONE, Polynomial, X
from polydecomp.roots import (
    _rational_roots_lifted,
    count_real_roots,
    divisors,
    factorize,
    is_probable_prime,
    poly_gcd,
    poly_kth_root,
    rational_kth_root,
    rational_roots,
    squarefree_decomposition,
)


def poly_with_roots(roots, cofactor=ONE, lead=1):
    q = Polynomial.const(F(lead))
    for r in roots:
        q = q * Polynomial([-F(r), F(1)])
    return q * cofactor


class TestIntegerHelpers:
    def test_factorize_oracle(self):
        assert factorize(672) == {2: 5, 3: 1, 7: 1}
        assert factorize(1) == {}
        assert factorize(97) == {97: 1}
        assert factorize(2**20) == {2: 20}
        assert factorize(1009 * 1013) == {1009: 1, 1013: 1}

    @given(st.integers(min_value=1, max_value=10**9))
    @settings(max_examples=80)
    def test_factorize_rebuilds(self, n):
        f = factorize(n)
        assert math.prod(p**e for p, e in f.items()) == n
        assert all(is_probable_prime(p) for p in f)

    def test_divisors(self):
        assert divisors(12) == [1, 2, 3, 4, 6, 12]
        assert divisors(1) == [1]
        assert divisors(49) == [1, 7, 49]

    def test_primality_against_sieve(self):
        limit = 10_000
        sieve = [True] * (limit + 1)
        sieve[0] = sieve[1] = False
        for i in range(2, int(limit**0.5) + 1):
            if sieve[i]:
                sieve[i * i :: i] = [False] * len(sieve[i * i :: i])
        for n in range(limit + 1):
            assert is_probable_prime(n) == sieve[n], n

    def test_primality_large(self):
        assert is_probable_prime(2**61 - 1)
        assert not is_probable_prime(2**61 + 1)
        # Carmichael numbers fool Fermat tests but not this one
        for n in (561, 1729, 294409, 56052361):
            assert not is_probable_prime(n)


class TestRationalRoots:
    def test_planted_small(self):
        q = poly_with_roots([2, -5, F(1, 3)], cofactor=parse("x^2 + 1"))
        assert set(rational_roots(q)) == {F(2), F(-5), F(1, 3)}

    def test_no_rational_roots(self):
        assert rational_roots(parse("x^2 + 1")) == ()
        assert rational_roots(parse("x^2 - 2")) == ()

    def test_zero_root_and_multiplicity(self):
        q = parse("x^3") * poly_with_roots([F(7, 2)]) ** 2
        assert set(rational_roots(q)) == {F(0), F(7, 2)}

    def test_returns_sorted(self):
        q = poly_with_roots([3, -1, F(-1, 2)])
        assert list(rational_roots(q)) == sorted(rational_roots(q))

    def test_planted_huge_coefficients(self):
        # an irrational cofactor with 60-bit coefficients pushes the
        # extreme coefficients past the divisor-enumeration cutoff
        cof = Polynomial([F(2**61 - 1), F(2**60), F(1)])
        q = poly_with_roots([F(-3, 2), 5], cofactor=cof)
        assert set(rational_roots(q)) == {F(-3, 2), F(5)}

    def test_huge_no_roots(self):
        cof = Polynomial([F(2**61 - 1), F(2**60), F(1)])
        assert rational_roots(cof * cof) == ()

    def test_lifted_path_agrees_with_divisor_path(self):
        rng = random.Random(7)
        for _ in range(30):
            roots = [
                F(rng.randint(-20, 20), rng.randint(1, 9)) for _ in range(rng.randint(0, 3))
            ]
            q = poly_with_roots(roots, cofactor=parse("x^2 + x + 1"))
            assert set(_rational_roots_lifted(q)) == set(rational_roots(q))

    def test_lifted_path_handles_zero_valuation(self):
        q = parse("x^2") * poly_with_roots([-11, F(-3, 8)])
        assert set(_rational_roots_lifted(q)) == {F(0), F(-11), F(-3, 8)}

    @given(
        roots=st.lists(
            st.fractions(min_value=-30, max_value=30, max_denominator=6),
            min_size=1,
            max_size=4,
        )
    )
    @settings(max_examples=60)
    def test_planted_property(self, roots):
        q = poly_with_roots(roots, cofactor=parse("x^4 + x^2 + 1"))
        assert set(rational_roots(q)) == set(F(r) for r in roots)


class TestPolyGcd:
    def test_oracle(self):
        a = parse("x^2 + 3x + 2")  # (x+1)(x+2)
        b = parse("x^2 + 4x + 3")  # (x+1)(x+3)
        assert poly_gcd(a, b) == parse("x + 1")

    def test_coprime_is_one(self):
        g = poly_gcd(parse("x^2 + 1"), parse("x^3 - 2"))
        assert g.is_constant and not g.is_zero

    def test_monic_result(self):
        g = poly_gcd(parse("4x^2 - 4"), parse("6x^2 + 12x + 6"))
        assert g == parse("x + 1")

    @given(
        a=st.lists(st.integers(-5, 5), min_size=2, max_size=5).map(Polynomial),
        b=st.lists(st.integers(-5, 5), min_size=2, max_size=5).map(Polynomial),
    )
    @settings(max_examples=60)
    def test_divides_both(self, a, b):
        if a.is_zero or b.is_zero:
            return
        g = poly_gcd(a, b)
        assert (a % g).is_zero
        assert (b % g).is_zero


def test_squarefree_decomposition():
    target = parse("x + 2") * parse("x - 1") ** 2 * parse("x + 1") ** 3 * 5
    content, parts = squarefree_decomposition(target)
    assert parts == {1: parse("x + 2"), 2: parse("x - 1"), 3: parse("x + 1")}
    rebuilt = Polynomial.const(content)
    for mult, factor in parts.items():
        rebuilt = rebuilt * factor**mult
    assert rebuilt == target


def test_squarefree_of_squarefree():
    content, parts = squarefree_decomposition(parse("2x^2 - 2"))
    assert content == 2
    assert parts == {1: parse("x^2 - 1")}


class TestRealRootCount:
    @pytest.mark.parametrize(
        "text,n",
        [
            ("x^2 + 1", 0),
            ("x^2 - 2", 2),
            ("x^3 - 3x", 3),
            ("x^2 - 2x + 1", 1),  # distinct roots, not multiplicity
            ("x^3 - 1", 1),
            ("x^5 - x", 3),
            ("80x^4 - 60x^2 + 5", 4),
        ],
    )
    def test_oracle(self, text, n):
        assert count_real_roots(parse(text)) == n

    def test_planted(self):
        q = poly_with_roots([0, 1, -2, F(5, 7)], cofactor=parse("x^2 + 3"))
        assert count_real_roots(q) == 4


class TestKthRoots:
    def test_rational(self):
        assert rational_kth_root(F(8), 3) == 2
        assert rational_kth_root(F(9, 4), 2) == F(3, 2)
        assert rational_kth_root(F(-27), 3) == -3
        assert rational_kth_root(F(2), 2) is None
        assert rational_kth_root(F(-4), 2) is None
        assert rational_kth_root(F(0), 5) == 0

    def test_poly(self):
        assert poly_kth_root(parse("x^2 + 2x + 1"), 2) == parse("x + 1")
        assert poly_kth_root(parse("4x^2"), 2) == parse("2x")
        assert poly_kth_root(parse("-x^3"), 3) == parse("-x")
        assert poly_kth_root(parse("x^2 + 1"), 2) is None
        assert poly_kth_root(parse("x^6"), 3) == parse("x^2")

    @given(
        q=st.lists(st.fractions(min_value=-4, max_value=4, max_denominator=3), min_size=2, max_size=4).map(Polynomial),
        k=st.integers(min_value=2, max_value=4),
    )
    @settings(max_examples=50)
    def test_poly_roundtrip(self, q, k):
        if q.is_zero or q.is_constant:
            return
        r = poly_kth_root(q**k, k)
        assert r is not None
        assert r**k == q**k
