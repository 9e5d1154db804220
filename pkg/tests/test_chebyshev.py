"""Chebyshev family: values, composition law, and derivative structure.

The independent oracle is the closed form on the rational one-parameter
family x = (t + 1/t)/2, where the degree-n member takes the value
(t^n + 1/t^n)/2. That identity pins every coefficient without using the
recurrence the implementation runs on.
"""

from fractions import Fraction as F

import pytest

from polydecomp.chebyshev import chebyshev, chebyshev_reduction_identities, extract_odd_base
from polydecomp.decompose import enumerate_classes
from polydecomp.parsing import parse
from polydecomp.roots import poly_gcd


FROZEN = {
    1: "x",
    2: "2x^2 - 1",
    3: "4x^3 - 3x",
    4: "8x^4 - 8x^2 + 1",
    5: "16x^5 - 20x^3 + 5x",
    6: "32x^6 - 48x^4 + 18x^2 - 1",
}


@pytest.mark.parametrize("n,text", sorted(FROZEN.items()))
def test_frozen_table(n, text):
    assert chebyshev(n) == parse(text)


@pytest.mark.parametrize("t", [F(2), F(3, 2), F(-5, 3), F(1, 4), F(7)])
def test_closed_form_oracle(t):
    x = (t + 1 / t) / 2
    for n in range(1, 13):
        assert chebyshev(n)(x) == (t**n + t**-n) / 2


def test_endpoint_values():
    for n in range(1, 20):
        assert chebyshev(n)(F(1)) == 1
        assert chebyshev(n)(F(-1)) == (-1) ** n


def test_parity():
    for n in range(1, 16, 2):
        assert chebyshev(n).is_odd_function
    for n in range(2, 16, 2):
        even, odd = chebyshev(n).even_odd_split()
        assert odd.is_zero


def test_composition_law():
    for m in range(2, 9):
        for n in range(2, 9):
            if m * n <= 60:
                assert chebyshev(m).compose(chebyshev(n)) == chebyshev(m * n)


def test_commuting_family():
    t3, t5 = chebyshev(3), chebyshev(5)
    assert t3.compose(t5) == t5.compose(t3) == chebyshev(15)


def test_degree_and_lead():
    for n in range(1, 12):
        q = chebyshev(n)
        assert q.degree == n
        assert q.lead == 2 ** (n - 1)


def test_degree_two_unit_form():
    assert chebyshev(2) == parse("2x - 1").compose(parse("x^2"))


def test_swap_classes_at_degree_six():
    seqs = sorted(c.degree_sequence for c in enumerate_classes(chebyshev(6)))
    assert seqs == [(2, 3), (3, 2)]


def test_reduction_identities():
    assert chebyshev_reduction_identities((3, 5, 7)) == {3: True, 5: True, 7: True}


def test_derivative_gcds_constant():
    primes = (2, 3, 5, 7, 11, 13)
    for i, k in enumerate(primes):
        for l in primes[i + 1 :]:
            g = poly_gcd(chebyshev(k).derivative(), chebyshev(l).derivative())
            assert g.is_constant and not g.is_zero


def test_extract_odd_base():
    base = extract_odd_base(chebyshev(5))
    assert base == parse("16x^2 - 20x + 5")
    assert parse("x") * base.compose(parse("x^2")) == chebyshev(5)


def test_rejects_index_below_one():
    with pytest.raises(ValueError):
        chebyshev(0)
    with pytest.raises(ValueError):
        chebyshev(-3)


def test_extract_odd_base_rejects_even():
    with pytest.raises(ValueError):
        extract_odd_base(chebyshev(4))
