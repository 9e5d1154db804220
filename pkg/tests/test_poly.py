"""Core polynomial arithmetic.

Hand-computed oracles for the small cases, hypothesis for the ring laws,
and a direct cross-check of the packed integer convolution against the
schoolbook product (the packed path is the one piece with room for
carry/sign mistakes).
"""

from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from polydecomp.poly import ONE, X, ZERO, Polynomial, Unit, compose_all
from polydecomp.poly import _int_conv, _int_mul_packed
from polydecomp.parsing import parse


def p(text):
    return parse(text)


# strategies kept small: exactness does not depend on size, only the
# packed-multiplication test needs big numbers and builds them itself
fracs = st.fractions(min_value=-9, max_value=9, max_denominator=8)
polys = st.lists(fracs, min_size=0, max_size=7).map(Polynomial)
nonconst = st.lists(fracs, min_size=2, max_size=6).map(
    lambda cs: Polynomial(cs[:-1] + [cs[-1] if cs[-1] != 0 else F(1)])
)


class TestConstruction:
    def test_trailing_zeros_stripped(self):
        assert Polynomial([1, 2, 0, 0]) == Polynomial([1, 2])
        assert Polynomial([0, 0, 0]).is_zero

    def test_degree_and_lead(self):
        q = p("3x^4 - x")
        assert q.degree == 4
        assert q.lead == 3
        assert ONE.degree == 0
        assert X.degree == 1
        with pytest.raises(ValueError):
            ZERO.degree

    def test_const_and_monomial(self):
        assert Polynomial.const(F(2, 3)) == p("2/3")
        assert Polynomial.monomial(5) == p("x^5")
        assert Polynomial.monomial(3, F(-1, 2)) == p("-1/2 x^3")

    def test_const_rejects_strings(self):
        with pytest.raises(TypeError):
            Polynomial.const("1/2")

    def test_support_and_valuation(self):
        q = p("x^5 + 2x^3")
        assert q.support() == (3, 5)
        assert q.x_valuation() == 3
        with pytest.raises(ValueError):
            ZERO.x_valuation()


class TestArithmetic:
    def test_product_oracle(self):
        assert p("x + 1") * p("x + 1") == p("x^2 + 2x + 1")
        assert p("x^2 - 1") * p("x^2 + 1") == p("x^4 - 1")
        assert p("1/2 x + 1/3") * p("2x - 3") == p("x^2 - 5/6 x - 1")

    def test_sum_difference(self):
        a, b = p("x^3 + x"), p("x^3 - x + 2")
        assert a + b == p("2x^3 + 2")
        assert a - b == p("2x - 2")
        assert a - a == ZERO

    def test_scalar_ops(self):
        assert p("x^2 + x") * F(1, 2) == p("1/2 x^2 + 1/2 x")
        assert p("x") + 3 == p("x + 3")

    def test_pow(self):
        assert p("x + 1") ** 3 == p("x^3 + 3x^2 + 3x + 1")
        assert p("x") ** 0 == ONE

    def test_divmod_oracle(self):
        q, r = divmod(p("x^3 - 2x + 5"), p("x - 1"))
        assert q == p("x^2 + x - 1")
        assert r == p("4")
        assert p("x^4 - 1") % p("x^2 - 1") == ZERO

    def test_evaluation(self):
        q = p("2x^3 - x + 4")
        assert q(0) == 4
        assert q(F(1, 2)) == F(15, 4)
        assert q(-2) == -10

    def test_derivative(self):
        assert p("x^4 + 3x^2 + 7").derivative() == p("4x^3 + 6x")
        assert p("5").derivative() == ZERO

    @given(a=polys, b=polys, c=polys)
    def test_ring_laws(self, a, b, c):
        assert a * b == b * a
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c

    @given(a=polys, b=nonconst)
    def test_divmod_identity(self, a, b):
        q, r = divmod(a, b)
        assert q * b + r == a
        assert r.is_zero or r.degree < b.degree


class TestCompose:
    def test_oracle(self):
        assert p("x^2 + 1").compose(p("x + 2")) == p("x^2 + 4x + 5")
        assert p("x^2").compose(p("x^3")) == p("x^6")
        # fractional coefficients exercise the denominator-clearing path
        assert p("1/2 x^2 + 1/3 x").compose(p("2x + 3")) == p("2x^2 + 20/3 x + 11/2")

    def test_constants(self):
        assert p("5").compose(p("x^2 + 1")) == p("5")
        assert p("x^2 + x").compose(p("3")) == p("12")

    @given(g=nonconst, h=nonconst)
    def test_degree_multiplicative(self, g, h):
        assert g.compose(h).degree == g.degree * h.degree

    @given(f=polys, g=nonconst, h=nonconst)
    @settings(max_examples=60)
    def test_associative(self, f, g, h):
        assert f.compose(g).compose(h) == f.compose(g.compose(h))

    @given(f=polys, h=polys, x0=fracs)
    def test_matches_pointwise(self, f, h, x0):
        assert f.compose(h)(x0) == f(h(x0))

    def test_compose_all(self):
        fs = (p("x^2 + 1"), p("x^3 - x"), p("2x + 5"))
        assert compose_all(fs) == fs[0].compose(fs[1]).compose(fs[2])
        assert compose_all((p("x^7"),)) == p("x^7")


big_ints = st.integers(min_value=-(10**40), max_value=10**40)


class TestPackedMultiply:
    """The Kronecker-substitution product must agree with the direct sum."""

    @staticmethod
    def schoolbook(a, b):
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
        return out

    @given(
        a=st.lists(big_ints, min_size=1, max_size=40),
        b=st.lists(big_ints, min_size=1, max_size=40),
    )
    @settings(max_examples=150)
    def test_agrees_with_schoolbook(self, a, b):
        assert _int_conv(a, b) == self.schoolbook(a, b)

    def test_packed_path_directly(self):
        # small vectors would normally take the schoolbook branch, so call
        # the packed routine itself on adversarial sign patterns
        cases = [
            ([1], [1]),
            ([-1, -1, -1], [-1, -1, -1]),
            ([2**63 - 1, -(2**63)], [2**63, 2**63 - 1]),
            ([0, 0, 5], [7, 0, 0]),
            ([10**30, -(10**30)], [10**30, 10**30]),
        ]
        for a, b in cases:
            assert _int_mul_packed(a, b) == self.schoolbook(a, b)

    def test_huge_coefficient_product(self):
        n = 10**200
        a = [n, -n, n]
        b = [-n, n]
        assert _int_conv(a, b) == self.schoolbook(a, b)


class TestStructure:
    def test_even_odd_split(self):
        even, odd = p("x^5 + 3x^4 + x^2 - x + 7").even_odd_split()
        assert even == p("3x^4 + x^2 + 7")
        assert odd == p("x^5 - x")

    @given(a=polys)
    def test_even_odd_sums_back(self, a):
        even, odd = a.even_odd_split()
        assert even + odd == a
        assert all(e % 2 == 0 for e in even.support())
        assert all(e % 2 == 1 for e in odd.support())

    def test_is_odd_function(self):
        assert p("x^5 - 2x^3 + x").is_odd_function
        assert not p("x^5 + x^2").is_odd_function
        assert ZERO.is_odd_function

    def test_to_inner_power(self):
        assert p("x^4 + x^2").to_inner_power(2) == p("x^2 + x")
        assert p("x^6 - 2x^3 + 5").to_inner_power(3) == p("x^2 - 2x + 5")
        assert p("x^3 + x^2").to_inner_power(2) is None

    def test_shift_scale_arg(self):
        q = p("x^2")
        assert q.shift_arg(F(1)) == p("x^2 + 2x + 1")
        assert q.scale_arg(F(3)) == p("9x^2")

    @given(a=polys, s=fracs)
    def test_shift_arg_pointwise(self, a, s):
        shifted = a.shift_arg(s)
        for x0 in (F(0), F(1), F(-2, 3)):
            assert shifted(x0) == a(x0 + s)

    def test_canonical_core(self):
        u, core = p("3x^2 + 6x + 5").canonical_core()
        assert core.lead == 1 and core(0) == 0
        assert u.apply_left(core) == p("3x^2 + 6x + 5")

    @given(a=nonconst)
    def test_canonical_core_roundtrip(self, a):
        u, core = a.canonical_core()
        assert core.lead == 1
        assert core(0) == 0
        assert u.apply_left(core) == a


class TestUnit:
    def test_apply_sides(self):
        u = Unit(F(1), F(2))  # 1 + 2x
        q = p("x^2")
        assert u.apply_left(q) == p("2x^2 + 1")
        assert u.apply_right(q) == p("4x^2 + 4x + 1")

    def test_as_poly(self):
        assert Unit(F(-3), F(5)).as_poly() == p("5x - 3")

    @given(
        sh=fracs,
        sc=fracs.filter(lambda q: q != 0),
        a=polys,
    )
    def test_group_laws(self, sh, sc, a):
        u = Unit(sh, sc)
        v = u.inverse()
        assert u.compose(v).is_identity
        assert v.compose(u).is_identity
        assert v.apply_left(u.apply_left(a)) == a
        assert u.apply_right(v.apply_right(a)) == a

    def test_identity(self):
        e = Unit.identity()
        assert e.is_identity
        assert e.as_poly() == X
