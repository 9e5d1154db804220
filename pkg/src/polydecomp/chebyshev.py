"""Chebyshev polynomials over the rationals and their composition identities.

The first-kind family is defined here purely by its three-term recurrence,
which keeps every coefficient rational and exact.  No trigonometric or
closed-form construction is provided; the recurrence is normative.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .poly import Polynomial, Unit, X, compose_all


@lru_cache(maxsize=None)
def chebyshev(n: int) -> Polynomial:
    """T_n by the recurrence T_1 = x, T_2 = 2x^2 - 1, T_n = 2x T_{n-1} - T_{n-2}.

    deg T_n = n and the leading coefficient is 2^(n-1).  Raises for n < 1.
    """
    if n < 1:
        raise ValueError("Chebyshev index must be at least 1")
    if n == 1:
        return X
    if n == 2:
        return Polynomial([-1, 0, 2])
    return 2 * X * chebyshev(n - 1) - chebyshev(n - 2)


def extract_odd_base(p: Polynomial) -> Polynomial:
    """For odd p, the unique t with p = x * t(x^2)."""
    if p.is_zero or not p.is_odd_function:
        raise ValueError("extract_odd_base needs a nonzero odd polynomial")
    shifted = Polynomial(p.coeffs[1:])
    t = shifted.to_inner_power(2)
    assert t is not None
    return t


# The degree-2 conjugation witness: alpha = 2x - 1 maps T_2 to x^2 from the
# right, i.e. T_2 = alpha . x^2.
ALPHA = Unit(shift=Fraction(-1), scale=Fraction(2))


def chebyshev_reduction_identities(odd_range=(3, 5, 7)) -> dict[int, bool]:
    """Exact checks that conjugating x * t_n(x)^2 by alpha recovers T_n.

    For each odd n the two identities below are expanded and compared
    coefficient by coefficient:

        T_n       = alpha . [x * t_n(x)^2] . alpha^{-1}
        T_2 . T_n = alpha . [x * t_n(x)^2] . alpha^{-1} . T_2

    where t_n = extract_odd_base(T_n).  Returns a per-n pass flag.
    """
    results: dict[int, bool] = {}
    for n in odd_range:
        if n % 2 == 0:
            raise ValueError("reduction identities are stated for odd indices")
        t_n = extract_odd_base(chebyshev(n))
        core = X * t_n * t_n
        conj = ALPHA.apply_left(ALPHA.inverse().apply_right(core))
        first = conj == chebyshev(n)
        second = chebyshev(2).compose(chebyshev(n)) == conj.compose(chebyshev(2))
        results[n] = first and second
    return results
