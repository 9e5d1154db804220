"""The monoid of odd polynomials under composition.

Odd polynomials (only odd-exponent terms) are closed under composition and
form a monoid whose units are the maps x -> mu*x.  Decomposition classes of
an odd polynomial match the general classes one-to-one once each general
right factor is adjusted to kill its even part, which is possible exactly
when that even part is constant.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Optional

from .chebyshev import chebyshev
from .decompose import enumerate_classes, right_factor, scale_canonicalize
from .poly import Polynomial, compose_all
from .roots import divisors, is_probable_prime, poly_kth_root, rational_kth_root


def is_odd(p: Polynomial) -> bool:
    return p.is_odd_function


@dataclass(frozen=True)
class OddDecomposition:
    factors: tuple[Polynomial, ...]
    target: Polynomial

    @staticmethod
    def of(factors) -> "OddDecomposition":
        fs = tuple(factors)
        if not fs:
            raise ValueError("a decomposition needs at least one factor")
        return OddDecomposition(fs, compose_all(fs))

    @property
    def degree_sequence(self) -> tuple[int, ...]:
        return tuple(f.degree for f in self.factors)

    def verify(self) -> bool:
        return all(is_odd(f) for f in self.factors) and (
            compose_all(self.factors) == self.target
        )


def adjust_to_odd(
    g: Polynomial, h: Polynomial
) -> Optional[tuple[Polynomial, Polynomial]]:
    """Rewrite g . h as g' . h' with h' odd, when a unit permits it.

    Every degree-preserving rewriting of the right factor has the form
    (g . u^{-1}, u . h) with u a unit, and (mu*h + lam) has zero even part
    iff the even part of h is the constant -lam/mu.  So the test is simply
    whether h's even part is constant; the left factor then becomes odd as
    well because an odd composite with an odd right factor forces it.
    """
    composite = g.compose(h)
    if not is_odd(composite):
        raise ValueError("adjust_to_odd expects an odd composite")
    even_part, _ = h.even_odd_split()
    if not even_part.is_constant:
        return None
    c = even_part[0]
    g_new = g.shift_arg(c)
    h_new = h - c
    assert is_odd(h_new) and is_odd(g_new)
    return g_new, h_new


def decompose_in_O(a: Polynomial) -> tuple[OddDecomposition, ...]:
    """All decomposition classes of a within the odd monoid.

    Runs the general class enumeration, then walks each class right to
    left adjusting every right factor to odd; classes with a non-adjustable
    factor are discarded (they admit no odd representative).  Surviving
    factor lists are re-canonicalized with scale units.
    """
    if not is_odd(a):
        raise ValueError("decompose_in_O expects an odd polynomial")
    if a.is_constant or a.degree < 2:
        raise ValueError("decompose_in_O expects degree >= 2")
    out = []
    for cls in enumerate_classes(a):
        fs = list(cls.factors)
        ok = True
        for i in range(len(fs) - 1, 0, -1):
            adjusted = adjust_to_odd(fs[i - 1], fs[i])
            if adjusted is None:
                ok = False
                break
            fs[i - 1], fs[i] = adjusted
        if not ok or not is_odd(fs[0]):
            continue
        out.append(OddDecomposition.of(scale_canonicalize(fs)))
    return tuple(out)


@lru_cache(maxsize=1024)
def is_irreducible_in_O(a: Polynomial) -> bool:
    """True when no proper-degree split of a exists inside the odd monoid."""
    if not is_odd(a):
        raise ValueError("is_irreducible_in_O expects an odd polynomial")
    if a.is_constant or a.degree < 2:
        raise ValueError("is_irreducible_in_O expects degree >= 2")
    n = a.degree
    for d in divisors(n):
        if d == 1 or d == n:
            continue
        split = right_factor(a, d)
        if split is None:
            continue
        if adjust_to_odd(*split) is not None:
            return False
    return True


@dataclass(frozen=True)
class OddSwapResult:
    kind: str  # "a" | "b" | "c"
    n: Optional[int] = None  # kind a: left Chebyshev index
    m: Optional[int] = None  # kind a: right Chebyshev index
    s: Optional[int] = None  # kinds b, c: the prime monomial degree
    t: Optional[int] = None  # kinds b, c: valuation of the structured factor
    alpha: Optional[Polynomial] = None

    def to_json(self) -> dict:
        out: dict = {"kind": self.kind}
        if self.n is not None:
            out["n"] = self.n
        if self.m is not None:
            out["m"] = self.m
        if self.s is not None:
            out["s"] = self.s
        if self.t is not None:
            out["t"] = self.t
        if self.alpha is not None:
            out["alpha"] = [str(c) for c in self.alpha.coeffs]
        return out


def _as_scaled_chebyshev(p: Polynomial) -> Optional[tuple[Fraction, Fraction]]:
    """Match p = mu1 * T_n(mu2 * x) exactly; returns (mu1, mu2) or None."""
    n = p.degree
    t = chebyshev(n)
    if n < 3 or p[n - 2] == 0 or t[n - 2] == 0:
        return None
    mu2_sq = (p[n] * t[n - 2]) / (p[n - 2] * t[n])
    mu2 = rational_kth_root(mu2_sq, 2)
    if mu2 is None or mu2 == 0:
        return None
    mu1 = p[n] / (t[n] * mu2**n)
    if mu1 * t.scale_arg(mu2) == p:
        return mu1, mu2
    return None


def _monomial_scale(p: Polynomial) -> Optional[Fraction]:
    """If p = c * x^deg, return c."""
    if p.is_zero or p.support() != (p.degree,):
        return None
    return p.lead


def _match_power_pattern(
    p: Polynomial, q: Polynomial
) -> Optional[tuple[int, int, Polynomial]]:
    """Match (p, q) ~ (x^t [alpha(x^2)]^s, x^s) up to scale units.

    q must be a monomial of odd prime degree s; p must split off exactly
    x^t (t odd) times an s-th power of an even polynomial.  Returns
    (s, t, alpha) with alpha(0) != 0 and alpha nonconstant.
    """
    if _monomial_scale(q) is None:
        return None
    s = q.degree
    if s < 3 or not is_probable_prime(s):
        return None
    t = p.x_valuation()
    if t == 0 or t % 2 == 0:
        return None
    body = Polynomial(p.coeffs[t:])
    if body.is_constant:
        return None
    a_poly = poly_kth_root(body, s)
    if a_poly is None or not a_poly.even_odd_split()[1].is_zero:
        return None
    alpha = a_poly.to_inner_power(2)
    if alpha is None or alpha.is_constant or alpha[0] == 0:
        return None
    return s, t, alpha


def _unit_equivalent_pair(
    p: Polynomial, q: Polynomial, p2: Polynomial, q2: Polynomial
) -> bool:
    """Whether (p2, q2) = (p . (mu x), (x / mu) . q) for some mu != 0."""
    if (p.degree, q.degree) != (p2.degree, q2.degree):
        return False
    ratio = None
    for i, c in enumerate(q.coeffs):
        if c != 0 or q2[i] != 0:
            if c == 0 or q2[i] == 0:
                return False
            r = c / q2[i]
            if ratio is None:
                ratio = r
            elif r != ratio:
                return False
    if ratio is None:
        return True
    return p.scale_arg(ratio) == p2 and ratio * q2 == q


def classify_odd_swap(
    p: Polynomial, q: Polynomial, p_star: Polynomial, q_star: Polynomial
) -> OddSwapResult:
    """Name the structural reason two O-irreducible pairs share a composite.

    Exactly three non-equivalent swap patterns exist for odd irreducible
    factors of coprime degrees: (a) two Chebyshev polynomials in either
    order, (b) a power x^s jumping right across x^t [alpha(x^2)]^s, and
    (c) the mirror of (b) with the power on the left.  Raises when the
    compositions differ, when the pairs are unit-equivalent (no swap
    happened), or when nothing matches.
    """
    for f in (p, q, p_star, q_star):
        if not is_odd(f):
            raise ValueError("classify_odd_swap expects odd factors")
        if not is_irreducible_in_O(f):
            raise ValueError("classify_odd_swap expects O-irreducible factors")
    if p.compose(q) != p_star.compose(q_star):
        raise ValueError("the two pairs do not share a composite")
    if _unit_equivalent_pair(p, q, p_star, q_star):
        raise ValueError("the pairs are unit-equivalent; no swap to classify")
    if gcd(p.degree, q.degree) != 1:
        raise ValueError("no pattern: factor degrees are not coprime")

    cheb_left = _as_scaled_chebyshev(p)
    cheb_right = _as_scaled_chebyshev(q)
    if cheb_left and cheb_right:
        n, m = p.degree, q.degree
        if (
            n != m
            and is_probable_prime(n)
            and is_probable_prime(m)
            and (q_star.degree, p_star.degree) == (n, m)
        ):
            return OddSwapResult(kind="a", n=n, m=m)

    fwd = _match_power_pattern(p, q)
    if fwd is not None and q_star.degree == p.degree and p_star.degree == q.degree:
        s, t, alpha = fwd
        return OddSwapResult(kind="b", s=s, t=t, alpha=alpha)

    back = _match_power_pattern(p_star, q_star)
    if back is not None and q.degree == p_star.degree and p.degree == q_star.degree:
        s, t, alpha = back
        return OddSwapResult(kind="c", s=s, t=t, alpha=alpha)

    raise ValueError("no pattern: the pair matches none of the swap forms")
