"""Rational roots, polynomial gcd, squarefree parts, and real-root counts.

Root finding is exact and complete over the rationals: candidates come
from the rational-root theorem applied to the primitive integer form, with
the constant and leading coefficients factored by Miller-Rabin plus
Pollard's rho (Brent variant).
"""

from __future__ import annotations

import math
import random
from fractions import Fraction

from .poly import Polynomial

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_probable_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    # Deterministic for n below ~3.3e24 with these bases.
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _pollard_brent(n: int) -> int:
    """A nontrivial factor of composite odd n."""
    rng = random.Random(n & 0xFFFFFFFF)
    while True:
        y = rng.randrange(1, n)
        c = rng.randrange(1, n)
        m = 128
        g = r = q = 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g


def factorize(n: int) -> dict[int, int]:
    """Prime factorization of n >= 1 as {prime: multiplicity}."""
    if n < 1:
        raise ValueError("factorize expects a positive integer")
    out: dict[int, int] = {}
    for p in (2, 3, 5, 7, 11, 13):
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    stack = [n] if n > 1 else []
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if is_probable_prime(m):
            out[m] = out.get(m, 0) + 1
            continue
        d = _pollard_brent(m)
        stack.append(d)
        stack.append(m // d)
    return out


def divisors(n: int) -> list[int]:
    """All positive divisors of n >= 1, ascending."""
    ds = [1]
    for p, k in factorize(n).items():
        ds = [d * p**i for d in ds for i in range(k + 1)]
    return sorted(ds)


def _primitive_integer_form(p: Polynomial) -> list[int]:
    den = math.lcm(*(c.denominator for c in p.coeffs))
    ints = [c.numerator * (den // c.denominator) for c in p.coeffs]
    content = math.gcd(*ints)
    return [c // content for c in ints]


# Above this size the extreme coefficients are not factored; roots are
# found modulo a large prime and lifted instead.
_DIVISOR_LIMIT = 1 << 48


def rational_roots(p: Polynomial) -> tuple[Fraction, ...]:
    """Exactly the rational roots of a nonzero polynomial, sorted.

    Small extreme coefficients take the classic route: factor them and
    try every divisor quotient. Huge ones would make factoring (or the
    divisor walk itself) blow up, so those polynomials go through roots
    modulo a 62-bit prime, Hensel lifting, and rational reconstruction,
    with every candidate verified exactly before it is believed.
    """
    if p.is_zero:
        raise ValueError("the zero polynomial has every point as a root")
    if p.is_constant:
        return ()
    found: set[Fraction] = set()
    v = p.x_valuation()
    if v > 0:
        found.add(Fraction(0))
        p = Polynomial(p.coeffs[v:])
    if p.is_constant:
        return tuple(sorted(found))
    ints = _primitive_integer_form(p)
    a0, an = abs(ints[0]), abs(ints[-1])
    if max(a0, an) > _DIVISOR_LIMIT:
        found.update(_rational_roots_lifted(p))
        return tuple(sorted(found))
    for num in divisors(a0):
        for den in divisors(an):
            if math.gcd(num, den) != 1:
                continue
            for cand in (Fraction(num, den), Fraction(-num, den)):
                if cand in found:
                    continue
                acc = 0
                for c in reversed(ints):
                    acc = acc * cand + c
                if acc == 0:
                    found.add(cand)
    return tuple(sorted(found))


def _pm_trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _pm_divmod(a: list[int], b: list[int], q: int) -> tuple[list[int], list[int]]:
    """Quotient and remainder mod q; b must be monic."""
    a = a[:]
    db, qt = len(b) - 1, []
    while len(a) - 1 >= db and a:
        c = a[-1]
        qt.append(c)
        off = len(a) - 1 - db
        for i in range(db + 1):
            a[off + i] = (a[off + i] - c * b[i]) % q
        a.pop()
    qt.reverse()
    return _pm_trim(qt), _pm_trim(a)


def _pm_monic(a: list[int], q: int) -> list[int]:
    inv = pow(a[-1], -1, q)
    return [(c * inv) % q for c in a]


def _pm_gcd(a: list[int], b: list[int], q: int) -> list[int]:
    a, b = a[:], b[:]
    while b:
        _, r = _pm_divmod(a, _pm_monic(b, q), q)
        a, b = b, r
    return _pm_monic(a, q) if a else a


def _pm_mulmod(a: list[int], b: list[int], f: list[int], q: int) -> list[int]:
    """(a * b) mod f mod q with f monic."""
    out = [0] * (len(a) + len(b) - 1) if a and b else []
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                out[i + j] = (out[i + j] + ca * cb) % q
    _, r = _pm_divmod(_pm_trim(out), f, q)
    return r


def _pm_powmod(base: list[int], e: int, f: list[int], q: int) -> list[int]:
    result = [1]
    base = base[:]
    while e:
        if e & 1:
            result = _pm_mulmod(result, base, f, q)
        base = _pm_mulmod(base, base, f, q)
        e >>= 1
    return result


def _pm_linear_roots(g: list[int], q: int, salt: int = 1) -> list[int]:
    """Roots of a monic product of distinct linear factors mod q."""
    if len(g) <= 1:
        return []
    if len(g) == 2:
        return [(-g[0]) % q]
    c = salt
    while True:
        split = _pm_powmod([c % q, 1], (q - 1) // 2, g, q)
        split = split[:] if split else [0]
        split[0] = (split[0] - 1) % q
        h = _pm_gcd(g, _pm_trim(split), q)
        if 0 < len(h) - 1 < len(g) - 1:
            rest, _ = _pm_divmod(g, h, q)
            return _pm_linear_roots(h, q, c + 1) + _pm_linear_roots(rest, q, c + 1)
        c += 1


def _eval_int_mod(ints: list[int], t: int, m: int) -> int:
    acc = 0
    for c in reversed(ints):
        acc = (acc * t + c) % m
    return acc


def _rat_reconstruct(t: int, m: int, num_bound: int, den_bound: int):
    """The fraction r/s with r = t*s mod m, |r| <= num_bound, 0 < s <= den_bound.

    Standard half-extended Euclid; returns None when no convergent fits
    the bounds. Completeness needs m > 2 * num_bound * den_bound, which
    the caller guarantees.
    """
    r0, r1 = m, t % m
    s0, s1 = 0, 1
    while r1 > num_bound:
        qq = r0 // r1
        r0, r1 = r1, r0 - qq * r1
        s0, s1 = s1, s0 - qq * s1
    if s1 == 0:
        return None
    if s1 < 0:
        s1, r1 = -s1, -r1
    if s1 > den_bound:
        return None
    return Fraction(r1, s1)


def _rational_roots_lifted(p: Polynomial) -> set[Fraction]:
    """Rational roots of p without factoring its huge extreme coefficients."""
    out: set[Fraction] = set()
    v = p.x_valuation()
    if v > 0:
        out.add(Fraction(0))
        p = Polynomial(p.coeffs[v:])
        if p.is_constant:
            return out
    g = poly_gcd(p, p.derivative())
    sf = p if g.is_constant else p // g
    sints = _primitive_integer_form(sf)
    n = len(sints) - 1
    if n == 1:
        root = Fraction(-sints[0], sints[1])
        if p(root) == 0:
            out.add(root)
        return out
    num_bound, den_bound = abs(sints[0]), abs(sints[-1])
    target = 2 * num_bound * den_bound + 1

    q = (1 << 62) + 29
    for _ in range(512):
        while not is_probable_prime(q):
            q += 2
        fbar = _pm_trim([c % q for c in sints])
        if len(fbar) == n + 1:
            fbar = _pm_monic(fbar, q)
            dbar = _pm_trim([(i * c) % q for i, c in enumerate(sints)][1:])
            if len(_pm_gcd(fbar, dbar, q)) == 1:
                break
        q += 2
    else:  # pragma: no cover - 512 bad primes in a row cannot happen
        raise RuntimeError("no usable prime found for modular root finding")

    xq = _pm_powmod([0, 1], q, fbar, q)
    xq = xq[:] if xq else [0, 0]
    while len(xq) < 2:
        xq.append(0)
    xq[1] = (xq[1] - 1) % q
    kernel = _pm_gcd(fbar, _pm_trim(xq), q)
    if len(kernel) <= 1:
        return out

    deriv = [i * c for i, c in enumerate(sints)][1:]
    for t in _pm_linear_roots(kernel, q):
        modulus = q
        while modulus < target:
            modulus *= modulus
            ft = _eval_int_mod(sints, t, modulus)
            inv = pow(_eval_int_mod(deriv, t, modulus), -1, modulus)
            t = (t - ft * inv) % modulus
        cand = _rat_reconstruct(t, modulus, num_bound, den_bound)
        if cand is not None and p(cand) == 0:
            out.add(cand)
    return out


def poly_gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    """Monic greatest common divisor (a constant gcd is returned as 1)."""
    while not b.is_zero:
        a, b = b, a % b
    if a.is_zero:
        return a
    return a * (1 / a.lead)


def squarefree_decomposition(p: Polynomial) -> tuple[Fraction, dict[int, Polynomial]]:
    """Yun's algorithm: p = content * prod(part^mult), parts monic squarefree.

    Returns (content, {multiplicity: part}) with only nonconstant parts.
    """
    if p.is_zero:
        raise ValueError("cannot decompose the zero polynomial")
    content = p.lead
    p = p * (1 / content)
    if p.is_constant:
        return content, {}
    parts: dict[int, Polynomial] = {}
    g = poly_gcd(p, p.derivative())
    if g.is_constant:
        return content, {1: p}
    b = p // g
    c = p.derivative() // g
    d = c - b.derivative()
    i = 1
    while not b.is_constant:
        ai = poly_gcd(b, d)
        if not ai.is_constant:
            parts[i] = ai
        b = b // ai
        c = d // ai
        d = c - b.derivative()
        i += 1
    return content, parts


def count_real_roots(p: Polynomial) -> int:
    """Number of distinct real roots, by a Sturm chain on the squarefree part."""
    if p.is_zero:
        raise ValueError("the zero polynomial is not admissible here")
    if p.is_constant:
        return 0
    g = poly_gcd(p, p.derivative())
    if not g.is_constant:
        p = p // g
    chain = [p, p.derivative()]
    while not chain[-1].is_zero:
        chain.append(-(chain[-2] % chain[-1]))
    chain.pop()

    def sign_changes(at_plus_infinity: bool) -> int:
        signs = []
        for q in chain:
            if q.is_zero:
                continue
            s = 1 if q.lead > 0 else -1
            if not at_plus_infinity and q.degree % 2 == 1:
                s = -s
            signs.append(s)
        return sum(1 for x, y in zip(signs, signs[1:]) if x != y)

    return sign_changes(False) - sign_changes(True)


def _integer_kth_root(n: int, k: int) -> int | None:
    """Exact k-th root of n >= 0, or None."""
    if n < 0:
        raise ValueError("negative radicand")
    if n in (0, 1):
        return n
    r = round(n ** (1.0 / k))
    for cand in (r - 1, r, r + 1):
        if cand >= 0 and cand**k == n:
            return cand
    # float guess can be off for very large n; fall back to bisection
    lo, hi = 0, 1 << (n.bit_length() // k + 2)
    while lo < hi:
        mid = (lo + hi) // 2
        if mid**k < n:
            lo = mid + 1
        else:
            hi = mid
    return lo if lo**k == n else None


def rational_kth_root(q: Fraction, k: int) -> Fraction | None:
    """Exact rational k-th root, respecting sign for odd k.  None if inexact."""
    if k < 1:
        raise ValueError("root index must be positive")
    if q < 0:
        if k % 2 == 0:
            return None
        r = rational_kth_root(-q, k)
        return None if r is None else -r
    num = _integer_kth_root(q.numerator, k)
    den = _integer_kth_root(q.denominator, k)
    if num is None or den is None:
        return None
    return Fraction(num, den)


def poly_kth_root(p: Polynomial, k: int) -> Polynomial | None:
    """The polynomial r with r**k == p, if one exists over the rationals."""
    if k < 1:
        raise ValueError("root index must be positive")
    if k == 1:
        return p
    if p.is_zero:
        return p
    if p.is_constant:
        c = rational_kth_root(p[0], k)
        return None if c is None else Polynomial.const(c)
    n = p.degree
    if n % k:
        return None
    d = n // k
    lead_root = rational_kth_root(p.lead, k)
    if lead_root is None:
        return None
    coeffs = [Fraction(0)] * (d + 1)
    coeffs[d] = lead_root
    # Match coefficients of p from the top down; each unknown enters the
    # expansion of r**k linearly with factor k * lead_root**(k-1).
    pivot = k * lead_root ** (k - 1)
    for j in range(1, d + 1):
        partial = Polynomial(coeffs) ** k
        coeffs[d - j] = (p[n - j] - partial[n - j]) / pivot
    r = Polynomial(coeffs)
    return r if r**k == p else None
