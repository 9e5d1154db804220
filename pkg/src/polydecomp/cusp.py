"""Decomposition theory inside the monoid of polynomials critical at 0.

Let A be the set of nonconstant polynomials f with f'(0) = 0.  A is closed
under composition, and unlike the full composition monoid it contains no
units at all: every degree-1 polynomial has nonvanishing derivative.  So
factorization questions in A are genuinely different from the unit-twisted
picture of the full monoid.  This module provides:

  * membership and the two-branch composition criterion for A,
  * admissible shifts (rational critical points) of a factor,
  * classification of A-irreducible elements into the two kinds: elements
    that are already indecomposable in the full monoid, and elements that
    decompose there but admit no splitting inside A,
  * enumeration of all decompositions of an element of A into
    A-irreducibles, up to the scale units that survive in this setting,
  * the index invariant at the origin, the defect against the full
    decomposition length, and regularity/realizability reporting,
  * skeletons of the maximal-length A-decompositions and their rational
    instantiations,
  * local rewrite moves on adjacent factors (shift transfer, Chebyshev
    swap, and the two power/pattern swaps), with exact rational arithmetic
    and explicit errors when a move would require leaving the rationals.

Everything is exact; no floating point is used anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, prod

from .chebyshev import chebyshev
from .decompose import enumerate_classes, is_indecomposable, scale_canonicalize
from .poly import Polynomial, compose_all
from .roots import is_probable_prime, poly_kth_root, rational_kth_root, rational_roots


class PatternMismatchError(ValueError):
    """The factors at the requested position do not fit the move's pattern."""


class IrrationalRootRequiredError(ValueError):
    """The move exists over the reals (or complexes) but needs data that is
    not rational, such as a critical point or a k-th root of a coefficient."""


def in_A(p: Polynomial) -> bool:
    """True when p'(0) = 0, i.e. p is critical at the origin."""
    return p.derivative()(0) == 0


def compose_in_A_criterion(a: Polynomial, b: Polynomial) -> tuple[bool, str]:
    """Decide in_A(a after b) and report which branch makes it so.

    The composite is critical at 0 exactly when the inner factor is, or
    when the outer factor is critical at the inner factor's value at 0.
    Returns (membership, branch) with branch one of "inner-in-A",
    "outer-critical-at-image", "neither".
    """
    if a.is_constant or b.is_constant:
        raise ValueError("composition criterion needs nonconstant factors")
    if in_A(b):
        return True, "inner-in-A"
    if a.derivative()(b(Fraction(0))) == 0:
        return True, "outer-critical-at-image"
    return False, "neither"


def admissible_shifts(p: Polynomial) -> tuple[Fraction, ...]:
    """Rational critical points of p, sorted ascending.

    A shift c is admissible for p when (p after (x + c))'(0) = 0, which is
    exactly p'(c) = 0.  For a degree-1 factor there are none.
    """
    if p.is_constant:
        raise ValueError("admissible shifts are defined for nonconstant polynomials")
    return tuple(sorted(rational_roots(p.derivative())))


def classify_CD(p: Polynomial) -> str:
    """Classify an element of A as an A-irreducible of kind C or D.

    "C": indecomposable in the full composition monoid.
    "D": decomposable there, but every decomposition class has a tail
         (second-through-last composite) with nonzero derivative at 0, so
         no splitting point can be moved into A by any unit, rational or
         not.
    "not-irreducible-in-A": some class admits such a splitting.
    "not-in-A": p is not critical at the origin.

    Raises ValueError below degree 2.
    """
    if p.is_constant or p.degree < 2:
        raise ValueError("classification needs degree at least 2")
    if not in_A(p):
        return "not-in-A"
    if is_indecomposable(p):
        return "C"
    for cls in enumerate_classes(p):
        tail = compose_all(cls.factors[1:])
        if tail.derivative()(0) == 0:
            return "not-irreducible-in-A"
    return "D"


def _is_A_irreducible(p: Polynomial) -> bool:
    return classify_CD(p) in ("C", "D")


def _class_index_positions(factors: tuple[Polynomial, ...]) -> tuple[int, ...]:
    """1-based positions i with p_i'(t_i) = 0, where t_i is the value at 0
    of everything to the right of p_i."""
    out = []
    v = Fraction(0)
    for i in range(len(factors) - 1, -1, -1):
        if factors[i].derivative()(v) == 0:
            out.append(i + 1)
        v = factors[i](v)
    return tuple(sorted(out))


def _index_and_bases(a: Polynomial):
    if a.is_constant or a.degree < 2:
        raise ValueError("index at zero needs degree at least 2")
    if not in_A(a):
        raise ValueError("index at zero is defined on elements critical at 0")
    per_class = []
    for cls in enumerate_classes(a):
        positions = _class_index_positions(cls.factors)
        # a in A forces at least one critical position in every class
        assert positions, "element of A with no critical position in a class"
        per_class.append((cls, max(positions)))
    index = max(best for _, best in per_class)
    bases = tuple((cls, best) for cls, best in per_class if best == index)
    return index, bases


def index_at_zero(a: Polynomial) -> int:
    """The largest i, over all decomposition classes, such that the i-th
    factor is critical at the point fed to it when evaluating at 0."""
    index, _ = _index_and_bases(a)
    return index


@dataclass(frozen=True)
class CuspReport:
    """Summary of how an element of A sits between the two monoids."""

    degree: int
    length: int
    index: int
    rational_realizable: bool

    @property
    def defect(self) -> int:
        return self.length - self.index

    @property
    def regular(self) -> bool:
        return self.defect == 0

    def to_json(self) -> dict:
        return {
            "degree": self.degree,
            "length": self.length,
            "index_at_zero": self.index,
            "defect": self.defect,
            "regular": self.regular,
            "rational_realizable": self.rational_realizable,
        }


def cusp_report(a: Polynomial) -> CuspReport:
    """Length of full decompositions, index at zero, defect, regularity,
    and whether a maximal A-decomposition can be realized with rational
    shifts.

    Raises ValueError when a is not in A or has degree below 2.
    """
    index, bases = _index_and_bases(a)
    classes = enumerate_classes(a)
    lengths = {len(cls.factors) for cls in classes}
    assert len(lengths) == 1, "decomposition classes of unequal length"
    length = lengths.pop()
    realizable = any(
        all(admissible_shifts(cls.factors[j]) for j in range(i - 1))
        for cls, i in bases
    )
    return CuspReport(
        degree=a.degree, length=length, index=index, rational_realizable=realizable
    )


@dataclass(frozen=True)
class ADecompositions:
    """All decompositions of the target into A-irreducibles, up to the
    scale units threaded between factors."""

    target: Polynomial
    members: tuple[tuple[Polynomial, ...], ...]

    @property
    def lengths(self) -> tuple[int, ...]:
        return tuple(sorted({len(m) for m in self.members}))

    def by_length(self) -> dict[int, tuple[tuple[Polynomial, ...], ...]]:
        out: dict[int, list] = {}
        for m in self.members:
            out.setdefault(len(m), []).append(m)
        return {k: tuple(v) for k, v in sorted(out.items())}

    def to_json(self) -> dict:
        return {
            "degree": self.target.degree,
            "lengths": list(self.lengths),
            "members": [
                [[str(c) for c in f.coeffs] for f in m] for m in self.members
            ],
        }


def _bracketings(r: int):
    for mask in range(2 ** (r - 1)):
        cuts = [0] + [i for i in range(1, r) if (mask >> (i - 1)) & 1] + [r]
        yield [(cuts[t], cuts[t + 1]) for t in range(len(cuts) - 1)]


def _member_key(member) -> tuple:
    return tuple(
        tuple((c.numerator, c.denominator) for c in f.coeffs) for f in member
    )


def enumerate_A_decompositions(a: Polynomial) -> ADecompositions:
    """Enumerate every decomposition of a into A-irreducible factors.

    Each full decomposition class is cut into consecutive blocks in all
    possible ways.  Between adjacent blocks only a shift unit x + c can be
    threaded while keeping both sides in A, and c must be an admissible
    shift of the whole left block; the final block must itself be critical
    at 0.  Blocks that fail to classify as C or D are discarded.  Members
    are normalized with scale units (every non-leftmost factor monic) and
    deduplicated across classes and bracketings.
    """
    if a.is_constant or a.degree < 2:
        raise ValueError("A-decompositions need degree at least 2")
    if not in_A(a):
        raise ValueError("not an element of A: derivative at 0 is nonzero")

    found: dict[tuple, tuple[Polynomial, ...]] = {}

    def thread(blocks, j, lam_prev, acc):
        if j == len(blocks) - 1:
            block = blocks[j]
            if block.derivative()(0) != 0:
                return
            dressed = block - lam_prev
            if _is_A_irreducible(dressed):
                member = scale_canonicalize(acc + [dressed])
                found[_member_key(member)] = member
            return
        for lam in admissible_shifts(blocks[j]):
            dressed = blocks[j].shift_arg(lam) - lam_prev
            if _is_A_irreducible(dressed):
                thread(blocks, j + 1, lam, acc + [dressed])

    for cls in enumerate_classes(a):
        fs = cls.factors
        for spans in _bracketings(len(fs)):
            blocks = [compose_all(fs[lo:hi]) for lo, hi in spans]
            thread(blocks, 0, Fraction(0), [])

    members = sorted(
        found.values(),
        key=lambda m: (len(m), tuple(f.degree for f in m), _member_key(m)),
    )
    return ADecompositions(target=a, members=tuple(members))


@dataclass(frozen=True)
class MaxBase:
    """One way of reaching the maximal A-decomposition length.

    The first position-1 factors of the class are kept whole and each needs
    one admissible shift; everything from the critical position rightward
    is fused into a single tail block.
    """

    target: Polynomial
    factors: tuple[Polynomial, ...]
    position: int
    shift_sets: tuple[tuple[Fraction, ...], ...]

    @property
    def degree_multiset(self) -> tuple[int, ...]:
        head = [f.degree for f in self.factors[: self.position - 1]]
        tail = prod(f.degree for f in self.factors[self.position - 1 :])
        return tuple(sorted(head + [tail]))

    @property
    def rational_instantiable(self) -> bool:
        return all(self.shift_sets)

    def instantiate(self, shifts) -> tuple[Polynomial, ...]:
        """Build the concrete A-decomposition for one choice of shifts.

        shifts must pick one admissible shift per head factor.  The result
        recomposes to the target, every factor lies in A, and the tail
        block is A-irreducible by maximality.
        """
        shifts = tuple(Fraction(s) for s in shifts)
        if len(shifts) != self.position - 1:
            raise ValueError(
                f"expected {self.position - 1} shifts, got {len(shifts)}"
            )
        for s, allowed in zip(shifts, self.shift_sets):
            if s not in allowed:
                raise ValueError(f"shift {s} is not admissible here")
        out = []
        lam_prev = Fraction(0)
        for j, s in enumerate(shifts):
            out.append(self.factors[j].shift_arg(s) - lam_prev)
            lam_prev = s
        tail = compose_all(self.factors[self.position - 1 :]) - lam_prev
        out.append(tail)
        assert compose_all(out) == self.target
        assert all(in_A(f) for f in out)
        assert _is_A_irreducible(tail)
        return tuple(out)

    def to_json(self) -> dict:
        return {
            "class": [[str(c) for c in f.coeffs] for f in self.factors],
            "position": self.position,
            "shift_sets": [[str(s) for s in ss] for ss in self.shift_sets],
            "degree_multiset": list(self.degree_multiset),
            "rational_instantiable": self.rational_instantiable,
        }


@dataclass(frozen=True)
class MaxSkeleton:
    """All bases of maximal-length A-decompositions of the target."""

    target: Polynomial
    index: int
    bases: tuple[MaxBase, ...]

    @property
    def degree_multisets(self) -> tuple[tuple[int, ...], ...]:
        return tuple(sorted({b.degree_multiset for b in self.bases}))

    def default_instantiations(self) -> tuple[tuple[Polynomial, ...], ...]:
        """One concrete maximal A-decomposition per rationally instantiable
        base, using the smallest admissible shift at every position."""
        out = []
        for b in self.bases:
            if b.rational_instantiable:
                out.append(b.instantiate([ss[0] for ss in b.shift_sets]))
        return tuple(out)

    def to_json(self) -> dict:
        return {
            "degree": self.target.degree,
            "index_at_zero": self.index,
            "bases": [b.to_json() for b in self.bases],
            "degree_multisets": [list(m) for m in self.degree_multisets],
        }


def max_decompositions(a: Polynomial) -> MaxSkeleton:
    """Skeletons of the maximal-length A-decompositions of a.

    The maximal length equals the index at zero; each class and critical
    position achieving it contributes one base.  A base is flagged, not
    rejected, when some head factor has no rational admissible shift.
    """
    index, bases = _index_and_bases(a)
    built = []
    for cls, i in bases:
        fs = cls.factors
        built.append(
            MaxBase(
                target=a,
                factors=fs,
                position=i,
                shift_sets=tuple(admissible_shifts(fs[j]) for j in range(i - 1)),
            )
        )
    built.sort(key=lambda b: (b.position, _member_key(b.factors)))
    return MaxSkeleton(target=a, index=index, bases=tuple(built))


@dataclass(frozen=True)
class MoveResult:
    """Outcome of a local rewrite move; factors recompose to the original
    composite, and in_A reports per-factor membership honestly (a shift
    transfer may move a factor out of A)."""

    kind: str
    position: int
    factors: tuple[Polynomial, ...]

    @property
    def in_A(self) -> tuple[bool, ...]:
        return tuple(in_A(f) for f in self.factors)

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "position": self.position,
            "factors": [[str(c) for c in f.coeffs] for f in self.factors],
            "in_A": list(self.in_A),
        }


def _substitute_power(g: Polynomial, k: int) -> Polynomial:
    """g(x^k)."""
    coeffs = [Fraction(0)] * (k * g.degree + 1)
    for i, c in enumerate(g.coeffs):
        coeffs[k * i] = c
    return Polynomial(coeffs)


def _has_dressed_chebyshev_shape(p: Polynomial) -> bool:
    """True when p = u1 after T_k after u2 for degree-1 maps over some
    field extension, k = deg p odd.

    Depressing p at the forced center strips the shifts; what remains must
    be mu1 * T_k(mu2 * x) plus a constant.  Only mu2^2 and mu1*mu2 are
    visible rationally, so the test works with those combinations and never
    needs mu2 itself.
    """
    k = p.degree
    if k < 3 or k % 2 == 0:
        return False
    center = -p[k - 1] / (k * p.lead)
    dep = p.shift_arg(center)
    even, odd = dep.even_odd_split()
    if not even.is_constant or odd.is_zero:
        return False
    t = chebyshev(k)
    if odd[k - 2] == 0:
        return False
    m = (odd[k] * t[k - 2]) / (odd[k - 2] * t[k])
    if m == 0:
        return False
    nu = odd[k] / (t[k] * m ** ((k - 1) // 2))
    model = Polynomial(
        [
            nu * t[j] * m ** ((j - 1) // 2) if j % 2 == 1 else Fraction(0)
            for j in range(k + 1)
        ]
    )
    return model == odd


def _dressed_odd_chebyshev_degree(p: Polynomial) -> int | None:
    """The degree, when p is a unit-dressed Chebyshev of odd prime degree."""
    k = p.degree
    if k < 3 or not is_probable_prime(k):
        return None
    return k if _has_dressed_chebyshev_shape(p) else None


def _binomial_power_degree(p: Polynomial) -> int | None:
    """If p = a*x^q + b with q prime, return q."""
    q = p.degree
    if q < 2 or not is_probable_prime(q):
        return None
    return q if set(p.support()) <= {0, q} else None


def _head_shift(s: int, g: Polynomial, p: int) -> Fraction:
    """Smallest rational critical point of x^s * g(x)^p, preferring 0.

    0 works exactly when s >= 2.  Raises IrrationalRootRequiredError when
    no rational critical point exists.
    """
    outer = Polynomial.monomial(s) * g**p
    if s >= 2:
        return Fraction(0)
    roots = sorted(rational_roots(outer.derivative()))
    if not roots:
        raise IrrationalRootRequiredError(
            "the rewritten outer factor has no rational critical point"
        )
    return roots[0]


def _tail_scale_shift(s: int, g: Polynomial, p: int, mu: Fraction) -> Fraction:
    """Shift delta making (x^s g(x^p))(mu x + mu delta) critical at 0."""
    inner = _substitute_power(g, p) * Polynomial.monomial(s)
    if s >= 2:
        return Fraction(0)
    roots = sorted(rational_roots(inner.derivative()))
    if not roots:
        raise IrrationalRootRequiredError(
            "the rewritten inner factor has no rational critical point"
        )
    return roots[0] / mu


def _move_shift_transfer(fs: list[Polynomial], i: int, shift: Fraction):
    """Move a shift unit across the pair at i: [p, q] -> [p(x+c), q - c].

    Accepted when c is an admissible shift of p, or when p itself is
    critical at 0 (the inverse direction of the first case, which is what
    makes the move involutive)."""
    p = fs[i]
    dp = p.derivative()
    if dp(shift) != 0 and dp(Fraction(0)) != 0:
        raise PatternMismatchError(
            f"shift {shift} is not admissible for the factor at this position"
        )
    fs[i] = p.shift_arg(shift)
    fs[i + 1] = fs[i + 1] - shift


def _move_chebyshev_swap(fs: list[Polynomial], i: int):
    ka = _dressed_odd_chebyshev_degree(fs[i])
    kb = _dressed_odd_chebyshev_degree(fs[i + 1])
    if ka is None or kb is None:
        raise PatternMismatchError(
            "both factors must be unit-dressed Chebyshev polynomials of odd "
            "prime degree"
        )
    if ka == kb:
        raise PatternMismatchError("factor degrees must be distinct (coprime)")
    if not _has_dressed_chebyshev_shape(fs[i].compose(fs[i + 1])):
        raise PatternMismatchError(
            "the dressing units between the two Chebyshev factors do not "
            "cancel, so the pair does not compose to a dressed Chebyshev"
        )
    # Swapping needs shifts at critical points of the larger-degree
    # Chebyshev polynomial; for degree 5 and up none of them is rational.
    raise IrrationalRootRequiredError(
        f"swapping Chebyshev factors of degrees {ka} and {kb} needs a shift "
        f"at a critical point of the degree-{max(ka, kb)} factor, and those "
        "are irrational"
    )


def _recover_power_composite(w: Polynomial, p: int):
    """Given w with w(0) = 0 and support inside s + pZ, return (s, g) with
    w = x^s g(x^p) exactly; None when the support pattern fails."""
    if w.is_zero or w(Fraction(0)) != 0:
        return None
    s = w.x_valuation()
    if any(e % p != s % p for e in w.support()):
        return None
    g = Polynomial(w.coeffs[s::p])
    assert _substitute_power(g, p) * Polynomial.monomial(s) == w
    return s, g


def _move_power_inward(fs: list[Polynomial], i: int):
    """[a x^p + b, x^s g(x^p) dressed] -> the p-th power moves right.

    Uses x^p after (x^s g(x^p)) = (x^s g(x)^p) after x^p.  In the terminal
    case the inner factor must carry no trailing shift; otherwise the
    stripped shift is pushed into the factor after the pair.
    """
    pi, pnext = fs[i], fs[i + 1]
    p = _binomial_power_degree(pi)
    if p is None:
        raise PatternMismatchError("left factor is not a binomial a*x^p + b")
    if gcd(p, pnext.degree) != 1:
        raise PatternMismatchError("factor degrees are not coprime")
    terminal = i + 1 == len(fs) - 1
    n = pnext.degree
    center = -pnext[n - 1] / (n * pnext.lead)
    w = pnext.shift_arg(center)
    nu = -center
    if terminal and nu != 0:
        raise PatternMismatchError(
            "terminal move: the inner factor carries a trailing shift that "
            "nothing to the right can absorb"
        )
    rec = _recover_power_composite(w, p)
    if rec is None:
        raise PatternMismatchError(
            "right factor is not x^s g(x^p) up to a shift unit"
        )
    s, g = rec
    if pnext.derivative()(0) != 0:
        raise PatternMismatchError("right factor is not critical at 0")
    a, b = pi.lead, pi[0]
    gamma = _head_shift(s, g, p)
    new_outer = (Polynomial.monomial(s) * g**p).shift_arg(gamma) * a + b
    new_inner = Polynomial.monomial(p) - gamma
    fs[i] = new_outer
    fs[i + 1] = new_inner
    if not terminal:
        fs[i + 2] = fs[i + 2] + nu


def _move_power_outward(fs: list[Polynomial], i: int):
    """[x^s g(x)^p dressed, a x^p + b] -> the p-th power moves left.

    Mirror of the inward move.  The right factor's value at 0 pins the
    dressing of the left factor; the scale of the right factor must have a
    rational p-th root to re-enter the rewritten inner factor.
    """
    pi, pnext = fs[i], fs[i + 1]
    p = _binomial_power_degree(pnext)
    if p is None:
        raise PatternMismatchError("right factor is not a binomial a*x^p + b")
    if gcd(p, pi.degree) != 1:
        raise PatternMismatchError("factor degrees are not coprime")
    if not in_A(pi):
        raise PatternMismatchError("left factor is not critical at 0")
    x0 = pnext(Fraction(0))
    beta = pi(x0)
    lin = Polynomial([-x0, Fraction(1)])
    body = pi - beta
    s = 0
    while True:
        q, rem = divmod(body, lin)
        if not rem.is_zero:
            break
        body, s = q, s + 1
    if s == 0 or gcd(p, s) != 1:
        raise PatternMismatchError(
            "left factor does not vanish to a power-coprime order at the "
            "right factor's value at 0"
        )
    ghat = poly_kth_root(body * (1 / pi.lead), p)
    if ghat is None:
        raise PatternMismatchError(
            "left factor is not lc * (x - x0)^s * G(x)^p at the right "
            "factor's value at 0"
        )
    g = ghat.shift_arg(x0)
    assert (lin**s * ghat**p) * pi.lead + beta == pi
    mu = rational_kth_root(pnext.lead, p)
    if mu is None:
        raise IrrationalRootRequiredError(
            f"the right factor's scale has no rational {p}-th root"
        )
    new_outer = Polynomial.monomial(p, pi.lead) + beta
    inner_core = _substitute_power(g, p) * Polynomial.monomial(s)
    terminal = i + 1 == len(fs) - 1
    if terminal:
        fs[i] = new_outer
        fs[i + 1] = inner_core.scale_arg(mu)
        return
    delta = _tail_scale_shift(s, g, p, mu)
    fs[i] = new_outer
    fs[i + 1] = inner_core.scale_arg(mu).shift_arg(delta)
    fs[i + 2] = fs[i + 2] - delta


_MOVE_KINDS = ("adm", "ca", "cb", "cc")


def apply_cusp_move(
    factors,
    position: int,
    kind: str,
    shift: Fraction | None = None,
) -> MoveResult:
    """Apply one local rewrite move at a 1-based position.

    Kinds: "adm" transfers a shift unit across the pair (requires shift);
    "ca" swaps adjacent unit-dressed Chebyshev factors of distinct odd
    prime degrees; "cb" moves a prime power x^p from left to right across
    an x^s g(x^p) pattern; "cc" is the mirror move from right to left.

    Raises PatternMismatchError when the factors do not fit the kind,
    IrrationalRootRequiredError when the rewrite exists but needs
    irrational data, and ValueError for bad positions or arguments.  The
    result always recomposes to the original composite.
    """
    fs = [f for f in factors]
    if any(f.is_constant for f in fs):
        raise ValueError("factors must be nonconstant")
    k = kind.lower()
    if k not in _MOVE_KINDS:
        raise ValueError(f"unknown move kind {kind!r}")
    if not 1 <= position <= len(fs) - 1:
        raise ValueError("position out of range: the move acts on a pair")
    before = compose_all(fs)
    i = position - 1
    if k == "adm":
        if shift is None:
            raise ValueError("the shift transfer move needs a shift")
        _move_shift_transfer(fs, i, Fraction(shift))
    elif k == "ca":
        _move_chebyshev_swap(fs, i)
    elif k == "cb":
        _move_power_inward(fs, i)
    else:
        _move_power_outward(fs, i)
    result = MoveResult(kind=k, position=position, factors=tuple(fs))
    assert compose_all(result.factors) == before
    return result
