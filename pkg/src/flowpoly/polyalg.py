"""Exact univariate polynomial arithmetic over the integers, plus certified
real-root analysis.

Conventions used throughout:

* A polynomial is a dense coefficient vector, constant term first.  The zero
  polynomial is the empty vector; otherwise the last entry is nonzero.
* Every computation is exact.  Root counting goes through Sturm chains built
  with integer pseudo-remainders (content stripped at every step), evaluated
  at rational points.  No floating point is used anywhere in this module.
* Intervals are pairs of `Fraction`s.  An isolating interval (lo, hi) means
  the root lies in (lo, hi], with lo == hi reserved for an exact rational
  root.

The flow and chromatic polynomials that feed this module are monic, so their
rational roots are integers; the routines nevertheless handle general integer
polynomials (non-monic inputs may have non-integer rational roots, which are
extracted exactly rather than isolated).
"""

from __future__ import annotations

import itertools
import json
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

Scalar = Union[int, Fraction]


class ExactDivisionError(ArithmeticError):
    """Raised when a polynomial division that must be exact is not."""


class IntPoly:
    """Immutable dense polynomial with arbitrary-precision integer coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        for c in cs:
            if not isinstance(c, int):
                raise TypeError(f"integer coefficient expected, got {type(c).__name__}")
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("IntPoly is immutable")

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero() -> "IntPoly":
        return IntPoly(())

    @staticmethod
    def one() -> "IntPoly":
        return IntPoly((1,))

    @staticmethod
    def x() -> "IntPoly":
        return IntPoly((0, 1))

    @staticmethod
    def constant(c: int) -> "IntPoly":
        return IntPoly((c,))

    @staticmethod
    def x_minus(a: int) -> "IntPoly":
        """The monic linear polynomial x - a."""
        return IntPoly((-a, 1))

    # -- basic structure ---------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree of the polynomial; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> int:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        return isinstance(other, IntPoly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"IntPoly({list(self.coeffs)})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if k == 0:
                term = str(mag)
            elif k == 1:
                term = "x" if mag == 1 else f"{mag}*x"
            else:
                term = f"x^{k}" if mag == 1 else f"{mag}*x^{k}"
            parts.append((sign, term))
        sign0, term0 = parts[0]
        out = ("-" if sign0 == "-" else "") + term0
        for sign, term in parts[1:]:
            out += f" {sign} {term}"
        return out

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other: "IntPoly") -> "IntPoly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPoly(out)

    def __neg__(self) -> "IntPoly":
        return IntPoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other: "IntPoly") -> "IntPoly":
        return self + (-other)

    def __mul__(self, other: "IntPoly") -> "IntPoly":
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPoly.zero()
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai == 0:
                continue
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
        return IntPoly(out)

    def scale(self, c: int) -> "IntPoly":
        return IntPoly(tuple(c * a for a in self.coeffs))

    def __pow__(self, k: int) -> "IntPoly":
        if k < 0:
            raise ValueError("negative power")
        result = IntPoly.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def shift_up(self, k: int) -> "IntPoly":
        """Multiply by x^k."""
        if not self.coeffs:
            return self
        return IntPoly((0,) * k + self.coeffs)

    def evaluate(self, x: Scalar) -> Scalar:
        """Exact Horner evaluation at an integer or Fraction point."""
        acc: Scalar = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> "IntPoly":
        return IntPoly(tuple(k * c for k, c in enumerate(self.coeffs) if k > 0))

    def content(self) -> int:
        """GCD of the coefficients, with the sign of the leading coefficient."""
        if not self.coeffs:
            return 0
        g = 0
        for c in self.coeffs:
            g = math.gcd(g, abs(c))
        return g if self.leading > 0 else -g

    def primitive(self) -> "IntPoly":
        """Content-free version with positive leading coefficient."""
        c = self.content()
        if c == 0:
            return self
        return IntPoly(tuple(a // c for a in self.coeffs))

    def strip_content(self) -> "IntPoly":
        """Divide out |content|, preserving all coefficient signs.

        Sturm chains need this rather than primitive(): forcing a positive
        leading coefficient would flip signs and corrupt variation counts.
        """
        c = abs(self.content())
        if c == 0:
            return self
        return IntPoly(tuple(a // c for a in self.coeffs))


def poly_arith(p: IntPoly, q: IntPoly, op: str) -> IntPoly:
    """Dispatch add/sub/mul by name.  Exists so that callers can thread an
    operation symbol through without lambdas."""
    if op == "add":
        return p + q
    if op == "sub":
        return p - q
    if op == "mul":
        return p * q
    raise ValueError(f"unknown op {op!r}")


def exact_divide(p: IntPoly, q: IntPoly) -> IntPoly:
    """Return p / q when the division is exact with integer quotient.

    Division is performed over the rationals; an `ExactDivisionError` is
    raised if the remainder is nonzero or the quotient has a non-integer
    coefficient.

    >>> exact_divide(IntPoly([-6, 11, -6, 1]), IntPoly([-1, 1]))
    IntPoly([6, -5, 1])
    """
    if q.is_zero:
        raise ExactDivisionError("division by the zero polynomial")
    if p.is_zero:
        return IntPoly.zero()
    if p.degree < q.degree:
        raise ExactDivisionError("nonzero remainder (degree too small)")
    rem = [Fraction(c) for c in p.coeffs]
    div = q.coeffs
    dq = q.degree
    lead = Fraction(div[-1])
    quot = [Fraction(0)] * (len(rem) - dq)
    for k in range(len(rem) - 1, dq - 1, -1):
        c = rem[k] / lead
        quot[k - dq] = c
        if c:
            for j in range(dq + 1):
                rem[k - dq + j] -= c * div[j]
    if any(rem):
        raise ExactDivisionError("nonzero remainder")
    if any(c.denominator != 1 for c in quot):
        raise ExactDivisionError("quotient not integral")
    return IntPoly(tuple(int(c) for c in quot))


def _pseudo_rem_signed(a: IntPoly, b: IntPoly) -> IntPoly:
    """Pseudo-remainder of a by b, sign-corrected so that the result equals
    the true rational remainder times a *positive* constant."""
    d = a.degree - b.degree
    if d < 0:
        return a
    # lc(b)^(d+1) * a = q*b + r, computed entirely over the integers
    rem = list(a.coeffs)
    div = b.coeffs
    lb = b.leading
    for k in range(a.degree, b.degree - 1, -1):
        c = rem[k]
        # scale the remaining tail once per elimination step
        for j in range(k):
            rem[j] *= lb
        if c:
            off = k - b.degree
            for j in range(b.degree):
                rem[off + j] -= c * div[j]
        rem[k] = 0
    r = IntPoly(rem[: b.degree])
    # total multiplier applied was lb^(d+1); flip if that is negative
    if lb < 0 and (d + 1) % 2 == 1:
        return -r
    return r


def poly_gcd(p: IntPoly, q: IntPoly) -> IntPoly:
    """Primitive GCD via a pseudo-remainder sequence with content stripping.

    Returns the primitive gcd with positive leading coefficient; the gcd of
    anything with zero is the other argument's primitive part.
    """
    a, b = p.primitive(), q.primitive()
    if a.is_zero:
        return b
    if b.is_zero:
        return a
    if a.degree < b.degree:
        a, b = b, a
    while not b.is_zero:
        r = _pseudo_rem_signed(a, b).primitive()
        a, b = b, r
    return a.primitive()


def squarefree_decomposition(p: IntPoly) -> list[tuple[IntPoly, int]]:
    """Yun's algorithm: write p = c * prod f_i^i with each f_i squarefree,
    pairwise coprime, primitive, and of degree >= 1.

    Returns the list of (f_i, i) with deg f_i >= 1; the constant content is
    dropped.  Requires p != 0.
    """
    if p.is_zero:
        raise ValueError("zero polynomial")
    work = p.primitive()
    if work.degree < 1:
        return []
    g = poly_gcd(work, work.derivative())
    if g.degree == 0:
        return [(work, 1)]
    out: list[tuple[IntPoly, int]] = []
    # Yun's iteration.  Gauss's lemma keeps each quotient of primitive
    # polynomials integral, and exact_divide enforces that as a check.
    c = exact_divide(work, g)
    d = exact_divide(work.derivative(), g) - c.derivative()
    i = 1
    while c.degree > 0:
        if i > p.degree + 1:
            raise AssertionError("squarefree decomposition failed to terminate")
        f = poly_gcd(c, d)
        if f.degree > 0:
            out.append((f, i))
            c = exact_divide(c, f)
            d = exact_divide(d, f) - c.derivative()
        else:
            d = d - c.derivative()
        i += 1
    return out


# -- Sturm machinery ------------------------------------------------------


def _sturm_chain(p: IntPoly) -> tuple[IntPoly, ...]:
    """Sturm chain of a squarefree polynomial.

    Content is stripped at every step with strip_content (sign-preserving);
    each element therefore equals the classical chain element times a
    positive constant, which leaves all variation counts unchanged.
    """
    chain = [p.strip_content()]
    if p.degree >= 1:
        chain.append(p.derivative().strip_content())
        while chain[-1].degree > 0:
            r = _pseudo_rem_signed(chain[-2], chain[-1])
            if r.is_zero:
                break
            chain.append((-r).strip_content())
    return tuple(chain)


def _variations_at(chain: Sequence[IntPoly], x: Fraction) -> int:
    """Sign variations of the chain at x, zeros dropped.

    With zeros dropped this equals the variation count just to the right of
    x, so V(a) - V(b) counts distinct roots in the half-open interval (a, b].
    """
    signs = []
    for poly in chain:
        v = poly.evaluate(x)
        if v > 0:
            signs.append(1)
        elif v < 0:
            signs.append(-1)
    var = 0
    for s, t in zip(signs, signs[1:]):
        if s != t:
            var += 1
    return var


class SturmChain:
    """Reusable Sturm chain for one squarefree polynomial."""

    def __init__(self, squarefree: IntPoly):
        if squarefree.is_zero:
            raise ValueError("zero polynomial")
        self.poly = squarefree
        self.chain = _sturm_chain(squarefree)

    def variations(self, x: Scalar) -> int:
        return _variations_at(self.chain, Fraction(x))

    def count(self, a: Scalar, b: Scalar) -> int:
        """Distinct real roots in (a, b]."""
        a, b = Fraction(a), Fraction(b)
        if a >= b:
            return 0
        return self.variations(a) - self.variations(b)


def squarefree_part(p: IntPoly) -> IntPoly:
    """p with all root multiplicities flattened to one (primitive)."""
    if p.is_zero:
        raise ValueError("zero polynomial")
    if p.degree < 1:
        return IntPoly.one()
    g = poly_gcd(p, p.derivative())
    if g.degree == 0:
        return p.primitive()
    return exact_divide(p.primitive(), g).primitive()


def sturm_count(p: IntPoly, a: Scalar, b: Scalar) -> int:
    """Number of distinct real roots of p in the half-open interval (a, b].

    Exact: the chain is built with integer pseudo-remainders and evaluated at
    rational points.  Multiple roots are counted once.

    >>> sturm_count(IntPoly([2, -3, 1]), 0, 5)   # (x-1)(x-2)
    2
    >>> sturm_count(IntPoly([11, -7, 1]), 2, 3)  # root (7-sqrt(5))/2
    1
    """
    if p.is_zero:
        raise ValueError("cannot count roots of the zero polynomial")
    if p.degree < 1:
        return 0
    return SturmChain(squarefree_part(p)).count(a, b)


def cauchy_bound(p: IntPoly) -> Fraction:
    """A bound B with every real root of p in (-B, B)."""
    if p.is_zero or p.degree < 1:
        return Fraction(1)
    lead = abs(p.leading)
    top = max(abs(c) for c in p.coeffs[:-1])
    return 1 + Fraction(top, lead)


def newton_check(p: IntPoly) -> bool:
    """Necessary condition for a polynomial to have only real roots.

    Checks Newton's inequalities p_i^2 >= p_{i-1} p_{i+1} on the
    binomial-normalized coefficients p_i = a_i / C(d, i), exactly.  A False
    answer certifies a non-real root; True is only a pre-filter.

    >>> newton_check(IntPoly([6, -11, 6, -1]))  # -(x-1)(x-2)(x-3)
    True
    >>> newton_check(IntPoly([1, 0, 1]))        # x^2 + 1
    False
    """
    d = p.degree
    if d <= 1:
        return True
    a = p.coeffs
    for i in range(1, d):
        lhs = a[i] * a[i] * math.comb(d, i - 1) * math.comb(d, i + 1)
        rhs = a[i - 1] * a[i + 1] * math.comb(d, i) ** 2
        if lhs < rhs:
            return False
    return True


# -- root profiles ---------------------------------------------------------


@dataclass(frozen=True)
class RootProfile:
    """Exact summary of the real roots of an integer polynomial.

    count_in_1_2 counts roots in the open interval (1, 2) with multiplicity.
    gap_sum_enclosure is a certified rational interval containing the sum of
    (2 - u) over all roots u in (1, 2), again with multiplicity; its width is
    at most the tolerance the profile was requested at.  Isolating intervals
    cover the distinct non-integer real roots, pairwise disjoint, each pair
    (lo, hi) meaning the root lies in (lo, hi] with lo == hi for an exact
    rational root.
    """

    degree: int
    integer_roots: tuple[tuple[int, int], ...]
    count_in_1_2: int
    real_root_count: int
    real_rooted: bool
    gap_sum_enclosure: tuple[Fraction, Fraction]
    isolating_intervals: tuple[tuple[Fraction, Fraction], ...]


def _divisors(n: int) -> list[int]:
    n = abs(n)
    out = []
    i = 1
    while i * i <= n:
        if n % i == 0:
            out.append(i)
            if i != n // i:
                out.append(n // i)
        i += 1
    return sorted(out)


def _rational_roots(p: IntPoly) -> tuple[list[tuple[Fraction, int]], IntPoly]:
    """Extract all rational roots with multiplicity; return (roots, quotient).

    Assumes p has nonzero constant term.  The quotient has no rational roots.
    """
    work = p
    bound = cauchy_bound(work)
    roots: list[tuple[Fraction, int]] = []
    nums = _divisors(work.coeffs[0])
    dens = _divisors(work.leading)
    seen = set()
    for den in dens:
        for num in nums:
            for cand in (Fraction(num, den), Fraction(-num, den)):
                if cand in seen or abs(cand) >= bound:
                    continue
                seen.add(cand)
                mult = 0
                # a root num/den means divisibility by den*x - num (primitive)
                while work.degree >= 1 and work.evaluate(cand) == 0:
                    work = exact_divide(work, IntPoly((-cand.numerator, cand.denominator)))
                    mult += 1
                if mult:
                    roots.append((cand, mult))
    roots.sort(key=lambda rm: rm[0])
    return roots, work


def _isolate_roots_of_factor(
    chain: SturmChain, lo: Fraction, hi: Fraction, width: Fraction
) -> list[tuple[Fraction, Fraction]]:
    """Isolating intervals (a, b] of width <= width for every root of the
    chain's polynomial inside (lo, hi].  The polynomial must have no rational
    roots, so no bisection point is ever a root."""
    out = []
    total = chain.count(lo, hi)
    if total == 0:
        return out
    stack = [(lo, hi, total)]
    while stack:
        a, b, cnt = stack.pop()
        if cnt == 1 and b - a <= width:
            out.append((a, b))
            continue
        mid = (a + b) / 2
        left = chain.count(a, mid)
        if left:
            stack.append((a, mid, left))
        if cnt - left:
            stack.append((mid, b, cnt - left))
    out.sort()
    return out


def root_profile(p: IntPoly, tol: Scalar = Fraction(1, 10**9)) -> RootProfile:
    """Certified real-root profile of a nonzero integer polynomial.

    All counts are exact.  Rational roots are found by divisor trial on the
    (primitive) constant and leading coefficients and divided out; what
    remains is analyzed per squarefree factor with Sturm chains, so the
    reported multiplicities are exact as well.

    >>> prof = root_profile(IntPoly([-6, 11, -6, 1]))  # (x-1)(x-2)(x-3)
    >>> prof.integer_roots
    ((1, 1), (2, 1), (3, 1))
    >>> prof.real_rooted, prof.count_in_1_2
    (True, 0)
    """
    if p.is_zero:
        raise ValueError("root profile of the zero polynomial is undefined")
    tol = Fraction(tol)
    if tol <= 0:
        raise ValueError("tolerance must be positive")
    deg = p.degree

    # strip roots at zero
    zero_mult = 0
    coeffs = p.coeffs
    while coeffs and coeffs[0] == 0:
        zero_mult += 1
        coeffs = coeffs[1:]
    work = IntPoly(coeffs).primitive()

    rational, work = (_rational_roots(work) if work.degree >= 1 else ([], work))

    integer_roots: list[tuple[int, int]] = []
    if zero_mult:
        integer_roots.append((0, zero_mult))
    rational_nonint: list[tuple[Fraction, int]] = []
    for r, mult in rational:
        if r.denominator == 1:
            integer_roots.append((int(r), mult))
        else:
            rational_nonint.append((r, mult))
    integer_roots.sort()

    real_count = zero_mult + sum(m for _, m in rational)
    count12 = sum(m for r, m in rational if 1 < r < 2)
    gap_lo = gap_hi = sum((2 - r) * m for r, m in rational if 1 < r < 2)

    factors = squarefree_decomposition(work) if work.degree >= 1 else []
    chains = [(SturmChain(f), mult) for f, mult in factors]

    # exact counts per squarefree factor
    in12_factor: list[tuple[SturmChain, int, int]] = []
    for chain, mult in chains:
        bound = cauchy_bound(chain.poly)
        distinct = chain.count(-bound, bound)
        real_count += mult * distinct
        c12 = chain.count(1, 2)  # no rational roots left, so 2 is not a root
        count12 += mult * c12
        if c12:
            in12_factor.append((chain, mult, c12))

    # gap-sum enclosure: spread the tolerance over the irrational roots
    total12 = sum(mult * c for _, mult, c in in12_factor)
    if total12:
        share = tol / total12
        for chain, mult, _ in in12_factor:
            for a, b in _isolate_roots_of_factor(chain, Fraction(1), Fraction(2), share):
                gap_lo += mult * (2 - b)
                gap_hi += mult * (2 - a)

    # isolating intervals for every distinct non-integer real root
    intervals: list[tuple[Fraction, Fraction, int]] = []  # (lo, hi, owner id)
    for r, _ in rational_nonint:
        intervals.append((r, r, -1))
    for idx, (chain, _) in enumerate(chains):
        bound = cauchy_bound(chain.poly)
        for a, b in _isolate_roots_of_factor(chain, -bound, bound, Fraction(tol)):
            intervals.append((a, b, idx))
    # Refine until pairwise disjoint; the roots are distinct reals, so widths
    # halving must eventually separate every adjacent pair.  A degenerate
    # entry (r, r, -1) is an exact rational root: a half-open neighbour
    # (a, b] must end strictly below r to avoid containing it.
    for _round in range(500):
        intervals.sort()
        clash = None
        for i in range(len(intervals) - 1):
            a1, b1, o1 = intervals[i]
            a2, b2, o2 = intervals[i + 1]
            disjoint = (b1 < a2) or (b1 == a2 and o2 >= 0)
            if not disjoint:
                clash = i
                break
        if clash is None:
            break
        a1, b1, o1 = intervals[clash]
        a2, b2, o2 = intervals[clash + 1]
        if o1 >= 0:
            intervals[clash] = _halve(chains[o1][0], a1, b1) + (o1,)
        if o2 >= 0:
            intervals[clash + 1] = _halve(chains[o2][0], a2, b2) + (o2,)
    else:
        raise AssertionError("failed to separate isolating intervals")

    return RootProfile(
        degree=deg,
        integer_roots=tuple(integer_roots),
        count_in_1_2=count12,
        real_root_count=real_count,
        real_rooted=(real_count == deg),
        gap_sum_enclosure=(gap_lo, gap_hi),
        isolating_intervals=tuple((a, b) for a, b, _ in intervals),
    )


def _halve(chain: SturmChain, a: Fraction, b: Fraction) -> tuple[Fraction, Fraction]:
    """One bisection step on an interval (a, b] known to hold one root."""
    mid = (a + b) / 2
    if chain.count(a, mid) == 1:
        return (a, mid)
    return (mid, b)


def isolate_single_root(
    p: IntPoly, lo: Scalar, hi: Scalar, tol: Scalar = Fraction(1, 10**9)
) -> tuple[Fraction, Fraction]:
    """Shrink (lo, hi) around the unique root of p inside it.

    Requires (checked via Sturm count) that p has exactly one distinct root in
    the open interval (lo, hi); returns a rational interval of width <= tol
    containing it.  Used for pinning the cubic constants to any precision.
    """
    lo, hi, tol = Fraction(lo), Fraction(hi), Fraction(tol)
    if p.is_zero or p.degree < 1:
        raise ValueError("polynomial has no roots to isolate")
    chain = SturmChain(squarefree_part(p))
    inside = chain.count(lo, hi) - (1 if chain.poly.evaluate(hi) == 0 else 0)
    if inside != 1:
        raise ValueError(f"expected exactly one root in ({lo}, {hi}), found {inside}")
    a, b = lo, hi
    va = chain.variations(a)
    while b - a > tol:
        mid = (a + b) / 2
        if chain.poly.evaluate(mid) == 0:
            return (mid, mid)
        vm = chain.variations(mid)
        if va - vm == 1:
            b = mid
        else:
            a, va = mid, vm
    return (a, b)


# -- serialization ---------------------------------------------------------


def isolate_root_of_cubic(
    c: IntPoly, lo: Scalar, hi: Scalar, tol: Scalar = Fraction(1, 10**9)
) -> tuple[Fraction, Fraction]:
    """Alias of isolate_single_root for the cubic constants; the windows the
    callers use each contain exactly one root, which is re-checked."""
    return isolate_single_root(c, lo, hi, tol)


def poly_to_json(p: IntPoly) -> str:
    """JSON array of decimal coefficient strings, constant term first."""
    return json.dumps([str(c) for c in p.coeffs])


def poly_from_json(text: str) -> IntPoly:
    data = json.loads(text)
    if not isinstance(data, list) or not all(isinstance(s, str) for s in data):
        raise ValueError("expected a JSON array of decimal strings")
    return IntPoly(tuple(int(s) for s in data))
