"""Exact univariate polynomial arithmetic over the integers.

Polynomials are dense ascending coefficient vectors over Python's
arbitrary-precision integers; the empty vector is the zero polynomial.
Rational scalars are ``fractions.Fraction``.  On top of the ring
operations the module provides Sturm chains and exact real-root
counting over half-open intervals ``(lo, hi]`` with rational or
infinite endpoints, plus bisection-based root isolation used for
diagnostics.

Everything here is pure value semantics: polynomials and chains are
immutable and safe to share between threads.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import gcd as int_gcd
from typing import Iterable, Optional, Sequence, Union

Rational = Fraction
#: Accepted exact scalar types for evaluation points.
RationalLike = Union[int, Fraction]


class NotDivisibleError(ArithmeticError):
    """Raised by exact division when the divisor does not divide the dividend."""

    def __init__(self, message: str, remainder: "IntPoly | None" = None):
        super().__init__(message)
        self.remainder = remainder


class IntPoly:
    """Dense polynomial over the integers, coefficients ascending by degree."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):  # immutability guard
        raise AttributeError("IntPoly is immutable")

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls) -> "IntPoly":
        return cls(())

    @classmethod
    def one(cls) -> "IntPoly":
        return cls((1,))

    @classmethod
    def x(cls) -> "IntPoly":
        return cls((0, 1))

    @classmethod
    def monomial(cls, coeff: int, power: int) -> "IntPoly":
        if coeff == 0:
            return cls.zero()
        return cls((0,) * power + (coeff,))

    # -- basic queries ------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree; the zero polynomial has degree -1."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_one(self) -> bool:
        return self.coeffs == (1,)

    @property
    def lead(self) -> int:
        if not self.coeffs:
            return 0
        return self.coeffs[-1]

    @property
    def constant(self) -> int:
        if not self.coeffs:
            return 0
        return self.coeffs[0]

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, IntPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, int):
            return self.coeffs == ((other,) if other else ())
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"IntPoly('{self}')"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            term = "1" if k == 0 else ("x" if k == 1 else f"x^{k}")
            if k > 0 and abs(c) != 1:
                term = f"{abs(c)}{term}"
            elif k == 0:
                term = str(abs(c))
            parts.append(("- " if c < 0 else "+ ") + term)
        text = " ".join(parts)
        return text[2:] if text.startswith("+ ") else "-" + text[2:]

    # -- ring operations ----------------------------------------------

    def __add__(self, other: "IntPoly | int") -> "IntPoly":
        if isinstance(other, int):
            other = IntPoly((other,))
        return IntPoly(a + b for a, b in itertools.zip_longest(self.coeffs, other.coeffs, fillvalue=0))

    __radd__ = __add__

    def __sub__(self, other: "IntPoly | int") -> "IntPoly":
        if isinstance(other, int):
            other = IntPoly((other,))
        return IntPoly(a - b for a, b in itertools.zip_longest(self.coeffs, other.coeffs, fillvalue=0))

    def __neg__(self) -> "IntPoly":
        return IntPoly(-c for c in self.coeffs)

    def __mul__(self, other: "IntPoly | int") -> "IntPoly":
        if isinstance(other, int):
            return IntPoly(c * other for c in self.coeffs)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPoly.zero()
        out = [0] * (len(a) + len(b) - 1)
        for i, ci in enumerate(a):
            if ci:
                for j, cj in enumerate(b):
                    out[i + j] += ci * cj
        return IntPoly(out)

    __rmul__ = __mul__

    def mul_xpow(self, k: int) -> "IntPoly":
        """Multiply by x**k."""
        if not self.coeffs or k == 0:
            return self if self.coeffs else IntPoly.zero()
        return IntPoly((0,) * k + self.coeffs)

    def divide_exact(self, divisor: "IntPoly") -> "IntPoly":
        """Exact quotient in Z[x]; raises NotDivisibleError otherwise."""
        q = self.try_divide(divisor)
        if q is None:
            _, r = _divmod_over_q(self, divisor)
            raise NotDivisibleError(
                f"({self}) is not divisible by ({divisor})", remainder=r
            )
        return q

    def try_divide(self, divisor: "IntPoly") -> "IntPoly | None":
        """Exact quotient in Z[x], or None when the division does not come out."""
        if divisor.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        if self.is_zero():
            return IntPoly.zero()
        if divisor.degree > self.degree:
            return None
        rem = list(self.coeffs)
        div = divisor.coeffs
        lead = div[-1]
        out = [0] * (len(rem) - len(div) + 1)
        for top in range(len(rem) - 1, len(div) - 2, -1):
            c = rem[top]
            if c == 0:
                continue
            q, r = divmod(c, lead)
            if r != 0:
                return None
            off = top - (len(div) - 1)
            out[off] = q
            for i, d in enumerate(div):
                rem[off + i] -= q * d
        if any(rem[: len(div) - 1]):
            return None
        return IntPoly(out)

    def __floordiv__(self, other: "IntPoly") -> "IntPoly":
        return self.divide_exact(other)

    def __pow__(self, k: int) -> "IntPoly":
        if k < 0:
            raise ValueError("negative polynomial power")
        result = IntPoly.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # -- the transforms used to build basis polynomials -----------------

    def shift(self, c: int) -> "IntPoly":
        """Return p(x + c) by Horner composition with (x + c)."""
        out: list[int] = []
        for a in reversed(self.coeffs):
            # out := out * (x + c) + a
            nxt = [0] * (len(out) + 1)
            for i, v in enumerate(out):
                nxt[i + 1] += v
                nxt[i] += c * v
            nxt[0] += a
            out = nxt
        return IntPoly(out)

    def reverse_negate(self) -> "IntPoly":
        """With p = sum b_t x^t of degree d, return sum b_t (-x)^(d-t).

        The result's coefficient of x^j is (-1)^j * b_(d-j).  Applying the
        transform twice multiplies by (-1)^d, so it is an involution
        exactly on even-degree polynomials.
        """
        if self.is_zero():
            raise ValueError("reverse_negate is undefined for the zero polynomial")
        d = self.degree
        return IntPoly((-1) ** j * self.coeffs[d - j] for j in range(d + 1))

    def derivative(self) -> "IntPoly":
        return IntPoly(k * c for k, c in enumerate(self.coeffs) if k > 0)

    # -- content, gcd, squarefree --------------------------------------

    def content(self) -> int:
        """Positive gcd of the coefficients (0 for the zero polynomial)."""
        g = 0
        for c in self.coeffs:
            g = int_gcd(g, c)
            if g == 1:
                break
        return g

    def primitive_part(self) -> "IntPoly":
        """Divide out the content; keeps the sign of the leading coefficient."""
        g = self.content()
        if g in (0, 1):
            return self
        return IntPoly(c // g for c in self.coeffs)

    # -- evaluation -----------------------------------------------------

    def eval_rational(self, x: RationalLike) -> Fraction:
        """Exact value at a rational point."""
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return Fraction(acc)

    def eval_int(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def sign_at(self, x: RationalLike) -> int:
        """Sign of p(x) at a rational point, integer arithmetic only."""
        if isinstance(x, int):
            v = self.eval_int(x)
            return (v > 0) - (v < 0)
        if self.is_zero():
            return 0
        num, den = x.numerator, x.denominator
        # Horner on the homogenized form: acc = sum c_j num^j den^(d-j).
        # den > 0, so the scaling by den^d is sign-safe.
        acc = 0
        dp = 1
        for c in reversed(self.coeffs):
            acc = acc * num + c * dp
            dp *= den
        return (acc > 0) - (acc < 0)

    def sign_at_infinity(self, positive: bool) -> int:
        if self.is_zero():
            return 0
        s = (self.lead > 0) - (self.lead < 0)
        if positive or self.degree % 2 == 0:
            return s
        return -s

    def cauchy_bound(self) -> Fraction:
        """B with all real roots strictly inside (-B, B)."""
        if self.degree < 1:
            return Fraction(1)
        lead = abs(self.lead)
        return 1 + max(Fraction(abs(c), lead) for c in self.coeffs[:-1])

    # -- serialization ----------------------------------------------------

    def to_decimal_strings(self) -> list[str]:
        return [str(c) for c in self.coeffs]

    @classmethod
    def from_decimal_strings(cls, items: Sequence[str]) -> "IntPoly":
        return cls(int(s) for s in items)


def _divmod_over_q(a: IntPoly, b: IntPoly) -> tuple[list[Fraction], IntPoly]:
    """Quotient/remainder over the rationals; remainder scaled back primitive."""
    if b.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    rem = [Fraction(c) for c in a.coeffs]
    div = b.coeffs
    lead = Fraction(div[-1])
    quo: list[Fraction] = []
    for top in range(len(rem) - 1, len(div) - 2, -1):
        q = rem[top] / lead
        quo.append(q)
        off = top - (len(div) - 1)
        for i, d in enumerate(div):
            rem[off + i] -= q * d
    den = 1
    for f in rem:
        den = den * f.denominator // int_gcd(den, f.denominator)
    r = IntPoly(int(f * den) for f in rem).primitive_part()
    return quo, r


def _rem_positive_multiple(a: IntPoly, b: IntPoly) -> IntPoly:
    """Primitive positive-scalar multiple of the rational remainder of a by b.

    Uses pseudo-division, then corrects for the sign of the accumulated
    multiplier so the returned polynomial is a positive multiple of rem(a, b).
    """
    db = b.degree
    if db < 0:
        raise ZeroDivisionError("polynomial division by zero")
    lb = b.lead
    rb = b.coeffs
    r = list(a.coeffs)
    steps = 0
    while True:
        while r and r[-1] == 0:
            r.pop()
        dr = len(r) - 1
        if dr < db or not r:
            break
        lr = r[-1]
        r = [lb * c for c in r]
        off = dr - db
        for i, d in enumerate(rb):
            r[off + i] -= lr * d
        steps += 1
    rem = IntPoly(r)
    if lb < 0 and steps % 2 == 1:
        rem = -rem
    return rem.primitive_part()


def poly_gcd(a: IntPoly, b: IntPoly) -> IntPoly:
    """Primitive gcd in Z[x] with positive leading coefficient."""
    a = a.primitive_part()
    b = b.primitive_part()
    while not b.is_zero():
        a, b = b, _rem_positive_multiple(a, b)
    if a.is_zero():
        return a
    if a.lead < 0:
        a = -a
    return a


def squarefree_part(p: IntPoly) -> IntPoly:
    if p.is_zero():
        raise ValueError("squarefree part of the zero polynomial")
    g = poly_gcd(p, p.derivative())
    if g.degree <= 0:
        return p.primitive_part()
    return p.primitive_part().divide_exact(g)


def is_squarefree(p: IntPoly) -> bool:
    if p.is_zero():
        return False
    if p.degree <= 0:
        return True
    return poly_gcd(p, p.derivative()).degree == 0


# -- Sturm chains and root counting ------------------------------------

#: Endpoint ``None`` means the infinite end of the real line.
Endpoint = Optional[RationalLike]


@dataclass(frozen=True)
class SturmChain:
    """Signed remainder sequence of p and p', content-normalized."""

    chain: tuple[IntPoly, ...]

    @classmethod
    def of(cls, p: IntPoly) -> "SturmChain":
        if p.is_zero():
            raise ValueError("Sturm chain of the zero polynomial")
        seq = [p.primitive_part()]
        dp = p.derivative()
        if not dp.is_zero():
            seq.append(dp.primitive_part())
            while seq[-1].degree > 0:
                r = _rem_positive_multiple(seq[-2], seq[-1])
                if r.is_zero():
                    break
                seq.append(-r)
        return cls(tuple(seq))

    @property
    def poly(self) -> IntPoly:
        return self.chain[0]

    def variations_at(self, x: Endpoint, positive_infinity: bool = False) -> int:
        """Sign variation count at x (zeros skipped); x=None means an infinite end."""
        signs = []
        for q in self.chain:
            if x is None:
                s = q.sign_at_infinity(positive_infinity)
            else:
                s = q.sign_at(x)
            if s != 0:
                signs.append(s)
        return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def count_real_roots(chain: SturmChain, lo: Endpoint, hi: Endpoint) -> int:
    """Number of distinct real roots of the chain's polynomial in (lo, hi].

    With the zero-skipping variation convention a root exactly at ``hi``
    is counted and a root exactly at ``lo`` is not, which is what the
    half-open interval requires.  The chain's polynomial should be
    squarefree; counts are of distinct roots.
    """
    if lo is not None and hi is not None and Fraction(lo) >= Fraction(hi):
        raise ValueError(f"empty interval ({lo}, {hi}]")
    v_lo = chain.variations_at(lo, positive_infinity=False)
    v_hi = chain.variations_at(hi, positive_infinity=True)
    return v_lo - v_hi


def count_real_roots_of(p: IntPoly, lo: Endpoint, hi: Endpoint) -> int:
    """Distinct real roots of p in (lo, hi]; squarefree part taken first."""
    return count_real_roots(SturmChain.of(squarefree_part(p)), lo, hi)


def all_roots_real_below(p: IntPoly, bound: RationalLike) -> bool:
    """True iff p is squarefree with deg(p) distinct real roots, all < bound."""
    if p.is_zero():
        raise ValueError("zero polynomial has no root set")
    d = p.degree
    if d == 0:
        return True
    if poly_gcd(p, p.derivative()).degree > 0:
        return False
    if p.sign_at(bound) == 0:
        return False
    chain = SturmChain.of(p)
    return count_real_roots(chain, None, bound) == d


def isolate_real_roots(p: IntPoly) -> list[tuple[Fraction, Fraction]]:
    """Disjoint isolating intervals (lo, hi], one per distinct real root of p.

    Requires p squarefree.  Intervals are returned sorted.
    """
    if not is_squarefree(p):
        raise ValueError("root isolation requires a squarefree polynomial")
    if p.degree <= 0:
        return []
    chain = SturmChain.of(p)
    bound = p.cauchy_bound()
    lo, hi = -bound, bound
    total = count_real_roots(chain, lo, hi)
    out: list[tuple[Fraction, Fraction]] = []
    stack = [(lo, hi, total)]
    while stack:
        a, b, k = stack.pop()
        if k == 0:
            continue
        if k == 1:
            out.append((a, b))
            continue
        mid = (a + b) / 2
        left = count_real_roots(chain, a, mid)
        stack.append((a, mid, left))
        stack.append((mid, b, k - left))
    out.sort()
    return out


def refine_root(p: IntPoly, lo: Fraction, hi: Fraction, width: Fraction) -> tuple[Fraction, Fraction]:
    """Shrink an isolating interval (lo, hi] of p below the given width by bisection."""
    s_hi = p.sign_at(hi)
    if s_hi == 0:
        return hi, hi
    s_lo = p.sign_at(lo)
    while s_lo == 0:
        # lo is a different root (excluded by the half-open convention);
        # step inward until the sign shows up
        mid = (lo + hi) / 2
        s_mid = p.sign_at(mid)
        if s_mid == 0:
            return mid, mid
        if s_mid == s_hi:
            hi = mid
        else:
            lo, s_lo = mid, s_mid
    if s_lo == s_hi:
        raise ValueError(f"({lo}, {hi}] is not an isolating interval")
    while hi - lo > width:
        mid = (lo + hi) / 2
        s_mid = p.sign_at(mid)
        if s_mid == 0:
            return mid, mid
        if s_mid == s_lo:
            lo = mid
        else:
            hi = mid
    return lo, hi


def real_roots_approx(p: IntPoly, width: Fraction = Fraction(1, 10**12)) -> list[float]:
    """Float approximations of the distinct real roots (diagnostics only)."""
    q = squarefree_part(p)
    roots = []
    for lo, hi in isolate_real_roots(q):
        a, b = refine_root(q, lo, hi, width)
        roots.append(float((a + b) / 2))
    return roots
