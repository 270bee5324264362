"""The irreducible factor basis of path and cycle independence polynomials.

Every root of a path or cycle independence polynomial has the form
-1/(2 + 2*cos(k*pi/n)).  The minimal polynomial of such a number is
obtained from the minimal polynomial of the matching 2*cos value by
translating two units left and then applying the reverse-negate
transform p -> sum_t b_t (-x)^(d-t).  Two families result:

  basis_f(n)       minimal polynomial of -1/(2 + 2*cos(pi/n)),
                   degree phi(2n)/2, from the minimal polynomial of
                   2*cos(pi/n)
  basis_ftilde(n)  (odd n) minimal polynomial of -1/(2 + 2*cos(2*pi/n)),
                   degree phi(n)/2, from the minimal polynomial of
                   2*cos(2*pi/n)

Index 1 is the unit for both families and never appears in factor
multisets.  The factors are pairwise coprime, and:

  I(C_n, x)  =  product of f_{2^t * r} over r | m,        n = 2^t * m, m odd
  I(P_n, x)  =  product over the divisor pattern of n+2 (factor_path)

Construction is exact: cyclotomic polynomials by Moebius product of
x^d - 1 binomials, the 2*cos minimal polynomial by a triangular solve
of Phi_n(x) = x^(phi(n)/2) * psi_n(x + 1/x), then shift and reverse.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .polyalg import IntPoly


class FactorizationError(ValueError):
    """A polynomial failed to factor over the given basis candidates."""

    def __init__(self, message: str, remainder: IntPoly):
        super().__init__(message)
        self.remainder = remainder


# -- elementary number theory -------------------------------------------------

@lru_cache(maxsize=None)
def factorize(n: int) -> tuple[tuple[int, int], ...]:
    """Prime factorization as ((p, e), ...)."""
    out = []
    d = 2
    while d * d <= n:
        e = 0
        while n % d == 0:
            e += 1
            n //= d
        if e:
            out.append((d, e))
        d += 1 if d == 2 else 2
    if n > 1:
        out.append((n, 1))
    return tuple(out)


def euler_phi(n: int) -> int:
    result = n
    for p, _ in factorize(n):
        result = result // p * (p - 1)
    return result


def moebius(n: int) -> int:
    mu = 1
    for _, e in factorize(n):
        if e > 1:
            return 0
        mu = -mu
    return mu


def divisors(n: int) -> list[int]:
    divs = [1]
    for p, e in factorize(n):
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return sorted(divs)


def two_adic_split(n: int) -> tuple[int, int]:
    """n = 2^t * m with m odd; returns (t, m)."""
    t = 0
    while n % 2 == 0:
        n //= 2
        t += 1
    return t, n


# -- cyclotomic and 2cos minimal polynomials -----------------------------------

def _mul_xd_minus_1(coeffs: list[int], d: int) -> list[int]:
    out = [0] * (len(coeffs) + d)
    for i, c in enumerate(coeffs):
        out[i + d] += c
        out[i] -= c
    return out


def _div_xd_minus_1(coeffs: list[int], d: int) -> list[int]:
    # p[j] = q[j-d] - q[j]; solve descending for q of degree deg(p) - d
    dq = len(coeffs) - 1 - d
    q = [0] * (dq + 1)
    for j in range(len(coeffs) - 1, d - 1, -1):
        q[j - d] = coeffs[j] + (q[j] if j <= dq else 0)
    for j in range(d):
        if coeffs[j] != -(q[j] if j <= dq else 0):
            raise ArithmeticError("division by x^d - 1 left a remainder")
    return q


@lru_cache(maxsize=None)
def cyclotomic(n: int) -> IntPoly:
    """The n-th cyclotomic polynomial, by the Moebius product over divisors."""
    if n < 1:
        raise ValueError(f"cyclotomic index must be >= 1, got {n}")
    coeffs = [1]
    for d in divisors(n):
        if moebius(n // d) == 1:
            coeffs = _mul_xd_minus_1(coeffs, d)
    for d in divisors(n):
        if moebius(n // d) == -1:
            coeffs = _div_xd_minus_1(coeffs, d)
    return IntPoly(coeffs)


@lru_cache(maxsize=None)
def real_cyclotomic(n: int) -> IntPoly:
    """Minimal polynomial of 2*cos(2*pi/n): monic, degree phi(n)/2 for n >= 3.

    Satisfies Phi_n(x) = x^(phi(n)/2) * psi_n(x + 1/x); the coefficients
    are recovered by a triangular solve against that identity.
    """
    if n < 1:
        raise ValueError(f"index must be >= 1, got {n}")
    if n == 1:
        return IntPoly((-2, 1))  # 2cos(2pi) = 2
    if n == 2:
        return IntPoly((2, 1))  # 2cos(pi) = -2
    d = euler_phi(n) // 2
    residual = list(cyclotomic(n).coeffs)
    coeffs = [0] * (d + 1)
    # binomials[j][k] = C(j, k), the coefficient of x^(2k) in (x^2+1)^j
    binom = [1]
    binomials = [list(binom)]
    for j in range(1, d + 1):
        binom = [1] + [binom[k] + binom[k - 1] for k in range(1, j)] + [1]
        binomials.append(list(binom))
    for j in range(d, -1, -1):
        c = residual[d + j]
        coeffs[j] = c
        if c:
            base = d - j
            for k, b in enumerate(binomials[j]):
                residual[base + 2 * k] -= c * b
    if any(residual):
        raise ArithmeticError(f"triangular solve failed for index {n}")
    return IntPoly(coeffs)


# -- the basis itself ----------------------------------------------------------

@dataclass(frozen=True, order=True)
class BasisFactor:
    """One irreducible basis polynomial: kind 'f' or 'ftilde' plus its index."""

    sort_index: tuple[int, int] = field(repr=False)
    kind: str
    index: int
    poly: IntPoly = field(compare=False)

    @property
    def is_unit(self) -> bool:
        return self.index == 1

    @property
    def name(self) -> str:
        return ("f~" if self.kind == "ftilde" else "f") + str(self.index)

    def to_json(self) -> dict:
        return {"kind": self.kind, "index": self.index,
                "coefficients": self.poly.to_decimal_strings()}


def _make_factor(kind: str, index: int, poly: IntPoly) -> BasisFactor:
    rank = 0 if kind == "f" else 1
    return BasisFactor((rank, index), kind, index, poly)


def _shift_and_reverse(cos_minpoly: IntPoly) -> IntPoly:
    return cos_minpoly.shift(-2).reverse_negate()


@lru_cache(maxsize=None)
def basis_f(n: int) -> BasisFactor:
    """Minimal polynomial of -1/(2 + 2*cos(pi/n)); n = 1 gives the unit."""
    if n < 1:
        raise ValueError(f"index must be >= 1, got {n}")
    if n == 1:
        return _make_factor("f", 1, IntPoly.one())
    return _make_factor("f", n, _shift_and_reverse(real_cyclotomic(2 * n)))


@lru_cache(maxsize=None)
def basis_ftilde(n: int) -> BasisFactor:
    """Minimal polynomial of -1/(2 + 2*cos(2*pi/n)) for odd n; n = 1 is the unit."""
    if n < 1:
        raise ValueError(f"index must be >= 1, got {n}")
    if n % 2 == 0:
        raise ValueError(f"ftilde index must be odd, got {n}")
    if n == 1:
        return _make_factor("ftilde", 1, IntPoly.one())
    return _make_factor("ftilde", n, _shift_and_reverse(real_cyclotomic(n)))


FactorMultiset = tuple[BasisFactor, ...]


def product_of(factors: FactorMultiset) -> IntPoly:
    out = IntPoly.one()
    for f in factors:
        out = out * f.poly
    return out


def factor_cycle(n: int) -> FactorMultiset:
    """Factor multiset of I(C_n, x): f_{2^t r} for r | m, where n = 2^t m."""
    if n < 3:
        raise ValueError(f"cycle length must be >= 3, got {n}")
    t, m = two_adic_split(n)
    factors = [basis_f(2**t * r) for r in divisors(m)]
    return tuple(sorted(f for f in factors if not f.is_unit))


def factor_path(n_vertices: int) -> FactorMultiset:
    """Factor multiset of I(P_n, x), driven by the divisors of n + 2."""
    if n_vertices < 0:
        raise ValueError(f"path length must be >= 0, got {n_vertices}")
    n = n_vertices + 2
    if n % 2 == 1:
        factors = [basis_ftilde(r) for r in divisors(n)]
    else:
        t, m = two_adic_split(n)
        factors = [basis_f(r) for r in divisors(2 ** (t - 1) * m)]
        factors += [basis_ftilde(s) for s in divisors(m)]
    return tuple(sorted(f for f in factors if not f.is_unit))


def default_candidates(p: IntPoly) -> FactorMultiset:
    """Candidate basis factors for factoring a catalogue polynomial.

    Indices up to 2*(i_1 + 2) cover every shortlist shape (the tadpole
    and two-tailed triangle shapes reach index vertex_count + something
    below that bound); callers can pass an explicit list instead.
    """
    if p.degree < 1:
        return ()
    top = 2 * (p.coeffs[1] + 2) if len(p.coeffs) > 1 else 4
    cands = [basis_f(i) for i in range(2, top + 1)]
    cands += [basis_ftilde(i) for i in range(3, top + 1, 2)]
    return tuple(cands)


def factor_into_basis(p: IntPoly, candidates: FactorMultiset | None = None) -> FactorMultiset:
    """Factor p over the basis by repeated exact division.

    Candidates are tried in descending degree (kind 'f' first on ties);
    the order cannot change the outcome because distinct basis factors
    are coprime.  Raises FactorizationError carrying the remainder when
    the leftover cofactor is not the constant 1.
    """
    if p.is_zero():
        raise ValueError("cannot factor the zero polynomial")
    if candidates is None:
        candidates = default_candidates(p)
    ordered = sorted(
        (c for c in candidates if not c.is_unit),
        key=lambda c: (-c.poly.degree, c.kind != "f", c.index),
    )
    remainder = p
    found: list[BasisFactor] = []
    for cand in ordered:
        while remainder.degree >= cand.poly.degree:
            quotient = remainder.try_divide(cand.poly)
            if quotient is None:
                break
            found.append(cand)
            remainder = quotient
    if not remainder.is_one():
        raise FactorizationError(
            f"polynomial is not a product of the candidate basis factors; "
            f"remainder ({remainder})",
            remainder,
        )
    return tuple(sorted(found))


def multiset_to_json(factors: FactorMultiset) -> list[dict]:
    return [f.to_json() for f in factors]
