from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from indeq.graphcore import build
from indeq.indpoly import (
    bruteforce_polynomial,
    cycle_polynomial,
    independence_polynomial,
    path_polynomial,
)
from indeq.polyalg import (
    IntPoly,
    NotDivisibleError,
    SturmChain,
    all_roots_real_below,
    count_real_roots,
    is_squarefree,
    isolate_real_roots,
    poly_gcd,
    real_roots_approx,
    refine_root,
    squarefree_part,
)

from conftest import QUARTER, fs

polys = st.builds(IntPoly, st.lists(st.integers(min_value=-9, max_value=9), max_size=7))


def test_multiplication_example():
    assert IntPoly((1, 2)) * IntPoly((1, 4, 1)) == IntPoly((1, 6, 9, 2))
    p = IntPoly((3, -1, 2))
    assert p * IntPoly.one() == p


def test_divide_exact():
    # dividend is the brute-force independence polynomial of the 9-cycle
    dividend = bruteforce_polynomial(build(fs("C", 9)))
    assert dividend == IntPoly((1, 9, 27, 30, 9))
    assert dividend.divide_exact(IntPoly((1, 3))) == IntPoly((1, 6, 9, 3))
    with pytest.raises(NotDivisibleError) as info:
        IntPoly((1, 1, 1)).divide_exact(IntPoly((1, 1)))
    assert info.value.remainder == IntPoly((1,))


@given(polys, polys, polys)
@settings(max_examples=80, deadline=None)
def test_ring_laws(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a * b == b * a
    assert a * (b + c) == a * b + a * c
    assert (a * b) * c == a * (b * c)


@given(polys, polys)
@settings(max_examples=80, deadline=None)
def test_divide_undoes_multiply(a, b):
    if not b.is_zero():
        assert (a * b).divide_exact(b) == a


def test_shift_examples():
    assert IntPoly((-3, 0, 1)).shift(-2) == IntPoly((1, -4, 1))
    assert IntPoly((1, 1)).shift(-2) == IntPoly((-1, 1))
    p = IntPoly((5, -2, 7))
    assert p.shift(0) == p


@given(polys, st.integers(-4, 4), st.integers(-4, 4))
@settings(max_examples=60, deadline=None)
def test_shift_composes(p, a, b):
    assert p.shift(a).shift(b) == p.shift(a + b)


def test_reverse_negate_examples():
    assert IntPoly((1, -4, 1)).reverse_negate() == IntPoly((1, 4, 1))
    assert IntPoly((-2, 1)).reverse_negate() == IntPoly((1, 2))
    assert IntPoly((-1, 1)).reverse_negate() == IntPoly((1, 1))
    with pytest.raises(ValueError):
        IntPoly.zero().reverse_negate()


@given(polys)
@settings(max_examples=80, deadline=None)
def test_reverse_negate_double_application(p):
    # twice is the identity on even degree and negation on odd degree,
    # provided no degree is lost (nonzero constant term)
    if p.is_zero() or p.constant == 0:
        return
    twice = p.reverse_negate().reverse_negate()
    assert twice == (p if p.degree % 2 == 0 else -p)


def test_eval_rational():
    assert cycle_polynomial(6).eval_rational(QUARTER) == Fraction(1, 32)
    assert path_polynomial(4).eval_rational(QUARTER) == Fraction(3, 16)
    assert IntPoly.one().eval_rational(Fraction(7, 3)) == 1


@pytest.mark.parametrize("n", range(1, 30))
def test_path_value_at_quarter(n):
    # exact value of I(P_n, -1/4); the exponent is n + 1
    assert path_polynomial(n).eval_rational(QUARTER) == Fraction(n + 2, 2 ** (n + 1))


@pytest.mark.parametrize("n", range(3, 30))
def test_cycle_value_at_quarter(n):
    assert cycle_polynomial(n).eval_rational(QUARTER) == Fraction(1, 2 ** (n - 1))


def test_count_real_roots_examples():
    chain = SturmChain.of(IntPoly((1, 6, 7)))
    assert count_real_roots(chain, QUARTER, None) == 1
    chain = SturmChain.of(path_polynomial(4))
    assert count_real_roots(chain, None, QUARTER) == 2
    chain = SturmChain.of(IntPoly((1, 10, 33, 39, 8)))
    assert count_real_roots(chain, None, None) == 2


def test_count_endpoint_convention():
    # roots at the upper endpoint count, roots at the lower one do not
    p = IntPoly((1, 4))  # root exactly -1/4
    chain = SturmChain.of(p)
    assert count_real_roots(chain, None, QUARTER) == 1
    assert count_real_roots(chain, QUARTER, None) == 0


def _descartes_variations(p):
    signs = [1 if c > 0 else -1 for c in p.coeffs if c]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def _count_unit_interval(q):
    """Distinct roots of squarefree q in the open interval (0, 1).

    Descartes bound on (x+1)^n q(1/(x+1)): 0 or 1 is exact, otherwise
    bisect.  Independent of the Sturm machinery under test.
    """
    n = q.degree
    w = IntPoly(tuple(reversed(q.coeffs)) + (0,) * (n + 1 - len(q.coeffs))).shift(1)
    v = _descartes_variations(w)
    if v <= 1:
        return v
    left = IntPoly(c * 2 ** (n - k) for k, c in enumerate(q.coeffs))  # q(x/2) scaled
    right = left.shift(1)
    mid_root = 1 if left.eval_int(1) == 0 else 0
    return _count_unit_interval(left) + mid_root + _count_unit_interval(right)


def _descartes_root_count(p):
    """Independent oracle: distinct real roots via sign-variation bisection."""
    bound = 1
    while p.cauchy_bound() > bound:
        bound *= 2
    at_zero = 1 if p.constant == 0 else 0
    pos = IntPoly(c * bound**k for k, c in enumerate(p.coeffs))  # p(bound * x)
    neg = IntPoly(c * (-bound) ** k for k, c in enumerate(p.coeffs))
    return at_zero + _count_unit_interval(pos) + _count_unit_interval(neg)


@pytest.mark.parametrize("spec", [
    fs("P", 8), fs("P", 12), fs("C", 9), fs("C", 12), fs("D", 8),
    fs("Y", 3, 2, 1), fs("Y", 4, 2, 2), fs("E", 2, 2), fs("A", 2, 2),
    fs("B", 1, 1, 1), fs("K4e"), fs("F3", 2), fs("F9", 0, 0, 0),
])
def test_sturm_agrees_with_descartes_bisection(spec):
    p = squarefree_part(independence_polynomial(build(spec)))
    assert p.degree <= 12
    chain = SturmChain.of(p)
    assert count_real_roots(chain, None, None) == _descartes_root_count(p)


def test_all_roots_real_below_examples():
    assert all_roots_real_below(path_polynomial(10), QUARTER)
    assert not all_roots_real_below(IntPoly((1, 4)), QUARTER)
    f3_2 = independence_polynomial(build(fs("F3", 2)))
    assert not all_roots_real_below(f3_2, QUARTER)
    # repeated roots disqualify outright
    assert not all_roots_real_below(IntPoly((1, 2)) * IntPoly((1, 2)), QUARTER)


@pytest.mark.parametrize("n", range(1, 61))
def test_path_cycle_roots_battery(n):
    assert all_roots_real_below(path_polynomial(n), QUARTER)
    if n >= 3:
        assert all_roots_real_below(cycle_polynomial(n), QUARTER)


def test_isolation_and_refinement():
    p = path_polynomial(6)
    intervals = isolate_real_roots(p)
    assert len(intervals) == p.degree
    mids = []
    for lo, hi in intervals:
        rlo, rhi = refine_root(p, lo, hi, Fraction(1, 10**15))
        mids.append((rlo + rhi) / 2)
    assert mids == sorted(mids)
    approx = real_roots_approx(p)
    assert len(approx) == p.degree
    assert all(m < -0.25 for m in approx)


def test_gcd_and_squarefree():
    a = IntPoly((1, 3)) * IntPoly((1, 4, 1))
    b = IntPoly((1, 3)) * IntPoly((1, 2))
    assert poly_gcd(a, b) == IntPoly((1, 3))
    sq = IntPoly((1, 3)) ** 2 * IntPoly((1, 2))
    assert not is_squarefree(sq)
    assert squarefree_part(sq) == IntPoly((1, 3)) * IntPoly((1, 2))


def test_json_serialization_round_trip():
    p = IntPoly((1, -12345678901234567890, 7))
    strings = p.to_decimal_strings()
    assert all(isinstance(s, str) for s in strings)
    assert IntPoly.from_decimal_strings(strings) == p
