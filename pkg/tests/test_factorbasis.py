import itertools

import pytest

from indeq.factorbasis import (
    FactorizationError,
    basis_f,
    basis_ftilde,
    cyclotomic,
    divisors,
    euler_phi,
    factor_cycle,
    factor_into_basis,
    factor_path,
    multiset_to_json,
    product_of,
    real_cyclotomic,
)
from indeq.graphcore import build
from indeq.indpoly import cycle_polynomial, independence_polynomial, path_polynomial
from indeq.polyalg import IntPoly, all_roots_real_below, poly_gcd

from conftest import QUARTER, fs


def test_cyclotomic_examples():
    assert cyclotomic(1) == IntPoly((-1, 1))
    assert cyclotomic(7) == IntPoly((1,) * 7)
    # independent route: divide x^12 - 1 by the proper-divisor cyclotomics
    x12 = IntPoly((-1,) + (0,) * 11 + (1,))
    prod = IntPoly.one()
    for d in (1, 2, 3, 4, 6):
        prod = prod * cyclotomic(d)
    assert cyclotomic(12) == x12.divide_exact(prod)
    assert cyclotomic(12) == IntPoly((1, 0, -1, 0, 1))


@pytest.mark.parametrize("n", range(1, 80))
def test_cyclotomic_product_identity(n):
    prod = IntPoly.one()
    for d in divisors(n):
        prod = prod * cyclotomic(d)
    assert prod == IntPoly((-1,) + (0,) * (n - 1) + (1,))


def test_real_cyclotomic_examples():
    assert real_cyclotomic(5) == IntPoly((-1, 1, 1))
    assert real_cyclotomic(12) == IntPoly((-3, 0, 1))
    assert real_cyclotomic(3) == IntPoly((1, 1))
    assert real_cyclotomic(1) == IntPoly((-2, 1))
    assert real_cyclotomic(2) == IntPoly((2, 1))


@pytest.mark.parametrize("n", range(3, 41))
def test_real_cyclotomic_defining_identity(n):
    # Phi_n(x) = x^d * psi_n(x + 1/x) with d = phi(n)/2, checked symbolically
    psi = real_cyclotomic(n)
    d = euler_phi(n) // 2
    assert psi.degree == d and psi.lead == 1
    acc = IntPoly.zero()
    x2p1 = IntPoly((1, 0, 1))
    for j, c in enumerate(psi.coeffs):
        acc = acc + (x2p1**j).mul_xpow(d - j) * c
    assert acc == cyclotomic(n)


def test_basis_examples():
    assert basis_f(2).poly == IntPoly((1, 2))
    assert basis_f(3).poly == IntPoly((1, 3))
    assert basis_f(6).poly == IntPoly((1, 4, 1))
    assert basis_ftilde(3).poly == IntPoly((1, 1))
    # psi_8 = x^2 - 2 -> shift -2 -> x^2 - 4x + 2 -> reverse-negate -> 1 + 4x + 2x^2
    assert real_cyclotomic(8) == IntPoly((-2, 0, 1))
    assert basis_f(4).poly == IntPoly((1, 4, 2))
    assert basis_f(4).poly == cycle_polynomial(4)
    # psi_5 -> shift -> x^2 - 3x + 1 -> 1 + 3x + x^2 = I(P_3)
    assert basis_ftilde(5).poly == IntPoly((1, 3, 1)) == path_polynomial(3)


def test_units():
    assert basis_f(1).is_unit and basis_f(1).poly.is_one()
    assert basis_ftilde(1).is_unit
    with pytest.raises(ValueError, match="odd"):
        basis_ftilde(4)


def test_factor_cycle_examples():
    assert [f.name for f in factor_cycle(6)] == ["f2", "f6"]
    assert [f.name for f in factor_cycle(4)] == ["f4"]
    nine = factor_cycle(9)
    assert [f.name for f in nine] == ["f3", "f9"]
    # f9 is forced by dividing the brute cycle polynomial by f3
    assert nine[1].poly == cycle_polynomial(9).divide_exact(basis_f(3).poly)
    assert product_of(factor_cycle(4)) == cycle_polynomial(4)


def test_factor_path_examples():
    assert [f.name for f in factor_path(10)] == ["f2", "f3", "f6", "f~3"]
    assert [f.name for f in factor_path(1)] == ["f~3"]
    assert [f.name for f in factor_path(3)] == ["f~5"]
    assert product_of(factor_path(3)) == IntPoly((1, 3, 1))


@pytest.mark.parametrize("n", range(3, 61))
def test_factor_products_reproduce_polynomials(n):
    assert product_of(factor_cycle(n)) == cycle_polynomial(n)
    assert product_of(factor_path(n - 2)) == path_polynomial(n - 2)


def test_degree_bookkeeping():
    for n in range(2, 501):
        assert basis_f(n).poly.degree == euler_phi(2 * n) // 2
        if n % 2 == 1 and n >= 3:
            assert basis_ftilde(n).poly.degree == euler_phi(n) // 2


def test_pairwise_coprimality():
    top = 60
    polys = [basis_f(n).poly for n in range(2, top + 1)]
    polys += [basis_ftilde(n).poly for n in range(3, top + 1, 2)]
    for p, q in itertools.combinations(polys, 2):
        assert poly_gcd(p, q).degree == 0


@pytest.mark.parametrize("k", range(3, 61))
def test_cycle_divisibility_law(k):
    fk = set(factor_cycle(k))
    for n in range(3, 61):
        divides = fk <= set(factor_cycle(n))
        assert divides == (n % k == 0 and (n // k) % 2 == 1), (k, n)


@pytest.mark.parametrize("n", range(2, 61))
def test_basis_roots_below_quarter(n):
    assert all_roots_real_below(basis_f(n).poly, QUARTER)
    if n % 2 == 1 and n >= 3:
        assert all_roots_real_below(basis_ftilde(n).poly, QUARTER)


def test_factor_into_basis_examples():
    got = factor_into_basis(independence_polynomial(build(fs("Y", 4, 2, 2))))
    assert [f.name for f in got] == ["f12", "f~3"]
    got = factor_into_basis(independence_polynomial(build(fs("E", 1, 1))))
    assert [f.name for f in got] == ["f6", "f~3"]
    with pytest.raises(FactorizationError) as info:
        factor_into_basis(IntPoly((1, 4)))
    assert info.value.remainder == IntPoly((1, 4))


def test_factor_into_basis_handles_multiplicity():
    square = basis_f(3).poly * basis_f(3).poly * basis_f(2).poly
    got = factor_into_basis(square, (basis_f(2), basis_f(3)))
    assert [f.name for f in got] == ["f2", "f3", "f3"]


def test_multiset_json():
    payload = multiset_to_json(factor_path(10))
    assert payload[0] == {"kind": "f", "index": 2, "coefficients": ["1", "2"]}
    assert payload[-1]["kind"] == "ftilde"
