"""Acceptance criteria: one test per claim, each printing a PASS/FAIL line.

Every criterion is exact arithmetic except the root cross-check, whose
stated agreement tolerance is 1e-9.  Runtime budgets are asserted
against the wall clock.  Run with ``pytest tests/test_acceptance.py -s``
to see the per-criterion lines.
"""

import itertools
import math
import time
import warnings
from fractions import Fraction

import pytest

from indeq.classify import (
    EvenCycleClassNote,
    cycle_class,
    elimination_value,
    path_class,
    screen_family,
)
from indeq.factorbasis import (
    basis_f,
    basis_ftilde,
    factor_cycle,
    factor_path,
    product_of,
    real_cyclotomic,
)
from indeq.graphcore import FamilySpec, build, canonical_form
from indeq.indpoly import (
    cycle_polynomial,
    independence_equivalent,
    independence_polynomial,
    path_polynomial,
)
from indeq.oracle import equivalence_class_bruteforce
from indeq.polyalg import IntPoly, SturmChain, count_real_roots, refine_root

from conftest import QUARTER, fs


def _report(num, description, budget_s, fn):
    start = time.perf_counter()
    try:
        fn()
    except BaseException:
        print(f"FAIL criterion {num}: {description}")
        raise
    elapsed = time.perf_counter() - start
    ok = elapsed < budget_s
    print(f"{'PASS' if ok else 'FAIL'} criterion {num}: {description} "
          f"[{elapsed:.1f}s, budget {budget_s:.0f}s]")
    assert ok, f"runtime budget exceeded: {elapsed:.1f}s >= {budget_s}s"


def test_criterion_01_coefficients():
    def body():
        assert independence_polynomial(build(fs("P", 10))) == IntPoly((1, 10, 36, 56, 35, 6))
        assert independence_polynomial(build(fs("C", 6))) == IntPoly((1, 6, 9, 2))

    _report(1, "path/cycle coefficient reproduction", 1.0, body)


def test_criterion_02_basis_pipeline():
    def body():
        assert basis_f(2).poly == IntPoly((1, 2))
        assert basis_f(3).poly == IntPoly((1, 3))
        assert basis_f(6).poly == IntPoly((1, 4, 1))
        assert basis_ftilde(3).poly == IntPoly((1, 1))
        # the construction really is minimal-poly -> shift(-2) -> reverse
        assert real_cyclotomic(12).shift(-2).reverse_negate() == IntPoly((1, 4, 1))
        assert [f.name for f in factor_path(10)] == ["f2", "f3", "f6", "f~3"]

    _report(2, "basis factors via the shift-and-reverse pipeline", 1.0, body)


def test_criterion_03_factorization_identities():
    def body():
        for n in range(3, 201):
            assert product_of(factor_cycle(n)) == cycle_polynomial(n), n
        for n in range(0, 199):
            assert product_of(factor_path(n)) == path_polynomial(n), n

    _report(3, "factor products equal recurrence polynomials, n <= 200", 60.0, body)


def test_criterion_04_p10_class_count():
    def body():
        cls = path_class(10)
        assert len(cls) == 10
        brute = equivalence_class_bruteforce(build(fs("P", 10)))
        assert len(brute) == 10
        assert {canonical_form(g) for g in brute} == cls.canonical_forms()

    _report(4, "P_10 has exactly ten equivalent graphs, confirmed exhaustively", 600.0, body)


def test_criterion_05_small_classes():
    expected = {
        4: [[fs("P", 4)], [fs("P", 1), fs("C", 3)]],
        6: [[fs("P", 6)], [fs("P", 2), fs("C", 4)], [fs("P", 2), fs("D", 4)]],
        8: [[fs("P", 8)], [fs("P", 3), fs("C", 5)], [fs("P", 3), fs("D", 5)]],
    }

    def body():
        for n, members in expected.items():
            want = {canonical_form(build(member)) for member in members}
            assert path_class(n).canonical_forms() == want, n
            brute = {canonical_form(g)
                     for g in equivalence_class_bruteforce(build(fs("P", n)))}
            assert brute == want, n
        for n in (3, 5, 7, 9):
            brute = equivalence_class_bruteforce(build(fs("P", n)))
            assert len(brute) == 1, n
            assert canonical_form(brute[0]) == canonical_form(build(fs("P", n)))

    _report(5, "small path classes equal the exhaustive oracle", 300.0, body)


def test_criterion_06_cycle_classes():
    def body():
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", EvenCycleClassNote)
            want6 = cycle_class(6).canonical_forms()
        got6 = {canonical_form(g)
                for g in equivalence_class_bruteforce(build(fs("C", 6)))}
        assert got6 == want6
        assert got6 == {
            canonical_form(build(fs("C", 6))),
            canonical_form(build(fs("D", 6))),
            canonical_form(build([fs("K4e"), fs("P", 2)])),
        }
        got9 = {canonical_form(g)
                for g in equivalence_class_bruteforce(build(fs("C", 9)))}
        assert len(got9) == 6
        assert got9 == cycle_class(9).canonical_forms()

    _report(6, "cycle classes for C_6 and C_9 confirmed exhaustively", 300.0, body)


def test_criterion_07_elimination_closed_forms():
    from indeq.graphcore import _PARAM_FLOORS

    def body():
        for fam in ("Y", "B", "A", "F3", "F5", "F6", "F7", "F8", "F9"):
            floors = _PARAM_FLOORS[fam]
            for params in itertools.product(*[range(f, 21) for f in floors]):
                spec = FamilySpec(fam, params)
                assert elimination_value(spec) == independence_polynomial(
                    build(spec)
                ).eval_rational(QUARTER), spec
        for m in range(0, 21):
            spec = fs("F4", m)
            assert elimination_value(spec) == independence_polynomial(
                build(spec)
            ).eval_rational(QUARTER), spec
        assert elimination_value(fs("F4", 2)) == Fraction(-1, 64)
        assert elimination_value(fs("F4", 3)) == Fraction(-1, 64)

    _report(7, "elimination closed forms equal exact evaluation, parameters <= 20", 120.0, body)


def test_criterion_08_screening():
    def body():
        y = {m for m in range(1, 41) if screen_family(fs("Y", m, 1, 1)).admissible}
        assert y == {2, 5, 10}
        b = {m for m in range(0, 41) if screen_family(fs("B", m, 1, 1)).admissible}
        assert b == {0, 5}

    _report(8, "root screening sweeps reproduce the admissible sets, m <= 40", 120.0, body)


def test_criterion_09_equivalence_battery():
    def body():
        for n in range(4, 101):
            assert independence_equivalent(build(fs("C", n)), build(fs("D", n))), n
        for n in range(2, 101):
            assert independence_equivalent(
                build(fs("P", 2 * n)), build([fs("P", n - 1), fs("C", n + 1)])
            ), n
        for m in range(1, 41):
            assert independence_equivalent(
                build(fs("Y", m, 2, 1)), build([fs("P", 1), fs("C", m + 3)])
            ), m
        for a, b in itertools.product(range(1, 11), repeat=2):
            pa = independence_polynomial(build(fs("A", a, b)))
            assert pa == independence_polynomial(build(fs("E", a, b)))
            assert pa == independence_polynomial(build(fs("E", b, a)))
            assert independence_polynomial(build(fs("F1", a, b))) == \
                independence_polynomial(build(fs("F5", a, b)))
        for m in range(1, 11):
            assert independence_polynomial(build(fs("F2", m))) == \
                independence_polynomial(build(fs("F4", m)))

    _report(9, "equivalence battery over the full grids", 120.0, body)


def _closed_form_roots(kind, n):
    if kind == "path":
        return sorted(
            -1.0 / (2 + 2 * math.cos(2 * i * math.pi / (n + 2)))
            for i in range(1, (n + 1) // 2 + 1)
        )
    return sorted(
        -1.0 / (2 + 2 * math.cos((2 * i - 1) * math.pi / n))
        for i in range(1, n // 2 + 1)
    )


def _check_roots_against_closed_form(poly, closed):
    assert len(closed) == poly.degree
    cuts = [Fraction(closed[0]) - 1]
    for a, b in zip(closed, closed[1:]):
        cuts.append(Fraction((a + b) / 2))
    cuts.append(Fraction(0))
    chain = SturmChain.of(poly)
    for k, approx in enumerate(closed):
        lo, hi = cuts[k], cuts[k + 1]
        # each closed-form root sits in its own certified one-root interval
        assert count_real_roots(chain, lo, hi) == 1
        rlo, rhi = refine_root(poly, lo, hi, Fraction(1, 10**12))
        assert abs(float((rlo + rhi) / 2) - approx) < 1e-9


def test_criterion_10_root_formula_cross_check():
    def body():
        for n in range(1, 51):
            _check_roots_against_closed_form(path_polynomial(n), _closed_form_roots("path", n))
        for n in range(3, 51):
            _check_roots_against_closed_form(cycle_polynomial(n), _closed_form_roots("cycle", n))

    _report(10, "closed-form roots land in distinct Sturm intervals (1e-9)", 60.0, body)
