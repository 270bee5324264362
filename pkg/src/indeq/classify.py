"""Candidate catalogue, exact elimination screens, and equivalence-class listers.

A connected graph can only appear as a component of something
independence-equivalent to a path if its independence polynomial is
squarefree with every root real and strictly below -1/4.  This module
carries three layers of that argument:

  * structural filters: degree/triangle identities every candidate
    component must satisfy (max degree 3, at most three triangles, ...)
  * exact elimination values: closed forms for I(G, -1/4) on the Y, B,
    A and F families, used to discard shapes whose value is <= 0
  * the final classifiers: complete member lists for the independence
    equivalence classes of even paths and of cycles, including the
    triangle-for-vertex (D) substitutions

The class listers are symbolic: members are multisets of FamilySpec
components, built into graphs only when validation asks for it.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Optional, Sequence

from .factorbasis import two_adic_split
from .graphcore import FamilySpec, Graph, build, canonical_form
from .indpoly import independence_polynomial, path_polynomial
from .polyalg import (
    IntPoly,
    SturmChain,
    all_roots_real_below,
    count_real_roots,
    is_squarefree,
)

_QUARTER = Fraction(-1, 4)


class EvenCycleClassNote(UserWarning):
    """Even-cycle classes come from the two-member case list; see README caveats."""


# -- degree statistics and structural filters ---------------------------------

@dataclass(frozen=True)
class DegreeStats:
    """Degree histogram plus triangle count of one graph."""

    histogram: tuple[int, ...]
    triangle_count: int

    @property
    def vertex_count(self) -> int:
        return sum(self.histogram)

    def count(self, degree: int) -> int:
        if degree < len(self.histogram):
            return self.histogram[degree]
        return 0

    @property
    def max_degree(self) -> int:
        return len(self.histogram) - 1


def degree_stats(g: Graph) -> DegreeStats:
    return DegreeStats(g.degree_histogram(), g.triangle_count())


def structural_filter(stats: DegreeStats, i1: int, i2: int, i3: int) -> bool:
    """Degree/triangle identities forced by matching a path's first coefficients.

    Checks the four counting identities tying the histogram to the
    target coefficients, plus max degree <= 3 and triangles = g0 + g3.
    """
    n = i1
    hist = stats.histogram
    tri = stats.triangle_count
    edges = comb(n, 2) - i2
    if sum(hist) != n:
        return False
    if sum(i * h for i, h in enumerate(hist)) != 2 * edges:
        return False
    cherries = i3 - comb(n, 3) + edges * (n - 2) + tri
    if sum(comb(i, 2) * h for i, h in enumerate(hist)) != cherries:
        return False
    if tri != stats.count(0) + sum(comb(i - 1, 2) * h for i, h in enumerate(hist) if i >= 3):
        return False
    if stats.max_degree > 3:
        return False
    return tri == stats.count(0) + stats.count(3)


def path_targets(n: int) -> tuple[int, int, int]:
    """First three coefficients of I(P_n, x), for feeding structural_filter."""
    cs = path_polynomial(n).coeffs
    return tuple(cs[k] if k < len(cs) else 0 for k in (1, 2, 3))


# -- exact elimination values ---------------------------------------------------

def elimination_value(spec: FamilySpec) -> Fraction:
    """Closed form for I(spec, -1/4) on the families that admit one.

    Derived by pushing the vertex-deletion identity through the known
    values I(P_k, -1/4) = (k+2)/2^(k+1) and I(C_k, -1/4) = I(D_k, -1/4)
    = 1/2^(k-1), or by solving tau_m = (U m + V)/2^m against two base
    cases for the families satisfying the two-term recurrence.
    """
    fam, p = spec.family, spec.params
    if fam == "Y":
        a, b, c = p
        num = (a + 2) * (b + 2) * (c + 2) - 2 * (a + 1) * (b + 1) * (c + 1)
        return Fraction(num, 2 ** (a + b + c + 3))
    if fam == "B":
        a, b, c = p
        return Fraction(2 - b * c, 2 ** (a + b + c + 4))
    if fam == "A":
        a, b = p
        return Fraction(4 - a * b, 2 ** (a + b + 4))
    if fam == "F3":
        return Fraction(0)
    if fam == "F4":
        (m,) = p
        return Fraction(1 - m, 2 ** (m + 4))
    if fam == "F5":
        a, b = p
        return Fraction(-b, 2 ** (a + b + 5))
    if fam == "F6":
        a, b, c = p
        return Fraction(-c, 2 ** (a + b + c + 5))
    if fam == "F7":
        (m,) = p
        return Fraction(-1, 2 ** (m + 5))
    if fam == "F8":
        a, b = p
        return Fraction(-1, 2 ** (a + b + 6))
    if fam == "F9":
        a, b, c = p
        return Fraction(-1, 2 ** (a + b + c + 6))
    raise ValueError(f"no elimination closed form for family {fam}")


@dataclass(frozen=True)
class Verdict:
    admissible: bool
    reason: str

    def __bool__(self) -> bool:
        return self.admissible


def screen_family(spec: FamilySpec) -> Verdict:
    """Admissible iff every root of I(spec, x) is real and below -1/4."""
    poly = independence_polynomial(build(spec))
    if all_roots_real_below(poly, _QUARTER):
        return Verdict(True, "all roots real and below -1/4")
    try:
        value = elimination_value(spec)
    except ValueError:
        value = None
    if value is not None and value <= 0:
        return Verdict(False, f"I(-1/4) = {value} <= 0 forces a root in [-1/4, 1)")
    if not is_squarefree(poly):
        return Verdict(False, "independence polynomial has repeated roots")
    chain = SturmChain.of(poly)
    real = count_real_roots(chain, None, None)
    if real < poly.degree:
        return Verdict(False, f"only {real} of {poly.degree} roots are real")
    return Verdict(False, "has a real root at or above -1/4")


def sweep_family(family: str, max_param: int) -> list[tuple[FamilySpec, Verdict]]:
    """Screen every parameter tuple of a family with all parameters <= max_param.

    Tuples whose closed-form value is <= 0 are reported as eliminated
    without building the graph; the agreement of that shortcut with the
    direct root check is covered by the verification suites.
    """
    import itertools

    from .graphcore import _PARAM_FLOORS

    floors = _PARAM_FLOORS[family]
    ranges = [range(f, max_param + 1) for f in floors]
    out = []
    for params in itertools.product(*ranges):
        spec = FamilySpec(family, params)
        try:
            value = elimination_value(spec)
        except ValueError:
            value = None
        if value is not None and value <= 0:
            out.append((spec, Verdict(False, f"I(-1/4) = {value} <= 0 forces a root in [-1/4, 1)")))
        else:
            out.append((spec, screen_family(spec)))
    return out


# -- the candidate catalogue (shortlist) ----------------------------------------

@dataclass(frozen=True)
class CatalogueEntry:
    """One shortlist row: a shape that survives the root screens.

    ``spec`` is None for parametric rows (whole families kept for every
    parameter).  ``factors`` is the basis factorization as (kind, index)
    pairs when the row is concrete.  Eliminated rows keep the
    factorization that doomed them plus the reason.
    """

    label: str
    triangle_count: int
    degree3_count: int
    spec: Optional[FamilySpec] = None
    factors: Optional[tuple[tuple[str, int], ...]] = None
    eliminated: bool = False
    reason: str = ""


def _fs(family, *params):
    return FamilySpec(family, tuple(params))


def _row(spec, tri, deg3, factors, eliminated=False, reason=""):
    return CatalogueEntry(str(spec), tri, deg3, spec, tuple(factors), eliminated, reason)


def _obstruction(name: str) -> str:
    return f"forced factor {name} has no carrier among the candidates"


CATALOGUE: tuple[CatalogueEntry, ...] = (
    CatalogueEntry("P:k (k>=1)", 0, 0),
    CatalogueEntry("C:k (k>=4) / D:k", 0, 0),
    _row(_fs("C", 3), 1, 0, (("f", 3),)),
    CatalogueEntry("D:k (k>=4)", 1, 1),
    CatalogueEntry("Y:z,2,1 (z>=1)", 0, 1),
    _row(_fs("Y", 10, 1, 1), 0, 1, (("f", 4), ("f", 9), ("ftilde", 5)),
         True, _obstruction("f36")),
    _row(_fs("Y", 9, 3, 1), 0, 1, (("f", 21), ("ftilde", 5)),
         True, _obstruction("f105")),
    _row(_fs("Y", 7, 3, 1), 0, 1, (("f", 15), ("ftilde", 7)),
         True, _obstruction("f105")),
    _row(_fs("Y", 5, 4, 1), 0, 1, (("f", 3), ("f", 15), ("ftilde", 3)),
         True, _obstruction("f~15")),
    _row(_fs("Y", 5, 1, 1), 0, 1, (("f", 6), ("ftilde", 3), ("ftilde", 5)),
         True, _obstruction("f~15")),
    _row(_fs("Y", 4, 3, 1), 0, 1, (("f", 9), ("ftilde", 5)),
         True, _obstruction("f~45")),
    _row(_fs("Y", 4, 2, 2), 0, 1, (("f", 12), ("ftilde", 3))),
    _row(_fs("Y", 3, 3, 2), 0, 1, (("f", 2), ("f", 15)),
         True, _obstruction("f30")),
    _row(_fs("Y", 3, 2, 2), 0, 1, (("f", 2), ("f", 9)),
         True, _obstruction("f18")),
    _row(_fs("B", 5, 1, 1), 1, 2, (("f", 4), ("f", 15)),
         True, _obstruction("f60")),
    _row(_fs("B", 0, 1, 1), 1, 2, (("f", 9),)),
    _row(_fs("E", 2, 1), 0, 1, (("f", 9),)),
    _row(_fs("E", 1, 2), 0, 1, (("f", 9),)),
    _row(_fs("A", 2, 1), 1, 2, (("f", 9),)),
    _row(_fs("E", 3, 1), 0, 1, (("f", 15),)),
    _row(_fs("E", 1, 3), 0, 1, (("f", 15),)),
    _row(_fs("A", 3, 1), 1, 2, (("f", 15),)),
    _row(_fs("E", 1, 1), 0, 1, (("f", 6), ("ftilde", 3))),
    _row(_fs("A", 1, 1), 1, 2, (("f", 6), ("ftilde", 3))),
    _row(_fs("K4e"), 2, 2, (("f", 6),)),
)


# -- equivalence classes -----------------------------------------------------

Member = tuple[FamilySpec, ...]


@dataclass(frozen=True)
class EquivClass:
    """All graphs sharing the reference's independence polynomial.

    Members are canonically ordered multisets of FamilySpec components.
    """

    reference: FamilySpec
    members: tuple[Member, ...]

    def __len__(self) -> int:
        return len(self.members)

    @property
    def polynomial(self) -> IntPoly:
        return independence_polynomial(build(self.reference))

    def graphs(self) -> list[Graph]:
        return [build(member) for member in self.members]

    def canonical_forms(self) -> frozenset[bytes]:
        return frozenset(canonical_form(g) for g in self.graphs())

    def to_json(self, include_graph6: bool = False) -> dict:
        from .graphcore import graph6_write

        payload = {
            "reference": str(self.reference),
            "members": [
                [{"family": s.family, "params": list(s.params)} for s in member]
                for member in self.members
            ],
        }
        if include_graph6:
            payload["graph6"] = [graph6_write(g) for g in self.graphs()]
        return payload


def _member_key(member: Member) -> tuple:
    return (len(member), tuple(s.sort_key for s in member))


def _normalize(parts: Sequence[tuple[str, tuple[int, ...]]]) -> Optional[Member]:
    """Turn raw (family, params) parts into a sorted member, or None if degenerate.

    Empty-path components vanish; a cycle shorter than 3 or a negative
    path makes the whole member degenerate.
    """
    specs = []
    for fam, params in parts:
        if fam == "P":
            if params[0] < 0:
                return None
            if params[0] == 0:
                continue
        if fam in ("C", "D") and params[0] < 3:
            return None
        specs.append(FamilySpec(fam, params))
    return tuple(sorted(specs, key=lambda s: s.sort_key))


def _expand_d_substitution(member: Member) -> list[Member]:
    """All variants replacing any subset of cycles C_k (k >= 4) by D_k."""
    import itertools

    options = []
    for s in member:
        if s.family == "C" and s.params[0] >= 4:
            options.append((s, FamilySpec("D", s.params)))
        else:
            options.append((s,))
    out = []
    for combo in itertools.product(*options):
        out.append(tuple(sorted(combo, key=lambda s: s.sort_key)))
    return out


def path_class(n_vertices: int, expand_d: bool = True) -> EquivClass:
    """The complete independence equivalence class of the even path P_n.

    Members are generated from the divisor structure of n + 2 = 2^t * m
    (m odd): a shorter path of the same odd part together with the
    intermediate cycles, plus the sporadic shapes that exist exactly
    when m is 3, 9 or 15.  Degenerate small cases drop out; every
    remaining cycle of length >= 4 may independently be swapped for its
    triangle-tailed twin when expand_d is set.
    """
    if n_vertices % 2 != 0:
        raise ValueError(
            f"odd paths are independence unique; no class to enumerate for P_{n_vertices}"
        )
    if n_vertices < 2:
        raise ValueError(f"need at least 2 vertices, got {n_vertices}")
    n = n_vertices + 2
    t, m = two_adic_split(n)

    def cycles(lo: int, hi: int) -> list[tuple[str, tuple[int, ...]]]:
        return [("C", (m * 2**j,)) for j in range(lo, hi)]

    raw: list[list[tuple[str, tuple[int, ...]]]] = [[("P", (n_vertices,))]]
    for tp in range(t):
        raw.append([("P", (m * 2**tp - 2,))] + cycles(tp, t))
    if m == 3:
        for z in range(1, t):
            raw.append(cycles(0, z) + [("Y", (3 * 2**z - 3, 2, 1))] + cycles(z + 1, t))
        if t >= 2:
            raw.append([("P", (4,)), ("P", (2,)), ("K4e", ())] + cycles(2, t))
            raw.append([("P", (1,)), ("C", (3,)), ("P", (2,)), ("K4e", ())] + cycles(2, t))
            for z in range(2, t):
                raw.append(
                    [("C", (3,)), ("P", (2,)), ("K4e", ())]
                    + cycles(2, z)
                    + [("Y", (3 * 2**z - 3, 2, 1))]
                    + cycles(z + 1, t)
                )
            raw.append([("E", (1, 1)), ("P", (2,)), ("C", (3,))] + cycles(2, t))
            raw.append([("A", (1, 1)), ("P", (2,)), ("C", (3,))] + cycles(2, t))
        if t >= 3:
            tail = cycles(3, t)
            raw.append([("Y", (4, 2, 2)), ("P", (2,)), ("C", (3,)), ("C", (4,)), ("K4e", ())] + tail)
            raw.append([("Y", (4, 2, 2)), ("C", (3,)), ("C", (4,)), ("C", (6,))] + tail)
            raw.append([("Y", (4, 2, 2)), ("C", (3,)), ("P", (6,)), ("K4e", ())] + tail)
    if m == 9:
        for extra in (("B", (0, 1, 1)), ("E", (2, 1)), ("E", (1, 2)), ("A", (2, 1))):
            raw.append([("P", (7,)), ("C", (3,)), extra] + cycles(1, t))
    if m == 15:
        for extra in (("E", (3, 1)), ("E", (1, 3)), ("A", (3, 1))):
            raw.append([("P", (13,)), ("C", (3,)), ("C", (5,)), extra] + cycles(1, t))

    members: set[Member] = set()
    for parts in raw:
        member = _normalize(parts)
        if member is None:
            continue
        if expand_d:
            members.update(_expand_d_substitution(member))
        else:
            members.add(member)
    ordered = tuple(sorted(members, key=_member_key))
    return EquivClass(FamilySpec("P", (n_vertices,)), ordered)


def cycle_class(n: int) -> EquivClass:
    """The independence equivalence class of the cycle C_n."""
    if n < 3:
        raise ValueError(f"cycle length must be >= 3, got {n}")
    if n % 2 == 0:
        warnings.warn(
            "even-cycle classes follow the two-member case list (three members "
            "for n = 6); exhaustive confirmation exists only at oracle scale",
            EvenCycleClassNote,
            stacklevel=2,
        )
    if n == 3:
        raw: list[list[tuple[str, tuple[int, ...]]]] = [[("C", (3,))]]
    elif n == 6:
        raw = [[("C", (6,))], [("D", (6,))], [("K4e", ()), ("P", (2,))]]
    elif n == 9:
        raw = [[("C", (9,))], [("D", (9,))]]
        for extra in (("B", (0, 1, 1)), ("E", (2, 1)), ("E", (1, 2)), ("A", (2, 1))):
            raw.append([("C", (3,)), extra])
    elif n == 15:
        raw = [[("C", (15,))], [("D", (15,))]]
        for ring in (("C", (5,)), ("D", (5,))):
            for extra in (("E", (3, 1)), ("E", (1, 3)), ("A", (3, 1))):
                raw.append([("C", (3,)), ring, extra])
    else:
        raw = [[("C", (n,))], [("D", (n,))]]
    normalized = {_normalize(parts) for parts in raw}
    members = tuple(sorted((mem for mem in normalized if mem is not None), key=_member_key))
    return EquivClass(FamilySpec("C", (n,)), members)
