"""Command-line interface: polynomials, factorizations, classes, screens, checks.

Subcommands:

  poly       independence polynomial of a family spec or graph6 string
  factor     basis factorization of paths, cycles, or arbitrary specs
  class      equivalence class members of even paths / cycles
  roots      root location report for a spec (count below -1/4, etc.)
  screen     admissibility sweep of one family up to a parameter bound
  enumerate  stream non-isomorphic graphs as graph6 lines
  verify     named check batteries with PASS/FAIL lines per claim

Family specs use a small grammar: ``P:10``, ``C:6``, ``Y:3,2,1``,
``K4e``, and ``+`` for disjoint unions (``P:2+K4e``).  All output is
deterministic byte for byte.
"""

from __future__ import annotations

import argparse
import json
import sys
import warnings
from fractions import Fraction
from typing import Callable, Optional

from . import classify, factorbasis, indpoly, oracle, polyalg
from .graphcore import (
    FAMILY_ARITY,
    FamilySpec,
    Graph,
    Graph6Error,
    build,
    canonical_form,
    graph6_read,
    graph6_write,
)

_QUARTER = Fraction(-1, 4)


class SpecSyntaxError(ValueError):
    """Spec text rejected; message carries the character position."""


def parse_spec_text(text: str) -> tuple[FamilySpec, ...]:
    """Parse the family-spec micro-grammar, unions joined with '+'."""
    specs = []
    offset = 0
    for chunk in text.split("+"):
        part = chunk.strip()
        pos = offset + chunk.index(part) if part else offset
        if not part:
            raise SpecSyntaxError(f"empty spec component at position {pos}")
        head, _, tail = part.partition(":")
        family = head.strip()
        if family not in FAMILY_ARITY:
            raise SpecSyntaxError(f"unknown family {family!r} at position {pos}")
        params: tuple[int, ...] = ()
        if tail or FAMILY_ARITY[family] > 0:
            if not tail:
                raise SpecSyntaxError(
                    f"{family} needs {FAMILY_ARITY[family]} parameter(s) at position {pos}"
                )
            items = tail.split(",")
            try:
                params = tuple(int(item.strip()) for item in items)
            except ValueError:
                raise SpecSyntaxError(f"non-integer parameter in {part!r} at position {pos}")
        try:
            specs.append(FamilySpec(family, params))
        except ValueError as exc:
            raise SpecSyntaxError(f"{exc} at position {pos}")
        offset += len(chunk) + 1
    return tuple(specs)


def _graph_from_text(text: str) -> tuple[Graph, str]:
    """Interpret input as a family spec first, then as graph6."""
    try:
        specs = parse_spec_text(text)
        return build(specs), "+".join(str(s) for s in specs)
    except SpecSyntaxError as spec_err:
        try:
            return graph6_read(text), text
        except Graph6Error as g6_err:
            raise SpecSyntaxError(
                f"input is neither a family spec ({spec_err}) nor graph6 ({g6_err})"
            )


# -- subcommand implementations ---------------------------------------------


def _cmd_poly(args) -> int:
    if args.spec == "-":
        results = []
        for line in sys.stdin:
            line = line.strip()
            if line:
                results.append((graph6_read(line), line))
    else:
        results = [_graph_from_text(args.spec)]
    for g, label in results:
        poly = indpoly.independence_polynomial(g)
        if args.json:
            print(json.dumps({"input": label, "coefficients": poly.to_decimal_strings()}))
        else:
            print(" ".join(poly.to_decimal_strings()) or "1")
    return 0


def _factor_names(factors) -> str:
    return " ".join(f.name for f in factors)


def _cmd_factor(args) -> int:
    if args.kind == "path":
        factors = factorbasis.factor_path(args.n)
    elif args.kind == "cycle":
        factors = factorbasis.factor_cycle(args.n)
    else:
        g, _ = _graph_from_text(args.spec)
        poly = indpoly.independence_polynomial(g)
        candidates = None
        if args.max_index:
            candidates = tuple(
                factorbasis.basis_f(i) for i in range(2, args.max_index + 1)
            ) + tuple(factorbasis.basis_ftilde(i) for i in range(3, args.max_index + 1, 2))
        try:
            factors = factorbasis.factor_into_basis(poly, candidates)
        except factorbasis.FactorizationError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 1
    if args.json:
        print(json.dumps(factorbasis.multiset_to_json(factors)))
    else:
        print(_factor_names(factors))
    return 0


def _cmd_class(args) -> int:
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", classify.EvenCycleClassNote)
        if args.kind == "path":
            cls = classify.path_class(args.n, expand_d=args.expand_d)
        else:
            cls = classify.cycle_class(args.n)
    if args.json:
        print(json.dumps(cls.to_json(include_graph6=args.graph6)))
        return 0
    for member in cls.members:
        line = " + ".join(str(s) for s in member)
        if args.graph6:
            line += "\t" + graph6_write(build(member))
        print(line)
    return 0


def _cmd_roots(args) -> int:
    g, label = _graph_from_text(args.spec)
    poly = indpoly.independence_polynomial(g)
    squarefree = polyalg.is_squarefree(poly)
    counted = polyalg.squarefree_part(poly)
    chain = polyalg.SturmChain.of(counted)
    real_total = polyalg.count_real_roots(chain, None, None)
    below = polyalg.count_real_roots(chain, None, _QUARTER)
    at_quarter = counted.sign_at(_QUARTER) == 0
    strictly_below = below - (1 if at_quarter else 0)
    approx = polyalg.real_roots_approx(poly)
    payload = {
        "input": label,
        "degree": poly.degree,
        "squarefree": squarefree,
        "distinct_real_roots": real_total,
        "real_roots_below_-1/4": strictly_below,
        "root_at_-1/4": at_quarter,
        "all_roots_real_below_-1/4": polyalg.all_roots_real_below(poly, _QUARTER),
        "approx_real_roots": approx,
    }
    if args.json:
        print(json.dumps(payload))
    else:
        for key, value in payload.items():
            if key == "approx_real_roots":
                value = " ".join(f"{r:.12g}" for r in value)
            print(f"{key}: {value}")
    return 0


def _cmd_screen(args) -> int:
    if args.family not in FAMILY_ARITY:
        print(f"error: unknown family {args.family!r}", file=sys.stderr)
        return 2
    rows = classify.sweep_family(args.family, args.max)
    if args.json:
        print(json.dumps([
            {"spec": str(s), "admissible": v.admissible, "reason": v.reason}
            for s, v in rows
        ]))
        return 0
    admitted = 0
    for s, verdict in rows:
        tag = "admissible" if verdict.admissible else "eliminated"
        admitted += verdict.admissible
        print(f"{s}\t{tag}\t{verdict.reason}")
    print(f"# {admitted} admissible of {len(rows)}", file=sys.stderr)
    return 0


def _cmd_enumerate(args) -> int:
    filt = oracle.EnumFilter(
        vertex_count=args.vertices,
        edge_count=args.edges,
        max_degree=args.max_degree,
        connected_only=args.connected,
    )
    try:
        for g in oracle.enumerate_graphs(filt):
            print(graph6_write(g))
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 0


# -- verify suites --------------------------------------------------------------

Check = tuple[str, Callable[[], tuple[bool, str]]]


def _bounds(bound: str) -> dict:
    if bound == "small":
        return {
            "equiv": 40, "spider": 15, "grid": 6, "recur": 10, "edge_verts": 10,
            "factor": 60, "degree": 120, "coprime": 24, "roots": 30,
            "elim": 6, "sweep": 15, "class_paths": (4, 6, 8), "odd_paths": (3, 5, 7),
            "cycles": (4, 5, 6), "search": 20, "enum": 6,
        }
    return {
        "equiv": 100, "spider": 40, "grid": 10, "recur": 20, "edge_verts": 12,
        "factor": 200, "degree": 500, "coprime": 60, "roots": 60,
        "elim": 20, "sweep": 40, "class_paths": (4, 6, 8, 10), "odd_paths": (3, 5, 7, 9),
        "cycles": (4, 5, 6, 7, 8, 9), "search": 40, "enum": 7,
    }


def _spec(family, *params):
    return FamilySpec(family, tuple(params))


def _poly_of(*specs) -> polyalg.IntPoly:
    return indpoly.independence_polynomial(build(list(specs)))


def _check_equivalences(b) -> tuple[bool, str]:
    top = b["equiv"]
    for n in range(4, top + 1):
        if _poly_of(_spec("C", n)) != _poly_of(_spec("D", n)):
            return False, f"C:{n} != D:{n}"
    for n in range(2, top + 1):
        if _poly_of(_spec("P", 2 * n)) != _poly_of(_spec("P", n - 1), _spec("C", n + 1)):
            return False, f"P:{2*n} != P:{n-1}+C:{n+1}"
    for m in range(1, b["spider"] + 1):
        if _poly_of(_spec("Y", m, 2, 1)) != _poly_of(_spec("P", 1), _spec("C", m + 3)):
            return False, f"Y:{m},2,1 != P:1+C:{m+3}"
    g = b["grid"]
    for a in range(1, g + 1):
        for c in range(1, g + 1):
            pa = _poly_of(_spec("A", a, c))
            if pa != _poly_of(_spec("E", a, c)) or pa != _poly_of(_spec("E", c, a)):
                return False, f"A/E mismatch at {a},{c}"
            if _poly_of(_spec("F1", a, c)) != _poly_of(_spec("F5", a, c)):
                return False, f"F1/F5 mismatch at {a},{c}"
        if _poly_of(_spec("F2", a)) != _poly_of(_spec("F4", a)):
            return False, f"F2/F4 mismatch at {a}"
    return True, f"cycle/path/spider/tadpole identities up to {top}"


def _check_recurrences(b) -> tuple[bool, str]:
    top = b["recur"]
    series: list[tuple[str, Callable[[int], list[FamilySpec]], int]] = [
        ("P", lambda m: [_spec("P", m)], 2),
        ("C", lambda m: [_spec("C", m)], 5),
        ("D", lambda m: [_spec("D", m)], 4),
        ("Y:m,1,1", lambda m: [_spec("Y", m, 1, 1)], 3),
        ("B:m,1,1", lambda m: [_spec("B", m, 1, 1)], 2),
        ("A:m,2", lambda m: [_spec("A", m, 2)], 3),
        ("F4", lambda m: [_spec("F4", m)], 3),
        ("F5:1,m", lambda m: [_spec("F5", 1, m)], 3),
        ("F6:1,1,m", lambda m: [_spec("F6", 1, 1, m)], 3),
    ]
    for name, make, start in series:
        for m in range(start, top + 1):
            lhs = _poly_of(*make(m))
            rhs = _poly_of(*make(m - 1)) + _poly_of(*make(m - 2)).mul_xpow(1)
            if lhs != rhs:
                return False, f"two-term recurrence fails for {name} at m={m}"
    return True, f"two-term deletion recurrences hold up to index {top}"


def _check_edge_deletion(b) -> tuple[bool, str]:
    specs = [_spec("C", 6), _spec("D", 6), _spec("Y", 3, 2, 1), _spec("E", 2, 2),
             _spec("A", 2, 2), _spec("B", 1, 2, 1), _spec("K4e"), _spec("F3", 2),
             _spec("F7", 1), _spec("F9", 0, 1, 0)]
    for s in specs:
        g = build(s)
        if g.n > b["edge_verts"]:
            continue
        pg = indpoly.independence_polynomial(g)
        for u, v in g.edges():
            minus_e, minus_nbhd = g.delete_edge_and_open_neighborhoods(u, v)
            rhs = indpoly.independence_polynomial(minus_e) - indpoly.independence_polynomial(minus_nbhd).mul_xpow(2)
            if pg != rhs:
                return False, f"edge identity fails for {s} at edge ({u},{v})"
    return True, "edge-deletion identity holds across the catalogue sample"


def _check_factorizations(b) -> tuple[bool, str]:
    top = b["factor"]
    for n in range(3, top + 1):
        if factorbasis.product_of(factorbasis.factor_cycle(n)) != indpoly.cycle_polynomial(n):
            return False, f"cycle factor product fails at n={n}"
    for n in range(0, top - 1):
        if factorbasis.product_of(factorbasis.factor_path(n)) != indpoly.path_polynomial(n):
            return False, f"path factor product fails at n={n}"
    return True, f"factor products reproduce path/cycle polynomials up to {top}"


def _check_degrees(b) -> tuple[bool, str]:
    top = b["degree"]
    for n in range(2, top + 1):
        if factorbasis.basis_f(n).poly.degree != factorbasis.euler_phi(2 * n) // 2:
            return False, f"deg f{n} wrong"
        if n % 2 == 1 and n >= 3:
            if factorbasis.basis_ftilde(n).poly.degree != factorbasis.euler_phi(n) // 2:
                return False, f"deg f~{n} wrong"
    return True, f"basis degrees match phi-formulas up to {top}"


def _check_coprime(b) -> tuple[bool, str]:
    top = b["coprime"]
    polys = [factorbasis.basis_f(n).poly for n in range(2, top + 1)]
    polys += [factorbasis.basis_ftilde(n).poly for n in range(3, top + 1, 2)]
    for i, p in enumerate(polys):
        for q in polys[i + 1:]:
            if polyalg.poly_gcd(p, q).degree != 0:
                return False, "common factor found"
    for k in range(3, top + 1):
        fk = set(factorbasis.factor_cycle(k))
        for n in range(3, top + 1):
            divides = fk <= set(factorbasis.factor_cycle(n))
            odd_ratio = n % k == 0 and (n // k) % 2 == 1
            if divides != odd_ratio:
                return False, f"cycle divisibility law fails at k={k}, n={n}"
    return True, f"pairwise coprimality and the odd-ratio divisibility law up to {top}"


def _check_basis_roots(b) -> tuple[bool, str]:
    top = b["roots"]
    for n in range(1, top + 1):
        if not polyalg.all_roots_real_below(indpoly.path_polynomial(n), _QUARTER):
            return False, f"path polynomial roots escape at n={n}"
        if n >= 3 and not polyalg.all_roots_real_below(indpoly.cycle_polynomial(n), _QUARTER):
            return False, f"cycle polynomial roots escape at n={n}"
        if n >= 2 and not polyalg.all_roots_real_below(factorbasis.basis_f(n).poly, _QUARTER):
            return False, f"f{n} roots escape"
        if n >= 3 and n % 2 == 1 and not polyalg.all_roots_real_below(
                factorbasis.basis_ftilde(n).poly, _QUARTER):
            return False, f"f~{n} roots escape"
    return True, f"all path/cycle/basis roots real and below -1/4 up to {top}"


def _check_elimination_values(b) -> tuple[bool, str]:
    import itertools
    from .graphcore import _PARAM_FLOORS

    top = b["elim"]
    for fam in ("Y", "B", "A", "F3", "F4", "F5", "F6", "F7", "F8", "F9"):
        floors = _PARAM_FLOORS[fam]
        for params in itertools.product(*[range(f, top + 1) for f in floors]):
            s = FamilySpec(fam, params)
            if classify.elimination_value(s) != _poly_of(s).eval_rational(_QUARTER):
                return False, f"closed form disagrees with evaluation at {s}"
    f42 = classify.elimination_value(_spec("F4", 2))
    f43 = classify.elimination_value(_spec("F4", 3))
    if f42 != Fraction(-1, 64) or f43 != Fraction(-1, 64):
        return False, "F4 base values are not -1/64"
    return True, f"elimination closed forms equal exact evaluation, parameters <= {top}"


def _check_screens(b) -> tuple[bool, str]:
    top = b["sweep"]
    y = {m for m in range(1, top + 1)
         if classify.screen_family(_spec("Y", m, 1, 1)).admissible}
    if y != {2, 5, 10} & set(range(1, top + 1)):
        return False, f"Y:m,1,1 admissible set is {sorted(y)}"
    bb = {m for m in range(0, top + 1)
          if classify.screen_family(_spec("B", m, 1, 1)).admissible}
    if bb != {0, 5} & set(range(0, top + 1)):
        return False, f"B:m,1,1 admissible set is {sorted(bb)}"
    triples = {s.params for s, v in classify.sweep_family("Y", 6)
               if v.admissible and min(s.params) >= 2}
    want = {(4, 2, 2), (3, 3, 2), (3, 2, 2), (2, 2, 4), (2, 2, 3), (2, 3, 3),
            (2, 4, 2), (3, 2, 3), (2, 3, 2)}
    if triples != {t for t in want if max(t) <= 6}:
        return False, f"Y triple admissible set is {sorted(triples)}"
    return True, f"screening sweeps match the expected admissible sets, m <= {top}"


def _check_catalogue(b) -> tuple[bool, str]:
    for entry in classify.CATALOGUE:
        if entry.spec is None:
            continue
        poly = _poly_of(entry.spec)
        want = factorbasis.product_of(tuple(
            factorbasis.basis_f(i) if kind == "f" else factorbasis.basis_ftilde(i)
            for kind, i in entry.factors
        ))
        if poly != want:
            return False, f"catalogue factorization wrong for {entry.label}"
        stats = classify.degree_stats(build(entry.spec))
        if (stats.triangle_count, stats.count(3)) != (entry.triangle_count, entry.degree3_count):
            return False, f"catalogue structure counts wrong for {entry.label}"
    return True, "catalogue rows reproduce their factorizations and structure counts"


def _check_classes_small(b) -> tuple[bool, str]:
    for nv in b["class_paths"]:
        want = classify.path_class(nv).canonical_forms()
        got = frozenset(
            canonical_form(g)
            for g in oracle.equivalence_class_bruteforce(build(_spec("P", nv)))
        )
        if want != got:
            return False, f"path class mismatch at n={nv}"
    for nv in b["odd_paths"]:
        cls = oracle.equivalence_class_bruteforce(build(_spec("P", nv)))
        if len(cls) != 1:
            return False, f"odd path P:{nv} is not unique in its class"
    return True, f"brute-force classes match for paths {b['class_paths']} and odd {b['odd_paths']}"


def _check_cycle_classes(b) -> tuple[bool, str]:
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", classify.EvenCycleClassNote)
        for n in b["cycles"]:
            want = classify.cycle_class(n).canonical_forms()
            got = frozenset(
                canonical_form(g)
                for g in oracle.equivalence_class_bruteforce(build(_spec("C", n)))
            )
            if want != got:
                return False, f"cycle class mismatch at n={n}"
    return True, f"brute-force cycle classes match for n in {b['cycles']}"


def _check_search(b) -> tuple[bool, str]:
    for nv in range(2, b["search"] + 1, 2):
        if oracle.catalogue_class_search(nv).members != classify.path_class(nv).members:
            return False, f"catalogue search disagrees with the classifier at n={nv}"
    return True, f"catalogue cover search matches the classifier for even n <= {b['search']}"


def _check_enumeration(b) -> tuple[bool, str]:
    top = b["enum"]
    for n in range(1, top + 1):
        counted = oracle.count_isomorphism_classes(n)
        if counted != oracle.unlabeled_graph_count(n):
            return False, f"enumeration count wrong at n={n}: {counted}"
        if n <= 6 and counted != oracle.naive_bucket_count(n):
            return False, f"naive bucketing disagrees at n={n}"
    return True, f"enumeration counts match orbit counting up to n={top}"


SUITES: dict[str, list[str]] = {
    "identities": ["equivalences", "recurrences", "edge-deletion"],
    "factorization": ["factor-products", "basis-degrees", "coprimality", "root-locations"],
    "eliminations": ["closed-forms", "screens", "catalogue"],
    "classes-vs-oracle": ["enumeration", "path-classes", "cycle-classes", "cover-search"],
}

CHECKS: dict[str, Callable] = {
    "equivalences": _check_equivalences,
    "recurrences": _check_recurrences,
    "edge-deletion": _check_edge_deletion,
    "factor-products": _check_factorizations,
    "basis-degrees": _check_degrees,
    "coprimality": _check_coprime,
    "root-locations": _check_basis_roots,
    "closed-forms": _check_elimination_values,
    "screens": _check_screens,
    "catalogue": _check_catalogue,
    "enumeration": _check_enumeration,
    "path-classes": _check_classes_small,
    "cycle-classes": _check_cycle_classes,
    "cover-search": _check_search,
}


def _cmd_verify(args) -> int:
    names = []
    if args.suite == "all":
        for suite in SUITES.values():
            names.extend(suite)
    else:
        names = SUITES[args.suite]
    bounds = _bounds(args.bound)
    failures = 0
    for name in names:
        ok, detail = CHECKS[name](bounds)
        status = "PASS" if ok else "FAIL"
        failures += not ok
        print(f"{status} {name}: {detail}")
    return 1 if failures else 0


# -- argument parsing -------------------------------------------------------------

def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="indeq",
        description="independence polynomials, basis factorizations, and "
                    "equivalence classes of paths and cycles",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("poly", help="independence polynomial coefficients")
    p.add_argument("spec",
                   help="family spec (P:10, C:6+P:2, K4e), graph6 text, or '-' "
                        "to read graph6 lines from stdin")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_poly)

    p = sub.add_parser("factor", help="basis factorization")
    fsub = p.add_subparsers(dest="kind", required=True)
    fp = fsub.add_parser("path")
    fp.add_argument("n", type=int)
    fc = fsub.add_parser("cycle")
    fc.add_argument("n", type=int)
    fs = fsub.add_parser("spec")
    fs.add_argument("spec")
    fs.add_argument("--max-index", type=int, default=0,
                    help="largest basis index to try (default: heuristic)")
    for q in (fp, fc, fs):
        q.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_factor)

    p = sub.add_parser("class", help="independence equivalence class members")
    csub = p.add_subparsers(dest="kind", required=True)
    cp = csub.add_parser("path")
    cp.add_argument("n", type=int)
    cc = csub.add_parser("cycle")
    cc.add_argument("n", type=int)
    for q in (cp, cc):
        q.add_argument("--json", action="store_true")
        q.add_argument("--graph6", action="store_true")
        q.add_argument("--expand-d", dest="expand_d", action="store_true", default=True,
                       help="expand triangle-for-cycle substitutions (default)")
        q.add_argument("--no-expand-d", dest="expand_d", action="store_false")
    p.set_defaults(func=_cmd_class)

    p = sub.add_parser("roots", help="root-location report")
    p.add_argument("spec")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_roots)

    p = sub.add_parser("screen", help="admissibility sweep of one family")
    p.add_argument("family")
    p.add_argument("--max", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_screen)

    p = sub.add_parser("enumerate", help="stream non-isomorphic graphs as graph6")
    p.add_argument("--vertices", type=int, required=True)
    p.add_argument("--edges", type=int, default=None)
    p.add_argument("--max-degree", type=int, default=None)
    p.add_argument("--connected", action="store_true")
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("verify", help="run a named check battery")
    p.add_argument("suite", choices=sorted(SUITES) + ["all"])
    p.add_argument("--bound", choices=("small", "full"), default="small")
    p.set_defaults(func=_cmd_verify)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (SpecSyntaxError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
