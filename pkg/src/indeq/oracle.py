"""Independent ground truth: exhaustive graph enumeration and class search.

Three mechanisms cross-check the classifier from different directions:

  * enumerate_graphs: every isomorphism class on a fixed vertex count,
    grown edge by edge from the empty graph with canonical-form
    deduplication at each level, streamed in a deterministic order
  * equivalence_class_bruteforce: filter an exhaustive enumeration down
    to the graphs sharing a reference independence polynomial; the only
    filters applied are the vertex and edge counts, both of which are
    forced by the polynomial's first two coefficients
  * catalogue_class_search: assemble class members as exact covers of
    the reference's basis-factor set by shortlist components, using the
    factorization tables but none of the final case analysis

Enumeration totals are themselves checked two ways: against naive
bucketing of all labeled graphs (small n) and against an orbit-counting
computation over permutation cycle types that never touches the
canonical-form machinery.
"""

from __future__ import annotations

import itertools
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from math import comb, factorial, gcd
from typing import Iterator, Optional

from .classify import EquivClass, _member_key
from .factorbasis import factor_cycle, factor_path
from .graphcore import FamilySpec, Graph, canonical_form, graph6_read, recognize
from .indpoly import independence_polynomial

_UNFILTERED_MAX = 10
_FILTERED_MAX = 12
_WORKERS_ENV = "INDEQ_WORKERS"


@dataclass(frozen=True)
class EnumFilter:
    """What to enumerate: vertex count plus optional structural filters."""

    vertex_count: int
    edge_count: Optional[int] = None
    max_degree: Optional[int] = None
    connected_only: bool = False

    def __post_init__(self):
        if self.vertex_count < 0:
            raise ValueError("vertex count must be non-negative")
        cap = comb(self.vertex_count, 2)
        if self.edge_count is not None and not (0 <= self.edge_count <= cap):
            raise ValueError(
                f"edge count {self.edge_count} impossible on {self.vertex_count} vertices"
            )


def _check_bounds(filt: EnumFilter) -> None:
    n = filt.vertex_count
    if filt.edge_count is None and n > _UNFILTERED_MAX:
        raise ValueError(
            f"unfiltered enumeration is capped at {_UNFILTERED_MAX} vertices "
            f"(n={n} spans 2^{comb(n, 2)} labeled graphs)"
        )
    if n > _FILTERED_MAX:
        raise ValueError(
            f"enumeration is capped at {_FILTERED_MAX} vertices "
            f"(n={n} spans 2^{comb(n, 2)} labeled graphs)"
        )


def _expand_level(args) -> list[tuple[bytes, tuple[int, ...]]]:
    """Children of a chunk of parent adjacency tuples (worker-safe)."""
    n, rows, max_degree = args
    out = []
    for adj in rows:
        parent = Graph(n, adj)
        for u in range(n):
            for v in range(u + 1, n):
                if adj[u] >> v & 1:
                    continue
                if max_degree is not None and (
                    parent.degree(u) >= max_degree or parent.degree(v) >= max_degree
                ):
                    continue
                child_adj = list(adj)
                child_adj[u] |= 1 << v
                child_adj[v] |= 1 << u
                child = Graph(n, child_adj)
                out.append((canonical_form(child), child.adj))
    return out


def _worker_count() -> int:
    raw = os.environ.get(_WORKERS_ENV, "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def enumerate_graphs(filt: EnumFilter) -> Iterator[Graph]:
    """One representative per isomorphism class matching the filter.

    Graphs are yielded by increasing edge count and, within an edge
    count, by canonical form, so the stream is byte-deterministic.
    """
    _check_bounds(filt)
    n = filt.vertex_count
    top = comb(n, 2) if filt.edge_count is None else filt.edge_count
    workers = _worker_count()

    def matches(g: Graph) -> bool:
        if filt.connected_only and not g.is_connected():
            return False
        if filt.max_degree is not None and any(d > filt.max_degree for d in g.degrees()):
            return False
        return True

    level: dict[bytes, Graph] = {}
    empty = Graph.empty(n)
    level[canonical_form(empty)] = empty
    for edges in range(top + 1):
        if filt.edge_count is None or edges == filt.edge_count:
            # yield the canonical representative so the stream does not
            # depend on which labeled copy each worker found first
            for key in sorted(level):
                if matches(level[key]):
                    yield graph6_read(key.decode("ascii"))
        if edges == top:
            break
        rows = [g.adj for g in level.values()]
        nxt: dict[bytes, tuple[int, ...]] = {}
        if workers > 1 and len(rows) >= 4 * workers:
            chunks = [(n, rows[i::workers], filt.max_degree) for i in range(workers)]
            with ProcessPoolExecutor(max_workers=workers) as pool:
                for result in pool.map(_expand_level, chunks):
                    for key, adj in result:
                        nxt.setdefault(key, adj)
        else:
            for key, adj in _expand_level((n, rows, filt.max_degree)):
                nxt.setdefault(key, adj)
        level = {key: Graph(n, adj) for key, adj in nxt.items()}


def count_isomorphism_classes(n: int) -> int:
    """Number of graphs on n unlabeled vertices, via enumeration."""
    return sum(1 for _ in enumerate_graphs(EnumFilter(n)))


def _partitions(n: int, least: int = 1) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for first in range(least, n + 1):
        for rest in _partitions(n - first, first):
            yield (first,) + rest


@lru_cache(maxsize=None)
def unlabeled_graph_count(n: int) -> int:
    """Burnside count of graphs on n unlabeled vertices.

    Sums 2^(pair cycles) over permutation cycle types; independent of
    the canonical-form machinery by construction.
    """
    total = 0
    for parts in _partitions(n):
        mult: dict[int, int] = {}
        for p in parts:
            mult[p] = mult.get(p, 0) + 1
        perms = factorial(n)
        for length, count in mult.items():
            perms //= length**count * factorial(count)
        pair_cycles = sum(p // 2 for p in parts)
        pair_cycles += sum(gcd(a, b) for a, b in itertools.combinations(parts, 2))
        total += perms * 2**pair_cycles
    return total // factorial(n)


def naive_bucket_count(n: int) -> int:
    """Count classes by canonicalizing every labeled graph (small n only)."""
    if n > 6:
        raise ValueError("naive bucketing is capped at 6 vertices")
    pairs = list(itertools.combinations(range(n), 2))
    seen = set()
    for bits in range(1 << len(pairs)):
        edges = [pairs[i] for i in range(len(pairs)) if bits >> i & 1]
        seen.add(canonical_form(Graph.from_edges(n, edges)))
    return len(seen)


def isomorphic_bruteforce(g: Graph, h: Graph) -> bool:
    """Isomorphism by backtracking vertex assignment; no canonical forms."""
    if g.n != h.n or g.edge_count != h.edge_count:
        return False
    if sorted(g.degrees()) != sorted(h.degrees()):
        return False
    n = g.n
    hdeg = h.degrees()
    order = sorted(range(n), key=lambda v: -g.degree(v))
    image = [-1] * n
    used = 0

    def assign(idx: int) -> bool:
        nonlocal used
        if idx == n:
            return True
        u = order[idx]
        for w in range(n):
            if used >> w & 1 or hdeg[w] != g.degree(u):
                continue
            ok = True
            for j in range(idx):
                prev = order[j]
                if g.has_edge(u, prev) != h.has_edge(w, image[prev]):
                    ok = False
                    break
            if ok:
                image[u] = w
                used |= 1 << w
                if assign(idx + 1):
                    return True
                used &= ~(1 << w)
                image[u] = -1
        return False

    return assign(0)


def equivalence_class_bruteforce(
    reference: Graph,
    filt: Optional[EnumFilter] = None,
    assisted: bool = False,
) -> list[Graph]:
    """Every graph (up to isomorphism) sharing the reference's polynomial.

    The enumeration filter defaults to the vertex and edge counts read
    off the polynomial's first two coefficients; anything stronger is
    rejected unless explicitly marked assisted, because an assisted run
    no longer proves completeness on its own.
    """
    poly = independence_polynomial(reference)
    cs = poly.coeffs
    i1 = cs[1] if len(cs) > 1 else 0
    i2 = cs[2] if len(cs) > 2 else 0
    derived = EnumFilter(reference.n, comb(reference.n, 2) - i2)
    assert i1 == reference.n
    if filt is None:
        filt = derived
    if filt.vertex_count != reference.n:
        raise ValueError(
            f"filter vertex count {filt.vertex_count} != reference's {reference.n}"
        )
    if filt.edge_count not in (None, derived.edge_count):
        raise ValueError(
            f"filter edge count {filt.edge_count} contradicts the "
            f"coefficient-derived value {derived.edge_count}"
        )
    if not assisted and (filt.max_degree is not None or filt.connected_only):
        raise ValueError(
            "structural filters beyond vertex/edge counts require assisted=True"
        )
    members = [g for g in enumerate_graphs(filt) if independence_polynomial(g) == poly]
    members.sort(key=canonical_form)
    return members


def as_equiv_class(reference: FamilySpec, graphs: list[Graph]) -> EquivClass:
    """Express concrete class members as FamilySpec multisets.

    Each connected component must match a catalogue shape; this holds
    for every member of a path or cycle class.  Raises ValueError on an
    unrecognizable component so silent mislabeling is impossible.
    """
    members = []
    for g in graphs:
        parts = []
        for comp in g.connected_components():
            spec = recognize(g.induced(comp))
            if spec is None:
                raise ValueError(
                    f"component on {len(comp)} vertices matches no catalogue shape"
                )
            parts.append(spec)
        members.append(tuple(sorted(parts, key=lambda s: s.sort_key)))
    return EquivClass(reference, tuple(sorted(set(members), key=_member_key)))


# -- catalogue-driven class search ---------------------------------------------

def _factor_key(factors) -> frozenset:
    return frozenset((f.kind, f.index) for f in factors)


def catalogue_class_search(n_vertices: int) -> EquivClass:
    """Members of the even path's class via exact cover of its factor set.

    Candidate components are the shortlist shapes; each occupies the set
    of basis factors of its polynomial, and members are exactly the ways
    to cover the path's factor set with disjoint candidate sets.  The
    search consumes the factorization tables but not the case analysis
    behind the final classification, so agreement with path_class is a
    real check.
    """
    if n_vertices % 2 != 0 or n_vertices < 2:
        raise ValueError("catalogue search is defined for even paths on >= 2 vertices")
    if n_vertices > 60:
        raise ValueError("catalogue search is capped at 60 vertices")
    target = _factor_key(factor_path(n_vertices))

    entries: list[tuple[frozenset, tuple[FamilySpec, ...]]] = []
    for k in range(1, n_vertices + 1):
        fs = _factor_key(factor_path(k))
        if fs and fs <= target:
            entries.append((fs, (FamilySpec("P", (k,)),)))
    for k in range(3, n_vertices + 1):
        fs = _factor_key(factor_cycle(k))
        if fs <= target:
            variants = (FamilySpec("C", (k,)),)
            if k >= 4:
                variants += (FamilySpec("D", (k,)),)
            entries.append((fs, variants))
    for z in range(1, max(0, n_vertices - 3)):
        fs = frozenset({("ftilde", 3)} | _factor_key(factor_cycle(z + 3)))
        if fs <= target:
            entries.append((fs, (FamilySpec("Y", (z, 2, 1)),)))
    specials = (
        (frozenset({("f", 12), ("ftilde", 3)}), (FamilySpec("Y", (4, 2, 2)),)),
        (frozenset({("f", 9)}),
         (FamilySpec("B", (0, 1, 1)), FamilySpec("E", (2, 1)),
          FamilySpec("E", (1, 2)), FamilySpec("A", (2, 1)))),
        (frozenset({("f", 15)}),
         (FamilySpec("E", (3, 1)), FamilySpec("E", (1, 3)), FamilySpec("A", (3, 1)))),
        (frozenset({("f", 6), ("ftilde", 3)}),
         (FamilySpec("E", (1, 1)), FamilySpec("A", (1, 1)))),
        (frozenset({("f", 6)}), (FamilySpec("K4e", ()),)),
    )
    for fs, variants in specials:
        if fs <= target:
            entries.append((fs, variants))
    entries.sort(key=lambda e: (sorted(e[0]), e[1]))

    order = sorted(target)
    covers: list[tuple[int, ...]] = []

    def cover(remaining: frozenset, start_chosen: tuple[int, ...]) -> None:
        if not remaining:
            covers.append(start_chosen)
            return
        pivot = min(f for f in order if f in remaining)
        for idx, (fs, _) in enumerate(entries):
            if pivot in fs and fs <= remaining:
                cover(remaining - fs, start_chosen + (idx,))

    cover(target, ())

    members = set()
    for chosen in covers:
        pools = [entries[idx][1] for idx in chosen]
        for combo in itertools.product(*pools):
            members.add(tuple(sorted(combo, key=lambda s: s.sort_key)))
    ordered = tuple(sorted(members, key=_member_key))
    return EquivClass(FamilySpec("P", (n_vertices,)), ordered)
