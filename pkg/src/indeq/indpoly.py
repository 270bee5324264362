"""Independence polynomials: exact evaluator plus a brute-force counter.

The evaluator splits a graph into connected components (the polynomial
multiplies across components), collapses paths and cycles through the
two-term deletion recurrence in closed form, and otherwise pivots on a
maximum-degree vertex v:

    I(G, x) = I(G - v, x) + x * I(G - N[v], x)

Results for small non-path components are memoized under their
canonical form, so family sweeps that share subgraphs pay for each
shape once.  The brute-force counter enumerates independent sets
directly and is the module's independent ground truth.
"""

from __future__ import annotations

from .graphcore import Graph, canonical_form, is_cycle_graph, is_path_graph
from .polyalg import IntPoly

# components above this size skip the canonical-form memo; by then the
# recursion has usually collapsed everything into paths anyway
_MEMO_MAX_VERTICES = 24

_memo: dict[bytes, IntPoly] = {}

_ONE = IntPoly.one()
_path_cache: list[IntPoly] = [_ONE, IntPoly((1, 1))]
_cycle_cache: dict[int, IntPoly] = {}


def path_polynomial(n: int) -> IntPoly:
    """I(P_n, x) via the deletion recurrence; P_0 is the empty graph."""
    if n < 0:
        raise ValueError(f"path length must be >= 0, got {n}")
    while len(_path_cache) <= n:
        k = len(_path_cache)
        _path_cache.append(_path_cache[k - 1] + _path_cache[k - 2].mul_xpow(1))
    return _path_cache[n]


def cycle_polynomial(n: int) -> IntPoly:
    """I(C_n, x) for n >= 3: delete one vertex, then its closed neighborhood."""
    if n < 3:
        raise ValueError(f"cycle length must be >= 3, got {n}")
    poly = _cycle_cache.get(n)
    if poly is None:
        poly = path_polynomial(n - 1) + path_polynomial(n - 3).mul_xpow(1)
        _cycle_cache[n] = poly
    return poly


def independence_polynomial(g: Graph) -> IntPoly:
    """Exact I(G, x); coefficient k counts the independent sets of size k."""
    result = _ONE
    comps = g.connected_components()
    if len(comps) == 1:
        return _component_poly(g)
    for comp in comps:
        result = result * _component_poly(g.induced(comp))
    return result


def _component_poly(c: Graph) -> IntPoly:
    n = c.n
    if n == 0:
        return _ONE
    if n <= 2:
        return path_polynomial(n)
    if is_path_graph(c):
        return path_polynomial(n)
    if is_cycle_graph(c):
        return cycle_polynomial(n)
    key = None
    if n <= _MEMO_MAX_VERTICES:
        key = canonical_form(c)
        hit = _memo.get(key)
        if hit is not None:
            return hit
    pivot = max(range(n), key=lambda v: (c.degree(v), -v))
    poly = independence_polynomial(c.delete_vertex(pivot)) + independence_polynomial(
        c.delete_closed_neighborhood(pivot)
    ).mul_xpow(1)
    if key is not None:
        _memo[key] = poly
    return poly


def independence_equivalent(g: Graph, h: Graph) -> bool:
    """True iff the two graphs share the same independence polynomial."""
    return independence_polynomial(g) == independence_polynomial(h)


# -- brute force ------------------------------------------------------------

_BRUTE_FORCE_MAX = 40


def bruteforce_counts(g: Graph) -> tuple[int, ...]:
    """All independent-set counts by size, by direct subset enumeration."""
    if g.n > _BRUTE_FORCE_MAX:
        raise ValueError(
            f"brute-force counting is capped at {_BRUTE_FORCE_MAX} vertices, got {g.n}"
        )
    closed = [g.adj[v] | 1 << v for v in range(g.n)]
    memo: dict[int, tuple[int, ...]] = {0: (1,)}

    def counts(free: int) -> tuple[int, ...]:
        got = memo.get(free)
        if got is not None:
            return got
        v = (free & -free).bit_length() - 1
        skip = counts(free & (free - 1))
        take = counts(free & ~closed[v])
        out = list(skip) + [0] * max(0, len(take) + 1 - len(skip))
        for k, c in enumerate(take):
            out[k + 1] += c
        result = tuple(out)
        memo[free] = result
        return result

    return counts((1 << g.n) - 1)


def independence_count_bruteforce(g: Graph, k: int) -> int:
    """Number of independent vertex sets of cardinality k."""
    if k < 0:
        raise ValueError("set size must be non-negative")
    all_counts = bruteforce_counts(g)
    return all_counts[k] if k < len(all_counts) else 0


def bruteforce_polynomial(g: Graph) -> IntPoly:
    return IntPoly(bruteforce_counts(g))


def clear_memo() -> None:
    """Drop the shared component memo (mostly for benchmarking tests)."""
    _memo.clear()
