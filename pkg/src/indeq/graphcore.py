"""Finite simple graphs, the parametric family catalogue, and isomorphism tools.

Graphs are immutable: ``n`` vertices labeled 0..n-1 and a tuple of
adjacency bitmasks.  The family catalogue covers every shape the
classifier and the screening machinery work with:

  P:n           path on n vertices (P:0 is the empty graph)
  C:n           cycle, n >= 3
  D:n           cycle with one vertex expanded into a triangle: a triangle
                with a path of n-3 vertices hanging off one corner
                (D:2 and D:3 are aliases for P:2 and C:3)
  Y:a,b,c       spider: three paths of a, b, c vertices joined at a center
  E:a,b         tadpole: cycle of a+3 vertices with a path of b vertices
                attached to one cycle vertex
  A:a,b         triangle with paths of a and b vertices attached to two
                different corners
  B:a,b,c       triangle, path of a vertices to a branch vertex carrying
                two paths of b and c vertices
  F1:a,b        triangle joined by a path of a vertices to a vertex of a
                cycle of b+3 vertices
  F2:m          cycle of m+3 vertices with an apex adjacent to two
                consecutive cycle vertices
  F3:m          two triangles joined corner-to-corner by a path of m vertices
  F4:m          K4 minus an edge with a path of m vertices on a degree-2 vertex
  F5:a,b        like F3:a with an extra path of b vertices on the far triangle
  F6:a,b,c      triangle -path(a)- branch -path(b)- triangle, with a path of
                c vertices hanging off the branch vertex
  F7:m          K4 minus an edge joined by a path of m vertices to a triangle
  F8:a,b        three triangles in a chain, spaced by paths of a and b vertices
  F9:a,b,c      central branch vertex with three arms, each a path
                (a / b / c vertices) ending in a triangle
  K4e           K4 minus an edge

Whenever a spacing parameter is 0 the two anchor vertices it separates
are adjacent.  Vertex labels follow the construction order (triangle
first, then spine, then branches) so fixtures are stable.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence, Union


class Graph6Error(ValueError):
    """Malformed graph6 text; carries the byte offset of the defect."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


class Graph:
    """Immutable simple undirected graph on vertices 0..n-1."""

    __slots__ = ("n", "adj", "_canon")

    def __init__(self, n: int, adj: Sequence[int]):
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "adj", tuple(adj))
        object.__setattr__(self, "_canon", None)

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise IndexError(f"edge ({u}, {v}) out of range for {n} vertices")
            if u == v:
                raise ValueError(f"self-loop at vertex {u} is not a simple graph")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, adj)

    @classmethod
    def empty(cls, n: int = 0) -> "Graph":
        return cls(n, (0,) * n)

    # -- queries --------------------------------------------------------

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [m.bit_count() for m in self.adj]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        out = []
        for u in range(self.n):
            m = self.adj[u] >> (u + 1) << (u + 1)
            while m:
                v = (m & -m).bit_length() - 1
                out.append((u, v))
                m &= m - 1
        return out

    @property
    def edge_count(self) -> int:
        return sum(m.bit_count() for m in self.adj) // 2

    def neighbors(self, v: int) -> list[int]:
        return _bits(self.adj[v])

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"

    # -- surgery ----------------------------------------------------------

    def _check_vertex(self, v: int) -> None:
        if not (0 <= v < self.n):
            raise IndexError(f"vertex {v} out of range for {self.n} vertices")

    def subgraph_without(self, drop: Iterable[int]) -> "Graph":
        """Induced subgraph after deleting the given vertices (relabeled)."""
        drop_mask = 0
        for v in drop:
            self._check_vertex(v)
            drop_mask |= 1 << v
        keep = [v for v in range(self.n) if not (drop_mask >> v & 1)]
        pos = {v: i for i, v in enumerate(keep)}
        adj = [0] * len(keep)
        for i, v in enumerate(keep):
            m = self.adj[v] & ~drop_mask
            row = 0
            while m:
                w = (m & -m).bit_length() - 1
                row |= 1 << pos[w]
                m &= m - 1
            adj[i] = row
        return Graph(len(keep), adj)

    def delete_vertex(self, v: int) -> "Graph":
        self._check_vertex(v)
        return self.subgraph_without((v,))

    def delete_closed_neighborhood(self, v: int) -> "Graph":
        """Delete v together with all of its neighbors."""
        self._check_vertex(v)
        return self.subgraph_without(_bits(self.adj[v] | 1 << v))

    def delete_edge(self, u: int, v: int) -> "Graph":
        self._check_vertex(u)
        self._check_vertex(v)
        if not self.has_edge(u, v):
            raise ValueError(f"edge ({u}, {v}) not present")
        adj = list(self.adj)
        adj[u] &= ~(1 << v)
        adj[v] &= ~(1 << u)
        return Graph(self.n, adj)

    def delete_edge_and_open_neighborhoods(self, u: int, v: int) -> tuple["Graph", "Graph"]:
        """For an edge uv, return (G - uv, G - (N(u) union N(v))).

        Since uv is an edge, the open-neighborhood union contains both
        endpoints, so the second graph drops u and v as well.
        """
        without_edge = self.delete_edge(u, v)
        return without_edge, self.subgraph_without(_bits(self.adj[u] | self.adj[v]))

    def induced(self, vertices: Sequence[int]) -> "Graph":
        pos = {v: i for i, v in enumerate(vertices)}
        adj = [0] * len(vertices)
        for i, v in enumerate(vertices):
            row = 0
            for w in _bits(self.adj[v]):
                j = pos.get(w)
                if j is not None:
                    row |= 1 << j
            adj[i] = row
        return Graph(len(vertices), adj)

    def relabel(self, order: Sequence[int]) -> "Graph":
        """Graph whose new vertex i is the old vertex order[i]."""
        pos = [0] * self.n
        for i, v in enumerate(order):
            pos[v] = i
        adj = [0] * self.n
        for i, v in enumerate(order):
            row = 0
            for w in _bits(self.adj[v]):
                row |= 1 << pos[w]
            adj[i] = row
        return Graph(self.n, adj)

    def complement(self) -> "Graph":
        full = (1 << self.n) - 1
        return Graph(self.n, [full & ~(self.adj[v] | 1 << v) for v in range(self.n)])

    def disjoint_union(self, other: "Graph") -> "Graph":
        adj = list(self.adj) + [m << self.n for m in other.adj]
        return Graph(self.n + other.n, adj)

    # -- structure ----------------------------------------------------------

    def connected_components(self) -> list[list[int]]:
        """Vertex lists of the connected components, each sorted, in order."""
        seen = 0
        comps = []
        for v in range(self.n):
            if seen >> v & 1:
                continue
            comp = 1 << v
            frontier = comp
            while frontier:
                grow = 0
                for w in _bits(frontier):
                    grow |= self.adj[w]
                frontier = grow & ~comp
                comp |= grow
            seen |= comp
            comps.append(_bits(comp))
        return comps

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.connected_components()) == 1

    def triangle_count(self) -> int:
        total = 0
        for u, v in self.edges():
            total += (self.adj[u] & self.adj[v]).bit_count()
        return total // 3

    def degree_histogram(self) -> tuple[int, ...]:
        """hist[i] = number of vertices of degree i, up to the max degree."""
        degs = self.degrees()
        top = max(degs, default=0)
        hist = [0] * (top + 1)
        for d in degs:
            hist[d] += 1
        return tuple(hist)


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        out.append((mask & -mask).bit_length() - 1)
        mask &= mask - 1
    return out


# -- family specifications ------------------------------------------------

FAMILY_ARITY = {
    "P": 1, "C": 1, "D": 1, "Y": 3, "E": 2, "A": 2, "B": 3,
    "F1": 2, "F2": 1, "F3": 1, "F4": 1, "F5": 2, "F6": 3,
    "F7": 1, "F8": 2, "F9": 3, "K4e": 0,
}

FAMILY_ORDER = ("P", "C", "D", "Y", "E", "A", "B",
                "F1", "F2", "F3", "F4", "F5", "F6", "F7", "F8", "F9", "K4e")

# minimum allowed value per parameter slot
_PARAM_FLOORS = {
    "P": (0,), "C": (3,), "D": (2,), "Y": (1, 1, 1), "E": (1, 1), "A": (1, 1),
    "B": (0, 1, 1), "F1": (0, 1), "F2": (1,), "F3": (0,), "F4": (0,),
    "F5": (0, 1), "F6": (0, 0, 1), "F7": (0,), "F8": (0, 0), "F9": (0, 0, 0),
    "K4e": (),
}


@dataclass(frozen=True)
class FamilySpec:
    """Symbolic descriptor of one parametric graph, e.g. Y:3,2,1."""

    family: str
    params: tuple[int, ...] = ()

    def __post_init__(self):
        if self.family not in FAMILY_ARITY:
            raise ValueError(f"unknown family {self.family!r}")
        object.__setattr__(self, "params", tuple(int(p) for p in self.params))
        arity = FAMILY_ARITY[self.family]
        if len(self.params) != arity:
            raise ValueError(
                f"{self.family} takes {arity} parameter(s), got {len(self.params)}"
            )
        for slot, (p, floor) in enumerate(zip(self.params, _PARAM_FLOORS[self.family])):
            if p < floor:
                raise ValueError(
                    f"{self.family} parameter {slot + 1} must be >= {floor}, got {p}"
                )

    def __str__(self) -> str:
        if not self.params:
            return self.family
        return f"{self.family}:{','.join(map(str, self.params))}"

    @property
    def sort_key(self) -> tuple:
        return (FAMILY_ORDER.index(self.family), self.params)


#: One FamilySpec, or any iterable of them meaning a disjoint union.
SpecLike = Union[FamilySpec, Sequence[FamilySpec]]


def spec(text_family: str, *params: int) -> FamilySpec:
    return FamilySpec(text_family, tuple(params))


def _chain(edges: list, anchor: int, count: int, nxt: int) -> tuple[int, int]:
    """Attach a path of `count` new vertices to `anchor`; return (end, next id)."""
    last = anchor
    for _ in range(count):
        edges.append((last, nxt))
        last = nxt
        nxt += 1
    return last, nxt


def _triangle(edges: list, anchor: Optional[int], nxt: int) -> tuple[int, int]:
    """Add a triangle; if anchor is given, one corner is glued onto it.

    Returns (corner vertex that carries further attachments, next id).
    """
    if anchor is None:
        a, b, c = nxt, nxt + 1, nxt + 2
        edges.extend([(a, b), (a, c), (b, c)])
        return c, nxt + 3
    b, c = nxt, nxt + 1
    edges.extend([(anchor, b), (anchor, c), (b, c)])
    return anchor, nxt + 2


def build(specs: SpecLike) -> Graph:
    """Construct the graph described by a FamilySpec or a disjoint union of them."""
    if isinstance(specs, FamilySpec):
        specs = (specs,)
    g = Graph.empty(0)
    for s in specs:
        g = g.disjoint_union(_build_one(s))
    return g


def _build_one(s: FamilySpec) -> Graph:
    fam, p = s.family, s.params
    edges: list[tuple[int, int]] = []

    if fam == "P":
        n = p[0]
        return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])

    if fam == "C":
        n = p[0]
        return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])

    if fam == "D":
        n = p[0]
        if n == 2:
            return _build_one(FamilySpec("P", (2,)))
        if n == 3:
            return _build_one(FamilySpec("C", (3,)))
        edges = [(0, 1), (0, 2), (1, 2)]
        _chain(edges, 2, n - 3, 3)
        return Graph.from_edges(n, edges)

    if fam == "Y":
        a, b, c = p
        nxt = 1
        for leg in (a, b, c):
            _, nxt = _chain(edges, 0, leg, nxt)
        return Graph.from_edges(nxt, edges)

    if fam == "E":
        a, b = p
        ring = a + 3
        edges = [(i, (i + 1) % ring) for i in range(ring)]
        _, nxt = _chain(edges, 0, b, ring)
        return Graph.from_edges(nxt, edges)

    if fam == "A":
        a, b = p
        edges = [(0, 1), (0, 2), (1, 2)]
        _, nxt = _chain(edges, 1, a, 3)
        _, nxt = _chain(edges, 2, b, nxt)
        return Graph.from_edges(nxt, edges)

    if fam == "B":
        a, b, c = p
        edges = [(0, 1), (0, 2), (1, 2)]
        end, nxt = _chain(edges, 2, a, 3)
        u = nxt
        edges.append((end, u))
        nxt += 1
        _, nxt = _chain(edges, u, b, nxt)
        _, nxt = _chain(edges, u, c, nxt)
        return Graph.from_edges(nxt, edges)

    if fam == "F1":
        a, b = p
        edges = [(0, 1), (0, 2), (1, 2)]
        end, nxt = _chain(edges, 2, a, 3)
        u = nxt
        edges.append((end, u))
        nxt += 1
        # cycle of length b+3 through u
        ring_rest, nxt = _chain(edges, u, b + 2, nxt)
        edges.append((ring_rest, u))
        return Graph.from_edges(nxt, edges)

    if fam == "F2":
        m = p[0]
        ring = m + 3
        edges = [(i, (i + 1) % ring) for i in range(ring)]
        apex = ring
        edges.extend([(apex, 0), (apex, 1)])
        return Graph.from_edges(ring + 1, edges)

    if fam == "F3":
        m = p[0]
        edges = [(0, 1), (0, 2), (1, 2)]
        end, nxt = _chain(edges, 2, m, 3)
        apex = nxt
        edges.append((end, apex))
        _, nxt = _triangle(edges, apex, nxt + 1)
        return Graph.from_edges(nxt, edges)

    if fam == "F4":
        m = p[0]
        edges = [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]
        _, nxt = _chain(edges, 3, m, 4)
        return Graph.from_edges(nxt, edges)

    if fam == "F5":
        a, b = p
        edges = [(0, 1), (0, 2), (1, 2)]
        end, nxt = _chain(edges, 2, a, 3)
        u = nxt
        edges.append((end, u))
        x, y = nxt + 1, nxt + 2
        edges.extend([(u, x), (u, y), (x, y)])
        _, nxt = _chain(edges, x, b, nxt + 3)
        return Graph.from_edges(nxt, edges)

    if fam == "F6":
        a, b, c = p
        edges = [(0, 1), (0, 2), (1, 2)]
        end, nxt = _chain(edges, 2, a, 3)
        u = nxt
        edges.append((end, u))
        nxt += 1
        end, nxt = _chain(edges, u, b, nxt)
        w = nxt
        edges.append((end, w))
        _, nxt = _triangle(edges, w, nxt + 1)
        _, nxt = _chain(edges, u, c, nxt)
        return Graph.from_edges(nxt, edges)

    if fam == "F7":
        m = p[0]
        edges = [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]
        end, nxt = _chain(edges, 3, m, 4)
        u = nxt
        edges.append((end, u))
        _, nxt = _triangle(edges, u, nxt + 1)
        return Graph.from_edges(nxt, edges)

    if fam == "F8":
        a, b = p
        edges = [(0, 1), (0, 2), (1, 2)]
        end, nxt = _chain(edges, 2, a, 3)
        w = nxt
        edges.append((end, w))
        x, y = nxt + 1, nxt + 2  # middle triangle is (w, x, y)
        edges.extend([(w, x), (w, y), (x, y)])
        end, nxt = _chain(edges, x, b, nxt + 3)
        u2 = nxt
        edges.append((end, u2))
        _, nxt = _triangle(edges, u2, nxt + 1)
        return Graph.from_edges(nxt, edges)

    if fam == "F9":
        a, b, c = p
        edges = [(0, 1), (0, 2), (1, 2)]
        end, nxt = _chain(edges, 2, a, 3)
        w = nxt
        edges.append((end, w))
        nxt += 1
        end, nxt = _chain(edges, w, b, nxt)
        u = nxt
        edges.append((end, u))
        _, nxt = _triangle(edges, u, nxt + 1)
        end, nxt = _chain(edges, w, c, nxt)
        wp = nxt
        edges.append((end, wp))
        _, nxt = _triangle(edges, wp, nxt + 1)
        return Graph.from_edges(nxt, edges)

    if fam == "K4e":
        return Graph.from_edges(4, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)])

    raise ValueError(f"unknown family {fam!r}")


# -- shape recognition -------------------------------------------------------

def is_path_graph(g: Graph) -> bool:
    """True for P_n, n >= 1 (assumes nothing; checks connectivity)."""
    if g.n == 0:
        return False
    if g.n == 1:
        return True
    hist = g.degree_histogram()
    if len(hist) > 3 or g.edge_count != g.n - 1:
        return False
    return hist[1] == 2 and (len(hist) < 3 or hist[2] == g.n - 2) and g.is_connected()


def is_cycle_graph(g: Graph) -> bool:
    if g.n < 3:
        return False
    return all(m.bit_count() == 2 for m in g.adj) and g.is_connected()


def recognize(g: Graph) -> Optional[FamilySpec]:
    """Match a connected graph against the P/C/D/K4e/Y/E/A/B catalogue shapes.

    Returns a FamilySpec whose build() is isomorphic to g, with symmetric
    parameters sorted descending, or None if no catalogue shape fits.
    The F families are not recognized (they never appear in equivalence
    classes).
    """
    n = g.n
    if n == 0 or not g.is_connected():
        return None
    if is_path_graph(g):
        return FamilySpec("P", (n,))
    if is_cycle_graph(g):
        return FamilySpec("C", (n,))
    degs = sorted(g.degrees())
    e = g.edge_count
    if n == 4 and e == 5 and degs == [2, 2, 3, 3]:
        return FamilySpec("K4e", ())
    if max(degs) != 3:
        return None
    tri = g.triangle_count()
    if e == n - 1:
        # tree: spider with three legs
        if degs.count(3) == 1 and degs.count(1) == 3:
            center = next(v for v in range(n) if g.degree(v) == 3)
            legs = sorted((_arm_length(g, center, w) for w in g.neighbors(center)), reverse=True)
            return FamilySpec("Y", tuple(legs))
        return None
    if e != n:
        return None
    # unicyclic shapes
    cycle = _unique_cycle(g)
    deg3 = [v for v in range(n) if g.degree(v) == 3]
    if tri == 1 and len(cycle) == 3:
        if len(deg3) == 1 and degs.count(1) == 1:
            return FamilySpec("D", (n,))
        if len(deg3) == 2 and degs.count(1) == 2:
            on_cycle = [v for v in deg3 if v in cycle]
            if len(on_cycle) == 2:
                u, w = on_cycle
                a = sorted((_arm_length(g, u, _arm_start(g, u, cycle)),
                            _arm_length(g, w, _arm_start(g, w, cycle))), reverse=True)
                return FamilySpec("A", tuple(a))
            if len(on_cycle) == 1:
                v = on_cycle[0]
                u = next(x for x in deg3 if x != v)
                spine = _dist(g, v, u, avoid=set(cycle) - {v}) - 1
                tails = sorted(
                    (_arm_length(g, u, w) for w in g.neighbors(u)
                     if _away_from(g, u, w, v)),
                    reverse=True,
                )
                if len(tails) == 2:
                    return FamilySpec("B", (spine, tails[0], tails[1]))
        return None
    if tri == 0 and len(deg3) == 1 and degs.count(1) == 1:
        v = deg3[0]
        if v in cycle:
            tail_start = next(w for w in g.neighbors(v) if w not in cycle)
            return FamilySpec("E", (len(cycle) - 3, _arm_length(g, v, tail_start)))
    return None


def _arm_length(g: Graph, joint: int, first: int) -> int:
    """Length of the pendant path starting at `first`, away from `joint`."""
    count = 0
    prev, cur = joint, first
    while True:
        count += 1
        nbrs = [w for w in g.neighbors(cur) if w != prev]
        if not nbrs:
            return count
        if len(nbrs) != 1:
            raise ValueError("arm is not a pendant path")
        prev, cur = cur, nbrs[0]


def _arm_start(g: Graph, v: int, cycle: list[int]) -> int:
    return next(w for w in g.neighbors(v) if w not in cycle)


def _away_from(g: Graph, u: int, w: int, v: int) -> bool:
    """True if the u->w arm does not head toward v (simple pendant test)."""
    prev, cur = u, w
    while True:
        if cur == v:
            return False
        nbrs = [x for x in g.neighbors(cur) if x != prev]
        if len(nbrs) != 1:
            return not nbrs
        prev, cur = cur, nbrs[0]


def _dist(g: Graph, a: int, b: int, avoid: set[int] = frozenset()) -> int:
    frontier = {a}
    seen = {a} | set(avoid)
    d = 0
    while frontier:
        if b in frontier:
            return d
        nxt = set()
        for v in frontier:
            for w in g.neighbors(v):
                if w not in seen:
                    seen.add(w)
                    nxt.add(w)
        frontier = nxt
        d += 1
    raise ValueError("vertices not connected around the avoided set")


def _unique_cycle(g: Graph) -> list[int]:
    """Vertices of the unique cycle of a connected unicyclic graph."""
    deg = g.degrees()
    alive = set(range(g.n))
    leaves = [v for v in alive if deg[v] == 1]
    while leaves:
        v = leaves.pop()
        alive.discard(v)
        for w in g.neighbors(v):
            if w in alive:
                deg[w] -= 1
                if deg[w] == 1:
                    leaves.append(w)
    return sorted(alive)


# -- canonical forms ---------------------------------------------------------

def canonical_form(g: Graph) -> bytes:
    """Isomorphism-invariant byte identifier: equal iff the graphs are isomorphic.

    The bytes are the graph6 encoding of a canonical relabeling, so they
    decode back to a representative of the class.
    """
    cached = g._canon
    if cached is not None:
        return cached
    if g.n == 0:
        result = graph6_write(g).encode("ascii")
    else:
        # dense graphs canonicalize faster through the complement; the
        # ordering found there is just as canonical for the original
        maxe = g.n * (g.n - 1) // 2
        target = g.complement() if 2 * g.edge_count > maxe else g
        order = _canonical_order(target)
        result = graph6_write(g.relabel(order)).encode("ascii")
    object.__setattr__(g, "_canon", result)
    return result


def canonical_graph(g: Graph) -> Graph:
    return graph6_read(canonical_form(g).decode("ascii"))


def _refine(adj: Sequence[int], cells: list[list[int]]) -> list[list[int]]:
    """Equitable refinement of an ordered partition (stable, iso-invariant)."""
    cells = [list(c) for c in cells]
    changed = True
    while changed:
        changed = False
        masks = [_mask(c) for c in cells]
        for ci, cell in enumerate(cells):
            if len(cell) == 1:
                continue
            sigs: dict[tuple, list[int]] = {}
            for v in cell:
                key = tuple((adj[v] & m).bit_count() for m in masks)
                sigs.setdefault(key, []).append(v)
            if len(sigs) > 1:
                parts = [sigs[k] for k in sorted(sigs)]
                cells[ci:ci + 1] = parts
                changed = True
                break
    return cells


def _mask(vs: Iterable[int]) -> int:
    m = 0
    for v in vs:
        m |= 1 << v
    return m


def _order_key(adj: Sequence[int], order: Sequence[int]) -> tuple[int, ...]:
    """Row-by-row adjacency key of an ordering; smaller key = more canonical."""
    key = []
    for k in range(1, len(order)):
        row = 0
        av = adj[order[k]]
        for i in range(k):
            row = row << 1 | (av >> order[i] & 1)
        key.append(row)
    return tuple(key)


def _canonical_order(g: Graph) -> list[int]:
    n, adj = g.n, g.adj
    by_degree: dict[int, list[int]] = {}
    for v in range(n):
        by_degree.setdefault(adj[v].bit_count(), []).append(v)
    start = [by_degree[d] for d in sorted(by_degree, reverse=True)]

    best_key: list = [None]
    best_order: list = [None]
    autos: list[tuple[int, ...]] = []

    def leaf(order: list[int]) -> None:
        key = _order_key(adj, order)
        if best_key[0] is None or key < best_key[0]:
            best_key[0] = key
            best_order[0] = list(order)
        elif key == best_key[0] and len(autos) < 64:
            ref = best_order[0]
            perm = [0] * n
            for i in range(n):
                perm[order[i]] = ref[i]
            autos.append(tuple(perm))

    def search(cells: list[list[int]]) -> None:
        cells = _refine(adj, cells)
        prefix: list[int] = []
        target = None
        for cell in cells:
            if len(cell) == 1 and target is None:
                prefix.append(cell[0])
            else:
                target = target or cell
        if best_key[0] is not None and len(prefix) > 1:
            pk = _order_key(adj, prefix)
            bk = best_key[0][: len(pk)]
            if pk > bk:
                return
        if target is None:
            leaf(prefix)
            return
        ti = cells.index(target)
        explored: list[int] = []
        fixed = set(prefix)
        for v in target:
            if any(
                all(a[x] == x for x in fixed) and a[u] == v
                for a in autos
                for u in explored
            ):
                continue
            child = cells[:ti] + [[v], [w for w in target if w != v]] + cells[ti + 1:]
            search(child)
            explored.append(v)

    search(start)
    return best_order[0]


# -- graph6 (header-less) ----------------------------------------------------

def graph6_write(g: Graph) -> str:
    n = g.n
    if n <= 62:
        head = [n + 63]
    elif n <= 258047:
        head = [126, (n >> 12) + 63, (n >> 6 & 63) + 63, (n & 63) + 63]
    else:
        head = [126, 126] + [((n >> s) & 63) + 63 for s in range(30, -1, -6)]
    bits = []
    for j in range(1, n):
        col = g.adj[j]
        for i in range(j):
            bits.append(col >> i & 1)
    data = []
    for k in range(0, len(bits), 6):
        group = bits[k:k + 6] + [0] * (6 - len(bits[k:k + 6]))
        val = 0
        for b in group:
            val = val << 1 | b
        data.append(val + 63)
    return bytes(head + data).decode("ascii")


def graph6_read(text: str) -> Graph:
    raw = text.strip().encode("ascii", errors="replace")
    if not raw:
        raise Graph6Error("empty graph6 string", 0)
    for off, byte in enumerate(raw):
        if not (63 <= byte <= 126):
            raise Graph6Error(f"invalid graph6 byte 0x{byte:02x}", off)
    pos = 0
    if raw[0] != 126:
        n = raw[0] - 63
        pos = 1
    elif len(raw) >= 2 and raw[1] != 126:
        if len(raw) < 4:
            raise Graph6Error("truncated 18-bit size header", len(raw))
        n = 0
        for byte in raw[1:4]:
            n = n << 6 | (byte - 63)
        pos = 4
        if n < 63:
            raise Graph6Error("oversized length header for small n", 0)
    else:
        if len(raw) < 8:
            raise Graph6Error("truncated 36-bit size header", len(raw))
        n = 0
        for byte in raw[2:8]:
            n = n << 6 | (byte - 63)
        pos = 8
        if n < 258048:
            raise Graph6Error("oversized length header for small n", 0)
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    if len(raw) - pos != need:
        raise Graph6Error(
            f"expected {need} data byte(s) for n={n}, got {len(raw) - pos}", pos
        )
    adj = [0] * n
    bit_index = 0
    for k in range(need):
        val = raw[pos + k] - 63
        for b in range(5, -1, -1):
            if bit_index >= nbits:
                if val >> b & 1:
                    raise Graph6Error("nonzero padding bits", pos + k)
                continue
            if val >> b & 1:
                i, j = _pair_from_index(bit_index)
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            bit_index += 1
    return Graph(n, adj)


def _pair_from_index(idx: int) -> tuple[int, int]:
    # column-major upper triangle: column j holds j bits (rows 0..j-1)
    j = 1
    while idx >= j:
        idx -= j
        j += 1
    return idx, j
