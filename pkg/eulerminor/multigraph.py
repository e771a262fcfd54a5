# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.
"""
Multigraphs with loops, parallel edges and free-loops.

Edge ``e`` owns the half-edges ``2e`` (at endpoint a) and ``2e+1`` (at
endpoint b). Every operation returns a new graph; fresh vertex and edge ids
are always one past the current maximum, so results are reproducible.
"""
from collections import defaultdict
from itertools import combinations, permutations
from types import MappingProxyType
from typing import Dict, FrozenSet, Iterable, Iterator, List, Mapping, Optional, Sequence, Tuple

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components as _csgraph_components

MAX_ENUM_VERTICES = 7
MAX_ENUM_EDGES = 14


class GraphError(ValueError):
    pass


class GraphFormatError(GraphError):
    pass


class PreconditionError(GraphError):
    pass


class Multigraph:
    __slots__ = ("_vertices", "_edges", "_free_loops", "_canonical")

    def __init__(self, vertices: Iterable[int] = (), edges: Optional[Mapping[int, Tuple[int, int]]] = None, free_loops: int = 0):
        self._vertices: FrozenSet[int] = frozenset(int(v) for v in vertices)
        self._edges: Dict[int, Tuple[int, int]] = {}
        for e, (a, b) in sorted((edges or {}).items()):
            if e < 0:
                raise GraphError(f"Edge id {e} is negative")
            if a not in self._vertices or b not in self._vertices:
                raise GraphError(f"Edge {e} has an endpoint outside the vertex set: ({a}, {b})")
            self._edges[int(e)] = (int(a), int(b))
        if free_loops < 0:
            raise GraphError(f"free_loops must be non-negative, got {free_loops}")
        self._free_loops = int(free_loops)
        self._canonical = None

    @property
    def vertices(self) -> FrozenSet[int]:
        return self._vertices

    @property
    def edges(self) -> Mapping[int, Tuple[int, int]]:
        return MappingProxyType(self._edges)

    @property
    def free_loops(self) -> int:
        return self._free_loops

    def num_vertices(self) -> int:
        return len(self._vertices)

    def num_edges(self) -> int:
        return len(self._edges)

    def endpoints(self, e: int) -> Tuple[int, int]:
        if e not in self._edges:
            raise GraphError(f"Unknown edge id {e}")
        return self._edges[e]

    def is_loop(self, e: int) -> bool:
        a, b = self.endpoints(e)
        return a == b

    def other_end(self, e: int, v: int) -> int:
        a, b = self.endpoints(e)
        if v == a:
            return b
        if v == b:
            return a
        raise GraphError(f"Vertex {v} is not an endpoint of edge {e}")

    def half_edge_vertex(self, h: int) -> int:
        a, b = self.endpoints(h // 2)
        return a if h % 2 == 0 else b

    def half_edge_at(self, e: int, v: int) -> int:
        """The half-edge of a non-loop edge ``e`` that sits at ``v``."""
        a, b = self.endpoints(e)
        if v == a:
            return 2 * e
        if v == b:
            return 2 * e + 1
        raise GraphError(f"Edge {e} does not meet vertex {v}")

    def half_edges_at(self, v: int) -> List[int]:
        self._require_vertex(v)
        out = []
        for e, (a, b) in self._edges.items():
            if a == v:
                out.append(2 * e)
            if b == v:
                out.append(2 * e + 1)
        return sorted(out)

    def incident_edges(self, v: int) -> List[int]:
        self._require_vertex(v)
        return [e for e, (a, b) in self._edges.items() if a == v or b == v]

    def degree(self, v: int) -> int:
        self._require_vertex(v)
        return sum((a == v) + (b == v) for a, b in self._edges.values())

    def degrees(self) -> Dict[int, int]:
        deg = {v: 0 for v in self._vertices}
        for a, b in self._edges.values():
            deg[a] += 1
            deg[b] += 1
        return deg

    def degree_sequence(self) -> Tuple[int, ...]:
        return tuple(sorted(self.degrees().values(), reverse=True))

    def edges_between(self, u: int, w: int) -> List[int]:
        return [e for e, (a, b) in self._edges.items() if (a, b) == (u, w) or (a, b) == (w, u)]

    def multiplicity(self, u: int, w: int) -> int:
        return len(self.edges_between(u, w))

    def loops_at(self, v: int) -> List[int]:
        return [e for e, (a, b) in self._edges.items() if a == b == v]

    def neighbors(self, v: int) -> List[int]:
        self._require_vertex(v)
        out = set()
        for a, b in self._edges.values():
            if a == v:
                out.add(b)
            elif b == v:
                out.add(a)
        return sorted(out)

    def next_vertex_id(self) -> int:
        return max(self._vertices) + 1 if self._vertices else 0

    def next_edge_id(self) -> int:
        return max(self._edges) + 1 if self._edges else 0

    def is_dense(self) -> bool:
        return self._vertices == frozenset(range(len(self._vertices))) and set(self._edges) == set(range(len(self._edges)))

    def canonical_key(self):
        if self._canonical is None:
            self._canonical = _canonical(self)
        return self._canonical[0]

    def _require_vertex(self, v: int):
        if v not in self._vertices:
            raise GraphError(f"Unknown vertex id {v}")

    def __eq__(self, other) -> bool:
        if not isinstance(other, Multigraph):
            return NotImplemented
        return self._vertices == other._vertices and self._edges == other._edges and self._free_loops == other._free_loops

    def __hash__(self) -> int:
        return hash((self._vertices, tuple(sorted(self._edges.items())), self._free_loops))

    def __repr__(self) -> str:
        return f"Multigraph(n={len(self._vertices)}, m={len(self._edges)}, free_loops={self._free_loops}, edges={dict(sorted(self._edges.items()))})"


def from_edge_list(n: int, pairs: Sequence[Tuple[int, int]], free_loops: int = 0) -> Multigraph:
    return Multigraph(range(n), {e: (a, b) for e, (a, b) in enumerate(pairs)}, free_loops)


def degree(g: Multigraph, v: int) -> int:
    return g.degree(v)


def require_no_free_loops(g: Multigraph, what: str):
    if g.free_loops:
        raise PreconditionError(f"{what} is defined on graphs without free-loops (got {g.free_loops})")


def add_edge(g: Multigraph, a: int, b: int) -> Tuple[Multigraph, int]:
    e = g.next_edge_id()
    edges = dict(g.edges)
    edges[e] = (a, b)
    return Multigraph(g.vertices, edges, g.free_loops), e


def delete_edges(g: Multigraph, edge_ids: Iterable[int]) -> Multigraph:
    doomed = set(edge_ids)
    for e in doomed:
        g.endpoints(e)
    return Multigraph(g.vertices, {e: ab for e, ab in g.edges.items() if e not in doomed}, g.free_loops)


def delete_vertices(g: Multigraph, vertices: Iterable[int]) -> Multigraph:
    """Removes the vertices together with every edge touching them."""
    doomed = set(vertices)
    kept = g.vertices - doomed
    edges = {e: (a, b) for e, (a, b) in g.edges.items() if a in kept and b in kept}
    return Multigraph(kept, edges, g.free_loops)


def edge_subgraph(g: Multigraph, edge_ids: Iterable[int]) -> Multigraph:
    """The edges given with exactly their incident vertices."""
    chosen = {e: g.endpoints(e) for e in edge_ids}
    vertices = {v for ab in chosen.values() for v in ab}
    return Multigraph(vertices, chosen)


def induced_subgraph(g: Multigraph, vertices: Iterable[int]) -> Multigraph:
    keep = set(vertices)
    return Multigraph(keep, {e: (a, b) for e, (a, b) in g.edges.items() if a in keep and b in keep})


def simplify(g: Multigraph) -> Multigraph:
    """Underlying simple graph: loops dropped, each parallel class kept as its smallest edge."""
    seen = set()
    edges = {}
    for e, (a, b) in sorted(g.edges.items()):
        if a == b:
            continue
        pair = (min(a, b), max(a, b))
        if pair not in seen:
            seen.add(pair)
            edges[e] = (a, b)
    return Multigraph(g.vertices, edges)


def compact(g: Multigraph) -> Multigraph:
    """Relabels vertices and edges to dense ids, keeping their relative order."""
    vmap = {v: i for i, v in enumerate(sorted(g.vertices))}
    edges = {i: (vmap[a], vmap[b]) for i, (_, (a, b)) in enumerate(sorted(g.edges.items()))}
    return Multigraph(range(len(vmap)), edges, g.free_loops)


def relabel(g: Multigraph, vmap: Mapping[int, int]) -> Multigraph:
    edges = {e: (vmap[a], vmap[b]) for e, (a, b) in g.edges.items()}
    return Multigraph((vmap[v] for v in g.vertices), edges, g.free_loops)


def disjoint_union(g: Multigraph, h: Multigraph) -> Multigraph:
    voff, eoff = g.next_vertex_id(), g.next_edge_id()
    edges = dict(g.edges)
    for e, (a, b) in h.edges.items():
        edges[e + eoff] = (a + voff, b + voff)
    return Multigraph(set(g.vertices) | {v + voff for v in h.vertices}, edges, g.free_loops + h.free_loops)


def contract_edge(g: Multigraph, e: int) -> Multigraph:
    x, y = g.endpoints(e)
    if x == y:
        raise PreconditionError(f"Cannot contract loop {e}")
    z = g.next_vertex_id()

    def repoint(u):
        return z if u in (x, y) else u

    edges = {f: (repoint(a), repoint(b)) for f, (a, b) in g.edges.items() if f != e}
    return Multigraph((g.vertices - {x, y}) | {z}, edges, g.free_loops)


def delete_isolated_vertex(g: Multigraph, v: int) -> Multigraph:
    d = g.degree(v)
    if d != 0:
        raise PreconditionError(f"Vertex {v} is not isolated: degree {d} != 0")
    return Multigraph(g.vertices - {v}, g.edges, g.free_loops)


def subdivide_edge(g: Multigraph, e: int) -> Tuple[Multigraph, int]:
    """
    Replaces ``e = (a, b)`` by ``e = (a, p)`` and a new edge ``(p, b)`` whose id
    is ``g.next_edge_id()``. Returns the new graph and ``p``.
    """
    a, b = g.endpoints(e)
    p = g.next_vertex_id()
    n = g.next_edge_id()
    edges = dict(g.edges)
    edges[e] = (a, p)
    edges[n] = (p, b)
    return Multigraph(g.vertices | {p}, edges, g.free_loops), p


def subdivide_free_loop(g: Multigraph) -> Tuple[Multigraph, int]:
    """Turns one free-loop into a fresh vertex carrying one loop (id ``g.next_edge_id()``)."""
    if g.free_loops == 0:
        raise PreconditionError("No free-loop to subdivide")
    p = g.next_vertex_id()
    edges = dict(g.edges)
    edges[g.next_edge_id()] = (p, p)
    return Multigraph(g.vertices | {p}, edges, g.free_loops - 1), p


def merge_degree2_vertices(g: Multigraph, u: int, w: int) -> Multigraph:
    if u == w:
        raise PreconditionError("Cannot merge a vertex with itself")
    for x in (u, w):
        d = g.degree(x)
        if d != 2:
            raise PreconditionError(f"Vertex {x} has degree {d}, expected 2")
    q = g.next_vertex_id()

    def repoint(x):
        return q if x in (u, w) else x

    edges = {e: (repoint(a), repoint(b)) for e, (a, b) in g.edges.items()}
    return Multigraph((g.vertices - {u, w}) | {q}, edges, g.free_loops)


def connected_components(g: Multigraph) -> List[FrozenSet[int]]:
    """Vertex sets of the components, ordered by smallest vertex. Free-loops are not listed."""
    if not g.vertices:
        return []
    order = sorted(g.vertices)
    index = {v: i for i, v in enumerate(order)}
    rows = [index[a] for a, b in g.edges.values()]
    cols = [index[b] for a, b in g.edges.values()]
    adjacency = csr_matrix((np.ones(len(rows), dtype=np.int32), (rows, cols)), shape=(len(order), len(order)))
    count, labels = _csgraph_components(adjacency, directed=False)
    groups = defaultdict(set)
    for v, label in zip(order, labels):
        groups[int(label)].add(v)
    return sorted((frozenset(s) for s in groups.values()), key=min)


def component_count(g: Multigraph) -> int:
    return len(connected_components(g)) + g.free_loops


def is_connected(g: Multigraph) -> bool:
    return component_count(g) <= 1


# ---------------------------------------------------------------------------
# canonical form: colour refinement + individualisation with automorphism pruning
# ---------------------------------------------------------------------------

def adjacency_matrix(g: Multigraph, order: Sequence[int]) -> np.ndarray:
    """Edge multiplicities between ``order[i]`` and ``order[j]``; loops on the diagonal."""
    index = {v: i for i, v in enumerate(order)}
    A = np.zeros((len(order), len(order)), dtype=np.int64)
    for a, b in g.edges.values():
        i, j = index[a], index[b]
        if i == j:
            A[i, i] += 1
        else:
            A[i, j] += 1
            A[j, i] += 1
    return A


def _refine(A: np.ndarray, cells: List[List[int]]) -> List[List[int]]:
    while True:
        columns = [A[:, cell].sum(axis=1) for cell in cells]
        refined = []
        for cell in cells:
            if len(cell) == 1:
                refined.append(cell)
                continue
            signature = {v: tuple(int(col[v]) for col in columns) for v in cell}
            for sig in sorted(set(signature.values())):
                refined.append([v for v in cell if signature[v] == sig])
        if len(refined) == len(cells):
            return refined
        cells = refined


class _OrbitPartition:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, x: int, y: int):
        rx, ry = self.find(x), self.find(y)
        if rx != ry:
            self.parent[max(rx, ry)] = min(rx, ry)


def _canonical(g: Multigraph):
    order = sorted(g.vertices)
    n = len(order)
    if n == 0:
        return (0, g.free_loops, ()), []
    A = adjacency_matrix(g, order)
    upper = np.triu_indices(n)
    degrees = A.sum(axis=1) + np.diag(A)
    initial = {}
    for i in range(n):
        initial.setdefault((int(A[i, i]), int(degrees[i])), []).append(i)
    cells = _refine(A, [initial[k] for k in sorted(initial)])

    best = {"code": None, "perm": None}
    automorphisms: List[List[int]] = []

    def leaf(perm: List[int]):
        code = tuple(int(x) for x in A[np.ix_(perm, perm)][upper])
        if best["code"] is None or code < best["code"]:
            best["code"], best["perm"] = code, perm
        elif code == best["code"]:
            sigma = list(range(n))
            for i in range(n):
                sigma[perm[i]] = best["perm"][i]
            automorphisms.append(sigma)

    def search(partition: List[List[int]], prefix: List[int]):
        target = next((cell for cell in partition if len(cell) > 1), None)
        if target is None:
            leaf([cell[0] for cell in partition])
            return
        at = partition.index(target)
        tried: List[int] = []
        for v in target:
            if tried:
                orbits = _OrbitPartition(n)
                for sigma in automorphisms:
                    if all(sigma[p] == p for p in prefix):
                        for i in range(n):
                            orbits.union(i, sigma[i])
                if any(orbits.find(v) == orbits.find(t) for t in tried):
                    continue
            tried.append(v)
            child = partition[:at] + [[v], [u for u in target if u != v]] + partition[at + 1:]
            search(_refine(A, child), prefix + [v])

    search(cells, [])
    perm = best["perm"]
    return (n, g.free_loops, best["code"]), [order[i] for i in perm]


def canonical_form(g: Multigraph):
    return g.canonical_key()


def canonical_labeling(g: Multigraph) -> List[int]:
    """Vertices listed in canonical order: isomorphic graphs list corresponding vertices at equal positions."""
    g.canonical_key()
    return list(g._canonical[1])


def is_isomorphic(g: Multigraph, h: Multigraph) -> bool:
    return g.canonical_key() == h.canonical_key()


def find_isomorphism(g: Multigraph, h: Multigraph) -> Optional[Dict[int, int]]:
    """A vertex map from ``g`` onto ``h`` preserving multiplicities and loops, or None."""
    if not is_isomorphic(g, h):
        return None
    return dict(zip(canonical_labeling(g), canonical_labeling(h)))


def edge_map_for(g: Multigraph, h: Multigraph, vmap: Mapping[int, int]) -> Dict[int, int]:
    """Pairs the edges of ``g`` with those of ``h`` along a vertex isomorphism."""
    buckets = defaultdict(list)
    for e, (a, b) in sorted(h.edges.items()):
        buckets[frozenset((a, b))].append(e)
    emap = {}
    for e, (a, b) in sorted(g.edges.items()):
        bucket = buckets[frozenset((vmap[a], vmap[b]))]
        if not bucket:
            raise GraphError("Vertex map is not an isomorphism")
        emap[e] = bucket.pop(0)
    return emap


# ---------------------------------------------------------------------------
# enumeration oracles
# ---------------------------------------------------------------------------

def _check_enum_bounds(n_max: int, m_max: int):
    if n_max < 0 or m_max < 0:
        raise GraphError("Enumeration bounds must be non-negative")
    if n_max > MAX_ENUM_VERTICES or m_max > MAX_ENUM_EDGES:
        raise GraphError(f"Enumeration is limited to {MAX_ENUM_VERTICES} vertices and {MAX_ENUM_EDGES} edges")


def _vertex_range(n_max: int, min_vertices: Optional[int]) -> range:
    if min_vertices is not None:
        return range(min_vertices, n_max + 1)
    # the vertexless graph is only produced when nothing else is asked for
    return range(0, 1) if n_max == 0 else range(1, n_max + 1)


def enumerate_multigraphs(n_max: int, m_max: int, connected: bool = False, max_degree: Optional[int] = None, min_vertices: Optional[int] = None) -> Iterator[Multigraph]:
    """
    One representative per isomorphism class, ordered by vertex count, then edge
    count, then canonical form. Built by adding one edge at a time with
    canonical de-duplication at every level.
    """
    _check_enum_bounds(n_max, m_max)
    for n in _vertex_range(n_max, min_vertices):
        pairs = [(i, j) for i in range(n) for j in range(i, n)]
        level = {Multigraph(range(n)).canonical_key(): Multigraph(range(n))}
        for m in range(m_max + 1):
            for key in sorted(level):
                g = level[key]
                if not connected or is_connected(g):
                    yield g
            if m == m_max:
                break
            nxt = {}
            for key in sorted(level):
                g = level[key]
                deg = g.degrees()
                for a, b in pairs:
                    if max_degree is not None and (deg[a] + 1 + (a == b) > max_degree or deg[b] + 1 + (a == b) > max_degree):
                        continue
                    h, _ = add_edge(g, a, b)
                    nxt.setdefault(h.canonical_key(), h)
            level = nxt


def _vertex_cycles(n: int, max_len: int) -> List[Tuple[int, ...]]:
    cycles = [(v,) for v in range(n)]
    if max_len >= 2:
        cycles += list(combinations(range(n), 2))
    for k in range(3, min(n, max_len) + 1):
        for chosen in combinations(range(n), k):
            first, rest = chosen[0], chosen[1:]
            for middle in permutations(rest):
                if middle[0] < middle[-1]:
                    cycles.append((first,) + middle)
    return cycles


def enumerate_eulerian_multigraphs(n_max: int, m_max: int, connected: bool = False, min_vertices: Optional[int] = None) -> Iterator[Multigraph]:
    """
    Eulerian multigraphs up to isomorphism, grown by adding whole cycles (every
    Eulerian graph is an edge-disjoint union of cycles). Same ordering as
    :func:`enumerate_multigraphs`.
    """
    _check_enum_bounds(n_max, m_max)
    for n in _vertex_range(n_max, min_vertices):
        shapes = _vertex_cycles(n, m_max)
        empty = Multigraph(range(n))
        found = {empty.canonical_key(): empty}
        frontier = [empty]
        while frontier:
            nxt = []
            for g in frontier:
                for shape in shapes:
                    if g.num_edges() + len(shape) > m_max:
                        continue
                    h = g
                    ring = shape + (shape[0],) if len(shape) > 1 else shape * 2
                    for a, b in zip(ring, ring[1:]):
                        h, _ = add_edge(h, a, b)
                    key = h.canonical_key()
                    if key not in found:
                        found[key] = h
                        nxt.append(h)
            frontier = nxt
        for key in sorted(found, key=lambda k: (found[k].num_edges(), k)):
            g = found[key]
            if not connected or is_connected(g):
                yield g


# ---------------------------------------------------------------------------
# text format
# ---------------------------------------------------------------------------

def _content_lines(text: str) -> List[str]:
    lines = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append(line)
    return lines


def _ints(tokens: Sequence[str], line: str) -> List[int]:
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise GraphFormatError(f"Expected integers in line: {line!r}") from None


def parse_multigraph_lines(lines: Sequence[str]) -> Multigraph:
    if not lines or lines[0] != "multigraph":
        raise GraphFormatError("A multigraph block must start with 'multigraph'")
    if len(lines) < 2 or not lines[1].startswith("v "):
        raise GraphFormatError("Second line must be 'v <vertex-count>'")
    parts = lines[1].split()
    if len(parts) != 2:
        raise GraphFormatError(f"Malformed vertex line: {lines[1]!r}")
    (n,) = _ints(parts[1:], lines[1])
    if n < 0:
        raise GraphFormatError("Vertex count must be non-negative")
    edges: Dict[int, Tuple[int, int]] = {}
    free_loops = 0
    seen_free = False
    for line in lines[2:]:
        parts = line.split()
        if parts[0] == "e":
            if seen_free:
                raise GraphFormatError("Edge lines must precede the free-loop line")
            if len(parts) != 4:
                raise GraphFormatError(f"Malformed edge line: {line!r}")
            e, u, w = _ints(parts[1:], line)
            if e in edges:
                raise GraphFormatError(f"Duplicate edge id {e}")
            if not (0 <= u < n and 0 <= w < n):
                raise GraphFormatError(f"Edge {e} has a dangling endpoint: {line!r}")
            edges[e] = (u, w)
        elif parts[0] == "f":
            if seen_free or len(parts) != 2:
                raise GraphFormatError(f"Malformed free-loop line: {line!r}")
            (free_loops,) = _ints(parts[1:], line)
            if free_loops < 0:
                raise GraphFormatError("Free-loop count must be non-negative")
            seen_free = True
        else:
            raise GraphFormatError(f"Unexpected line in multigraph block: {line!r}")
    if set(edges) != set(range(len(edges))):
        raise GraphFormatError("Edge ids must be dense: 0..m-1")
    return Multigraph(range(n), edges, free_loops)


def parse_multigraph(text: str) -> Multigraph:
    return parse_multigraph_lines(_content_lines(text))


def split_multigraph_blocks(text: str) -> List[Multigraph]:
    graphs, block = [], []
    for line in _content_lines(text):
        if line == "multigraph" and block:
            graphs.append(parse_multigraph_lines(block))
            block = []
        block.append(line)
    if block:
        graphs.append(parse_multigraph_lines(block))
    return graphs


def format_multigraph(g: Multigraph) -> str:
    if not g.is_dense():
        g = compact(g)
    lines = ["multigraph", f"v {g.num_vertices()}"]
    lines += [f"e {e} {a} {b}" for e, (a, b) in sorted(g.edges.items())]
    if g.free_loops:
        lines.append(f"f {g.free_loops}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# fixtures
# ---------------------------------------------------------------------------

def empty_graph(n: int) -> Multigraph:
    return Multigraph(range(n))


def bouquet(n: int) -> Multigraph:
    return from_edge_list(1, [(0, 0)] * n)


def cycle_graph(n: int) -> Multigraph:
    if n < 1:
        raise GraphError("A cycle needs at least one vertex")
    if n == 1:
        return bouquet(1)
    return from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Multigraph:
    return from_edge_list(n, [(i, i + 1) for i in range(n - 1)])


def complete_graph(n: int) -> Multigraph:
    return from_edge_list(n, list(combinations(range(n), 2)))


def complete_bipartite(p: int, q: int) -> Multigraph:
    """Sides ``0..p-1`` and ``p..p+q-1``; edge ``q*i + j`` joins ``i`` and ``p+j``."""
    return from_edge_list(p + q, [(i, p + j) for i in range(p) for j in range(q)])


def octahedron() -> Multigraph:
    antipodes = ({0, 5}, {1, 3}, {2, 4})
    return from_edge_list(6, [(u, w) for u, w in combinations(range(6), 2) if {u, w} not in antipodes])
