# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.
from dataclasses import dataclass
from itertools import combinations, product
from typing import Iterator, List, Optional, Sequence, Tuple, Union

from .eulerian import Cycle, MinorOp, register_op
from .multigraph import (
    GraphError,
    GraphFormatError,
    Multigraph,
    PreconditionError,
    _ints,
    component_count,
    connected_components,
    delete_edges,
    delete_vertices,
    induced_subgraph,
)
from .search_setup import SearchSetup

STRATEGIES = ("direct", "descent")


@dataclass(frozen=True)
class PeripheralCertificate:
    cycle: Cycle
    chord_check: Tuple[Tuple[int, int], ...]
    component_counts: Tuple[int, int]


def _as_cycle(g: Multigraph, c: Union[Cycle, Sequence[int]]) -> Cycle:
    edges = c.edges if isinstance(c, Cycle) else c
    return Cycle.from_edges(g, edges)


def nonadjacent_pairs(c: Cycle) -> List[Tuple[int, int]]:
    k = len(c.vertices)
    pairs = []
    for i, j in combinations(range(k), 2):
        if j - i not in (1, k - 1):
            pairs.append(tuple(sorted((c.vertices[i], c.vertices[j]))))
    return pairs


def chords(g: Multigraph, c: Cycle) -> List[int]:
    pairs = set(nonadjacent_pairs(c))
    return [e for e, (a, b) in sorted(g.edges.items()) if (min(a, b), max(a, b)) in pairs]


def is_induced(g: Multigraph, c) -> bool:
    return not chords(g, _as_cycle(g, c))


def is_non_separating(g: Multigraph, c) -> bool:
    c = _as_cycle(g, c)
    return component_count(delete_vertices(g, c.vertices)) <= component_count(g)


def is_peripheral(g: Multigraph, c) -> Optional[PeripheralCertificate]:
    c = _as_cycle(g, c)
    if chords(g, c):
        return None
    before = component_count(g)
    after = component_count(delete_vertices(g, c.vertices))
    if after > before:
        return None
    return PeripheralCertificate(c, tuple(nonadjacent_pairs(c)), (before, after))


def enumerate_cycles(g: Multigraph) -> Iterator[Cycle]:
    """
    Every cycle once: loops, then parallel pairs, then longer cycles read from
    their smallest vertex in the direction of the smaller second vertex, with
    one cycle per choice among parallel edges.
    """
    bound = SearchSetup.get_instance().get("max_cycle_vertices")
    if g.num_vertices() > bound:
        raise GraphError(f"Cycle enumeration is limited to {bound} vertices, got {g.num_vertices()}")
    between = {}
    for e, (a, b) in sorted(g.edges.items()):
        if a == b:
            yield Cycle((e,), (a,))
        else:
            between.setdefault((min(a, b), max(a, b)), []).append(e)
    for (a, b), parallel in sorted(between.items()):
        for e1, e2 in combinations(parallel, 2):
            yield Cycle((e1, e2), (g.edges[e1][0], g.edges[e1][1]))

    adjacent = {v: sorted(w for (x, y) in between for w in (x, y) if v in (x, y) and w != v) for v in g.vertices}
    for s in sorted(g.vertices):
        stack = [(s, [s])]
        while stack:
            cur, path = stack.pop()
            for w in reversed(adjacent[cur]):
                if w == s and len(path) >= 3 and path[1] < path[-1]:
                    ring = path + [s]
                    choices = [between[(min(x, y), max(x, y))] for x, y in zip(ring, ring[1:])]
                    for edges in product(*choices):
                        yield Cycle(tuple(edges), tuple(path))
                elif w > s and w not in path:
                    stack.append((w, path + [w]))


def peripheral_cycles(g: Multigraph) -> Iterator[PeripheralCertificate]:
    for c in enumerate_cycles(g):
        cert = is_peripheral(g, c)
        if cert is not None:
            yield cert


def _shortcut_chords(g: Multigraph, c: Cycle) -> Optional[Cycle]:
    """Shortens a non-separating cycle across its chords until it is induced."""
    while True:
        found = chords(g, c)
        if not found:
            return c
        chord = found[0]
        x, y = g.edges[chord]
        i, j = sorted((c.vertices.index(x), c.vertices.index(y)))
        k = len(c)
        # arc i..j along the cycle, and the arc j..i around the other side
        inner = list(c.edges[i:j])
        outer = list(c.edges[j:]) + list(c.edges[:i])
        candidates = sorted((inner + [chord], outer + [chord]), key=len)
        nxt = None
        for edges in candidates:
            cycle = Cycle.from_edges(g, edges)
            if is_non_separating(g, cycle):
                nxt = cycle
                break
        if nxt is None or len(nxt) >= k:
            return None
        c = nxt


def _shortest_cycle(g: Multigraph) -> Optional[Cycle]:
    best = None
    for c in enumerate_cycles(g):
        if best is None or len(c) < len(best):
            best = c
            if len(best) == 1:
                break
    return best


def _descend(g: Multigraph) -> Optional[Cycle]:
    c = _shortest_cycle(g)
    if c is None:
        return None
    # a shortest cycle has no chord
    if is_non_separating(g, c):
        return c
    host = delete_edges(g, c.edges)
    current = _descend(host)
    if current is None:
        return None
    while not is_non_separating(g, current):
        cut_off = connected_components(delete_vertices(g, current.vertices))
        inside = None
        for comp in connected_components(host):
            if any(host.degree(u) for u in comp) and any(comp <= piece for piece in cut_off):
                inside = comp
                break
        if inside is None:
            return None
        host = induced_subgraph(host, inside)
        current = _descend(host)
        if current is None:
            return None
        host = delete_edges(host, current.edges)
    return _shortcut_chords(g, current)


def find_peripheral_cycle(g: Multigraph, strategy: str = "direct") -> Optional[PeripheralCertificate]:
    """
    Some peripheral cycle of ``g`` or None.

    ``direct`` filters :func:`enumerate_cycles`; ``descent`` follows the
    inductive argument (shortest cycle, recurse on the graph without its
    edges, walk into cut-off components, shortcut chords) and falls back to
    ``direct`` whenever the descent does not end on a peripheral cycle.
    """
    if strategy not in STRATEGIES:
        raise ValueError(f"Unknown strategy {strategy!r}, expected one of {STRATEGIES}")
    if strategy == "descent":
        cycle = _descend(g)
        if cycle is not None:
            cert = is_peripheral(g, cycle)
            if cert is not None:
                return cert
        SearchSetup.get_instance().add_log_entry("PERIPHERAL: descent did not settle, filtering all cycles instead")
    return next(peripheral_cycles(g), None)


def contains_generalized_bouquet(g: Multigraph, n: int) -> bool:
    if n < 3:
        raise GraphError(f"Generalized bouquets are considered for n >= 3, got {n}")
    all_cycles = list(enumerate_cycles(g))
    for v in sorted(g.vertices):
        if g.degree(v) < 2 * n:
            continue
        through = [c for c in all_cycles if v in c.vertices]

        def extend(chosen: List[Cycle], start: int) -> bool:
            if len(chosen) == n:
                return True
            for i in range(start, len(through)):
                c = through[i]
                if all(c.vertex_set() & other.vertex_set() == {v} for other in chosen):
                    if extend(chosen + [c], i + 1):
                        return True
            return False

        if extend([], 0):
            return True
    return False


def admissible_demotion(g: Multigraph, v: int, h1: int, h2: int, witness) -> Multigraph:
    """
    Deletes the half-edges ``h1`` and ``h2`` at ``v`` and fuses their twins
    into a new edge ``(vertex of twin(h1), vertex of twin(h2))`` with id
    ``g.next_edge_id()``. When ``h1`` and ``h2`` are the two halves of one loop
    the loop is simply deleted.
    """
    if h1 == h2:
        raise PreconditionError("Demotion needs two distinct half-edges")
    for h in (h1, h2):
        if h < 0 or h // 2 not in g.edges:
            raise PreconditionError(f"Unknown half-edge {h}")
        if g.half_edge_vertex(h) != v:
            raise PreconditionError(f"Half-edge {h} does not sit at vertex {v}")
    e1, e2 = h1 // 2, h2 // 2
    cycle = _as_cycle(g, witness)
    if is_peripheral(g, cycle) is None:
        raise PreconditionError(f"Witness {list(cycle.edges)} is not peripheral")
    if e1 == e2:
        if cycle.edges != (e1,):
            raise PreconditionError(f"A loop demotion needs the loop {e1} itself as witness")
        return delete_edges(g, [e1])
    if g.is_loop(e1) and g.is_loop(e2):
        raise PreconditionError("No cycle passes through two loops, so fusing them is never admissible")
    if v not in cycle.vertices or set(cycle.edges_at(v)) != {e1, e2}:
        raise PreconditionError(f"Witness {list(cycle.edges)} does not pass through {v} along edges {e1} and {e2}")
    a = g.half_edge_vertex(h1 ^ 1)
    b = g.half_edge_vertex(h2 ^ 1)
    fused = g.next_edge_id()
    edges = {e: ab for e, ab in g.edges.items() if e not in (e1, e2)}
    edges[fused] = (a, b)
    return Multigraph(g.vertices, edges, g.free_loops)


@register_op("demote")
@dataclass(frozen=True)
class Demote(MinorOp):
    vertex: int
    h1: int
    h2: int
    witness: Tuple[int, ...]

    def apply(self, g):
        return admissible_demotion(g, self.vertex, self.h1, self.h2, self.witness)

    def to_record(self):
        return f"demote {self.vertex} {self.h1} {self.h2} witness " + " ".join(str(e) for e in self.witness)

    def relabel(self, labels):
        return Demote(labels.vertex(self.vertex), labels.half_edge(self.h1), labels.half_edge(self.h2), tuple(labels.edge(e) for e in self.witness))

    @classmethod
    def from_tokens(cls, tokens):
        if len(tokens) < 5 or tokens[3] != "witness":
            raise GraphFormatError("expected: demote <v> <h1> <h2> witness <edge-id>...")
        v, h1, h2 = _ints(tokens[:3], "demote")
        return cls(v, h1, h2, tuple(_ints(tokens[4:], "demote")))


MinorStarOp = MinorOp


def demotions_along(g: Multigraph, c: Cycle) -> Iterator[Demote]:
    """One demotion per vertex of a peripheral cycle ``c``."""
    if len(c) == 1:
        e = c.edges[0]
        yield Demote(c.vertices[0], 2 * e, 2 * e + 1, c.edges)
        return
    for i, v in enumerate(c.vertices):
        entering, leaving = c.edges[i - 1], c.edges[i]
        yield Demote(v, g.half_edge_at(entering, v), g.half_edge_at(leaving, v), c.edges)


def demotion_candidates(g: Multigraph) -> Iterator[Demote]:
    for cert in peripheral_cycles(g):
        yield from demotions_along(g, cert.cycle)

