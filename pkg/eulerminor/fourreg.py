# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.
"""
4-regular planar multigraphs: reduction to the bouquet B2 by demotion and
contraction, and the inverse construction from B2 (optionally with free-loops)
by two subdivisions and a merge of the fresh degree-2 vertices.
"""
from dataclasses import dataclass
from itertools import combinations
from typing import Dict, List, Optional, Set, Tuple

from .cycles import Demote, demotions_along, peripheral_cycles
from .eulerian import Contract, MinorOp, Trace, TraceError, apply_trace, register_op, replay
from .multigraph import (
    GraphError,
    GraphFormatError,
    Multigraph,
    PreconditionError,
    _ints,
    bouquet,
    connected_components,
    contract_edge,
    edge_map_for,
    enumerate_multigraphs,
    find_isomorphism,
    induced_subgraph,
    is_connected,
    merge_degree2_vertices,
    require_no_free_loops,
    subdivide_edge,
    subdivide_free_loop,
)
from .planarity import RotationSystem, faces, is_plane_embedding, planar_embedding
from .search_setup import SearchSetup

MAX_GENERATE_VERTICES = 6


@register_op("subdiv")
@dataclass(frozen=True)
class Subdivide(MinorOp):
    """Subdivides an edge, or turns a free-loop into a vertex with a loop when ``edge`` is None."""

    edge: Optional[int]

    def apply(self, g):
        if self.edge is None:
            return subdivide_free_loop(g)[0]
        return subdivide_edge(g, self.edge)[0]

    def to_record(self):
        return "subdiv free" if self.edge is None else f"subdiv {self.edge}"

    def relabel(self, labels):
        return self if self.edge is None else Subdivide(labels.edge(self.edge))

    @classmethod
    def from_tokens(cls, tokens):
        if len(tokens) != 1:
            raise GraphFormatError("expected: subdiv <edge-id> | subdiv free")
        if tokens[0] == "free":
            return cls(None)
        return cls(*_ints(tokens, "subdiv"))


@register_op("merge")
@dataclass(frozen=True)
class Merge(MinorOp):
    u: int
    w: int

    def apply(self, g):
        return merge_degree2_vertices(g, self.u, self.w)

    def to_record(self):
        return f"merge {self.u} {self.w}"

    def relabel(self, labels):
        return Merge(labels.vertex(self.u), labels.vertex(self.w))

    @classmethod
    def from_tokens(cls, tokens):
        if len(tokens) != 2:
            raise GraphFormatError("merge takes two vertex ids")
        return cls(*_ints(tokens, "merge"))


@dataclass(frozen=True)
class ReductionStep:
    demotion: Demote
    contraction: Contract

    @property
    def deletes_loop(self) -> bool:
        return self.demotion.h1 // 2 == self.demotion.h2 // 2


@dataclass(frozen=True)
class ConstructionStep:
    peripheral_edge: Optional[int]
    peripheral_witness: Tuple[int, ...]
    coface_edge: int
    face: Tuple[int, ...]
    merged: Tuple[int, int]


@dataclass
class Construction:
    trace: Trace
    steps: List[ConstructionStep]
    rotation: RotationSystem


def is_four_regular(g: Multigraph) -> bool:
    return all(d == 4 for d in g.degrees().values())


def _require_4rp(g: Multigraph, what: str):
    require_no_free_loops(g, what)
    if not is_connected(g):
        raise PreconditionError(f"{what} needs a connected graph")
    if not is_four_regular(g):
        raise PreconditionError(f"{what} needs a 4-regular graph")
    if planar_embedding(g) is None:
        raise PreconditionError(f"{what} needs a planar graph")


# ---------------------------------------------------------------------------
# reduction
# ---------------------------------------------------------------------------

def reduce_step(g: Multigraph) -> Tuple[Multigraph, ReductionStep]:
    """
    One reduction: demote a vertex on a peripheral cycle, then contract a
    non-loop edge at the new degree-2 vertex. Cycles through several vertices
    are tried before loops; candidates that leave the graph disconnected,
    non-4-regular or non-planar are skipped.
    """
    _require_4rp(g, "reduce_step")
    if g.num_vertices() < 2:
        raise PreconditionError("A single vertex is already the bouquet B2")
    setup = SearchSetup.get_instance()
    certificates = sorted(peripheral_cycles(g), key=lambda cert: len(cert.cycle) == 1)
    for cert in certificates:
        for demotion in demotions_along(g, cert.cycle):
            demoted = demotion.apply(g)
            v = demotion.vertex
            assert demoted.degree(v) == 2, "a demoted vertex of a 4-regular graph has degree 2"
            at_v = [e for e in sorted(demoted.incident_edges(v)) if not demoted.is_loop(e)]
            if not at_v:
                continue
            step = ReductionStep(demotion, Contract(at_v[0]))
            result = contract_edge(demoted, at_v[0])
            if is_connected(result) and is_four_regular(result) and planar_embedding(result) is not None:
                return result, step
            setup.add_log_entry(f"REDUCE: demotion at {v} along {list(cert.cycle.edges)} is not usable, trying the next one")
    raise AssertionError("a connected 4-regular planar graph always has a usable peripheral cycle")


def reduce_to_b2(g: Multigraph) -> Trace:
    _require_4rp(g, "reduce_to_b2")
    ops: List[MinorOp] = []
    cur = g
    while cur.num_vertices() > 1:
        cur, step = reduce_step(cur)
        ops += [step.demotion, step.contraction]
    return Trace(g, ops, bouquet(2))


def reduce_components(g: Multigraph) -> List[Trace]:
    """One reduction trace per component; free-loops need no reduction."""
    return [reduce_to_b2(induced_subgraph(g, comp)) for comp in connected_components(g)]


def reduction_steps(t: Trace) -> List[ReductionStep]:
    if len(t.ops) % 2:
        raise PreconditionError("A reduction trace alternates demotions and contractions")
    steps = []
    for i in range(0, len(t.ops), 2):
        demotion, contraction = t.ops[i], t.ops[i + 1]
        if not isinstance(demotion, Demote) or not isinstance(contraction, Contract):
            raise TraceError(i, "expected a demotion followed by a contraction")
        steps.append(ReductionStep(demotion, contraction))
    return steps


# ---------------------------------------------------------------------------
# construction with a maintained embedding
# ---------------------------------------------------------------------------

class _EmbeddedGraph:
    def __init__(self, graph: Multigraph, rotation: RotationSystem):
        self.graph = graph
        self.order: Dict[int, List[int]] = {v: list(ring) for v, ring in rotation.order.items()}
        self.ops: List[MinorOp] = []

    @property
    def rotation(self) -> RotationSystem:
        return RotationSystem({v: tuple(ring) for v, ring in self.order.items()})

    def subdivide(self, e: Optional[int]) -> Tuple[int, int]:
        """Returns the fresh vertex and the fresh edge."""
        g = self.graph
        n = g.next_edge_id()
        if e is None:
            self.graph, p = subdivide_free_loop(g)
            self.order[p] = [2 * n, 2 * n + 1]
        else:
            b = g.endpoints(e)[1]
            self.graph, p = subdivide_edge(g, e)
            self.order[b] = [2 * n + 1 if h == 2 * e + 1 else h for h in self.order[b]]
            self.order[p] = [2 * e + 1, 2 * n]
        self.ops.append(Subdivide(e))
        return p, n

    def _common_corner(self, u: int, w: int) -> Tuple[Optional[Tuple[int, int]], Tuple[int, ...]]:
        where = {h: (v, i) for v, ring in self.order.items() for i, h in enumerate(ring)}
        for walk in faces(self.graph, self.rotation):
            corners = {}
            for h in walk:
                v, i = where[h ^ 1]
                corners.setdefault(v, i)
            if u in corners and w in corners:
                return (corners[u], corners[w]), walk
        return None, ()

    def merge(self, u: int, w: int) -> Tuple[int, ...]:
        """Merges inside a face seen by both vertices and returns that face."""
        g = self.graph
        q = g.next_vertex_id()
        same_component = any(u in comp and w in comp for comp in connected_components(g))
        face: Tuple[int, ...] = ()
        if same_component:
            corner, face = self._common_corner(u, w)
        else:
            corner = (len(self.order[u]) - 1, len(self.order[w]) - 1)
        self.graph = merge_degree2_vertices(g, u, w)
        self.ops.append(Merge(u, w))
        if corner is None:
            SearchSetup.get_instance().add_log_entry(f"EMBEDDING: {u} and {w} share no face, re-embedding")
            self._reembed()
            return face
        i, j = corner
        ring_u, ring_w = self.order.pop(u), self.order.pop(w)
        self.order[q] = ring_u[i + 1:] + ring_u[:i + 1] + ring_w[j + 1:] + ring_w[:j + 1]
        if not is_plane_embedding(self.graph, self.rotation):
            SearchSetup.get_instance().add_log_entry(f"EMBEDDING: merge of {u} and {w} broke the embedding, re-embedding")
            self._reembed()
        return face

    def _reembed(self):
        rotation = planar_embedding(self.graph)
        if rotation is None:
            raise PreconditionError("Construction step produced a non-planar graph")
        self.order = {v: list(ring) for v, ring in rotation.order.items()}


def _pieces(before: Multigraph, e: int, n: int, anchor: int) -> Tuple[int, int]:
    """After subdividing ``e`` into ``e`` and ``n``: (piece at ``anchor``, the other piece)."""
    return (e, n) if before.endpoints(e)[0] == anchor else (n, e)


def construct(t: Trace, seeds: int = 0) -> Construction:
    """
    Inverts a reduction trace, building ``t.source`` from B2 while keeping a
    plane rotation system.

    A step that deleted a loop is undone by subdividing the co-face edge
    twice and merging the two fresh vertices, so B2 alone suffices. With
    ``seeds`` free-loops, the last ``seeds`` loop deletions of the reduction
    are undone by subdividing a free-loop instead.
    """
    steps = reduction_steps(t)
    graphs = list(replay(t))
    loop_steps = sum(step.deletes_loop for step in steps)
    if not 0 <= seeds <= loop_steps:
        raise PreconditionError(f"seeds must lie in 0..{loop_steps} for this trace, got {seeds}")
    setup = SearchSetup.get_instance()
    setup.add_log_entry(f"CONSTRUCT: starting from B2 and {seeds} free-loop(s)")
    free_loops_left = seeds
    start = bouquet(2)
    last = graphs[-1]
    vmap = find_isomorphism(last, start)
    if vmap is None:
        raise TraceError(len(t.ops), "reduction trace does not end at B2")
    emap = edge_map_for(last, start, vmap)
    seeded = Multigraph(start.vertices, start.edges, seeds)
    embedded = _EmbeddedGraph(seeded, planar_embedding(seeded))
    record: List[ConstructionStep] = []

    for index in reversed(range(len(steps))):
        step = steps[index]
        g, demoted = graphs[2 * index], graphs[2 * index + 1]
        v = step.demotion.vertex
        e_contract = step.contraction.edge
        ends = demoted.endpoints(e_contract)
        if v not in ends or demoted.degree(v) != 2:
            raise TraceError(2 * index + 1, "contraction is not at the demoted vertex")
        u = ends[1] if ends[0] == v else ends[0]
        z = demoted.next_vertex_id()
        e_other = next(e for e in demoted.incident_edges(v) if e != e_contract)

        new_emap: Dict[int, int] = {}
        witness: Tuple[int, ...] = ()
        peripheral_edge = None
        if step.deletes_loop and free_loops_left:
            free_loops_left -= 1
            coface_before = embedded.graph
            coface = emap[e_other]
            p2, n2 = embedded.subdivide(coface)
            p1, loop = embedded.subdivide(None)
            new_emap[step.demotion.h1 // 2] = loop
            new_emap[e_contract], new_emap[e_other] = _pieces(coface_before, coface, n2, vmap[z])
        elif step.deletes_loop:
            coface_before = embedded.graph
            coface = emap[e_other]
            p2, n2 = embedded.subdivide(coface)
            at_z, at_y = _pieces(coface_before, coface, n2, vmap[z])
            p1, n3 = embedded.subdivide(at_y)
            # one piece of at_y now joins p1 and p2 and becomes the loop
            loop, to_y = (at_y, n3) if set(embedded.graph.endpoints(at_y)) == {p1, p2} else (n3, at_y)
            new_emap[step.demotion.h1 // 2] = loop
            new_emap[e_contract], new_emap[e_other] = at_z, to_y
        else:
            e1, e2 = step.demotion.h1 // 2, step.demotion.h2 // 2
            fused = g.next_edge_id()
            x = g.half_edge_vertex(step.demotion.h1 ^ 1)
            x_image = vmap[z if x == u else x]
            peripheral_edge = emap[fused]
            witness = tuple(emap[fused if e == e1 else e] for e in step.demotion.witness if e != e2)
            before = embedded.graph
            p1, n1 = embedded.subdivide(peripheral_edge)
            new_emap[e1], new_emap[e2] = _pieces(before, peripheral_edge, n1, x_image)
            coface_before = embedded.graph
            coface = emap[e_other]
            p2, n2 = embedded.subdivide(coface)
            new_emap[e_contract], new_emap[e_other] = _pieces(coface_before, coface, n2, vmap[z])
        q = embedded.graph.next_vertex_id()
        face = embedded.merge(p1, p2)
        record.append(ConstructionStep(peripheral_edge, witness, coface, face, (p1, p2)))

        for e in g.edges:
            if e not in new_emap:
                new_emap[e] = emap[e]
        vmap = {x: q if x == v else vmap[z] if x == u else vmap[x] for x in g.vertices}
        emap = new_emap

    trace = Trace(seeded, embedded.ops, t.source)
    apply_trace(trace)
    return Construction(trace, record, embedded.rotation)


def construct_replay(t: Trace, seeds: int = 0) -> Multigraph:
    return apply_trace(construct(t, seeds).trace)


# ---------------------------------------------------------------------------
# generation
# ---------------------------------------------------------------------------

def _ordinary_children(g: Multigraph) -> List[Multigraph]:
    out = []
    for e1, e2 in combinations(sorted(g.edges), 2):
        h, p1 = subdivide_edge(g, e1)
        h, p2 = subdivide_edge(h, e2)
        out.append(merge_degree2_vertices(h, p1, p2))
    for e in sorted(g.edges):
        # both subdivisions on one edge: the merge hangs a looped vertex on e
        h, p1 = subdivide_edge(g, e)
        h, p2 = subdivide_edge(h, g.next_edge_id())
        out.append(merge_degree2_vertices(h, p1, p2))
    return out


def _free_loop_children(g: Multigraph) -> List[Multigraph]:
    out = []
    for e in sorted(g.edges):
        h, p2 = subdivide_edge(Multigraph(g.vertices, g.edges, g.free_loops + 1), e)
        h, p1 = subdivide_free_loop(h)
        out.append(merge_degree2_vertices(h, p1, p2))
    return out


def generate_4rp(n: int) -> List[Multigraph]:
    """
    Connected 4-regular planar multigraphs on ``n`` vertices, one per
    isomorphism class, grown from B2 by construction steps. A class that
    only a free-loop step reaches is logged as needing a free-loop seed.
    """
    if n < 1:
        raise GraphError(f"n must be positive, got {n}")
    if n > MAX_GENERATE_VERTICES:
        raise GraphError(f"Generation is limited to {MAX_GENERATE_VERTICES} vertices, got {n}")
    setup = SearchSetup.get_instance()
    level = {bouquet(2).canonical_key(): bouquet(2)}
    for size in range(2, n + 1):
        found: Dict[object, Multigraph] = {}
        for g in level.values():
            for child in _ordinary_children(g):
                found.setdefault(child.canonical_key(), child)
        ordinary: Set[object] = set(found)
        for g in level.values():
            for child in _free_loop_children(g):
                key = child.canonical_key()
                if key not in found:
                    found[key] = child
        level = {key: g for key, g in found.items() if planar_embedding(g) is not None}
        needs_seed = set(level) - ordinary
        if needs_seed:
            setup.add_log_entry(f"GENERATE: {len(needs_seed)} class(es) on {size} vertices need a free-loop seed", is_warning=True)
    return [level[key] for key in sorted(level)]


def four_regular_planar_oracle(n: int) -> List[Multigraph]:
    """The same family, read off the exhaustive multigraph enumeration."""
    family = enumerate_multigraphs(n, 2 * n, connected=True, max_degree=4, min_vertices=n)
    return [g for g in family if g.num_edges() == 2 * n and is_four_regular(g) and planar_embedding(g) is not None]
