# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.
"""
Certified obstruction extraction.

Every extractor returns a :class:`~eulerminor.eulerian.Trace` from the input
graph to one of the named obstructions, and every trace is replayed with
:func:`~eulerminor.eulerian.apply_trace` before it is handed out.
"""
from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Callable, Dict, Iterator, List, Optional, Sequence, Tuple, Union

from .cycles import Demote, demotion_candidates
from .eulerian import (
    Contract,
    DeleteCycle,
    DeleteIsolatedVertex,
    MinorOp,
    Trace,
    TraceError,
    apply_trace,
    breadth_first_search,
    check_search_bounds,
    cycle_decomposition,
    eulerian_subgraph_as_minor,
    find_cycle,
    is_eulerian,
    k2_obstruction,
    minor_successors,
    odd_vertex_count,
    transplant_trace,
)
from .multigraph import (
    GraphError,
    Multigraph,
    PreconditionError,
    complete_bipartite,
    complete_graph,
    connected_components,
    contract_edge,
    delete_edges,
    edge_subgraph,
    from_edge_list,
    induced_subgraph,
    is_isomorphic,
    require_no_free_loops,
    simplify,
)
from .planarity import KuratowskiWitness, RotationSystem, bipartition, is_outerplanar, is_planar, validate_kuratowski
from .search_setup import SearchSetup

REMAINDER_CLASSES = ((1, 1, 1, 1, 1, 1), (1, 1, 1, 1, 1, 3), (1, 1, 1, 1, 3, 3), (1, 1, 1, 1, 1, 5))

K33_SIDES = ((0, 1, 2), (3, 4, 5))


@dataclass(frozen=True)
class ObstructionGraph:
    name: str
    graph: Multigraph


def _k33p() -> Multigraph:
    # K3,3 with its perfect matching a_i b_i doubled
    pairs = [(i, 3 + j) for i in range(3) for j in range(3)]
    return from_edge_list(6, pairs + [(0, 3), (1, 4), (2, 5)])


def _k23p() -> Multigraph:
    # parts {0, 1} and {2, 3, 4}, plus the edge joining the two degree-3 vertices
    return from_edge_list(5, [(i, 2 + j) for i in range(2) for j in range(3)] + [(0, 1)])


def _k4p() -> Multigraph:
    return from_edge_list(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (0, 1), (2, 3)])


OBSTRUCTIONS: Dict[str, Callable[[], Multigraph]] = {
    "K2": lambda: complete_graph(2),
    "K5": lambda: complete_graph(5),
    "K33p": _k33p,
    "K23p": _k23p,
    "K4p": _k4p,
}


def make_obstruction(name: str) -> ObstructionGraph:
    if name not in OBSTRUCTIONS:
        raise GraphError(f"Unknown obstruction {name!r}, expected one of {sorted(OBSTRUCTIONS)}")
    return ObstructionGraph(name, OBSTRUCTIONS[name]())


def _as_target(h: Union[str, ObstructionGraph, Multigraph]) -> ObstructionGraph:
    if isinstance(h, str):
        return make_obstruction(h)
    if isinstance(h, Multigraph):
        return ObstructionGraph("target", h)
    return h


# ---------------------------------------------------------------------------
# minor* search
# ---------------------------------------------------------------------------

def minor_star_successors(g: Multigraph) -> Iterator[MinorOp]:
    yield from minor_successors(g)
    yield from demotion_candidates(g)


def minor_star_contains_any(g: Multigraph, names: Sequence[Union[str, ObstructionGraph, Multigraph]], budget: Optional[int] = None) -> Optional[Tuple[str, Trace]]:
    """
    One breadth-first search for several Eulerian-minor* targets at once.

    Returns the name of the first target reached together with its trace, or
    None when none of them is an Eulerian-minor* of ``g``. Running out of
    budget raises :class:`~eulerminor.eulerian.SearchBudgetExceeded`.
    """
    require_no_free_loops(g, "minor_star_contains")
    check_search_bounds(g)
    targets = [_as_target(h) for h in names]
    if not targets:
        raise GraphError("minor_star_contains_any needs at least one target")
    keys = {t.graph.canonical_key(): t.name for t in targets}
    by_name = {t.name: t.graph for t in targets}
    n = min(t.graph.num_vertices() for t in targets)
    m = min(t.graph.num_edges() for t in targets)
    odd = min(odd_vertex_count(t.graph) for t in targets)

    # no operation raises the vertex, edge or odd-vertex count
    def prune(state):
        return state.num_vertices() < n or state.num_edges() < m or odd_vertex_count(state) < odd

    found = breadth_first_search(g, keys, minor_star_successors, prune, budget)
    if found is None:
        return None
    name, ops, _ = found
    return name, Trace(g, ops, by_name[name])


def minor_star_contains(g: Multigraph, h: Union[str, ObstructionGraph, Multigraph], budget: Optional[int] = None) -> Optional[Trace]:
    found = minor_star_contains_any(g, [h], budget)
    return None if found is None else found[1]


# ---------------------------------------------------------------------------
# pipeline pieces
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ContractedSubdivision:
    graph: Multigraph
    kind: str
    branch_vertices: Tuple[int, ...]
    h1_edges: Tuple[int, ...]
    sides: Optional[Tuple[Tuple[int, ...], Tuple[int, ...]]]
    ops: Tuple[MinorOp, ...]


def contract_subdivision(g: Multigraph, w: KuratowskiWitness) -> ContractedSubdivision:
    """Contracts every subdivision path of ``w`` down to its last edge."""
    validate_kuratowski(g, w)
    if not is_eulerian(g):
        raise PreconditionError("contract_subdivision needs an Eulerian graph")
    cur = g
    rep = {b: b for b in w.branch_vertices}
    ops = []
    for path in w.paths:
        for e in path[:-1]:
            x, y = cur.endpoints(e)
            z = cur.next_vertex_id()
            cur = contract_edge(cur, e)
            rep = {b: z if r in (x, y) else r for b, r in rep.items()}
            ops.append(Contract(e))
    h1_edges = tuple(path[-1] for path in w.paths)
    expected = complete_graph(5) if w.kind == "K5" else complete_bipartite(3, 3)
    assert is_isomorphic(edge_subgraph(cur, h1_edges), expected), "contracted witness is not a Kuratowski graph"
    sides = None
    if w.kind == "K33":
        left, right = bipartition(w)
        sides = (tuple(rep[b] for b in left), tuple(rep[b] for b in right))
    return ContractedSubdivision(cur, w.kind, tuple(rep[b] for b in w.branch_vertices), h1_edges, sides, tuple(ops))


def rooted_forest_contraction(g1: Multigraph, h1_vertices: Sequence[int], h1_edges: Sequence[int] = ()) -> Trace:
    """
    Grows one tree from every root over the edges outside ``h1_edges`` and
    contracts the trees, so that the component of the roots shrinks to the
    roots themselves. Every other component is removed by cycle and vertex
    deletions.
    """
    roots = sorted(set(h1_vertices))
    for r in roots:
        if r not in g1.vertices:
            raise PreconditionError(f"Root {r} is not a vertex")
    comps = connected_components(g1)
    home = next(comp for comp in comps if roots[0] in comp) if roots else frozenset()
    if any(r not in home for r in roots):
        raise PreconditionError("The roots do not lie in one component")
    skip = set(h1_edges)
    owner = {r: r for r in roots}
    tree_edges = []
    queue = deque(roots)
    while queue:
        x = queue.popleft()
        for e in sorted(g1.incident_edges(x)):
            if e in skip or g1.is_loop(e):
                continue
            y = g1.other_end(e, x)
            if y not in owner:
                owner[y] = owner[x]
                tree_edges.append(e)
                queue.append(y)
    assert set(owner) == set(home), "every vertex of the root component belongs to some tree"
    ops: List[MinorOp] = [Contract(e) for e in tree_edges]
    for comp in comps:
        if comp == home:
            continue
        ops += [DeleteCycle(c.edges) for c in cycle_decomposition(induced_subgraph(g1, comp))]
        ops += [DeleteIsolatedVertex(v) for v in sorted(comp)]
    cur = g1
    for op in ops:
        cur = op.apply(cur)
    return Trace(g1, ops, cur)


def _minimalize(g3: Multigraph, h1_edges: Sequence[int]) -> Tuple[Multigraph, List[MinorOp]]:
    if not is_eulerian(g3):
        raise PreconditionError("minimalize_g4 needs an Eulerian graph")
    if g3.num_vertices() != 6:
        raise PreconditionError(f"minimalize_g4 works on 6 vertices, got {g3.num_vertices()}")
    keep = set(h1_edges)
    if not keep <= set(g3.edges):
        raise PreconditionError("h1_edges are not all edges of the graph")
    cur, ops = g3, []
    cycle = find_cycle(delete_edges(cur, keep))
    while cycle is not None:
        ops.append(DeleteCycle(cycle.edges))
        cur = delete_edges(cur, cycle.edges)
        cycle = find_cycle(delete_edges(cur, keep))
    return cur, ops


def minimalize_g4(g3: Multigraph, h1_edges: Sequence[int]) -> Multigraph:
    """Deletes cycles avoiding ``h1_edges`` until the remaining extra edges form a forest."""
    return _minimalize(g3, h1_edges)[0]


def _sides(g: Multigraph, h1_edges: Sequence[int]) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
    h1 = edge_subgraph(g, h1_edges)
    start = min(h1.vertices)
    color = {start: 0}
    queue = deque([start])
    while queue:
        x = queue.popleft()
        for y in h1.neighbors(x):
            if y not in color:
                color[y] = 1 - color[x]
                queue.append(y)
    return tuple(sorted(v for v in color if color[v] == 0)), tuple(sorted(v for v in color if color[v] == 1))


def _k5_cleanup(g: Multigraph) -> List[MinorOp]:
    """Cycle deletions that strip a graph spanning K5 down to K5."""
    frame = simplify(g)
    assert g.num_vertices() == 5 and frame.num_edges() == 10, "graph does not span K5"
    return list(eulerian_subgraph_as_minor(g, frame.edges).ops)


def _spans_k5(state: Multigraph) -> Optional[str]:
    if state.num_vertices() == 5 and simplify(state).num_edges() == 10:
        return "K5"
    return None


def _endgame_successors(g: Multigraph) -> Iterator[MinorOp]:
    seen = set()
    for e, (a, b) in sorted(g.edges.items()):
        if a != b and frozenset((a, b)) not in seen:
            seen.add(frozenset((a, b)))
            yield Contract(e)
    yield from demotion_candidates(g)


def _case_b_endgame(g4: Multigraph, h1_edges: Sequence[int], budget: Optional[int]) -> Tuple[str, List[MinorOp]]:
    setup = SearchSetup.get_instance()
    left, right = _sides(g4, h1_edges)
    h1 = set(h1_edges)
    extras = [e for e in sorted(g4.edges) if e not in h1]
    aa = [e for e in extras if set(g4.edges[e]) <= set(left)]
    bb = [e for e in extras if set(g4.edges[e]) <= set(right)]
    if aa and bb:
        # contracting the edge between the third a and the third b leaves K5
        ak = (set(left) - set(g4.edges[aa[0]])).pop()
        br = (set(right) - set(g4.edges[bb[0]])).pop()
        e = next(f for f in sorted(h1) if set(g4.edges[f]) == {ak, br})
        return "K5", [Contract(e)] + _k5_cleanup(contract_edge(g4, e))
    if all(d == 4 for d in g4.degrees().values()):
        assert is_isomorphic(g4, _k33p()), "4-regular minimal G4 without chords on both sides is K33p"
        return "K33p", []
    for case, config in case_fixtures().items():
        if is_isomorphic(g4, config.graph):
            try:
                return "K5", list(scripted_endgame(case, g4).ops)
            except TraceError as ex:
                setup.add_log_entry(f"ENDGAME: scripted case {case} did not validate ({ex}), searching instead", is_warning=True)
    found = breadth_first_search(g4, _spans_k5, _endgame_successors, lambda s: s.num_vertices() < 5, budget)
    if found is not None:
        _, ops, final = found
        setup.add_log_entry(f"ENDGAME: reached a K5-spanning graph in {len(ops)} steps by search")
        return "K5", list(ops) + _k5_cleanup(final)
    setup.add_log_entry("ENDGAME: no demotion-contraction sequence found, running the full minor* search", is_warning=True)
    found = minor_star_contains_any(g4, ["K5", "K33p"], budget)
    assert found is not None, "every non-planar Eulerian graph has a K5 or K33p Eulerian-minor*"
    name, trace = found
    return name, list(trace.ops)


def extract_planar_obstruction(g: Multigraph, budget: Optional[int] = None) -> Trace:
    """
    Trace from a non-planar Eulerian graph to K5 or K33p.

    The Kuratowski subdivision is contracted; a K5 is then kept as an
    Eulerian subgraph. A K3,3 is isolated by contracting a rooted spanning
    forest, the extra edges are cut down to a forest, and the remaining
    configuration is finished by contraction, the scripted case sequences,
    or a bounded search.
    """
    require_no_free_loops(g, "extract_planar_obstruction")
    if not is_eulerian(g):
        raise PreconditionError("extract_planar_obstruction needs an Eulerian graph")
    witness = is_planar(g)
    if isinstance(witness, RotationSystem):
        raise PreconditionError("Graph is planar, so it has no planar obstruction")
    contracted = contract_subdivision(g, witness)
    ops = list(contracted.ops)
    g1 = contracted.graph
    if contracted.kind == "K5":
        ops += eulerian_subgraph_as_minor(g1, contracted.h1_edges).ops
        name = "K5"
    else:
        forest = rooted_forest_contraction(g1, contracted.branch_vertices, contracted.h1_edges)
        ops += forest.ops
        g4, deletions = _minimalize(forest.target, contracted.h1_edges)
        ops += deletions
        name, endgame = _case_b_endgame(g4, contracted.h1_edges, budget)
        ops += endgame
    trace = Trace(g, ops, OBSTRUCTIONS[name]())
    apply_trace(trace)
    return trace


def extract_outerplanar_obstruction(g: Multigraph, budget: Optional[int] = None) -> Trace:
    require_no_free_loops(g, "extract_outerplanar_obstruction")
    if not is_eulerian(g):
        raise PreconditionError("extract_outerplanar_obstruction needs an Eulerian graph")
    if is_outerplanar(g):
        raise PreconditionError("Graph is outer-planar, so it has no outer-planar obstruction")
    found = minor_star_contains_any(g, ["K23p", "K4p"], budget)
    assert found is not None, "every non-outer-planar Eulerian graph has a K23p or K4p Eulerian-minor*"
    return found[1]


def extract_eulerian_obstruction(g: Multigraph) -> Trace:
    return k2_obstruction(g)


EXTRACTORS: Dict[str, Callable[..., Trace]] = {
    "planar": extract_planar_obstruction,
    "outerplanar": extract_outerplanar_obstruction,
    "eulerian": lambda g, budget=None: extract_eulerian_obstruction(g),
}


# ---------------------------------------------------------------------------
# minimal G4 configurations
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class G4Configuration:
    sides: Tuple[Tuple[int, ...], Tuple[int, ...]]
    extra_edges: Tuple[Tuple[int, int], ...]
    degree_class: Tuple[int, ...]
    graph: Multigraph


def _k33_pairs() -> List[Tuple[int, int]]:
    return [(i, 3 + j) for i in range(3) for j in range(3)]


def _configuration(extras: Sequence[Tuple[int, int]]) -> G4Configuration:
    remainder = [0] * 6
    for a, b in extras:
        remainder[a] += 1
        remainder[b] += 1
    graph = from_edge_list(6, _k33_pairs() + list(extras))
    return G4Configuration(K33_SIDES, tuple(extras), tuple(sorted(remainder)), graph)


def _is_forest(pairs: Sequence[Tuple[int, int]]) -> bool:
    parent = list(range(6))

    def root(x):
        while parent[x] != x:
            x = parent[x]
        return x

    for a, b in pairs:
        ra, rb = root(a), root(b)
        if ra == rb:
            return False
        parent[ra] = rb
    return True


def g4_configurations() -> Dict[Tuple[int, ...], List[G4Configuration]]:
    """
    Every way to add a forest of extra edges with odd remainders to K3,3 on
    sides ``{0, 1, 2}`` and ``{3, 4, 5}``, without an edge inside the second
    side. Grouped by remainder class, one configuration per isomorphism class.
    """
    a_side, b_side = K33_SIDES
    pair_types = list(combinations(a_side, 2)) + [(a, b) for a in a_side for b in b_side]
    found: Dict[Tuple[int, ...], Dict[object, G4Configuration]] = {}
    for size in (3, 4, 5):
        for extras in combinations(pair_types, size):
            if not _is_forest(extras):
                continue
            config = _configuration(extras)
            if any(r % 2 == 0 for r in config.degree_class):
                continue
            found.setdefault(config.degree_class, {}).setdefault(config.graph.canonical_key(), config)
    return {cls: list(configs.values()) for cls, configs in sorted(found.items())}


# a1, a2, a3 = 0, 1, 2 and b1, b2, b3 = 3, 4, 5; edge 3i + j joins a_{i+1} and b_{j+1}
_CASE_EXTRAS = {
    "B.1": [(0, 2), (1, 3), (1, 4), (1, 5)],
    "B.2": [(0, 2), (2, 3), (2, 5), (1, 4)],
    "B.3": [(0, 4), (2, 4), (1, 3), (1, 4), (1, 5)],
    "B.4": [(0, 1), (1, 2), (1, 4), (2, 3), (2, 5)],
    "B.5": [(0, 1), (1, 2), (1, 3), (1, 4), (1, 5)],
}

# ("demote", vertex, entering edge, leaving edge, witness) or ("contract", edge)
_CASE_SCRIPTS = {
    "B.1": [("demote", 1, 3, 4, (3, 4, 1, 0)), ("contract", 5)],
    "B.2": [("demote", 2, 6, 8, (6, 8, 5, 3)), ("contract", 4)],
    "B.3": [("demote", 4, 1, 7, (1, 7, 6, 0)), ("demote", 1, 3, 4, (3, 4, 9, 0)), ("contract", 5)],
    "B.4": [("demote", 2, 6, 8, (6, 8, 2, 0)), ("contract", 1)],
    "B.5": [("demote", 1, 9, 13, (9, 13, 2)), ("demote", 1, 3, 4, (3, 4, 1, 0)), ("contract", 2)],
}


def case_fixtures() -> Dict[str, G4Configuration]:
    return {case: _configuration(extras) for case, extras in _CASE_EXTRAS.items()}


def scripted_endgame(case: str, g4: Optional[Multigraph] = None) -> Trace:
    """
    The scripted demotions and contraction of a Case B configuration,
    followed by the cycle deletions that leave exactly K5. With ``g4`` the
    trace is transplanted onto that (isomorphic) graph.
    """
    if case not in _CASE_SCRIPTS:
        raise GraphError(f"Unknown case {case!r}, expected one of {sorted(_CASE_SCRIPTS)}")
    source = case_fixtures()[case].graph
    cur, ops = source, []
    for step in _CASE_SCRIPTS[case]:
        if step[0] == "demote":
            _, v, e_in, e_out, witness = step
            op = Demote(v, cur.half_edge_at(e_in, v), cur.half_edge_at(e_out, v), witness)
        else:
            op = Contract(step[1])
        try:
            cur = op.apply(cur)
        except GraphError as ex:
            raise TraceError(len(ops), str(ex)) from ex
        ops.append(op)
    ops += _k5_cleanup(cur)
    trace = Trace(source, ops, complete_graph(5))
    apply_trace(trace)
    if g4 is not None and g4 != source:
        trace = transplant_trace(trace, g4)
    return trace
