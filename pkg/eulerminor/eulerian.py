# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.
from collections import deque
from dataclasses import dataclass, field
from typing import Callable, Dict, Iterable, Iterator, List, Mapping, Optional, Sequence, Tuple, Union

from .multigraph import (
    GraphError,
    GraphFormatError,
    Multigraph,
    PreconditionError,
    _content_lines,
    _ints,
    complete_graph,
    contract_edge,
    delete_edges,
    delete_isolated_vertex,
    edge_map_for,
    edge_subgraph,
    find_isomorphism,
    format_multigraph,
    is_isomorphic,
    parse_multigraph_lines,
    require_no_free_loops,
)
from .search_setup import SearchSetup

MAX_SEARCH_VERTICES = 7
MAX_SEARCH_EDGES = 14


class TraceError(PreconditionError):
    def __init__(self, step: int, reason: str):
        super().__init__(f"step {step}: {reason}")
        self.step = step
        self.reason = reason


class SearchBudgetExceeded(RuntimeError):
    def __init__(self, explored: int, budget: int):
        super().__init__(f"Search budget exhausted after expanding {explored} states (budget {budget})")
        self.explored = explored
        self.budget = budget


@dataclass(frozen=True)
class Cycle:
    """``vertices[i]`` is where ``edges[i]`` starts; the last edge returns to ``vertices[0]``."""

    edges: Tuple[int, ...]
    vertices: Tuple[int, ...]

    def __len__(self) -> int:
        return len(self.edges)

    def vertex_set(self):
        return frozenset(self.vertices)

    def edges_at(self, v: int) -> Tuple[int, int]:
        """(entering, leaving) edge at ``v``."""
        i = self.vertices.index(v)
        return self.edges[i - 1], self.edges[i]

    @classmethod
    def from_edges(cls, g: Multigraph, edges: Sequence[int]) -> "Cycle":
        edges = tuple(int(e) for e in edges)
        if not edges:
            raise PreconditionError("A cycle needs at least one edge")
        if len(set(edges)) != len(edges):
            raise PreconditionError(f"Cycle {list(edges)} reuses an edge")
        ends = []
        for e in edges:
            if e not in g.edges:
                raise PreconditionError(f"Cycle edge {e} is not in the graph")
            ends.append(g.edges[e])
        if len(edges) == 1:
            a, b = ends[0]
            if a != b:
                raise PreconditionError(f"Edge {edges[0]} alone is an open walk, not a cycle")
            return cls(edges, (a,))
        if any(a == b for a, b in ends):
            raise PreconditionError(f"Cycle {list(edges)} uses a loop next to other edges")
        (a0, b0), (a1, b1) = ends[0], ends[1]
        if len(edges) == 2:
            if {a0, b0} != {a1, b1}:
                raise PreconditionError(f"Edges {list(edges)} are not parallel")
            start = a0
        else:
            shared = {a0, b0} & {a1, b1}
            if len(shared) != 1:
                raise PreconditionError(f"Edges {edges[0]} and {edges[1]} do not form a walk through a single vertex")
            start = a0 if a0 not in shared else b0
        cur, vertices = start, []
        for e, (a, b) in zip(edges, ends):
            if cur not in (a, b):
                raise PreconditionError(f"Cycle {list(edges)} is not a walk at edge {e}")
            vertices.append(cur)
            cur = b if cur == a else a
        if cur != start:
            raise PreconditionError(f"Cycle {list(edges)} is not closed")
        if len(set(vertices)) != len(vertices):
            raise PreconditionError(f"Cycle {list(edges)} repeats a vertex")
        return cls(edges, tuple(vertices))


# ---------------------------------------------------------------------------
# operations
# ---------------------------------------------------------------------------

OP_PARSERS: Dict[str, Callable[[List[str]], "MinorOp"]] = {}


def register_op(keyword: str):
    def wrap(cls):
        cls.keyword = keyword
        OP_PARSERS[keyword] = cls.from_tokens
        return cls
    return wrap


@dataclass
class Relabeling:
    vmap: Dict[int, int]
    emap: Dict[int, int]
    flipped: Dict[int, bool] = field(default_factory=dict)

    def vertex(self, v: int) -> int:
        return self.vmap[v]

    def edge(self, e: int) -> int:
        return self.emap[e]

    def half_edge(self, h: int) -> int:
        e, side = divmod(h, 2)
        return 2 * self.emap[e] + (side ^ int(self.flipped.get(e, False)))


class MinorOp:
    keyword = None

    def apply(self, g: Multigraph) -> Multigraph:
        raise NotImplementedError()

    def to_record(self) -> str:
        raise NotImplementedError()

    def relabel(self, labels: Relabeling) -> "MinorOp":
        raise NotImplementedError()

    @classmethod
    def from_tokens(cls, tokens: List[str]) -> "MinorOp":
        raise NotImplementedError()


@register_op("contract")
@dataclass(frozen=True)
class Contract(MinorOp):
    edge: int

    def apply(self, g):
        return contract_edge(g, self.edge)

    def to_record(self):
        return f"contract {self.edge}"

    def relabel(self, labels):
        return Contract(labels.edge(self.edge))

    @classmethod
    def from_tokens(cls, tokens):
        if len(tokens) != 1:
            raise GraphFormatError("contract takes one edge id")
        return cls(*_ints(tokens, "contract"))


@register_op("delcycle")
@dataclass(frozen=True)
class DeleteCycle(MinorOp):
    edges: Tuple[int, ...]

    def apply(self, g):
        return delete_cycle(g, self.edges)

    def to_record(self):
        return "delcycle " + " ".join(str(e) for e in self.edges)

    def relabel(self, labels):
        return DeleteCycle(tuple(labels.edge(e) for e in self.edges))

    @classmethod
    def from_tokens(cls, tokens):
        if not tokens:
            raise GraphFormatError("delcycle needs at least one edge id")
        return cls(tuple(_ints(tokens, "delcycle")))


@register_op("delvertex")
@dataclass(frozen=True)
class DeleteIsolatedVertex(MinorOp):
    vertex: int

    def apply(self, g):
        return delete_isolated_vertex(g, self.vertex)

    def to_record(self):
        return f"delvertex {self.vertex}"

    def relabel(self, labels):
        return DeleteIsolatedVertex(labels.vertex(self.vertex))

    @classmethod
    def from_tokens(cls, tokens):
        if len(tokens) != 1:
            raise GraphFormatError("delvertex takes one vertex id")
        return cls(*_ints(tokens, "delvertex"))


def apply_op(g: Multigraph, op: MinorOp) -> Multigraph:
    return op.apply(g)


def parse_op(line: str) -> MinorOp:
    tokens = line.split()
    parser = OP_PARSERS.get(tokens[0])
    if parser is None:
        raise GraphFormatError(f"Unknown operation {tokens[0]!r}")
    return parser(tokens[1:])


# ---------------------------------------------------------------------------
# traces
# ---------------------------------------------------------------------------

@dataclass
class Trace:
    source: Multigraph
    ops: List[MinorOp]
    target: Multigraph

    def __len__(self) -> int:
        return len(self.ops)


def replay(t: Trace) -> Iterator[Multigraph]:
    """Yields the source and then the graph after every operation."""
    g = t.source
    yield g
    for step, op in enumerate(t.ops):
        try:
            g = op.apply(g)
        except GraphError as ex:
            raise TraceError(step, str(ex)) from ex
        yield g


def apply_trace(t: Trace) -> Multigraph:
    g = t.source
    for g in replay(t):
        pass
    if not is_isomorphic(g, t.target):
        raise TraceError(len(t.ops), "final graph is not isomorphic to the target")
    return g


def _advance_labels(labels: Relabeling, src: Multigraph, src_next: Multigraph, dst: Multigraph, dst_next: Multigraph) -> Relabeling:
    vmap = {v: labels.vmap[v] for v in src_next.vertices if v in src.vertices}
    fresh_src = sorted(src_next.vertices - src.vertices)
    fresh_dst = sorted(dst_next.vertices - dst.vertices)
    assert len(fresh_src) == len(fresh_dst), "relabelled operation created a different number of vertices"
    vmap.update(zip(fresh_src, fresh_dst))

    emap, unmatched = {}, []
    for e, (a, b) in sorted(src_next.edges.items()):
        image = labels.emap.get(e)
        if e in src.edges and image in dst_next.edges and {vmap[a], vmap[b]} == set(dst_next.edges[image]):
            emap[e] = image
        else:
            unmatched.append(e)
    taken = set(emap.values())
    free = [f for f in sorted(dst_next.edges) if f not in taken]
    for e in unmatched:
        a, b = src_next.edges[e]
        image = next(f for f in free if set(dst_next.edges[f]) == {vmap[a], vmap[b]})
        free.remove(image)
        emap[e] = image
    flipped = {e: vmap[src_next.edges[e][0]] != dst_next.edges[f][0] for e, f in emap.items()}
    return Relabeling(vmap, emap, flipped)


def transplant_trace(t: Trace, g: Multigraph) -> Trace:
    """Rewrites ``t`` so that it starts from ``g``, a graph isomorphic to ``t.source``."""
    vmap = find_isomorphism(t.source, g)
    if vmap is None:
        raise PreconditionError("Cannot transplant a trace onto a non-isomorphic graph")
    emap = edge_map_for(t.source, g, vmap)
    flipped = {e: vmap[t.source.edges[e][0]] != g.edges[f][0] for e, f in emap.items()}
    labels = Relabeling(vmap, emap, flipped)
    src, dst, ops = t.source, g, []
    for step, op in enumerate(t.ops):
        mapped = op.relabel(labels)
        try:
            src_next, dst_next = op.apply(src), mapped.apply(dst)
        except GraphError as ex:
            raise TraceError(step, str(ex)) from ex
        labels = _advance_labels(labels, src, src_next, dst, dst_next)
        ops.append(mapped)
        src, dst = src_next, dst_next
    return Trace(g, ops, t.target)


def compose_traces(first: Trace, second: Trace) -> Trace:
    """Chains two traces when the first one ends where the second one starts (up to isomorphism)."""
    middle = apply_trace(first)
    if middle != second.source:
        second = transplant_trace(second, middle)
    return Trace(first.source, list(first.ops) + list(second.ops), second.target)


def dumps_trace(t: Trace) -> str:
    if not t.source.is_dense():
        raise GraphFormatError("Trace sources must use dense vertex and edge ids")
    body = [format_multigraph(t.source).rstrip("\n")]
    body += [op.to_record() for op in t.ops]
    body += ["target:", format_multigraph(t.target).rstrip("\n")]
    return "\n".join(body) + "\n"


def loads_trace(text: str) -> Trace:
    lines = _content_lines(text)
    if "target:" not in lines:
        raise GraphFormatError("Trace is missing its 'target:' section")
    split = lines.index("target:")
    head, tail = lines[:split], lines[split + 1:]
    graph_keywords = {"multigraph", "v", "e", "f"}
    first_op = next((i for i, line in enumerate(head) if line.split()[0] not in graph_keywords), len(head))
    source = parse_multigraph_lines(head[:first_op])
    ops = [parse_op(line) for line in head[first_op:]]
    return Trace(source, ops, parse_multigraph_lines(tail))


# ---------------------------------------------------------------------------
# Eulerian graphs
# ---------------------------------------------------------------------------

def is_eulerian(g: Multigraph) -> bool:
    return all(d % 2 == 0 for d in g.degrees().values())


def odd_vertex_count(g: Multigraph) -> int:
    return sum(d % 2 for d in g.degrees().values())


def cycle_decomposition(g: Multigraph) -> List[Cycle]:
    """
    Partitions the edges into cycles by walking without reusing edges and
    cutting out a cycle whenever the walk revisits a vertex.
    """
    if not is_eulerian(g):
        raise PreconditionError("Cycle decomposition needs an Eulerian graph")
    remaining: Dict[int, List[int]] = {v: [] for v in g.vertices}
    for e, (a, b) in sorted(g.edges.items()):
        remaining[a].append(e)
        if b != a:
            remaining[b].append(e)
    used = set()
    cycles = []
    for start in sorted(g.vertices):
        path, walk = [start], []
        while True:
            cur = path[-1]
            nxt_edge = next((e for e in remaining[cur] if e not in used and e not in walk), None)
            if nxt_edge is None:
                assert not walk, "an Eulerian walk cannot get stuck away from its start"
                break
            walk.append(nxt_edge)
            nxt = g.other_end(nxt_edge, cur)
            if nxt in path:
                i = path.index(nxt)
                edges = walk[i:]
                cycles.append(Cycle(tuple(edges), tuple(path[i:])))
                used.update(edges)
                del path[i + 1:]
                del walk[i:]
            else:
                path.append(nxt)
    assert len(used) == g.num_edges()
    return cycles


def find_cycle(g: Multigraph) -> Optional[Cycle]:
    """Some cycle of ``g`` (the first edge, in id order, that closes a cycle over the earlier ones), or None."""
    parent = {v: v for v in g.vertices}

    def root(x):
        while parent[x] != x:
            x = parent[x]
        return x

    forest: Dict[int, List[Tuple[int, int]]] = {v: [] for v in g.vertices}
    for e, (a, b) in sorted(g.edges.items()):
        if root(a) != root(b):
            parent[root(a)] = root(b)
            forest[a].append((e, b))
            forest[b].append((e, a))
            continue
        # path b -> a inside the forest, then e closes it
        back = {b: None}
        queue = deque([b])
        while queue:
            x = queue.popleft()
            for f, y in forest[x]:
                if y not in back:
                    back[y] = (f, x)
                    queue.append(y)
        path, x = [], a
        while back[x] is not None:
            f, x = back[x]
            path.append(f)
        return Cycle.from_edges(g, path + [e])
    return None


def delete_cycle(g: Multigraph, c) -> Multigraph:
    edges = c.edges if isinstance(c, Cycle) else c
    cycle = Cycle.from_edges(g, edges)
    return delete_edges(g, cycle.edges)


def eulerian_subgraph_as_minor(g: Multigraph, h_edges: Iterable[int]) -> Trace:
    require_no_free_loops(g, "eulerian_subgraph_as_minor")
    if not is_eulerian(g):
        raise PreconditionError("Graph is not Eulerian")
    h_edges = sorted(set(h_edges))
    sub = edge_subgraph(g, h_edges)
    if not is_eulerian(sub):
        raise PreconditionError("The requested subgraph is not Eulerian")
    ops: List[MinorOp] = [DeleteCycle(c.edges) for c in cycle_decomposition(delete_edges(g, h_edges))]
    ops += [DeleteIsolatedVertex(v) for v in sorted(g.vertices - sub.vertices)]
    return Trace(g, ops, sub)


# ---------------------------------------------------------------------------
# search
# ---------------------------------------------------------------------------

def check_search_bounds(g: Multigraph):
    if g.num_vertices() > MAX_SEARCH_VERTICES or g.num_edges() > MAX_SEARCH_EDGES:
        raise PreconditionError(
            f"Exhaustive search is limited to {MAX_SEARCH_VERTICES} vertices and {MAX_SEARCH_EDGES} edges, "
            f"got {g.num_vertices()} and {g.num_edges()}"
        )


def minor_successors(g: Multigraph) -> Iterator[MinorOp]:
    from .cycles import enumerate_cycles

    seen_pairs = set()
    for e, (a, b) in sorted(g.edges.items()):
        pair = frozenset((a, b))
        if a != b and pair not in seen_pairs:
            seen_pairs.add(pair)
            yield Contract(e)
    for c in enumerate_cycles(g):
        yield DeleteCycle(c.edges)
    degrees = g.degrees()
    isolated = [v for v in sorted(g.vertices) if degrees[v] == 0]
    if isolated:
        yield DeleteIsolatedVertex(isolated[0])


def breadth_first_search(
    source: Multigraph,
    targets: Union[Mapping[object, str], Callable[[Multigraph], Optional[str]]],
    successors: Callable[[Multigraph], Iterable[MinorOp]],
    prune: Callable[[Multigraph], bool],
    budget: Optional[int] = None,
) -> Optional[Tuple[str, List[MinorOp], Multigraph]]:
    """
    Breadth-first search over operation sequences with canonical-form
    memoisation. ``targets`` maps canonical keys to names, or is a
    predicate returning a name for goal states and None otherwise. Returns the name
    reached, the operations and the labelled final graph; None when no target
    is reachable.
    """
    setup = SearchSetup.get_instance()
    budget = setup.resolve_budget(budget)

    def goal(state):
        if callable(targets):
            return targets(state)
        return targets.get(state.canonical_key())

    start = source.canonical_key()
    if goal(source) is not None:
        return goal(source), [], source
    parents: Dict[object, Optional[Tuple[object, MinorOp]]] = {start: None}
    graphs = {start: source}
    queue = deque([start])
    explored = 0
    while queue:
        key = queue.popleft()
        g = graphs.pop(key)
        explored += 1
        if explored > budget:
            setup.add_log_entry(f"SEARCH: budget of {budget} states exhausted", is_warning=True)
            raise SearchBudgetExceeded(explored - 1, budget)
        for op in successors(g):
            h = op.apply(g)
            k = h.canonical_key()
            if k in parents:
                continue
            parents[k] = (key, op)
            name = goal(h)
            if name is not None:
                ops = []
                while parents[k] is not None:
                    k, op = parents[k][0], parents[k][1]
                    ops.append(op)
                ops.reverse()
                return name, ops, h
            if prune(h):
                continue
            graphs[k] = h
            queue.append(k)
    return None


def has_eulerian_minor(g: Multigraph, h: Multigraph, budget: Optional[int] = None, prune_parity: bool = True) -> Optional[Trace]:
    """
    Exhaustive search for ``h`` as an Eulerian-minor of ``g``.

    Parameters
    ----------
    g : Multigraph
        The host graph, at most 7 vertices and 14 edges.
    h : Multigraph
        The graph looked for, up to isomorphism.
    budget : int
        Number of states that may be expanded; defaults to the configured budget.
    prune_parity : bool
        Skip states with fewer odd-degree vertices than ``h``. No operation
        raises that number, so the search stays exhaustive.

    Returns
    -------
    Trace or None
        None means ``h`` is definitely not an Eulerian-minor of ``g``;
        :class:`SearchBudgetExceeded` is raised when the budget runs out first.
    """
    require_no_free_loops(g, "has_eulerian_minor")
    require_no_free_loops(h, "has_eulerian_minor")
    check_search_bounds(g)
    n, m, odd = h.num_vertices(), h.num_edges(), odd_vertex_count(h)

    def prune(state):
        if state.num_vertices() < n or state.num_edges() < m:
            return True
        return prune_parity and odd_vertex_count(state) < odd

    found = breadth_first_search(g, {h.canonical_key(): "target"}, minor_successors, prune, budget)
    if found is None:
        return None
    _, ops, _ = found
    return Trace(g, ops, h)


def k2_obstruction(g: Multigraph) -> Trace:
    """Certificate that a non-Eulerian graph has K2 as an Eulerian-minor."""
    require_no_free_loops(g, "k2_obstruction")
    if is_eulerian(g):
        raise PreconditionError("Eulerian graphs have no K2 Eulerian-minor")
    ops: List[MinorOp] = []
    cur = g
    cycle = find_cycle(cur)
    while cycle is not None:
        ops.append(DeleteCycle(cycle.edges))
        cur = delete_edges(cur, cycle.edges)
        cycle = find_cycle(cur)
    # cur is a forest with at least one edge: cycle deletions keep degree parities
    keep = min(cur.edges)
    for e in sorted(cur.edges):
        if e != keep:
            ops.append(Contract(e))
            cur = contract_edge(cur, e)
    for v in sorted(cur.vertices):
        if cur.degree(v) == 0:
            ops.append(DeleteIsolatedVertex(v))
            cur = delete_isolated_vertex(cur, v)
    return Trace(g, ops, complete_graph(2))
