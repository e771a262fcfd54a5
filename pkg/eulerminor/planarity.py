# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.
"""
Planarity of multigraphs.

The underlying simple graph is tested with networkx's left-right planarity
test. Parallel edges and loops are put back next to their parent so that the
rotation system stays planar. Non-planar graphs yield a Kuratowski
subdivision lifted back to multigraph edge ids.
"""
from collections import deque
from dataclasses import dataclass
from itertools import permutations, product
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union

import networkx as nx

from .cycles import admissible_demotion
from .multigraph import (
    GraphError,
    GraphFormatError,
    Multigraph,
    PreconditionError,
    _content_lines,
    _ints,
    canonical_form,
    connected_components,
    contract_edge,
    delete_edges,
    delete_isolated_vertex,
    format_multigraph,
    induced_subgraph,
    parse_multigraph_lines,
    simplify,
)
from .search_setup import SearchSetup

EXHAUSTIVE_MAX_VERTICES = 8


@dataclass(frozen=True)
class RotationSystem:
    """Cyclic order of the half-edges around every vertex."""

    order: Dict[int, Tuple[int, ...]]

    def successor(self, h: int, at: int) -> int:
        ring = self.order[at]
        return ring[(ring.index(h) + 1) % len(ring)]

    def positions(self) -> Dict[int, Tuple[int, int]]:
        """half-edge -> (vertex, index in that vertex's rotation)"""
        return {h: (v, i) for v, ring in self.order.items() for i, h in enumerate(ring)}


@dataclass(frozen=True)
class KuratowskiWitness:
    kind: str
    branch_vertices: Tuple[int, ...]
    ends: Tuple[Tuple[int, int], ...]
    paths: Tuple[Tuple[int, ...], ...]


def to_networkx(g: Multigraph) -> nx.Graph:
    simple = nx.Graph()
    simple.add_nodes_from(sorted(g.vertices))
    simple.add_edges_from((a, b) for a, b in g.edges.values() if a != b)
    return simple


def rotation_from_neighbor_orders(g: Multigraph, neighbor_orders: Dict[int, Sequence[int]]) -> RotationSystem:
    """
    Lifts cyclic neighbour orders of the simple graph to half-edge rotations.
    Parallel edges are nested: increasing id at the smaller endpoint,
    decreasing at the larger. Loops sit as consecutive pairs after all other
    half-edges.
    """
    order = {}
    for v in sorted(g.vertices):
        ring = []
        for w in neighbor_orders.get(v, ()):
            parallel = sorted(g.edges_between(v, w))
            if v > w:
                parallel.reverse()
            ring += [g.half_edge_at(e, v) for e in parallel]
        for e in sorted(g.loops_at(v)):
            ring += [2 * e, 2 * e + 1]
        order[v] = tuple(ring)
    return RotationSystem(order)


def check_rotation_system(g: Multigraph, rot: RotationSystem):
    seen = set()
    for v, ring in rot.order.items():
        if v not in g.vertices:
            raise PreconditionError(f"Rotation mentions unknown vertex {v}")
        for h in ring:
            if h in seen:
                raise PreconditionError(f"Half-edge {h} appears twice in the rotation system")
            if h // 2 not in g.edges or g.half_edge_vertex(h) != v:
                raise PreconditionError(f"Half-edge {h} does not sit at vertex {v}")
            seen.add(h)
    expected = {h for e in g.edges for h in (2 * e, 2 * e + 1)}
    if seen != expected:
        raise PreconditionError("Rotation system does not list every half-edge")


def faces(g: Multigraph, rot: RotationSystem) -> List[Tuple[int, ...]]:
    """Face boundary walks: a half-edge is followed by the successor of its twin."""
    check_rotation_system(g, rot)
    where = {h: v for v, ring in rot.order.items() for h in ring}
    visited = set()
    walks = []
    for start in sorted(where):
        if start in visited:
            continue
        walk, h = [], start
        while h not in visited:
            visited.add(h)
            walk.append(h)
            twin = h ^ 1
            h = rot.successor(twin, where[twin])
        walks.append(tuple(walk))
    return walks


def plane_face_count(g: Multigraph, rot: RotationSystem) -> int:
    """Faces of the plane drawing: components with edges share one outer face, free-loops add one each."""
    walks = faces(g, rot)
    where = {h: g.half_edge_vertex(h) for walk in walks for h in walk}
    comp_of = {v: i for i, comp in enumerate(connected_components(g)) for v in comp}
    per_component: Dict[int, int] = {}
    for walk in walks:
        c = comp_of[where[walk[0]]]
        per_component[c] = per_component.get(c, 0) + 1
    return 1 + sum(count - 1 for count in per_component.values()) + g.free_loops


def is_plane_embedding(g: Multigraph, rot: RotationSystem) -> bool:
    """V - E + F = 2 for every component that has edges."""
    try:
        walks = faces(g, rot)
    except PreconditionError:
        return False
    comp_of = {v: i for i, comp in enumerate(connected_components(g)) for v in comp}
    counts: Dict[int, List[int]] = {}
    for i, comp in enumerate(connected_components(g)):
        counts[i] = [len(comp), 0, 0]
    for a, b in g.edges.values():
        counts[comp_of[a]][1] += 1
    for walk in walks:
        counts[comp_of[g.half_edge_vertex(walk[0])]][2] += 1
    return all(v - e + f == 2 for v, e, f in counts.values() if e)


def euler_characteristic_holds(g: Multigraph, rot: RotationSystem) -> bool:
    """V - E + F = 1 + C on the whole drawing, free-loops included."""
    components = len(connected_components(g)) + g.free_loops
    return g.num_vertices() - g.num_edges() + plane_face_count(g, rot) == 1 + components


def _walk_branch_path(k: nx.Graph, start: int, first: int, branch: set) -> List[int]:
    path, prev, cur = [start, first], start, first
    while cur not in branch:
        nxt = next(w for w in k.neighbors(cur) if w != prev)
        prev, cur = cur, nxt
        path.append(cur)
    return path


def kuratowski_from_subgraph(g: Multigraph, k: nx.Graph) -> KuratowskiWitness:
    branch = {v for v in k.nodes if k.degree(v) >= 3}
    kind = "K5" if len(branch) == 5 else "K33"
    found = {}
    for b in sorted(branch):
        for w in sorted(k.neighbors(b)):
            path = _walk_branch_path(k, b, w, branch)
            key = (min(path[0], path[-1]), max(path[0], path[-1]))
            if key in found:
                continue
            if path[0] != key[0]:
                path.reverse()
            found[key] = tuple(min(g.edges_between(x, y)) for x, y in zip(path, path[1:]))
    ends = tuple(sorted(found))
    return KuratowskiWitness(kind, tuple(sorted(branch)), ends, tuple(found[key] for key in ends))


def validate_kuratowski(g: Multigraph, w: KuratowskiWitness):
    expected = {"K5": (5, 10), "K33": (6, 9)}
    if w.kind not in expected:
        raise PreconditionError(f"Unknown Kuratowski kind {w.kind!r}")
    n, m = expected[w.kind]
    if len(set(w.branch_vertices)) != n or len(w.paths) != m or len(w.ends) != m:
        raise PreconditionError(f"A {w.kind} witness needs {n} branch vertices and {m} paths")
    branch = set(w.branch_vertices)
    interiors = set()
    used_edges = set()
    pairs = set()
    for (u, x), path in zip(w.ends, w.paths):
        if u not in branch or x not in branch or u == x:
            raise PreconditionError("Kuratowski path ends must be distinct branch vertices")
        pairs.add(frozenset((u, x)))
        cur, inner = u, []
        for e in path:
            if e in used_edges:
                raise PreconditionError(f"Edge {e} is used by two Kuratowski paths")
            used_edges.add(e)
            cur = g.other_end(e, cur)
            inner.append(cur)
        if cur != x:
            raise PreconditionError(f"Kuratowski path {list(path)} does not end at {x}")
        inner = inner[:-1]
        if len(set(inner)) != len(inner) or interiors & set(inner) or branch & set(inner):
            raise PreconditionError("Kuratowski paths are not internally disjoint")
        interiors |= set(inner)
    if w.kind == "K5":
        if len(pairs) != 10:
            raise PreconditionError("K5 witness does not join every pair of branch vertices")
    else:
        side = bipartition(w)
        if side is None:
            raise PreconditionError("K33 witness is not bipartite between its branch vertices")


def bipartition(w: KuratowskiWitness) -> Optional[Tuple[Tuple[int, ...], Tuple[int, ...]]]:
    """The two sides of a K33 witness, side containing the smallest branch vertex first."""
    adjacent = {b: set() for b in w.branch_vertices}
    for u, x in w.ends:
        adjacent[u].add(x)
        adjacent[x].add(u)
    first = min(w.branch_vertices)
    left = {first} | {u for x in adjacent[first] for u in adjacent[x]}
    right = set(adjacent[first])
    if len(left) != 3 or len(right) != 3 or left & right:
        return None
    if any(adjacent[u] != right for u in left):
        return None
    return tuple(sorted(left)), tuple(sorted(right))


def is_planar(g: Multigraph) -> Union[RotationSystem, KuratowskiWitness]:
    simple = to_networkx(g)
    planar, certificate = nx.check_planarity(simple, counterexample=True)
    if planar:
        orders = {v: list(certificate.neighbors_cw_order(v)) for v in certificate.nodes}
        return rotation_from_neighbor_orders(g, orders)
    return kuratowski_from_subgraph(g, certificate)


def planar_embedding(g: Multigraph) -> Optional[RotationSystem]:
    result = is_planar(g)
    return result if isinstance(result, RotationSystem) else None


def is_planar_exhaustive(g: Multigraph) -> Optional[RotationSystem]:
    """Tries every rotation of the underlying simple graph, one component at a time."""
    if g.num_vertices() > EXHAUSTIVE_MAX_VERTICES:
        raise GraphError(f"Exhaustive rotation search is limited to {EXHAUSTIVE_MAX_VERTICES} vertices")
    simple = simplify(g)
    orders: Dict[int, List[int]] = {}
    for comp in connected_components(simple):
        part = induced_subgraph(simple, comp)
        vertices = sorted(comp)
        choices = []
        for v in vertices:
            nbrs = part.neighbors(v)
            if len(nbrs) <= 2:
                choices.append([list(nbrs)])
            else:
                choices.append([[nbrs[0]] + list(rest) for rest in permutations(nbrs[1:])])
        for combo in product(*choices):
            trial = dict(zip(vertices, combo))
            if is_plane_embedding(part, rotation_from_neighbor_orders(part, trial)):
                orders.update(trial)
                break
        else:
            return None
    return rotation_from_neighbor_orders(g, orders)


def is_outerplanar(g: Multigraph) -> bool:
    """Planarity after adding one apex vertex joined to every vertex."""
    simple = to_networkx(g)
    apex = ("apex",)
    simple.add_edges_from((apex, v) for v in list(simple.nodes))
    planar, _ = nx.check_planarity(simple)
    return planar


def _minor_states(g: Multigraph) -> Iterable[Multigraph]:
    for e in sorted(g.edges):
        yield delete_edges(g, [e])
        yield simplify(contract_edge(g, e))
    degrees = g.degrees()
    isolated = [v for v in sorted(g.vertices) if degrees[v] == 0]
    if isolated:
        yield delete_isolated_vertex(g, isolated[0])


def contains_minor(g: Multigraph, h: Multigraph) -> bool:
    """Ordinary minor containment between simple underlying graphs, by exhaustive search."""
    g, h = simplify(g), simplify(h)
    target = canonical_form(h)
    n, m = h.num_vertices(), h.num_edges()
    seen = {canonical_form(g)}
    queue = deque([g])
    while queue:
        cur = queue.popleft()
        if canonical_form(cur) == target:
            return True
        for nxt in _minor_states(cur):
            key = canonical_form(nxt)
            if key in seen or nxt.num_vertices() < n or nxt.num_edges() < m:
                continue
            seen.add(key)
            queue.append(nxt)
    return False


def demote_in_embedding(g: Multigraph, rot: RotationSystem, v: int, h1: int, h2: int, witness) -> Tuple[Multigraph, RotationSystem]:
    """
    Demotes ``v`` and rewrites the rotation in place: ``h1`` and ``h2`` leave
    the rotation at ``v`` and the twins are replaced by the halves of the
    fused edge.
    """
    if not is_plane_embedding(g, rot):
        raise PreconditionError("Rotation system is not a plane embedding")
    result = admissible_demotion(g, v, h1, h2, witness)
    order = {u: list(ring) for u, ring in rot.order.items()}
    order[v] = [h for h in order[v] if h not in (h1, h2)]
    if h1 // 2 != h2 // 2:
        fused = g.next_edge_id()
        t1, t2 = h1 ^ 1, h2 ^ 1
        a, b = g.half_edge_vertex(t1), g.half_edge_vertex(t2)
        order[a] = [2 * fused if h == t1 else h for h in order[a]]
        order[b] = [2 * fused + 1 if h == t2 else h for h in order[b]]
    new_rot = RotationSystem({u: tuple(ring) for u, ring in order.items()})
    if not is_plane_embedding(result, new_rot):
        SearchSetup.get_instance().add_log_entry(f"EMBEDDING: demotion at {v} left the face structure, re-embedding")
        new_rot = planar_embedding(result)
        if new_rot is None:
            raise PreconditionError("Demotion produced a non-planar graph")
    return result, new_rot


def format_rotation(rot: RotationSystem) -> str:
    return "".join(f"rot {v}: " + " ".join(str(h) for h in rot.order[v]) + "\n" for v in sorted(rot.order))


def parse_rotation(text: str) -> RotationSystem:
    order = {}
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line.startswith("rot "):
            continue
        head, _, tail = line[4:].partition(":")
        (v,) = _ints([head.strip()], line)
        if v in order:
            raise GraphFormatError(f"Vertex {v} has two rotation lines")
        order[v] = tuple(_ints(tail.split(), line))
    return RotationSystem(order)


def format_kuratowski(w: KuratowskiWitness) -> str:
    lines = [f"kuratowski {w.kind}", "branch " + " ".join(str(v) for v in w.branch_vertices)]
    lines += [f"path {u} {x}: " + " ".join(str(e) for e in path) for (u, x), path in zip(w.ends, w.paths)]
    return "\n".join(lines) + "\n"


def format_embedding(g: Multigraph, rot: RotationSystem) -> str:
    return format_multigraph(g) + format_rotation(rot)


def parse_embedding(text: str) -> Tuple[Multigraph, RotationSystem]:
    """A multigraph block followed by its ``rot`` lines; the rotation is checked against the graph."""
    lines = _content_lines(text)
    g = parse_multigraph_lines([line for line in lines if not line.startswith("rot ")])
    rot = parse_rotation(text)
    try:
        check_rotation_system(g, rot)
    except PreconditionError as ex:
        raise GraphFormatError(str(ex)) from None
    return g, rot
