import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from eulerminor.multigraph import (
    GraphError,
    GraphFormatError,
    Multigraph,
    PreconditionError,
    add_edge,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    delete_edges,
    enumerate_multigraphs,
    from_edge_list,
    octahedron,
    path_graph,
    simplify,
)
from eulerminor.planarity import (
    KuratowskiWitness,
    RotationSystem,
    bipartition,
    check_rotation_system,
    contains_minor,
    demote_in_embedding,
    euler_characteristic_holds,
    faces,
    format_embedding,
    format_kuratowski,
    format_rotation,
    is_outerplanar,
    is_planar,
    is_planar_exhaustive,
    is_plane_embedding,
    parse_embedding,
    planar_embedding,
    plane_face_count,
    rotation_from_neighbor_orders,
    validate_kuratowski,
)


@st.composite
def multigraphs(draw, max_vertices=6, max_edges=12):
    n = draw(st.integers(1, max_vertices))
    pairs = draw(st.lists(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)), max_size=max_edges))
    return from_edge_list(n, pairs)


def wheel(k):
    return from_edge_list(k + 1, [(i, (i + 1) % k) for i in range(k)] + [(i, k) for i in range(k)])


def test_octahedron_embedding():
    g = octahedron()
    rot = is_planar(g)
    assert isinstance(rot, RotationSystem)
    assert is_plane_embedding(g, rot)
    assert len(faces(g, rot)) == 8
    assert all(len(walk) == 3 for walk in faces(g, rot))


def test_multigraph_embedding_with_loops_and_parallels():
    g = from_edge_list(3, [(0, 1), (0, 1), (1, 2), (2, 2), (2, 2), (0, 2)])
    rot = planar_embedding(g)
    assert rot is not None
    check_rotation_system(g, rot)
    assert is_plane_embedding(g, rot)
    assert euler_characteristic_holds(g, rot)
    assert plane_face_count(g, rot) == 5


def test_euler_characteristic_with_free_loops_and_isolated_vertices():
    g = Multigraph(range(4), {0: (0, 1), 1: (2, 2)}, free_loops=2)
    rot = planar_embedding(g)
    assert plane_face_count(g, rot) == 1 + 1 + 2
    assert euler_characteristic_holds(g, rot)


values = [(complete_graph(5), "K5", 10), (complete_bipartite(3, 3), "K33", 9)]
names = ["K5", "K33"]


@pytest.mark.parametrize("g, kind, num_paths", values, ids=names)
def test_kuratowski_witness(g, kind, num_paths):
    w = is_planar(g)
    assert isinstance(w, KuratowskiWitness)
    assert w.kind == kind
    assert len(w.paths) == num_paths
    assert sorted(e for path in w.paths for e in path) == list(range(num_paths))
    validate_kuratowski(g, w)
    assert planar_embedding(g) is None


def test_kuratowski_witness_uses_smallest_parallel_edges():
    g = complete_bipartite(3, 3)
    for pair in [(0, 3), (1, 4), (2, 5)]:
        g, _ = add_edge(g, *pair)
    w = is_planar(g)
    assert bipartition(w) == ((0, 1, 2), (3, 4, 5))
    assert max(e for path in w.paths for e in path) == 8


def test_subdivided_kuratowski_witness():
    g = delete_edges(complete_graph(5), [0])
    g = Multigraph(range(6), {**g.edges, 10: (0, 5), 11: (5, 1)})
    w = is_planar(g)
    validate_kuratowski(g, w)
    assert (0, 1) in w.ends
    assert w.paths[w.ends.index((0, 1))] == (10, 11)


def test_broken_witness_is_rejected():
    g = complete_graph(5)
    w = is_planar(g)
    broken = KuratowskiWitness(w.kind, w.branch_vertices, w.ends, (w.paths[1],) + w.paths[1:])
    with pytest.raises(PreconditionError):
        validate_kuratowski(g, broken)


@settings(max_examples=60, deadline=None)
@given(multigraphs(), st.data())
def test_planarity_ignores_parallels_and_loops(g, data):
    extra = data.draw(st.lists(st.sampled_from(sorted(g.vertices)), max_size=4))
    h = g
    for v in extra:
        h, _ = add_edge(h, v, v)
    for e in data.draw(st.lists(st.sampled_from(sorted(g.edges)), max_size=4)) if g.edges else []:
        h, _ = add_edge(h, *g.edges[e])
    first, second = is_planar(g), is_planar(h)
    assert isinstance(first, RotationSystem) == isinstance(second, RotationSystem)
    for graph, result in ((g, first), (h, second)):
        if isinstance(result, RotationSystem):
            assert is_plane_embedding(graph, result)
            assert euler_characteristic_holds(graph, result)
        else:
            validate_kuratowski(graph, result)


graphs = [
    complete_graph(4),
    complete_graph(5),
    complete_bipartite(3, 3),
    delete_edges(complete_graph(5), [0]),
    delete_edges(complete_bipartite(3, 3), [0]),
    wheel(5),
]
names = ["K4", "K5", "K33", "K5_minus_edge", "K33_minus_edge", "wheel5"]


@pytest.mark.parametrize("g", graphs, ids=names)
def test_exhaustive_rotation_search_agrees(g):
    rot = is_planar_exhaustive(g)
    assert (rot is not None) == isinstance(is_planar(g), RotationSystem)
    if rot is not None:
        assert is_plane_embedding(g, rot)


def test_exhaustive_agrees_on_small_multigraphs():
    for g in enumerate_multigraphs(4, 6, connected=True):
        rot = is_planar_exhaustive(g)
        assert rot is not None
        assert is_plane_embedding(g, rot)


def test_exhaustive_bound():
    with pytest.raises(GraphError):
        is_planar_exhaustive(cycle_graph(9))


values = [
    (complete_graph(4), False),
    (complete_bipartite(2, 3), False),
    (cycle_graph(5), True),
    (delete_edges(complete_graph(4), [5]), True),
    (from_edge_list(3, [(0, 1), (0, 1), (1, 2), (2, 0), (2, 2)]), True),
    (wheel(4), False),
    (from_edge_list(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2), (0, 3)]), True),
]
names = ["K4", "K23", "C5", "K4_minus_edge", "triangle_with_extras", "wheel4", "fan"]


@pytest.mark.parametrize("g, expected", values, ids=names)
def test_outerplanar(g, expected):
    assert is_outerplanar(g) == expected
    by_minors = not contains_minor(g, complete_graph(4)) and not contains_minor(g, complete_bipartite(2, 3))
    assert by_minors == expected


def test_outerplanar_matches_excluded_minors_on_small_graphs():
    for g in enumerate_multigraphs(4, 6, connected=True):
        if g != simplify(g):
            continue
        assert is_outerplanar(g) == (not contains_minor(g, complete_graph(4)))


def test_contains_minor():
    assert contains_minor(octahedron(), complete_graph(4))
    assert not contains_minor(octahedron(), complete_graph(5))
    assert contains_minor(complete_graph(5), complete_bipartite(2, 3))
    assert not contains_minor(path_graph(5), cycle_graph(3))


def test_embedding_text_round_trip():
    g = from_edge_list(3, [(0, 1), (0, 1), (1, 2), (2, 2), (0, 2)])
    rot = planar_embedding(g)
    text = format_embedding(g, rot)
    assert text.startswith("multigraph\nv 3\n")
    assert "rot 0: " in text
    assert parse_embedding(text) == (g, rot)


def test_embedding_parse_rejects_partial_rotation():
    text = "multigraph\nv 2\ne 0 0 1\nrot 0: 0\nrot 1:\n"
    with pytest.raises(GraphFormatError):
        parse_embedding(text)


def test_format_kuratowski():
    w = is_planar(complete_graph(5))
    text = format_kuratowski(w)
    lines = text.splitlines()
    assert lines[0] == "kuratowski K5"
    assert lines[1] == "branch 0 1 2 3 4"
    assert lines[2] == "path 0 1: 0"
    assert len(lines) == 12


def test_demote_in_embedding_keeps_a_plane_rotation():
    g = octahedron()
    rot = planar_embedding(g)
    h, new_rot = demote_in_embedding(g, rot, 1, 1, 8, [0, 4, 1])
    assert h.degree(1) == 2
    assert 1 not in new_rot.order[1] and 8 not in new_rot.order[1]
    assert is_plane_embedding(h, new_rot)


def test_demote_in_embedding_needs_a_plane_rotation():
    g = complete_bipartite(3, 3)
    rot = rotation_from_neighbor_orders(g, {v: g.neighbors(v) for v in g.vertices})
    with pytest.raises(PreconditionError):
        demote_in_embedding(g, rot, 0, 0, 2, [0, 3, 4, 1])


def test_format_rotation():
    rot = RotationSystem({1: (1, 3, 2), 0: (0,)})
    assert format_rotation(rot) == "rot 0: 0\nrot 1: 1 3 2\n"
