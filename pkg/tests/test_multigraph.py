from itertools import combinations, product

import networkx as nx
import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from eulerminor.multigraph import (
    GraphError,
    GraphFormatError,
    Multigraph,
    PreconditionError,
    bouquet,
    canonical_form,
    compact,
    complete_bipartite,
    complete_graph,
    component_count,
    connected_components,
    contract_edge,
    cycle_graph,
    delete_isolated_vertex,
    enumerate_eulerian_multigraphs,
    enumerate_multigraphs,
    find_isomorphism,
    format_multigraph,
    from_edge_list,
    is_connected,
    is_isomorphic,
    merge_degree2_vertices,
    octahedron,
    parse_multigraph,
    path_graph,
    relabel,
    split_multigraph_blocks,
    subdivide_edge,
    subdivide_free_loop,
)


@st.composite
def multigraphs(draw, max_vertices=5, max_edges=8):
    n = draw(st.integers(1, max_vertices))
    pairs = draw(st.lists(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)), max_size=max_edges))
    return from_edge_list(n, pairs)


def test_degree_counts_loops_twice():
    g = from_edge_list(2, [(0, 0), (0, 1), (0, 1)])
    assert g.degree(0) == 4
    assert g.degree(1) == 2
    assert bouquet(2).degree_sequence() == (4,)
    assert g.multiplicity(0, 1) == 2
    assert g.loops_at(0) == [0]


def test_half_edges():
    g = from_edge_list(2, [(0, 1), (1, 1)])
    assert g.half_edge_vertex(0) == 0
    assert g.half_edge_vertex(1) == 1
    assert g.half_edge_at(0, 1) == 1
    assert sorted(g.half_edges_at(1)) == [1, 2, 3]


def test_unknown_ids_raise():
    g = cycle_graph(3)
    with pytest.raises(GraphError):
        g.endpoints(7)
    with pytest.raises(GraphError):
        g.degree(9)
    with pytest.raises(GraphError):
        Multigraph([0], {0: (0, 1)})


def test_contract_edge_uses_a_fresh_vertex():
    g = contract_edge(path_graph(3), 0)
    assert g.vertices == frozenset({2, 3})
    assert g.edges[1] == (3, 2)


def test_contract_loop_is_rejected():
    with pytest.raises(PreconditionError):
        contract_edge(bouquet(1), 0)


def test_contract_parallel_edge_leaves_loop():
    g = contract_edge(from_edge_list(2, [(0, 1), (0, 1)]), 0)
    assert g.num_vertices() == 1
    assert g.is_loop(1)


def test_delete_isolated_vertex_needs_degree_zero():
    with pytest.raises(PreconditionError):
        delete_isolated_vertex(path_graph(2), 0)
    g = delete_isolated_vertex(Multigraph([0, 1], {0: (1, 1)}), 0)
    assert g.vertices == frozenset({1})


def test_subdivide_and_merge():
    g, p = subdivide_edge(cycle_graph(3), 1)
    assert p == 3
    assert g.edges[1] == (1, 3)
    assert g.edges[3] == (3, 2)
    g, q = subdivide_edge(g, 0)
    merged = merge_degree2_vertices(g, p, q)
    assert merged.degree(5) == 4
    assert merged.num_edges() == 5
    with pytest.raises(PreconditionError):
        merge_degree2_vertices(cycle_graph(4), 0, 0)


def test_subdivide_free_loop():
    g = Multigraph([0], {0: (0, 0)}, free_loops=1)
    h, p = subdivide_free_loop(g)
    assert h.free_loops == 0
    assert h.loops_at(p) == [1]
    with pytest.raises(PreconditionError):
        subdivide_free_loop(h)


def test_components_and_free_loops():
    g = Multigraph(range(4), {0: (0, 1), 1: (2, 2)}, free_loops=2)
    assert connected_components(g) == [frozenset({0, 1}), frozenset({2}), frozenset({3})]
    assert component_count(g) == 5
    assert not is_connected(g)
    assert is_connected(cycle_graph(5))


def test_isomorphism_of_relabelled_graphs():
    g = from_edge_list(4, [(0, 1), (0, 1), (1, 2), (2, 3), (3, 3), (0, 2)])
    perm = [2, 0, 3, 1]
    h = relabel(g, dict(enumerate(perm)))
    assert is_isomorphic(g, h)
    vmap = find_isomorphism(g, h)
    assert sorted(sorted((vmap[a], vmap[b])) for a, b in g.edges.values()) == sorted(sorted(ab) for ab in h.edges.values())


def test_non_isomorphic_graphs():
    assert not is_isomorphic(cycle_graph(4), path_graph(4))
    assert not is_isomorphic(from_edge_list(2, [(0, 1), (0, 0)]), from_edge_list(2, [(0, 1), (1, 1), (0, 1)]))
    assert not is_isomorphic(bouquet(1), Multigraph([0], {0: (0, 0)}, free_loops=1))
    assert find_isomorphism(complete_graph(4), octahedron()) is None


def test_octahedron_is_4_regular():
    g = octahedron()
    assert g.num_edges() == 12
    assert set(g.degree_sequence()) == {4}


def to_nx_multigraph(g):
    h = nx.MultiGraph()
    h.add_nodes_from(g.vertices)
    h.add_edges_from(g.edges.values())
    return h


@settings(max_examples=60, deadline=None)
@given(multigraphs())
def test_degrees_sum_to_twice_the_edges(g):
    assert sum(g.degrees().values()) == 2 * g.num_edges()


@settings(max_examples=60, deadline=None)
@given(multigraphs(), st.data())
def test_contraction_adds_degrees(g, data):
    candidates = [e for e in sorted(g.edges) if not g.is_loop(e)]
    assume(candidates)
    e = data.draw(st.sampled_from(candidates))
    x, y = g.endpoints(e)
    h = contract_edge(g, e)
    z = g.next_vertex_id()
    assert h.degree(z) == g.degree(x) + g.degree(y) - 2
    assert all(h.degree(v) == g.degree(v) for v in g.vertices - {x, y})


@settings(max_examples=60, deadline=None)
@given(multigraphs(), st.data())
def test_contracting_a_subdivision_restores_the_graph(g, data):
    assume(g.edges)
    e = data.draw(st.sampled_from(sorted(g.edges)))
    h, _ = subdivide_edge(g, e)
    for piece in (e, g.next_edge_id()):
        assert is_isomorphic(contract_edge(h, piece), g)


@settings(max_examples=60, deadline=None)
@given(multigraphs(), multigraphs(), st.randoms())
def test_isomorphism_is_an_equivalence(g, other, rnd):
    order = list(g.vertices)
    rnd.shuffle(order)
    h = relabel(g, dict(zip(sorted(g.vertices), order)))
    k = relabel(h, {v: v + 100 for v in h.vertices})
    assert is_isomorphic(g, g)
    assert is_isomorphic(g, h) and is_isomorphic(h, g)
    assert is_isomorphic(h, k) and is_isomorphic(g, k)
    assert is_isomorphic(g, other) == is_isomorphic(other, k)
    assert is_isomorphic(g, other) == nx.is_isomorphic(to_nx_multigraph(g), to_nx_multigraph(other))


values = [(enumerate_multigraphs, 4, 3), (enumerate_multigraphs, 3, 4), (enumerate_eulerian_multigraphs, 4, 6)]
names = ["multigraphs_n4_m3", "multigraphs_n3_m4", "eulerian_n4_m6"]


@pytest.mark.parametrize("enumerate_graphs, n_max, m_max", values, ids=names)
def test_enumeration_has_no_isomorphic_pair(enumerate_graphs, n_max, m_max):
    graphs = [to_nx_multigraph(g) for g in enumerate_graphs(n_max, m_max)]
    for g, h in combinations(graphs, 2):
        assert not nx.is_isomorphic(g, h), (g.edges, h.edges)


@settings(max_examples=60, deadline=None)
@given(multigraphs(), st.randoms())
def test_canonical_form_ignores_labels(g, rnd):
    order = list(g.vertices)
    rnd.shuffle(order)
    h = relabel(g, dict(zip(sorted(g.vertices), order)))
    assert canonical_form(g) == canonical_form(h)


values = [(1, 3, 4), (2, 2, 10), (3, 1, 8)]
names = ["n1_m3", "n2_m2", "n3_m1"]


@pytest.mark.parametrize("n_max, m_max, expected", values, ids=names)
def test_enumeration_counts(n_max, m_max, expected):
    graphs = list(enumerate_multigraphs(n_max, m_max))
    assert len(graphs) == expected
    assert len({canonical_form(g) for g in graphs}) == expected


def test_enumeration_order_and_bounds():
    graphs = list(enumerate_multigraphs(3, 3, connected=True))
    keys = [(g.num_vertices(), g.num_edges()) for g in graphs]
    assert keys == sorted(keys)
    assert all(is_connected(g) for g in graphs)
    assert [g.num_vertices() for g in enumerate_multigraphs(0, 2)] == [0]
    with pytest.raises(GraphError):
        list(enumerate_multigraphs(8, 2))


def test_max_degree_prune():
    graphs = list(enumerate_multigraphs(2, 4, connected=True, max_degree=4, min_vertices=2))
    four_regular = [g for g in graphs if set(g.degree_sequence()) == {4}]
    assert len(four_regular) == 2


def test_eulerian_enumeration_matches_filter():
    by_filter = {canonical_form(g) for g in enumerate_multigraphs(3, 4) if all(d % 2 == 0 for d in g.degree_sequence())}
    by_cycles = {canonical_form(g) for g in enumerate_eulerian_multigraphs(3, 4)}
    assert by_filter == by_cycles


def test_parse_format_example():
    text = "# a triangle with a loop\nmultigraph\nv 3\ne 0 0 1\ne 1 1 2\ne 2 2 0\ne 3 1 1\n"
    g = parse_multigraph(text)
    assert g.num_edges() == 4
    assert g.is_loop(3)
    assert parse_multigraph(format_multigraph(g)) == g


def test_format_free_loops_and_compaction():
    g = Multigraph([3, 7], {4: (3, 7)}, free_loops=2)
    text = format_multigraph(g)
    assert text == "multigraph\nv 2\ne 0 0 1\nf 2\n"
    assert parse_multigraph(text) == compact(g)


bad = [
    "v 2\ne 0 0 1\n",
    "multigraph\nv 2\ne 0 0 2\n",
    "multigraph\nv 2\ne 1 0 1\n",
    "multigraph\nv 2\ne 0 0 1\ne 0 1 0\n",
    "multigraph\nv x\n",
    "multigraph\nv 2\nf 1\ne 0 0 1\n",
]
names = ["missing_header", "dangling_endpoint", "sparse_edge_ids", "duplicate_edge", "not_a_number", "edge_after_free_loops"]


@pytest.mark.parametrize("text", bad, ids=names)
def test_parse_errors(text):
    with pytest.raises(GraphFormatError):
        parse_multigraph(text)


def test_split_blocks():
    text = format_multigraph(cycle_graph(3)) + "\n" + format_multigraph(bouquet(2))
    graphs = split_multigraph_blocks(text)
    assert graphs == [cycle_graph(3), bouquet(2)]


def test_bipartite_fixture_labels():
    g = complete_bipartite(3, 3)
    assert g.edges[4] == (1, 4)
    assert g.edges[8] == (2, 5)
