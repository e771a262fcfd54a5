import pytest

from eulerminor.cycles import Demote
from eulerminor.eulerian import Contract, Trace, TraceError, apply_trace, dumps_trace, loads_trace, parse_op, replay
from eulerminor.fourreg import (
    Merge,
    Subdivide,
    construct,
    construct_replay,
    four_regular_planar_oracle,
    generate_4rp,
    is_four_regular,
    reduce_components,
    reduce_step,
    reduce_to_b2,
    reduction_steps,
)
from eulerminor.multigraph import (
    GraphError,
    GraphFormatError,
    PreconditionError,
    bouquet,
    canonical_form,
    complete_graph,
    disjoint_union,
    from_edge_list,
    is_connected,
    is_isomorphic,
    octahedron,
)
from eulerminor.planarity import is_plane_embedding, planar_embedding
from eulerminor.search_setup.env_vars import acceptance_scale

FULL = acceptance_scale() == "full"

LOOPED_DIGON = from_edge_list(2, [(0, 0), (0, 1), (0, 1), (1, 1)])
BUNDLE = from_edge_list(2, [(0, 1)] * 4)


def test_is_four_regular():
    assert is_four_regular(octahedron())
    assert is_four_regular(bouquet(2))
    assert not is_four_regular(complete_graph(4))


def test_reduce_step_shrinks_by_one_vertex():
    g, step = reduce_step(octahedron())
    assert g.num_vertices() == 5
    assert is_four_regular(g) and is_connected(g)
    assert planar_embedding(g) is not None
    assert not step.deletes_loop


def test_octahedron_reduces_in_five_steps():
    t = reduce_to_b2(octahedron())
    assert len(t) == 10
    graphs = list(replay(t))
    for g in graphs[::2]:
        assert is_four_regular(g) and is_connected(g)
        assert planar_embedding(g) is not None
    assert is_isomorphic(apply_trace(t), bouquet(2))


def test_loop_step():
    t = reduce_to_b2(LOOPED_DIGON)
    steps = reduction_steps(t)
    assert len(steps) == 1
    assert steps[0].deletes_loop


values = [complete_graph(5), complete_graph(4), disjoint_union(bouquet(2), bouquet(2))]
names = ["non_planar", "not_four_regular", "disconnected"]


@pytest.mark.parametrize("g", values, ids=names)
def test_reduce_preconditions(g):
    with pytest.raises(PreconditionError):
        reduce_to_b2(g)


def test_b2_is_already_reduced():
    assert len(reduce_to_b2(bouquet(2))) == 0
    with pytest.raises(PreconditionError):
        reduce_step(bouquet(2))


def test_reduce_components():
    traces = reduce_components(disjoint_union(octahedron(), bouquet(2)))
    assert [len(t) for t in traces] == [10, 0]


def test_reduction_steps_shape():
    with pytest.raises(PreconditionError):
        reduction_steps(Trace(BUNDLE, [Contract(0)], BUNDLE))
    with pytest.raises(TraceError):
        reduction_steps(Trace(BUNDLE, [Contract(0), Contract(1)], BUNDLE))


def test_construct_records_and_rotation():
    t = reduce_to_b2(octahedron())
    c = construct(t)
    assert len(c.steps) == 5
    final = apply_trace(c.trace)
    assert is_isomorphic(final, octahedron())
    assert is_plane_embedding(final, c.rotation)
    assert c.trace.source.free_loops == 0


def test_construct_undoes_a_loop_deletion_from_b2_alone(fresh_search_setup):
    c = construct(reduce_to_b2(LOOPED_DIGON))
    assert c.trace.source == bouquet(2)
    assert [type(op) for op in c.trace.ops] == [Subdivide, Subdivide, Merge]
    assert Subdivide(None) not in c.trace.ops
    assert is_isomorphic(apply_trace(c.trace), LOOPED_DIGON)
    assert ("CONSTRUCT: starting from B2 and 0 free-loop(s)", False) in fresh_search_setup.search_log


def test_construct_with_a_free_loop_seed(fresh_search_setup):
    t = reduce_to_b2(LOOPED_DIGON)
    c = construct(t, seeds=1)
    assert c.trace.source.free_loops == 1
    assert is_isomorphic(apply_trace(c.trace), LOOPED_DIGON)
    assert ("CONSTRUCT: starting from B2 and 1 free-loop(s)", False) in fresh_search_setup.search_log
    with pytest.raises(PreconditionError):
        construct(t, seeds=2)


def test_construction_trace_text():
    c = construct(reduce_to_b2(LOOPED_DIGON), seeds=1)
    text = dumps_trace(c.trace)
    assert "f 1\n" in text
    assert "subdiv free\n" in text
    back = loads_trace(text)
    assert back.ops == c.trace.ops
    assert is_isomorphic(apply_trace(back), LOOPED_DIGON)


def test_construct_rejects_other_traces():
    with pytest.raises(TraceError):
        construct(Trace(BUNDLE, [Contract(0), Contract(1)], BUNDLE))


def round_trip_family():
    graphs = [g for n in range(1, 4) for g in four_regular_planar_oracle(n)]
    if FULL:
        graphs += [g for n in (4, 5) for g in four_regular_planar_oracle(n)]
    return graphs


def test_round_trip_on_small_family():
    for g in round_trip_family():
        t = reduce_to_b2(g)
        assert len(t) == 2 * (g.num_vertices() - 1)
        assert is_isomorphic(construct_replay(t), g)


def test_octahedron_round_trip():
    assert is_isomorphic(construct_replay(reduce_to_b2(octahedron())), octahedron())


def test_oracle_on_two_vertices():
    keys = {canonical_form(g) for g in four_regular_planar_oracle(2)}
    assert keys == {canonical_form(BUNDLE), canonical_form(LOOPED_DIGON)}


def test_looped_digon_from_b2_by_one_construction_step():
    t = Trace(bouquet(2), [Subdivide(0), Subdivide(2), Merge(1, 2)], LOOPED_DIGON)
    final = apply_trace(t)
    assert planar_embedding(final) is not None


values = [2, 3]
names = [f"n{n}" for n in values]


@pytest.mark.parametrize("n", values, ids=names)
def test_generate_needs_no_free_loop_seed(n, fresh_search_setup):
    graphs = generate_4rp(n)
    if n == 2:
        assert {canonical_form(g) for g in graphs} == {canonical_form(BUNDLE), canonical_form(LOOPED_DIGON)}
    warnings = [msg for msg, is_warning in fresh_search_setup.search_log if is_warning]
    assert warnings == []


values = [1, 2, 3] + ([4] if FULL else [])
names = [f"n{n}" for n in values]


@pytest.mark.parametrize("n", values, ids=names)
def test_generate_matches_oracle(n):
    generated = {canonical_form(g) for g in generate_4rp(n)}
    assert generated == {canonical_form(g) for g in four_regular_planar_oracle(n)}


@pytest.mark.skipif(not FULL, reason="set EULERMINOR_ACCEPTANCE=full")
def test_generate_finds_octahedron():
    assert any(is_isomorphic(g, octahedron()) for g in generate_4rp(6))


def test_generate_bounds():
    with pytest.raises(GraphError):
        generate_4rp(0)
    with pytest.raises(GraphError):
        generate_4rp(7)


values = [Subdivide(None), Subdivide(3), Merge(4, 5), Demote(0, 0, 3, (0, 1))]
records = ["subdiv free", "subdiv 3", "merge 4 5", "demote 0 0 3 witness 0 1"]
names = ["subdiv_free", "subdiv_edge", "merge", "demote"]


@pytest.mark.parametrize("op, record", list(zip(values, records)), ids=names)
def test_op_records(op, record):
    assert op.to_record() == record
    assert parse_op(record) == op


def test_bad_op_records():
    with pytest.raises(GraphFormatError):
        parse_op("subdiv")
    with pytest.raises(GraphFormatError):
        parse_op("merge 1")
