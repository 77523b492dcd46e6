import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from interlacepy.core.algebra.polynomial import IntPoly1, IntPoly2
from interlacepy.core.delta.matroid import (
    cycle_matroid,
    tutte_matroid,
    tutte_rank_sum,
    uniform_matroid,
)
from interlacepy.core.delta.polynomials import (
    delta_evaluations,
    dual_pivot_evaluation,
    q_bar,
    q_bar_printed,
    q_bar_recursive,
    q_bar_relation_sides,
    q_delta,
    q_delta_global,
    q_delta_global_recursive,
    q_delta_recursive,
    q_delta_twist_sides,
)
from interlacepy.core.delta.set_system import SetSystem, adjacency_delta_matroid, is_vf_safe
from interlacepy.core.graphs.graph import Graph
from interlacepy.core.interlace.statesum import Q_statesum, q_nullity_statesum, q_twovar_statesum
from interlacepy.errors import (
    InvalidIndexError,
    NotAMatroidError,
    UndefinedDistanceError,
    UnsupportedInputError,
)

from .strategies import graphs, set_systems


@st.composite
def binary_systems(draw, max_n=4):
    graph = draw(graphs(min_n=1, max_n=max_n, loops=True))
    twisted = draw(st.lists(st.sampled_from(graph.labels), unique=True))
    return adjacency_delta_matroid(graph).twist(twisted)


# set systems


def test_example_system(example_system):
    assert example_system.is_delta_matroid()
    assert str(example_system) == "(abc, {{}, b, c, ab, ac, bc, abc})"
    assert example_system.loops() == ()
    assert example_system.coloops() == ()
    assert example_system.distance(["a"]) == 1
    complemented = example_system.loop_complement(["a"])
    assert complemented == SetSystem.from_sets("abc", ["a", "b", "c", "bc", ""])
    assert not complemented.is_delta_matroid()
    assert is_vf_safe(example_system) is False


def test_construction_errors():
    with pytest.raises(InvalidIndexError):
        SetSystem.from_sets("ab", ["ac"])
    with pytest.raises(UnsupportedInputError):
        SetSystem("a", [0b10])
    assert not SetSystem("", [0]).is_delta_matroid()


def test_minors_of_loops_and_coloops():
    coloop = SetSystem.from_sets("ab", ["a", "ab"])
    assert coloop.is_coloop("a")
    assert coloop.delete("a") == SetSystem.from_sets("b", ["", "b"])
    loop = SetSystem.from_sets("ab", ["", "b"])
    assert loop.is_loop("a")
    assert loop.contract("a") == SetSystem.from_sets("b", ["", "b"])
    assert loop.delete("b") == SetSystem.from_sets("a", [""])


def test_twist_and_dual_pivot(example_system):
    twisted = example_system.twist(["a"])
    assert ("a",) in twisted.sets()
    assert twisted.twist(["a"]) == example_system
    for e in example_system.ground:
        assert example_system.dual_pivot([e]) == example_system.twist([e]).loop_complement([e]).twist([e])
        assert example_system.dual_pivot([e]) == (
            example_system.loop_complement([e]).twist([e]).loop_complement([e])
        )


def test_apply_op(example_system):
    assert example_system.apply_op("twist", "a") == example_system.twist(["a"])
    assert example_system.apply_op("delete", "b") == example_system.delete("b")
    assert example_system.apply_op("loop_complement", ["a", "b"]) == example_system.loop_complement("ab")
    with pytest.raises(ValueError):
        example_system.apply_op("shuffle", "a")


def test_distance_without_feasible_sets():
    empty = SetSystem("ab", [])
    with pytest.raises(UndefinedDistanceError):
        empty.distance(["a"])
    with pytest.raises(UndefinedDistanceError):
        empty.distances()
    with pytest.raises(UndefinedDistanceError):
        q_delta(empty)


def test_vf_safety_bounds(m_k2):
    assert is_vf_safe(m_k2) is True
    assert is_vf_safe(uniform_matroid(1, 5), max_n=4) is None


@given(graphs(max_n=5, loops=True), st.data())
def test_adjacency_matroid_minors(graph, data):
    system = adjacency_delta_matroid(graph)
    assert system.is_proper or graph.n == 0
    assert 0 in system.feasible
    subset = data.draw(st.lists(st.sampled_from(graph.labels), unique=True)) if graph.n else []
    assert adjacency_delta_matroid(graph.loop_complement(subset)) == system.loop_complement(subset)
    if graph.adjacency_matrix().is_invertible(subset):
        assert adjacency_delta_matroid(graph.principal_pivot(subset)) == system.twist(subset)


@given(set_systems())
def test_twist_preserves_delta_matroids(system):
    twisted = system.twist(system.ground[:1])
    assert twisted.is_delta_matroid() == system.is_delta_matroid()


# polynomials


def test_polynomials_of_k2_matroid(m_k2):
    assert m_k2.sets() == [(), ("0", "1")]
    assert q_delta(m_k2) == IntPoly1.from_dense([2, 2])
    assert q_delta_recursive(m_k2) == q_delta(m_k2)
    assert q_delta_global(m_k2) == IntPoly1.from_dense([6, 3])
    assert q_delta_global_recursive(m_k2) == q_delta_global(m_k2)
    assert q_bar(m_k2) == IntPoly2({(0, 0): 1, (1, 1): 2, (2, 0): 1})
    assert q_bar_recursive(m_k2) == q_bar(m_k2)
    assert str(q_bar_printed(m_k2)) == "x^2 + 2xy - 2x + 1"


def test_graph_relations_on_k2(k2, m_k2):
    assert q_delta(m_k2).substitute_shift(-1) == q_nullity_statesum(k2)
    assert q_delta_global(m_k2).substitute_shift(-2) == Q_statesum(k2)
    left, right = q_bar_relation_sides(m_k2, q_twovar_statesum(k2))
    assert left == right
    assert str(left) == "x^2 - 2x + 2y"


def test_twist_recurrence(m_k2, example_system):
    left, right = q_delta_twist_sides(m_k2, ["0", "1"], "0")
    assert left == right
    with pytest.raises(UnsupportedInputError):
        q_delta_twist_sides(m_k2, ["0"], "0")
    with pytest.raises(UnsupportedInputError):
        q_delta_twist_sides(SetSystem.from_sets("ab", ["a"]), ["a"], "a")
    with pytest.raises(InvalidIndexError):
        q_delta_twist_sides(example_system, ["b"], "c")


def test_evaluations_of_k2_matroid(m_k2):
    evaluations = delta_evaluations(m_k2, binary=True)
    assert [e.name for e in evaluations] == [
        "q_delta(1) = 2^n",
        "q_delta(0) = |F|",
        "q_delta(-1) = 0 for equal parity",
        "Q_delta(-2) = 0 for vf-safe",
        "q_delta(2) = odd * q_delta(-2) for binary",
    ]
    assert all(e.holds for e in evaluations)


def test_evaluations_skip_vf_identity_when_unsafe(example_system):
    names = [e.name for e in delta_evaluations(example_system)]
    assert "Q_delta(-2) = 0 for vf-safe" not in names
    assert "q_delta(1) = 2^n" in names


def test_dual_pivot_evaluation(m_k2):
    report = dual_pivot_evaluation(m_k2)
    assert report["q_delta(-2)"] == -2
    for reading in report["readings"].values():
        assert reading["distance"] == 1
        assert reading["holds"]


@given(binary_systems())
def test_recursions_match_subset_sums(system):
    assert q_delta_recursive(system) == q_delta(system)
    assert q_bar_recursive(system) == q_bar(system)


@settings(max_examples=30)
@given(binary_systems(max_n=3))
def test_global_recursion_matches_subset_sum(system):
    assert q_delta_global_recursive(system) == q_delta_global(system)


@settings(max_examples=30)
@given(binary_systems())
def test_binary_evaluations_hold(system):
    for evaluation in delta_evaluations(system, binary=True):
        assert evaluation.holds, evaluation


@given(graphs(max_n=5, loops=True))
def test_graph_polynomials_from_delta_matroids(graph):
    system = adjacency_delta_matroid(graph)
    assert q_delta(system).substitute_shift(-1) == q_nullity_statesum(graph)
    left, right = q_bar_relation_sides(system, q_twovar_statesum(graph))
    assert left == right


# matroids


def test_uniform_matroids():
    assert tutte_matroid(uniform_matroid(1, 2)) == IntPoly2({(1, 0): 1, (0, 1): 1})
    assert tutte_matroid(uniform_matroid(0, 2)) == IntPoly2.monomial(0, 2)
    for m in range(5):
        for k in range(m + 1):
            matroid = uniform_matroid(k, m)
            assert tutte_matroid(matroid) == tutte_rank_sum(matroid)
            assert tutte_matroid(matroid).diagonal() == q_delta(matroid).substitute_shift(-1)
    with pytest.raises(UnsupportedInputError):
        uniform_matroid(3, 2)


def test_cycle_matroids(p3, k3):
    assert tutte_matroid(cycle_matroid(p3)) == IntPoly2.monomial(2, 0)
    assert tutte_matroid(cycle_matroid(k3)) == IntPoly2({(2, 0): 1, (1, 0): 1, (0, 1): 1})
    assert cycle_matroid(p3).ground == ("0-1", "1-2")
    with pytest.raises(UnsupportedInputError):
        cycle_matroid(Graph.empty(2))
    with pytest.raises(UnsupportedInputError):
        cycle_matroid(p3.loop_complement(["0"]))


def test_not_a_matroid(example_system):
    with pytest.raises(NotAMatroidError):
        tutte_matroid(example_system)
    with pytest.raises(NotAMatroidError):
        tutte_rank_sum(SetSystem.from_sets("abcd", ["ab", "cd"]))
    with pytest.raises(NotAMatroidError):
        tutte_matroid(SetSystem("a", []))
