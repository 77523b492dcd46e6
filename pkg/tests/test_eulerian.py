import pytest

from interlacepy.checks.generators import make_rng, random_digraph_host, random_host
from interlacepy.core.algebra.polynomial import IntPoly1
from interlacepy.core.eulerian.circuits import (
    EulerianCircuit,
    euler_circuits,
    interlace_graph,
    transpose,
    transposition_orbit,
)
from interlacepy.core.eulerian.hosts import FourRegularGraph, TwoInTwoOutDigraph
from interlacepy.core.eulerian.martin import (
    classify_vertices,
    cohn_lempel_check,
    eulerian_system_count,
    eulerian_systems,
    martin,
)
from interlacepy.core.eulerian.transitions import TransitionSystem, enumerate_transitions, inconsistent_system
from interlacepy.core.graphs.graph import Graph
from interlacepy.core.interlace.statesum import Q_statesum, q_nullity_statesum
from interlacepy.errors import HostValidationError, InvalidIndexError, NotInterlacedError, ResourceLimitError


@pytest.fixture(scope="module")
def word_aabb():
    return TwoInTwoOutDigraph.from_edges("ab", [("a", "a"), ("a", "b"), ("b", "b"), ("b", "a")])


def test_two_loops_circuit_counts(two_loops):
    assert sorted(count for _system, count in enumerate_transitions(two_loops)) == [1, 2]
    undirected = two_loops.as_undirected()
    assert sorted(count for _system, count in enumerate_transitions(undirected)) == [1, 1, 2]
    assert martin(two_loops) == IntPoly1.monomial(1)
    assert martin(undirected) == IntPoly1.monomial(1)
    assert len(euler_circuits(two_loops)) == 1


def test_inconsistent_system_of_two_loops(two_loops):
    system = inconsistent_system(two_loops)
    assert not system.is_consistent()
    assert system.circuit_count() == 1


def test_host_validation():
    with pytest.raises(HostValidationError):
        FourRegularGraph.from_edges("ab", [("a", "b")])
    with pytest.raises(HostValidationError):
        TwoInTwoOutDigraph.from_edges("ab", [("a", "b"), ("a", "b"), ("a", "a"), ("b", "b")])
    with pytest.raises(InvalidIndexError):
        FourRegularGraph.from_edges("a", [("a", "a"), ("a", "c")])


def test_host_validation_messages():
    with pytest.raises(HostValidationError, match="vertex b has degree 2, expected 4"):
        FourRegularGraph.from_edges("ab", [("a", "a"), ("a", "b"), ("a", "b")])
    # the degree condition comes first for digraphs too
    with pytest.raises(HostValidationError, match="degree 2, expected 4"):
        TwoInTwoOutDigraph.from_edges("ab", [("a", "a"), ("a", "b"), ("b", "a")])
    with pytest.raises(HostValidationError, match="vertex a has outdegree 3, expected 2"):
        TwoInTwoOutDigraph.from_edges("ab", [("a", "b"), ("a", "b"), ("a", "a"), ("b", "b")])


def test_transition_system_needs_one_pairing_per_vertex(two_loops):
    with pytest.raises(HostValidationError):
        TransitionSystem(two_loops, ())


def test_circuit_needs_one_circuit_per_component(two_loops):
    split = next(system for system, count in enumerate_transitions(two_loops) if count == 2)
    with pytest.raises(HostValidationError):
        EulerianCircuit.from_transition_system(split)


def test_euler_circuits_rejects_undirected_and_disconnected(two_loops):
    with pytest.raises(HostValidationError):
        euler_circuits(two_loops.as_undirected())
    disconnected = TwoInTwoOutDigraph.from_edges("ab", [("a", "a"), ("a", "a"), ("b", "b"), ("b", "b")])
    with pytest.raises(HostValidationError):
        euler_circuits(disconnected)
    assert eulerian_system_count(disconnected) == 1
    assert martin(disconnected) == IntPoly1.monomial(2)


def test_interlaced_host(interlaced_host):
    circuits = euler_circuits(interlaced_host)
    assert len(circuits) == 2
    for circuit in circuits:
        assert circuit.words() == (("a", "b", "a", "b"),)
        assert interlace_graph(circuit) == Graph.complete(2, labels="ab")
    assert martin(interlaced_host) == IntPoly1.monomial(1, 2)
    undirected = interlaced_host.as_undirected()
    assert martin(undirected) == IntPoly1.monomial(1, 3)
    system = next(eulerian_systems(undirected))
    assert Q_statesum(interlace_graph(system)) == martin(undirected)


def test_transpose(interlaced_host):
    first, second = euler_circuits(interlaced_host)
    assert transpose(first, "a", "b") == second
    assert transposition_orbit(first) == {first, second}


def test_word_aabb(word_aabb):
    (circuit,) = euler_circuits(word_aabb)
    assert str(circuit) == "a a b b"
    assert interlace_graph(circuit) == Graph.empty(2, labels="ab")
    with pytest.raises(NotInterlacedError):
        transpose(circuit, "a", "b")


def test_classify_vertices_of_own_system(interlaced_host):
    circuit = euler_circuits(interlaced_host)[0]
    classes = classify_vertices(circuit, circuit.transition_system())
    assert classes == {"W": ["a", "b"], "Y": [], "Z": []}


def test_transition_cap(interlaced_host):
    with pytest.raises(ResourceLimitError) as excinfo:
        martin(interlaced_host.as_undirected(), cap=8)
    assert excinfo.value.cap_name == "transition_cap"


@pytest.mark.parametrize("seed", range(5))
def test_martin_equals_interlace_of_circle_graphs(seed):
    rng = make_rng(seed)
    host = random_digraph_host(rng, int(rng.integers(1, 5)))
    m = martin(host)
    circuits = euler_circuits(host)
    assert len(circuits) == m.evaluate(1)
    for circuit in circuits:
        assert q_nullity_statesum(interlace_graph(circuit)) == m
    assert transposition_orbit(circuits[0]) == set(circuits)


@pytest.mark.parametrize("seed", range(5))
def test_circuit_partition_nullity(seed):
    rng = make_rng(seed)
    host = random_host(rng, int(rng.integers(1, 4)))
    circuit = next(eulerian_systems(host))
    for system, _count in enumerate_transitions(host):
        lhs, rhs = cohn_lempel_check(circuit, system)
        assert lhs == rhs
