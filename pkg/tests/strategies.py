"""Hypothesis strategies for the property tests."""

from hypothesis import strategies as st

from interlacepy.core.algebra.polynomial import IntPoly1
from interlacepy.core.delta.set_system import SetSystem
from interlacepy.core.graphs.graph import Graph


@st.composite
def graphs(draw, min_n=0, max_n=6, loops=False):
    n = draw(st.integers(min_n, max_n))
    labels = [str(i) for i in range(n)]
    pairs = [(u, v) for i, u in enumerate(labels) for v in labels[i + 1:]]
    edges = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    looped = draw(st.lists(st.sampled_from(labels), unique=True)) if loops and labels else []
    return Graph.from_edges(labels, edges, looped)


@st.composite
def symmetric_matrices(draw, max_n=6):
    graph = draw(graphs(max_n=max_n, loops=True))
    return graph.adjacency_matrix()


@st.composite
def set_systems(draw, min_n=1, max_n=4):
    n = draw(st.integers(min_n, max_n))
    masks = draw(st.sets(st.integers(0, (1 << n) - 1), min_size=1))
    return SetSystem([str(i) for i in range(n)], masks)


def polynomials(max_degree=5):
    coefficients = st.lists(st.integers(-20, 20), max_size=max_degree + 1)
    return coefficients.map(IntPoly1.from_dense)
