"""Tutte diagonal of plane graphs against the Martin polynomial of the
oriented medial graph and the interlace polynomial of its circle graphs."""

from __future__ import annotations

from ..core.algebra.polynomial import IntPoly1
from ..core.eulerian.circuits import euler_circuits, interlace_graph
from ..core.eulerian.martin import martin
from ..core.interlace.statesum import q_nullity_statesum
from ..core.plane.medial import oriented_medial
from ..core.plane.plane_graph import cycle_plane, k4_plane, path_plane, theta_plane
from ..core.plane.tutte import tutte_diagonal
from .results import SuiteRecorder


def plane_corpus(max_edges: int) -> dict:
    """Connected plane graphs with at most ``max_edges`` edges, by name."""
    corpus = {f"C{n}": cycle_plane(n) for n in range(1, 7)}
    corpus.update({f"P{m + 1}": path_plane(m) for m in range(1, 4)})
    corpus["theta"] = theta_plane()
    corpus["K4"] = k4_plane()
    return {name: plane for name, plane in corpus.items() if len(plane.edges) <= max_edges}


def run_suite(rng, settings: dict, caps: dict) -> list:
    """Run the plane battery; the corpus is fixed, ``rng`` is unused.

    :param settings: ``max_edges``
    """
    rec = SuiteRecorder("plane")
    rec.check("t(K3; x, x) = x^2 + 2x", "C3", tutte_diagonal(cycle_plane(3)), IntPoly1.from_dense([0, 2, 1]))
    for name, plane in plane_corpus(settings["max_edges"]).items():
        diagonal = tutte_diagonal(plane)
        medial = oriented_medial(plane)
        rec.check("medial has one vertex per edge", name, medial.n, len(plane.edges))
        rec.check("t(G; x, x) = m(medial; x)", name, martin(medial, caps["transition_cap"]), diagonal)
        for k, circuit in enumerate(euler_circuits(medial, caps["circuit_cap"])):
            rec.check("t(G; x, x) = q_N(H(C); x)", f"{name}/C{k}",
                      q_nullity_statesum(interlace_graph(circuit)), diagonal)
    return rec.results
