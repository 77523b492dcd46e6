"""Isotropic systems and their two constructions: from a graphic presentation
and from a 4-regular graph with a labeling of its transitions."""

from __future__ import annotations

from attrs import field, frozen

from ...errors import InvalidSystemError, UnsupportedInputError
from ..algebra.gf2 import gf2_kernel, gf2_rank, gf2_reduce
from ..eulerian.hosts import FourRegularGraph
from ..eulerian.transitions import TransitionSystem
from ..graphs.graph import Graph
from .klein import NONZERO, X, Y, Z, KVector, bilinear_form

DEFAULT_LAMBDA = (X, Y, Z)


@frozen
class IsotropicSystem:
    """``S = (V, L)`` with ``L`` a totally isotropic subspace of ``K^V`` of
    GF(2)-dimension ``|V|``.

    :param labels: the vertex set ``V``
    :param basis: packed basis vectors of ``L``
    """

    labels: tuple = field(converter=tuple)
    basis: tuple = field(converter=tuple)

    def __attrs_post_init__(self):
        n = len(self.labels)
        if gf2_rank(self.basis) != n or len(self.basis) != n:
            raise InvalidSystemError(f"subspace has dimension {gf2_rank(self.basis)}, expected {n}")
        for i, a in enumerate(self.basis):
            for b in self.basis[i + 1:]:
                if bilinear_form(a, b, n):
                    raise InvalidSystemError("subspace is not totally isotropic")

    @classmethod
    def from_vectors(cls, labels, vectors) -> "IsotropicSystem":
        """Span of packed vectors or :class:`KVector` s, reduced to a basis."""
        packed = [v.bits if isinstance(v, KVector) else v for v in vectors]
        basis = gf2_reduce(packed)
        return cls(labels, [basis[lead] for lead in sorted(basis)])

    @property
    def n(self) -> int:
        return len(self.labels)

    def elements(self) -> list:
        """All ``2^n`` members of ``L`` as :class:`KVector` s, sorted by packing."""
        members = {0}
        for vector in self.basis:
            members |= {m ^ vector for m in members}
        return [KVector.from_bits(self.labels, m) for m in sorted(members)]

    def dim_meet_hat(self, vector: KVector) -> int:
        """``dim(L n X^)`` for ``X`` without zero entries."""
        vector.require_full("X")
        return 2 * self.n - gf2_rank(list(self.basis) + vector.hat_basis())


def dim_meet_hat(system: IsotropicSystem, vector: KVector) -> int:
    return system.dim_meet_hat(vector)


def _check_presentation_vectors(graph: Graph, a: KVector, b: KVector):
    if not graph.is_simple:
        raise UnsupportedInputError("graphic presentations use simple graphs")
    a.require_full("A")
    b.require_full("B")
    for label, av, bv in zip(a.labels, a.values, b.values):
        if av == bv:
            raise InvalidSystemError(f"A and B agree at vertex {label}")


def from_graphic_presentation(graph: Graph, a: KVector = None, b: KVector = None) -> IsotropicSystem:
    """``L = {A|P + B|N(P)}`` spanned by ``A|{v} + B|N(v)``.

    :param a: defaults to ``x`` everywhere
    :param b: defaults to ``y`` everywhere
    """
    if a is None:
        a = KVector(graph.labels, [X] * graph.n)
    if b is None:
        b = KVector(graph.labels, [Y] * graph.n)
    _check_presentation_vectors(graph, a, b)
    vectors = []
    for i, label in enumerate(graph.labels):
        vectors.append((a.restrict([label]) + b.restrict(graph.labels_of(graph.adjacency[i]))).bits)
    return IsotropicSystem(graph.labels, vectors)


def graphic_presentation_check(system: IsotropicSystem, b: KVector) -> bool:
    """A graphic presentation has ``dim(L n B^) = 0``: only ``P = {}`` gives a
    member of ``L`` with every entry in ``{0, B_v}``."""
    return system.dim_meet_hat(b) == 0


def presentation_meet_a(system: IsotropicSystem, a: KVector, graph: Graph) -> tuple:
    """``dim(L n A^)`` and the GF(2) nullity of the adjacency matrix of
    ``graph``; the two agree since ``A|P`` is in ``L`` exactly when
    ``N(P)`` is empty."""
    _rank, nullity = graph.adjacency_matrix().rank_nullity()
    return system.dim_meet_hat(a), nullity


def cycle_space(host: FourRegularGraph) -> list:
    """Basis of the even-degree edge subsets, as edge bit masks."""
    rows = [0] * host.n
    for e, (u, v) in enumerate(host.edges):
        rows[u] ^= 1 << e
        rows[v] ^= 1 << e
    return gf2_kernel(rows, len(host.edges))


def _transition_label(host, labelling, v, darts) -> int:
    pair = set(darts)
    for choice in range(3):
        if any(set(p) == pair for p in host.pairing(v, choice)):
            return labelling[v][choice]
    raise InvalidSystemError("edge subset induces no transition")  # unreachable on valid hosts


def _normalize_labelling(host: FourRegularGraph, labelling) -> list:
    if labelling is None:
        labelling = [DEFAULT_LAMBDA] * host.n
    elif len(labelling) == 3 and all(isinstance(v, int) for v in labelling):
        labelling = [tuple(labelling)] * host.n
    labelling = [tuple(lam) for lam in labelling]
    if len(labelling) != host.n:
        raise InvalidSystemError("one transition labelling per vertex is required")
    for lam in labelling:
        if sorted(lam) != list(NONZERO):
            raise InvalidSystemError(f"transition labelling {lam} is not a bijection onto x, y, z")
    return labelling


def lambda_map(host: FourRegularGraph, edge_mask: int, labelling=None) -> KVector:
    """``Lambda(F)`` of an even edge subset: 0 where ``F`` has degree 0 or 4,
    the label of the induced transition where it has degree 2."""
    labelling = _normalize_labelling(host, labelling)
    values = []
    for v, darts in enumerate(host.vertex_darts):
        inside = [d for d in darts if edge_mask >> (d >> 1) & 1]
        values.append(_transition_label(host, labelling, v, inside) if len(inside) == 2 else 0)
    return KVector(host.labels, values)


def transition_vector(system: TransitionSystem, labelling=None) -> KVector:
    """``Lambda(T)``: the label of the chosen transition at every vertex."""
    labelling = _normalize_labelling(system.host, labelling)
    return KVector(
        system.host.labels, [labelling[v][choice] for v, choice in enumerate(system.choices)]
    )


def from_four_regular(host: FourRegularGraph, labelling=None) -> IsotropicSystem:
    """Image of the cycle space under ``Lambda``.

    :param labelling: per vertex, the labels of pairings 0, 1, 2; a single
        triple applies to every vertex and the default is ``(x, y, z)``
    """
    labelling = _normalize_labelling(host, labelling)
    images = [lambda_map(host, cycle, labelling).bits for cycle in cycle_space(host)]
    return IsotropicSystem.from_vectors(host.labels, images)
