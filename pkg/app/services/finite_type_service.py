"""
Finite Type Service - sphericity by classification of connected diagrams
"""
from itertools import combinations
from typing import Iterator, Optional

import networkx as nx
import structlog

from app.exceptions import NotConnected
from app.models.coxeter_matrix import CoxeterMatrix, NodeSet, is_infinite
from app.models.finite_type import Family, FiniteType
from app.services.graph_service import CoxeterGraphService

logger = structlog.get_logger(__name__)

# Sorted arm lengths (p, q, r) around the branch node of an E diagram
_E_ARMS = {(1, 2, 2): 6, (1, 2, 3): 7, (1, 2, 4): 8}


class FiniteTypeService:
    """Service classifying subsets of one Coxeter matrix against the finite-type list"""

    def __init__(self, matrix: CoxeterMatrix, graph: Optional[CoxeterGraphService] = None):
        self.matrix = matrix
        self.graph = graph or CoxeterGraphService(matrix)
        self._cache: dict[frozenset[int], FiniteType] = {}

    def classify_connected(self, subset: NodeSet) -> FiniteType:
        """Finite type of a connected subset, or NotFinite"""
        if not self.graph.is_connected(subset):
            raise NotConnected(f"{subset!r} is not connected in the Coxeter graph")
        cached = self._cache.get(subset.members)
        if cached is None:
            cached = self._classify(subset)
            self._cache[subset.members] = cached
            logger.debug("classified", subset=subset.names(), type=cached.name)
        return cached

    def _classify(self, subset: NodeSet) -> FiniteType:
        n = len(subset)
        not_finite = FiniteType(Family.NOT_FINITE, n)
        if n == 1:
            return FiniteType(Family.A, 1)

        graph = self.graph.coxeter_graph.subgraph(subset.members)
        labels = [m for _, _, m in graph.edges(data="m")]
        if any(is_infinite(m) for m in labels):
            return not_finite
        if n == 2:
            return FiniteType.dihedral(int(labels[0]))
        if graph.number_of_edges() != n - 1 or any(m > 5 for m in labels):
            return not_finite

        degrees = dict(graph.degree())
        branch = [v for v, d in degrees.items() if d >= 3]
        if not branch:
            ends = sorted(v for v, d in degrees.items() if d == 1)
            path = nx.shortest_path(graph, ends[0], ends[1])
            along = [int(graph.edges[u, v]["m"]) for u, v in zip(path, path[1:])]
            return self._classify_path(along, n)

        if len(branch) > 1 or degrees[branch[0]] > 3 or any(m != 3 for m in labels):
            return not_finite
        centre = branch[0]
        rest = graph.subgraph(set(subset.members) - {centre})
        arms = tuple(sorted(len(c) for c in nx.connected_components(rest)))
        if arms[0] == 1 and arms[1] == 1:
            return FiniteType(Family.D, n)
        if arms in _E_ARMS:
            return FiniteType(Family.E, _E_ARMS[arms])
        return not_finite

    @staticmethod
    def _classify_path(labels: list[int], n: int) -> FiniteType:
        special = [(k, m) for k, m in enumerate(labels) if m != 3]
        if not special:
            return FiniteType(Family.A, n)
        if len(special) > 1:
            return FiniteType(Family.NOT_FINITE, n)
        k, m = special[0]
        at_end = k in (0, len(labels) - 1)
        if m == 4 and at_end:
            return FiniteType(Family.B, n)
        if m == 4 and n == 4 and k == 1:
            return FiniteType(Family.F, 4)
        if m == 5 and at_end and n in (3, 4):
            return FiniteType(Family.H, n)
        return FiniteType(Family.NOT_FINITE, n)

    def classify(self, subset: NodeSet) -> list[tuple[NodeSet, FiniteType]]:
        """classify_connected applied to every Coxeter component of subset"""
        return [(comp, self.classify_connected(comp)) for comp in self.graph.coxeter_components(subset)]

    def is_spherical(self, subset: NodeSet) -> bool:
        return all(t.is_finite for _, t in self.classify(subset))

    def spherical_components(self, subset: NodeSet) -> list[NodeSet]:
        return [comp for comp, t in self.classify(subset) if t.is_finite]

    def is_minus_one_type(self, subset: NodeSet) -> bool:
        """W_I finite with central longest element"""
        return all(t.is_finite and t.is_minus_one_type for _, t in self.classify(subset))

    def is_k_spherical(self, k: int) -> bool:
        """Every k-element subset of the node set is spherical"""
        return all(
            self.is_spherical(self.matrix.index_set(combo))
            for combo in combinations(range(self.matrix.rank), k)
        )

    def spherical_subsets(self) -> Iterator[NodeSet]:
        """Every spherical subset, the empty set first; sphericity is inherited by subsets"""
        rank = self.matrix.rank

        def extend(current: frozenset[int], start: int) -> Iterator[frozenset[int]]:
            yield current
            for i in range(start, rank):
                candidate = current | {i}
                if self.is_spherical(self.matrix.index_set(candidate)):
                    yield from extend(candidate, i + 1)

        for members in extend(frozenset(), 0):
            yield self.matrix.index_set(members)

    def maximal_spherical_subsets(self) -> list[NodeSet]:
        """Spherical J maximal under inclusion; each W_J is a maximal finite subgroup"""
        rank = self.matrix.rank
        maximal = []
        for subset in self.spherical_subsets():
            if not subset.members:
                continue
            if not any(
                self.is_spherical(subset.union([j]))
                for j in range(rank)
                if j not in subset.members
            ):
                maximal.append(subset)
        maximal.sort(key=lambda s: s.indices)
        logger.debug("maximal_spherical_subsets", subsets=[s.names() for s in maximal])
        return maximal
