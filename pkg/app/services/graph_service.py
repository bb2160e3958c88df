"""
Coxeter Graph Service - Coxeter graph, odd graph and even closures
"""
from typing import Iterable, Optional

import networkx as nx
import structlog

from app.exceptions import NoPath, NotAnOddComponent, NotATree
from app.models.coxeter_matrix import CoxeterMatrix, NodeSet, is_even_label, is_infinite, is_odd_edge

logger = structlog.get_logger(__name__)


class CoxeterGraphService:
    """Graph views of one Coxeter matrix.

    Nodes of every networkx graph built here are indices into matrix.nodes;
    edges carry the label as attribute "m".
    """

    def __init__(self, matrix: CoxeterMatrix):
        self.matrix = matrix
        self._coxeter_graph: Optional[nx.Graph] = None
        self._odd_graph: Optional[nx.Graph] = None

    # ---- graphs -----------------------------------------------------

    @property
    def coxeter_graph(self) -> nx.Graph:
        """Edges for every pair with m >= 3, infinity included"""
        if self._coxeter_graph is None:
            graph = nx.Graph()
            graph.add_nodes_from(range(self.matrix.rank))
            for i, j, m in self.matrix.edges():
                graph.add_edge(i, j, m=m)
            self._coxeter_graph = graph
        return self._coxeter_graph

    @property
    def odd_graph(self) -> nx.Graph:
        """Coxeter graph with even and infinite edges deleted"""
        if self._odd_graph is None:
            graph = nx.Graph()
            graph.add_nodes_from(range(self.matrix.rank))
            graph.add_edges_from(
                (i, j, {"m": m}) for i, j, m in self.matrix.edges() if is_odd_edge(m)
            )
            self._odd_graph = graph
        return self._odd_graph

    def _components(self, graph: nx.Graph, subset: NodeSet) -> list[NodeSet]:
        view = graph.subgraph(subset.members)
        parts = [frozenset(c) for c in nx.connected_components(view)]
        parts.sort(key=min)
        return [NodeSet(self.matrix.nodes, part) for part in parts]

    # ---- components -------------------------------------------------

    def coxeter_components(self, subset: NodeSet) -> list[NodeSet]:
        """Connected components of the Coxeter subgraph on subset, ordered by first node"""
        return self._components(self.coxeter_graph, subset)

    def is_connected(self, subset: NodeSet) -> bool:
        return len(subset) > 0 and len(self.coxeter_components(subset)) == 1

    def odd_component(self, a: str) -> NodeSet:
        """Odd(a)"""
        i = self.matrix.index(a)
        return NodeSet(self.matrix.nodes, frozenset(nx.node_connected_component(self.odd_graph, i)))

    def odd_components(self) -> list[NodeSet]:
        return self._components(self.odd_graph, self.matrix.full_set())

    def is_odd_component(self, M: NodeSet) -> bool:
        if not M.members:
            return False
        first = M.indices[0]
        return M.members == frozenset(nx.node_connected_component(self.odd_graph, first))

    def require_odd_component(self, M: NodeSet) -> None:
        if not self.is_odd_component(M):
            raise NotAnOddComponent(f"{M!r} is not a connected component of the odd graph")

    def even_closure(self, M: NodeSet) -> NodeSet:
        """Even(M): M plus every b with m_cb even for some c in M (m = 2 counts)"""
        self.require_odd_component(M)
        extra = {
            b
            for b in range(self.matrix.rank)
            if b not in M.members and any(is_even_label(self.matrix.m(c, b)) for c in M.members)
        }
        return M.union(extra)

    def even_odd(self, a: str) -> NodeSet:
        """EOdd(a) = Even(Odd(a))"""
        return self.even_closure(self.odd_component(a))

    # ---- global properties ------------------------------------------

    def is_irreducible(self) -> bool:
        return nx.is_connected(self.coxeter_graph)

    def is_two_spherical(self) -> bool:
        """No label equals infinity"""
        return not any(is_infinite(m) for _, _, m in self.matrix.edges())

    def coxeter_adjacent(self, i: int, j: int) -> bool:
        return i != j and self.matrix.m(i, j) >= 3

    def adjacent_to_any(self, i: int, others: Iterable[int]) -> bool:
        return any(self.coxeter_adjacent(i, j) for j in others)

    # ---- trees and paths --------------------------------------------

    def odd_subgraph(self, subset: NodeSet) -> nx.Graph:
        return self.odd_graph.subgraph(subset.members)

    def is_odd_tree(self, subset: NodeSet) -> bool:
        """Odd edges inside subset form a tree spanning it"""
        if not subset.members:
            return False
        return nx.is_tree(self.odd_subgraph(subset))

    def tree_path(self, subset: NodeSet, source: int, target: int) -> list[int]:
        """Unique path source -> target using odd edges inside subset"""
        graph = self.odd_subgraph(subset)
        if source not in graph or target not in graph:
            raise NoPath(
                f"{self.matrix.nodes[source]} or {self.matrix.nodes[target]} lies outside {subset!r}"
            )
        if not nx.is_forest(graph):
            raise NotATree(f"Odd edges on {subset!r} contain a cycle; path is not unique")
        try:
            return nx.shortest_path(graph, source, target)
        except nx.NetworkXNoPath:
            raise NoPath(
                f"No path {self.matrix.nodes[source]} -> {self.matrix.nodes[target]} in {subset!r}"
            ) from None

    def odd_diameter(self, M: NodeSet) -> int:
        graph = self.odd_subgraph(M)
        return nx.diameter(graph) if len(M) > 1 else 0
