"""
Coxeter matrix and node-set models
"""
import math
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence, Union

from app.exceptions import InputError, UnknownNode

Label = Union[int, float]

# Distinct sentinel for m_ab = infinity; never a large integer
INFINITY: Label = math.inf


def is_infinite(m: Label) -> bool:
    return m == INFINITY


def is_even_label(m: Label) -> bool:
    """Even in the odd-graph sense: finite and even, so m = 2 counts"""
    return not is_infinite(m) and m % 2 == 0


def is_odd_edge(m: Label) -> bool:
    """Edge that survives in the odd graph"""
    return not is_infinite(m) and m >= 3 and m % 2 == 1


def format_label(m: Label) -> str:
    return "inf" if is_infinite(m) else str(int(m))


@dataclass(frozen=True)
class NodeSet:
    """Subset of the node list of one Coxeter matrix, stored by index"""

    universe: tuple[str, ...]
    members: frozenset[int]

    @property
    def indices(self) -> tuple[int, ...]:
        return tuple(sorted(self.members))

    def names(self) -> list[str]:
        return [self.universe[i] for i in self.indices]

    def __iter__(self) -> Iterator[int]:
        return iter(self.indices)

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, item: object) -> bool:
        if isinstance(item, str):
            return item in self.universe and self.universe.index(item) in self.members
        return item in self.members

    def _coerce(self, other: Union["NodeSet", Iterable[int]]) -> frozenset[int]:
        if isinstance(other, NodeSet):
            if other.universe != self.universe:
                raise InputError("Node sets belong to different matrices")
            return other.members
        return frozenset(other)

    def union(self, other: Union["NodeSet", Iterable[int]]) -> "NodeSet":
        return NodeSet(self.universe, self.members | self._coerce(other))

    def difference(self, other: Union["NodeSet", Iterable[int]]) -> "NodeSet":
        return NodeSet(self.universe, self.members - self._coerce(other))

    def intersection(self, other: Union["NodeSet", Iterable[int]]) -> "NodeSet":
        return NodeSet(self.universe, self.members & self._coerce(other))

    def issubset(self, other: Union["NodeSet", Iterable[int]]) -> bool:
        return self.members <= self._coerce(other)

    def __repr__(self) -> str:
        return "{" + ", ".join(self.names()) + "}"


@dataclass(frozen=True)
class CoxeterMatrix:
    """Symmetric label matrix m_ab over an ordered node list.

    Construction does not validate; call validate() (or use from_edges,
    which validates) before analysing a matrix of unknown provenance.
    """

    nodes: tuple[str, ...]
    labels: tuple[tuple[Label, ...], ...]
    _index: dict[str, int] = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "_index", {name: i for i, name in enumerate(self.nodes)})

    @classmethod
    def from_edges(
        cls,
        nodes: Sequence[str],
        edges: Iterable[tuple[str, str, Label]],
    ) -> "CoxeterMatrix":
        """Build from an edge list; unlisted pairs default to m = 2"""
        nodes = tuple(nodes)
        index = {name: i for i, name in enumerate(nodes)}
        n = len(nodes)
        rows = [[1 if i == j else 2 for j in range(n)] for i in range(n)]
        for u, v, m in edges:
            if u not in index:
                raise UnknownNode(u)
            if v not in index:
                raise UnknownNode(v)
            i, j = index[u], index[v]
            rows[i][j] = m
            rows[j][i] = m
        matrix = cls(nodes, tuple(tuple(row) for row in rows))
        matrix.validate()
        return matrix

    @property
    def rank(self) -> int:
        return len(self.nodes)

    def validate(self) -> None:
        """Raise InputError naming the first violated invariant"""
        n = len(self.nodes)
        if n < 1:
            raise InputError("A Coxeter matrix needs at least one node")
        if len(set(self.nodes)) != n:
            seen: set[str] = set()
            for name in self.nodes:
                if name in seen:
                    raise InputError(f"Duplicate node name {name!r}")
                seen.add(name)
        if len(self.labels) != n or any(len(row) != n for row in self.labels):
            raise InputError(f"Label matrix must be {n}x{n}")
        # every entry is typed before any pair is compared
        for i in range(n):
            for j in range(n):
                m = self.labels[i][j]
                if isinstance(m, bool) or not (
                    isinstance(m, int) or (isinstance(m, float) and is_infinite(m))
                ):
                    pair = (self.nodes[i], self.nodes[j])
                    raise InputError(f"Label {m!r} for {pair} is not an integer or inf", pair)
        for i in range(n):
            for j in range(n):
                m = self.labels[i][j]
                pair = (self.nodes[i], self.nodes[j])
                if i == j:
                    if m != 1:
                        raise InputError(f"Diagonal entry m({pair[0]},{pair[0]}) must be 1", pair)
                    continue
                if m != self.labels[j][i]:
                    raise InputError(
                        f"Asymmetric labels: m{pair}={format_label(m)} but "
                        f"m{pair[::-1]}={format_label(self.labels[j][i])}",
                        pair,
                    )
                if m < 2:
                    raise InputError(f"Off-diagonal label m{pair} must be at least 2", pair)

    def index(self, node: str) -> int:
        try:
            return self._index[node]
        except KeyError:
            raise UnknownNode(node) from None

    def m(self, i: int, j: int) -> Label:
        return self.labels[i][j]

    def label(self, a: str, b: str) -> Label:
        return self.labels[self.index(a)][self.index(b)]

    def node_set(self, names: Iterable[str] = ()) -> NodeSet:
        return NodeSet(self.nodes, frozenset(self.index(name) for name in names))

    def index_set(self, indices: Iterable[int]) -> NodeSet:
        return NodeSet(self.nodes, frozenset(indices))

    def full_set(self) -> NodeSet:
        return NodeSet(self.nodes, frozenset(range(self.rank)))

    def edges(self) -> Iterator[tuple[int, int, Label]]:
        """Coxeter graph edges (m >= 3) as index pairs i < j"""
        for i in range(self.rank):
            for j in range(i + 1, self.rank):
                if self.labels[i][j] >= 3:
                    yield i, j, self.labels[i][j]

    def permuted(self, order: Sequence[str]) -> "CoxeterMatrix":
        """Same matrix with the node list reordered"""
        idx = [self.index(name) for name in order]
        if sorted(idx) != list(range(self.rank)):
            raise InputError("Permutation must list every node exactly once")
        rows = tuple(tuple(self.labels[i][j] for j in idx) for i in idx)
        return CoxeterMatrix(tuple(order), rows)
