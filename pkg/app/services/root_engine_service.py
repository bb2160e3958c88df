"""
Root Engine Service - exact reflection representation and group enumeration
"""
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Optional, Sequence

import structlog

from app.config import get_settings
from app.exceptions import BadArguments, BudgetExceeded, CoxeterError, DepthExceeded, NotSpherical
from app.models.coxeter_matrix import CoxeterMatrix, NodeSet
from app.models.roots import BilinearForm, GroupElement, Root
from app.services.finite_type_service import FiniteTypeService

logger = structlog.get_logger(__name__)


def _root_order(root: Root) -> tuple:
    return len(root.support), sorted(root.support), [str(c) for c in root.coords]


@dataclass
class Enumeration:
    """Group elements of length <= max_length, each with one reduced word"""

    rank: int
    max_length: int
    generators: tuple[int, ...]
    elements: list[GroupElement] = field(default_factory=list)
    words: list[tuple[int, ...]] = field(default_factory=list)
    inverses: list[GroupElement] = field(default_factory=list, repr=False)
    saturated: bool = False
    _index: dict[GroupElement, int] = field(default_factory=dict, repr=False)

    def add(self, element: GroupElement, word: tuple[int, ...], inverse: GroupElement) -> None:
        self._index[element] = len(self.elements)
        self.elements.append(element)
        self.words.append(word)
        self.inverses.append(inverse)

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[GroupElement]:
        return iter(self.elements)

    def __contains__(self, element: object) -> bool:
        return element in self._index

    def word_of(self, element: GroupElement) -> tuple[int, ...]:
        return self.words[self._index[element]]

    def inverse_of(self, element: GroupElement) -> GroupElement:
        return self.inverses[self._index[element]]

    def length_of(self, element: GroupElement) -> int:
        return len(self.word_of(element))

    def of_length(self, length: int) -> list[GroupElement]:
        return [w for w, word in zip(self.elements, self.words) if len(word) == length]

    def element_set(self) -> frozenset[GroupElement]:
        return frozenset(self.elements)


@dataclass(frozen=True)
class ReducedForm:
    """Length, a reduced word and the inversion set N(w) of a group element"""

    length: int
    word: tuple[int, ...]
    inversions: tuple[Root, ...]


class RootEngineService:
    """Service for exact computations in the reflection representation of W"""

    def __init__(
        self,
        matrix: CoxeterMatrix,
        max_length: Optional[int] = None,
        element_cap: Optional[int] = None,
        sign_dps: Optional[int] = None,
        finite_types: Optional[FiniteTypeService] = None,
    ):
        settings = get_settings()
        self.matrix = matrix
        self.form = BilinearForm.from_matrix(matrix)
        self.max_length = max_length if max_length is not None else settings.max_length
        self.element_cap = element_cap if element_cap is not None else settings.element_cap
        self.sign_dps = sign_dps if sign_dps is not None else settings.sign_precision_dps
        self.finite_types = finite_types or FiniteTypeService(matrix)
        self._enumerations: dict[tuple[tuple[int, ...], int], Enumeration] = {}
        self._subgroups: dict[frozenset[int], Enumeration] = {}
        self._positive_roots: dict[frozenset[int], list[Root]] = {}

    @property
    def rank(self) -> int:
        return self.matrix.rank

    # ---- basic objects ----------------------------------------------

    def identity(self) -> GroupElement:
        return GroupElement.identity(self.rank)

    def simple_root(self, a: str) -> Root:
        return Root.simple(self.rank, self.matrix.index(a))

    def simple_reflection(self, a: str) -> GroupElement:
        return GroupElement.simple_reflection(self.form, self.matrix.index(a))

    def reflection_along(self, root: Root) -> GroupElement:
        return GroupElement.reflection_along(self.form, root)

    def apply(self, w: GroupElement, root: Root) -> Root:
        return w.apply(root)

    def from_word(self, word: Iterable[int]) -> GroupElement:
        """r_{s1} r_{s2} ... r_{sk}"""
        w = self.identity()
        for s in word:
            w = w.times_simple(self.form, s)
        return w

    def from_names(self, names: Iterable[str]) -> GroupElement:
        return self.from_word(self.matrix.index(a) for a in names)

    def inverse_from_word(self, word: Sequence[int]) -> GroupElement:
        return self.from_word(reversed(word))

    def is_positive(self, root: Root) -> bool:
        """Sign of a root; every root is entirely >= 0 or entirely <= 0"""
        return root.leading_sign(self.sign_dps) > 0

    def _column_positive(self, w: GroupElement, s: int) -> bool:
        for x in w.columns[s]:
            if x:
                return x.sign(self.sign_dps) > 0
        return False

    def has_right_descent(self, w: GroupElement, s: int) -> bool:
        """l(w r_s) < l(w), i.e. w e_s is negative"""
        return not self._column_positive(w, s)

    # ---- enumeration ------------------------------------------------

    def enumerate(self, max_length: Optional[int] = None, generators: Optional[Iterable[int]] = None) -> Enumeration:
        """Breadth-first enumeration of all elements of length <= max_length.

        Raises BudgetExceeded, carrying the partial enumeration, once more than
        element_cap elements have been produced.
        """
        limit = self.max_length if max_length is None else max_length
        gens = tuple(sorted(set(generators))) if generators is not None else tuple(range(self.rank))
        key = (gens, limit)
        if key in self._enumerations:
            return self._enumerations[key]

        result = Enumeration(rank=self.rank, max_length=limit, generators=gens)
        result.add(self.identity(), (), self.identity())
        level = [0]
        for length in range(1, limit + 1):
            next_level = []
            for pos in level:
                w, word = result.elements[pos], result.words[pos]
                for s in gens:
                    if not self._column_positive(w, s):
                        continue
                    x = w.times_simple(self.form, s)
                    if x in result:
                        continue
                    # (w r_s)^-1 = r_s w^-1
                    result.add(x, word + (s,), result.inverses[pos].simple_times(self.form, s))
                    next_level.append(len(result) - 1)
                    if len(result) > self.element_cap:
                        logger.warning(
                            "element_budget_exceeded",
                            cap=self.element_cap,
                            reached_length=length,
                        )
                        raise BudgetExceeded(
                            f"More than {self.element_cap} elements by length {length}",
                            partial=result,
                        )
            if not next_level:
                result.saturated = True
                break
            level = next_level
        else:
            result.saturated = all(
                not self._column_positive(result.elements[pos], s) for pos in level for s in gens
            )

        logger.info(
            "enumeration_complete",
            generators=[self.matrix.nodes[s] for s in gens],
            max_length=limit,
            elements=len(result),
            saturated=result.saturated,
        )
        self._enumerations[key] = result
        return result

    def enumerate_subgroup(self, J: NodeSet) -> Enumeration:
        """All of the finite parabolic subgroup W_J"""
        if not self.finite_types.is_spherical(J):
            raise NotSpherical(f"W_J is infinite for J = {J!r}")
        if J.members in self._subgroups:
            return self._subgroups[J.members]
        bound = sum(t.longest_length for _, t in self.finite_types.classify(J))
        result = self.enumerate(max_length=bound, generators=J.members)
        self._subgroups[J.members] = result
        return result

    def group_elements(self, J: NodeSet) -> frozenset[GroupElement]:
        return self.enumerate_subgroup(J).element_set()

    # ---- lengths ----------------------------------------------------

    def length_and_N(self, w: GroupElement, depth_hint: Optional[int] = None) -> ReducedForm:
        """l(w), a reduced word and N(w) = {b > 0 : w b < 0}"""
        limit = self.max_length if depth_hint is None else depth_hint
        x = w
        descents: list[int] = []
        while True:
            s = next((t for t in range(self.rank) if self.has_right_descent(x, t)), None)
            if s is None:
                break
            if len(descents) >= limit:
                raise DepthExceeded(f"Element not reduced within length {limit}")
            x = x.times_simple(self.form, s)
            descents.append(s)
        if not x.is_identity:
            raise CoxeterError("Matrix is not a group element of W")

        # w = r_{sk} ... r_{s1}, inversions r_{s1} ... r_{s(i-1)} e_{si}
        y = self.identity()
        inversions = []
        for s in descents:
            inversions.append(y.column(s))
            y = y.times_simple(self.form, s)
        return ReducedForm(len(descents), tuple(reversed(descents)), tuple(inversions))

    def length(self, w: GroupElement) -> int:
        return self.length_and_N(w).length

    # ---- parabolic subgroups ----------------------------------------

    def _require_spherical(self, J: NodeSet) -> None:
        if not self.finite_types.is_spherical(J):
            raise NotSpherical(f"W_J is infinite for J = {J!r}")

    def longest_element(self, J: NodeSet) -> GroupElement:
        """w_J by greedy ascent inside W_J"""
        self._require_spherical(J)
        w = self.identity()
        while True:
            s = next((t for t in J if self._column_positive(w, t)), None)
            if s is None:
                return w
            w = w.times_simple(self.form, s)

    def positive_roots(self, J: NodeSet) -> list[Root]:
        """Phi_J^+, closed under the simple reflections of J"""
        self._require_spherical(J)
        if J.members in self._positive_roots:
            return list(self._positive_roots[J.members])
        simple = [Root.simple(self.rank, j) for j in J]
        seen = set(simple)
        frontier = list(simple)
        reflections = {s: GroupElement.simple_reflection(self.form, s) for s in J}
        while frontier:
            beta = frontier.pop()
            for s, r in reflections.items():
                if beta.simple_index() == s:
                    continue
                image = r.apply(beta)
                if image not in seen:
                    seen.add(image)
                    frontier.append(image)
        roots = sorted(seen, key=_root_order)
        self._positive_roots[J.members] = roots
        return list(roots)

    def in_root_subsystem(self, root: Root, J: NodeSet) -> bool:
        """root lies in Phi_J; for a root this is support inside J"""
        return root.support <= J.members

    def v_element(self, a: str, I: NodeSet) -> GroupElement:
        """v[a, I] = w_L w_{L - a} with L the component of I + a containing a"""
        ai = self.matrix.index(a)
        if ai in I.members:
            raise BadArguments(f"{a} must not lie in I = {I!r}")
        extended = I.union([ai])
        L = next(c for c in self.finite_types.graph.coxeter_components(extended) if ai in c.members)
        if not self.finite_types.is_spherical(L):
            raise NotSpherical(f"Component {L!r} of I+{a} is not spherical")
        v = self.longest_element(L) * self.longest_element(L.difference([ai]))

        for b in I:
            image = v.column(b).simple_index()
            if image is None or image not in extended.members:
                raise CoxeterError(f"v[{a}, I] does not map {self.matrix.nodes[b]} into I+{a}")
            if b not in L.members and image != b:
                raise CoxeterError(f"v[{a}, I] moves {self.matrix.nodes[b]} outside L")
        return v

    def min_double_coset_rep(self, I: NodeSet, J: NodeSet, w: GroupElement) -> GroupElement:
        """Minimal-length element of W_I w W_J by greedy descent on both sides"""
        reduced = self.length_and_N(w)
        budget = reduced.length
        x = w
        x_inv = self.inverse_from_word(reduced.word)
        steps = 0
        while True:
            left = next((s for s in I if self.has_right_descent(x_inv, s)), None)
            if left is not None:
                x = x.simple_times(self.form, left)
                x_inv = x_inv.times_simple(self.form, left)
            else:
                right = next((t for t in J if self.has_right_descent(x, t)), None)
                if right is None:
                    return x
                x = x.times_simple(self.form, right)
                x_inv = x_inv.simple_times(self.form, right)
            steps += 1
            if steps > budget:
                raise DepthExceeded("Double coset descent did not terminate within l(w) steps")

    def verify_double_coset(self, I: NodeSet, J: NodeSet, d: GroupElement) -> bool:
        """W_I meets d W_J d^-1 exactly in W_K, K the simple roots of I that d maps J onto"""
        W_I = self.group_elements(I)
        W_J = self.group_elements(J)
        d_inv = d.inverse()
        meet = {x for x in W_I if d_inv * x * d in W_J}
        K = [c for c in I if any(d.column(j).simple_index() == c for j in J)]
        expected = self.group_elements(self.matrix.index_set(K))
        return meet == set(expected)

    def normalizer_condition(self, a: str, J: NodeSet) -> bool:
        """Every w with w a in Phi_J normalizes W_J; W must be finite"""
        ai = self.matrix.index(a)
        if ai not in J.members:
            raise BadArguments(f"{a} must lie in J = {J!r}")
        full = self.matrix.full_set()
        self._require_spherical(full)
        for w in self.enumerate_subgroup(full):
            if not self.in_root_subsystem(w.column(ai), J):
                continue
            if not all(self.in_root_subsystem(w.column(b), J) for b in J):
                return False
        return True

    # ---- orbit facts ------------------------------------------------

    def simple_roots_in_orbit(self, a: str, max_length: Optional[int] = None) -> NodeSet:
        """Simple roots of the form w e_a, w of length <= max_length"""
        ai = self.matrix.index(a)
        found = set()
        for w in self.enumerate(max_length):
            index = w.column(ai).simple_index()
            if index is not None:
                found.add(index)
        return self.matrix.index_set(found)
