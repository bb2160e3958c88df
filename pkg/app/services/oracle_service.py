"""
Oracle Service - brute-force finite continuation over enumerated conjugates
"""
import enum
from dataclasses import dataclass
from typing import Optional

import structlog

from app.exceptions import BadArguments, BudgetExceeded
from app.models.coxeter_matrix import CoxeterMatrix, NodeSet
from app.models.fc_result import FcResult
from app.models.roots import GroupElement, Root
from app.services.classifier_service import FcClassifierService
from app.services.root_engine_service import Enumeration, RootEngineService

logger = structlog.get_logger(__name__)


class CompareStatus(str, enum.Enum):
    """Agreement between classifier prediction and oracle"""
    MATCH = "MATCH"
    SUBSET = "SUBSET"
    MISMATCH = "MISMATCH"
    PARTIAL = "PARTIAL"


@dataclass(frozen=True)
class OracleResult:
    """Intersection of the conjugates u W_J u^-1 (J maximal spherical) containing w"""

    elements: frozenset[GroupElement]
    max_length: int
    conjugates: int
    saturated: bool
    partial: bool = False


@dataclass(frozen=True)
class Conjugate:
    """v W_J v^-1 with v a minimal representative of v W_J; roots is v Phi_J up to sign"""

    v: GroupElement
    v_inverse: GroupElement
    J: NodeSet
    roots: frozenset[Root]


@dataclass(frozen=True)
class OracleComparison:
    node: str
    prediction: FcResult
    oracle: OracleResult
    status: CompareStatus
    predicted_size: Optional[int] = None
    matching_subsets: tuple[NodeSet, ...] = ()


class OracleService:
    """Service checking classifier predictions against the root engine

    The conjugates of the maximal finite parabolic subgroups are collected
    once per enumeration depth and shared by every node of the matrix.
    """

    def __init__(
        self,
        matrix: CoxeterMatrix,
        engine: Optional[RootEngineService] = None,
        classifier: Optional[FcClassifierService] = None,
        max_length: Optional[int] = None,
        element_cap: Optional[int] = None,
    ):
        self.matrix = matrix
        self.engine = engine or RootEngineService(matrix, max_length=max_length, element_cap=element_cap)
        self.classifier = classifier or FcClassifierService(
            matrix, finite_types=self.engine.finite_types, graph=self.engine.finite_types.graph
        )
        self._maximal = self.engine.finite_types.maximal_spherical_subsets()
        self._tables: dict[int, list[Conjugate]] = {}

    def _subgroup(self, J: NodeSet) -> frozenset[GroupElement]:
        return self.engine.group_elements(J)

    def _build_table(self, enumeration: Enumeration) -> list[Conjugate]:
        table: list[Conjugate] = []
        seen: set[frozenset[Root]] = set()
        roots = {J.members: self.engine.positive_roots(J) for J in self._maximal}
        for v, v_inverse in zip(enumeration.elements, enumeration.inverses):
            for J in self._maximal:
                # v W_J v^-1 only depends on the coset v W_J
                if any(self.engine.has_right_descent(v, j) for j in J):
                    continue
                key = frozenset(v.apply(beta).normalized(self.engine.sign_dps) for beta in roots[J.members])
                if key in seen:
                    continue
                seen.add(key)
                table.append(Conjugate(v, v_inverse, J, key))
        return table

    def conjugate_table(self, max_length: Optional[int] = None) -> list[Conjugate]:
        """Distinct conjugates v W_J v^-1 over maximal spherical J and l(v) <= max_length"""
        limit = self.engine.max_length if max_length is None else max_length
        if limit not in self._tables:
            self._tables[limit] = self._build_table(self.engine.enumerate(limit))
            logger.info("conjugate_table", max_length=limit, conjugates=len(self._tables[limit]))
        return self._tables[limit]

    def _intersect(
        self, w: GroupElement, table: list[Conjugate], simple: Optional[int]
    ) -> tuple[Optional[set[GroupElement]], int]:
        """Intersect every conjugate in the table that contains w.

        For w = r_s (simple = s), v W_J v^-1 contains w iff e_s lies in v Phi_J.
        """
        if simple is not None:
            e_s = Root.simple(self.matrix.rank, simple)
            containing = [c for c in table if e_s in c.roots]
        else:
            containing = [c for c in table if c.v_inverse * w * c.v in self._subgroup(c.J)]
        if not containing:
            return None, 0

        containing.sort(key=lambda c: len(self._subgroup(c.J)))
        first = containing[0]
        candidates = {first.v * x * first.v_inverse for x in self._subgroup(first.J)}
        for c in containing[1:]:
            W_J = self._subgroup(c.J)
            candidates = {x for x in candidates if c.v_inverse * x * c.v in W_J}
        return candidates, len(containing)

    def oracle_fc_element(self, w: GroupElement, max_length: Optional[int] = None) -> OracleResult:
        """FC(w) approximated from above by conjugates v W_J v^-1 with l(v) <= max_length"""
        return self._oracle(w, None, max_length)

    def oracle_fc(self, a: str, max_length: Optional[int] = None) -> OracleResult:
        """FC(r_a) approximated from above; exact once max_length is large enough"""
        return self._oracle(self.engine.simple_reflection(a), self.matrix.index(a), max_length)

    def _oracle(self, w: GroupElement, simple: Optional[int], max_length: Optional[int]) -> OracleResult:
        limit = self.engine.max_length if max_length is None else max_length
        try:
            enumeration = self.engine.enumerate(limit)
        except BudgetExceeded as exc:
            candidates, conjugates = self._intersect(w, self._build_table(exc.partial), simple)
            partial = OracleResult(
                elements=frozenset(candidates or ()),
                max_length=limit,
                conjugates=conjugates,
                saturated=False,
                partial=True,
            )
            raise BudgetExceeded(str(exc), partial=partial) from exc

        candidates, conjugates = self._intersect(w, self.conjugate_table(limit), simple)
        if candidates is None:
            raise BadArguments(
                f"Element lies in no finite parabolic subgroup conjugated by length <= {limit}"
            )
        logger.info(
            "oracle_complete",
            max_length=limit,
            conjugates=conjugates,
            elements=len(candidates),
        )
        return OracleResult(
            elements=frozenset(candidates),
            max_length=limit,
            conjugates=conjugates,
            saturated=enumeration.saturated,
        )

    def element_words(self, result: OracleResult) -> list[str]:
        """Reduced words of the oracle elements, shortest first"""
        widest = max(
            (t.longest_length for J in self._maximal for _, t in self.engine.finite_types.classify(J)),
            default=0,
        )
        bound = 2 * result.max_length + widest
        words = [self.engine.length_and_N(w, depth_hint=bound).word for w in result.elements]
        words.sort(key=lambda word: (len(word), word))
        names = self.matrix.nodes
        return [" ".join(f"r_{names[s]}" for s in word) if word else "1" for word in words]

    def matching_visible_subgroups(self, elements: frozenset[GroupElement]) -> list[NodeSet]:
        """Spherical K with W_K equal to the given element set"""
        return [
            K
            for K in self.engine.finite_types.spherical_subsets()
            if len(self.engine.group_elements(K)) == len(elements)
            and self.engine.group_elements(K) == elements
        ]

    def compare_with_classifier(self, a: str, max_length: Optional[int] = None) -> OracleComparison:
        prediction = self.classifier.finite_continuation(a)
        oracle = self.oracle_fc(a, max_length)
        if prediction.is_visible:
            predicted = self.engine.group_elements(prediction.J)
            if oracle.elements == predicted:
                status = CompareStatus.MATCH
            elif predicted < oracle.elements:
                status = CompareStatus.SUBSET
            else:
                status = CompareStatus.MISMATCH
            comparison = OracleComparison(a, prediction, oracle, status, predicted_size=len(predicted))
        else:
            matches = tuple(self.matching_visible_subgroups(oracle.elements))
            status = CompareStatus.MISMATCH if matches else CompareStatus.MATCH
            comparison = OracleComparison(a, prediction, oracle, status, matching_subsets=matches)

        log = logger.warning if status == CompareStatus.MISMATCH else logger.info
        log("oracle_comparison", node=a, status=status.value, oracle_size=len(oracle.elements))
        return comparison
