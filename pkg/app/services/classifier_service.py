"""
Classifier Service - finite continuation of simple reflections by graph inspection
"""
from itertools import combinations
from typing import Optional

import structlog

from app.exceptions import BadArguments, CaseConflict, CoxeterError
from app.models.coxeter_matrix import CoxeterMatrix, NodeSet, is_infinite
from app.models.fc_result import (
    CaseTag,
    ComponentAnalysis,
    FcKind,
    FcResult,
    RigidityReport,
    Verdict,
)
from app.models.finite_type import Family
from app.services.finite_type_service import FiniteTypeService
from app.services.graph_service import CoxeterGraphService

logger = structlog.get_logger(__name__)


class FcClassifierService:
    """Service computing FC(r_a) for every simple reflection from the Coxeter graph"""

    # Clause labels in the order they are reported
    FOCUS_CLAUSES = (
        "(1) odd edges of M labelled 3 and M a tree",
        "(2) every C[b..c] of type C",
        "(3) chain-incomparable pairs labelled inf",
        "(4) finite edges leaving M labelled 2 along the chain",
        "(5) M+b not a spherical component of Even(M)",
    )
    HALF_FOCUS_CLAUSES = (
        "(1) a and b see every other node alike",
        "(2) odd edges of M-b labelled 3 and M-b a tree",
        "(3) every D[a,b..c] of type D",
        "(4) chain-incomparable pairs labelled inf",
        "(5) finite edges leaving M labelled 2 along the chain",
        "(6) M not a spherical component of Even(M)",
    )

    def __init__(
        self,
        matrix: CoxeterMatrix,
        graph: Optional[CoxeterGraphService] = None,
        finite_types: Optional[FiniteTypeService] = None,
    ):
        self.matrix = matrix
        self.graph = graph or CoxeterGraphService(matrix)
        self.finite_types = finite_types or FiniteTypeService(matrix, self.graph)
        self._analyses: dict[frozenset[int], ComponentAnalysis] = {}

    # ---- helpers ----------------------------------------------------

    def _m(self, i: int, j: int):
        return self.matrix.m(i, j)

    def _names(self, indices) -> list[str]:
        return [self.matrix.nodes[i] for i in sorted(indices)]

    def _is_threes_tree(self, subset: NodeSet) -> bool:
        """Odd edges inside subset are all labelled 3 and form a spanning tree"""
        if not self.graph.is_odd_tree(subset):
            return False
        return all(m == 3 for _, _, m in self.graph.odd_subgraph(subset).edges(data="m"))

    def _is_spherical_component_of(self, part: NodeSet, even: NodeSet) -> bool:
        return any(
            comp.members == part.members for comp in self.finite_types.spherical_components(even)
        )

    def _infer_focus_node(self, M: NodeSet, b: int) -> int:
        adjacent = [a for a in M if self.graph.coxeter_adjacent(a, b)]
        if len(adjacent) != 1:
            raise BadArguments(
                f"Cannot infer the focus node: {self.matrix.nodes[b]} is adjacent to "
                f"{self._names(adjacent)} in {M!r}"
            )
        return adjacent[0]

    # ---- chains -----------------------------------------------------

    def c_chain(self, M: NodeSet, b: str, c: str, a: Optional[str] = None) -> NodeSet:
        """C[b..c] = {b} plus the path a -> c in M"""
        self.graph.require_odd_component(M)
        bi, ci = self.matrix.index(b), self.matrix.index(c)
        ai = self.matrix.index(a) if a is not None else self._infer_focus_node(M, bi)
        return self._c_chain(M, ai, bi, ci)

    def _c_chain(self, M: NodeSet, a: int, b: int, c: int) -> NodeSet:
        return M.intersection(self.graph.tree_path(M, a, c)).union([b])

    def d_chain(self, M: NodeSet, a: str, b: str, c: str) -> NodeSet:
        """D[a,b..c] = {b} plus the path a -> c in M minus b"""
        self.graph.require_odd_component(M)
        return self._d_chain(M, self.matrix.index(a), self.matrix.index(b), self.matrix.index(c))

    def _d_chain(self, M: NodeSet, a: int, b: int, c: int) -> NodeSet:
        rest = M.difference([b])
        return rest.intersection(self.graph.tree_path(rest, a, c)).union([b])

    def _is_type_c(self, chain: NodeSet, a: int, b: int) -> bool:
        if self._m(a, b) != 4 or not self.graph.is_connected(chain):
            return False
        found = self.finite_types.classify_connected(chain)
        return found.family == Family.B and found.rank == len(chain)

    def _is_type_d(self, chain: NodeSet, a: int, b: int) -> bool:
        if not self.graph.is_connected(chain):
            return False
        found = self.finite_types.classify_connected(chain)
        n = len(chain)
        if n == 3:
            if found.family != Family.A or found.rank != 3:
                return False
        elif n < 3 or found.family != Family.D or found.rank != n:
            return False
        view = self.graph.coxeter_graph.subgraph(chain.members)
        if view.degree(a) != 1 or view.degree(b) != 1:
            return False
        return set(view.neighbors(a)) == set(view.neighbors(b))

    # ---- Definition checks ------------------------------------------

    def c3_neighbours(self, M: NodeSet) -> list[str]:
        """C3-neighbours of the odd component M, in node order"""
        self.graph.require_odd_component(M)
        return self._names(self._c3_neighbours(M))

    def _c3_neighbours(self, M: NodeSet) -> list[int]:
        even = self.graph.even_closure(M)
        found = []
        for b in range(self.matrix.rank):
            if b in M.members:
                continue
            others = even.difference([b])
            labels = {c: self._m(b, c) for c in others}
            if any(m not in (2, 4) for m in labels.values()):
                continue
            fours = [c for c, m in labels.items() if m == 4]
            if not fours:
                continue
            if all(self._c3_witness(M, b, c) is not None for c in fours):
                found.append(b)
        return found

    def _c3_witness(self, M: NodeSet, b: int, c: int) -> Optional[int]:
        outside = [e for e in range(self.matrix.rank) if e not in M.members and e != b]
        for a in M:
            first = (
                self._m(b, a) == 2
                and self._m(c, a) == 3
                and all(is_infinite(self._m(c, d)) for d in M if d not in (a, c))
            )
            second = all(
                is_infinite(self._m(c, e))
                or (self._m(a, e) == 2 and self._m(c, e) == 2 and self._m(b, e) == 2)
                for e in outside
            )
            if first and second:
                return a
        return None

    def _focus_clauses(self, M: NodeSet, even: NodeSet, a: int, b: int) -> list[bool]:
        """Every clause of the focus definition for the candidate pair (a, b)"""
        tree = self._is_threes_tree(M)
        chains = {c: self._c_chain(M, a, b, c) for c in M} if tree else {}
        outside = [e for e in range(self.matrix.rank) if e not in M.members and e != b]

        type_c = tree and all(self._is_type_c(chain, a, b) for chain in chains.values())
        incomparable = tree and all(
            is_infinite(self._m(c, d))
            for c, d in combinations(M.indices, 2)
            if c not in chains[d] and d not in chains[c]
        )
        leaving = tree and all(
            self._m(c, e) == 2 and all(self._m(d, e) == 2 for d in chains[c])
            for c in M
            for e in outside
            if not is_infinite(self._m(c, e))
        )
        not_component = not self._is_spherical_component_of(M.union([b]), even)
        return [tree, type_c, incomparable, leaving, not_component]

    def _half_focus_clauses(self, M: NodeSet, even: NodeSet, a: int, b: int) -> list[bool]:
        """Every clause of the half-focus definition for the candidate {a, b}"""
        inner = [c for c in M if c not in (a, b)]
        outside = [e for e in range(self.matrix.rank) if e not in M.members]

        alike = all(
            self._m(a, c) == self._m(b, c) and self._m(a, c) in (2, 3) for c in inner
        ) and all(
            self._m(a, c) == self._m(b, c) and (self._m(a, c) == 2 or is_infinite(self._m(a, c)))
            for c in outside
        )
        tree = self._is_threes_tree(M.difference([b]))
        chains = {c: self._d_chain(M, a, b, c) for c in inner} if tree else {}
        type_d = tree and all(self._is_type_d(chain, a, b) for chain in chains.values())
        incomparable = tree and all(
            is_infinite(self._m(c, d))
            for c, d in combinations(inner, 2)
            if c not in chains[d] and d not in chains[c]
        )
        leaving = tree and all(
            self._m(c, e) == 2 and all(self._m(d, e) == 2 for d in chains[c])
            for c in inner
            for e in outside
            if not is_infinite(self._m(c, e))
        )
        not_component = not self._is_spherical_component_of(M, even)
        return [alike, tree, type_d, incomparable, leaving, not_component]

    def _report(self, kind: str, pair: tuple[int, int], clauses: list[bool], labels) -> Optional[str]:
        failed = [label for ok, label in zip(clauses, labels) if not ok]
        if not failed:
            return None
        a, b = pair
        message = f"{kind} ({self.matrix.nodes[a]}, {self.matrix.nodes[b]}): fails {failed[0]}"
        logger.debug("candidate_rejected", kind=kind, pair=self._names(pair), failed=failed)
        return message

    def _foci(self, M: NodeSet, even: NodeSet) -> tuple[list[tuple[int, int]], list[str]]:
        found, notes = [], []
        for a in M:
            for b in range(self.matrix.rank):
                if b in M.members:
                    continue
                clauses = self._focus_clauses(M, even, a, b)
                note = self._report("focus", (a, b), clauses, self.FOCUS_CLAUSES)
                if note is None:
                    found.append((a, b))
                elif self._m(a, b) == 4:
                    notes.append(note)
        return found, notes

    def _half_foci(self, M: NodeSet, even: NodeSet) -> tuple[list[tuple[int, int]], list[str]]:
        found, notes = [], []
        for a, b in combinations(M.indices, 2):
            if self._m(a, b) != 2:
                continue
            clauses = self._half_focus_clauses(M, even, a, b)
            note = self._report("half-focus", (a, b), clauses, self.HALF_FOCUS_CLAUSES)
            if note is None:
                found.append((a, b))
            else:
                notes.append(note)
        return found, notes

    def find_foci(self, M: NodeSet) -> list[tuple[str, str]]:
        self.graph.require_odd_component(M)
        found, _ = self._foci(M, self.graph.even_closure(M))
        return [(self.matrix.nodes[a], self.matrix.nodes[b]) for a, b in found]

    def find_focus(self, M: NodeSet) -> Optional[tuple[str, str]]:
        """First focus (a, b) of M in node order, or None"""
        foci = self.find_foci(M)
        if len(foci) > 1:
            logger.warning("multiple_foci", component=M.names(), foci=foci)
        return foci[0] if foci else None

    def find_half_foci(self, M: NodeSet) -> list[tuple[str, str]]:
        self.graph.require_odd_component(M)
        found, _ = self._half_foci(M, self.graph.even_closure(M))
        return [(self.matrix.nodes[a], self.matrix.nodes[b]) for a, b in found]

    def find_half_focus(self, M: NodeSet) -> Optional[tuple[str, str]]:
        """First half-focus {a, b} of M, a before b in node order, or None"""
        half = self.find_half_foci(M)
        if len(half) > 1:
            logger.warning("multiple_half_foci", component=M.names(), half_foci=half)
        return half[0] if half else None

    # ---- component analysis -----------------------------------------

    def analyze_component(self, M: NodeSet) -> ComponentAnalysis:
        """Decide which case of the classification applies to the odd component M"""
        self.graph.require_odd_component(M)
        cached = self._analyses.get(M.members)
        if cached is not None:
            return cached

        even = self.graph.even_closure(M)
        components = self.graph.coxeter_components(even)
        main = next(comp for comp in components if M.issubset(comp))
        spherical = tuple(self.finite_types.spherical_components(even))
        main_spherical = any(comp.members == main.members for comp in spherical)

        foci, focus_notes = self._foci(M, even)
        half_foci, half_notes = self._half_foci(M, even)

        cases = []
        if main_spherical:
            cases.append(CaseTag.A.value)
        if foci:
            cases.append(CaseTag.C.value)
        if half_foci:
            cases.append(CaseTag.D.value)
        if len(cases) > 1:
            logger.error("case_conflict", component=M.names(), cases=cases)
            raise CaseConflict(M.names(), cases)

        if len(foci) > 1:
            logger.warning("multiple_foci", component=M.names(), foci=[self._names(f) for f in foci])
        if len(half_foci) > 1:
            logger.warning(
                "multiple_half_foci", component=M.names(), half_foci=[self._names(h) for h in half_foci]
            )

        c3: tuple[int, ...] = ()
        if main_spherical:
            tag = CaseTag.A
        elif foci:
            tag = CaseTag.C
        elif half_foci:
            tag = CaseTag.D
        else:
            tag = CaseTag.B
            c3 = tuple(self._c3_neighbours(M))

        analysis = ComponentAnalysis(
            odd_component=M,
            even_closure=even,
            main_component=main,
            spherical_components=spherical,
            case_tag=tag,
            foci=tuple(foci),
            half_foci=tuple(half_foci),
            c3_neighbours=c3,
            diagnostics=tuple(focus_notes + half_notes),
        )
        self._analyses[M.members] = analysis
        logger.info(
            "component_analyzed",
            component=M.names(),
            case=tag.value,
            even_closure=even.names(),
            spherical_components=[s.names() for s in spherical],
        )
        return analysis

    def finite_continuation(self, a: str) -> FcResult:
        """FC(r_a) as Visible(J) or NotVisible"""
        ai = self.matrix.index(a)
        analysis = self.analyze_component(self.graph.odd_component(a))
        base = analysis.spherical_union
        names = self.matrix.nodes
        diagnostics = analysis.diagnostics

        if analysis.case_tag == CaseTag.A:
            return FcResult(a, FcKind.VISIBLE, CaseTag.A, J=base, diagnostics=diagnostics)

        if analysis.case_tag == CaseTag.C:
            f, b = analysis.foci[0]
            witness = (names[f], names[b])
            if ai == f:
                return FcResult(
                    a, FcKind.VISIBLE, CaseTag.C,
                    J=base.union([f, b]), witness=witness, diagnostics=diagnostics,
                )
            return FcResult(a, FcKind.NOT_VISIBLE, CaseTag.C, witness=witness, diagnostics=diagnostics)

        if analysis.case_tag == CaseTag.D:
            p, q = analysis.half_foci[0]
            witness = (names[p], names[q])
            if ai in (p, q):
                return FcResult(
                    a, FcKind.VISIBLE, CaseTag.D,
                    J=base.union([p, q]), witness=witness, diagnostics=diagnostics,
                )
            return FcResult(a, FcKind.NOT_VISIBLE, CaseTag.D, witness=witness, diagnostics=diagnostics)

        c3 = analysis.c3_neighbours
        witness = tuple(names[b] for b in c3)
        if self.graph.adjacent_to_any(ai, c3):
            return FcResult(a, FcKind.NOT_VISIBLE, CaseTag.B, witness=witness, diagnostics=diagnostics)
        J = base.union(c3).union([ai])
        return FcResult(a, FcKind.VISIBLE, CaseTag.B, J=J, witness=witness, diagnostics=diagnostics)

    def analyze(self) -> dict[str, FcResult]:
        """FC(r_a) for every node, in node order"""
        return {a: self.finite_continuation(a) for a in self.matrix.nodes}

    # ---- rigidity ---------------------------------------------------

    def rigidity_report(self) -> RigidityReport:
        """Hypotheses of the 2-spherical rigidity statement and its verdict"""
        results = self.analyze()
        fc_trivial = {a: r.is_trivial for a, r in results.items()}
        irreducible = self.graph.is_irreducible()
        non_spherical = not self.finite_types.is_spherical(self.matrix.full_set())
        two_spherical = self.graph.is_two_spherical()

        notes = []
        verdict = Verdict.NOT_APPLICABLE
        cross_check = True
        if irreducible and non_spherical and two_spherical:
            cross_check = all(fc_trivial.values())
            if cross_check:
                verdict = Verdict.REFLECTIONS_DETERMINED
                notes.append(
                    "FC(r) = <r> for every reflection r, so every reflection-preserving "
                    "automorphism maps simple reflections to a conjugate of the simple system"
                )
                notes.append("strong rigidity follows from an external result and is not re-verified")
            else:
                nontrivial = [a for a, ok in fc_trivial.items() if not ok]
                logger.error("rigidity_cross_check_failed", nodes=nontrivial)
                notes.append(f"classifier reports nontrivial FC(r_a) for {nontrivial}")
        else:
            if not irreducible:
                notes.append("W is reducible")
            if not non_spherical:
                notes.append("W is finite")
            if not two_spherical:
                notes.append("some label is infinite")

        return RigidityReport(
            fc_trivial=fc_trivial,
            irreducible=irreducible,
            non_spherical=non_spherical,
            two_spherical=two_spherical,
            finite_rank=True,
            verdict=verdict,
            cross_check_passed=cross_check,
            notes=tuple(notes),
        )
