"""
Report Service - assemble analysis reports and render them with Jinja2
"""
from typing import Optional

import structlog
from jinja2 import Environment, FileSystemLoader, StrictUndefined

from app.config import get_settings
from app.models.coxeter_matrix import CoxeterMatrix, NodeSet, format_label, is_infinite, is_odd_edge
from app.models.fc_result import ComponentAnalysis, FcResult, RigidityReport
from app.schemas import (
    AnalysisReport,
    ClassifiedComponent,
    ClassifyResponse,
    ComponentReport,
    FcResultResponse,
    GraphFile,
    OracleComparisonResponse,
    RigidityResponse,
)
from app.services.classifier_service import FcClassifierService
from app.services.oracle_service import CompareStatus, OracleComparison, OracleResult, OracleService

logger = structlog.get_logger(__name__)


def _names(node_set: Optional[NodeSet]) -> Optional[list[str]]:
    return None if node_set is None else node_set.names()


class ReportService:
    """Service turning domain results into schemas, text and DOT"""

    def __init__(self, templates_path: Optional[str] = None):
        self.env = Environment(
            loader=FileSystemLoader(templates_path or get_settings().templates_path),
            trim_blocks=True,
            lstrip_blocks=True,
            keep_trailing_newline=True,
            undefined=StrictUndefined,
        )

    # ---- schema conversion ------------------------------------------

    @staticmethod
    def fc_response(result: FcResult) -> FcResultResponse:
        return FcResultResponse(
            node=result.node,
            kind=result.kind.value,
            case=result.case_tag.value,
            J=_names(result.J),
            witness=list(result.witness),
            trivial=result.is_trivial,
            diagnostics=list(result.diagnostics),
        )

    @staticmethod
    def component_report(matrix: CoxeterMatrix, analysis: ComponentAnalysis) -> ComponentReport:
        names = matrix.nodes
        return ComponentReport(
            odd_component=analysis.odd_component.names(),
            even_closure=analysis.even_closure.names(),
            main_component=analysis.main_component.names(),
            spherical_components=[c.names() for c in analysis.spherical_components],
            case=analysis.case_tag.value,
            foci=[[names[a], names[b]] for a, b in analysis.foci],
            half_foci=[[names[a], names[b]] for a, b in analysis.half_foci],
            c3_neighbours=[names[b] for b in analysis.c3_neighbours],
        )

    @staticmethod
    def rigidity_response(report: RigidityReport) -> RigidityResponse:
        return RigidityResponse(
            fc_trivial=dict(report.fc_trivial),
            irreducible=report.irreducible,
            non_spherical=report.non_spherical,
            two_spherical=report.two_spherical,
            finite_rank=report.finite_rank,
            verdict=report.verdict.value,
            cross_check_passed=report.cross_check_passed,
            notes=list(report.notes),
        )

    @staticmethod
    def classify_response(classifier: FcClassifierService, subset: NodeSet) -> ClassifyResponse:
        finite_types = classifier.finite_types
        components = [
            ClassifiedComponent(
                nodes=comp.names(),
                type=found.name,
                finite=found.is_finite,
                order=found.order if found.is_finite else None,
                longest_length=found.longest_length if found.is_finite else None,
                minus_one_type=found.is_finite and found.is_minus_one_type,
            )
            for comp, found in finite_types.classify(subset)
        ]
        return ClassifyResponse(
            subset=subset.names(),
            spherical=finite_types.is_spherical(subset),
            minus_one_type=finite_types.is_minus_one_type(subset),
            components=components,
        )

    @staticmethod
    def oracle_response(oracle: OracleService, comparison: OracleComparison) -> OracleComparisonResponse:
        prediction = comparison.prediction
        result = comparison.oracle
        return OracleComparisonResponse(
            node=comparison.node,
            predicted_kind=prediction.kind.value,
            predicted_case=prediction.case_tag.value,
            predicted_J=_names(prediction.J),
            predicted_size=comparison.predicted_size,
            oracle_size=len(result.elements),
            status=comparison.status.value,
            max_length=result.max_length,
            conjugates=result.conjugates,
            saturated=result.saturated,
            partial=result.partial,
            elements=oracle.element_words(result),
            matching_subsets=[K.names() for K in comparison.matching_subsets],
        )

    @staticmethod
    def partial_oracle_response(
        oracle: OracleService, node: str, prediction: FcResult, result: OracleResult
    ) -> OracleComparisonResponse:
        """Oracle intersection cut short by the element cap; no status can be given"""
        return OracleComparisonResponse(
            node=node,
            predicted_kind=prediction.kind.value,
            predicted_case=prediction.case_tag.value,
            predicted_J=_names(prediction.J),
            oracle_size=len(result.elements),
            status=CompareStatus.PARTIAL.value,
            max_length=result.max_length,
            conjugates=result.conjugates,
            saturated=False,
            partial=True,
            elements=oracle.element_words(result),
        )

    def build_analysis(
        self,
        matrix: CoxeterMatrix,
        with_oracle: bool = False,
        max_length: Optional[int] = None,
        element_cap: Optional[int] = None,
    ) -> AnalysisReport:
        classifier = FcClassifierService(matrix)
        results = classifier.analyze()
        components = [
            self.component_report(matrix, classifier.analyze_component(M))
            for M in classifier.graph.odd_components()
        ]
        oracle_rows = None
        if with_oracle:
            oracle = OracleService(matrix, max_length=max_length, element_cap=element_cap)
            oracle_rows = [
                self.oracle_response(oracle, oracle.compare_with_classifier(a, max_length))
                for a in matrix.nodes
            ]
        report = AnalysisReport(
            graph=GraphFile.from_matrix(matrix),
            odd_components=components,
            results=[self.fc_response(r) for r in results.values()],
            rigidity=self.rigidity_response(classifier.rigidity_report()),
            oracle=oracle_rows,
        )
        logger.info("analysis_built", nodes=len(matrix.nodes), with_oracle=with_oracle)
        return report

    # ---- rendering --------------------------------------------------

    def render(self, template: str, **context) -> str:
        return self.env.get_template(template).render(**context)

    def render_analysis(self, report: AnalysisReport) -> str:
        return self.render("report.txt.j2", report=report)

    def render_fc(self, result: FcResultResponse) -> str:
        return self.render("fc.txt.j2", result=result)

    def render_classify(self, response: ClassifyResponse) -> str:
        return self.render("classify.txt.j2", response=response)

    def render_rigidity(self, response: RigidityResponse) -> str:
        return self.render("rigidity.txt.j2", rigidity=response)

    def render_oracle(self, response: OracleComparisonResponse) -> str:
        return self.render("oracle.txt.j2", row=response)

    def export_dot(self, matrix: CoxeterMatrix) -> str:
        """Coxeter graph in DOT: odd edges solid, even dashed, infinite bold"""
        edges = []
        for i, j, m in matrix.edges():
            if is_infinite(m):
                style = "bold"
            elif is_odd_edge(m):
                style = "solid"
            else:
                style = "dashed"
            edges.append({"u": matrix.nodes[i], "v": matrix.nodes[j], "label": format_label(m), "style": style})
        return self.render("coxeter.dot.j2", nodes=list(matrix.nodes), edges=edges)
