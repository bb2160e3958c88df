"""
Analysis API Router
"""
from functools import lru_cache
from typing import Optional

from fastapi import APIRouter, Depends, HTTPException, Query
from fastapi.responses import PlainTextResponse

from app.config import get_settings
from app.exceptions import BudgetExceeded
from app.schemas import (
    AnalysisReport,
    ClassifyResponse,
    FcResultResponse,
    GraphFile,
    OracleComparisonResponse,
    RigidityResponse,
)
from app.services.classifier_service import FcClassifierService
from app.services.oracle_service import OracleResult, OracleService
from app.services.report_service import ReportService

router = APIRouter()


@lru_cache
def get_report_service() -> ReportService:
    return ReportService(get_settings().templates_path)


@router.post("/analyze", response_model=AnalysisReport)
def analyze(
    graph: GraphFile,
    with_oracle: bool = False,
    max_length: Optional[int] = Query(None, ge=0),
    element_cap: Optional[int] = Query(None, ge=1),
    reports: ReportService = Depends(get_report_service),
):
    """Full report: odd components, FC table, rigidity, optional oracle"""
    return reports.build_analysis(
        graph.to_matrix(), with_oracle=with_oracle, max_length=max_length, element_cap=element_cap
    )


@router.post("/fc", response_model=FcResultResponse)
def finite_continuation(
    graph: GraphFile,
    node: str = Query(..., min_length=1),
    reports: ReportService = Depends(get_report_service),
):
    """FC(r_a) for one node"""
    classifier = FcClassifierService(graph.to_matrix())
    return reports.fc_response(classifier.finite_continuation(node))


@router.post("/classify", response_model=ClassifyResponse)
def classify(
    graph: GraphFile,
    subset: str = Query(..., description="comma-separated node names"),
    reports: ReportService = Depends(get_report_service),
):
    """Finite type of every component of a subset"""
    matrix = graph.to_matrix()
    names = [name.strip() for name in subset.split(",") if name.strip()]
    return reports.classify_response(FcClassifierService(matrix), matrix.node_set(names))


@router.post("/rigidity", response_model=RigidityResponse)
def rigidity(graph: GraphFile, reports: ReportService = Depends(get_report_service)):
    """Rigidity hypotheses and verdict"""
    return reports.rigidity_response(FcClassifierService(graph.to_matrix()).rigidity_report())


@router.post("/oracle-fc", response_model=OracleComparisonResponse)
def oracle_fc(
    graph: GraphFile,
    node: str = Query(..., min_length=1),
    max_length: Optional[int] = Query(None, ge=0),
    element_cap: Optional[int] = Query(None, ge=1),
    reports: ReportService = Depends(get_report_service),
):
    """Classifier prediction against the brute-force oracle"""
    matrix = graph.to_matrix()
    classifier = FcClassifierService(matrix)
    oracle = OracleService(matrix, classifier=classifier, max_length=max_length, element_cap=element_cap)
    try:
        comparison = oracle.compare_with_classifier(node, max_length)
    except BudgetExceeded as exc:
        if not isinstance(exc.partial, OracleResult):
            raise
        row = reports.partial_oracle_response(oracle, node, classifier.finite_continuation(node), exc.partial)
        raise HTTPException(status_code=413, detail={"message": str(exc), "partial": row.model_dump()})
    return reports.oracle_response(oracle, comparison)


@router.post("/export-dot", response_class=PlainTextResponse)
def export_dot(graph: GraphFile, reports: ReportService = Depends(get_report_service)):
    """Coxeter graph in DOT"""
    return PlainTextResponse(reports.export_dot(graph.to_matrix()), media_type="text/vnd.graphviz")
