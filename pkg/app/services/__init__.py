"""
Services package
"""
from app.services.classifier_service import FcClassifierService
from app.services.finite_type_service import FiniteTypeService
from app.services.graph_file_service import GraphFileService
from app.services.graph_service import CoxeterGraphService
from app.services.oracle_service import OracleService
from app.services.report_service import ReportService
from app.services.root_engine_service import RootEngineService

__all__ = [
    "CoxeterGraphService",
    "FcClassifierService",
    "FiniteTypeService",
    "GraphFileService",
    "OracleService",
    "ReportService",
    "RootEngineService",
]
