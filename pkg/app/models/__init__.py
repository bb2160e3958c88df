"""
Domain models
"""
from app.models.coxeter_matrix import INFINITY, CoxeterMatrix, Label, NodeSet
from app.models.fc_result import CaseTag, ComponentAnalysis, FcKind, FcResult, RigidityReport, Verdict
from app.models.field_element import FieldElement
from app.models.finite_type import Family, FiniteType
from app.models.roots import BilinearForm, GroupElement, Root

__all__ = [
    "INFINITY",
    "CoxeterMatrix",
    "Label",
    "NodeSet",
    "CaseTag",
    "ComponentAnalysis",
    "FcKind",
    "FcResult",
    "RigidityReport",
    "Verdict",
    "FieldElement",
    "Family",
    "FiniteType",
    "BilinearForm",
    "GroupElement",
    "Root",
]
