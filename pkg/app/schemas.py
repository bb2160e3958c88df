"""
Pydantic schemas for graph files and analysis reports
"""
from typing import Dict, List, Literal, Optional, Union

from pydantic import BaseModel, ConfigDict, Field, StrictInt, field_validator, model_validator

from app.models.coxeter_matrix import INFINITY, CoxeterMatrix, format_label


# ============ Graph File Schemas ============

class EdgeSpec(BaseModel):
    """One labelled edge; unlisted pairs default to m = 2"""
    model_config = ConfigDict(extra="forbid")

    u: str = Field(..., min_length=1)
    v: str = Field(..., min_length=1)
    m: Union[StrictInt, Literal["inf"]]

    @field_validator("m")
    @classmethod
    def check_label(cls, v: Union[int, str]) -> Union[int, str]:
        if isinstance(v, int) and v < 2:
            raise ValueError("label must be an integer >= 2 or 'inf'")
        return v

    @model_validator(mode="after")
    def check_not_loop(self) -> "EdgeSpec":
        if self.u == self.v:
            raise ValueError(f"edge {self.u}-{self.v} joins a node to itself")
        return self


class GraphFile(BaseModel):
    """Graph input format: node list plus labelled edges"""
    model_config = ConfigDict(extra="forbid")

    nodes: List[str] = Field(..., min_length=1)
    edges: List[EdgeSpec] = []

    @model_validator(mode="after")
    def check_consistency(self) -> "GraphFile":
        seen = set()
        for name in self.nodes:
            if name in seen:
                raise ValueError(f"duplicate node name {name!r}")
            seen.add(name)
        pairs = set()
        for i, edge in enumerate(self.edges):
            for end in (edge.u, edge.v):
                if end not in seen:
                    raise ValueError(f"edges[{i}] names unknown node {end!r}")
            pair = frozenset((edge.u, edge.v))
            if pair in pairs:
                raise ValueError(f"edges[{i}] lists {edge.u}-{edge.v} twice")
            pairs.add(pair)
        return self

    def to_matrix(self) -> CoxeterMatrix:
        return CoxeterMatrix.from_edges(
            self.nodes,
            ((e.u, e.v, INFINITY if e.m == "inf" else e.m) for e in self.edges),
        )

    @classmethod
    def from_matrix(cls, matrix: CoxeterMatrix) -> "GraphFile":
        """Canonical file: node order kept, m = 2 pairs omitted, edges in index order"""
        edges = []
        for i, j, m in matrix.edges():
            label = format_label(m)
            edges.append(EdgeSpec(u=matrix.nodes[i], v=matrix.nodes[j], m=label if label == "inf" else int(m)))
        return cls(nodes=list(matrix.nodes), edges=edges)


# ============ Analysis Schemas ============

class FcResultResponse(BaseModel):
    """FC(r_a) for one node"""
    node: str
    kind: str
    case: str
    J: Optional[List[str]] = None
    witness: List[str] = []
    trivial: bool
    diagnostics: List[str] = []


class ComponentReport(BaseModel):
    """Derived graphs and case of one odd component"""
    odd_component: List[str]
    even_closure: List[str]
    main_component: List[str]
    spherical_components: List[List[str]]
    case: str
    foci: List[List[str]] = []
    half_foci: List[List[str]] = []
    c3_neighbours: List[str] = []


class RigidityResponse(BaseModel):
    """Rigidity hypotheses and verdict"""
    fc_trivial: Dict[str, bool]
    irreducible: bool
    non_spherical: bool
    two_spherical: bool
    finite_rank: bool
    verdict: str
    cross_check_passed: bool
    notes: List[str] = []


class ClassifiedComponent(BaseModel):
    """Finite type of one connected component"""
    nodes: List[str]
    type: str
    finite: bool
    order: Optional[int] = None
    longest_length: Optional[int] = None
    minus_one_type: bool


class ClassifyResponse(BaseModel):
    """Classification of a subset"""
    subset: List[str]
    spherical: bool
    minus_one_type: bool
    components: List[ClassifiedComponent]


class OracleComparisonResponse(BaseModel):
    """Classifier prediction against the brute-force oracle"""
    node: str
    predicted_kind: str
    predicted_case: str
    predicted_J: Optional[List[str]] = None
    predicted_size: Optional[int] = None
    oracle_size: int
    status: str
    max_length: int
    conjugates: int
    saturated: bool
    partial: bool = False
    elements: List[str] = []
    matching_subsets: List[List[str]] = []


class AnalysisReport(BaseModel):
    """Full report for one graph"""
    graph: GraphFile
    odd_components: List[ComponentReport]
    results: List[FcResultResponse]
    rigidity: RigidityResponse
    oracle: Optional[List[OracleComparisonResponse]] = None


class HealthResponse(BaseModel):
    status: str
