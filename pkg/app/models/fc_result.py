"""
Finite continuation results and rigidity report models
"""
import enum
from dataclasses import dataclass, field
from typing import Optional

from app.models.coxeter_matrix import NodeSet


class FcKind(str, enum.Enum):
    """Whether FC(r_a) is a visible subgroup"""
    VISIBLE = "Visible"
    NOT_VISIBLE = "NotVisible"


class CaseTag(str, enum.Enum):
    """Which case of the classification decided the result"""
    A = "A"
    B = "B"
    C = "C"
    D = "D"


class Verdict(str, enum.Enum):
    """Rigidity verdict"""
    REFLECTIONS_DETERMINED = "ReflectionsDetermined"
    NOT_APPLICABLE = "NotApplicable"


@dataclass(frozen=True)
class ComponentAnalysis:
    """Everything the classifier derives from one odd component M"""

    odd_component: NodeSet
    even_closure: NodeSet
    main_component: NodeSet  # component of Even(M) containing M
    spherical_components: tuple[NodeSet, ...]
    case_tag: CaseTag
    foci: tuple[tuple[int, int], ...] = ()
    half_foci: tuple[tuple[int, int], ...] = ()
    c3_neighbours: tuple[int, ...] = ()
    diagnostics: tuple[str, ...] = ()

    @property
    def spherical_union(self) -> NodeSet:
        union = NodeSet(self.odd_component.universe, frozenset())
        for comp in self.spherical_components:
            union = union.union(comp)
        return union


@dataclass(frozen=True)
class FcResult:
    """FC(r_a) for one simple reflection.

    witness holds node names: the focus pair (a, b) for case C, the
    half-focus {a, b} for case D, the C3-neighbour list for case B and is
    empty for case A.
    """

    node: str
    kind: FcKind
    case_tag: CaseTag
    J: Optional[NodeSet] = None
    witness: tuple[str, ...] = ()
    diagnostics: tuple[str, ...] = ()

    @property
    def is_visible(self) -> bool:
        return self.kind == FcKind.VISIBLE

    @property
    def is_trivial(self) -> bool:
        """FC(r_a) = <r_a>"""
        return self.is_visible and self.J is not None and self.J.names() == [self.node]


@dataclass(frozen=True)
class RigidityReport:
    """Hypothesis flags and verdict for the 2-spherical rigidity statement"""

    fc_trivial: dict[str, bool]
    irreducible: bool
    non_spherical: bool
    two_spherical: bool
    finite_rank: bool = True
    verdict: Verdict = Verdict.NOT_APPLICABLE
    cross_check_passed: bool = True
    notes: tuple[str, ...] = field(default_factory=tuple)

    @property
    def hypotheses_hold(self) -> bool:
        return self.irreducible and self.non_spherical and self.two_spherical and self.finite_rank
