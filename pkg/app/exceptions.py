"""
Exception hierarchy for Coxeter graph analysis
"""
from typing import Any, Optional


class CoxeterError(ValueError):
    """Base class for every domain error raised by the analyzer"""


class InputError(CoxeterError):
    """A Coxeter matrix or graph file violates its invariants"""

    def __init__(self, message: str, pair: Optional[tuple[str, str]] = None):
        super().__init__(message)
        self.pair = pair


class UnknownNode(InputError):
    """A node name that is not part of the matrix"""

    def __init__(self, node: str):
        super().__init__(f"Unknown node {node!r}")
        self.node = node


class UnsupportedLabel(InputError):
    """Label outside the set the exact root engine can represent"""

    def __init__(self, label: Any, pair: Optional[tuple[str, str]] = None):
        where = f" on edge {pair[0]}-{pair[1]}" if pair else ""
        super().__init__(
            f"Label {label} is not supported by the root engine{where} "
            "(supported: 2, 3, 4, 5, 6, inf)",
            pair,
        )
        self.label = label


class NotAnOddComponent(CoxeterError):
    """The given node set is not a connected component of the odd graph"""


class NotConnected(CoxeterError):
    """The given node set is not connected in the Coxeter graph"""


class NotATree(CoxeterError):
    """A node set whose odd edges were expected to form a tree"""


class NoPath(CoxeterError):
    """No path between two nodes inside the requested node set"""


class CaseConflict(CoxeterError):
    """More than one classification case applies to one odd component"""

    def __init__(self, component: list[str], cases: list[str]):
        super().__init__(
            f"Odd component {component} matches cases {cases}; refusing to pick one"
        )
        self.component = component
        self.cases = cases


class NotUnitRoot(CoxeterError):
    """Reflection requested along a vector v with B(v, v) != 1"""


class NotSpherical(CoxeterError):
    """Operation requires a finite parabolic subgroup"""


class BadArguments(CoxeterError):
    """Arguments are individually valid but inconsistent with each other"""


class ResourceLimitError(CoxeterError):
    """A configured depth or element budget was reached"""

    def __init__(self, message: str, partial: Any = None):
        super().__init__(message)
        self.partial = partial


class DepthExceeded(ResourceLimitError):
    """A group element could not be reduced within the allowed length"""


class BudgetExceeded(ResourceLimitError):
    """Group enumeration produced more elements than the element cap"""
