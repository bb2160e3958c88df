"""
Finite Coxeter type model
"""
import enum
import math
from dataclasses import dataclass
from typing import Optional


class Family(str, enum.Enum):
    """Finite-type family; B also covers C (identical diagram)"""
    A = "A"
    B = "B"
    D = "D"
    E = "E"
    F = "F"
    H = "H"
    I2 = "I2"
    NOT_FINITE = "NotFinite"


_EXCEPTIONAL_ORDERS = {
    (Family.E, 6): 51840,
    (Family.E, 7): 2903040,
    (Family.E, 8): 696729600,
    (Family.F, 4): 1152,
    (Family.H, 3): 120,
    (Family.H, 4): 14400,
}


@dataclass(frozen=True)
class FiniteType:
    """Classification verdict for a connected Coxeter diagram"""

    family: Family
    rank: int
    i2_label: Optional[int] = None

    def __post_init__(self) -> None:
        legal = {
            Family.A: self.rank >= 1,
            Family.B: self.rank >= 2,
            Family.D: self.rank >= 4,
            Family.E: self.rank in (6, 7, 8),
            Family.F: self.rank == 4,
            Family.H: self.rank in (3, 4),
            Family.I2: self.rank == 2 and self.i2_label is not None and self.i2_label >= 5,
            Family.NOT_FINITE: self.rank >= 1,
        }[self.family]
        if not legal:
            raise ValueError(f"Illegal finite type {self.family.value}{self.rank}")
        if self.family != Family.I2 and self.i2_label is not None:
            raise ValueError("i2_label is only meaningful for the I2 family")

    @classmethod
    def dihedral(cls, m: int) -> "FiniteType":
        """I2(m) normalized: I2(3) = A2, I2(4) = B2"""
        if m == 3:
            return cls(Family.A, 2)
        if m == 4:
            return cls(Family.B, 2)
        return cls(Family.I2, 2, m)

    @property
    def is_finite(self) -> bool:
        return self.family != Family.NOT_FINITE

    @property
    def name(self) -> str:
        if self.family == Family.I2:
            return f"I2({self.i2_label})"
        if self.family == Family.NOT_FINITE:
            return "NotFinite"
        return f"{self.family.value}{self.rank}"

    @property
    def order(self) -> Optional[int]:
        """|W| for finite types, None otherwise"""
        n = self.rank
        if self.family == Family.A:
            return math.factorial(n + 1)
        if self.family == Family.B:
            return 2**n * math.factorial(n)
        if self.family == Family.D:
            return 2 ** (n - 1) * math.factorial(n)
        if self.family == Family.I2:
            return 2 * self.i2_label
        return _EXCEPTIONAL_ORDERS.get((self.family, n))

    @property
    def longest_length(self) -> Optional[int]:
        """Length of the longest element, i.e. the number of positive roots"""
        n = self.rank
        if self.family == Family.A:
            return n * (n + 1) // 2
        if self.family == Family.B:
            return n * n
        if self.family == Family.D:
            return n * (n - 1)
        if self.family == Family.I2:
            return self.i2_label
        return {
            (Family.E, 6): 36,
            (Family.E, 7): 63,
            (Family.E, 8): 120,
            (Family.F, 4): 24,
            (Family.H, 3): 15,
            (Family.H, 4): 60,
        }.get((self.family, n))

    @property
    def is_minus_one_type(self) -> bool:
        """Longest element acts as -1 (is central)"""
        if self.family == Family.A:
            return self.rank == 1
        if self.family == Family.B:
            return True
        if self.family == Family.D:
            return self.rank % 2 == 0
        if self.family == Family.E:
            return self.rank in (7, 8)
        if self.family in (Family.F, Family.H):
            return True
        if self.family == Family.I2:
            return self.i2_label % 2 == 0
        return False

    def __str__(self) -> str:
        return self.name
