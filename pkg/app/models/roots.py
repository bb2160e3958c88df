"""
Reflection representation: bilinear form, roots and group elements
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from app.exceptions import NotUnitRoot, UnsupportedLabel
from app.models.coxeter_matrix import CoxeterMatrix, Label, format_label, is_infinite
from app.models.field_element import (
    DEFAULT_SIGN_DPS,
    ONE,
    SQRT2,
    SQRT3,
    SQRT5,
    ZERO,
    FieldElement,
)

SUPPORTED_LABELS = (2, 3, 4, 5, 6)

_HALF = Fraction(1, 2)

# B(a, b) = -cos(pi / m_ab)
_FORM_ENTRIES: dict[int, FieldElement] = {
    1: ONE,
    2: ZERO,
    3: FieldElement.from_rational(-_HALF),
    4: -SQRT2 * _HALF,
    5: (ONE + SQRT5) * Fraction(-1, 4),
    6: -SQRT3 * _HALF,
}
_FORM_INFINITY = FieldElement.from_rational(-1)


def form_entry(m: Label) -> FieldElement:
    """Exact value of -cos(pi/m) for the labels the engine supports"""
    if is_infinite(m):
        return _FORM_INFINITY
    try:
        return _FORM_ENTRIES[int(m)]
    except KeyError:
        raise UnsupportedLabel(format_label(m)) from None


@dataclass(frozen=True)
class Root:
    """Vector in V given by coordinates over the simple roots"""

    coords: tuple[FieldElement, ...]

    @classmethod
    def simple(cls, rank: int, i: int) -> Root:
        return cls(tuple(ONE if k == i else ZERO for k in range(rank)))

    @classmethod
    def zero(cls, rank: int) -> Root:
        return cls((ZERO,) * rank)

    @property
    def rank(self) -> int:
        return len(self.coords)

    @property
    def support(self) -> frozenset[int]:
        return frozenset(i for i, c in enumerate(self.coords) if c)

    @property
    def is_zero(self) -> bool:
        return not any(self.coords)

    def is_positive(self, dps: int = DEFAULT_SIGN_DPS) -> bool:
        return not self.is_zero and all(c.sign(dps) >= 0 for c in self.coords)

    def is_negative(self, dps: int = DEFAULT_SIGN_DPS) -> bool:
        return not self.is_zero and all(c.sign(dps) <= 0 for c in self.coords)

    def leading_sign(self, dps: int = DEFAULT_SIGN_DPS) -> int:
        """Sign of the first nonzero coordinate; for a root this is its sign"""
        for c in self.coords:
            if c:
                return c.sign(dps)
        return 0

    def normalized(self, dps: int = DEFAULT_SIGN_DPS) -> Root:
        """The positive one of ±self"""
        return -self if self.leading_sign(dps) < 0 else self

    def simple_index(self) -> Optional[int]:
        """Index i when self is exactly the simple root e_i"""
        support = self.support
        if len(support) == 1:
            (i,) = support
            if self.coords[i] == 1:
                return i
        return None

    def __neg__(self) -> Root:
        return Root(tuple(-c for c in self.coords))

    def __add__(self, other: Root) -> Root:
        return Root(tuple(x + y for x, y in zip(self.coords, other.coords)))

    def __sub__(self, other: Root) -> Root:
        return Root(tuple(x - y for x, y in zip(self.coords, other.coords)))

    def scaled(self, factor: FieldElement | int | Fraction) -> Root:
        return Root(tuple(c * factor for c in self.coords))

    def __str__(self) -> str:
        return "(" + ", ".join(str(c) for c in self.coords) + ")"


@dataclass(frozen=True)
class BilinearForm:
    """Gram matrix of B on the simple roots"""

    nodes: tuple[str, ...]
    gram: tuple[tuple[FieldElement, ...], ...]

    @classmethod
    def from_matrix(cls, matrix: CoxeterMatrix) -> BilinearForm:
        rows = []
        for i in range(matrix.rank):
            row = []
            for j in range(matrix.rank):
                m = matrix.m(i, j)
                try:
                    row.append(form_entry(m))
                except UnsupportedLabel:
                    raise UnsupportedLabel(
                        format_label(m), (matrix.nodes[i], matrix.nodes[j])
                    ) from None
            rows.append(tuple(row))
        return cls(matrix.nodes, tuple(rows))

    @property
    def rank(self) -> int:
        return len(self.nodes)

    def neighbours(self, s: int) -> tuple[int, ...]:
        """Indices j != s with B(e_s, e_j) != 0"""
        return tuple(j for j, x in enumerate(self.gram[s]) if j != s and x)

    def pair_with_simple(self, s: int, coords: Sequence[FieldElement]) -> FieldElement:
        """B(e_s, v)"""
        row = self.gram[s]
        total = ZERO
        for j, c in enumerate(coords):
            if c and row[j]:
                total = total + row[j] * c
        return total

    def __call__(self, u: Root, v: Root) -> FieldElement:
        total = ZERO
        for i, x in enumerate(u.coords):
            if x:
                total = total + x * self.pair_with_simple(i, v.coords)
        return total

    def leading_principal_minors(self) -> list[FieldElement]:
        """Determinants of the top-left k x k blocks, k = 1..rank"""
        return [_determinant([list(row[:k]) for row in self.gram[:k]]) for k in range(1, self.rank + 1)]

    def is_positive_definite(self, dps: int = DEFAULT_SIGN_DPS) -> bool:
        """Sylvester's criterion via symmetric elimination; stops at the first non-positive pivot"""
        a = [list(row) for row in self.gram]
        n = len(a)
        for k in range(n):
            pivot = a[k][k]
            if pivot.sign(dps) <= 0:
                return False
            inv = pivot.inverse()
            for i in range(k + 1, n):
                if not a[i][k]:
                    continue
                factor = a[i][k] * inv
                for j in range(k + 1, n):
                    if a[k][j]:
                        a[i][j] = a[i][j] - factor * a[k][j]
        return True


def _determinant(rows: list[list[FieldElement]]) -> FieldElement:
    a = [list(r) for r in rows]
    n = len(a)
    det = ONE
    for k in range(n):
        pivot_row = next((i for i in range(k, n) if a[i][k]), None)
        if pivot_row is None:
            return ZERO
        if pivot_row != k:
            a[k], a[pivot_row] = a[pivot_row], a[k]
            det = -det
        pivot = a[k][k]
        det = det * pivot
        inv = pivot.inverse()
        for i in range(k + 1, n):
            if not a[i][k]:
                continue
            factor = a[i][k] * inv
            for j in range(k, n):
                if a[k][j]:
                    a[i][j] = a[i][j] - factor * a[k][j]
    return det


class GroupElement:
    """Linear map on V stored as its columns: columns[j] = w(e_j)"""

    __slots__ = ("columns", "_hash")

    def __init__(self, columns: Sequence[Sequence[FieldElement]]):
        self.columns: tuple[tuple[FieldElement, ...], ...] = tuple(tuple(c) for c in columns)
        self._hash: Optional[int] = None

    @classmethod
    def identity(cls, rank: int) -> GroupElement:
        return cls([[ONE if i == j else ZERO for i in range(rank)] for j in range(rank)])

    @classmethod
    def simple_reflection(cls, form: BilinearForm, s: int) -> GroupElement:
        return cls.identity(form.rank).times_simple(form, s)

    @classmethod
    def reflection_along(cls, form: BilinearForm, root: Root) -> GroupElement:
        """v -> v - 2 B(root, v) root; requires B(root, root) = 1"""
        if form(root, root) != 1:
            raise NotUnitRoot(f"B(v, v) = {form(root, root)} for v = {root}")
        columns = []
        for j in range(form.rank):
            coeff = form(root, Root.simple(form.rank, j)) * 2
            e_j = Root.simple(form.rank, j)
            columns.append((e_j - root.scaled(coeff)).coords)
        return cls(columns)

    @property
    def rank(self) -> int:
        return len(self.columns)

    def column(self, j: int) -> Root:
        return Root(self.columns[j])

    def times_simple(self, form: BilinearForm, s: int) -> GroupElement:
        """w * r_s: only column s and the columns of its neighbours change"""
        cols = list(self.columns)
        col_s = cols[s]
        for j in form.neighbours(s):
            factor = form.gram[s][j] * 2
            cols[j] = tuple(x - factor * y if y else x for x, y in zip(cols[j], col_s))
        cols[s] = tuple(-y for y in col_s)
        return GroupElement(cols)

    def simple_times(self, form: BilinearForm, s: int) -> GroupElement:
        """r_s * w: only coordinate s of each column changes"""
        cols = []
        for col in self.columns:
            shift = form.pair_with_simple(s, col) * 2
            if not shift:
                cols.append(col)
                continue
            updated = list(col)
            updated[s] = updated[s] - shift
            cols.append(tuple(updated))
        return GroupElement(cols)

    def apply(self, root: Root) -> Root:
        out = [ZERO] * self.rank
        for j, c in enumerate(root.coords):
            if not c:
                continue
            for i, x in enumerate(self.columns[j]):
                if x:
                    out[i] = out[i] + c * x
        return Root(tuple(out))

    def __mul__(self, other: GroupElement) -> GroupElement:
        return GroupElement([self.apply(Root(col)).coords for col in other.columns])

    def inverse(self) -> GroupElement:
        """Gauss-Jordan inverse over the field"""
        n = self.rank
        # rows of the matrix, augmented with the identity
        a = [[self.columns[j][i] for j in range(n)] + [ONE if i == k else ZERO for k in range(n)] for i in range(n)]
        for k in range(n):
            pivot_row = next((i for i in range(k, n) if a[i][k]), None)
            if pivot_row is None:
                raise ZeroDivisionError("Singular matrix")
            a[k], a[pivot_row] = a[pivot_row], a[k]
            inv = a[k][k].inverse()
            a[k] = [x * inv for x in a[k]]
            for i in range(n):
                if i != k and a[i][k]:
                    factor = a[i][k]
                    a[i] = [x - factor * y for x, y in zip(a[i], a[k])]
        return GroupElement([[a[i][n + j] for i in range(n)] for j in range(n)])

    @property
    def is_identity(self) -> bool:
        return all(
            x == (1 if i == j else 0) for j, col in enumerate(self.columns) for i, x in enumerate(col)
        )

    def acts_as_minus_identity_on(self, indices: Iterable[int]) -> bool:
        """w(e_j) = -e_j for every j in indices"""
        for j in indices:
            col = self.columns[j]
            if any(x != (-1 if i == j else 0) for i, x in enumerate(col)):
                return False
        return True

    def preserves_form(self, form: BilinearForm) -> bool:
        n = self.rank
        images = [self.column(j) for j in range(n)]
        return all(
            form(images[i], images[j]) == form.gram[i][j] for i in range(n) for j in range(i, n)
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GroupElement):
            return NotImplemented
        return self.columns == other.columns

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self.columns)
        return self._hash

    def __repr__(self) -> str:
        return "GroupElement(" + ", ".join(str(Root(c)) for c in self.columns) + ")"
