"""
Exact arithmetic in Q(sqrt2, sqrt3, sqrt5)
"""
from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache, total_ordering
from typing import Iterable, Union

import mpmath

Rational = Union[int, Fraction]

# Basis elements are indexed by a bit mask over the primes (2, 3, 5):
# mask m stands for sqrt(RADICANDS[m]).
PRIMES = (2, 3, 5)
_BITS = (1, 2, 4)
_PRIME_OF_BIT = {1: 2, 2: 3, 4: 5}
RADICANDS = tuple(
    math.prod(p for p, bit in zip(PRIMES, _BITS) if mask & bit) for mask in range(8)
)
BASIS_LABELS = tuple("1" if r == 1 else f"√{r}" for r in RADICANDS)

# (i, j) -> (mask of product, rational factor)
_MUL = tuple(tuple((i ^ j, RADICANDS[i & j]) for j in range(8)) for i in range(8))

DEFAULT_SIGN_DPS = 30

_ZERO_Q = Fraction(0)


@lru_cache(maxsize=None)
def _sqrt_table(dps: int) -> tuple:
    with mpmath.workdps(dps):
        return tuple(mpmath.sqrt(r) for r in RADICANDS)


@total_ordering
class FieldElement:
    """Element of Q(√2, √3, √5) with rational coordinates on the 8-element basis"""

    __slots__ = ("_c",)

    def __init__(self, coefficients: Iterable[Rational] = ()) -> None:
        c = [Fraction(x) for x in coefficients]
        if len(c) > 8:
            raise ValueError("At most 8 coefficients")
        c.extend([_ZERO_Q] * (8 - len(c)))
        self._c: tuple[Fraction, ...] = tuple(c)

    @classmethod
    def _raw(cls, c: tuple[Fraction, ...]) -> FieldElement:
        obj = object.__new__(cls)
        obj._c = c
        return obj

    @classmethod
    def from_rational(cls, x: Rational) -> FieldElement:
        return cls._raw((Fraction(x),) + (_ZERO_Q,) * 7)

    @classmethod
    def sqrt(cls, n: int) -> FieldElement:
        """√n for n in {1, 2, 3, 5, 6, 10, 15, 30}"""
        if n not in RADICANDS:
            raise ValueError(f"√{n} is not a basis element")
        c = [_ZERO_Q] * 8
        c[RADICANDS.index(n)] = Fraction(1)
        return cls._raw(tuple(c))

    @property
    def coefficients(self) -> tuple[Fraction, ...]:
        return self._c

    @property
    def is_zero(self) -> bool:
        return not any(self._c)

    @property
    def is_rational(self) -> bool:
        return not any(self._c[1:])

    @property
    def rational_part(self) -> Fraction:
        return self._c[0]

    # ---- arithmetic -------------------------------------------------

    def __add__(self, other: object) -> FieldElement:
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return FieldElement._raw(tuple(x + y for x, y in zip(self._c, o._c)))

    __radd__ = __add__

    def __neg__(self) -> FieldElement:
        return FieldElement._raw(tuple(-x for x in self._c))

    def __sub__(self, other: object) -> FieldElement:
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return FieldElement._raw(tuple(x - y for x, y in zip(self._c, o._c)))

    def __rsub__(self, other: object) -> FieldElement:
        return (-self) + other

    def __mul__(self, other: object) -> FieldElement:
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return FieldElement._raw(tuple(x * other for x in self._c))
        o = _coerce(other)
        if o is None:
            return NotImplemented
        a, b = self._c, o._c
        out = [_ZERO_Q] * 8
        for i in range(8):
            ai = a[i]
            if not ai:
                continue
            row = _MUL[i]
            for j in range(8):
                bj = b[j]
                if bj:
                    k, f = row[j]
                    out[k] += ai * bj * f
        return FieldElement._raw(tuple(out))

    __rmul__ = __mul__

    def conjugate(self, bit: int) -> FieldElement:
        """Galois conjugate flipping the sign of √p for the prime of `bit`"""
        return FieldElement._raw(tuple(-x if mask & bit else x for mask, x in enumerate(self._c)))

    def inverse(self) -> FieldElement:
        if self.is_zero:
            raise ZeroDivisionError("FieldElement division by zero")
        num, den = ONE, self
        for bit in (4, 2, 1):
            conj = den.conjugate(bit)
            num, den = num * conj, den * conj
        return num * (1 / den._c[0])

    def __truediv__(self, other: object) -> FieldElement:
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self * (1 / Fraction(other))
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other: object) -> FieldElement:
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def split(self, bit: int) -> tuple[FieldElement, FieldElement]:
        """Write self = p + q·√p_bit with p, q free of that radical"""
        p = [_ZERO_Q] * 8
        q = [_ZERO_Q] * 8
        for mask, x in enumerate(self._c):
            if mask & bit:
                q[mask ^ bit] = x
            else:
                p[mask] = x
        return FieldElement._raw(tuple(p)), FieldElement._raw(tuple(q))

    # ---- order ------------------------------------------------------

    def sign(self, dps: int = DEFAULT_SIGN_DPS) -> int:
        """Exact sign: float then multiprecision screen, squaring elimination if undecided"""
        c = self._c
        nonzero = [i for i in range(8) if c[i]]
        if not nonzero:
            return 0
        if len(nonzero) == 1:
            return 1 if c[nonzero[0]] > 0 else -1
        screened = _float_sign(c, nonzero)
        if screened is not None:
            return screened
        screened = _screen_sign(c, nonzero, dps)
        if screened is not None:
            return screened
        return _exact_sign(self)

    def __eq__(self, other: object) -> bool:
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return self._c == o._c

    def __lt__(self, other: object) -> bool:
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return (self - o).sign() < 0

    def __hash__(self) -> int:
        if self.is_rational:
            return hash(self._c[0])
        return hash(self._c)

    def __bool__(self) -> bool:
        return not self.is_zero

    # ---- conversion -------------------------------------------------

    def __float__(self) -> float:
        return float(sum((float(x) * math.sqrt(r) for x, r in zip(self._c, RADICANDS) if x), 0.0))

    def to_mpf(self, dps: int = DEFAULT_SIGN_DPS) -> mpmath.mpf:
        roots = _sqrt_table(dps)
        with mpmath.workdps(dps):
            return mpmath.fsum(
                mpmath.mpf(x.numerator) / x.denominator * roots[i]
                for i, x in enumerate(self._c)
                if x
            )

    def __repr__(self) -> str:
        return f"FieldElement({self})"

    def __str__(self) -> str:
        terms = []
        for x, label in zip(self._c, BASIS_LABELS):
            if not x:
                continue
            if label == "1":
                terms.append(str(x))
            elif x == 1:
                terms.append(label)
            elif x == -1:
                terms.append(f"-{label}")
            else:
                terms.append(f"{x}{label}" if x.denominator == 1 else f"({x}){label}")
        if not terms:
            return "0"
        return " + ".join(terms).replace("+ -", "- ")


def _coerce(value: object) -> FieldElement | None:
    if isinstance(value, FieldElement):
        return value
    if isinstance(value, (int, Fraction)) and not isinstance(value, bool):
        return FieldElement.from_rational(value)
    return None


_FLOAT_ROOTS = tuple(math.sqrt(r) for r in RADICANDS)


def _float_sign(c: tuple[Fraction, ...], nonzero: list[int]) -> int | None:
    total = 0.0
    magnitude = 0.0
    try:
        for i in nonzero:
            term = float(c[i]) * _FLOAT_ROOTS[i]
            total += term
            magnitude += abs(term)
    except OverflowError:
        return None
    if not math.isfinite(magnitude):
        return None
    # float error stays far below 1e-12 relative for at most 8 terms
    bound = magnitude * 1e-12
    if total > bound:
        return 1
    if total < -bound:
        return -1
    return None


def _screen_sign(c: tuple[Fraction, ...], nonzero: list[int], dps: int) -> int | None:
    roots = _sqrt_table(dps)
    with mpmath.workdps(dps):
        total = mpmath.mpf(0)
        magnitude = mpmath.mpf(0)
        for i in nonzero:
            term = mpmath.mpf(c[i].numerator) / c[i].denominator * roots[i]
            total += term
            magnitude += abs(term)
        bound = magnitude * mpmath.mpf(10) ** (5 - dps)
        if total > bound:
            return 1
        if total < -bound:
            return -1
    return None


def _exact_sign(x: FieldElement) -> int:
    c = x.coefficients
    if x.is_rational:
        return (c[0] > 0) - (c[0] < 0)
    bit = next(b for b in (4, 2, 1) if any(c[m] for m in range(8) if m & b))
    p, q = x.split(bit)
    sp, sq = _exact_sign(p), _exact_sign(q)
    if sq == 0 or sp == sq:
        return sp if sp else sq
    if sp == 0:
        return sq
    # opposite signs: compare p² with r·q²
    return sp * _exact_sign(p * p - q * q * _PRIME_OF_BIT[bit])


ZERO = FieldElement()
ONE = FieldElement.from_rational(1)
SQRT2 = FieldElement.sqrt(2)
SQRT3 = FieldElement.sqrt(3)
SQRT5 = FieldElement.sqrt(5)
