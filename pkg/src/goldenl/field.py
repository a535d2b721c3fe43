"""Exact arithmetic in Q[phi] for phi = (1 + sqrt 5) / 2.

Every value is a + b*phi with rational a, b; products reduce by phi**2 = phi + 1.
Signs and comparisons are decided exactly, so no floating point enters any
decision made with these types.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering
from typing import Union

PHI_FLOAT = (1.0 + math.sqrt(5.0)) / 2.0

Rational = Union[int, Fraction]


def _as_fraction(value: Rational) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"expected int or Fraction, got {type(value).__name__}")


def _fraction_str(value: Fraction) -> str:
    return f"{value.numerator}/{value.denominator}"


@total_ordering
@dataclass(frozen=True, eq=False)
class GoldenNumber:
    """The field element a + b*phi."""

    a: Fraction = Fraction(0)
    b: Fraction = Fraction(0)

    def __post_init__(self) -> None:
        object.__setattr__(self, "a", _as_fraction(self.a))
        object.__setattr__(self, "b", _as_fraction(self.b))

    @classmethod
    def _coerce(cls, value: GoldenNumber | Rational) -> GoldenNumber | None:
        if isinstance(value, GoldenNumber):
            return value
        if isinstance(value, (int, Fraction)):
            return cls(_as_fraction(value))
        return None

    # ring structure

    def __add__(self, other: GoldenNumber | Rational) -> GoldenNumber:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GoldenNumber(self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __sub__(self, other: GoldenNumber | Rational) -> GoldenNumber:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GoldenNumber(self.a - o.a, self.b - o.b)

    def __rsub__(self, other: GoldenNumber | Rational) -> GoldenNumber:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __neg__(self) -> GoldenNumber:
        return GoldenNumber(-self.a, -self.b)

    def __mul__(self, other: GoldenNumber | Rational) -> GoldenNumber:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        # (a + b phi)(c + d phi) = ac + bd + (ad + bc + bd) phi
        return GoldenNumber(
            self.a * o.a + self.b * o.b,
            self.a * o.b + self.b * o.a + self.b * o.b,
        )

    __rmul__ = __mul__

    def __truediv__(self, other: GoldenNumber | Rational) -> GoldenNumber:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other: GoldenNumber | Rational) -> GoldenNumber:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def conjugate(self) -> GoldenNumber:
        """Image under the field automorphism phi -> 1 - phi."""
        return GoldenNumber(self.a + self.b, -self.b)

    def norm(self) -> Fraction:
        """Product with the conjugate: a**2 + a*b - b**2, a rational."""
        return self.a * self.a + self.a * self.b - self.b * self.b

    def inverse(self) -> GoldenNumber:
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("zero has no inverse in Q[phi]")
        return GoldenNumber((self.a + self.b) / n, -self.b / n)

    # exact order structure

    def sign(self) -> int:
        """Exact sign in {-1, 0, 1}.

        Writes 2*(a + b*phi) = p + q*sqrt(5) with p = 2a + b, q = b. Same-sign
        p, q settle it at once; mixed signs compare p**2 against 5*q**2. The
        mixed case cannot tie: p**2 = 5*q**2 with rational p, q forces q = 0.
        """
        p = 2 * self.a + self.b
        q = self.b
        if p >= 0 and q >= 0:
            return 1 if (p != 0 or q != 0) else 0
        if p <= 0 and q <= 0:
            return -1
        if p > 0:  # q < 0
            return 1 if p * p > 5 * q * q else -1
        return -1 if p * p > 5 * q * q else 1

    @property
    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def __eq__(self, other: object) -> bool:
        o = self._coerce(other)  # type: ignore[arg-type]
        if o is None:
            return NotImplemented
        return self.a == o.a and self.b == o.b

    def __hash__(self) -> int:
        return hash((self.a, self.b))

    def __lt__(self, other: GoldenNumber | Rational) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return (self - o).sign() < 0

    # conversions

    def to_float(self) -> float:
        return float(self.a) + float(self.b) * PHI_FLOAT

    __float__ = to_float

    def serialize(self) -> str:
        return f"{_fraction_str(self.a)} + {_fraction_str(self.b)}*phi"

    def to_json_dict(self) -> dict[str, str]:
        return {"a": _fraction_str(self.a), "b": _fraction_str(self.b)}

    @classmethod
    def from_json_dict(cls, data: dict[str, str]) -> GoldenNumber:
        return cls(Fraction(data["a"]), Fraction(data["b"]))

    def __str__(self) -> str:
        if self.b == 0:
            return str(self.a)
        if self.b == 1:
            phi_part = "phi"
        elif self.b == -1:
            phi_part = "-phi"
        else:
            phi_part = f"{self.b}*phi"
        if self.a == 0:
            return phi_part
        joiner = "-" if self.b < 0 else "+"
        return f"{self.a} {joiner} {phi_part.lstrip('-')}"

    def __repr__(self) -> str:
        return f"GoldenNumber({self.a}, {self.b})"


ZERO = GoldenNumber(0, 0)
ONE = GoldenNumber(1, 0)
PHI = GoldenNumber(0, 1)
PHI_SQUARED = GoldenNumber(1, 1)
PHI_INVERSE = GoldenNumber(-1, 1)  # 1/phi = phi - 1


@dataclass(frozen=True)
class GoldenVector:
    """A column vector with GoldenNumber entries."""

    x: GoldenNumber
    y: GoldenNumber

    @classmethod
    def from_rationals(cls, xa: Rational, xb: Rational, ya: Rational, yb: Rational) -> GoldenVector:
        return cls(GoldenNumber(xa, xb), GoldenNumber(ya, yb))

    def __add__(self, other: GoldenVector) -> GoldenVector:
        return GoldenVector(self.x + other.x, self.y + other.y)

    def __sub__(self, other: GoldenVector) -> GoldenVector:
        return GoldenVector(self.x - other.x, self.y - other.y)

    def __neg__(self) -> GoldenVector:
        return GoldenVector(-self.x, -self.y)

    def scaled(self, factor: GoldenNumber | Rational) -> GoldenVector:
        return GoldenVector(self.x * factor, self.y * factor)

    def cross(self, other: GoldenVector) -> GoldenNumber:
        return self.x * other.y - self.y * other.x

    def dot(self, other: GoldenVector) -> GoldenNumber:
        return self.x * other.x + self.y * other.y

    @property
    def is_zero(self) -> bool:
        return self.x.is_zero and self.y.is_zero

    def to_floats(self) -> tuple[float, float]:
        return (self.x.to_float(), self.y.to_float())

    def quadruple(self) -> list[str]:
        """The coefficients [x.a, x.b, y.a, y.b] as rational strings."""
        return [
            _fraction_str(self.x.a),
            _fraction_str(self.x.b),
            _fraction_str(self.y.a),
            _fraction_str(self.y.b),
        ]

    def __str__(self) -> str:
        return f"({self.x}, {self.y})"


@dataclass(frozen=True)
class GoldenMatrix:
    """A 2x2 matrix ((a, b), (c, d)) with GoldenNumber entries."""

    a: GoldenNumber
    b: GoldenNumber
    c: GoldenNumber
    d: GoldenNumber

    @classmethod
    def identity(cls) -> GoldenMatrix:
        return cls(ONE, ZERO, ZERO, ONE)

    def __matmul__(self, other: GoldenMatrix) -> GoldenMatrix:
        return GoldenMatrix(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def apply(self, v: GoldenVector) -> GoldenVector:
        return GoldenVector(self.a * v.x + self.b * v.y, self.c * v.x + self.d * v.y)

    def det(self) -> GoldenNumber:
        return self.a * self.d - self.b * self.c

    def inverse(self) -> GoldenMatrix:
        determinant = self.det()
        if determinant.is_zero:
            raise ValueError("matrix is singular")
        inv = determinant.inverse()
        return GoldenMatrix(self.d * inv, -self.b * inv, -self.c * inv, self.a * inv)

    def columns(self) -> tuple[GoldenVector, GoldenVector]:
        return (GoldenVector(self.a, self.c), GoldenVector(self.b, self.d))

    def rows(self) -> tuple[tuple[GoldenNumber, GoldenNumber], tuple[GoldenNumber, GoldenNumber]]:
        return ((self.a, self.b), (self.c, self.d))

    def to_float_rows(self) -> tuple[tuple[float, float], tuple[float, float]]:
        return (
            (self.a.to_float(), self.b.to_float()),
            (self.c.to_float(), self.d.to_float()),
        )
