"""Exact numbers of the form a + b*sqrt(m) with rational a, b."""

import math
from fractions import Fraction
from functools import total_ordering
from typing import Any, Dict, Tuple, Union

from sympy import factorint

from rigikit.errors import InvalidArgumentError

Rational = Union[int, Fraction]


def fraction_to_str(value: Rational) -> str:
    """Serialize a rational as "p/q" (or "p" when integral)."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def fraction_from_str(text: str) -> Fraction:
    return Fraction(text.strip())


def _split_square(m: int) -> Tuple[int, int]:
    """Write m = s^2 * r with r square-free; returns (s, r)."""
    s, r = 1, 1
    for prime, exponent in factorint(m).items():
        s *= prime ** (exponent // 2)
        if exponent % 2:
            r *= prime
    return s, r


@total_ordering
class QuadraticNumber:
    """
    Element a + b*sqrt(m) of the quadratic field Q(sqrt(m)).

    Canonical form: m is square-free, and b == 0 exactly when m == 0.
    """

    __slots__ = ("a", "b", "m")

    a: Fraction
    b: Fraction
    m: int

    def __init__(self, a: Rational = 0, b: Rational = 0, m: int = 0):
        a_frac = Fraction(a)
        b_frac = Fraction(b)
        if m < 0:
            raise InvalidArgumentError("Radicand must be nonnegative")
        if b_frac == 0 or m == 0:
            b_frac, m = Fraction(0), 0
        else:
            s, r = _split_square(m)
            b_frac *= s
            m = r
            if m == 1:
                a_frac += b_frac
                b_frac, m = Fraction(0), 0
        object.__setattr__(self, "a", a_frac)
        object.__setattr__(self, "b", b_frac)
        object.__setattr__(self, "m", m)

    def __setattr__(self, name: str, value: Any) -> None:
        raise AttributeError("QuadraticNumber is immutable")

    def __reduce__(self) -> Any:
        return (QuadraticNumber, (self.a, self.b, self.m))

    @classmethod
    def of(cls, value: Union["QuadraticNumber", Rational]) -> "QuadraticNumber":
        if isinstance(value, QuadraticNumber):
            return value
        return cls(Fraction(value))

    @classmethod
    def sqrt(cls, n: Rational) -> "QuadraticNumber":
        """Exact square root of a nonnegative rational."""
        n = Fraction(n)
        if n < 0:
            raise InvalidArgumentError("Square root of a negative number")
        # sqrt(p/q) = sqrt(p*q)/q
        return cls(0, Fraction(1, n.denominator), n.numerator * n.denominator)

    @property
    def is_rational(self) -> bool:
        return self.m == 0

    def to_fraction(self) -> Fraction:
        if not self.is_rational:
            raise InvalidArgumentError(f"{self} is irrational")
        return self.a

    def sign(self) -> int:
        """Exact sign, decided by comparing a^2 with b^2 m."""
        sa = (self.a > 0) - (self.a < 0)
        sb = (self.b > 0) - (self.b < 0)
        if sb == 0:
            return sa
        if sa == 0 or sa == sb:
            return sb
        # Opposite signs: the larger square wins
        difference = self.a * self.a - self.b * self.b * self.m
        sd = (difference > 0) - (difference < 0)
        return sa * sd

    def conjugate(self) -> "QuadraticNumber":
        return QuadraticNumber(self.a, -self.b, self.m)

    def _coerce(self, other: Any) -> "QuadraticNumber":
        if isinstance(other, QuadraticNumber):
            result = other
        elif isinstance(other, (int, Fraction)):
            result = QuadraticNumber(other)
        else:
            raise TypeError(f"Cannot combine QuadraticNumber with {type(other)!r}")
        if self.m and result.m and self.m != result.m:
            raise InvalidArgumentError(
                f"Mixed quadratic fields Q(sqrt({self.m})) and Q(sqrt({result.m}))"
            )
        return result

    def __add__(self, other: Any) -> "QuadraticNumber":
        if not isinstance(other, (int, Fraction, QuadraticNumber)):
            return NotImplemented
        q = self._coerce(other)
        return QuadraticNumber(self.a + q.a, self.b + q.b, self.m or q.m)

    __radd__ = __add__

    def __neg__(self) -> "QuadraticNumber":
        return QuadraticNumber(-self.a, -self.b, self.m)

    def __sub__(self, other: Any) -> "QuadraticNumber":
        if not isinstance(other, (int, Fraction, QuadraticNumber)):
            return NotImplemented
        return self + (-self._coerce(other))

    def __rsub__(self, other: Any) -> "QuadraticNumber":
        if not isinstance(other, (int, Fraction)):
            return NotImplemented
        return self._coerce(other) - self

    def __mul__(self, other: Any) -> "QuadraticNumber":
        if not isinstance(other, (int, Fraction, QuadraticNumber)):
            return NotImplemented
        q = self._coerce(other)
        m = self.m or q.m
        return QuadraticNumber(
            self.a * q.a + self.b * q.b * m,
            self.a * q.b + self.b * q.a,
            m,
        )

    __rmul__ = __mul__

    def inverse(self) -> "QuadraticNumber":
        norm = self.a * self.a - self.b * self.b * self.m
        if norm == 0:
            raise ZeroDivisionError("QuadraticNumber division by zero")
        return QuadraticNumber(self.a / norm, -self.b / norm, self.m)

    def __truediv__(self, other: Any) -> "QuadraticNumber":
        if not isinstance(other, (int, Fraction, QuadraticNumber)):
            return NotImplemented
        return self * self._coerce(other).inverse()

    def __rtruediv__(self, other: Any) -> "QuadraticNumber":
        if not isinstance(other, (int, Fraction)):
            return NotImplemented
        return self._coerce(other) * self.inverse()

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, (int, Fraction, QuadraticNumber)):
            return NotImplemented
        q = QuadraticNumber.of(other)
        return (self.a, self.b, self.m) == (q.a, q.b, q.m)

    def __lt__(self, other: Any) -> bool:
        if not isinstance(other, (int, Fraction, QuadraticNumber)):
            return NotImplemented
        return (self - other).sign() < 0

    def __hash__(self) -> int:
        if self.m == 0:
            return hash(self.a)
        return hash((self.a, self.b, self.m))

    def __float__(self) -> float:
        return float(self.a) + float(self.b) * math.sqrt(self.m)

    def __bool__(self) -> bool:
        return self.sign() != 0

    def __repr__(self) -> str:
        return f"QuadraticNumber({self.a!s}, {self.b!s}, {self.m})"

    def __str__(self) -> str:
        if self.m == 0:
            return fraction_to_str(self.a)
        return f"{fraction_to_str(self.a)} + {fraction_to_str(self.b)}*sqrt({self.m})"

    def to_json(self) -> Dict[str, Any]:
        return {
            "a": fraction_to_str(self.a),
            "b": fraction_to_str(self.b),
            "m": self.m,
        }


Scalar = Union[int, Fraction, QuadraticNumber]
