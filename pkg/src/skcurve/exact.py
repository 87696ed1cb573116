"""Exact dyadic arithmetic.

Every time and every curve coordinate in this package is a dyadic rational
``m / 2**e``.  :class:`Dyadic` keeps such numbers in a unique normal form
(odd-or-zero numerator) backed by Python integers, so nothing is ever
rounded and nothing can overflow.  :class:`ExactRatio` holds a quotient of
two dyadics (square-to-linear ratios are generally *not* dyadic, e.g. 40/9)
and compares by cross-multiplication.
"""

from __future__ import annotations

import enum
import re
from fractions import Fraction
from functools import total_ordering
from typing import Union

__all__ = [
    "Cmp",
    "DomainError",
    "Dyadic",
    "ExactRatio",
    "cmp_ratio",
    "dyadic",
    "parse_dyadic",
]


class DomainError(ValueError):
    """An argument lies outside the domain of an operation."""


class Cmp(enum.Enum):
    LESS = -1
    EQUAL = 0
    GREATER = 1

    @classmethod
    def of(cls, a, b) -> "Cmp":
        return cls.LESS if a < b else cls.GREATER if a > b else cls.EQUAL


_TEXT = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(?:2\s*\^\s*(\d+)|(\d+)))?\s*$")


@total_ordering
class Dyadic:
    """The exact rational ``num / 2**exp`` in normal form.

    >>> Dyadic(2, 2)
    Dyadic(1, 1)
    >>> str(Dyadic(3, 2))
    '3/2^2'
    """

    __slots__ = ("num", "exp")

    def __init__(self, num: int = 0, exp: int = 0):
        if exp < 0:
            num <<= -exp
            exp = 0
        if num == 0:
            exp = 0
        else:
            tz = (num & -num).bit_length() - 1
            if tz:
                s = min(tz, exp)
                num >>= s
                exp -= s
        object.__setattr__(self, "num", int(num))
        object.__setattr__(self, "exp", int(exp))

    def __setattr__(self, name, value):
        raise AttributeError("Dyadic is immutable")

    @classmethod
    def coerce(cls, value: "DyadicLike") -> "Dyadic":
        if isinstance(value, Dyadic):
            return value
        if isinstance(value, bool):
            raise TypeError("bool is not a dyadic number")
        if isinstance(value, int):
            return cls(value, 0)
        if isinstance(value, str):
            return parse_dyadic(value)
        if isinstance(value, Fraction):
            return cls.from_fraction(value)
        raise TypeError(f"cannot interpret {value!r} as a Dyadic")

    @classmethod
    def from_fraction(cls, q: Fraction) -> "Dyadic":
        d = q.denominator
        if d & (d - 1):
            raise DomainError(f"{q} is not a dyadic rational")
        return cls(q.numerator, d.bit_length() - 1)

    # arithmetic ---------------------------------------------------------

    def _align(self, other: "Dyadic") -> tuple[int, int, int]:
        e = max(self.exp, other.exp)
        return self.num << (e - self.exp), other.num << (e - other.exp), e

    def __add__(self, other):
        if not isinstance(other, Dyadic):
            if isinstance(other, int) and not isinstance(other, bool):
                other = Dyadic(other)
            else:
                return NotImplemented
        a, b, e = self._align(other)
        return Dyadic(a + b, e)

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, Dyadic):
            if isinstance(other, int) and not isinstance(other, bool):
                other = Dyadic(other)
            else:
                return NotImplemented
        a, b, e = self._align(other)
        return Dyadic(a - b, e)

    def __rsub__(self, other):
        if isinstance(other, int) and not isinstance(other, bool):
            return Dyadic(other) - self
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, Dyadic):
            return Dyadic(self.num * other.num, self.exp + other.exp)
        if isinstance(other, int) and not isinstance(other, bool):
            return Dyadic(self.num * other, self.exp)
        return NotImplemented

    __rmul__ = __mul__

    def __neg__(self):
        return Dyadic(-self.num, self.exp)

    def __abs__(self):
        return Dyadic(abs(self.num), self.exp)

    def __pos__(self):
        return self

    def half(self) -> "Dyadic":
        return Dyadic(self.num, self.exp + 1)

    def scale2(self, k: int) -> "Dyadic":
        """Multiply by ``2**k`` (``k`` may be negative)."""
        return Dyadic(self.num, self.exp - k)

    # comparison ---------------------------------------------------------

    def _key(self, other) -> tuple[int, int]:
        if isinstance(other, Dyadic):
            a, b, _ = self._align(other)
            return a, b
        if isinstance(other, int) and not isinstance(other, bool):
            return self.num, other << self.exp
        raise TypeError

    def __eq__(self, other):
        if isinstance(other, Dyadic):
            return self.num == other.num and self.exp == other.exp
        if isinstance(other, int) and not isinstance(other, bool):
            return self.exp == 0 and self.num == other
        if isinstance(other, Fraction):
            return self.to_fraction() == other
        return NotImplemented

    def __lt__(self, other):
        try:
            a, b = self._key(other)
        except TypeError:
            return NotImplemented
        return a < b

    def __hash__(self):
        if self.exp == 0:
            return hash(self.num)
        return hash(Fraction(self.num, 1 << self.exp))

    def __bool__(self):
        return self.num != 0

    def sign(self) -> int:
        return (self.num > 0) - (self.num < 0)

    # conversion ---------------------------------------------------------

    def to_fraction(self) -> Fraction:
        return Fraction(self.num, 1 << self.exp)

    def __float__(self):
        return float(self.to_fraction())

    def __repr__(self):
        return f"Dyadic({self.num}, {self.exp})"

    def __str__(self):
        return str(self.num) if self.exp == 0 else f"{self.num}/2^{self.exp}"

    def __reduce__(self):
        return (Dyadic, (self.num, self.exp))


DyadicLike = Union[Dyadic, int, str, Fraction]


def dyadic(m: int, e: int) -> Dyadic:
    """Return the normalized value ``m / 2**e`` (``e >= 0``)."""
    if e < 0:
        raise DomainError("exponent must be nonnegative")
    return Dyadic(m, e)


def parse_dyadic(text: str) -> Dyadic:
    """Parse ``"m/2^e"``, ``"m/d"`` with ``d`` a power of two, or a plain ``"m"``."""
    m = _TEXT.match(text)
    if m is None:
        raise DomainError(f"not a dyadic literal: {text!r}")
    num = int(m.group(1))
    if m.group(2) is not None:
        return Dyadic(num, int(m.group(2)))
    if m.group(3) is not None:
        d = int(m.group(3))
        if d <= 0 or d & (d - 1):
            raise DomainError(f"denominator of {text!r} is not a power of two")
        return Dyadic(num, d.bit_length() - 1)
    return Dyadic(num, 0)


@total_ordering
class ExactRatio:
    """Nonnegative quotient ``numerator / denominator`` of two dyadics.

    Comparisons against other ratios, dyadics and integers are done by
    cross-multiplication and never touch floating point.
    """

    __slots__ = ("numerator", "denominator")

    def __init__(self, numerator: DyadicLike, denominator: DyadicLike = 1):
        numerator = Dyadic.coerce(numerator)
        denominator = Dyadic.coerce(denominator)
        if denominator.sign() <= 0:
            raise DomainError("ratio denominator must be positive")
        if numerator.sign() < 0:
            raise DomainError("ratio numerator must be nonnegative")
        self.numerator = numerator
        self.denominator = denominator

    @staticmethod
    def _parts(other) -> tuple[Dyadic, Dyadic]:
        if isinstance(other, ExactRatio):
            return other.numerator, other.denominator
        if isinstance(other, (Dyadic, int)) and not isinstance(other, bool):
            return Dyadic.coerce(other), Dyadic(1)
        raise TypeError

    def cmp(self, other) -> Cmp:
        n, d = self._parts(other)
        return Cmp.of(self.numerator * d, n * self.denominator)

    def __eq__(self, other):
        try:
            return self.cmp(other) is Cmp.EQUAL
        except TypeError:
            return NotImplemented

    def __lt__(self, other):
        try:
            return self.cmp(other) is Cmp.LESS
        except TypeError:
            return NotImplemented

    def __hash__(self):
        return hash(self.to_fraction())

    def to_fraction(self) -> Fraction:
        return self.numerator.to_fraction() / self.denominator.to_fraction()

    def __float__(self):
        return float(self.to_fraction())

    def __repr__(self):
        return f"ExactRatio({self.numerator}, {self.denominator})"

    def __str__(self):
        return str(self.to_fraction())

    def to_json(self) -> dict:
        return {
            "exact": str(self),
            "numerator": str(self.numerator),
            "denominator": str(self.denominator),
            "approx": float(self),
        }


def cmp_ratio(num: DyadicLike, den: DyadicLike, bound: DyadicLike) -> Cmp:
    """Exact three-way comparison of ``num / den`` against ``bound``.

    >>> cmp_ratio(2, Dyadic(1, 1), 4)
    <Cmp.EQUAL: 0>
    """
    num, den, bound = (Dyadic.coerce(v) for v in (num, den, bound))
    if den.sign() <= 0:
        raise DomainError("denominator must be positive")
    return Cmp.of(num, bound * den)
