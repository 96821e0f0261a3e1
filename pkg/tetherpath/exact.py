"""
Exact Numbers Module
Parsing and formatting of exact rationals, plus square roots of rationals.
"""

import math
from decimal import Decimal, localcontext
from fractions import Fraction
from typing import Union

from .errors import InstanceFormatError

Number = Union[int, str, Fraction]


def to_fraction(value: Number) -> Fraction:
    """
    Convert an input value to an exact rational.

    Accepts integers, Fractions and strings such as ``"3"``, ``"-1.25"`` or
    ``"7/3"``. Floats are rejected because they are not exact.

    Args:
        value: The value to convert

    Returns:
        Fraction: The exact value
    """
    if isinstance(value, bool) or isinstance(value, float):
        raise InstanceFormatError(f"Inexact number not allowed: {value!r}")
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError):
            raise InstanceFormatError(f"Not an exact number: {value!r}")
    raise InstanceFormatError(f"Unsupported number type: {type(value).__name__}")


def is_terminating(value: Fraction) -> bool:
    """Check whether a rational has a finite decimal expansion."""
    q = value.denominator
    for p in (2, 5):
        while q % p == 0:
            q //= p
    return q == 1


def format_exact(value: Fraction) -> str:
    """
    Format a rational so that parsing it back gives the same value.

    Terminating values are written as plain decimals (``"1.5"``); anything
    else as ``"p/q"``.
    """
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    if not is_terminating(value):
        return f"{value.numerator}/{value.denominator}"
    digits = 0
    scaled = value
    while scaled.denominator != 1:
        scaled *= 10
        digits += 1
    sign = '-' if scaled < 0 else ''
    text = str(abs(scaled.numerator)).rjust(digits + 1, '0')
    return f"{sign}{text[:-digits]}.{text[-digits:]}"


def format_ratio(value: Fraction) -> str:
    """Format a rational as ``"p/q"`` (integers without a denominator)."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def decimal_string(value: Fraction, places: int = 12) -> str:
    """Round a rational to a fixed number of decimal places."""
    with localcontext() as ctx:
        ctx.prec = places + 40
        quantum = Decimal(1).scaleb(-places)
        d = (Decimal(value.numerator) / Decimal(value.denominator)).quantize(quantum)
    return format(d, 'f')


def sqrt_decimal(value: Fraction, places: int = 12) -> str:
    """Square root of a non-negative rational as a rounded decimal string."""
    with localcontext() as ctx:
        ctx.prec = places + 40
        quantum = Decimal(1).scaleb(-places)
        root = (Decimal(value.numerator) / Decimal(value.denominator)).sqrt()
        return format(root.quantize(quantum), 'f')


def rational_sqrt(value: Fraction) -> Union[Fraction, None]:
    """Return the exact square root of a rational, or None if irrational."""
    if value < 0:
        return None
    p, q = value.numerator, value.denominator
    rp, rq = math.isqrt(p), math.isqrt(q)
    if rp * rp == p and rq * rq == q:
        return Fraction(rp, rq)
    return None


class RootBudget:
    """
    The square root of a non-square rational, kept symbolically.

    Comparisons against rationals are decided on squared values, so they stay
    exact.
    """

    __slots__ = ('squared',)

    def __init__(self, squared: Fraction):
        if squared <= 0:
            raise ValueError("RootBudget needs a positive radicand")
        self.squared = Fraction(squared)

    def lower_bound(self, denominator: int) -> Fraction:
        """Largest multiple of 1/denominator not exceeding the root."""
        scaled = self.squared * denominator * denominator
        return Fraction(math.isqrt(scaled.numerator // scaled.denominator), denominator)

    def _cmp(self, other) -> int:
        other = Fraction(other)
        if other < 0:
            return 1
        sq = other * other
        return (self.squared > sq) - (self.squared < sq)

    def __lt__(self, other):
        return self._cmp(other) < 0

    def __le__(self, other):
        return self._cmp(other) <= 0

    def __gt__(self, other):
        return self._cmp(other) > 0

    def __ge__(self, other):
        return self._cmp(other) >= 0

    def __eq__(self, other):
        if isinstance(other, RootBudget):
            return self.squared == other.squared
        try:
            return self._cmp(other) == 0
        except (TypeError, ValueError):
            return NotImplemented

    def __hash__(self):
        return hash(('RootBudget', self.squared))

    def __float__(self):
        return math.sqrt(self.squared)

    def __repr__(self):
        return f"RootBudget(sqrt({format_ratio(self.squared)}))"
