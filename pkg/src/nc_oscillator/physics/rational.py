# Copyright 2025 Softwell S.r.l. - SPDX-License-Identifier: Apache-2.0
"""Exact rational helpers built on :class:`fractions.Fraction`.

Fraction keeps numerator/denominator in lowest terms with a positive
denominator after every operation and never overflows, which is all the
degeneracy machinery needs.

Components:
    Quantity: Alias for values that may be exact (Fraction) or float.
    NotRational: Marker result carrying the float value of an irrational ratio.
    exact_sqrt: Square root of a Fraction when it is a rational square.
    parse_quantity: Parse ``"p/q"`` text to Fraction, other numbers to float.
    format_quantity: Print Fraction as ``"p/q"``, floats with 17 digits.
    ratio_exact: γ/Ω in dimensionless form for rational (b, t).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

Quantity = Union[Fraction, float]


@dataclass(frozen=True)
class NotRational:
    """An irrational ratio; ``value`` holds its float evaluation."""

    value: float

    def __float__(self) -> float:
        return self.value


def is_exact(*values: object) -> bool:
    """True when every value is an exact rational (Fraction or int)."""
    return all(isinstance(v, (Fraction, int)) and not isinstance(v, bool) for v in values)


def exact_sqrt(value: Fraction) -> Fraction | None:
    """Return √value if it is the square of a rational, else None.

    Uses integer square roots of numerator and denominator; both must be
    perfect squares because Fraction is kept in lowest terms.
    """
    value = Fraction(value)
    if value < 0:
        return None
    num_root = math.isqrt(value.numerator)
    den_root = math.isqrt(value.denominator)
    if num_root * num_root == value.numerator and den_root * den_root == value.denominator:
        return Fraction(num_root, den_root)
    return None


def parse_quantity(text: str | float | int | Fraction) -> Quantity:
    """Parse a number from config/CLI text.

    ``"1/10000"`` and integers become Fraction; decimal or exponent
    notation becomes float.

    Raises:
        ValueError: If text is not a number.
    """
    if isinstance(text, Fraction):
        return text
    if isinstance(text, bool):
        raise ValueError(f"Not a number: {text!r}")
    if isinstance(text, int):
        return Fraction(text)
    if isinstance(text, float):
        return text
    cleaned = text.strip()
    if "/" in cleaned:
        try:
            return Fraction(cleaned)
        except ZeroDivisionError as exc:
            raise ValueError(f"Zero denominator: {text!r}") from exc
    try:
        return Fraction(int(cleaned))
    except ValueError:
        return float(cleaned)


def format_quantity(value: Quantity | NotRational | int) -> str:
    """Format a value for output files: ``p/q`` for rationals, 17 digits for floats."""
    if isinstance(value, NotRational):
        value = value.value
    if isinstance(value, Fraction):
        if value.denominator == 1:
            return str(value.numerator)
        return f"{value.numerator}/{value.denominator}"
    if isinstance(value, int):
        return str(value)
    return f"{float(value):.17g}"


def ratio_exact(b: Fraction, t: Fraction) -> Fraction | NotRational:
    """γ/Ω = (b + t)/√(4 + (b − t)²) for dimensionless field b and noncommutativity t.

    Covers all three cases: b = 0 gives κ, b·t = 1 gives 1, otherwise ξ.
    """
    b, t = Fraction(b), Fraction(t)
    root = exact_sqrt(4 + (b - t) ** 2)
    if root is None:
        return NotRational(float(b + t) / math.sqrt(float(4 + (b - t) ** 2)))
    return (b + t) / root


__all__ = [
    "NotRational",
    "Quantity",
    "exact_sqrt",
    "format_quantity",
    "is_exact",
    "parse_quantity",
    "ratio_exact",
]
