"""Exact rational parsing, formatting and length validation.

Rationals cross the JSON boundary as strings in lowest terms: "3/4", "-1/2",
or "2" for integers.  ``fractions.Fraction`` keeps everything exact.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import BadInputError, BadLengthError


def parse_fraction(value) -> Fraction:
    """Parse "p/q" (or "p", or a JSON integer) into a Fraction."""
    if isinstance(value, bool):
        raise BadInputError(f"not a rational: {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value)
        except (ValueError, ZeroDivisionError) as exc:
            raise BadInputError(f"not a rational: {value!r}") from exc
    raise BadInputError(f"not a rational: {value!r}")


def format_fraction(value: Fraction) -> str:
    return str(Fraction(value))


def as_length(value) -> Fraction:
    """Validate a strictly positive rational length."""
    x = value if isinstance(value, Fraction) else Fraction(value)
    if x <= 0:
        raise BadLengthError(f"length must be > 0, got {x}")
    return x
