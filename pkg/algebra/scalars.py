"""
Exact rational scalars.

Scalars are ``fractions.Fraction`` values; this module only adds the
string codec used in every JSON payload ("p/q", or "p" when q = 1).
"""

from collections.abc import Mapping
from fractions import Fraction
from numbers import Rational
from typing import Iterable, List, Tuple, Union

from algebra.errors import BadShape, InvalidScalar

Scalar = Fraction
ScalarLike = Union[Fraction, int, str]

ZERO = Fraction(0)
ONE = Fraction(1)


def as_scalar(value: ScalarLike) -> Fraction:
    """
    Read a value as an exact rational.

    Floats and booleans are refused: a float has already lost exactness.

    Args:
        value: Fraction, int or "p/q" string

    Returns:
        Canonical Fraction

    Raises:
        InvalidScalar: If the value is not an exact rational
    """
    if isinstance(value, bool):
        raise InvalidScalar(f"boolean is not a scalar: {value!r}")
    if isinstance(value, Rational):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        if "." in text or "e" in text.lower():
            raise InvalidScalar(f"decimal notation is not exact: {value!r}")
        try:
            return Fraction(text)
        except (ValueError, ZeroDivisionError) as e:
            raise InvalidScalar(f"cannot parse scalar {value!r}: {e}") from e
    raise InvalidScalar(f"unsupported scalar type {type(value).__name__}")


def format_scalar(value: Fraction) -> str:
    """Serialize as "p/q", or "p" for integers."""
    return str(Fraction(value))


def as_scalars(values: Iterable[ScalarLike]) -> Tuple[Fraction, ...]:
    """
    Read a row of scalars.

    Raises:
        BadShape: If ``values`` is a string, a mapping or not iterable
        InvalidScalar: If an entry is not an exact rational
    """
    if isinstance(values, (str, bytes, Mapping)) or not isinstance(values, Iterable):
        raise BadShape(f"expected a list of scalars, got {type(values).__name__}")
    return tuple(as_scalar(v) for v in values)


def format_scalars(values: Iterable[Fraction]) -> List[str]:
    return [format_scalar(v) for v in values]
