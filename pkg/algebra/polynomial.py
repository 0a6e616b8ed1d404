"""
Dense polynomials over exact rationals.

Coefficient ``k`` is the coefficient of x^k. The zero polynomial has no
coefficients; every other polynomial ends with a nonzero coefficient.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, List, Sequence, Tuple, Union

from algebra.errors import BadShape
from algebra.scalars import ZERO, ScalarLike, as_scalar, as_scalars, format_scalars

Operand = Union["Polynomial", Fraction, int]


@dataclass(frozen=True)
class Polynomial:
    """Immutable dense polynomial."""

    coefficients: Tuple[Fraction, ...] = ()

    def __post_init__(self) -> None:
        coeffs = list(as_scalars(self.coefficients))
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, "coefficients", tuple(coeffs))

    @classmethod
    def constant(cls, value: ScalarLike) -> "Polynomial":
        return cls((as_scalar(value),))

    @classmethod
    def monomial(cls, k: int, coefficient: ScalarLike = 1) -> "Polynomial":
        """x^k scaled by ``coefficient``."""
        return cls((ZERO,) * k + (as_scalar(coefficient),))

    @classmethod
    def x_minus(cls, a: ScalarLike) -> "Polynomial":
        return cls((-as_scalar(a), Fraction(1)))

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coefficients) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coefficients

    @property
    def leading(self) -> Fraction:
        return self.coefficients[-1] if self.coefficients else ZERO

    @property
    def is_monic(self) -> bool:
        return self.leading == 1

    def coefficient(self, k: int) -> Fraction:
        return self.coefficients[k] if 0 <= k < len(self.coefficients) else ZERO

    def shift(self, power: int = 1) -> "Polynomial":
        """Multiply by x^power."""
        if self.is_zero:
            return self
        return Polynomial((ZERO,) * power + self.coefficients)

    def __add__(self, other: Operand) -> "Polynomial":
        other = _coerce(other)
        size = max(len(self.coefficients), len(other.coefficients))
        return Polynomial(tuple(self.coefficient(k) + other.coefficient(k) for k in range(size)))

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial(tuple(-c for c in self.coefficients))

    def __sub__(self, other: Operand) -> "Polynomial":
        return self + (-_coerce(other))

    def __rsub__(self, other: Operand) -> "Polynomial":
        return _coerce(other) - self

    def __mul__(self, other: Operand) -> "Polynomial":
        if not isinstance(other, Polynomial):
            factor = as_scalar(other)
            return Polynomial(tuple(c * factor for c in self.coefficients))
        if self.is_zero or other.is_zero:
            return Polynomial()
        product = [ZERO] * (len(self.coefficients) + len(other.coefficients) - 1)
        for i, left in enumerate(self.coefficients):
            if left == 0:
                continue
            for j, right in enumerate(other.coefficients):
                product[i + j] += left * right
        return Polynomial(tuple(product))

    __rmul__ = __mul__

    def __call__(self, a: ScalarLike) -> Fraction:
        return poly_eval(self, as_scalar(a))

    def to_json(self) -> List[str]:
        return format_scalars(self.coefficients)

    @classmethod
    def from_json(cls, data: Any) -> "Polynomial":
        if not isinstance(data, list):
            raise BadShape("polynomial must be a list of coefficients")
        return cls(as_scalars(data))

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        terms = []
        for k in range(self.degree, -1, -1):
            c = self.coefficients[k]
            if c == 0:
                continue
            power = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
            if k > 0 and abs(c) == 1:
                text = power
            else:
                text = f"{abs(c)}{'*' if power else ''}{power}"
            sign = "-" if c < 0 else "+"
            terms.append((sign, text))
        head_sign, head = terms[0]
        out = ("-" if head_sign == "-" else "") + head
        for sign, text in terms[1:]:
            out += f" {sign} {text}"
        return out


def _coerce(value: Operand) -> Polynomial:
    if isinstance(value, Polynomial):
        return value
    return Polynomial.constant(value)


def poly_eval(p: Polynomial, a: Fraction) -> Fraction:
    """
    Evaluate ``p`` at ``a`` exactly by Horner's scheme.

    Args:
        p: Polynomial to evaluate
        a: Evaluation point

    Returns:
        Exact value p(a)
    """
    result = ZERO
    for c in reversed(p.coefficients):
        result = result * a + c
    return result


def expand_in_basis(p: Polynomial, basis: Sequence[Polynomial]) -> List[Fraction]:
    """
    Write ``p`` in a monic triangular basis by leading-coefficient elimination.

    Args:
        p: Polynomial to expand
        basis: basis[k] monic of degree k, covering at least deg p

    Returns:
        Coefficients c with p = sum c[k] * basis[k], length deg p + 1

    Raises:
        BadShape: If the basis is too short or not monic triangular
    """
    if p.degree >= len(basis):
        raise BadShape(f"basis of length {len(basis)} cannot expand degree {p.degree}")
    remainder = list(p.coefficients)
    coefficients = [ZERO] * len(remainder)
    for k in range(len(remainder) - 1, -1, -1):
        c = remainder[k]
        if c == 0:
            continue
        element = basis[k]
        if element.degree != k or not element.is_monic:
            raise BadShape(f"basis element {k} is not monic of degree {k}")
        coefficients[k] = c
        for i, b in enumerate(element.coefficients):
            remainder[i] -= c * b
    return coefficients
