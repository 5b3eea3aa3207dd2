"""
Exact Laurent polynomials in the genus parameter z
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Tuple, Union

from common.errors import InvalidInputError

logger = logging.getLogger(__name__)

Scalar = Union[int, Fraction]


def format_rational(value: Fraction) -> str:
    """Lowest-terms "p/q", or "p" for integers"""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def parse_rational(text: str) -> Fraction:
    """Inverse of format_rational"""
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as e:
        raise InvalidInputError(f"Malformed rational: {text!r}") from e


@dataclass(frozen=True)
class LaurentScalar:
    """Finite sum of rational multiples of z^k; terms sorted by exponent, no zero coefficients"""
    terms: Tuple[Tuple[int, Fraction], ...] = ()

    @classmethod
    def from_mapping(cls, mapping: Dict[int, Fraction]) -> 'LaurentScalar':
        """Build from {exponent: coefficient}, dropping zeros"""
        return cls(tuple((exp, Fraction(coeff)) for exp, coeff in sorted(mapping.items()) if coeff != 0))

    @classmethod
    def monomial(cls, exp: int, coeff: Scalar = 1) -> 'LaurentScalar':
        """coeff · z^exp"""
        if coeff == 0:
            return ZERO
        return cls(((exp, Fraction(coeff)),))

    @classmethod
    def constant(cls, coeff: Scalar) -> 'LaurentScalar':
        return cls.monomial(0, coeff)

    def as_mapping(self) -> Dict[int, Fraction]:
        return dict(self.terms)

    def coefficient(self, exp: int) -> Fraction:
        """Coefficient of z^exp"""
        for term_exp, coeff in self.terms:
            if term_exp == exp:
                return coeff
        return Fraction(0)

    def exponents(self) -> List[int]:
        return [exp for exp, _ in self.terms]

    def single_exponent(self) -> Optional[int]:
        """Exponent of a one-term scalar, else None"""
        if len(self.terms) == 1:
            return self.terms[0][0]
        return None

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def shift(self, k: int) -> 'LaurentScalar':
        """Multiply by z^k"""
        if k == 0:
            return self
        return LaurentScalar(tuple((exp + k, coeff) for exp, coeff in self.terms))

    def __add__(self, other: Union['LaurentScalar', Scalar]) -> 'LaurentScalar':
        other = _coerce(other)
        if not other.terms:
            return self
        if not self.terms:
            return other
        merged = self.as_mapping()
        for exp, coeff in other.terms:
            merged[exp] = merged.get(exp, Fraction(0)) + coeff
        return LaurentScalar.from_mapping(merged)

    __radd__ = __add__

    def __neg__(self) -> 'LaurentScalar':
        return LaurentScalar(tuple((exp, -coeff) for exp, coeff in self.terms))

    def __sub__(self, other: Union['LaurentScalar', Scalar]) -> 'LaurentScalar':
        return self + (-_coerce(other))

    def __rsub__(self, other: Scalar) -> 'LaurentScalar':
        return _coerce(other) + (-self)

    def __mul__(self, other: Union['LaurentScalar', Scalar]) -> 'LaurentScalar':
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return ZERO
            return LaurentScalar(tuple((exp, coeff * other) for exp, coeff in self.terms))
        if not isinstance(other, LaurentScalar):
            return NotImplemented
        if not self.terms or not other.terms:
            return ZERO
        product: Dict[int, Fraction] = {}
        for exp_a, coeff_a in self.terms:
            for exp_b, coeff_b in other.terms:
                product[exp_a + exp_b] = product.get(exp_a + exp_b, Fraction(0)) + coeff_a * coeff_b
        return LaurentScalar.from_mapping(product)

    __rmul__ = __mul__

    def to_dict(self) -> List[Dict[str, Union[int, str]]]:
        """Serialize as [{z_exp, coeff}] in ascending exponent order"""
        return [{'z_exp': exp, 'coeff': format_rational(coeff)} for exp, coeff in self.terms]

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for exp, coeff in self.terms:
            if exp == 0:
                pieces.append(format_rational(coeff))
            else:
                pieces.append(f"{format_rational(coeff)}*z^{exp}")
        return " + ".join(pieces)


def _coerce(value: Union[LaurentScalar, Scalar]) -> LaurentScalar:
    if isinstance(value, LaurentScalar):
        return value
    if isinstance(value, (int, Fraction)):
        return LaurentScalar.constant(value)
    raise InvalidInputError(f"Cannot use {type(value).__name__} as a Laurent scalar")


def laurent_sum(values: Iterable[LaurentScalar]) -> LaurentScalar:
    """Sum that merges every term once"""
    merged: Dict[int, Fraction] = {}
    for value in values:
        for exp, coeff in value.terms:
            merged[exp] = merged.get(exp, Fraction(0)) + coeff
    return LaurentScalar.from_mapping(merged)


ZERO = LaurentScalar()
ONE = LaurentScalar(((0, Fraction(1)),))
