"""
Truncated series in the time-variables p_1, p_2, ...

A monomial p_Γ is identified with the partition Γ; its weighted degree is |Γ|.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple, Union

from algebra.laurent import ZERO, LaurentScalar, format_rational
from combinatorics.partitions import EMPTY, Partition, binomial
from common.errors import InvalidInputError

logger = logging.getLogger(__name__)

Coefficient = Union[LaurentScalar, int, Fraction]


def _as_scalar(value: Coefficient) -> LaurentScalar:
    if isinstance(value, LaurentScalar):
        return value
    return LaurentScalar.constant(value)


def shift_monomial(gamma: Partition, c: Fraction) -> List[Tuple[Partition, Fraction]]:
    """
    Expand p_Γ under the substitution p_1 -> p_1 + c

    Args:
        gamma: Monomial
        c: Shift constant

    Returns:
        List of (monomial, coefficient)
    """
    ones = gamma.multiplicity(1)
    if ones == 0 or c == 0:
        return [(gamma, Fraction(1))]
    rest = tuple(part for part in gamma.parts if part != 1)
    expansion = []
    for kept in range(ones, -1, -1):
        coeff = binomial(ones, kept) * Fraction(c) ** (ones - kept)
        expansion.append((Partition(rest + (1,) * kept), coeff))
    return expansion


class TruncatedSeries:
    """Polynomial in p with Laurent coefficients, all monomials of weighted degree <= bound"""

    def __init__(self, bound: int, coefficients: Optional[Dict[Partition, LaurentScalar]] = None):
        if bound < 0:
            raise InvalidInputError(f"Truncation bound must be nonnegative, got {bound}")
        self.bound = bound
        self._coefficients: Dict[Partition, LaurentScalar] = {}
        for gamma, value in (coefficients or {}).items():
            self._accumulate(gamma, _as_scalar(value))

    def _accumulate(self, gamma: Partition, value: LaurentScalar):
        if gamma.size > self.bound or not value:
            return
        total = self._coefficients.get(gamma, ZERO) + value
        if total:
            self._coefficients[gamma] = total
        else:
            self._coefficients.pop(gamma, None)

    @classmethod
    def monomial(cls, gamma: Partition, bound: int, coeff: Coefficient = 1) -> 'TruncatedSeries':
        return cls(bound, {gamma: _as_scalar(coeff)})

    def coefficient(self, gamma: Partition) -> LaurentScalar:
        return self._coefficients.get(gamma, ZERO)

    def items(self) -> List[Tuple[Partition, LaurentScalar]]:
        """Nonzero terms in canonical partition order"""
        return sorted(self._coefficients.items(), key=lambda item: item[0].sort_key())

    def degree_part(self, n: int) -> 'TruncatedSeries':
        """Terms of weighted degree exactly n"""
        return TruncatedSeries(self.bound, {g: v for g, v in self._coefficients.items() if g.size == n})

    def is_zero(self) -> bool:
        return not self._coefficients

    def __iter__(self) -> Iterator[Tuple[Partition, LaurentScalar]]:
        return iter(self.items())

    def __len__(self) -> int:
        return len(self._coefficients)

    def _check_bound(self, other: 'TruncatedSeries'):
        if other.bound != self.bound:
            raise InvalidInputError(f"Truncation mismatch: {self.bound} vs {other.bound}")

    def __add__(self, other: 'TruncatedSeries') -> 'TruncatedSeries':
        self._check_bound(other)
        result = TruncatedSeries(self.bound, self._coefficients)
        for gamma, value in other._coefficients.items():
            result._accumulate(gamma, value)
        return result

    def __neg__(self) -> 'TruncatedSeries':
        return self.scale(-1)

    def __sub__(self, other: 'TruncatedSeries') -> 'TruncatedSeries':
        return self + (-other)

    def scale(self, factor: Coefficient) -> 'TruncatedSeries':
        factor = _as_scalar(factor)
        return TruncatedSeries(self.bound, {g: v * factor for g, v in self._coefficients.items()})

    def __mul__(self, other: 'TruncatedSeries') -> 'TruncatedSeries':
        self._check_bound(other)
        result = TruncatedSeries(self.bound)
        for gamma_a, value_a in self._coefficients.items():
            for gamma_b, value_b in other._coefficients.items():
                if gamma_a.size + gamma_b.size <= self.bound:
                    result._accumulate(gamma_a + gamma_b, value_a * value_b)
        return result

    def shift_p1(self, c: Fraction) -> 'TruncatedSeries':
        """Substitute p_1 -> p_1 + c"""
        result = TruncatedSeries(self.bound)
        for gamma, value in self._coefficients.items():
            for image, coeff in shift_monomial(gamma, Fraction(c)):
                result._accumulate(image, value * coeff)
        return result

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.bound == other.bound and self._coefficients == other._coefficients

    def to_dict(self) -> List[Dict]:
        """Serialize as [{partition, z_exp, coeff}] in canonical order"""
        rows = []
        for gamma, value in self.items():
            for exp, coeff in value.terms:
                rows.append({'partition': str(gamma), 'z_exp': exp, 'coeff': format_rational(coeff)})
        return rows

    def __repr__(self) -> str:
        terms = ", ".join(f"{gamma}: {value}" for gamma, value in self.items())
        return f"TruncatedSeries(N={self.bound}, {{{terms}}})"


SeriesKey = Tuple[Tuple[int, ...], Tuple[Partition, ...]]


class MultiSeries:
    """
    Series in u-variables and one or two p-families with Laurent coefficients

    Keys are (u exponent vector, partitions per family); the last family is p,
    on which cut-and-join operators act.
    """

    def __init__(self, u_names: Sequence[str], families: int, bound: int, u_bound: int,
                 coefficients: Optional[Dict[SeriesKey, LaurentScalar]] = None):
        if families not in (1, 2):
            raise InvalidInputError(f"Only one or two p-families are supported, got {families}")
        if bound < 0 or u_bound < 0:
            raise InvalidInputError(f"Truncation bounds must be nonnegative: N={bound}, U={u_bound}")
        self.u_names = tuple(u_names)
        self.families = families
        self.bound = bound
        self.u_bound = u_bound
        self._coefficients: Dict[SeriesKey, LaurentScalar] = {}
        for key, value in (coefficients or {}).items():
            self.add_term(key, _as_scalar(value))

    def _admits(self, key: SeriesKey) -> bool:
        u_exps, parts = key
        return sum(u_exps) <= self.u_bound and all(p.size <= self.bound for p in parts)

    def add_term(self, key: SeriesKey, value: LaurentScalar):
        """Accumulate value at key, silently dropping keys beyond the truncation"""
        u_exps, parts = key
        if len(u_exps) != len(self.u_names) or len(parts) != self.families:
            raise InvalidInputError(f"Key {key} does not fit a series in {self.u_names} "
                                    f"with {self.families} families")
        if not value or not self._admits(key):
            return
        total = self._coefficients.get(key, ZERO) + value
        if total:
            self._coefficients[key] = total
        else:
            self._coefficients.pop(key, None)

    def empty_like(self, u_names: Optional[Sequence[str]] = None,
                   u_bound: Optional[int] = None) -> 'MultiSeries':
        return MultiSeries(self.u_names if u_names is None else u_names, self.families, self.bound,
                           self.u_bound if u_bound is None else u_bound)

    def coefficient(self, u_exps: Sequence[int], parts: Sequence[Partition]) -> LaurentScalar:
        return self._coefficients.get((tuple(u_exps), tuple(parts)), ZERO)

    def items(self) -> List[Tuple[SeriesKey, LaurentScalar]]:
        """Nonzero terms sorted by u exponents, then canonical partition order per family"""
        return sorted(self._coefficients.items(),
                      key=lambda item: (item[0][0], tuple(p.sort_key() for p in item[0][1])))

    def is_zero(self) -> bool:
        return not self._coefficients

    def __len__(self) -> int:
        return len(self._coefficients)

    def _check_compatible(self, other: 'MultiSeries'):
        if (self.u_names, self.families, self.bound, self.u_bound) != \
                (other.u_names, other.families, other.bound, other.u_bound):
            raise InvalidInputError("Series have different variables or truncation")

    def __add__(self, other: 'MultiSeries') -> 'MultiSeries':
        self._check_compatible(other)
        result = self.empty_like()
        for key, value in self._coefficients.items():
            result.add_term(key, value)
        for key, value in other._coefficients.items():
            result.add_term(key, value)
        return result

    def scale(self, factor: Coefficient) -> 'MultiSeries':
        factor = _as_scalar(factor)
        result = self.empty_like()
        for key, value in self._coefficients.items():
            result.add_term(key, value * factor)
        return result

    def __neg__(self) -> 'MultiSeries':
        return self.scale(-1)

    def __sub__(self, other: 'MultiSeries') -> 'MultiSeries':
        return self + (-other)

    def __mul__(self, other: 'MultiSeries') -> 'MultiSeries':
        self._check_compatible(other)
        result = self.empty_like()
        for (u_a, parts_a), value_a in self._coefficients.items():
            for (u_b, parts_b), value_b in other._coefficients.items():
                u_exps = tuple(a + b for a, b in zip(u_a, u_b))
                if sum(u_exps) > self.u_bound:
                    continue
                if any(a.size + b.size > self.bound for a, b in zip(parts_a, parts_b)):
                    continue
                parts = tuple(a + b for a, b in zip(parts_a, parts_b))
                result.add_term((u_exps, parts), value_a * value_b)
        return result

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MultiSeries):
            return NotImplemented
        return (self.u_names == other.u_names and self.families == other.families
                and self.bound == other.bound and self.u_bound == other.u_bound
                and self._coefficients == other._coefficients)

    def shift_p1(self, c: Fraction) -> 'MultiSeries':
        """Substitute p_1 -> p_1 + c in every family"""
        result = self.empty_like()
        for (u_exps, parts), value in self._coefficients.items():
            expansion = [((), Fraction(1))]
            for gamma in parts:
                expansion = [(prefix + (image,), weight * coeff)
                             for prefix, weight in expansion
                             for image, coeff in shift_monomial(gamma, Fraction(c))]
            for images, weight in expansion:
                result.add_term((u_exps, images), value * weight)
        return result

    def with_u_names(self, u_names: Sequence[str], u_bound: int) -> 'MultiSeries':
        """Embed a u-free series into a series over u_names"""
        if self.u_names:
            raise InvalidInputError(f"Series already carries u-variables {self.u_names}")
        result = MultiSeries(u_names, self.families, self.bound, u_bound)
        zeros = (0,) * len(result.u_names)
        for (_, parts), value in self._coefficients.items():
            result.add_term((zeros, parts), value)
        return result

    def truncate_u(self, u_bound: int) -> 'MultiSeries':
        """Drop terms of total u-order above u_bound"""
        result = self.empty_like(u_bound=u_bound)
        for key, value in self._coefficients.items():
            result.add_term(key, value)
        return result

    def with_bound(self, bound: int) -> 'MultiSeries':
        """Same terms under another p-degree truncation"""
        result = MultiSeries(self.u_names, self.families, bound, self.u_bound)
        for key, value in self._coefficients.items():
            result.add_term(key, value)
        return result

    def times_u(self, name: str) -> 'MultiSeries':
        """Multiply by u_name, dropping terms beyond the u truncation"""
        index = self._u_index(name)
        result = self.empty_like()
        for (u_exps, parts), value in self._coefficients.items():
            raised = u_exps[:index] + (u_exps[index] + 1,) + u_exps[index + 1:]
            result.add_term((raised, parts), value)
        return result

    def u_derivative(self, name: str) -> 'MultiSeries':
        """∂/∂u_name; the result is truncated one u-order lower"""
        index = self._u_index(name)
        result = self.empty_like(u_bound=max(self.u_bound - 1, 0))
        for (u_exps, parts), value in self._coefficients.items():
            power = u_exps[index]
            if power == 0:
                continue
            lowered = u_exps[:index] + (power - 1,) + u_exps[index + 1:]
            result.add_term((lowered, parts), value * power)
        return result

    def _u_index(self, name: str) -> int:
        try:
            return self.u_names.index(name)
        except ValueError as e:
            raise InvalidInputError(f"Unknown u-variable '{name}' (have {self.u_names})") from e

    def p_slices(self) -> Dict[Tuple[Tuple[int, ...], Tuple[Partition, ...]], TruncatedSeries]:
        """Group terms by (u exponents, leading families) into series in the last family p"""
        slices: Dict[Tuple[Tuple[int, ...], Tuple[Partition, ...]], Dict[Partition, LaurentScalar]] = {}
        for (u_exps, parts), value in self._coefficients.items():
            slices.setdefault((u_exps, parts[:-1]), {})[parts[-1]] = value
        return {key: TruncatedSeries(self.bound, coefficients) for key, coefficients in slices.items()}

    @classmethod
    def from_p_slices(cls, template: 'MultiSeries',
                      slices: Iterable[Tuple[Tuple[Tuple[int, ...], Tuple[Partition, ...]],
                                             TruncatedSeries]]) -> 'MultiSeries':
        result = template.empty_like()
        for (u_exps, leading), series in slices:
            for gamma, value in series.items():
                result.add_term((u_exps, leading + (gamma,)), value)
        return result

    def to_dict(self) -> List[Dict]:
        """Serialize as [{u_exps, partitions, z_exp, coeff}] in canonical order"""
        rows = []
        for (u_exps, parts), value in self.items():
            for exp, coeff in value.terms:
                rows.append({
                    'u_exps': list(u_exps),
                    'partitions': [str(gamma) for gamma in parts],
                    'z_exp': exp,
                    'coeff': format_rational(coeff),
                })
        return rows

    def __repr__(self) -> str:
        return (f"MultiSeries(u={self.u_names}, families={self.families}, N={self.bound}, "
                f"U={self.u_bound}, terms={len(self._coefficients)})")


def constant_series(u_names: Sequence[str], families: int, bound: int, u_bound: int,
                    value: Coefficient = 1) -> MultiSeries:
    """The constant value as a MultiSeries"""
    key = ((0,) * len(tuple(u_names)), (EMPTY,) * families)
    return MultiSeries(u_names, families, bound, u_bound, {key: _as_scalar(value)})


def exp_series(exponent: MultiSeries) -> MultiSeries:
    """
    exp of a series without constant term, truncated

    Args:
        exponent: Series with zero constant term

    Returns:
        Σ_r exponent^r / r!
    """
    zero_key = ((0,) * len(exponent.u_names), (EMPTY,) * exponent.families)
    if exponent.coefficient(*zero_key):
        raise InvalidInputError("exp_series needs a series without constant term")

    result = constant_series(exponent.u_names, exponent.families, exponent.bound, exponent.u_bound)
    power = result
    order = 1
    # each power raises u-order or p-degree, so truncation ends the loop
    while True:
        power = (power * exponent).scale(Fraction(1, order))
        if power.is_zero():
            break
        result = result + power
        order += 1
    return result
