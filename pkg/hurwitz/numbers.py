"""
Shifted Hurwitz numbers by the Frobenius character sum
"""
import logging
import threading
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, Optional, Sequence, Tuple

from algebra.laurent import format_rational
from characters.symmetric_group import dimension_weight, phi
from combinatorics.partitions import Partition, partitions_of, shift_binomial
from common.errors import InvalidInputError
from common.parallel import ordered_map

logger = logging.getLogger(__name__)

_frobenius_cache: Dict[Tuple[int, int, Tuple[Partition, ...]], Fraction] = {}
_frobenius_lock = threading.Lock()


@dataclass(frozen=True)
class HurwitzQuery:
    """Target genus g, covering degree n and the ramification partitions"""
    g: int
    n: int
    ramification: Tuple[Partition, ...] = ()

    def __post_init__(self):
        if self.g < 0 or self.n < 0:
            raise InvalidInputError(f"Genus and degree must be nonnegative: g={self.g}, n={self.n}")
        object.__setattr__(self, 'ramification', tuple(self.ramification))

    @property
    def fits(self) -> bool:
        """True when every |Δ_i| <= n"""
        return all(delta.size <= self.n for delta in self.ramification)

    def to_dict(self) -> Dict[str, Any]:
        return {
            'g': self.g,
            'n': self.n,
            'ramification': [str(delta) for delta in self.ramification],
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'HurwitzQuery':
        return cls(int(data['g']), int(data['n']),
                   tuple(Partition.parse(text) for text in data.get('ramification', [])))


@dataclass(frozen=True)
class HurwitzValue:
    """Exact Hurwitz number together with its source genus (None when no cover exists)"""
    query: HurwitzQuery
    value: Fraction
    source_genus_h: Optional[int]
    connected: bool = False

    def to_dict(self) -> Dict[str, Any]:
        return {
            'g': self.query.g,
            'h': self.source_genus_h,
            'n': self.query.n,
            'ramification': [str(delta) for delta in self.query.ramification],
            'value': format_rational(self.value),
            'connected': self.connected,
        }


def ramification_defect(ramification: Sequence[Partition]) -> int:
    """Σ_i (|Δ_i| - l(Δ_i))"""
    return sum(delta.size - delta.length for delta in ramification)


def euler_exponent(g: int, n: int, ramification: Sequence[Partition]) -> int:
    """2h - 2 from the Hurwitz formula (2-2g)n - (2-2h) = Σ(|Δ_i| - l(Δ_i))"""
    return ramification_defect(ramification) - (2 - 2 * g) * n


def derived_genus(query: HurwitzQuery) -> Optional[int]:
    """
    Source genus h solving the Hurwitz formula

    Args:
        query: Hurwitz query

    Returns:
        h (possibly negative for disconnected sources), or None when 2h - 2 is odd
    """
    exponent = euler_exponent(query.g, query.n, query.ramification)
    if exponent % 2:
        return None
    return exponent // 2 + 1


def _frobenius_term(shape: Partition, g: int, ramification: Tuple[Partition, ...]) -> Fraction:
    term = dimension_weight(shape) ** (2 - 2 * g)
    for delta in ramification:
        if not term:
            break
        term *= phi(shape, delta)
    return term


def frobenius_sum(g: int, n: int, ramification: Sequence[Partition], threads: int = 1) -> Fraction:
    """
    Σ_{λ ⊢ n} (dim λ / n!)^{2-2g} Π_i φ_λ(Δ_i)

    Args:
        g: Target genus
        n: Covering degree
        ramification: Ramification partitions
        threads: Worker count for the λ-sum

    Returns:
        Exact rational; the reduction order is fixed by partitions_of
    """
    key = (g, n, tuple(sorted(ramification, key=Partition.sort_key)))
    with _frobenius_lock:
        cached = _frobenius_cache.get(key)
    if cached is not None:
        return cached

    terms = ordered_map(lambda shape: _frobenius_term(shape, g, key[2]), partitions_of(n), threads)
    total = sum(terms, Fraction(0))

    with _frobenius_lock:
        _frobenius_cache[key] = total
    return total


def disconnected_U(query: HurwitzQuery, threads: int = 1) -> HurwitzValue:
    """
    Disconnected shifted Hurwitz number U_g^{h,n}(Δ_1, ..., Δ_k)

    Args:
        query: Hurwitz query
        threads: Worker count for the λ-sum

    Returns:
        HurwitzValue (zero when some |Δ_i| > n or the Hurwitz formula has no integral solution)
    """
    h = derived_genus(query)
    if not query.fits or h is None:
        return HurwitzValue(query, Fraction(0), h)
    value = frobenius_sum(query.g, query.n, query.ramification, threads)
    logger.debug(f"U_{query.g}^{{{h},{query.n}}}{tuple(str(d) for d in query.ramification)} = {value}")
    return HurwitzValue(query, value, h)


def classical_mu(query: HurwitzQuery, threads: int = 1) -> Fraction:
    """
    Classical Hurwitz number μ = U / Π_i binomial(n-|Δ_i|+m_1(Δ_i), m_1(Δ_i))

    Args:
        query: Hurwitz query with every |Δ_i| <= n

    Returns:
        Exact rational
    """
    if not query.fits:
        raise InvalidInputError(f"Ramification exceeds degree {query.n}: "
                                f"{[str(delta) for delta in query.ramification]}")
    value = disconnected_U(query, threads).value
    for delta in query.ramification:
        value /= shift_binomial(delta, query.n)
    return value
