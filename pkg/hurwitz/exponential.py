"""
Connected shifted Hurwitz numbers and the exponential relation

Branch data (j; Δ_1', ..., Δ_k') are monomials x^j Π_i p^{(i)}_{Δ_i'}; the
disconnected numbers are the coefficients of exp of the connected ones.
"""
import itertools
import logging
import threading
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from combinatorics.partitions import Partition, splittings, sub_partitions
from hurwitz.numbers import HurwitzQuery, HurwitzValue, derived_genus, disconnected_U

logger = logging.getLogger(__name__)

BranchData = Tuple[int, Tuple[Partition, ...]]
# (degree, multiplicities per (branch, part) coordinate)
VectorKey = Tuple[int, Tuple[int, ...]]

# CU is symmetric in the branch points, so entries are keyed by the sorted data
_connected_cache: Dict[Tuple[int, int, Tuple[Partition, ...]], Fraction] = {}
_connected_lock = threading.Lock()


def _widest(data: Tuple[Partition, ...]) -> int:
    return max((delta.size for delta in data), default=0)


def _disconnected(g: int, degree: int, data: Tuple[Partition, ...]) -> Fraction:
    return disconnected_U(HurwitzQuery(g, degree, data)).value


def connected_value(g: int, degree: int, data: Sequence[Partition]) -> Fraction:
    """
    CU for one monomial from j·U_j = Σ_{i=1}^{j} i·CU_i·U_{j-i}

    Every split of the data into a connected piece and a remainder is read
    off the cached splittings of each Δ_i, and all entries share one cache
    across queries.

    Args:
        g: Target genus
        degree: Covering degree j
        data: Ramification partitions (Δ_1', ..., Δ_k')

    Returns:
        Exact rational
    """
    data = tuple(sorted(data, key=Partition.sort_key))
    key = (g, degree, data)
    with _connected_lock:
        cached = _connected_cache.get(key)
    if cached is not None:
        return cached

    if degree == 0 or _widest(data) > degree or derived_genus(HurwitzQuery(g, degree, data)) is None:
        value = Fraction(0)
    else:
        correction = Fraction(0)
        for choice in itertools.product(*(splittings(delta) for delta in data)):
            piece = tuple(pair[0] for pair in choice)
            rest = tuple(pair[1] for pair in choice)
            upper = min(degree - 1, degree - _widest(rest))
            for smaller in range(max(1, _widest(piece)), upper + 1):
                weight = connected_value(g, smaller, piece)
                if weight:
                    correction += smaller * weight * _disconnected(g, degree - smaller, rest)
        value = _disconnected(g, degree, data) - correction / degree

    with _connected_lock:
        _connected_cache[key] = value
    return value


def clear_connected_cache():
    with _connected_lock:
        logger.debug(f"Clearing {len(_connected_cache)} connected numbers")
        _connected_cache.clear()


def sub_ramifications(ramification: Sequence[Partition]) -> List[Tuple[Partition, ...]]:
    """Every tuple (Δ_1', ..., Δ_k') with Δ_i' contained in Δ_i"""
    return [tuple(choice) for choice in itertools.product(*(sub_partitions(d) for d in ramification))]


def connected_table(g: int, n: int, ramification: Sequence[Partition]) -> Dict[BranchData, Fraction]:
    """
    Connected numbers for every sub-datum of (n; Δ_1, ..., Δ_k)

    Args:
        g: Target genus
        n: Covering degree
        ramification: Ramification partitions, positional

    Returns:
        {(j, (Δ_1', ..., Δ_k')): CU} for 1 <= j <= n
    """
    lattice = sub_ramifications(ramification)
    logger.debug(f"Connected table for g={g}, n={n}: {len(lattice)} sub-ramifications")
    return {(degree, data): connected_value(g, degree, data)
            for degree in range(1, n + 1) for data in lattice}


def connected_CU(query: HurwitzQuery) -> HurwitzValue:
    """
    Connected shifted Hurwitz number CU_g^{h,n}(Δ_1, ..., Δ_k)

    Args:
        query: Hurwitz query

    Returns:
        HurwitzValue flagged connected
    """
    h = derived_genus(query)
    if query.n == 0 or not query.fits or h is None:
        return HurwitzValue(query, Fraction(0), h, connected=True)
    return HurwitzValue(query, connected_value(query.g, query.n, query.ramification), h, connected=True)


def _coordinates(ramification: Tuple[Partition, ...]) -> List[Tuple[int, int]]:
    return [(index, part) for index, delta in enumerate(ramification) for part in sorted(set(delta.parts))]


def _to_vector(data: Tuple[Partition, ...], coordinates: List[Tuple[int, int]]) -> Tuple[int, ...]:
    return tuple(data[index].multiplicity(part) for index, part in coordinates)


def exponentiate_connected(g: int, n: int, ramification: Sequence[Partition],
                           table: Optional[Dict[BranchData, Fraction]] = None) -> Fraction:
    """
    Rebuild a disconnected number from connected ones as a coefficient of exp(F)

    exp(F) is the product over connected monomials m of exp(CU·m), so each
    monomial enters with Σ_k CU^k m^k / k!. Sub-data are multiplicity vectors
    bounded by the target's, so multiplying monomials is vector addition.

    Args:
        g: Target genus
        n: Covering degree
        ramification: Ramification partitions
        table: Connected numbers; computed when omitted

    Returns:
        The coefficient of x^n Π p^{(i)}_{Δ_i} in exp(F)
    """
    ramification = tuple(ramification)
    if table is None:
        table = connected_table(g, n, ramification) if n > 0 else {}

    coordinates = _coordinates(ramification)
    ceiling = _to_vector(ramification, coordinates)
    zero = tuple(0 for _ in ceiling)
    target: VectorKey = (n, ceiling)

    states: Dict[VectorKey, Fraction] = {(0, zero): Fraction(1)}
    for (component_degree, component_data), value in table.items():
        if not value:
            continue
        step = _to_vector(component_data, coordinates)
        updated = dict(states)
        for (degree, vector), weight in states.items():
            term = weight
            k = 1
            while True:
                degree += component_degree
                vector = tuple(a + b for a, b in zip(vector, step))
                if degree > n or any(count > limit for count, limit in zip(vector, ceiling)):
                    break
                term = term * value / k
                key = (degree, vector)
                updated[key] = updated.get(key, Fraction(0)) + term
                k += 1
        states = updated
    logger.debug(f"exp(F) for g={g}, n={n}: {len(states)} partial products")
    return states.get(target, Fraction(0))
