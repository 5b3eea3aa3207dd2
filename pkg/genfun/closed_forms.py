"""
Insertion-free genus-zero initial values and their candidate closed forms
"""
import logging
from fractions import Fraction

from algebra.laurent import LaurentScalar
from algebra.series import MultiSeries, exp_series
from characters.symmetric_group import dimension_weight, phi
from combinatorics.partitions import Partition, partitions_of, partitions_up_to
from cutjoin.eigen import genus_schur

logger = logging.getLogger(__name__)

P1 = Partition((1,))


def _single(bound: int) -> MultiSeries:
    return MultiSeries((), 1, bound, 0)


def _pair(bound: int) -> MultiSeries:
    return MultiSeries((), 2, bound, 0)


def phi0_closed(bound: int) -> MultiSeries:
    """
    Σ_λ (dim λ / |λ|!) S_λ{p_m + δ_{m,1}, z} over |λ| <= bound

    Args:
        bound: Truncation N

    Returns:
        Single-family MultiSeries in shifted coordinates
    """
    series = _single(bound)
    for n in range(bound + 1):
        for shape in partitions_of(n):
            weight = dimension_weight(shape)
            for gamma, value in genus_schur(shape, bound):
                series.add_term(((), (gamma,)), value * weight)
    return series.shift_p1(Fraction(1))


def phi0_first_line(bound: int) -> MultiSeries:
    """Σ_λ Σ_Δ z^{-|Δ|-l(Δ)} (dim λ / |λ|!)² φ_λ(Δ) p_Δ, read literally"""
    series = _single(bound)
    for n in range(bound + 1):
        for shape in partitions_of(n):
            weight = dimension_weight(shape) ** 2
            for delta in partitions_up_to(n):
                value = weight * phi(shape, delta)
                series.add_term(((), (delta,)), LaurentScalar.monomial(-delta.size - delta.length, value))
    return series


def phi0_exponential(bound: int) -> MultiSeries:
    """exp((p_1 + 1) / z²), expanded in unshifted coordinates and then shifted"""
    exponent = MultiSeries((), 1, bound, 0, {((), (P1,)): LaurentScalar.monomial(-2)})
    return exp_series(exponent).shift_p1(Fraction(1))


def phi0_two_family(bound: int) -> MultiSeries:
    """
    Σ_λ z^{2|λ|} S_λ{p⁽¹⁾_m + δ_{m,1}, z} S_λ{p_m + δ_{m,1}, z} over |λ| <= bound

    Args:
        bound: Truncation N, applied per family

    Returns:
        Two-family MultiSeries in shifted coordinates
    """
    series = _pair(bound)
    for n in range(bound + 1):
        for shape in partitions_of(n):
            schur = genus_schur(shape, bound).items()
            for gamma1, value1 in schur:
                for gamma, value in schur:
                    series.add_term(((), (gamma1, gamma)), (value1 * value).shift(2 * n))
    return series.shift_p1(Fraction(1))


def phi0_two_family_first_line(bound: int) -> MultiSeries:
    """Σ_λ Σ_{Δ1,Δ2} z^{2|λ|-|Δ1|-|Δ2|-l(Δ1)-l(Δ2)} (dim λ / |λ|!)² φ_λ(Δ1) φ_λ(Δ2) p⁽¹⁾_{Δ1} p_{Δ2}, read literally"""
    series = _pair(bound)
    for n in range(bound + 1):
        for shape in partitions_of(n):
            weight = dimension_weight(shape) ** 2
            values = [(delta, phi(shape, delta)) for delta in partitions_up_to(n)]
            values = [(delta, value) for delta, value in values if value]
            for delta1, value1 in values:
                for delta2, value2 in values:
                    exponent = 2 * n - delta1.size - delta2.size - delta1.length - delta2.length
                    series.add_term(((), (delta1, delta2)),
                                    LaurentScalar.monomial(exponent, weight * value1 * value2))
    return series


def two_family_exponential(bound: int, inverse_m: bool) -> MultiSeries:
    """
    exp(Σ_m c_m (p⁽¹⁾_m + δ_{m,1})(p_m + δ_{m,1}) / z²), c_m = 1/m or 1

    Args:
        bound: Truncation N, applied per family
        inverse_m: Use c_m = 1/m

    Returns:
        Two-family MultiSeries in shifted coordinates
    """
    terms = {}
    for m in range(1, bound + 1):
        part = Partition((m,))
        coeff = Fraction(1, m) if inverse_m else Fraction(1)
        terms[((), (part, part))] = LaurentScalar.monomial(-2, coeff)
    return exp_series(MultiSeries((), 2, bound, 0, terms)).shift_p1(Fraction(1))
