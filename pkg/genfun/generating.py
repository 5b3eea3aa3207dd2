"""
Generating functions of shifted Hurwitz numbers with cut-and-join insertions
"""
import itertools
import logging
import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence, Tuple

from algebra.laurent import LaurentScalar
from algebra.series import MultiSeries, SeriesKey
from characters.symmetric_group import dimension_weight, phi
from combinatorics.partitions import EMPTY, Partition, partitions_of, partitions_up_to
from common.errors import InvalidInputError
from common.parallel import ordered_map
from cutjoin.operators import BlockOperator, apply, build_w_action

logger = logging.getLogger(__name__)

INSERTION_PATTERN = re.compile(r'^\s*([A-Za-z_][A-Za-z0-9_]*)\s*=\s*(.+)$')


@dataclass(frozen=True)
class InsertionSpec:
    """Ordered (u-name, Δ) pairs; each Δ must be nonempty"""
    pairs: Tuple[Tuple[str, Partition], ...] = ()

    def __post_init__(self):
        names = [name for name, _ in self.pairs]
        if len(set(names)) != len(names):
            raise InvalidInputError(f"Duplicate u-variable names: {names}")
        for name, delta in self.pairs:
            if not name:
                raise InvalidInputError("Insertion names must be nonempty")
            if delta == EMPTY:
                raise InvalidInputError(f"Insertion {name} has the empty partition")

    @property
    def names(self) -> Tuple[str, ...]:
        return tuple(name for name, _ in self.pairs)

    @property
    def deltas(self) -> Tuple[Partition, ...]:
        return tuple(delta for _, delta in self.pairs)

    @classmethod
    def parse(cls, items: Sequence[str]) -> 'InsertionSpec':
        """
        Parse entries such as "u=[2,1]"

        Args:
            items: Insertion strings

        Returns:
            InsertionSpec
        """
        pairs = []
        for item in items:
            match = INSERTION_PATTERN.match(item)
            if not match:
                raise InvalidInputError(f"Malformed insertion '{item}', expected name=[parts]")
            pairs.append((match.group(1), Partition.parse(match.group(2))))
        return cls(tuple(pairs))

    def reversed(self) -> 'InsertionSpec':
        return InsertionSpec(tuple(reversed(self.pairs)))

    def to_dict(self) -> List[Dict[str, str]]:
        return [{'name': name, 'delta': str(delta)} for name, delta in self.pairs]


def u_vectors(count: int, u_bound: int) -> List[Tuple[int, ...]]:
    """Exponent vectors of length count with total order <= u_bound"""
    return [exps for exps in itertools.product(range(u_bound + 1), repeat=count) if sum(exps) <= u_bound]


def _degree_terms(g: int, insertions: InsertionSpec, n: int, u_bound: int,
                  families: int) -> List[Tuple[SeriesKey, LaurentScalar]]:
    """All terms contributed by covers of degree n, evaluated by the character sum"""
    gammas = partitions_up_to(n)
    terms = []
    for shape in partitions_of(n):
        weight = dimension_weight(shape) ** (2 - 2 * g)
        insertion_values = [phi(shape, delta) for delta in insertions.deltas]
        gamma_values = [(gamma, phi(shape, gamma)) for gamma in gammas]
        gamma_values = [(gamma, value) for gamma, value in gamma_values if value]

        for exps in u_vectors(len(insertions.pairs), u_bound):
            factor = weight
            for value, power in zip(insertion_values, exps):
                factor *= Fraction(value ** power, math.factorial(power))
            if not factor:
                continue
            u_defect = sum(power * (delta.size - delta.length) for delta, power in zip(insertions.deltas, exps))

            for combo in itertools.product(gamma_values, repeat=families):
                parts = tuple(gamma for gamma, _ in combo)
                value = factor
                for _, gamma_value in combo:
                    value *= gamma_value
                exponent = u_defect + sum(gamma.size - gamma.length for gamma in parts) - (2 - 2 * g) * n
                terms.append(((exps, parts), LaurentScalar.monomial(exponent, value)))
    return terms


def phi_direct(g: int, insertions: InsertionSpec, bound: int, u_bound: int,
               two_family: bool = False, threads: int = 1) -> MultiSeries:
    """
    Φ_g from the character sum over covers of degree n <= bound

    Args:
        g: Target genus
        insertions: (u, Δ) insertions
        bound: Largest covering degree N
        u_bound: Largest total u-order
        two_family: Add the family p⁽¹⁾ in front of p
        threads: Worker count; degrees are evaluated independently

    Returns:
        MultiSeries in shifted coordinates
    """
    if g < 0:
        raise InvalidInputError(f"Genus must be nonnegative, got {g}")
    families = 2 if two_family else 1
    logger.info(f"Evaluating Φ_{g} over n <= {bound}, u-order <= {u_bound}, {families} famil"
                f"{'ies' if families > 1 else 'y'}")
    series = MultiSeries(insertions.names, families, bound, u_bound)
    batches = ordered_map(lambda n: _degree_terms(g, insertions, n, u_bound, families), range(bound + 1), threads)
    for batch in batches:
        for key, value in batch:
            series.add_term(key, value)
    return series


def phi_degree_slice(g: int, insertions: InsertionSpec, n: int, u_bound: int,
                     two_family: bool = False) -> MultiSeries:
    """Only the degree-n covers of Φ_g"""
    families = 2 if two_family else 1
    series = MultiSeries(insertions.names, families, n, u_bound)
    for key, value in _degree_terms(g, insertions, n, u_bound, families):
        series.add_term(key, value)
    return series


def apply_to_p(operator: BlockOperator, series: MultiSeries) -> MultiSeries:
    """Act with a cut-and-join operator on the last family p"""
    slices = [(key, apply(operator, part)) for key, part in series.p_slices().items()]
    return MultiSeries.from_p_slices(series, slices)


def operator_exponential(series: MultiSeries, name: str, operator: BlockOperator) -> MultiSeries:
    """
    exp(u W) applied to a series, truncated at the series' u-order

    Args:
        series: Series whose u-variables include name
        name: u-variable paired with the operator
        operator: W

    Returns:
        Σ_j u^j W^j series / j!
    """
    result = series
    power = series
    for order in range(1, series.u_bound + 1):
        power = apply_to_p(operator, power).times_u(name).scale(Fraction(1, order))
        if power.is_zero():
            break
        result = result + power
    return result


def _check_base(base: MultiSeries, bound: int):
    if base.u_names:
        raise InvalidInputError(f"Base series must have no insertions, got {base.u_names}")
    if base.bound != bound:
        raise InvalidInputError(f"Base series is truncated at {base.bound}, expected {bound}")


def _exponentiate(insertions: InsertionSpec, lifted: MultiSeries, bound: int, threads: int) -> MultiSeries:
    for name, delta in reversed(insertions.pairs):
        logger.debug(f"Applying exp({name} W({delta}))")
        lifted = operator_exponential(lifted, name, build_w_action(delta, bound, threads))
    return lifted


def phi_exp_action(g: int, insertions: InsertionSpec, base: MultiSeries, bound: int, u_bound: int,
                   threads: int = 1, order: Optional[InsertionSpec] = None) -> MultiSeries:
    """
    Π_i exp(u_i W(Δ_i, z)) applied to the insertion-free Φ_g

    The operators act in unshifted coordinates: the base is unshifted with
    p_1 -> p_1 - 1, exponentiated, and shifted back.

    Args:
        g: Target genus of the base
        insertions: (u, Δ) insertions naming the u-variables of the result
        base: Φ_g without insertions, truncated at bound
        bound: Largest covering degree N
        u_bound: Largest total u-order
        threads: Worker count for building operators
        order: Same insertions in the order the exponentials are applied, defaults to insertions

    Returns:
        MultiSeries in shifted coordinates
    """
    _check_base(base, bound)
    if order is not None and sorted(order.pairs) != sorted(insertions.pairs):
        raise InvalidInputError("Application order must list the same insertions")
    logger.info(f"Exponentiating {len(insertions.pairs)} insertions on Φ_{g} (N={bound}, U={u_bound})")
    lifted = base.shift_p1(Fraction(-1)).with_u_names(insertions.names, u_bound)
    lifted = _exponentiate(insertions if order is None else order, lifted, bound, threads)
    return lifted.shift_p1(Fraction(1))


def phi_exp_literal(g: int, insertions: InsertionSpec, base: MultiSeries, bound: int, u_bound: int,
                    threads: int = 1) -> MultiSeries:
    """Π_i exp(u_i W(Δ_i, z)) acting directly on the shifted base, without conjugation"""
    _check_base(base, bound)
    logger.info(f"Exponentiating {len(insertions.pairs)} insertions literally on Φ_{g}")
    return _exponentiate(insertions, base.with_u_names(insertions.names, u_bound), bound, threads)


def differential_equation(series: MultiSeries, insertions: InsertionSpec, threads: int = 1) -> Dict[str, bool]:
    """
    Check ∂Φ/∂u_i = W(Δ_i, z) Φ in shifted coordinates, below the top u-order

    Args:
        series: Φ_g with the given insertions
        insertions: (u, Δ) insertions of series

    Returns:
        {u-name: holds}
    """
    if series.u_bound < 1:
        raise InvalidInputError("The differential equation needs a u-order of at least 1")
    unshifted = series.shift_p1(Fraction(-1))
    outcome = {}
    for name, delta in insertions.pairs:
        lhs = series.u_derivative(name)
        image = apply_to_p(build_w_action(delta, series.bound, threads), unshifted)
        rhs = image.shift_p1(Fraction(1)).truncate_u(series.u_bound - 1)
        outcome[name] = lhs == rhs
        if not outcome[name]:
            logger.warning(f"∂Φ/∂{name} differs from W({delta})Φ")
    return outcome


def path_independence(g: int, insertions: InsertionSpec, bound: int, u_bound: int,
                      threads: int = 1) -> Dict[str, Any]:
    """
    Compare the character-sum Φ_g with the operator exponential of its insertion-free part

    Returns:
        {g, N, U, insertions, holds, differences}
    """
    direct = phi_direct(g, insertions, bound, u_bound, threads=threads)
    base = phi_direct(g, InsertionSpec(), bound, 0, threads=threads)
    action = phi_exp_action(g, insertions, base, bound, u_bound, threads)
    differences = (direct - action).to_dict()
    if differences:
        logger.warning(f"Φ_{g} paths disagree on {len(differences)} coefficients")
    return {
        'g': g,
        'N': bound,
        'U': u_bound,
        'insertions': insertions.to_dict(),
        'holds': not differences,
        'differences': differences,
    }
