"""
Partial permutations and the class algebra A_n
"""
import itertools
import logging
import math
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, FrozenSet, Iterator, List, Optional, Tuple

from algebra.laurent import format_rational
from combinatorics.partitions import Partition, binomial, canonicalize, class_size, shift_binomial
from common.errors import InvalidInputError
from common.parallel import ordered_map

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PartialPermutation:
    """Pair (E, f): a support E inside {1..n} and a bijection f of E, stored as sorted (x, f(x)) pairs"""
    images: Tuple[Tuple[int, int], ...] = ()

    def __post_init__(self):
        ordered = tuple(sorted(self.images))
        sources = [x for x, _ in ordered]
        targets = sorted(y for _, y in ordered)
        if len(set(sources)) != len(sources) or sources != targets:
            raise InvalidInputError(f"Not a bijection of its support: {self.images}")
        object.__setattr__(self, 'images', ordered)

    @classmethod
    def from_mapping(cls, mapping: Dict[int, int]) -> 'PartialPermutation':
        return cls(tuple(mapping.items()))

    @classmethod
    def from_cycles(cls, support, *cycles) -> 'PartialPermutation':
        """Support set plus disjoint cycles; support points outside the cycles are fixed"""
        mapping = {x: x for x in support}
        for cycle in cycles:
            for index, x in enumerate(cycle):
                if x not in mapping:
                    raise InvalidInputError(f"Cycle point {x} outside support {sorted(support)}")
                mapping[x] = cycle[(index + 1) % len(cycle)]
        return cls.from_mapping(mapping)

    @property
    def support(self) -> FrozenSet[int]:
        return frozenset(x for x, _ in self.images)

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, x: int) -> int:
        for source, target in self.images:
            if source == x:
                return target
        return x

    def __mul__(self, other: 'PartialPermutation') -> 'PartialPermutation':
        return pp_multiply(self, other)

    def __str__(self) -> str:
        support = ",".join(str(x) for x in sorted(self.support))
        return f"({{{support}}}, {dict(self.images)})"


IDENTITY = PartialPermutation()


def pp_multiply(a: PartialPermutation, b: PartialPermutation) -> PartialPermutation:
    """
    Product (E_1 ∪ E_2, f_1 ∘ f_2), each f_i extended by the identity

    Args:
        a: Left factor (applied second)
        b: Right factor (applied first)

    Returns:
        PartialPermutation
    """
    left = dict(a.images)
    right = dict(b.images)
    support = set(left) | set(right)
    return PartialPermutation.from_mapping({x: left.get(right.get(x, x), right.get(x, x)) for x in support})


def class_of(x: PartialPermutation) -> Partition:
    """Cycle type of f on E, fixed points of E included"""
    mapping = dict(x.images)
    seen = set()
    lengths = []
    for start in mapping:
        if start in seen:
            continue
        length = 0
        point = start
        while point not in seen:
            seen.add(point)
            point = mapping[point]
            length += 1
        lengths.append(length)
    return canonicalize(lengths)


def count_Pn(n: int) -> int:
    """|P_n| = Σ_k binomial(n, k) k!"""
    if n < 0:
        raise InvalidInputError(f"n must be nonnegative, got {n}")
    return sum(binomial(n, k) * math.factorial(k) for k in range(n + 1))


def _bijections(support: Tuple[int, ...]) -> Iterator[PartialPermutation]:
    for image in itertools.permutations(support):
        yield PartialPermutation(tuple(zip(support, image)))


def enumerate_partial_permutations(n: int) -> Iterator[PartialPermutation]:
    """Every element of P_n, by support size then support then image order"""
    if n < 0:
        raise InvalidInputError(f"n must be nonnegative, got {n}")
    for k in range(n + 1):
        for support in itertools.combinations(range(1, n + 1), k):
            yield from _bijections(support)


def class_count(delta: Partition, n: int) -> int:
    """|A_{Δ;n}| = binomial(n, |Δ|) · |C_Δ|"""
    if delta.size > n:
        return 0
    return binomial(n, delta.size) * class_size(delta, delta.size)


def _class_on_support(delta: Partition, support: Tuple[int, ...]) -> List[PartialPermutation]:
    return [x for x in _bijections(support) if class_of(x) == delta]


def class_elements(delta: Partition, n: int) -> List[PartialPermutation]:
    """All partial permutations of A_{Δ;n}"""
    if delta.size > n:
        return []
    elements = []
    for support in itertools.combinations(range(1, n + 1), delta.size):
        elements.extend(_class_on_support(delta, support))
    return elements


def class_representative(delta: Partition) -> PartialPermutation:
    """Fixed element of A_Δ supported on {1..|Δ|}"""
    cycles = []
    start = 1
    for part in delta.parts:
        cycles.append(tuple(range(start, start + part)))
        start += part
    return PartialPermutation.from_cycles(range(1, delta.size + 1), *cycles)


@dataclass(frozen=True)
class ClassVector:
    """Finite rational combination Σ c_Δ A_Δ; zero coefficients are never stored"""
    coefficients: Tuple[Tuple[Partition, Fraction], ...] = ()

    @classmethod
    def from_mapping(cls, mapping: Dict[Partition, Fraction]) -> 'ClassVector':
        ordered = sorted(((delta, Fraction(c)) for delta, c in mapping.items() if c != 0),
                         key=lambda item: item[0].sort_key())
        return cls(tuple(ordered))

    def as_mapping(self) -> Dict[Partition, Fraction]:
        return dict(self.coefficients)

    def coefficient(self, delta: Partition) -> Fraction:
        return self.as_mapping().get(delta, Fraction(0))

    def support(self) -> List[Partition]:
        return [delta for delta, _ in self.coefficients]

    def __add__(self, other: 'ClassVector') -> 'ClassVector':
        merged = self.as_mapping()
        for delta, c in other.coefficients:
            merged[delta] = merged.get(delta, Fraction(0)) + c
        return ClassVector.from_mapping(merged)

    def scale(self, factor: Fraction) -> 'ClassVector':
        return ClassVector.from_mapping({delta: c * factor for delta, c in self.coefficients})

    def to_dict(self) -> List[Dict[str, str]]:
        return [{'partition': str(delta), 'coeff': format_rational(c)} for delta, c in self.coefficients]

    def __str__(self) -> str:
        if not self.coefficients:
            return "0"
        return " + ".join(f"{format_rational(c)}*A{delta}" for delta, c in self.coefficients)


def _count_products(args) -> Counter:
    delta, support, fixed = args
    counts = Counter()
    for x in _class_on_support(delta, support):
        counts[class_of(pp_multiply(x, fixed))] += 1
    return counts


def structure_constants(delta1: Partition, delta2: Partition, n: Optional[int] = None,
                        threads: int = 1) -> ClassVector:
    """
    Structure constants Ĉ_{Δ1,Δ2}^{Δ3} of A_∞ by enumeration inside B_n

    Sums x·r over x in A_{Δ1;n} for one fixed r in A_{Δ2;n}; by S_n-symmetry the
    coefficient of A_{Δ3} is |A_{Δ2;n}| · #{x : class(x·r) = Δ3} / |A_{Δ3;n}|.

    Args:
        delta1: Left class
        delta2: Right class
        n: Ambient degree, at least |Δ1|+|Δ2|; defaults to |Δ1|+|Δ2|
        threads: Worker count; supports are split across workers

    Returns:
        ClassVector of Ĉ
    """
    minimal = delta1.size + delta2.size
    n = minimal if n is None else n
    if n < minimal:
        raise InvalidInputError(f"Ambient degree {n} truncates products of {delta1} and {delta2}")

    fixed = class_representative(delta2)
    supports = list(itertools.combinations(range(1, n + 1), delta1.size))
    logger.info(f"Multiplying A{delta1} by A{delta2} in B_{n} over {len(supports)} supports")

    partials = ordered_map(_count_products, [(delta1, support, fixed) for support in supports], threads)
    counts = Counter()
    for partial in partials:
        counts.update(partial)

    right = class_count(delta2, n)
    coefficients = {}
    for delta3 in sorted(counts, key=Partition.sort_key):
        coefficients[delta3] = Fraction(right * counts[delta3], class_count(delta3, n))
    return ClassVector.from_mapping(coefficients)


def theta_project(vector: ClassVector, m: int) -> ClassVector:
    """θ_m: drop every A_Δ with |Δ| > m"""
    return ClassVector.from_mapping({delta: c for delta, c in vector.coefficients if delta.size <= m})


def psi_coefficient(delta: Partition, n: int) -> int:
    """Multiplier in ψ(A_{Δ;n}) = binomial(n-|Δ|+m_1(Δ), m_1(Δ)) · C_{Δ;n}; zero when |Δ| > n"""
    return shift_binomial(delta, n)
