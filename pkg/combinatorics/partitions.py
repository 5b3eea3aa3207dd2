"""
Partition arithmetic, enumeration and multiset combinatorics
"""
import logging
import math
import re
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from sympy.utilities.iterables import multiset_partitions

from common.errors import InvalidInputError

logger = logging.getLogger(__name__)

_BODY = r"(?:\d+\s*,\s*)*\d+\s*,?"
_PARTITION_RE = re.compile(rf"^\s*(?:\[\s*({_BODY})?\s*\]|\(\s*({_BODY})?\s*\)|({_BODY})?)\s*$")


@dataclass(frozen=True)
class Partition:
    """Nonincreasing tuple of positive parts; the empty tuple is the empty partition"""
    parts: Tuple[int, ...] = ()

    def __post_init__(self):
        previous = None
        for part in self.parts:
            if not isinstance(part, int) or part <= 0:
                raise InvalidInputError(f"Partition parts must be positive integers: {self.parts}")
            if previous is not None and part > previous:
                raise InvalidInputError(f"Partition parts must be nonincreasing: {self.parts}")
            previous = part

    @property
    def size(self) -> int:
        """|Δ|"""
        return sum(self.parts)

    @property
    def length(self) -> int:
        """l(Δ)"""
        return len(self.parts)

    @property
    def norm(self) -> int:
        """||Δ||, the product of the parts"""
        return math.prod(self.parts)

    def multiplicity(self, i: int) -> int:
        """m_i(Δ)"""
        return self.parts.count(i)

    def multiplicities(self) -> Dict[int, int]:
        """Multiplicity vector as {part: m_i}"""
        return dict(Counter(self.parts))

    def centralizer_order(self) -> int:
        """z_Δ = ||Δ|| · Π m_i(Δ)!"""
        return self.norm * math.prod(math.factorial(m) for m in Counter(self.parts).values())

    def conjugate(self) -> 'Partition':
        """Transposed Young diagram"""
        if not self.parts:
            return self
        return Partition(tuple(sum(1 for part in self.parts if part >= j)
                               for j in range(1, self.parts[0] + 1)))

    def pad(self, n: int) -> 'Partition':
        """[Δ, 1^{n-|Δ|}]"""
        if self.size > n:
            raise InvalidInputError(f"Cannot shift {self} to degree {n}")
        return Partition(self.parts + (1,) * (n - self.size))

    def __add__(self, other: 'Partition') -> 'Partition':
        return canonicalize(self.parts + other.parts)

    def subtract(self, other: 'Partition') -> Optional['Partition']:
        """Multiplicity-wise difference, or None when some multiplicity turns negative"""
        remaining = Counter(self.parts)
        remaining.subtract(Counter(other.parts))
        if any(count < 0 for count in remaining.values()):
            return None
        return canonicalize(remaining.elements())

    def sort_key(self) -> Tuple[int, Tuple[int, ...]]:
        """Canonical order: by size, then lexicographically descending"""
        return self.size, tuple(-part for part in self.parts)

    def __lt__(self, other: 'Partition') -> bool:
        return self.sort_key() < other.sort_key()

    def __str__(self) -> str:
        return '[' + ','.join(str(part) for part in self.parts) + ']'

    def __repr__(self) -> str:
        return f"Partition({self})"

    @classmethod
    def parse(cls, text: str) -> 'Partition':
        """
        Parse "[2,1]", "(2,1)", "2,1" or "[]"; brackets must balance

        Args:
            text: Serialized partition

        Returns:
            Partition
        """
        match = _PARTITION_RE.match(text)
        if not match:
            raise InvalidInputError(f"Malformed partition: {text!r}")
        body = next((group for group in match.groups() if group), "")
        if not body:
            return EMPTY
        return canonicalize(int(token) for token in body.rstrip(' ,').split(','))


EMPTY = Partition()


@dataclass(frozen=True)
class RePartition:
    """Unordered splitting of a partition into nonempty blocks"""
    blocks: Tuple[Partition, ...]

    def __post_init__(self):
        if any(block.size < 1 for block in self.blocks):
            raise InvalidInputError(f"Re-partition blocks must be nonempty: {self.blocks}")
        ordered = tuple(sorted(self.blocks, key=Partition.sort_key, reverse=True))
        object.__setattr__(self, 'blocks', ordered)

    @property
    def total(self) -> Partition:
        """Σ_i Δ^i"""
        total = EMPTY
        for block in self.blocks:
            total = total + block
        return total

    def __str__(self) -> str:
        return '{' + ','.join(str(block) for block in self.blocks) + '}'


def canonicalize(parts: Iterable[int]) -> Partition:
    """
    Drop zeros and sort a part list into a Partition

    Args:
        parts: Nonnegative integers

    Returns:
        Canonical Partition
    """
    parts = list(parts)
    if any(part < 0 for part in parts):
        raise InvalidInputError(f"Negative part in {parts}")
    return Partition(tuple(sorted((part for part in parts if part > 0), reverse=True)))


@lru_cache(maxsize=None)
def partitions_of(n: int) -> Tuple[Partition, ...]:
    """
    All partitions of n in lexicographically descending order

    Args:
        n: Nonnegative integer

    Returns:
        Tuple of partitions
    """
    if n < 0:
        raise InvalidInputError(f"Cannot partition a negative integer: {n}")

    def generate(remaining: int, largest: int):
        if remaining == 0:
            yield ()
            return
        for first in range(min(remaining, largest), 0, -1):
            for rest in generate(remaining - first, first):
                yield (first,) + rest

    return tuple(Partition(parts) for parts in generate(n, n))


def partitions_up_to(n: int) -> Tuple[Partition, ...]:
    """All partitions of size 0..n in canonical order"""
    return tuple(p for k in range(n + 1) for p in partitions_of(k))


def falling_factorial(n: int, k: int) -> int:
    """(n↓k) = n(n-1)...(n-k+1); zero for k < 0"""
    if k < 0:
        return 0
    if n >= 0:
        return math.perm(n, k)
    return math.prod(range(n, n - k, -1))


def binomial(n: int, k: int) -> int:
    """Binomial coefficient (n↓k)/k!, defined for every integer n; zero for k < 0"""
    if k < 0:
        return 0
    if n >= 0:
        return math.comb(n, k)
    return falling_factorial(n, k) // math.factorial(k)


def class_size(delta: Partition, n: int) -> int:
    """
    Size of the conjugacy class of cycle type [Δ, 1^{n-|Δ|}] in S_n

    Args:
        delta: Partition with |Δ| <= n
        n: Degree of the symmetric group

    Returns:
        n! / z_{[Δ,1^{n-|Δ|}]}
    """
    if delta.size > n:
        raise InvalidInputError(f"|{delta}| = {delta.size} exceeds n = {n}")
    return math.factorial(n) // delta.pad(n).centralizer_order()


def shift_binomial(delta: Partition, n: int) -> int:
    """binomial(n-|Δ|+m_1(Δ), m_1(Δ)); zero when |Δ| > n"""
    if delta.size > n:
        return 0
    m1 = delta.multiplicity(1)
    return binomial(n - delta.size + m1, m1)


@lru_cache(maxsize=None)
def proper_repartitions(delta: Partition) -> Tuple[RePartition, ...]:
    """
    All unordered splittings of the parts of Δ into nonempty blocks

    Args:
        delta: Partition to split

    Returns:
        Tuple of RePartition, each splitting exactly once
    """
    if not delta.parts:
        return (RePartition(()),)
    result = []
    for split in multiset_partitions(list(delta.parts)):
        result.append(RePartition(tuple(canonicalize(block) for block in split)))
    logger.debug(f"{delta} has {len(result)} proper re-partitions")
    return tuple(result)


def aut_count(triples: Sequence[Tuple[Partition, Partition, Partition]]) -> int:
    """
    Order of the group permuting a list of triples and fixing each one

    Args:
        triples: List of (Γ', Δ^i, Γ) triples

    Returns:
        Π over distinct triples of multiplicity!
    """
    return math.prod(math.factorial(count) for count in Counter(triples).values())


def sub_partitions(delta: Partition) -> List[Partition]:
    """Every partition contained in Δ multiplicity-wise"""
    return [kept for kept, _ in splittings(delta)]


@lru_cache(maxsize=None)
def splittings(delta: Partition) -> Tuple[Tuple[Partition, Partition], ...]:
    """
    Every way to write Δ = Δ' + Δ'' multiplicity-wise

    Both halves are read off one multiplicity vector.

    Args:
        delta: Partition to split

    Returns:
        (Δ', Δ'') pairs sorted by Δ' in canonical order
    """
    pairs = [((), ())]
    for part, count in sorted(Counter(delta.parts).items(), reverse=True):
        pairs = [(kept + (part,) * k, rest + (part,) * (count - k))
                 for kept, rest in pairs for k in range(count + 1)]
    return tuple(sorted(((Partition(kept), Partition(rest)) for kept, rest in pairs),
                        key=lambda pair: pair[0].sort_key()))
