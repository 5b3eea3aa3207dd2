"""
Cut-and-join operators as block-diagonal matrices over the monomials p_Γ
"""
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Any, Dict, List, Optional, Sequence, Tuple, Union

from algebra.laurent import ONE, ZERO, LaurentScalar, laurent_sum
from algebra.series import TruncatedSeries
from combinatorics.partitions import EMPTY, Partition, partitions_of
from common.errors import InvalidInputError, InvalidStateError
from common.parallel import ordered_map
from hurwitz.numbers import HurwitzQuery, disconnected_U

logger = logging.getLogger(__name__)

Block = Tuple[Tuple[LaurentScalar, ...], ...]


@dataclass(frozen=True)
class BlockOperator:
    """
    One square matrix per weighted degree n <= bound

    blocks[n][i][j] is the coefficient of p_{Δ''} in W·p_{Δ'}, where Δ'' and Δ'
    are the i-th and j-th entries of partitions_of(n).
    """
    delta: Optional[Partition]
    bound: int
    blocks: Tuple[Block, ...]
    normalized: bool = False
    label: str = field(default='', compare=False)

    def __post_init__(self):
        if len(self.blocks) != self.bound + 1:
            raise InvalidInputError(f"Expected {self.bound + 1} blocks, got {len(self.blocks)}")
        for n, block in enumerate(self.blocks):
            size = len(partitions_of(n))
            if len(block) != size or any(len(row) != size for row in block):
                raise InvalidInputError(f"Block {n} must be {size}x{size}")
        if not self.label:
            object.__setattr__(self, 'label', _default_label(self.delta, self.normalized))

    def entry(self, n: int, target: Partition, source: Partition) -> LaurentScalar:
        """Coefficient of p_target in W·p_source"""
        basis = partitions_of(n)
        return self.blocks[n][basis.index(target)][basis.index(source)]

    def same_blocks(self, other: 'BlockOperator') -> bool:
        return self.bound == other.bound and self.blocks == other.blocks

    def differences(self, other: 'BlockOperator') -> List[Dict[str, Any]]:
        """Every entry where the two operators disagree"""
        if self.bound != other.bound:
            raise InvalidInputError(f"Truncation mismatch: {self.bound} vs {other.bound}")
        found = []
        for n in range(self.bound + 1):
            basis = partitions_of(n)
            for i, target in enumerate(basis):
                for j, source in enumerate(basis):
                    mine = self.blocks[n][i][j]
                    theirs = other.blocks[n][i][j]
                    if mine != theirs:
                        found.append({'n': n, 'from': str(source), 'to': str(target),
                                      'left': str(mine), 'right': str(theirs)})
        return found

    def to_dict(self) -> Dict[str, Any]:
        """Serialize as {delta, N, normalized, blocks: [{n, rows: [{from, to, z_exp, coeff}]}]}"""
        blocks = []
        for n, block in enumerate(self.blocks):
            basis = partitions_of(n)
            rows = []
            for j, source in enumerate(basis):
                for i, target in enumerate(basis):
                    for term in block[i][j].to_dict():
                        rows.append({'from': str(source), 'to': str(target), **term})
            blocks.append({'n': n, 'rows': rows})
        return {
            'delta': None if self.delta is None else str(self.delta),
            'label': self.label,
            'N': self.bound,
            'normalized': self.normalized,
            'blocks': blocks,
        }


def _default_label(delta: Optional[Partition], normalized: bool) -> str:
    if delta is None:
        return "combination"
    return f"{'Ŵ' if normalized else 'W'}({delta})"


def zero_block(n: int) -> Block:
    size = len(partitions_of(n))
    return tuple(tuple(ZERO for _ in range(size)) for _ in range(size))


def identity_block(n: int) -> Block:
    size = len(partitions_of(n))
    return tuple(tuple(ONE if i == j else ZERO for j in range(size)) for i in range(size))


def _action_block(delta: Partition, n: int) -> Block:
    if delta.size > n:
        return zero_block(n)
    basis = partitions_of(n)
    defect = delta.size - delta.length
    rows = []
    for target in basis:
        row = []
        for source in basis:
            value = disconnected_U(HurwitzQuery(0, n, (source, delta, target))).value
            exponent = defect + source.length - target.length
            row.append(LaurentScalar.monomial(exponent, source.centralizer_order() * value))
        rows.append(tuple(row))
    return tuple(rows)


@lru_cache(maxsize=None)
def build_w_action(delta: Partition, bound: int, threads: int = 1) -> BlockOperator:
    """
    W(Δ, z) from the genus-zero shifted Hurwitz numbers

    Entry (Δ'', Δ') of block n is z^{|Δ|-l(Δ)+l(Δ')-l(Δ'')} · z_{Δ'} · U_0(Δ', Δ, Δ''),
    with z_{Δ'} the centralizer order of Δ'.

    Args:
        delta: Defining partition Δ (∅ gives the identity)
        bound: Largest weighted degree N
        threads: Worker count; blocks are built independently

    Returns:
        Unnormalized BlockOperator
    """
    if bound < 0:
        raise InvalidInputError(f"Truncation bound must be nonnegative, got {bound}")
    if delta == EMPTY:
        return BlockOperator(delta, bound, tuple(identity_block(n) for n in range(bound + 1)))
    logger.info(f"Building W({delta}) up to N={bound}")
    blocks = ordered_map(lambda n: _action_block(delta, n), range(bound + 1), threads)
    return BlockOperator(delta, bound, tuple(blocks))


def normalize(operator: BlockOperator) -> BlockOperator:
    """
    Ŵ(Δ, z) = z^{-|Δ|+l(Δ)} W(Δ, z)

    Args:
        operator: Unnormalized operator with a defining partition

    Returns:
        Normalized BlockOperator
    """
    if operator.normalized:
        raise InvalidStateError(f"{operator.label} is already normalized")
    if operator.delta is None:
        raise InvalidStateError(f"{operator.label} has no defining partition to normalize by")
    shift = operator.delta.length - operator.delta.size
    blocks = tuple(tuple(tuple(entry.shift(shift) for entry in row) for row in block)
                   for block in operator.blocks)
    return BlockOperator(operator.delta, operator.bound, blocks, normalized=True)


def build_w_hat(delta: Partition, bound: int, threads: int = 1) -> BlockOperator:
    """Ŵ(Δ, z) in one step"""
    return normalize(build_w_action(delta, bound, threads))


def apply(operator: BlockOperator, series: TruncatedSeries) -> TruncatedSeries:
    """
    Block-wise matrix-vector product W·s

    Args:
        operator: BlockOperator
        series: Series with the same truncation bound

    Returns:
        TruncatedSeries
    """
    if series.bound != operator.bound:
        raise InvalidInputError(f"Cannot apply {operator.label} (N={operator.bound}) "
                                f"to a series truncated at {series.bound}")
    image: Dict[Partition, LaurentScalar] = {}
    for source, value in series.items():
        n = source.size
        basis = partitions_of(n)
        j = basis.index(source)
        block = operator.blocks[n]
        for i, target in enumerate(basis):
            entry = block[i][j]
            if entry:
                image[target] = image.get(target, ZERO) + entry * value
    return TruncatedSeries(operator.bound, image)


def _matmul(left: Block, right: Block) -> Block:
    size = len(left)
    return tuple(
        tuple(laurent_sum(left[i][k] * right[k][j] for k in range(size) if left[i][k] and right[k][j])
              for j in range(size))
        for i in range(size)
    )


def compose(left: BlockOperator, right: BlockOperator) -> BlockOperator:
    """
    left ∘ right, block by block

    Args:
        left: Operator applied second
        right: Operator applied first

    Returns:
        BlockOperator without a defining partition
    """
    if left.bound != right.bound:
        raise InvalidInputError(f"Truncation mismatch: {left.bound} vs {right.bound}")
    if left.normalized != right.normalized:
        raise InvalidInputError(f"Cannot compose {left.label} with {right.label}: mixed normalization")
    blocks = tuple(_matmul(a, b) for a, b in zip(left.blocks, right.blocks))
    return BlockOperator(None, left.bound, blocks, normalized=left.normalized,
                         label=f"{left.label}{right.label}")


def linear_combination(terms: Sequence[Tuple[Union[LaurentScalar, Fraction, int], BlockOperator]],
                       bound: int, normalized: bool = False) -> BlockOperator:
    """
    Σ c_k W_k

    Args:
        terms: (coefficient, operator) pairs
        bound: Truncation bound shared by every operator
        normalized: Normalization flag shared by every operator

    Returns:
        BlockOperator without a defining partition
    """
    blocks = [[list(row) for row in zero_block(n)] for n in range(bound + 1)]
    for coeff, operator in terms:
        if operator.bound != bound:
            raise InvalidInputError(f"{operator.label} has N={operator.bound}, expected {bound}")
        if operator.normalized != normalized:
            raise InvalidInputError(f"{operator.label} has the wrong normalization for this combination")
        for n, block in enumerate(operator.blocks):
            for i, row in enumerate(block):
                for j, entry in enumerate(row):
                    if entry:
                        blocks[n][i][j] = blocks[n][i][j] + entry * coeff
    frozen = tuple(tuple(tuple(row) for row in block) for block in blocks)
    return BlockOperator(None, bound, frozen, normalized=normalized)
