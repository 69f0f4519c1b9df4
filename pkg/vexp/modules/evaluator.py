"""
Copyright (c) Facebook, Inc. and its affiliates.

This source code is licensed under the MIT license found in the
LICENSE file in the root directory of this source tree.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import partial
from typing import List, Optional, Sequence, Tuple

from vexp.common.exceptions import (
    BaseCollidesWithNode,
    ExponentOutOfRange,
    InvariantViolation,
    NearSingularDenominator,
    ZeroScale,
)
from vexp.common.utils import ceil_log2
from vexp.fields.base import Field, FieldElement
from vexp.tables.node_table import NodeTable

"""
Evaluation of a**n from a precomputed node table, in three steps:

1. per node j, the summands P_j**n C_j / (P_j - a) and C_j / (P_j - a);
2. two balanced-tree sums of depth ceil(log2 k);
3. one final division.

```
from vexp.modules.evaluator import eval_power

outcome = eval_power(table, a, n)
outcome.value, outcome.reduction_depth
```

Step 1 is independent per node and may be mapped over a worker pool; the
pairing of step 2 is fixed, so results do not depend on scheduling.
"""


@dataclass(frozen=True)
class EvalOutcome:
    value: FieldElement
    numerator_summands: Tuple[FieldElement, ...]
    denominator_summands: Tuple[FieldElement, ...]
    numerator: FieldElement
    denominator: FieldElement
    reduction_depth: int
    division_count: int


@dataclass(frozen=True)
class CostReport:
    k: int
    n: int
    # operations per node in step 1: one subtraction, one inversion and
    # two multiplications
    vexp_local_ops: int
    vexp_total_local_ops: int
    vexp_reduction_depth: int
    vexp_reduction_adds: int
    vexp_divisions: int
    binexp_squarings: int
    binexp_multiplications: int
    add_cost: Fraction
    mul_cost: Fraction
    div_cost: Fraction
    vexp_critical_path_cost: Fraction
    binexp_cost: Fraction


def tree_reduce(field: Field, xs: Sequence) -> Tuple[FieldElement, int]:
    """
    Sum of xs under a fixed balanced pairing: the first ceil(m/2) elements
    are reduced against the rest, recursively. Returns (sum, depth) with
    depth = ceil(log2 m).
    """
    m = len(xs)
    assert m >= 1, "tree_reduce needs at least one element"
    if m == 1:
        return xs[0], 0
    mid = (m + 1) // 2
    left, left_depth = tree_reduce(field, xs[:mid])
    right, right_depth = tree_reduce(field, xs[mid:])
    return field.add(left, right), 1 + max(left_depth, right_depth)


def check_base(field: Field, nodes: Sequence, a) -> None:
    for j, p in enumerate(nodes):
        if field.equals(a, p):
            raise BaseCollidesWithNode(j + 1, field.encode(a))


def _summands(field: Field, table: NodeTable, a, n: int, j: int):
    weight = field.mul(
        table.coeffs[j], field.inverse(field.sub(table.nodes[j], a))
    )
    return field.mul(table.powers[j][n], weight), weight


def _check_denominator(field: Field, denominator, summands) -> None:
    if field.is_exact:
        # Never happens for a valid table: the denominator is a non-zero
        # multiple of a Vandermonde determinant.
        if field.is_zero(denominator):
            raise InvariantViolation(
                "Denominator sum vanished; the node table is corrupt"
            )
        return
    scale = max(abs(w) for w in summands)
    if abs(denominator) < field.tolerance * scale:
        raise NearSingularDenominator(
            f"|denominator| = {abs(denominator):.3e} is below "
            f"{field.tolerance:g} * {scale:.3e}"
        )


def eval_power(
    table: NodeTable, a: FieldElement, n: int, pool=None
) -> EvalOutcome:
    """
    a**n for 0 <= n <= k-1 via the node table. `pool`, if given, is any
    object with an order-preserving `map` (e.g. a ThreadPool) used for the
    per-node summands.
    """
    field = table.handle
    if not 0 <= n <= table.k - 1:
        raise ExponentOutOfRange(n, table.k)
    check_base(field, table.nodes, a)

    compute = partial(_summands, field, table, a, n)
    mapper = pool.map if pool is not None else map
    pairs = list(mapper(compute, range(table.k)))
    numerator_summands = tuple(num for num, _ in pairs)
    denominator_summands = tuple(den for _, den in pairs)

    numerator, depth = tree_reduce(field, numerator_summands)
    denominator, _ = tree_reduce(field, denominator_summands)
    _check_denominator(field, denominator, denominator_summands)

    return EvalOutcome(
        value=field.div(numerator, denominator),
        numerator_summands=numerator_summands,
        denominator_summands=denominator_summands,
        numerator=numerator,
        denominator=denominator,
        reduction_depth=depth,
        division_count=1,
    )


def eval_shifted(
    table: NodeTable, alpha: FieldElement, beta: FieldElement, a: FieldElement
) -> FieldElement:
    """
    a**(k-1) on the moved nodes Q_j = alpha + beta * P_j, reusing the
    table's C_j unchanged. Scaling multiplies every C_j by the same
    beta**-(k-1), which cancels in the ratio; shifting leaves them as is.
    """
    field = table.handle
    if field.is_zero(beta):
        raise ZeroScale()
    moved = [field.add(alpha, field.mul(beta, p)) for p in table.nodes]
    check_base(field, moved, a)

    numerator_summands: List = []
    denominator_summands: List = []
    for q, c in zip(moved, table.coeffs):
        weight = field.mul(c, field.inverse(field.sub(q, a)))
        numerator_summands.append(
            field.mul(field.pow(q, table.k - 1), weight)
        )
        denominator_summands.append(weight)

    numerator, _ = tree_reduce(field, numerator_summands)
    denominator, _ = tree_reduce(field, denominator_summands)
    _check_denominator(field, denominator, denominator_summands)
    return field.div(numerator, denominator)


def binexp_multiplications(n: int) -> int:
    """Multiplications (squarings included) of square-and-multiply for n."""
    assert n >= 1, f"binexp count needs n >= 1, got {n}"
    return (n.bit_length() - 1) + bin(n).count("1") - 1


def cost_report(
    k: int,
    n: int,
    add_cost=1,
    mul_cost=1,
    div_cost=1,
) -> CostReport:
    """
    Modeled operation counts of the three-step evaluation next to those of
    square-and-multiply. Makes no claim about which is faster.
    """
    if k < 2:
        raise ValueError(f"cost_report needs k >= 2, got {k}")
    if not 1 <= n <= k - 1:
        raise ExponentOutOfRange(n, k)
    add_cost, mul_cost, div_cost = (
        Fraction(add_cost),
        Fraction(mul_cost),
        Fraction(div_cost),
    )
    for name, cost in (
        ("add_cost", add_cost),
        ("mul_cost", mul_cost),
        ("div_cost", div_cost),
    ):
        if cost <= 0:
            raise ValueError(f"{name} must be positive, got {cost}")

    depth = ceil_log2(k)
    local_ops = 4
    return CostReport(
        k=k,
        n=n,
        vexp_local_ops=local_ops,
        vexp_total_local_ops=local_ops * k,
        vexp_reduction_depth=depth,
        vexp_reduction_adds=2 * (k - 1),
        vexp_divisions=1,
        binexp_squarings=n.bit_length() - 1,
        binexp_multiplications=binexp_multiplications(n),
        add_cost=add_cost,
        mul_cost=mul_cost,
        div_cost=div_cost,
        vexp_critical_path_cost=(add_cost + 2 * mul_cost + div_cost)
        + depth * add_cost
        + div_cost,
        binexp_cost=binexp_multiplications(n) * mul_cost,
    )


class Evaluator:
    """
    Binds a node table and an optional worker pool.

    ```
    evaluator = Evaluator(table)
    evaluator.eval(a, n).value
    ```
    """

    def __init__(self, table: NodeTable, pool=None):
        self.table = table
        self.pool = pool

    def eval(self, a: FieldElement, n: Optional[int] = None) -> EvalOutcome:
        n = self.table.k - 1 if n is None else n
        return eval_power(self.table, a, n, pool=self.pool)

    def eval_shifted(self, alpha, beta, a) -> FieldElement:
        return eval_shifted(self.table, alpha, beta, a)

    def cost(self, n: Optional[int] = None, **costs) -> CostReport:
        n = self.table.k - 1 if n is None else n
        return cost_report(self.table.k, n, **costs)
