"""
Copyright (c) Facebook, Inc. and its affiliates.

This source code is licensed under the MIT license found in the
LICENSE file in the root directory of this source tree.
"""

from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from vexp.fields.base import Field, FieldElement
from vexp.modules.evaluator import check_base
from vexp.tables.determinants import (
    brute_force_det,
    cofactor_column_k,
    vandermonde_det,
    vandermonde_matrix,
)
from vexp.tables.node_table import NodeTable, check_nodes, node_coefficients

"""
Independent oracles for the determinant identities behind the central
identity. They build the relevant matrices explicitly and evaluate them by
brute force, so they never share code paths with the evaluator.
"""

# Brute-force determinants are only run up to this many nodes.
BRUTE_FORCE_MAX_K = 6


@dataclass(frozen=True)
class CheckOutcome:
    passed: bool
    failures: Tuple[str, ...] = ()

    def __bool__(self):
        return self.passed


@dataclass(frozen=True)
class LaplaceResult:
    n: int
    residual: FieldElement
    passed: bool


def laplace_zero_check(table: NodeTable) -> List[LaplaceResult]:
    """
    sum_j P_j**n C_j for every 0 <= n <= k-2. Each sum is the determinant of
    a Vandermonde matrix with two equal columns, so it must vanish.
    """
    field = table.handle
    results = []
    for n in range(table.k - 1):
        residual = field.sum(
            field.mul(row[n], c) for row, c in zip(table.powers, table.coeffs)
        )
        results.append(LaplaceResult(n, residual, field.is_zero(residual)))
    return results


def appendix_matrix(field: Field, nodes: Sequence, a: FieldElement):
    """V(P) with its last column replaced by 1 / (P_j - a)."""
    matrix = vandermonde_matrix(field, nodes)
    for row, p in zip(matrix, nodes):
        row[-1] = field.inverse(field.sub(p, a))
    return matrix


def appendix_determinant_check(
    field: Field, nodes: Sequence, a: FieldElement
) -> CheckOutcome:
    """
    |X| = (-1)**(k-1) c |V(P)| with c = prod_j (P_j - a)**-1, |X| != 0, and
    |X| = sum_j C_{j,k} / (P_j - a) via the last-column cofactors of V(P).
    """
    assert field.is_exact, "determinant identities are checked exactly"
    nodes = tuple(nodes)
    check_nodes(field, nodes)
    check_base(field, nodes, a)
    k = len(nodes)
    assert k <= BRUTE_FORCE_MAX_K, (
        f"brute force capped at k={BRUTE_FORCE_MAX_K}"
    )

    det_x = brute_force_det(field, appendix_matrix(field, nodes, a))
    c = field.inverse(field.prod(field.sub(p, a) for p in nodes))
    closed_form = field.mul(c, vandermonde_det(field, nodes))
    if k % 2 == 0:
        closed_form = field.neg(closed_form)
    expansion = field.sum(
        field.mul(
            cofactor_column_k(field, nodes, j),
            field.inverse(field.sub(p, a)),
        )
        for j, p in enumerate(nodes, start=1)
    )

    failures = []
    if not field.equals(det_x, closed_form):
        failures.append(
            f"|X| = {field.encode(det_x)} but (-1)**(k-1) c |V| = "
            f"{field.encode(closed_form)}"
        )
    if field.is_zero(det_x):
        failures.append("|X| vanished")
    if not field.equals(det_x, expansion):
        failures.append(
            f"|X| = {field.encode(det_x)} but cofactor expansion gives "
            f"{field.encode(expansion)}"
        )
    return CheckOutcome(not failures, tuple(failures))


def geometric_column(field: Field, nodes: Sequence, a: FieldElement):
    """sum_{i=1}^{k-1} P_j**(k-1-i) a**(i-1), per node."""
    k = len(nodes)
    column = []
    for p in nodes:
        column.append(
            field.sum(
                field.mul(field.pow(p, k - 1 - i), field.pow(a, i - 1))
                for i in range(1, k)
            )
        )
    return column


def closed_form_column(field: Field, nodes: Sequence, a: FieldElement):
    """(P_j**(k-1) - a**(k-1)) / (P_j - a), per node."""
    k = len(nodes)
    a_top = field.pow(a, k - 1)
    return [
        field.div(field.sub(field.pow(p, k - 1), a_top), field.sub(p, a))
        for p in nodes
    ]


def zero_determinant_check(
    field: Field, nodes: Sequence, a: FieldElement
) -> CheckOutcome:
    """
    The Vandermonde matrix with its last column replaced by the geometric
    sums of columns 0..k-2 has determinant zero; the geometric sums agree
    with their closed form.
    """
    assert field.is_exact, "determinant identities are checked exactly"
    nodes = tuple(nodes)
    check_nodes(field, nodes)
    check_base(field, nodes, a)
    assert len(nodes) <= BRUTE_FORCE_MAX_K, (
        f"brute force capped at k={BRUTE_FORCE_MAX_K}"
    )

    geometric = geometric_column(field, nodes, a)
    closed = closed_form_column(field, nodes, a)
    failures = [
        f"row {j}: geometric {field.encode(g)} != closed form "
        f"{field.encode(c)}"
        for j, (g, c) in enumerate(zip(geometric, closed), start=1)
        if not field.equals(g, c)
    ]

    matrix = vandermonde_matrix(field, nodes)
    for row, value in zip(matrix, geometric):
        row[-1] = value
    det = brute_force_det(field, matrix)
    if not field.is_zero(det):
        failures.append(f"det = {field.encode(det)}, expected 0")
    return CheckOutcome(not failures, tuple(failures))


def cofactor_ratios(
    field: Field, nodes: Sequence, coeffs: Optional[Sequence] = None
) -> List[FieldElement]:
    """
    C_{j,k} / C_j per node, constant and equal to (-1)**(k-1) |V(P)|. The
    C_j are recomputed from the nodes unless given.
    """
    if coeffs is None:
        coeffs = node_coefficients(field, nodes)
    return [
        field.div(cofactor_column_k(field, nodes, j), c)
        for j, c in enumerate(coeffs, start=1)
    ]
