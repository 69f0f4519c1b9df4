"""
Copyright (c) Facebook, Inc. and its affiliates.

This source code is licensed under the MIT license found in the
LICENSE file in the root directory of this source tree.
"""

from typing import List, Sequence

from vexp.fields.base import Field, FieldElement

Matrix = List[List[FieldElement]]

# Up to this size determinants are expanded along the first row.
LAPLACE_MAX_SIZE = 4


def vandermonde_matrix(field: Field, nodes: Sequence) -> Matrix:
    """Row j is [P_j**0, P_j**1, ..., P_j**(k-1)]."""
    k = len(nodes)
    rows = []
    for p in nodes:
        row = [field.one]
        for _ in range(k - 1):
            row.append(field.mul(row[-1], p))
        rows.append(row)
    return rows


def vandermonde_det(field: Field, nodes: Sequence) -> FieldElement:
    """Product formula prod_{i<j} (P_j - P_i)."""
    assert len(nodes) >= 1, "vandermonde_det needs at least one node"
    det = field.one
    for j in range(len(nodes)):
        for i in range(j):
            det = field.mul(det, field.sub(nodes[j], nodes[i]))
    return det


def minor(matrix: Matrix, row: int, col: int) -> Matrix:
    """Delete `row` and `col` (0-based)."""
    return [
        [x for c, x in enumerate(r) if c != col]
        for i, r in enumerate(matrix)
        if i != row
    ]


def laplace_det(field: Field, matrix: Matrix) -> FieldElement:
    n = len(matrix)
    if n == 0:
        return field.one
    if n == 1:
        return matrix[0][0]
    if n == 2:
        return field.sub(
            field.mul(matrix[0][0], matrix[1][1]),
            field.mul(matrix[0][1], matrix[1][0]),
        )
    det = field.zero
    for col in range(n):
        term = field.mul(
            matrix[0][col], laplace_det(field, minor(matrix, 0, col))
        )
        det = field.sub(det, term) if col % 2 else field.add(det, term)
    return det


def bareiss_det(field: Field, matrix: Matrix) -> FieldElement:
    """
    Fraction-free (Bareiss) elimination: step k divides by the pivot of
    step k-1, a division that is exact for integer-valued input. Row swaps
    pick the largest-magnitude pivot on the complex backend and the first
    non-zero pivot otherwise.
    """
    a = [list(row) for row in matrix]
    n = len(a)
    if n == 0:
        return field.one
    assert all(len(row) == n for row in a), "matrix must be square"

    sign = 1
    prev = field.one
    for k in range(n - 1):
        pivot_row = _choose_pivot(field, a, k)
        if pivot_row is None:
            return field.zero
        if pivot_row != k:
            a[k], a[pivot_row] = a[pivot_row], a[k]
            sign = -sign
        inv_prev = field.inverse(prev)
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = field.sub(
                    field.mul(a[i][j], a[k][k]),
                    field.mul(a[i][k], a[k][j]),
                )
                a[i][j] = field.mul(num, inv_prev)
        prev = a[k][k]

    det = a[n - 1][n - 1]
    return det if sign > 0 else field.neg(det)


def _choose_pivot(field: Field, a: Matrix, k: int):
    candidates = [i for i in range(k, len(a)) if not field.is_zero(a[i][k])]
    if not candidates:
        return None
    if field.is_exact:
        return candidates[0]
    return max(candidates, key=lambda i: abs(a[i][k]))


def brute_force_det(field: Field, matrix: Matrix) -> FieldElement:
    """
    Determinant computed without the Vandermonde product formula: cofactor
    expansion for small matrices, Bareiss elimination above that.
    """
    if len(matrix) <= LAPLACE_MAX_SIZE:
        return laplace_det(field, matrix)
    return bareiss_det(field, matrix)


def cofactor_column_k(field: Field, nodes: Sequence, j: int) -> FieldElement:
    """
    Signed cofactor C_{j,k} = (-1)**(j+k) * M_{j,k} of the last column of
    V(P), with the minor evaluated by brute force. `j` is 1-based.
    """
    k = len(nodes)
    assert 1 <= j <= k, f"cofactor index {j} outside [1, {k}]"
    m = brute_force_det(
        field, minor(vandermonde_matrix(field, nodes), j - 1, k - 1)
    )
    return m if (j + k) % 2 == 0 else field.neg(m)
