"""
Copyright (c) Facebook, Inc. and its affiliates.

This source code is licensed under the MIT license found in the
LICENSE file in the root directory of this source tree.
"""

import logging
from dataclasses import dataclass
from functools import cached_property
from typing import Sequence, Tuple

from vexp.common.exceptions import (
    DuplicateNodes,
    FieldTooSmall,
    InvariantViolation,
    NodeGenerationExhausted,
    TooFewNodes,
)
from vexp.fields.base import Field, FieldDescriptor, FieldElement, make_field

# Attempts per node before random node generation gives up.
MAX_NODE_ATTEMPTS = 1000


@dataclass(frozen=True)
class NodeTable:
    r"""Precomputed, base-independent data for the identity

        a**n = sum_j P_j**n C_j / (P_j - a)  /  sum_j C_j / (P_j - a)

    Args:
        field (FieldDescriptor): Field the values live in.
        k (int): Number of nodes.
        nodes (tuple): P_1..P_k, pairwise distinct.
        coeffs (tuple): C_j = 1 / prod_{i != j} (P_i - P_j).
        powers (tuple): powers[j][n] = P_j**n for 0 <= n <= k-1.
    """

    field: FieldDescriptor
    k: int
    nodes: Tuple[FieldElement, ...]
    coeffs: Tuple[FieldElement, ...]
    powers: Tuple[Tuple[FieldElement, ...], ...]

    @cached_property
    def handle(self) -> Field:
        return make_field(self.field)

    def with_coeffs(self, coeffs: Sequence) -> "NodeTable":
        """Copy with replaced coefficients and NO validation."""
        return NodeTable(
            field=self.field,
            k=self.k,
            nodes=self.nodes,
            coeffs=tuple(coeffs),
            powers=self.powers,
        )


def find_duplicate(field: Field, nodes: Sequence):
    """First colliding pair (i, j), 1-based, or None."""
    for j in range(len(nodes)):
        for i in range(j):
            if field.equals(nodes[i], nodes[j]):
                return i + 1, j + 1
    return None


def check_nodes(field: Field, nodes: Sequence) -> None:
    k = len(nodes)
    if k < 2:
        raise TooFewNodes(k)
    if field.order is not None and field.order <= k:
        raise FieldTooSmall(
            f"Z_{field.order} cannot hold {k} distinct nodes and a base; "
            f"need p > k"
        )
    duplicate = find_duplicate(field, nodes)
    if duplicate is not None:
        i, j = duplicate
        raise DuplicateNodes(i, j, field.encode(nodes[i - 1]))


def node_coefficients(field: Field, nodes: Sequence) -> Tuple:
    """C_j = 1 / prod_{i != j} (P_i - P_j)."""
    coeffs = []
    for j, pj in enumerate(nodes):
        denom = field.prod(
            field.sub(pi, pj) for i, pi in enumerate(nodes) if i != j
        )
        coeffs.append(field.inverse(denom))
    return tuple(coeffs)


def power_grid(field: Field, nodes: Sequence) -> Tuple:
    k = len(nodes)
    grid = []
    for p in nodes:
        row = [field.one]
        for _ in range(k - 1):
            row.append(field.mul(row[-1], p))
        grid.append(tuple(row))
    return tuple(grid)


def build_node_table(field: Field, nodes: Sequence) -> NodeTable:
    nodes = tuple(nodes)
    check_nodes(field, nodes)
    table = NodeTable(
        field=field.descriptor,
        k=len(nodes),
        nodes=nodes,
        coeffs=node_coefficients(field, nodes),
        powers=power_grid(field, nodes),
    )
    logging.debug(f"Built node table over {field.descriptor} with k={table.k}")
    return table


def coefficient_residuals(table: NodeTable):
    """Per node, C_j * prod_{i != j} (P_i - P_j) - 1. All zero when valid."""
    field = table.handle
    residuals = []
    for j, pj in enumerate(table.nodes):
        denom = field.prod(
            field.sub(pi, pj) for i, pi in enumerate(table.nodes) if i != j
        )
        residuals.append(
            field.sub(field.mul(table.coeffs[j], denom), field.one)
        )
    return residuals


def validate_table(table: NodeTable) -> None:
    """Re-verify every table invariant; raise InvariantViolation on failure."""
    field = table.handle
    if table.k != len(table.nodes) or table.k != len(table.coeffs):
        raise InvariantViolation(
            f"k={table.k} but {len(table.nodes)} nodes and "
            f"{len(table.coeffs)} coefficients"
        )
    try:
        check_nodes(field, table.nodes)
    except (DuplicateNodes, TooFewNodes, FieldTooSmall) as e:
        raise InvariantViolation(str(e)) from e

    for j, residual in enumerate(coefficient_residuals(table)):
        if not field.is_zero(residual):
            raise InvariantViolation(
                f"Coefficient C_{j + 1}={field.encode(table.coeffs[j])} "
                f"does not satisfy C_j * prod(P_i - P_j) = 1"
            )
    total = field.sum(table.coeffs)
    if not _is_small(field, total, table.coeffs):
        raise InvariantViolation(
            f"Coefficients sum to {field.encode(total)}, expected 0"
        )
    for j, row in enumerate(table.powers):
        if not field.equals(row[0], field.one):
            raise InvariantViolation(f"powers[{j + 1}][0] != 1")


def _is_small(field: Field, total, terms) -> bool:
    # Sums of many terms are compared against the largest term on the
    # complex backend.
    if field.is_exact:
        return field.is_zero(total)
    scale = max([1.0] + [abs(t) for t in terms])
    return abs(total) <= field.tolerance * scale


def range_nodes(field: Field, start: int, stop: int) -> Tuple:
    """Nodes start, start+1, ..., stop (inclusive)."""
    if stop < start:
        raise ValueError(f"Empty node range {start}..{stop}")
    return tuple(field.from_integer(m) for m in range(start, stop + 1))


def random_nodes(field: Field, k: int, rng, exclude: Sequence = ()) -> Tuple:
    """
    k pairwise-distinct random nodes, distinct from `exclude`. Collisions are
    rejected and redrawn, at most MAX_NODE_ATTEMPTS times per node.
    """
    nodes = []
    taken = list(exclude)
    for _ in range(k):
        for _ in range(MAX_NODE_ATTEMPTS):
            candidate = field.random_element(rng)
            if not any(field.equals(candidate, t) for t in taken):
                break
        else:
            raise NodeGenerationExhausted(
                f"Could not draw {k} distinct nodes in {field.descriptor} "
                f"after {MAX_NODE_ATTEMPTS} attempts; field too small for k"
            )
        nodes.append(candidate)
        taken.append(candidate)
    return tuple(nodes)


def random_base(field: Field, nodes: Sequence, rng) -> FieldElement:
    """A random element distinct from every node."""
    return random_nodes(field, 1, rng, exclude=nodes)[0]
