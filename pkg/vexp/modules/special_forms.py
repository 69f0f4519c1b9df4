"""
Copyright (c) Facebook, Inc. and its affiliates.

This source code is licensed under the MIT license found in the
LICENSE file in the root directory of this source tree.
"""

import cmath
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import List, Optional, Tuple

from vexp.common.exceptions import (
    CharacteristicTooSmall,
    NearSingularDenominator,
    NoRootsOfUnity,
    SingularInput,
)
from vexp.fields.base import Field, FieldElement, pow_oracle
from vexp.fields.primality import factorize
from vexp.modules.evaluator import check_base, tree_reduce
from vexp.tables.node_table import check_nodes, node_coefficients

"""
Specializations of the central identity:

- nodes 1..k, where (k-1)! C_j are signed binomial coefficients;
- nodes e_1..e_m (the m-th roots of unity) plus one extra node, which
  yields a**m - 1, together with the product form prod (a - e_i) and the
  partial fraction expansion of 1 / (a**m - 1).
"""

SIGN_CONVENTIONS = ("printed", "derived")


def pascal_row(n: int) -> List[int]:
    """[binom(n, 0), ..., binom(n, n)] as exact integers."""
    row = [1]
    for _ in range(n):
        row = [1] + [row[i] + row[i + 1] for i in range(len(row) - 1)] + [1]
    return row


def binomial_weights(k: int, sign: str = "printed") -> List[int]:
    """
    (k-1)! C_j for nodes 1..k, up to a global sign: (-1)**j binom(k-1, j-1)
    ("printed") or (-1)**(k-j) binom(k-1, j-1) ("derived").
    """
    assert sign in SIGN_CONVENTIONS, f"sign must be one of {SIGN_CONVENTIONS}"
    row = pascal_row(k - 1)
    weights = []
    for j in range(1, k + 1):
        exponent = j if sign == "printed" else k - j
        weights.append((-1) ** exponent * row[j - 1])
    return weights


def binomial_form_eval(
    field: Field, k: int, a: FieldElement, sign: str = "printed"
) -> FieldElement:
    """a**(k-1) from nodes 1..k with integer binomial weights."""
    if k < 2:
        raise ValueError(f"binomial form needs k >= 2, got {k}")
    p = field.characteristic
    if p != 0 and p <= k:
        raise CharacteristicTooSmall(
            f"Nodes 1..{k} are not distinct in characteristic {p}; need p > k"
        )
    nodes = [field.from_integer(j) for j in range(1, k + 1)]
    check_base(field, nodes, a)

    numerator_summands = []
    denominator_summands = []
    for j, (node, w) in enumerate(
        zip(nodes, binomial_weights(k, sign)), start=1
    ):
        term = field.mul(
            field.from_integer(w), field.inverse(field.sub(node, a))
        )
        numerator_summands.append(
            field.mul(field.from_integer(j ** (k - 1)), term)
        )
        denominator_summands.append(term)

    numerator, _ = tree_reduce(field, numerator_summands)
    denominator, _ = tree_reduce(field, denominator_summands)
    return field.div(numerator, denominator)


@lru_cache(maxsize=None)
def primitive_root(p: int) -> int:
    """Smallest generator of Z_p^*, tested against each prime factor of p-1."""
    factors = list(factorize(p - 1))
    for g in range(2, p):
        if all(pow(g, (p - 1) // q, p) != 1 for q in factors):
            return g
    raise ValueError(f"Z_{p} has no primitive root; is {p} prime?")


def roots_of_unity(field: Field, m: int) -> Tuple[FieldElement, ...]:
    """
    e_1..e_m with e_j = exp(2 pi i j / m) (complex) or g**(j (p-1)/m)
    (prime). e_m = 1 in both cases.
    """
    if m < 1:
        raise ValueError(f"Order m must be >= 1, got {m}")
    if field.kind == "complex":
        return tuple(cmath.exp(2j * math.pi * j / m) for j in range(1, m + 1))
    if field.kind == "prime":
        p = field.characteristic
        if (p - 1) % m != 0:
            raise NoRootsOfUnity(m, p)
        omega = pow(primitive_root(p), (p - 1) // m, p)
        return tuple(pow(omega, j, p) for j in range(1, m + 1))
    raise ValueError(
        f"Roots of unity of order {m} are only provided for prime and "
        f"complex fields, not {field.kind}"
    )


def roots_nodes(
    field: Field, m: int, extra: Optional[FieldElement] = None
) -> Tuple[FieldElement, ...]:
    """The m-th roots of unity, optionally followed by one extra node."""
    roots = roots_of_unity(field, m)
    return roots if extra is None else roots + (extra,)


@dataclass(frozen=True)
class RootsOfUnityContext:
    """
    Roots e_1..e_m plus `extra_node` (P_k, k = m + 1), with the node
    coefficients of that full node set. `c_k` is the coefficient of the
    extra node; it equals (-1)**k when the extra node is 0.
    """

    field: Field
    m: int
    roots: Tuple[FieldElement, ...]
    extra_node: FieldElement
    coeffs: Tuple[FieldElement, ...]
    c_k: FieldElement

    @property
    def k(self) -> int:
        return self.m + 1


def make_roots_context(
    field: Field, m: int, extra_node: Optional[FieldElement] = None
) -> RootsOfUnityContext:
    extra_node = field.zero if extra_node is None else extra_node
    roots = roots_of_unity(field, m)
    nodes = roots + (extra_node,)
    check_nodes(field, nodes)
    coeffs = node_coefficients(field, nodes)
    ctx = RootsOfUnityContext(
        field=field,
        m=m,
        roots=roots,
        extra_node=extra_node,
        coeffs=coeffs[:m],
        c_k=coeffs[m],
    )
    if field.is_zero(extra_node):
        sign = field.one if ctx.k % 2 == 0 else field.neg(field.one)
        assert field.equals(
            ctx.c_k, sign
        ), f"C_k = {field.encode(ctx.c_k)} but (-1)**k expected"
    return ctx


def roots_unity_eval(
    ctx: RootsOfUnityContext, a: FieldElement
) -> FieldElement:
    """
    a**m - 1. With extra node 0 this is (-1)**k / sum_j e_j C_j / (e_j - a);
    otherwise (x**m - 1) C_k / (x - a) / sum_j C_j / (P_j - a) over all k
    nodes, x being the extra node.
    """
    field = ctx.field
    check_base(field, ctx.roots + (ctx.extra_node,), a)

    weights = [
        field.mul(c, field.inverse(field.sub(e, a)))
        for e, c in zip(ctx.roots, ctx.coeffs)
    ]
    if field.is_zero(ctx.extra_node):
        summands = [field.mul(e, w) for e, w in zip(ctx.roots, weights)]
        numerator = field.one if ctx.k % 2 == 0 else field.neg(field.one)
    else:
        x = ctx.extra_node
        extra_weight = field.mul(ctx.c_k, field.inverse(field.sub(x, a)))
        summands = weights + [extra_weight]
        numerator = field.mul(
            field.sub(pow_oracle(field, x, ctx.m), field.one), extra_weight
        )

    denominator, _ = tree_reduce(field, summands)
    _guard(field, denominator, summands)
    return field.div(numerator, denominator)


def partial_fraction_eval(
    ctx: RootsOfUnityContext, a: FieldElement
) -> FieldElement:
    """1 / (a**m - 1) = sum_i 1 / ((a - e_i) prod_{j != i} (e_i - e_j))."""
    field = ctx.field
    if field.equals(pow_oracle(field, a, ctx.m), field.one):
        raise SingularInput(
            f"a = {field.encode(a)} satisfies a**{ctx.m} = 1; "
            "1 / (a**m - 1) is undefined"
        )
    summands = []
    for i, e in enumerate(ctx.roots):
        spread = field.prod(
            field.sub(e, other)
            for j, other in enumerate(ctx.roots)
            if j != i
        )
        summands.append(field.inverse(field.mul(field.sub(a, e), spread)))
    total, _ = tree_reduce(field, summands)
    return total


def product_form_eval(
    ctx: RootsOfUnityContext, a: FieldElement
) -> FieldElement:
    """prod_i (a - e_i), which equals a**m - 1."""
    field = ctx.field
    return field.prod(field.sub(a, e) for e in ctx.roots)


def _guard(field: Field, denominator, summands) -> None:
    if field.is_exact:
        if field.is_zero(denominator):
            raise SingularInput("Denominator sum vanished")
        return
    scale = max(abs(s) for s in summands)
    if abs(denominator) < field.tolerance * scale:
        raise NearSingularDenominator(
            f"|denominator| = {abs(denominator):.3e} is below "
            f"{field.tolerance:g} * {scale:.3e}"
        )
