"""
Copyright (c) Facebook, Inc. and its affiliates.

This source code is licensed under the MIT license found in the
LICENSE file in the root directory of this source tree.
"""

"""
Errors raised by the vexp library. Every error derives from `VexpError` and
from the closest builtin exception, so callers may catch either, e.g.

```
try:
    table = build_node_table(field, nodes)
except ValueError:
    ...
```
"""


class VexpError(Exception):
    pass


# Fields
class CompositeModulus(VexpError, ValueError):
    def __init__(self, modulus):
        self.modulus = modulus
        super().__init__(f"Modulus {modulus} is not prime")


class ModulusOutOfRange(VexpError, ValueError):
    def __init__(self, modulus):
        self.modulus = modulus
        super().__init__(
            f"Prime modulus must satisfy 3 <= p < 2**62, got {modulus}"
        )


class BadTolerance(VexpError, ValueError):
    def __init__(self, tolerance):
        self.tolerance = tolerance
        super().__init__(
            f"Complex equality tolerance must lie in (0, 1), got {tolerance}"
        )


class DivisionByZero(VexpError, ZeroDivisionError):
    pass


# Node tables
class DuplicateNodes(VexpError, ValueError):
    def __init__(self, i, j, value):
        # 1-based node indices
        self.pair = (i, j)
        self.value = value
        super().__init__(
            f"Nodes {i} and {j} coincide (value {value}); "
            "nodes must be pairwise distinct"
        )


class TooFewNodes(VexpError, ValueError):
    def __init__(self, k):
        self.k = k
        super().__init__(f"At least 2 nodes are required, got {k}")


class FieldTooSmall(VexpError, ValueError):
    pass


class NodeGenerationExhausted(VexpError, RuntimeError):
    pass


class MalformedTableFile(VexpError, ValueError):
    def __init__(self, message, line=None, field=None):
        self.line = line
        self.field = field
        where = []
        if line is not None:
            where.append(f"line {line}")
        if field is not None:
            where.append(f"field '{field}'")
        prefix = f"{', '.join(where)}: " if where else ""
        super().__init__(f"Malformed table file: {prefix}{message}")


class InvariantViolation(VexpError, ValueError):
    pass


# Evaluation
class BaseCollidesWithNode(VexpError, ValueError):
    def __init__(self, index, base):
        # 1-based node index
        self.index = index
        self.base = base
        super().__init__(f"Base {base} collides with node j={index}")


class ExponentOutOfRange(VexpError, ValueError):
    def __init__(self, n, k):
        self.n = n
        self.k = k
        super().__init__(
            f"Exponent {n} outside [0, {k - 1}] for a table with k={k}"
        )


class NearSingularDenominator(VexpError, ArithmeticError):
    pass


class ZeroScale(VexpError, ValueError):
    def __init__(self):
        super().__init__("Scale beta must be non-zero")


# Special forms
class CharacteristicTooSmall(VexpError, ValueError):
    pass


class NoRootsOfUnity(VexpError, ValueError):
    def __init__(self, m, modulus):
        self.m = m
        self.modulus = modulus
        super().__init__(
            f"Z_{modulus} has no {m}-th roots of unity: "
            f"{m} does not divide {modulus - 1}"
        )


class SingularInput(VexpError, ArithmeticError):
    pass
