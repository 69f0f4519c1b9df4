"""
Copyright (c) Facebook, Inc. and its affiliates.

This source code is licensed under the MIT license found in the
LICENSE file in the root directory of this source tree.
"""

from abc import ABC, abstractmethod
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from vexp.common.registry import registry

"""
Uniform field abstraction. A `Field` is a stateless handle that operates on
plain Python values in canonical form:

- prime:    int residue in [0, p)
- rational: `fractions.Fraction` (always reduced, positive denominator)
- complex:  builtin `complex` with finite parts

```
from vexp.fields import FieldDescriptor, make_field

field = make_field(FieldDescriptor.prime(7))
field.inverse(4)  # 2
```
"""

FieldElement = Union[int, Fraction, complex]

FIELD_KINDS = ("prime", "rational", "complex")
DEFAULT_COMPLEX_TOLERANCE = 1e-9


@dataclass(frozen=True)
class FieldDescriptor:
    kind: str
    modulus: Optional[int] = None
    tolerance: Optional[float] = None

    @classmethod
    def prime(cls, p: int) -> "FieldDescriptor":
        return cls("prime", modulus=p)

    @classmethod
    def rational(cls) -> "FieldDescriptor":
        return cls("rational")

    @classmethod
    def complex(
        cls, tolerance: float = DEFAULT_COMPLEX_TOLERANCE
    ) -> "FieldDescriptor":
        return cls("complex", tolerance=tolerance)

    @classmethod
    def parse(cls, spec: str) -> "FieldDescriptor":
        """Parse `prime:<p>`, `rational`, `complex` or `complex:<tol>`."""
        kind, _, param = spec.strip().partition(":")
        if kind == "prime":
            if not param:
                raise ValueError("prime field needs a modulus: prime:<p>")
            return cls.prime(int(param))
        if kind == "rational":
            if param:
                raise ValueError("rational field takes no parameter")
            return cls.rational()
        if kind == "complex":
            if param:
                return cls.complex(float(param))
            return cls.complex()
        raise ValueError(
            f"Unknown field '{spec}', "
            "expected one of prime:<p>, rational, complex"
        )

    def __str__(self):
        if self.kind == "prime":
            return f"prime:{self.modulus}"
        if self.kind == "complex":
            return f"complex:{self.tolerance!r}"
        return self.kind


class Field(ABC):
    """Field handle. Instances are immutable; all operations are pure."""

    def __init__(self, descriptor: FieldDescriptor):
        self.descriptor = descriptor

    @property
    def kind(self) -> str:
        return self.descriptor.kind

    @property
    def is_exact(self) -> bool:
        return True

    @property
    @abstractmethod
    def characteristic(self) -> int:
        pass

    @property
    def order(self) -> Optional[int]:
        """Number of elements, or None for infinite fields."""
        return None

    @property
    def zero(self) -> FieldElement:
        return self.from_integer(0)

    @property
    def one(self) -> FieldElement:
        return self.from_integer(1)

    @abstractmethod
    def from_integer(self, m: int) -> FieldElement:
        pass

    @abstractmethod
    def add(self, x, y):
        pass

    @abstractmethod
    def sub(self, x, y):
        pass

    @abstractmethod
    def mul(self, x, y):
        pass

    @abstractmethod
    def neg(self, x):
        pass

    @abstractmethod
    def inverse(self, x):
        pass

    def div(self, x, y):
        return self.mul(x, self.inverse(y))

    def equals(self, x, y) -> bool:
        return x == y

    def is_zero(self, x) -> bool:
        return self.equals(x, self.zero)

    @abstractmethod
    def encode(self, x) -> str:
        pass

    @abstractmethod
    def decode(self, text: str) -> FieldElement:
        pass

    @abstractmethod
    def random_element(self, rng) -> FieldElement:
        pass

    def pow(self, a, n: int) -> FieldElement:
        return pow_oracle(self, a, n)

    def sum(self, xs) -> FieldElement:
        total = self.zero
        for x in xs:
            total = self.add(total, x)
        return total

    def prod(self, xs) -> FieldElement:
        total = self.one
        for x in xs:
            total = self.mul(total, x)
        return total

    def __eq__(self, other):
        return (
            isinstance(other, Field) and self.descriptor == other.descriptor
        )

    def __hash__(self):
        return hash(self.descriptor)

    def __repr__(self):
        return f"{type(self).__name__}({self.descriptor})"


def make_field(descriptor: FieldDescriptor) -> Field:
    # backends register themselves when `vexp.fields` is imported
    field_cls = registry.get_field_class(descriptor.kind)
    return field_cls(descriptor)


def pow_oracle(field: Field, a: FieldElement, n: int) -> FieldElement:
    """
    a**n by left-to-right square-and-multiply. 0**0 is 1. Independent of the
    node-table machinery; every acceptance check compares against it.
    """
    if n < 0:
        raise ValueError(f"Exponent must be non-negative, got {n}")
    result = field.one
    for bit in bin(n)[2:]:
        result = field.mul(result, result)
        if bit == "1":
            result = field.mul(result, a)
    return result
