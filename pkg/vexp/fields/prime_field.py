"""
Copyright (c) Facebook, Inc. and its affiliates.

This source code is licensed under the MIT license found in the
LICENSE file in the root directory of this source tree.
"""

from vexp.common.exceptions import (
    CompositeModulus,
    DivisionByZero,
    ModulusOutOfRange,
)
from vexp.common.registry import registry
from vexp.fields.base import Field, FieldDescriptor
from vexp.fields.primality import is_prime

MAX_MODULUS = 2**62


@registry.register_field("prime")
class PrimeField(Field):
    """Z_p for a prime 3 <= p < 2**62. Elements are ints in [0, p)."""

    def __init__(self, descriptor: FieldDescriptor):
        super().__init__(descriptor)
        p = descriptor.modulus
        if p is None or not 3 <= p < MAX_MODULUS:
            raise ModulusOutOfRange(p)
        if not is_prime(p):
            raise CompositeModulus(p)
        self.p = p

    @property
    def characteristic(self) -> int:
        return self.p

    @property
    def order(self) -> int:
        return self.p

    def from_integer(self, m: int) -> int:
        return m % self.p

    def add(self, x, y):
        return (x + y) % self.p

    def sub(self, x, y):
        return (x - y) % self.p

    def mul(self, x, y):
        return (x * y) % self.p

    def neg(self, x):
        return (-x) % self.p

    def inverse(self, x):
        if x % self.p == 0:
            raise DivisionByZero(f"0 has no inverse in Z_{self.p}")
        return pow(x, -1, self.p)

    def encode(self, x) -> str:
        return str(x % self.p)

    def decode(self, text: str) -> int:
        return self.from_integer(int(text.strip()))

    def random_element(self, rng) -> int:
        return rng.randrange(self.p)

    def pow(self, a, n: int) -> int:
        if n < 0:
            raise ValueError(f"Exponent must be non-negative, got {n}")
        return pow(a, n, self.p)
