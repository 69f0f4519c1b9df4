"""
Copyright (c) Facebook, Inc. and its affiliates.

This source code is licensed under the MIT license found in the
LICENSE file in the root directory of this source tree.
"""

import cmath
import math

from vexp.common.exceptions import BadTolerance, DivisionByZero
from vexp.common.registry import registry
from vexp.fields.base import Field, FieldDescriptor


@registry.register_field("complex")
class ComplexField(Field):
    """
    C in double precision. Equality is relative:
    |x - y| <= tolerance * max(1, |x|, |y|).
    """

    def __init__(self, descriptor: FieldDescriptor):
        super().__init__(descriptor)
        tol = descriptor.tolerance
        if tol is None or not 0.0 < tol < 1.0:
            raise BadTolerance(tol)
        self.tolerance = tol

    @property
    def is_exact(self) -> bool:
        return False

    @property
    def characteristic(self) -> int:
        return 0

    def from_integer(self, m: int) -> complex:
        return complex(m)

    def add(self, x, y):
        return x + y

    def sub(self, x, y):
        return x - y

    def mul(self, x, y):
        return x * y

    def neg(self, x):
        return -x

    def inverse(self, x):
        if x == 0:
            raise DivisionByZero("0 has no inverse in C")
        return 1 / x

    def magnitude(self, x) -> float:
        return abs(x)

    def equals(self, x, y) -> bool:
        return abs(x - y) <= self.tolerance * max(1.0, abs(x), abs(y))

    def encode(self, x) -> str:
        x = complex(x)
        return f"{x.real!r},{x.imag!r}"

    def decode(self, text: str) -> complex:
        re, sep, im = text.strip().partition(",")
        value = complex(float(re), float(im) if sep else 0.0)
        if not (math.isfinite(value.real) and math.isfinite(value.imag)):
            raise ValueError(f"Complex value '{text}' is not finite")
        return value

    def random_element(self, rng) -> complex:
        # uniform on the disc of radius 2
        r = 2.0 * math.sqrt(rng.random())
        return cmath.rect(r, 2.0 * math.pi * rng.random())
