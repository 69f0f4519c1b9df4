"""
Copyright (c) Facebook, Inc. and its affiliates.

This source code is licensed under the MIT license found in the
LICENSE file in the root directory of this source tree.
"""

from fractions import Fraction

from vexp.common.exceptions import DivisionByZero
from vexp.common.registry import registry
from vexp.fields.base import Field


@registry.register_field("rational")
class RationalField(Field):
    """Q with exact `Fraction` arithmetic."""

    # numerator/denominator bound for random_element
    RANDOM_BOUND = 1000

    @property
    def characteristic(self) -> int:
        return 0

    def from_integer(self, m: int) -> Fraction:
        return Fraction(m)

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
            raise DivisionByZero("0 has no inverse in Q")
        return 1 / Fraction(x)

    def encode(self, x) -> str:
        # str(Fraction) gives "n" for integers and "n/d" otherwise
        return str(Fraction(x))

    def decode(self, text: str) -> Fraction:
        text = text.strip()
        num, sep, den = text.partition("/")
        if sep and int(den) == 0:
            raise DivisionByZero(f"Zero denominator in '{text}'")
        return Fraction(int(num), int(den)) if sep else Fraction(int(num))

    def random_element(self, rng) -> Fraction:
        return Fraction(
            rng.randint(-self.RANDOM_BOUND, self.RANDOM_BOUND),
            rng.randint(1, self.RANDOM_BOUND // 10),
        )
