# Copyright (c) Facebook, Inc. and its affiliates.
#
# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

__all__ = [
    "Field",
    "FieldDescriptor",
    "FieldElement",
    "make_field",
    "pow_oracle",
    "PrimeField",
    "RationalField",
    "ComplexField",
    "is_prime",
]

from .base import Field, FieldDescriptor, FieldElement, make_field, pow_oracle
from .complex_field import ComplexField
from .primality import is_prime
from .prime_field import PrimeField
from .rational_field import RationalField
