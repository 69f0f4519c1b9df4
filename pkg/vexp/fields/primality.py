"""
Copyright (c) Facebook, Inc. and its affiliates.

This source code is licensed under the MIT license found in the
LICENSE file in the root directory of this source tree.
"""

from typing import Dict

from sympy import factorint
from sympy.ntheory.primetest import mr

# Deterministic for every n < 3.3 * 10**24, which covers all moduli we accept.
MILLER_RABIN_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin over a fixed witness set, for n < 2**64."""
    if n < 2:
        return False
    for p in MILLER_RABIN_WITNESSES:
        if n % p == 0:
            return n == p
    return mr(n, MILLER_RABIN_WITNESSES)


def factorize(n: int) -> Dict[int, int]:
    """Prime factorization {prime: exponent} of a positive integer."""
    assert n >= 1, f"Cannot factor {n}"
    return {int(p): int(e) for p, e in factorint(n).items()}
