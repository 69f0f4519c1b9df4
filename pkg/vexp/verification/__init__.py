# Copyright (c) Facebook, Inc. and its affiliates.
#
# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

__all__ = [
    "appendix_determinant_check",
    "laplace_zero_check",
    "zero_determinant_check",
    "run_property_suite",
    "VerifyReport",
    "CheckResult",
    "DEFAULT_SUITE_CONFIG",
]

from .checks import (
    appendix_determinant_check,
    laplace_zero_check,
    zero_determinant_check,
)
from .suite import (
    DEFAULT_SUITE_CONFIG,
    CheckResult,
    VerifyReport,
    run_property_suite,
)
