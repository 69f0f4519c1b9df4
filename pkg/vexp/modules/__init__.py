# Copyright (c) Facebook, Inc. and its affiliates.
#
# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

__all__ = [
    "EvalOutcome",
    "CostReport",
    "Evaluator",
    "eval_power",
    "eval_shifted",
    "tree_reduce",
    "cost_report",
    "RootsOfUnityContext",
    "binomial_form_eval",
    "make_roots_context",
    "roots_unity_eval",
    "partial_fraction_eval",
    "product_form_eval",
]

from .evaluator import (
    CostReport,
    EvalOutcome,
    Evaluator,
    cost_report,
    eval_power,
    eval_shifted,
    tree_reduce,
)
from .special_forms import (
    RootsOfUnityContext,
    binomial_form_eval,
    make_roots_context,
    partial_fraction_eval,
    product_form_eval,
    roots_unity_eval,
)
