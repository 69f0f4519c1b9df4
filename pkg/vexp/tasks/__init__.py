# Copyright (c) Facebook, Inc. and its affiliates.
#
# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

__all__ = [
    "PrecomputeTask",
    "EvalTask",
    "VerifyTask",
    "BenchTask",
    "FormsTask",
]

from .task import BenchTask, EvalTask, FormsTask, PrecomputeTask, VerifyTask
