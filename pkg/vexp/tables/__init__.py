# Copyright (c) Facebook, Inc. and its affiliates.
#
# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

__all__ = [
    "NodeTable",
    "build_node_table",
    "validate_table",
    "range_nodes",
    "random_nodes",
    "random_base",
    "vandermonde_det",
    "vandermonde_matrix",
    "brute_force_det",
    "cofactor_column_k",
    "serialize_table",
    "deserialize_table",
    "table_checksum",
    "save_table",
    "load_table",
]

from .determinants import (
    brute_force_det,
    cofactor_column_k,
    vandermonde_det,
    vandermonde_matrix,
)
from .node_table import (
    NodeTable,
    build_node_table,
    random_base,
    random_nodes,
    range_nodes,
    validate_table,
)
from .serialization import (
    deserialize_table,
    load_table,
    save_table,
    serialize_table,
    table_checksum,
)
