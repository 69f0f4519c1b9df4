"""
Copyright (c) Facebook, Inc. and its affiliates.

This source code is licensed under the MIT license found in the
LICENSE file in the root directory of this source tree.
"""

import random
from pathlib import Path

import pytest

from vexp.common.utils import setup_imports
from vexp.fields import FieldDescriptor, make_field
from vexp.tables import build_node_table

setup_imports()

CONFIGS_DIR = Path(__file__).resolve().parents[1] / "configs"

# Z_7 table on nodes [1, 2, 3]
Z7_TABLE_BYTES = (
    b"vexp-table v1\n"
    b"field prime 7\n"
    b"k 3\n"
    b"node 1\nnode 2\nnode 3\n"
    b"coeff 4\ncoeff 6\ncoeff 4\n"
)


@pytest.fixture
def z7():
    return make_field(FieldDescriptor.prime(7))


@pytest.fixture
def rational():
    return make_field(FieldDescriptor.rational())


@pytest.fixture
def complex_field():
    return make_field(FieldDescriptor.complex())


@pytest.fixture
def table_z7(z7):
    return build_node_table(z7, [1, 2, 3])


@pytest.fixture
def configs_dir():
    return CONFIGS_DIR


@pytest.fixture
def z7_table_bytes():
    return Z7_TABLE_BYTES


@pytest.fixture
def rng():
    return random.Random(1234)
