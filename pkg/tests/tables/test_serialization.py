"""
Copyright (c) Facebook, Inc. and its affiliates.

This source code is licensed under the MIT license found in the
LICENSE file in the root directory of this source tree.
"""

import hashlib
import random

import pytest

from vexp.common.exceptions import InvariantViolation, MalformedTableFile
from vexp.fields import FieldDescriptor, make_field
from vexp.modules.special_forms import roots_nodes
from vexp.tables import (
    build_node_table,
    deserialize_table,
    load_table,
    random_nodes,
    save_table,
    serialize_table,
    table_checksum,
)


def corrupt(data: bytes, old: bytes, new: bytes) -> bytes:
    assert old in data
    return data.replace(old, new, 1)


class TestSerialize:
    def test_z7_layout(self, table_z7, z7_table_bytes):
        assert serialize_table(table_z7) == z7_table_bytes

    def test_rational_and_complex_headers(self, rational, complex_field):
        table = build_node_table(rational, [0, 1])
        assert b"field rational\n" in serialize_table(table)
        table = build_node_table(
            complex_field, roots_nodes(complex_field, 3, complex_field.zero)
        )
        assert b"field complex 1e-09\n" in serialize_table(table)

    def test_checksum(self, table_z7, z7_table_bytes):
        assert (
            table_checksum(table_z7)
            == hashlib.sha256(z7_table_bytes).hexdigest()
        )


class TestRoundTrip:
    def test_z7(self, table_z7):
        assert deserialize_table(serialize_table(table_z7)) == table_z7

    @pytest.mark.parametrize(
        "descriptor",
        [
            FieldDescriptor.prime(2305843009213693951),
            FieldDescriptor.rational(),
            FieldDescriptor.complex(1e-7),
        ],
    )
    def test_random_tables(self, descriptor):
        field = make_field(descriptor)
        rng = random.Random(descriptor.kind)
        for _ in range(10):
            table = build_node_table(
                field, random_nodes(field, rng.randint(2, 12), rng)
            )
            restored = deserialize_table(serialize_table(table))
            assert restored == table
            assert serialize_table(restored) == serialize_table(table)

    def test_files(self, table_z7, z7_table_bytes, tmp_path):
        path = save_table(table_z7, tmp_path / "tables" / "z7.txt")
        assert path.read_bytes() == z7_table_bytes
        assert load_table(path) == table_z7


class TestTamperedFiles:
    def test_wrong_coefficient(self, z7_table_bytes):
        data = corrupt(z7_table_bytes, b"coeff 6", b"coeff 5")
        with pytest.raises(InvariantViolation):
            deserialize_table(data)

    def test_duplicated_node(self, z7_table_bytes):
        data = corrupt(z7_table_bytes, b"node 2", b"node 1")
        with pytest.raises(InvariantViolation):
            deserialize_table(data)

    def test_non_canonical_values_are_reduced(self, z7_table_bytes):
        data = corrupt(z7_table_bytes, b"node 3", b"node 10")
        assert deserialize_table(data).nodes == (1, 2, 3)


class TestMalformedFiles:
    @pytest.mark.parametrize(
        "old, new, line, field",
        [
            (b"vexp-table v1", b"vexp-table v2", 1, "header"),
            (b"field prime 7", b"field prime 8", 2, "field"),
            (b"field prime 7", b"field octonion", 2, "field"),
            (b"field prime 7", b"feld prime 7", 2, "field"),
            (b"k 3", b"k three", 3, "k"),
            (b"k 3", b"k 1", 3, "k"),
            (b"node 2", b"node two", 5, "node"),
            (b"coeff 4\ncoeff 6", b"coeff 4\nnode 6", 8, "coeff"),
        ],
    )
    def test_diagnostics(self, z7_table_bytes, old, new, line, field):
        with pytest.raises(MalformedTableFile) as excinfo:
            deserialize_table(corrupt(z7_table_bytes, old, new))
        assert excinfo.value.line == line
        assert excinfo.value.field == field

    def test_truncated(self, z7_table_bytes):
        data = z7_table_bytes[: z7_table_bytes.index(b"coeff 4\n", 60)]
        with pytest.raises(MalformedTableFile) as excinfo:
            deserialize_table(data)
        assert excinfo.value.field == "coeff"

    def test_trailing_content(self, z7_table_bytes):
        with pytest.raises(MalformedTableFile):
            deserialize_table(z7_table_bytes + b"coeff 4\n")

    def test_not_utf8(self):
        with pytest.raises(MalformedTableFile):
            deserialize_table(b"\xff\xfe\x00")

    def test_empty(self):
        with pytest.raises(MalformedTableFile):
            deserialize_table(b"")
