"""
Copyright (c) Facebook, Inc. and its affiliates.

This source code is licensed under the MIT license found in the
LICENSE file in the root directory of this source tree.
"""

"""
Line-oriented UTF-8 table files:

```
vexp-table v1
field prime 7
k 3
node 1
node 2
node 3
coeff 4
coeff 6
coeff 4
```

`field` is one of `prime <p>`, `rational`, `complex <tolerance>`. Values use
the canonical encodings of the field backend. The power grid is not stored;
it is recomputed on load, and every invariant is re-verified.
"""

import hashlib
from pathlib import Path
from typing import List, Tuple

from vexp.common.exceptions import MalformedTableFile
from vexp.fields.base import FieldDescriptor, make_field
from vexp.tables.node_table import NodeTable, power_grid, validate_table

HEADER = "vexp-table v1"


def _field_line(descriptor: FieldDescriptor) -> str:
    if descriptor.kind == "prime":
        return f"field prime {descriptor.modulus}"
    if descriptor.kind == "complex":
        return f"field complex {descriptor.tolerance!r}"
    return "field rational"


def serialize_table(table: NodeTable) -> bytes:
    field = table.handle
    lines = [HEADER, _field_line(table.field), f"k {table.k}"]
    lines += [f"node {field.encode(p)}" for p in table.nodes]
    lines += [f"coeff {field.encode(c)}" for c in table.coeffs]
    return ("\n".join(lines) + "\n").encode("utf-8")


def table_checksum(table: NodeTable) -> str:
    return hashlib.sha256(serialize_table(table)).hexdigest()


def _parse_field(tokens: List[str], lineno: int) -> FieldDescriptor:
    if not tokens:
        raise MalformedTableFile("missing field kind", lineno, "field")
    kind, params = tokens[0], tokens[1:]
    try:
        if kind == "prime" and len(params) == 1:
            return FieldDescriptor.prime(int(params[0]))
        if kind == "rational" and not params:
            return FieldDescriptor.rational()
        if kind == "complex" and len(params) <= 1:
            if params:
                return FieldDescriptor.complex(float(params[0]))
            return FieldDescriptor.complex()
    except ValueError as e:
        raise MalformedTableFile(str(e), lineno, "field") from e
    raise MalformedTableFile(
        f"unrecognised field '{' '.join(tokens)}'", lineno, "field"
    )


def _expect(lines, index: int, key: str) -> Tuple[str, int]:
    lineno = index + 1
    if index >= len(lines):
        raise MalformedTableFile(
            f"unexpected end of file, expected '{key}'", lineno, key
        )
    name, _, rest = lines[index].partition(" ")
    if name != key:
        raise MalformedTableFile(
            f"expected '{key}', found '{lines[index]}'", lineno, key
        )
    return rest.strip(), lineno


def deserialize_table(data: bytes) -> NodeTable:
    try:
        text = data.decode("utf-8")
    except UnicodeDecodeError as e:
        raise MalformedTableFile("file is not valid UTF-8") from e

    lines = [line.strip() for line in text.splitlines()]
    while lines and not lines[-1]:
        lines.pop()
    if not lines or lines[0] != HEADER:
        raise MalformedTableFile(f"missing header '{HEADER}'", 1, "header")

    field_spec, lineno = _expect(lines, 1, "field")
    descriptor = _parse_field(field_spec.split(), lineno)
    try:
        field = make_field(descriptor)
    except ValueError as e:
        raise MalformedTableFile(str(e), lineno, "field") from e

    k_text, lineno = _expect(lines, 2, "k")
    try:
        k = int(k_text)
    except ValueError as e:
        raise MalformedTableFile(f"bad k '{k_text}'", lineno, "k") from e
    if k < 2:
        raise MalformedTableFile(f"k must be >= 2, got {k}", lineno, "k")

    values = {"node": [], "coeff": []}
    index = 3
    for key in ("node", "coeff"):
        for _ in range(k):
            value_text, lineno = _expect(lines, index, key)
            try:
                values[key].append(field.decode(value_text))
            except (ValueError, ArithmeticError) as e:
                raise MalformedTableFile(
                    f"bad value '{value_text}': {e}", lineno, key
                ) from e
            index += 1
    if index != len(lines):
        raise MalformedTableFile(
            f"trailing content '{lines[index]}'", index + 1, None
        )

    table = NodeTable(
        field=descriptor,
        k=k,
        nodes=tuple(values["node"]),
        coeffs=tuple(values["coeff"]),
        powers=power_grid(field, values["node"]),
    )
    validate_table(table)
    return table


def save_table(table: NodeTable, path) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_bytes(serialize_table(table))
    return path


def load_table(path) -> NodeTable:
    return deserialize_table(Path(path).read_bytes())
