"""
Copyright (c) Facebook, Inc. and its affiliates.

This source code is licensed under the MIT license found in the
LICENSE file in the root directory of this source tree.
"""

import pytest
import yaml

from vexp.common.registry import registry
from vexp.common.utils import (
    build_config,
    ceil_log2,
    create_dict_from_args,
    load_config,
    merge_dicts,
    seeded_rng,
    setup_imports,
)
from vexp.fields import PrimeField


def _write_yml(path, content):
    path.write_text(yaml.safe_dump(content))
    return path


@pytest.mark.parametrize(
    "m, expected",
    [(1, 0), (2, 1), (3, 2), (4, 2), (5, 3), (17, 5), (256, 8), (1024, 10)],
)
def test_ceil_log2(m, expected):
    assert ceil_log2(m) == expected


def test_seeded_rng_streams():
    assert seeded_rng(1, "a").random() == seeded_rng(1, "a").random()
    assert seeded_rng(1, "a").random() != seeded_rng(1, "b").random()
    assert seeded_rng(1, "a").random() != seeded_rng(2, "a").random()


def test_create_dict_from_args():
    assert create_dict_from_args(
        ["--checks.laplace_zero.trials=2", "--seed=5", "--backends=['prime']"]
    ) == {
        "checks": {"laplace_zero": {"trials": 2}},
        "seed": 5,
        "backends": ["prime"],
    }
    assert create_dict_from_args(["--inject_fault=coeff"]) == {
        "inject_fault": "coeff"
    }


def test_create_dict_from_args_needs_value():
    with pytest.raises(ValueError):
        create_dict_from_args(["--seed"])


def test_merge_dicts_reports_duplicates():
    merged, duplicates = merge_dicts(
        {"seed": 1, "checks": {"a": {"trials": 1}}},
        {"seed": 2, "checks": {"a": {"trials": 3}, "b": {}}},
    )
    assert merged == {"seed": 2, "checks": {"a": {"trials": 3}, "b": {}}}
    assert sorted(duplicates) == ["checks.a.trials", "seed"]


def test_load_config_includes(tmp_path):
    _write_yml(tmp_path / "base.yml", {"seed": 1, "trials": 10})
    top = _write_yml(
        tmp_path / "top.yml", {"includes": ["base.yml"], "trials": 20}
    )
    config, warnings, errors = load_config(top)
    assert config == {"seed": 1, "trials": 20}
    assert warnings == ["trials"]
    assert errors == []


def test_load_config_cycle(tmp_path):
    _write_yml(tmp_path / "a.yml", {"includes": ["b.yml"]})
    _write_yml(tmp_path / "b.yml", {"includes": ["a.yml"]})
    with pytest.raises(ValueError):
        load_config(tmp_path / "a.yml")


def test_build_config_layers(tmp_path):
    path = _write_yml(tmp_path / "suite.yml", {"trials": 20, "k_max": 8})
    config = build_config(
        {"seed": 1, "trials": 10, "k_max": 32},
        path,
        ["--k_max=16"],
    )
    assert config == {"seed": 1, "trials": 20, "k_max": 16}


def test_load_config_malformed_yaml(tmp_path):
    path = tmp_path / "broken.yml"
    path.write_text("seed: [1, 2\n")
    with pytest.raises(ValueError, match="Could not parse"):
        load_config(path)


@pytest.mark.parametrize("content", [[1, 2], 5, {"includes": "base.yml"}])
def test_load_config_rejects_bad_layout(tmp_path, content):
    path = _write_yml(tmp_path / "bad.yml", content)
    with pytest.raises(ValueError):
        load_config(path)


def test_build_config_conflicting_includes(tmp_path):
    _write_yml(tmp_path / "a.yml", {"seed": 1})
    _write_yml(tmp_path / "b.yml", {"seed": 2})
    top = _write_yml(tmp_path / "top.yml", {"includes": ["a.yml", "b.yml"]})
    with pytest.raises(ValueError):
        build_config({}, top)


def test_registry_lookups():
    assert registry.get_field_class("prime") is PrimeField
    assert "laplace_zero" in registry.list_checks()
    with pytest.raises(RuntimeError, match="'verify'"):
        registry.get_task_class("train")


@pytest.mark.parametrize(
    "name", ["vexp.fields.PrimeField", "vexp.common.utils.ceil_log2"]
)
def test_registry_ignores_import_paths(name):
    with pytest.raises(RuntimeError):
        registry.get_check(name)
    with pytest.raises(RuntimeError):
        registry.get_field_class(name)


def test_setup_imports_registers_once():
    setup_imports()
    assert registry.get("imports_setup") is True
    assert registry.get_task_class("verify") is not None
    setup_imports()
    assert "laplace_zero" in registry.list_checks()


def test_registry_state():
    registry.register("scratch.value", 3)
    assert registry.get("scratch.value") == 3
    assert registry.get("scratch.missing", "default") == "default"
    registry.unregister("scratch")
    assert registry.get("scratch.value") is None
