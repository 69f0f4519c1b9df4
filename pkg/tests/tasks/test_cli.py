"""
Copyright (c) Facebook, Inc. and its affiliates.

This source code is licensed under the MIT license found in the
LICENSE file in the root directory of this source tree.
"""

import csv
import hashlib
import logging

import pytest

from vexp.common.flags import flags
from vexp.tasks import VerifyTask
from vexp.tasks.runner import EXIT_USAGE, main


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out.splitlines()


@pytest.fixture
def z7_path(tmp_path, capsys):
    path = tmp_path / "z7.txt"
    code, _ = run(
        capsys,
        "precompute",
        "--field",
        "prime:7",
        "--nodes",
        "1,2,3",
        "--out",
        str(path),
    )
    assert code == 0
    return path


class TestPrecompute:
    def test_z7(self, z7_path, z7_table_bytes, tmp_path, capsys):
        assert z7_path.read_bytes() == z7_table_bytes
        code, out = run(
            capsys,
            "precompute",
            "--field",
            "prime:7",
            "--nodes",
            "1",
            "2",
            "3",
            "--out",
            str(tmp_path / "again.txt"),
        )
        assert code == 0
        digest = hashlib.sha256(z7_table_bytes).hexdigest()
        assert out == [f"k=3 sha256={digest}"]

    @pytest.mark.parametrize(
        "field, nodes_args, k",
        [
            ("rational", ["--nodes-range=-2..2"], 5),
            ("complex", ["--nodes-roots", "8"], 9),
            ("prime:7", ["--nodes-roots", "3+3"], 4),
            ("complex", ["--nodes", "1,0;2,0", "0,1"], 3),
        ],
    )
    def test_node_sources(self, tmp_path, capsys, field, nodes_args, k):
        code, out = run(
            capsys,
            "precompute",
            "--field",
            field,
            *nodes_args,
            "--out",
            str(tmp_path / "table.txt"),
        )
        assert code == 0
        assert out[0].startswith(f"k={k} sha256=")

    @pytest.mark.parametrize(
        "field, nodes",
        [
            ("prime:7", "1,1,3"),
            ("prime:8", "1,2,3"),
            ("prime:3", "0,1,2"),
            ("rational", "1"),
        ],
    )
    def test_rejected(self, tmp_path, capsys, caplog, field, nodes):
        path = tmp_path / "table.txt"
        with caplog.at_level(logging.ERROR):
            code, out = run(
                capsys,
                "precompute",
                "--field",
                field,
                "--nodes",
                nodes,
                "--out",
                str(path),
            )
        assert code == EXIT_USAGE
        assert out == []
        assert not path.exists()
        assert caplog.records

    def test_node_sources_are_exclusive(self, tmp_path):
        with pytest.raises(SystemExit) as excinfo:
            main(
                [
                    "precompute",
                    "--field",
                    "rational",
                    "--nodes",
                    "1,2",
                    "--nodes-range",
                    "1..2",
                    "--out",
                    str(tmp_path / "t.txt"),
                ]
            )
        assert excinfo.value.code == 2


class TestEval:
    def test_trace(self, z7_path, capsys):
        code, out = run(
            capsys,
            "eval",
            "--table",
            str(z7_path),
            "--base",
            "4",
            "--exp",
            "2",
            "--trace",
            "--check",
        )
        assert code == 0
        assert out == [
            "# numerator_summands 1 2 6",
            "# denominator_summands 1 4 3",
            "# numerator 2",
            "# denominator 1",
            "# reduction_depth 2",
            "2",
            "MATCH",
        ]

    def test_default_exponent_and_threads(self, z7_path, capsys):
        code, out = run(
            capsys,
            "eval",
            "--table",
            str(z7_path),
            "--base",
            "11",
            "--threads",
            "3",
        )
        assert code == 0
        assert out == ["2"]

    @pytest.mark.parametrize(
        "extra, error",
        [
            (["--base", "2"], "BaseCollidesWithNode"),
            (["--base", "4", "--exp", "3"], "ExponentOutOfRange"),
            (["--base", "4", "--threads", "0"], "ValueError"),
        ],
    )
    def test_rejected(self, z7_path, capsys, caplog, extra, error):
        with caplog.at_level(logging.ERROR):
            code, out = run(capsys, "eval", "--table", str(z7_path), *extra)
        assert code == EXIT_USAGE
        assert out == []
        assert error in caplog.text

    def test_tampered_table(self, z7_path, capsys, caplog):
        data = z7_path.read_bytes().replace(b"coeff 6", b"coeff 5")
        z7_path.write_bytes(data)
        with caplog.at_level(logging.ERROR):
            code, _ = run(
                capsys, "eval", "--table", str(z7_path), "--base", "4"
            )
        assert code == EXIT_USAGE
        assert "InvariantViolation" in caplog.text

    def test_missing_table(self, tmp_path, capsys):
        code, _ = run(
            capsys,
            "eval",
            "--table",
            str(tmp_path / "missing.txt"),
            "--base",
            "4",
        )
        assert code == EXIT_USAGE

    def test_complex_roots_table(self, tmp_path, capsys):
        path = tmp_path / "roots.txt"
        run(
            capsys,
            "precompute",
            "--field",
            "complex",
            "--nodes-roots",
            "16",
            "--out",
            str(path),
        )
        code, out = run(
            capsys,
            "eval",
            "--table",
            str(path),
            "--base",
            "0.7,0.2",
            "--check",
        )
        assert code == 0
        assert out[-1] == "MATCH"

    def test_overrides_only_for_verify(self, z7_path):
        with pytest.raises(SystemExit) as excinfo:
            main(["eval", "--table", str(z7_path), "--base", "4", "--x=1"])
        assert excinfo.value.code == 2


class TestVerify:
    def test_pass(self, capsys):
        code, out = run(
            capsys,
            "verify",
            "--seed",
            "7",
            "--trials",
            "2",
            "--kmax",
            "6",
            "--select",
            "laplace_zero,central_identity",
            "--hide-progressbar",
        )
        assert code == 0
        assert out == [
            "CHECK central_identity 2 0",
            "CHECK laplace_zero 2 0",
            "RESULT PASS seed=7 checks=2 failures=0",
        ]

    def test_fault_injection(self, capsys):
        code, out = run(
            capsys,
            "verify",
            "--trials",
            "3",
            "--kmax",
            "6",
            "--select",
            "laplace_zero",
            "--inject-fault",
            "coeff",
            "--hide-progressbar",
        )
        assert code == 1
        assert out[0] == "CHECK laplace_zero 3 3"
        assert out[1].startswith("COUNTEREXAMPLE laplace_zero n=0 ")
        assert out[-1] == "RESULT FAIL seed=42 checks=1 failures=3"

    def test_dotted_override(self, capsys):
        code, out = run(
            capsys,
            "verify",
            "--select",
            "laplace_zero",
            "--kmax",
            "6",
            "--checks.laplace_zero.trials=4",
            "--hide-progressbar",
        )
        assert code == 0
        assert out[0] == "CHECK laplace_zero 4 0"

    def test_text_format(self, capsys):
        code, out = run(
            capsys,
            "verify",
            "--select",
            "binexp_count",
            "--format",
            "text",
            "--hide-progressbar",
        )
        assert code == 0
        assert out[0] == "Property suite, seed 42"
        assert out[-1] == "1 checks passed with 0 failures"

    @pytest.mark.parametrize(
        "argv",
        [
            ["--backends", "prime,octonion"],
            ["--select", "nosuch"],
            ["--select", "laplace_zero,nosuch"],
            ["--k_max=abc"],
            ["--trials=[3]"],
            ["--checks.laplace_zero.k_min=abc"],
            ["--checks=laplace_zero"],
        ],
    )
    def test_bad_input_is_usage_error(self, capsys, caplog, argv):
        with caplog.at_level(logging.ERROR):
            code, out = run(capsys, "verify", "--hide-progressbar", *argv)
        assert code == EXIT_USAGE
        assert out == []
        assert "ValueError" in caplog.text

    def test_malformed_config_yml(self, tmp_path, capsys):
        path = tmp_path / "broken.yml"
        path.write_text("trials: [3\n")
        code, out = run(capsys, "verify", "--config-yml", str(path))
        assert code == EXIT_USAGE
        assert out == []

    def test_config_yml(self, capsys, configs_dir):
        code, out = run(
            capsys,
            "verify",
            "--config-yml",
            str(configs_dir / "verify" / "default.yml"),
            "--seed",
            "3",
            "--select",
            "binexp_count,reduction_depth",
            "--hide-progressbar",
        )
        assert code == 0
        assert out[-1] == "RESULT PASS seed=3 checks=2 failures=0"

    def test_acceptance_config_layers(self, configs_dir):
        args, overrides = flags.get_parser().parse_known_args(
            [
                "verify",
                "--config-yml",
                str(configs_dir / "verify" / "acceptance.yml"),
                "--seed",
                "5",
                "--checks.zero_determinant.trials=7",
            ]
        )
        config = VerifyTask(args, overrides).suite_config()
        assert config["seed"] == 5
        assert config["primes"][0] == 754974721
        assert config["checks"]["central_identity"]["k_max"] == 128
        assert config["checks"]["binomial_form"]["trials"] == 110
        assert config["checks"]["zero_determinant"]["trials"] == 7


class TestBench:
    def test_csv(self, capsys):
        code, out = run(
            capsys, "bench", "--k", "4,8", "--trials", "3", "--seed", "1"
        )
        assert code == 0
        assert "# depth k=4 d=2" in out
        assert "# depth k=8 d=3" in out
        assert any(
            line.startswith("# cost k=8 n=7 ") and "reduction_depth=3" in line
            for line in out
        )
        data = [line for line in out if not line.startswith("#")]
        rows = list(csv.DictReader(data))
        assert [(r["method"], r["k"]) for r in rows] == [
            ("vexp", "4"),
            ("binexp", "4"),
            ("vexp", "8"),
            ("binexp", "8"),
        ]
        for row in rows:
            assert row["field"] == "prime:998244353"
            assert row["trials"] == "3"
            assert (
                0
                < int(row["p10_ns"])
                <= int(row["median_ns"])
                <= int(row["p90_ns"])
            )

    def test_no_trials(self, capsys):
        code, _ = run(capsys, "bench", "--trials", "0")
        assert code == EXIT_USAGE


class TestForms:
    @pytest.mark.parametrize(
        "argv, expected",
        [
            (["binomial", "--k", "3", "--base", "5"], "25 25 MATCH"),
            (
                ["binomial", "--k", "3", "--base", "5", "--sign", "derived"],
                "25 25 MATCH",
            ),
            (
                ["roots", "--m", "3", "--base", "3", "--field", "prime:7"],
                "5 5 MATCH",
            ),
            (
                [
                    "roots",
                    "--m",
                    "3",
                    "--base",
                    "5",
                    "--extra",
                    "3",
                    "--field",
                    "prime:7",
                ],
                "5 5 MATCH",
            ),
            (
                ["pfrac", "--m", "3", "--base", "3", "--field", "prime:7"],
                "3 3 MATCH",
            ),
        ],
    )
    def test_values(self, capsys, argv, expected):
        code, out = run(capsys, "forms", *argv)
        assert code == 0
        assert out == [expected]

    def test_complex_roots(self, capsys):
        code, out = run(capsys, "forms", "roots", "--m", "2", "--base", "3")
        assert code == 0
        assert out[0].endswith(" MATCH")

    @pytest.mark.parametrize(
        "argv",
        [
            ["binomial", "--k", "6", "--base", "3", "--field", "prime:5"],
            ["pfrac", "--m", "3", "--base", "2", "--field", "prime:7"],
            ["roots", "--m", "5", "--base", "3", "--field", "prime:7"],
        ],
    )
    def test_rejected(self, capsys, argv):
        code, out = run(capsys, "forms", *argv)
        assert code == EXIT_USAGE
        assert out == []
