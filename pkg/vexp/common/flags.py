"""
Copyright (c) Facebook, Inc. and its affiliates.

This source code is licensed under the MIT license found in the
LICENSE file in the root directory of this source tree.
"""

import argparse
from pathlib import Path


def int_list(text: str):
    """`16,32` -> [16, 32]."""
    try:
        return [int(v) for v in text.split(",") if v]
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"expected a comma-separated list of integers, got '{text}'"
        )


class Flags:
    def __init__(self):
        self.parser = argparse.ArgumentParser(
            prog="vexp",
            description="Exponentiation from precomputed Vandermonde "
            "cofactors, with oracles and property checks",
        )
        self.common = argparse.ArgumentParser(add_help=False)
        self.add_core_args()
        self.subparsers = self.parser.add_subparsers(
            dest="mode", metavar="command", required=True
        )
        self.add_precompute_args()
        self.add_eval_args()
        self.add_verify_args()
        self.add_bench_args()
        self.add_forms_args()

    def get_parser(self):
        return self.parser

    def add_core_args(self):
        self.common.add_argument_group("Core Arguments")
        self.common.add_argument(
            "--debug", action="store_true", help="Log at DEBUG level"
        )
        self.common.add_argument(
            "--quiet",
            action="store_true",
            help="Only log warnings and errors",
        )
        self.common.add_argument(
            "--hide-progressbar",
            action="store_true",
            help="Do not show progress bars on stderr",
        )

    def _add(self, name, help):
        return self.subparsers.add_parser(
            name, parents=[self.common], help=help, description=help
        )

    def add_precompute_args(self):
        parser = self._add("precompute", "Build and store a node table")
        parser.add_argument(
            "--field",
            required=True,
            type=str,
            help="prime:<p>, rational or complex[:<tolerance>]",
        )
        nodes = parser.add_mutually_exclusive_group(required=True)
        nodes.add_argument(
            "--nodes",
            nargs="+",
            help="Explicit nodes in canonical encoding; comma-separated for "
            "prime and rational fields, whitespace- or ';'-separated for "
            "complex ones (whose values contain commas)",
        )
        nodes.add_argument(
            "--nodes-range",
            type=str,
            help="Integer nodes a..b, both ends included",
        )
        nodes.add_argument(
            "--nodes-roots",
            type=str,
            help="m[+x]: the m-th roots of unity plus extra node x "
            "(default 0)",
        )
        parser.add_argument(
            "--out", required=True, type=Path, help="Table file to write"
        )

    def add_eval_args(self):
        parser = self._add("eval", "Evaluate a**n from a stored table")
        parser.add_argument(
            "--table", required=True, type=Path, help="Table file"
        )
        parser.add_argument(
            "--base",
            required=True,
            type=str,
            help="Base a in the table field's canonical encoding",
        )
        parser.add_argument(
            "--exp",
            default=None,
            type=int,
            help="Exponent n in [0, k-1] (default: k-1)",
        )
        parser.add_argument(
            "--trace",
            action="store_true",
            help="Print summands, reduced sums and reduction depth",
        )
        parser.add_argument(
            "--check",
            action="store_true",
            help="Compare against square-and-multiply",
        )
        parser.add_argument(
            "--threads",
            default=1,
            type=int,
            help="Workers for the per-node summands (default: 1)",
        )

    def add_verify_args(self):
        parser = self._add(
            "verify",
            "Run the seeded property suite. Extra --key.sub=value arguments "
            "override suite config entries",
        )
        parser.add_argument(
            "--config-yml",
            default=None,
            type=Path,
            help="Suite config file; flags and overrides take precedence",
        )
        parser.add_argument(
            "--seed", default=None, type=int, help="Seed (default: 42)"
        )
        parser.add_argument(
            "--trials",
            default=None,
            type=int,
            help="Random instances per check (default: 100)",
        )
        parser.add_argument(
            "--kmax",
            default=None,
            type=int,
            help="Largest number of nodes (default: 32)",
        )
        parser.add_argument(
            "--backends",
            default=None,
            type=lambda s: [b for b in s.split(",") if b],
            help="Comma-separated subset of prime,rational,complex",
        )
        parser.add_argument(
            "--select",
            default=None,
            type=lambda s: [c for c in s.split(",") if c],
            help="Comma-separated check names (default: all)",
        )
        parser.add_argument(
            "--inject-fault",
            default=None,
            choices=["coeff"],
            help="Tamper C_1 of every table the suite builds",
        )
        parser.add_argument(
            "--threads",
            default=None,
            type=int,
            help="Checks run concurrently (default: 1)",
        )
        parser.add_argument(
            "--format",
            default="lines",
            choices=["lines", "text"],
            help="Machine-readable CHECK lines or a human-readable summary",
        )

    def add_bench_args(self):
        parser = self._add(
            "bench", "Time node-table evaluation against square-and-multiply"
        )
        parser.add_argument(
            "--field",
            default="prime:998244353",
            type=str,
            help="Field to benchmark in (default: prime:998244353)",
        )
        parser.add_argument(
            "--k",
            default=[16],
            type=int_list,
            help="Comma-separated node counts (default: 16)",
        )
        parser.add_argument(
            "--trials",
            default=100,
            type=int,
            help="Timed evaluations per row (default: 100)",
        )
        parser.add_argument(
            "--threads",
            default=1,
            type=int,
            help="Workers for the per-node summands (default: 1)",
        )
        parser.add_argument(
            "--seed",
            default=0,
            type=int,
            help="Seed for nodes and bases (default: 0)",
        )

    def add_forms_args(self):
        parser = self._add(
            "forms", "Evaluate a special form next to its oracle"
        )
        forms = parser.add_subparsers(
            dest="form", metavar="form", required=True
        )

        binomial = forms.add_parser(
            "binomial",
            parents=[self.common],
            help="a**(k-1) from nodes 1..k with binomial weights",
        )
        binomial.add_argument("--k", required=True, type=int)
        binomial.add_argument("--base", required=True, type=str)
        binomial.add_argument(
            "--field",
            default="rational",
            type=str,
            help="Field (default: rational)",
        )
        binomial.add_argument(
            "--sign",
            default="printed",
            choices=["printed", "derived"],
            help="Sign convention of the weights (default: printed)",
        )

        for name, help in (
            ("roots", "a**m - 1 from the m-th roots of unity"),
            ("pfrac", "1 / (a**m - 1) by partial fractions"),
        ):
            form = forms.add_parser(name, parents=[self.common], help=help)
            form.add_argument("--m", required=True, type=int)
            form.add_argument("--base", required=True, type=str)
            form.add_argument(
                "--field",
                default="complex",
                type=str,
                help="Field (default: complex with tolerance 1e-9)",
            )
            if name == "roots":
                form.add_argument(
                    "--extra",
                    default=None,
                    type=str,
                    help="Extra node x (default: 0)",
                )


flags = Flags()
