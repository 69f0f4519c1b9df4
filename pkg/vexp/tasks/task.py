"""
Copyright (c) Facebook, Inc. and its affiliates.

This source code is licensed under the MIT license found in the
LICENSE file in the root directory of this source tree.
"""

import csv
import logging
import random
import sys
import time
from contextlib import contextmanager
from dataclasses import astuple, dataclass, fields
from multiprocessing.pool import ThreadPool
from typing import List, Optional

import numpy as np

from vexp.common.registry import registry
from vexp.common.utils import build_config
from vexp.fields.base import Field, FieldDescriptor, make_field, pow_oracle
from vexp.modules.evaluator import cost_report, eval_power
from vexp.modules.special_forms import (
    binomial_form_eval,
    make_roots_context,
    partial_fraction_eval,
    roots_nodes,
    roots_unity_eval,
)
from vexp.tables.node_table import (
    build_node_table,
    random_base,
    random_nodes,
    range_nodes,
)
from vexp.tables.serialization import load_table, save_table, table_checksum
from vexp.verification.suite import DEFAULT_SUITE_CONFIG, run_property_suite


@contextmanager
def worker_pool(threads: int):
    """A ThreadPool for threads > 1, otherwise None (run inline)."""
    if threads < 1:
        raise ValueError(f"--threads must be >= 1, got {threads}")
    if threads == 1:
        yield None
        return
    with ThreadPool(threads) as pool:
        yield pool


def parse_node_list(field: Field, values: List[str]) -> List:
    separator = ";" if field.kind == "complex" else ","
    tokens = [t for v in values for t in v.split(separator) if t.strip()]
    return [field.decode(t.strip()) for t in tokens]


def parse_node_range(field: Field, text: str):
    start, sep, stop = text.partition("..")
    if not sep:
        raise ValueError(f"--nodes-range expects a..b, got '{text}'")
    return range_nodes(field, int(start), int(stop))


def parse_node_roots(field: Field, text: str):
    m, _, extra = text.partition("+")
    extra = field.decode(extra) if extra else field.zero
    return roots_nodes(field, int(m), extra)


class BaseTask:
    def __init__(self, args, override_args: Optional[List[str]] = None):
        self.args = args
        self.override_args = override_args or []

    def run(self) -> int:
        raise NotImplementedError


@registry.register_task("precompute")
class PrecomputeTask(BaseTask):
    def run(self) -> int:
        field = make_field(FieldDescriptor.parse(self.args.field))
        if self.args.nodes is not None:
            nodes = parse_node_list(field, self.args.nodes)
        elif self.args.nodes_range is not None:
            nodes = parse_node_range(field, self.args.nodes_range)
        else:
            nodes = parse_node_roots(field, self.args.nodes_roots)

        table = build_node_table(field, nodes)
        path = save_table(table, self.args.out)
        logging.info(f"Wrote node table with k={table.k} to {path}")
        print(f"k={table.k} sha256={table_checksum(table)}")
        return 0


@registry.register_task("eval")
class EvalTask(BaseTask):
    def run(self) -> int:
        table = load_table(self.args.table)
        field = table.handle
        a = field.decode(self.args.base)
        n = table.k - 1 if self.args.exp is None else self.args.exp

        with worker_pool(self.args.threads) as pool:
            outcome = eval_power(table, a, n, pool=pool)

        if self.args.trace:
            encode = field.encode
            print(
                "# numerator_summands "
                + " ".join(encode(x) for x in outcome.numerator_summands)
            )
            print(
                "# denominator_summands "
                + " ".join(encode(x) for x in outcome.denominator_summands)
            )
            print(f"# numerator {encode(outcome.numerator)}")
            print(f"# denominator {encode(outcome.denominator)}")
            print(f"# reduction_depth {outcome.reduction_depth}")
        print(field.encode(outcome.value))

        if self.args.check:
            matched = field.equals(outcome.value, pow_oracle(field, a, n))
            print("MATCH" if matched else "MISMATCH")
            return 0 if matched else 1
        return 0


@registry.register_task("verify")
class VerifyTask(BaseTask):
    def suite_config(self):
        config = build_config(
            DEFAULT_SUITE_CONFIG, self.args.config_yml, self.override_args
        )
        for key, value in (
            ("seed", self.args.seed),
            ("trials", self.args.trials),
            ("k_max", self.args.kmax),
            ("backends", self.args.backends),
            ("select", self.args.select),
            ("inject_fault", self.args.inject_fault),
            ("threads", self.args.threads),
        ):
            if value is not None:
                config[key] = value
        if self.args.hide_progressbar:
            config["hide_progressbar"] = True
        return config

    def run(self) -> int:
        report = run_property_suite(self.suite_config())
        if self.args.format == "text":
            print(report.render_text())
        else:
            print(report.render_lines())
        if not report.passed:
            logging.error(
                f"{report.failures} failures in "
                f"{sum(not c.passed for c in report.checks)} checks"
            )
        return 0 if report.passed else 1


@dataclass(frozen=True)
class BenchRecord:
    method: str
    field: str
    k: int
    n: int
    trials: int
    threads: int
    median_ns: int
    p10_ns: int
    p90_ns: int

    @classmethod
    def from_samples(cls, samples: List[int], **kwargs) -> "BenchRecord":
        assert samples, "at least one timed trial is needed"
        p10, median, p90 = np.percentile(samples, [10, 50, 90])
        return cls(
            trials=len(samples),
            median_ns=int(round(median)),
            p10_ns=int(round(p10)),
            p90_ns=int(round(p90)),
            **kwargs,
        )


def time_ns(fn, *args) -> int:
    start = time.perf_counter_ns()
    fn(*args)
    return max(1, time.perf_counter_ns() - start)


@registry.register_task("bench")
class BenchTask(BaseTask):
    def run(self) -> int:
        if self.args.trials < 1:
            raise ValueError(f"--trials must be >= 1, got {self.args.trials}")
        field = make_field(FieldDescriptor.parse(self.args.field))
        rng = random.Random(self.args.seed)

        writer = csv.writer(sys.stdout, lineterminator="\n")
        writer.writerow([f.name for f in fields(BenchRecord)])
        with worker_pool(self.args.threads) as pool:
            for k in self.args.k:
                for record in self.bench_k(field, k, rng, pool):
                    writer.writerow(astuple(record))
        return 0

    def bench_k(self, field: Field, k: int, rng, pool):
        n = k - 1
        table = build_node_table(field, random_nodes(field, k, rng))
        bases = [
            random_base(field, table.nodes, rng)
            for _ in range(self.args.trials)
        ]

        depth = eval_power(table, bases[0], n).reduction_depth
        print(f"# depth k={k} d={depth}")
        cost = cost_report(k, n)
        print(
            f"# cost k={k} n={n} local_ops={cost.vexp_total_local_ops} "
            f"reduction_depth={cost.vexp_reduction_depth} "
            f"reduction_adds={cost.vexp_reduction_adds} "
            f"divisions={cost.vexp_divisions} "
            f"binexp_multiplications={cost.binexp_multiplications}"
        )
        sys.stdout.flush()

        vexp_samples = [time_ns(eval_power, table, a, n, pool) for a in bases]
        binexp_samples = [time_ns(pow_oracle, field, a, n) for a in bases]
        common = dict(
            field=str(field.descriptor), k=k, n=n, threads=self.args.threads
        )
        return [
            BenchRecord.from_samples(vexp_samples, method="vexp", **common),
            BenchRecord.from_samples(
                binexp_samples, method="binexp", **common
            ),
        ]


@registry.register_task("forms")
class FormsTask(BaseTask):
    def run(self) -> int:
        field = make_field(FieldDescriptor.parse(self.args.field))
        a = field.decode(self.args.base)

        if self.args.form == "binomial":
            value = binomial_form_eval(field, self.args.k, a, self.args.sign)
            oracle = pow_oracle(field, a, self.args.k - 1)
        elif self.args.form == "roots":
            extra = (
                field.decode(self.args.extra)
                if self.args.extra is not None
                else None
            )
            ctx = make_roots_context(field, self.args.m, extra)
            value = roots_unity_eval(ctx, a)
            oracle = field.sub(pow_oracle(field, a, self.args.m), field.one)
        else:
            ctx = make_roots_context(field, self.args.m)
            value = partial_fraction_eval(ctx, a)
            oracle = field.inverse(
                field.sub(pow_oracle(field, a, self.args.m), field.one)
            )

        matched = field.equals(value, oracle)
        print(
            f"{field.encode(value)} {field.encode(oracle)} "
            f"{'MATCH' if matched else 'MISMATCH'}"
        )
        return 0 if matched else 1
