"""
Copyright (c) Facebook, Inc. and its affiliates.

This source code is licensed under the MIT license found in the
LICENSE file in the root directory of this source tree.
"""

import itertools
import logging
import time
from dataclasses import dataclass
from multiprocessing.pool import ThreadPool
from typing import Dict, Optional, Sequence, Tuple

from tqdm import tqdm

from vexp.common.registry import registry
from vexp.common.utils import merge_dicts, seeded_rng
from vexp.fields.base import Field, FieldDescriptor, make_field, pow_oracle
from vexp.modules.evaluator import (
    binexp_multiplications,
    cost_report,
    eval_power,
    eval_shifted,
    tree_reduce,
)
from vexp.modules.special_forms import (
    binomial_form_eval,
    make_roots_context,
    partial_fraction_eval,
    product_form_eval,
    roots_of_unity,
    roots_unity_eval,
)
from vexp.tables.determinants import (
    brute_force_det,
    vandermonde_det,
    vandermonde_matrix,
)
from vexp.tables.node_table import (
    NodeTable,
    build_node_table,
    coefficient_residuals,
    random_base,
    random_nodes,
    range_nodes,
)
from vexp.tables.serialization import deserialize_table, serialize_table
from vexp.verification.checks import (
    BRUTE_FORCE_MAX_K,
    appendix_determinant_check,
    cofactor_ratios,
    laplace_zero_check,
    zero_determinant_check,
)

"""
Seeded property suite. Every check is a function registered with
`@registry.register_check(name)`; it receives a `CheckContext` holding its
own random stream and records one outcome per instance. A check's stream
depends only on (seed, name), so reports are identical whatever the order
or concurrency the checks run with.

```
from vexp.verification.suite import run_property_suite

report = run_property_suite({"seed": 7, "trials": 5})
print(report.render_lines())
```
"""

DEFAULT_SUITE_CONFIG = {
    "seed": 42,
    "trials": 100,
    "k_min": 2,
    "k_max": 32,
    "backends": ["prime", "rational", "complex"],
    # 30-61 bit primes
    "primes": [
        754974721,
        998244353,
        1000000007,
        2013265921,
        2147483647,
        3221225473,
        1000000000039,
        1000000000000037,
        1000000000000000003,
        2305843009213693951,
    ],
    "complex_tolerance": 1e-9,
    "inject_fault": None,
    "threads": 1,
    "hide_progressbar": False,
    # None runs every registered check
    "select": None,
    # per-check overrides, e.g. {"central_identity": {"k_max": 128}}
    "checks": {},
}

FAULT_KINDS = (None, "coeff")
EXACT_KINDS = ("prime", "rational")
ALL_KINDS = ("prime", "rational", "complex")
INT_KEYS = ("seed", "trials", "k_min", "k_max", "threads")

# Conditioning limits for complex instances.
COMPLEX_MAX_K = 17
COMPLEX_MIN_SEPARATION = 0.1

BINOMIAL_MAX_K = 12
ROOTS_MAX_M = 12
COMPLEX_ROOTS_MAX_M = 16
REDUCTION_MAX_K = 1024
BINEXP_SAMPLES = 1000
BINEXP_MAX_BITS = 64


@dataclass(frozen=True)
class CheckResult:
    name: str
    instances_run: int
    failures: int
    first_counterexample: Optional[str]

    @property
    def passed(self) -> bool:
        return self.failures == 0


@dataclass(frozen=True)
class VerifyReport:
    checks: Tuple[CheckResult, ...]
    seed: int
    elapsed: float

    @property
    def failures(self) -> int:
        return sum(c.failures for c in self.checks)

    @property
    def passed(self) -> bool:
        return self.failures == 0

    def render_lines(self) -> str:
        """Machine-readable `CHECK <name> <ran> <failed>` lines."""
        lines = [
            f"CHECK {c.name} {c.instances_run} {c.failures}"
            for c in self.checks
        ]
        lines += [
            f"COUNTEREXAMPLE {c.name} {c.first_counterexample}"
            for c in self.checks
            if not c.passed
        ]
        lines.append(
            f"RESULT {'PASS' if self.passed else 'FAIL'} seed={self.seed} "
            f"checks={len(self.checks)} failures={self.failures}"
        )
        return "\n".join(lines)

    def render_text(self) -> str:
        width = max([len(c.name) for c in self.checks] + [5])
        lines = [f"Property suite, seed {self.seed}"]
        for c in self.checks:
            status = "ok" if c.passed else "FAILED"
            lines.append(
                f"  {c.name:<{width}}  {c.instances_run:>6} run  "
                f"{c.failures:>6} failed  {status}"
            )
            if not c.passed:
                lines.append(
                    f"    first counterexample: {c.first_counterexample}"
                )
        verdict = "passed" if self.passed else "FAILED"
        lines.append(
            f"{len(self.checks)} checks {verdict} with "
            f"{self.failures} failures"
        )
        return "\n".join(lines)


def describe(field: Field, **values) -> str:
    """Serialized inputs of one instance, in canonical encodings."""
    parts = [f"field={field.descriptor}"]
    for key, value in values.items():
        if isinstance(value, (list, tuple)):
            encoded = ",".join(field.encode(v) for v in value)
            parts.append(f"{key}=[{encoded}]")
        elif isinstance(value, (int, str)):
            parts.append(f"{key}={value}")
        else:
            parts.append(f"{key}={field.encode(value)}")
    return " ".join(parts)


class CheckContext:
    """Configuration, random stream and tallies of one check."""

    def __init__(self, name: str, config: Dict):
        self.name = name
        self.config = config
        self.rng = seeded_rng(config["seed"], name)
        self.instances_run = 0
        self.failures = 0
        self.first_counterexample = None

    @property
    def trials(self) -> int:
        return self.config["trials"]

    def draw_k(self, k_max: Optional[int] = None) -> int:
        upper = self.config["k_max"]
        if k_max is not None:
            upper = min(upper, k_max)
        lower = min(self.config["k_min"], upper)
        return self.rng.randint(lower, upper)

    def enabled(self, kinds: Sequence[str] = EXACT_KINDS) -> bool:
        return any(b in kinds for b in self.config["backends"])

    def pick_field(self, kinds: Sequence[str] = EXACT_KINDS) -> Field:
        enabled = [b for b in self.config["backends"] if b in kinds]
        assert enabled, f"no enabled backend among {kinds}"
        kind = self.rng.choice(enabled)
        if kind == "prime":
            descriptor = FieldDescriptor.prime(
                self.rng.choice(self.config["primes"])
            )
        elif kind == "complex":
            descriptor = FieldDescriptor.complex(
                self.config["complex_tolerance"]
            )
        else:
            descriptor = FieldDescriptor.rational()
        return make_field(descriptor)

    def draw_nodes(self, field: Field, k: int) -> Tuple:
        # complex instances use unit-circle nodes, which are well conditioned
        if field.kind == "complex":
            return roots_of_unity(field, k)
        return random_nodes(field, k, self.rng)

    def draw_base(self, field: Field, nodes: Sequence):
        if field.kind != "complex":
            return random_base(field, nodes, self.rng)
        while True:
            a = field.random_element(self.rng)
            if min(abs(a - p) for p in nodes) >= COMPLEX_MIN_SEPARATION:
                return a

    def build_table(self, field: Field, nodes: Sequence) -> NodeTable:
        table = build_node_table(field, nodes)
        if self.config["inject_fault"] == "coeff":
            coeffs = list(table.coeffs)
            coeffs[0] = field.add(coeffs[0], field.one)
            table = table.with_coeffs(coeffs)
        return table

    def record(self, failure: Optional[str]) -> None:
        """Count one instance; `failure` is None when it passed."""
        self.instances_run += 1
        if failure is not None:
            self.failures += 1
            if self.first_counterexample is None:
                self.first_counterexample = failure

    def repeat(self, instance, count: Optional[int] = None) -> None:
        """
        Run `instance()` `count` times (default: trials). It returns None on
        success or a counterexample string; exceptions count as failures.
        """
        for _ in range(self.trials if count is None else count):
            try:
                failure = instance()
            except Exception as e:
                failure = f"{type(e).__name__}: {e}"
            self.record(failure)

    def result(self) -> CheckResult:
        return CheckResult(
            name=self.name,
            instances_run=self.instances_run,
            failures=self.failures,
            first_counterexample=self.first_counterexample,
        )


# Field axioms


@registry.register_check("field_axioms")
def field_axioms(ctx: CheckContext):
    def instance():
        field = ctx.pick_field(ALL_KINDS)
        x, y, z = (field.random_element(ctx.rng) for _ in range(3))
        add, mul, eq = field.add, field.mul, field.equals
        broken = [
            name
            for name, holds in (
                ("add-assoc", eq(add(add(x, y), z), add(x, add(y, z)))),
                ("mul-assoc", eq(mul(mul(x, y), z), mul(x, mul(y, z)))),
                ("add-comm", eq(add(x, y), add(y, x))),
                ("mul-comm", eq(mul(x, y), mul(y, x))),
                (
                    "distrib",
                    eq(mul(x, add(y, z)), add(mul(x, y), mul(x, z))),
                ),
                ("neg", field.is_zero(add(x, field.neg(x)))),
            )
            if not holds
        ]
        if broken:
            return f"{','.join(broken)} {describe(field, x=x, y=y, z=z)}"

    if ctx.enabled(ALL_KINDS):
        ctx.repeat(instance)


@registry.register_check("inverse_involution")
def inverse_involution(ctx: CheckContext):
    def instance():
        field = ctx.pick_field(ALL_KINDS)
        x = random_base(field, [field.zero], ctx.rng)
        inv = field.inverse(x)
        if not field.equals(field.inverse(inv), x) or not field.equals(
            field.mul(x, inv), field.one
        ):
            return describe(field, x=x)

    if ctx.enabled(ALL_KINDS):
        ctx.repeat(instance)


@registry.register_check("from_integer_reduction")
def from_integer_reduction(ctx: CheckContext):
    def instance():
        field = ctx.pick_field(("prime",))
        p = field.characteristic
        m = ctx.rng.randrange(-(2**64), 2**64)
        r = ctx.rng.randrange(-100, 100)
        if not field.equals(
            field.from_integer(p + 3), field.from_integer(3)
        ) or not field.equals(
            field.from_integer(m + r * p), field.from_integer(m)
        ):
            return f"field={field.descriptor} m={m} r={r}"

    if ctx.enabled(("prime",)):
        ctx.repeat(instance)


# Node tables


def _table_instance(ctx: CheckContext, kinds, body, k_max=None):
    """Trials over random tables; `body(field, table)` returns a failure."""

    def instance():
        field = ctx.pick_field(kinds)
        k = ctx.draw_k(COMPLEX_MAX_K if field.kind == "complex" else k_max)
        table = ctx.build_table(field, ctx.draw_nodes(field, k))
        return body(field, table)

    if ctx.enabled(kinds):
        ctx.repeat(instance)


@registry.register_check("coefficient_product")
def coefficient_product(ctx: CheckContext):
    def body(field, table):
        for j, residual in enumerate(coefficient_residuals(table), start=1):
            if not field.is_zero(residual):
                return f"j={j} {describe(field, nodes=table.nodes)}"

    _table_instance(ctx, ALL_KINDS, body)


@registry.register_check("coefficient_sum_zero")
def coefficient_sum_zero(ctx: CheckContext):
    def body(field, table):
        total = field.sum(table.coeffs)
        if field.is_exact:
            ok = field.is_zero(total)
        else:
            scale = max([1.0] + [abs(c) for c in table.coeffs])
            ok = abs(total) <= field.tolerance * scale
        if not ok:
            return f"sum={field.encode(total)} " + describe(
                field, nodes=table.nodes
            )

    _table_instance(ctx, ALL_KINDS, body)


@registry.register_check("vandermonde_brute_force")
def vandermonde_brute_force(ctx: CheckContext):
    def instance():
        field = ctx.pick_field()
        nodes = random_nodes(field, ctx.draw_k(BRUTE_FORCE_MAX_K), ctx.rng)
        formula = vandermonde_det(field, nodes)
        brute = brute_force_det(field, vandermonde_matrix(field, nodes))
        if not field.equals(formula, brute):
            return describe(field, nodes=nodes)

    if ctx.enabled():
        ctx.repeat(instance)


@registry.register_check("cofactor_ratio")
def cofactor_ratio(ctx: CheckContext):
    def body(field, table):
        expected = vandermonde_det(field, table.nodes)
        if table.k % 2 == 0:
            expected = field.neg(expected)
        ratios = cofactor_ratios(field, table.nodes, table.coeffs)
        for j, ratio in enumerate(ratios, start=1):
            if not field.equals(ratio, expected):
                return f"j={j} " + describe(
                    field, nodes=table.nodes, ratio=ratio
                )

    _table_instance(ctx, EXACT_KINDS, body, BRUTE_FORCE_MAX_K)


def _laplace_failure(field: Field, table: NodeTable) -> Optional[str]:
    for result in laplace_zero_check(table):
        if not result.passed:
            return f"n={result.n} " + describe(
                field, nodes=table.nodes, residual=result.residual
            )
    total = field.sum(table.coeffs)
    if not field.is_zero(total):
        return describe(field, nodes=table.nodes, sum=total)
    return None


@registry.register_check("laplace_zero")
def laplace_zero(ctx: CheckContext):
    _table_instance(ctx, EXACT_KINDS, _laplace_failure)


@registry.register_check("table_round_trip")
def table_round_trip(ctx: CheckContext):
    def body(field, table):
        if deserialize_table(serialize_table(table)) != table:
            return describe(field, nodes=table.nodes)

    _table_instance(ctx, ALL_KINDS, body)


@registry.register_check("tamper_detection")
def tamper_detection(ctx: CheckContext):
    """Tampered coefficient and duplicated node lines must be rejected."""

    def rejected(data: bytes) -> bool:
        try:
            deserialize_table(data)
        except ValueError:
            return True
        return False

    def body(field, table):
        lines = serialize_table(table).decode("utf-8").splitlines()
        first_coeff = next(
            i for i, line in enumerate(lines) if line.startswith("coeff ")
        )
        bumped = field.add(table.coeffs[0], field.one)
        tampered = list(lines)
        tampered[first_coeff] = f"coeff {field.encode(bumped)}"
        duplicated = list(lines)
        duplicated[4] = duplicated[3]
        for kind, variant in (("coeff", tampered), ("node", duplicated)):
            if not rejected(("\n".join(variant) + "\n").encode("utf-8")):
                return f"{kind} tamper accepted " + describe(
                    field, nodes=table.nodes
                )

    _table_instance(ctx, ALL_KINDS, body)


# Evaluator


@registry.register_check("central_identity")
def central_identity(ctx: CheckContext):
    """
    eval_power agrees with pow_oracle for every n in [0, k-1]; the
    table also passes the Laplace zero sums.
    """

    def body(field, table):
        failure = _laplace_failure(field, table)
        if failure is not None:
            return failure
        a = ctx.draw_base(field, table.nodes)
        for n in range(table.k):
            value = eval_power(table, a, n).value
            if not field.equals(value, pow_oracle(field, a, n)):
                return f"n={n} " + describe(
                    field, nodes=table.nodes, a=a, value=value
                )

    _table_instance(ctx, EXACT_KINDS, body)


@registry.register_check("complex_central_identity")
def complex_central_identity(ctx: CheckContext):
    def body(field, table):
        a = ctx.draw_base(field, table.nodes)
        for n in range(table.k):
            value = eval_power(table, a, n).value
            if not field.equals(value, pow_oracle(field, a, n)):
                return f"n={n} " + describe(field, k=table.k, a=a, value=value)

    _table_instance(ctx, ("complex",), body)


@registry.register_check("tree_reduce_sequential")
def tree_reduce_sequential(ctx: CheckContext):
    def instance():
        field = ctx.pick_field()
        xs = [
            field.random_element(ctx.rng)
            for _ in range(ctx.rng.randint(1, 1000))
        ]
        total, _ = tree_reduce(field, xs)
        sequential = field.zero
        for x in xs:
            sequential = field.add(sequential, x)
        if not field.equals(total, sequential):
            return f"field={field.descriptor} m={len(xs)}"

    if ctx.enabled():
        ctx.repeat(instance)


@registry.register_check("reduction_depth")
def reduction_depth(ctx: CheckContext):
    field = make_field(FieldDescriptor.rational())
    for k in range(2, REDUCTION_MAX_K + 1):
        expected = 0
        while 2**expected < k:
            expected += 1
        _, depth = tree_reduce(field, [field.one] * k)
        report = cost_report(k, k - 1)
        ctx.record(
            None
            if depth == expected == report.vexp_reduction_depth
            else f"k={k} depth={depth} expected={expected}"
        )


@registry.register_check("binexp_count")
def binexp_count(ctx: CheckContext):
    for _ in range(BINEXP_SAMPLES):
        n = ctx.rng.randrange(1, 2**BINEXP_MAX_BITS)
        expected = (len(bin(n)) - 3) + sum(int(b) for b in bin(n)[2:]) - 1
        counted = binexp_multiplications(n)
        reported = cost_report(n + 1, n).binexp_multiplications
        ctx.record(
            None
            if counted == reported == expected
            else f"n={n} counted={counted} expected={expected}"
        )


@registry.register_check("shifted_identity")
def shifted_identity(ctx: CheckContext):
    def body(field, table):
        alpha = field.random_element(ctx.rng)
        beta = random_base(field, [field.zero], ctx.rng)
        moved = [field.add(alpha, field.mul(beta, p)) for p in table.nodes]
        a = random_base(field, moved, ctx.rng)
        value = eval_shifted(table, alpha, beta, a)
        if not field.equals(value, pow_oracle(field, a, table.k - 1)):
            return describe(
                field, nodes=table.nodes, alpha=alpha, beta=beta, a=a
            )

    _table_instance(ctx, EXACT_KINDS, body)


# Determinant identities


def _determinant_instance(ctx: CheckContext, check):
    def instance():
        field = ctx.pick_field()
        nodes = random_nodes(field, ctx.draw_k(BRUTE_FORCE_MAX_K), ctx.rng)
        a = random_base(field, nodes, ctx.rng)
        outcome = check(field, nodes, a)
        if not outcome.passed:
            return "; ".join(outcome.failures) + " " + describe(
                field, nodes=nodes, a=a
            )

    if ctx.enabled():
        ctx.repeat(instance)


@registry.register_check("appendix_determinant")
def appendix_determinant(ctx: CheckContext):
    _determinant_instance(ctx, appendix_determinant_check)


@registry.register_check("zero_determinant")
def zero_determinant(ctx: CheckContext):
    _determinant_instance(ctx, zero_determinant_check)


# Special forms


def _integer_free_base(field: Field, k: int, rng):
    return random_base(field, range_nodes(field, 1, k), rng)


@registry.register_check("binomial_form")
def binomial_form(ctx: CheckContext):
    """
    Binomial weights on nodes 1..k agree with the table and the oracle.
    Instances cycle through every k in range, so `trials` a multiple of
    the range size gives each k the same number of bases.
    """
    upper = min(ctx.config["k_max"], BINOMIAL_MAX_K)
    lower = min(ctx.config["k_min"], upper)
    orders = itertools.cycle(range(lower, upper + 1))

    def instance():
        field = ctx.pick_field()
        k = next(orders)
        a = _integer_free_base(field, k, ctx.rng)
        value = binomial_form_eval(field, k, a)
        table = ctx.build_table(field, range_nodes(field, 1, k))
        via_table = eval_power(table, a, k - 1).value
        expected = pow_oracle(field, a, k - 1)
        if not (
            field.equals(value, expected) and field.equals(via_table, expected)
        ):
            return describe(field, k=k, a=a, value=value, table=via_table)

    if ctx.enabled():
        ctx.repeat(instance)


@registry.register_check("binomial_sign_robustness")
def binomial_sign_robustness(ctx: CheckContext):
    def instance():
        field = ctx.pick_field()
        k = ctx.draw_k(BINOMIAL_MAX_K)
        a = _integer_free_base(field, k, ctx.rng)
        printed = binomial_form_eval(field, k, a, sign="printed")
        derived = binomial_form_eval(field, k, a, sign="derived")
        if not field.equals(printed, derived):
            return describe(field, k=k, a=a)

    if ctx.enabled():
        ctx.repeat(instance)


def _roots_instance(ctx: CheckContext, field: Field, m: int):
    """
    roots_unity_eval = product_form_eval = a**m - 1 and the partial
    fraction sum is its reciprocal. Every other instance moves the extra
    node away from 0.
    """
    roots = roots_of_unity(field, m)
    extra = None
    if ctx.rng.random() < 0.5:
        extra = ctx.draw_base(field, roots + (field.zero,))
    ctx_roots = make_roots_context(field, m, extra)
    a = ctx.draw_base(field, roots + (ctx_roots.extra_node,))

    expected = field.sub(pow_oracle(field, a, m), field.one)
    via_nodes = roots_unity_eval(ctx_roots, a)
    via_product = product_form_eval(ctx_roots, a)
    reciprocal = partial_fraction_eval(ctx_roots, a)
    if not (
        field.equals(via_nodes, expected)
        and field.equals(via_product, expected)
        and field.equals(field.mul(via_nodes, reciprocal), field.one)
    ):
        return f"m={m} " + describe(
            field, extra=ctx_roots.extra_node, a=a, value=via_nodes
        )


@registry.register_check("roots_unity_forms")
def roots_unity_forms(ctx: CheckContext):
    def instance():
        field = ctx.pick_field(("prime",))
        p = field.characteristic
        orders = [m for m in range(2, ROOTS_MAX_M + 1) if (p - 1) % m == 0]
        return _roots_instance(ctx, field, ctx.rng.choice(orders))

    if ctx.enabled(("prime",)):
        ctx.repeat(instance)


@registry.register_check("complex_roots_forms")
def complex_roots_forms(ctx: CheckContext):
    def instance():
        field = ctx.pick_field(("complex",))
        m = ctx.rng.randint(2, COMPLEX_ROOTS_MAX_M)
        return _roots_instance(ctx, field, m)

    if ctx.enabled(("complex",)):
        ctx.repeat(instance)


def check_config(config: Dict, name: str) -> Dict:
    """Suite config with the overrides under `checks.<name>` applied."""
    overrides = (config.get("checks") or {}).get(name, {})
    merged, _ = merge_dicts(config, overrides)
    return merged


def _is_str_list(value) -> bool:
    return isinstance(value, list) and all(isinstance(v, str) for v in value)


def validate_suite_config(config: Dict) -> None:
    for key in INT_KEYS:
        value = config[key]
        if not isinstance(value, int) or isinstance(value, bool):
            raise ValueError(f"{key} must be an integer, got {value!r}")
    if not _is_str_list(config["backends"]):
        raise ValueError(
            f"backends must be a list of names, got {config['backends']!r}"
        )
    unknown = set(config["backends"]) - set(ALL_KINDS)
    if unknown:
        raise ValueError(
            f"Unknown backends in suite config: {sorted(unknown)}"
        )
    if config["select"] is not None:
        if not _is_str_list(config["select"]):
            raise ValueError(
                f"select must be a list of check names, "
                f"got {config['select']!r}"
            )
        unknown = set(config["select"]) - set(registry.list_checks())
        if unknown:
            raise ValueError(
                f"Unknown checks {sorted(unknown)}, expected names from "
                f"{registry.list_checks()}"
            )
    if not isinstance(config["checks"], dict):
        raise ValueError(
            f"checks must map check names to overrides, "
            f"got {config['checks']!r}"
        )
    if config["inject_fault"] not in FAULT_KINDS:
        raise ValueError(
            f"inject_fault must be one of {FAULT_KINDS}, "
            f"got {config['inject_fault']!r}"
        )
    if config["trials"] < 0:
        raise ValueError(f"trials must be >= 0, got {config['trials']}")
    if not 2 <= config["k_min"] <= config["k_max"]:
        raise ValueError(
            f"Need 2 <= k_min <= k_max, got {config['k_min']}.."
            f"{config['k_max']}"
        )
    if config["threads"] < 1:
        raise ValueError(f"threads must be >= 1, got {config['threads']}")
    if not isinstance(config["primes"], list) or not all(
        isinstance(p, int) for p in config["primes"]
    ):
        raise ValueError(
            f"primes must be a list of integers, got {config['primes']!r}"
        )
    if "prime" in config["backends"] and not config["primes"]:
        raise ValueError("The prime backend needs a non-empty primes list")


def run_check(name: str, config: Dict) -> CheckResult:
    ctx = CheckContext(name, check_config(config, name))
    registry.get_check(name)(ctx)
    return ctx.result()


def run_property_suite(config: Optional[Dict] = None) -> VerifyReport:
    """
    Run the selected checks (all registered ones by default) and collect a
    report ordered by check name. Deterministic given the config.
    """
    config, _ = merge_dicts(DEFAULT_SUITE_CONFIG, config or {})
    validate_suite_config(config)

    names = config["select"] or registry.list_checks()
    for name in names:
        validate_suite_config(check_config(config, name))
    if config["inject_fault"] is not None:
        logging.warning(f"Injecting fault '{config['inject_fault']}'")

    start = time.perf_counter()
    results = {}
    with ThreadPool(config["threads"]) as pool:
        jobs = pool.imap_unordered(
            lambda name: run_check(name, config), names
        )
        for result in tqdm(
            jobs,
            total=len(names),
            desc="checks",
            disable=config["hide_progressbar"],
        ):
            results[result.name] = result
            logging.debug(
                f"{result.name}: {result.instances_run} run, "
                f"{result.failures} failed"
            )
    elapsed = time.perf_counter() - start

    report = VerifyReport(
        checks=tuple(results[name] for name in sorted(results)),
        seed=config["seed"],
        elapsed=elapsed,
    )
    logging.info(
        f"Ran {len(report.checks)} checks in {elapsed:.2f}s with "
        f"{report.failures} failures"
    )
    return report
