#
# Copyright (c) 2026 The CRSum Authors.
#
# This file is part of CRSum.
# See the README at the repository root for further info.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
#

"""
Identity Verification Harness

Every identity is one registry entry: a point generator, a hypothesis filter and
two side evaluators. Sweeps evaluate a grid (optionally across worker
processes) and produce order-normalized, byte-stable reports.
"""

from __future__ import annotations

import time
from collections.abc import Callable, Iterator, Mapping, Sequence
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from itertools import product
from math import gcd
from typing import Any, Union

from crsum.classes.arithmetic import (
    is_squarefree,
    jordan_totient,
    klee_phi,
    mobius,
    xi_s,
)
from crsum.classes.config import get_config
from crsum.classes.exceptions import DomainError, HypothesisViolated
from crsum.classes.oracles import (
    MAX_DIRECT_TERMS,
    OracleConfig,
    classical_ramanujan_naive,
    cr_direct_adaptive,
    totient_counting,
)
from crsum.classes.sums import (
    CRQuery,
    core_shift_sides,
    cr_mobius,
    cr_multiplicative,
    cr_sum,
    hoelder_corrected_value,
    hoelder_literal_value,
    reciprocity_sides,
    twisted,
    twisted_sum_rhs,
    vanishing_applies,
    xi_divisor_sum,
)
from crsum.constants import IdentityId
from crsum.logger import get_logger

logger = get_logger(__name__)

Value = Union[int, Fraction]
Point = tuple[int, ...]


class GridFilter(str, Enum):
    """Predicates that thin a grid before any evaluation."""

    SQUAREFREE_K = "squarefree-k"
    SQUAREFREE_N = "squarefree-n"
    COPRIME_PAIRS = "coprime-pairs"


@dataclass(frozen=True)
class GridSpec:
    """Bounds of a sweep: 1..k_max, 1..n_max, every s in s_set."""

    k_max: int
    n_max: int
    s_set: tuple[int, ...]
    filters: frozenset[GridFilter] = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        if self.k_max < 1 or self.n_max < 1:
            raise DomainError(f"grid bounds must be >= 1, got k_max={self.k_max}, n_max={self.n_max}")
        if not self.s_set:
            raise DomainError("s_set must not be empty")
        if any(s < 1 for s in self.s_set):
            raise DomainError(f"every s must be >= 1, got {list(self.s_set)}")
        object.__setattr__(self, "s_set", tuple(sorted(set(self.s_set))))
        object.__setattr__(self, "filters", frozenset(GridFilter(f) for f in self.filters))

    @classmethod
    def from_dict(cls, data: Mapping[str, Any]) -> GridSpec:
        """Build from a config/JSON mapping with keys k_max, n_max, s and optional filters."""
        return cls(
            k_max=int(data["k_max"]),
            n_max=int(data["n_max"]),
            s_set=tuple(int(s) for s in data.get("s", data.get("s_set", ()))),
            filters=frozenset(GridFilter(f) for f in data.get("filters", ())),
        )

    def to_dict(self) -> dict[str, Any]:
        return {
            "k_max": self.k_max,
            "n_max": self.n_max,
            "s_set": list(self.s_set),
            "filters": sorted(f.value for f in self.filters),
        }


@dataclass(frozen=True)
class Identity:
    """One registered identity."""

    id: IdentityId
    description: str
    fields: tuple[str, ...]
    points: Callable[[GridSpec], Iterator[Point]]
    lhs: Callable[..., Value]
    rhs: Callable[..., Value]
    hypothesis: Callable[..., bool] = lambda *_: True
    expect_failures: bool = False


@dataclass(frozen=True)
class CheckResult:
    """Outcome of one identity at one point."""

    holds: bool
    lhs: Value
    rhs: Value


@dataclass(frozen=True, order=True)
class Failure:
    """A counterexample; ordering is lexicographic in the inputs."""

    point: Point
    lhs: str
    rhs: str


@dataclass
class VerificationReport:
    """Result of sweeping one identity over a grid."""

    identity: IdentityId
    grid: GridSpec
    fields: tuple[str, ...]
    cases_checked: int
    skipped: int
    failures: list[Failure]
    failure_count: int
    wall_time: float | None = None

    @property
    def passed(self) -> bool:
        return self.failure_count == 0

    def to_dict(self) -> dict[str, Any]:
        """JSON-ready dictionary; key order is fixed."""
        return {
            "identity": self.identity.value,
            "grid": self.grid.to_dict(),
            "cases_checked": self.cases_checked,
            "skipped": self.skipped,
            "failure_count": self.failure_count,
            "failures": [
                {"inputs": dict(zip(self.fields, f.point)), "lhs": f.lhs, "rhs": f.rhs}
                for f in self.failures
            ],
            "wall_time_s": None if self.wall_time is None else round(self.wall_time, 3),
        }


def format_value(value: Value) -> str:
    """Exact decimal/rational string, independent of locale."""
    return str(value)


# Point generators


def _kns_points(grid: GridSpec) -> Iterator[Point]:
    for k, n, s in product(range(1, grid.k_max + 1), range(1, grid.n_max + 1), grid.s_set):
        yield (k, n, s)


def _kmns_points(grid: GridSpec) -> Iterator[Point]:
    ns = range(1, grid.n_max + 1)
    for k, m, n, s in product(range(1, grid.k_max + 1), ns, ns, grid.s_set):
        yield (k, m, n, s)


def _ns_points(grid: GridSpec) -> Iterator[Point]:
    for n, s in product(range(1, grid.n_max + 1), grid.s_set):
        yield (n, s)


def _passes_filters(fields: Sequence[str], point: Point, filters: frozenset[GridFilter]) -> bool:
    if not filters:
        return True
    values = dict(zip(fields, point))
    second = [values[name] for name in ("m", "n") if name in values]
    if GridFilter.SQUAREFREE_K in filters and "k" in values and not is_squarefree(values["k"]):
        return False
    if GridFilter.SQUAREFREE_N in filters and not all(is_squarefree(v) for v in second):
        return False
    if GridFilter.COPRIME_PAIRS in filters:
        pair = second if len(second) == 2 else [values.get("k", 1), *second]
        if len(pair) == 2 and gcd(*pair) != 1:
            return False
    return True


# Side evaluators


def _mult_lhs(k: int, m: int, n: int, s: int) -> int:
    return mobius(k) * cr_sum(k, m * n, s)


def _mult_rhs(k: int, m: int, n: int, s: int) -> int:
    mu = mobius(k)
    return (mu * cr_sum(k, m, s)) * (mu * cr_sum(k, n, s))


def _oracle_direct(k: int, n: int, s: int) -> int:
    value, _ = cr_direct_adaptive(CRQuery(k, n, s), OracleConfig.from_config(get_config()))
    return value


def _classical_naive(k: int, n: int, s: int) -> int:
    return classical_ramanujan_naive(k, n, OracleConfig.from_config(get_config()))


REGISTRY: dict[IdentityId, Identity] = {
    identity.id: identity
    for identity in (
        Identity(
            id=IdentityId.MULT_IN_N,
            description="mu(k) c_k(mn) = [mu(k) c_k(m)] [mu(k) c_k(n)] for squarefree k, coprime m, n",
            fields=("k", "m", "n", "s"),
            points=_kmns_points,
            hypothesis=lambda k, m, n, s: is_squarefree(k) and gcd(m, n) == 1,
            lhs=_mult_lhs,
            rhs=_mult_rhs,
        ),
        Identity(
            id=IdentityId.TWISTED_SUM,
            description="mu(k) c_k(n) = sum over d^s | (k^s, n)_s of d^s mu(d), squarefree k",
            fields=("k", "n", "s"),
            points=_kns_points,
            hypothesis=lambda k, n, s: is_squarefree(k),
            lhs=lambda k, n, s: twisted(CRQuery(k, n, s)),
            rhs=twisted_sum_rhs,
        ),
        Identity(
            id=IdentityId.VANISHING,
            description="c_k(n) = 0 whenever (k*)^s does not divide n",
            fields=("k", "n", "s"),
            points=_kns_points,
            hypothesis=vanishing_applies,
            lhs=cr_sum,
            rhs=lambda k, n, s: 0,
        ),
        Identity(
            id=IdentityId.CORE_SHIFT,
            description="c_k(n (k*)^s) = (k*)^s c_core(k)(n)",
            fields=("k", "n", "s"),
            points=_kns_points,
            lhs=lambda k, n, s: core_shift_sides(k, n, s)[0],
            rhs=lambda k, n, s: core_shift_sides(k, n, s)[1],
        ),
        Identity(
            id=IdentityId.SYMMETRY,
            description="mu(k) c_k(n^s) = mu(n) c_n(k^s) for squarefree k, n",
            fields=("k", "n", "s"),
            points=_kns_points,
            hypothesis=lambda k, n, s: is_squarefree(k) and is_squarefree(n),
            lhs=lambda k, n, s: mobius(k) * cr_sum(k, n**s, s),
            rhs=lambda k, n, s: mobius(n) * cr_sum(n, k**s, s),
        ),
        Identity(
            id=IdentityId.RECIPROCITY,
            description="mu(core k)/(k*)^s c_k(n^s (k*)^s) = mu(core n)/(n*)^s c_n(k^s (n*)^s)",
            fields=("k", "n", "s"),
            points=_kns_points,
            lhs=lambda k, n, s: reciprocity_sides(k, n, s)[0],
            rhs=lambda k, n, s: reciprocity_sides(k, n, s)[1],
        ),
        Identity(
            id=IdentityId.XI_DIVISOR_SUM,
            description="xi_k^(s)(n) = sum_{d | k} c_d^(s)(n)",
            fields=("k", "n", "s"),
            points=_kns_points,
            lhs=xi_s,
            rhs=xi_divisor_sum,
        ),
        Identity(
            id=IdentityId.ROUTE_AGREEMENT,
            description="Mobius divisor sum = prime-power product",
            fields=("k", "n", "s"),
            points=_kns_points,
            lhs=lambda k, n, s: cr_mobius(CRQuery(k, n, s)),
            rhs=lambda k, n, s: cr_multiplicative(CRQuery(k, n, s)),
        ),
        Identity(
            id=IdentityId.HOELDER_LITERAL_AUDIT,
            description="printed Hoelder quotient J_s(n) mu(m) / J_s(m), m = n/(k,n), against c_k(n)",
            fields=("k", "n", "s"),
            points=_kns_points,
            lhs=lambda k, n, s: hoelder_literal_value(CRQuery(k, n, s)),
            rhs=lambda k, n, s: cr_mobius(CRQuery(k, n, s)),
            expect_failures=True,
        ),
        Identity(
            id=IdentityId.HOELDER_CORRECTED,
            description="J_s(k) mu(k/d) / J_s(k/d), d largest divisor of k with d^s | n, against c_k(n)",
            fields=("k", "n", "s"),
            points=_kns_points,
            lhs=lambda k, n, s: hoelder_corrected_value(CRQuery(k, n, s)),
            rhs=lambda k, n, s: cr_mobius(CRQuery(k, n, s)),
        ),
        Identity(
            id=IdentityId.ORACLE_AGREEMENT,
            description="direct exponential sum (rounded) = Mobius divisor sum",
            fields=("k", "n", "s"),
            points=_kns_points,
            hypothesis=lambda k, n, s: k**s <= MAX_DIRECT_TERMS,
            lhs=_oracle_direct,
            rhs=lambda k, n, s: cr_mobius(CRQuery(k, n, s)),
        ),
        Identity(
            id=IdentityId.CLASSICAL_REDUCTION,
            description="s = 1 values equal the classical Ramanujan sum",
            fields=("k", "n", "s"),
            points=_kns_points,
            hypothesis=lambda k, n, s: s == 1,
            lhs=_classical_naive,
            rhs=lambda k, n, s: cr_mobius(CRQuery(k, n, 1)),
        ),
        Identity(
            id=IdentityId.JORDAN_COUNT,
            description="J_s(n) = number of s-tuples mod n jointly coprime to n",
            fields=("n", "s"),
            points=_ns_points,
            lhs=lambda n, s: totient_counting(s, n, "jordan"),
            rhs=lambda n, s: jordan_totient(s, n),
        ),
        Identity(
            id=IdentityId.KLEE_COUNT,
            description="Phi_s(n) = number of 1 <= m <= n with (m, n)_s = 1",
            fields=("n", "s"),
            points=_ns_points,
            lhs=lambda n, s: totient_counting(s, n, "klee"),
            rhs=lambda n, s: klee_phi(s, n),
        ),
    )
}


def get_identity(identity: IdentityId | str) -> Identity:
    """Look up a registered identity by id or its string value."""
    try:
        return REGISTRY[IdentityId(identity)]
    except ValueError as e:
        known = ", ".join(i.value for i in IdentityId)
        raise DomainError(f"unknown identity {identity!r}; known: {known}") from e


def _as_point(identity: Identity, point: Point | Mapping[str, int]) -> Point:
    if isinstance(point, Mapping):
        try:
            return tuple(int(point[name]) for name in identity.fields)
        except KeyError as e:
            raise DomainError(f"{identity.id.value} needs inputs {identity.fields}") from e
    if len(point) != len(identity.fields):
        raise DomainError(f"{identity.id.value} needs inputs {identity.fields}, got {point}")
    return tuple(point)


def check_one(identity: IdentityId | str, point: Point | Mapping[str, int]) -> CheckResult:
    """
    Evaluate both sides of an identity at one point.

    :param identity: identity id
    :param point: inputs in the identity's field order, or a mapping by field name
    :raises HypothesisViolated: the point fails the identity's precondition
    """
    entry = get_identity(identity)
    values = _as_point(entry, point)
    if not entry.hypothesis(*values):
        raise HypothesisViolated(
            f"{entry.id.value}: {dict(zip(entry.fields, values))} violates the hypothesis",
            identity=entry.id.value,
            point=values,
        )
    lhs = entry.lhs(*values)
    rhs = entry.rhs(*values)
    return CheckResult(holds=lhs == rhs, lhs=lhs, rhs=rhs)


def _evaluate_chunk(identity_value: str, points: list[Point]) -> tuple[int, int, list[Failure]]:
    entry = REGISTRY[IdentityId(identity_value)]
    checked = 0
    skipped = 0
    failures: list[Failure] = []
    for point in points:
        if not entry.hypothesis(*point):
            skipped += 1
            continue
        checked += 1
        lhs = entry.lhs(*point)
        rhs = entry.rhs(*point)
        if lhs != rhs:
            failures.append(Failure(point, format_value(lhs), format_value(rhs)))
    return checked, skipped, failures


def _init_worker(settings: dict[str, Any]) -> None:
    get_config().load_from_dict(settings)


def _split(points: list[Point], parts: int) -> list[list[Point]]:
    size, rem = divmod(len(points), parts)
    chunks = []
    start = 0
    for i in range(parts):
        end = start + size + (1 if i < rem else 0)
        if end > start:
            chunks.append(points[start:end])
        start = end
    return chunks


def default_grid(identity: IdentityId | str) -> GridSpec:
    """The configured default grid of an identity."""
    entry = get_identity(identity)
    data = get_config().grid(entry.id.value)
    if data is None:
        raise DomainError(f"no default grid configured for {entry.id.value}")
    return GridSpec.from_dict(data)


def sweep(
    identity: IdentityId | str,
    grid: GridSpec,
    jobs: int | None = None,
    include_timing: bool | None = None,
) -> VerificationReport:
    """
    Sweep an identity over a grid.

    Points removed by the grid filters are not counted; points failing the
    identity's hypothesis are counted as skipped. Failures come back sorted by
    input regardless of how the work was split.

    :param identity: identity id
    :param grid: bounds and filters
    :param jobs: worker processes (default from configuration)
    :param include_timing: record wall time (default from configuration)
    :return: VerificationReport
    """
    config = get_config()
    entry = get_identity(identity)
    jobs = config.sweep_jobs if jobs is None else max(1, jobs)
    include_timing = config.include_timing if include_timing is None else include_timing

    started = time.perf_counter()
    points = [p for p in entry.points(grid) if _passes_filters(entry.fields, p, grid.filters)]
    logger.debug("%s: %d grid points, %d job(s)", entry.id.value, len(points), jobs)

    if jobs == 1 or len(points) < 2:
        results = [_evaluate_chunk(entry.id.value, points)]
    else:
        chunks = _split(points, jobs)
        with ProcessPoolExecutor(
            max_workers=len(chunks), initializer=_init_worker, initargs=(config.to_dict(),)
        ) as pool:
            futures = [pool.submit(_evaluate_chunk, entry.id.value, chunk) for chunk in chunks]
            results = [future.result() for future in futures]

    checked = sum(r[0] for r in results)
    skipped = sum(r[1] for r in results)
    failures = sorted(f for r in results for f in r[2])
    elapsed = time.perf_counter() - started

    report = VerificationReport(
        identity=entry.id,
        grid=grid,
        fields=entry.fields,
        cases_checked=checked,
        skipped=skipped,
        failures=failures[: config.max_listed_failures],
        failure_count=len(failures),
        wall_time=elapsed if include_timing else None,
    )
    logger.info(
        "%s: %d checked, %d skipped, %d failure(s) in %.2fs",
        entry.id.value,
        checked,
        skipped,
        len(failures),
        elapsed,
    )
    return report
