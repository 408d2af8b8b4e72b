"""Exhaustive and sampled sweeps that make up the certification suite."""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable

from .cert import (
    dim_match,
    full_flag,
    jet_dependence_check,
    lemma4_certify,
    prop2_certify,
    so5_remark_check,
)
from .linalg import RationalMatrix, SeriesMatrix, charpoly_by_cofactors, charpoly_coeffs, jordan_type
from .liealg import (
    AlgebraKind,
    FlagSpec,
    centralizer_dim_oracle,
    check_dual_lattice,
    classical_nilpotent,
    compositions,
    isotropic_flags,
    jordan_nilpotent,
    richardson_partition,
    trial_rng,
)
from .partitions import (
    Partition,
    centralizer_dim_formula,
    cor3_sides,
    dual_partition,
    iter_partitions,
    lemma3_sides,
)
from .report import CertReport, DimensionBreakdown


def default_workers() -> int:
    return int(os.environ.get("NILCONE_WORKERS", "1"))


def parallel_map(fn: Callable, items: Iterable, workers: int | None = None) -> list:
    """Order-preserving map, optionally across processes."""
    items = list(items)
    workers = default_workers() if workers is None else workers
    if workers <= 1 or len(items) <= 1:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))


def lemma3_sweep(max_size: int = 40) -> CertReport:
    report = CertReport("lemma3", {"max_size": max_size})
    count = 0
    for m in range(max_size + 1):
        for mu in iter_partitions(m):
            lhs, rhs = lemma3_sides(mu)
            count += 1
            if lhs != rhs:
                report.violations.append(f"{mu}: {lhs} != {rhs}")
    report.stats["partitions"] = count
    return report


def cor3_sweep(max_n: int = 20) -> CertReport:
    report = CertReport("cor3", {"max_n": max_n})
    count = 0
    for n in range(1, max_n + 1):
        for mu in iter_partitions(2 * n, "symplectic"):
            lhs, rhs = cor3_sides(mu)
            count += 1
            if lhs != rhs:
                report.violations.append(f"{mu}: {lhs} != {rhs}")
    report.stats["partitions"] = count
    return report


def so5_report() -> CertReport:
    out = so5_remark_check()
    report = CertReport("so5-remark", {"partition": out["partition"]}, stats=out)
    # the pass condition is the expected failure of the identity
    if (out["lhs"], out["rhs"], out["equal"]) != (3, 4, False):
        report.violations.append(f"expected lhs=3, rhs=4, unequal; got {out}")
    return report


def centralizer_sweep(max_sp: int = 8, max_so: int = 7) -> CertReport:
    report = CertReport("centralizer", {"max_sp": max_sp, "max_so": max_so})
    cases = [("sp", m) for m in range(2, max_sp + 1, 2)] + [("so", m) for m in range(1, max_so + 1)]
    count = 0
    for fam, m in cases:
        kind = AlgebraKind(fam, m)
        filt = "symplectic" if fam == "sp" else "orthogonal"
        for mu in iter_partitions(m, filt):
            e = classical_nilpotent(kind, mu)
            oracle = centralizer_dim_oracle(kind, e)
            formula = centralizer_dim_formula(mu, fam)
            count += 1
            if oracle != formula:
                report.violations.append(f"{kind} {mu}: oracle {oracle} != formula {formula}")
    report.stats["cases"] = count
    return report


def charpoly_oracle_sweep(count: int = 200, max_m: int = 4, bound: int = 9, seed: int = 0) -> CertReport:
    report = CertReport("oracle-charpoly", {"count": count, "max_m": max_m, "bound": bound, "seed": seed})
    for t in range(count):
        m = 1 + t % max_m
        rng = trial_rng(seed, t, "charpoly-oracle")
        M = RationalMatrix(rng.integers(-bound, bound + 1, size=(m, m)).tolist())
        got = charpoly_coeffs(SeriesMatrix.from_rational(M, 4))
        want = charpoly_by_cofactors(M)
        for j, (F, w) in enumerate(zip(got, want), start=1):
            if F[0] != w or any(F[e] for e in range(1, F.precision)):
                report.violations.append(f"trial {t} (m={m}): F_{j} = {F} but cofactors give {w}")
    return report


def gl_richardson_sweep(max_m: int = 5, trials: int = 25, bound: int = 9, seed: int = 0) -> CertReport:
    """Sampled Richardson type against the transpose of the sorted block sizes."""
    report = CertReport("oracle-gl-richardson", {"max_m": max_m, "trials": trials, "seed": seed})
    count = 0
    for m in range(1, max_m + 1):
        for comp in compositions(m):
            flag = FlagSpec(AlgebraKind("gl", m), comp)
            sampled = richardson_partition(flag, trials, bound, seed)
            closed = dual_partition(Partition(sorted(comp, reverse=True)))
            count += 1
            if sampled != closed:
                report.violations.append(f"{flag}: sampled {sampled} != closed form {closed}")
    report.stats["flags"] = count
    return report


def jordan_roundtrip_sweep(max_m: int = 10) -> CertReport:
    report = CertReport("oracle-jordan", {"max_m": max_m})
    count = 0
    for m in range(1, max_m + 1):
        for mu in iter_partitions(m):
            got = jordan_type(jordan_nilpotent(mu))
            count += 1
            if got != mu:
                report.violations.append(f"{mu} -> {got}")
    report.stats["partitions"] = count
    return report


def dual_lattice_sweep(precision: int = 12) -> list[CertReport]:
    flags = [f for m in range(1, 5) for f in isotropic_flags(AlgebraKind("gl", m))]
    flags += isotropic_flags(AlgebraKind("sp", 4)) + isotropic_flags(AlgebraKind("sp", 6))
    return [check_dual_lattice(f, precision) for f in flags]


def jet_sweep(max_m: int = 3, max_k: int = 6, trials: int = 50, seed: int = 0, precision: int = 12) -> list[CertReport]:
    return [
        jet_dependence_check(m, j, k, trials, seed, precision)
        for m in range(1, max_m + 1)
        for j in range(1, m + 1)
        for k in range(max_k + 1)
    ]


def _prop2_task(args):
    mu, trials, bound, precision, seed = args
    return prop2_certify(mu, trials, bound, precision, seed)


def prop2_sweep(max_m: int = 6, trials: int = 100, bound: int = 9, precision: int = 12, seed: int = 0, workers: int | None = None) -> list[CertReport]:
    tasks = [(mu, trials, bound, precision, seed) for m in range(1, max_m + 1) for mu in iter_partitions(m)]
    return parallel_map(_prop2_task, tasks, workers)


def _lemma4_task(args):
    flag, trials, bound, precision, seed = args
    return lemma4_certify(flag, trials, bound, precision, seed)


def lemma4_sweep(max_n: int = 3, trials: int = 100, bound: int = 9, precision: int = 12, seed: int = 0, workers: int | None = None) -> list[CertReport]:
    tasks = [
        (f, trials, bound, precision, seed)
        for n in range(1, max_n + 1)
        for f in isotropic_flags(AlgebraKind("sp", 2 * n))
    ]
    return parallel_map(_lemma4_task, tasks, workers)


def sl_dim_sweep(seed: int = 0) -> list[DimensionBreakdown]:
    return [
        dim_match(g, full_flag(AlgebraKind("sl", m)), seed=seed)
        for m in range(2, 6)
        for g in range(2, 6)
    ]


def sp_dim_sweep(max_n: int = 3, genera=(2, 3), seed: int = 0) -> list[DimensionBreakdown]:
    return [
        dim_match(g, f, seed=seed)
        for n in range(1, max_n + 1)
        for f in isotropic_flags(AlgebraKind("sp", 2 * n))
        for g in genera
    ]


@dataclass
class SuiteResult:
    sections: list[tuple[str, list]] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(_ok(item) for _, items in self.sections for item in items)

    def to_json(self) -> dict:
        return {
            "suite": [
                {"section": name, "results": [item.to_json() for item in items]}
                for name, items in self.sections
            ],
            "pass": self.passed,
        }


def _ok(item) -> bool:
    return item.match if isinstance(item, DimensionBreakdown) else item.passed


def run_suite(
    trials: int = 100,
    seed: int = 0,
    precision: int = 12,
    bound: int = 9,
    max_size: int = 40,
    jet_trials: int = 50,
    workers: int | None = None,
    progress: Callable[[str], None] | None = None,
) -> SuiteResult:
    """The full battery, cheap exhaustive checks first."""
    result = SuiteResult()

    def add(name, items):
        result.sections.append((name, items))
        if progress:
            ok = all(_ok(i) for i in items)
            progress(f"{'PASS' if ok else 'FAIL'} {name} ({len(items)} checks)")

    add("lemma3", [lemma3_sweep(max_size)])
    add("cor3", [cor3_sweep(max_size // 2)])
    add("so5-remark", [so5_report()])
    add("centralizer", [centralizer_sweep()])
    add("oracles", [
        charpoly_oracle_sweep(seed=seed, bound=bound),
        gl_richardson_sweep(seed=seed, bound=bound),
        jordan_roundtrip_sweep(),
    ])
    add("dim-match-sl", sl_dim_sweep(seed))
    add("dim-match-sp", sp_dim_sweep(seed=seed))
    add("dual-lattice", dual_lattice_sweep(precision))
    add("jet", jet_sweep(trials=jet_trials, seed=seed, precision=precision))
    add("prop2", prop2_sweep(trials=trials, bound=bound, precision=precision, seed=seed, workers=workers))
    add("lemma4", lemma4_sweep(trials=trials, bound=bound, precision=precision, seed=seed, workers=workers))
    return result
