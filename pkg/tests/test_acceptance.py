"""Acceptance battery: one test per criterion, each printing a PASS/FAIL line.

Time limits are wall-clock on a single process.
"""

import subprocess
import sys
import time

from nilcone import sweeps
from nilcone.cert import dim_match
from nilcone.liealg import FlagSpec
from nilcone.partitions import iter_partitions


def _record(capsys, number, name, ok, elapsed, limit, detail=""):
    within = limit is None or elapsed < limit
    verdict = "PASS" if ok and within else "FAIL"
    budget = f" (limit {limit}s)" if limit is not None else ""
    with capsys.disabled():
        print(f"\n[{verdict}] criterion {number:2d} {name}: {elapsed:.2f}s{budget} {detail}".rstrip())
    assert ok, detail
    assert within, f"took {elapsed:.2f}s, limit {limit}s"


def _timed(fn):
    start = time.perf_counter()
    out = fn()
    return out, time.perf_counter() - start


def _violations(reports):
    return [v for r in reports for v in r.violations]


def test_criterion_01_lemma3(capsys):
    report, dt = _timed(lambda: sweeps.lemma3_sweep(40))
    at_forty = sum(1 for _ in iter_partitions(40))
    ok = report.passed and at_forty == 37338 and report.stats["partitions"] == 215308
    _record(capsys, 1, "weighted part-sum identity, m <= 40", ok, dt, 10,
            f"{report.stats['partitions']} partitions, {len(report.violations)} violations")


def test_criterion_02_cor3(capsys):
    report, dt = _timed(lambda: sweeps.cor3_sweep(20))
    _record(capsys, 2, "symplectic identity, n <= 20", report.passed, dt, 10,
            f"{report.stats['partitions']} partitions, {len(report.violations)} violations")


def test_criterion_03_so5(capsys):
    report, dt = _timed(sweeps.so5_report)
    ok = report.passed and report.stats["lhs"] == 3 and report.stats["rhs"] == 4
    _record(capsys, 3, "so(5) counterexample", ok, dt, 1,
            f"lhs={report.stats['lhs']} rhs={report.stats['rhs']}")


def test_criterion_04_prop2(capsys):
    reports, dt = _timed(lambda: sweeps.prop2_sweep(6, trials=100, bound=9, precision=12, seed=0, workers=1))
    bad = _violations(reports)
    ok = not bad and len(reports) == 1 + 2 + 3 + 5 + 7 + 11
    _record(capsys, 4, "valuation bound on e + z gl[[z]], m <= 6", ok, dt, 120,
            f"{len(reports)} partitions, {len(bad)} violations")


def test_criterion_05_lemma4(capsys):
    reports, dt = _timed(lambda: sweeps.lemma4_sweep(3, trials=100, bound=9, precision=12, seed=0, workers=1))
    bad = _violations(reports)
    ok = not bad and len(reports) == 1 + 3 + 7
    _record(capsys, 5, "dual-lattice valuation bound, sp n <= 3", ok, dt, 180,
            f"{len(reports)} flags, {len(bad)} violations")


def test_criterion_06_dual_lattice(capsys):
    reports, dt = _timed(lambda: sweeps.dual_lattice_sweep(12))
    bad = _violations(reports)
    _record(capsys, 6, "dual lattice inclusion and maximality", not bad, dt, 30,
            f"{len(reports)} flags, {len(bad)} violations")


def test_criterion_07_jet(capsys):
    reports, dt = _timed(lambda: sweeps.jet_sweep(3, 6, trials=50, seed=0, precision=12))
    bad = _violations(reports)
    ok = not bad and len(reports) == (1 + 2 + 3) * 7
    _record(capsys, 7, "finite-jet dependence", ok, dt, 30,
            f"{len(reports)} (m, j, k) cases, {len(bad)} violations")


def test_criterion_08_sl_dims(capsys):
    rows, dt = _timed(lambda: sweeps.sl_dim_sweep(0))
    sl2 = dim_match(2, FlagSpec.parse("sl:1,1"))
    ok = all(r.match for r in rows) and len(rows) == 16 and (sl2.total, sl2.bun_dim) == (4, 4)
    _record(capsys, 8, "sl full-flag dimension match", ok, dt, 5,
            f"{sum(r.match for r in rows)}/{len(rows)} match; SL2 g=2: {sl2.total} = {sl2.bun_dim}")


def test_criterion_09_sp_dims(capsys):
    rows, dt = _timed(lambda: sweeps.sp_dim_sweep(3, (2, 3), seed=0))
    borel = dim_match(2, FlagSpec.parse("sp4:1,2"))
    ok = all(r.match for r in rows) and len(rows) == 22 and (borel.total, borel.bun_dim) == (14, 14)
    _record(capsys, 9, "symplectic dimension match", ok, dt, 60,
            f"{sum(r.match for r in rows)}/{len(rows)} match; sp4 Borel g=2: {borel.total} = {borel.bun_dim}")


def test_criterion_10_centralizers(capsys):
    report, dt = _timed(lambda: sweeps.centralizer_sweep(8, 7))
    _record(capsys, 10, "centralizer oracle vs formula", report.passed, dt, 60,
            f"{report.stats['cases']} cases, {len(report.violations)} violations")


def test_criterion_11_oracles(capsys):
    def go():
        return [
            sweeps.charpoly_oracle_sweep(200, 4, 9, 0),
            sweeps.gl_richardson_sweep(5, 25, 9, 0),
            sweeps.jordan_roundtrip_sweep(10),
        ]

    reports, dt = _timed(go)
    bad = _violations(reports)
    _record(capsys, 11, "charpoly, gl Richardson and Jordan oracles", not bad, dt, 60,
            f"{len(bad)} violations")


def test_criterion_12_determinism(capsys, tmp_path):
    outputs = []

    def go():
        for i in range(2):
            path = tmp_path / f"suite{i}.json"
            proc = subprocess.run(
                [sys.executable, "-m", "nilcone", "suite", "--seed", "0", "--out", str(path)],
                capture_output=True,
                text=True,
            )
            outputs.append((proc.returncode, path.read_bytes()))

    _, dt = _timed(go)
    (code_a, a), (code_b, b) = outputs
    ok = a == b and code_a == code_b == 0
    _record(capsys, 12, "byte-identical suite JSON", ok, dt, None,
            f"{len(a)} bytes, exit codes {code_a}/{code_b}, identical={a == b}")

