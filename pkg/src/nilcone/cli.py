"""Command-line entry point.

Exit codes: 0 when every executed check passed, 1 on any violation or
dimension mismatch, 2 on usage or configuration errors.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass
from pathlib import Path

from . import cert, sweeps
from .liealg import (
    AlgebraKind,
    FlagSpec,
    InvalidFlag,
    RichardsonAmbiguity,
    check_dual_lattice,
    isotropic_flags,
)
from .partitions import Partition, iter_partitions, n_of
from .report import CertReport, DimensionBreakdown, dumps, jsonable


class ConfigError(ValueError):
    pass


@dataclass
class RunConfig:
    subcommand: str
    trials: int = 100
    seed: int = 0
    precision: int = 12
    bound: int = 9
    max_size: int | None = None
    fmt: str = "json"
    out: str | None = None
    partition: str | None = None
    flag: str | None = None
    kind: str | None = None
    n: int | None = None
    m: int | None = None
    genus: int = 2
    pole: int | None = None
    j: int | None = None
    k: int | None = None
    workers: int | None = None


def _parse_partition(text: str) -> Partition:
    try:
        return Partition.parse(text)
    except ValueError as exc:
        raise ConfigError(f"bad partition {text!r}: {exc}") from None


def _parse_flag(text: str) -> FlagSpec:
    try:
        return FlagSpec.parse(text)
    except (InvalidFlag, ValueError) as exc:
        raise ConfigError(f"bad flag {text!r}: {exc}") from None


def _validate(cfg: RunConfig) -> None:
    if cfg.trials < 1:
        raise ConfigError("--trials must be positive")
    if cfg.bound < 1:
        raise ConfigError("--bound must be positive")
    if cfg.precision < 3:
        raise ConfigError("--precision must be at least 3")
    if cfg.max_size is not None and cfg.max_size < 0:
        raise ConfigError("--max-size must be non-negative")


def _execute(cfg: RunConfig):
    """Run the selected operation; returns reports, breakdowns or a SuiteResult."""
    sub = cfg.subcommand
    if sub == "identity-sweep":
        size = 40 if cfg.max_size is None else cfg.max_size
        reports = [sweeps.lemma3_sweep(size), sweeps.cor3_sweep(size // 2)]
        return reports
    if sub == "so5-remark":
        return cert.so5_remark_check()
    if sub == "certify-prop2":
        if cfg.partition is not None:
            mus = [_parse_partition(cfg.partition)]
        else:
            size = 6 if cfg.max_size is None else cfg.max_size
            mus = [mu for m in range(1, size + 1) for mu in iter_partitions(m)]
        for mu in mus:
            need = max((n_of(mu, j) for j in range(1, mu.total + 1)), default=0) + 2
            if cfg.precision < need:
                raise ConfigError(f"--precision {cfg.precision} below {need} required for {mu}")
        return [cert.prop2_certify(mu, cfg.trials, cfg.bound, cfg.precision, cfg.seed) for mu in mus]
    if sub == "certify-lemma4":
        flags = _flags_or_default(cfg, "sp", 3)
        for f in flags:
            if cfg.precision < f.kind.m + 2:
                raise ConfigError(f"--precision {cfg.precision} below {f.kind.m + 2} required for {f}")
        return [
            cert.lemma4_certify(f, cfg.trials, cfg.bound, cfg.precision, cfg.seed) for f in flags
        ]
    if sub == "dual-lattice":
        if cfg.flag is None:
            return sweeps.dual_lattice_sweep(cfg.precision)
        return [check_dual_lattice(_parse_flag(cfg.flag), cfg.precision)]
    if sub == "jet-check":
        if cfg.m is not None:
            m = cfg.m
            j = m if cfg.j is None else cfg.j
            k = 4 if cfg.k is None else cfg.k
            if not 1 <= j <= m:
                raise ConfigError(f"--j {j} outside 1..{m}")
            if not 0 <= k < cfg.precision - 1:
                raise ConfigError(f"--k {k} needs --precision above {k + 1}")
            return [cert.jet_dependence_check(m, j, k, cfg.trials, cfg.seed, cfg.precision, cfg.bound)]
        return sweeps.jet_sweep(trials=cfg.trials, seed=cfg.seed, precision=cfg.precision)
    if sub == "richardson":
        flags = _flags_or_default(cfg, "sp", 3)
        return [cert.richardson_check(f, 25, cfg.bound, cfg.seed) for f in flags]
    if sub == "dim-match":
        if cfg.flag is not None:
            flags = [_parse_flag(cfg.flag)]
        else:
            if cfg.kind is None:
                raise ConfigError("dim-match needs --flag or --kind")
            if cfg.kind == "sp":
                if cfg.n is None:
                    raise ConfigError("dim-match --kind sp needs --n")
                kind = AlgebraKind("sp", 2 * cfg.n)
            elif cfg.kind in ("sl", "gl"):
                size = cfg.m if cfg.m is not None else cfg.n
                if size is None:
                    raise ConfigError(f"dim-match --kind {cfg.kind} needs --m")
                kind = AlgebraKind(cfg.kind, size)
            else:
                raise ConfigError(f"dim-match does not support kind {cfg.kind!r}")
            flags = [cert.full_flag(kind)]
        if cfg.genus < 2:
            raise ConfigError("--genus must be at least 2")
        return [
            cert.dim_match(cfg.genus, f, seed=cfg.seed, bound=cfg.bound, pole=cfg.pole) for f in flags
        ]
    if sub == "suite":
        progress = (lambda s: print(s, file=sys.stderr)) if cfg.fmt == "text" else None
        return sweeps.run_suite(
            trials=cfg.trials,
            seed=cfg.seed,
            precision=cfg.precision,
            bound=cfg.bound,
            max_size=40 if cfg.max_size is None else cfg.max_size,
            workers=cfg.workers,
            progress=progress,
        )
    raise ConfigError(f"unknown subcommand {sub!r}")


def _flags_or_default(cfg: RunConfig, family: str, max_n: int) -> list[FlagSpec]:
    if cfg.flag is not None:
        return [_parse_flag(cfg.flag)]
    top = max_n if cfg.n is None else cfg.n
    out = []
    for n in range(1, top + 1):
        out.extend(isotropic_flags(AlgebraKind(family, 2 * n)))
    return out


def _passed(result) -> bool:
    if isinstance(result, list):
        return all(_passed(r) for r in result)
    if isinstance(result, DimensionBreakdown):
        return result.match
    if isinstance(result, CertReport):
        return result.passed
    if isinstance(result, sweeps.SuiteResult):
        return result.passed
    if isinstance(result, dict) and "equal" in result:
        # so5-remark: the identity is expected to fail
        return result["lhs"] == 3 and result["rhs"] == 4 and not result["equal"]
    raise TypeError(type(result))


def _render_text(result) -> str:
    if isinstance(result, sweeps.SuiteResult):
        lines = []
        for name, items in result.sections:
            lines.append(f"== {name}")
            lines.extend("  " + item.summary() for item in items)
        lines.append("PASS" if result.passed else "FAIL")
        return "\n".join(lines) + "\n"
    if isinstance(result, list):
        return "".join(_render_text(r) for r in result)
    if isinstance(result, dict):
        return " ".join(f"{k}={jsonable(v)}" for k, v in result.items()) + "\n"
    return result.summary() + "\n"


def run(cfg: RunConfig) -> int:
    try:
        _validate(cfg)
        result = _execute(cfg)
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (cert.PrecisionTooSmall, cert.SpecialRange, InvalidFlag, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except RichardsonAmbiguity as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if cfg.fmt == "json":
        if isinstance(result, list) and len(result) == 1:
            text = dumps(result[0])
        else:
            text = dumps(result)
    else:
        text = _render_text(result)
    if cfg.out:
        Path(cfg.out).write_text(text)
    else:
        sys.stdout.write(text)
    return 0 if _passed(result) else 1


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--trials", type=int, default=100)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--precision", type=int, default=12)
    common.add_argument("--bound", type=int, default=9, help="coefficient bound B for sampling")
    common.add_argument("--format", dest="fmt", choices=["json", "text"], default="json")
    common.add_argument("--out", help="write the report here instead of stdout")

    parser = argparse.ArgumentParser(prog="nilcone", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p = sub.add_parser("identity-sweep", parents=[common], help="partition identities, exhaustive")
    p.add_argument("--max-size", type=int)
    sub.add_parser("so5-remark", parents=[common], help="the so(5) counterexample")
    p = sub.add_parser("certify-prop2", parents=[common], help="valuation bound on e + z gl[[z]]")
    p.add_argument("--partition")
    p.add_argument("--max-size", type=int)
    p = sub.add_parser("certify-lemma4", parents=[common], help="valuation bound on the dual lattice")
    p.add_argument("--flag")
    p.add_argument("--n", type=int)
    p = sub.add_parser("dual-lattice", parents=[common], help="dual lattice of a parahoric")
    p.add_argument("--flag")
    p = sub.add_parser("jet-check", parents=[common], help="finite-jet dependence of F_j")
    p.add_argument("--m", type=int)
    p.add_argument("--j", type=int)
    p.add_argument("--k", type=int)
    p = sub.add_parser("richardson", parents=[common], help="sampled Richardson partition")
    p.add_argument("--flag")
    p.add_argument("--n", type=int)
    p = sub.add_parser("dim-match", parents=[common], help="Hitchin base vs moduli dimension")
    p.add_argument("--flag")
    p.add_argument("--kind", choices=["sl", "gl", "sp"])
    p.add_argument("--n", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--genus", type=int, default=2)
    p.add_argument("--pole", type=int, help="use one pole order C for every summand")
    p = sub.add_parser("suite", parents=[common], help="the full acceptance battery")
    p.add_argument("--max-size", type=int)
    p.add_argument("--workers", type=int)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    cfg = RunConfig(**{k: v for k, v in vars(args).items() if k in RunConfig.__dataclass_fields__})
    return run(cfg)


if __name__ == "__main__":
    sys.exit(main())
