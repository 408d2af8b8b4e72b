"""Certifiers for valuation bounds of characteristic-polynomial invariants,
and the Riemann-Roch dimension counts for the Hitchin base.

Every bound checked here is universal, so a single violating sample is a
hard failure.  How often a bound is attained is reported but never asserted.
"""

from __future__ import annotations

from fractions import Fraction

from .linalg import RationalMatrix, SeriesMatrix, charpoly_coeffs, jordan_type
from .liealg import (
    AlgebraKind,
    FlagSpec,
    algebra_basis,
    jordan_nilpotent,
    nilradical_basis,
    parabolic_basis,
    richardson_partition,
    richardson_sample,
    sample_series_element,
    trial_rng,
)
from .partitions import Partition, centralizer_dim_formula, dominance_leq, n_of
from .report import CertReport, DimensionBreakdown
from .series import DEFAULT_PRECISION, series_valuation


class PrecisionTooSmall(ValueError):
    pass


class SpecialRange(ValueError):
    pass


def _require_precision(precision: int, bound: int, what: str) -> None:
    if precision < bound + 2:
        raise PrecisionTooSmall(
            f"{what}: precision {precision} is below the required {bound + 2}"
        )


def prop2_certify(
    mu: Partition,
    trials: int = 100,
    bound: int = 9,
    precision: int = DEFAULT_PRECISION,
    seed: int = 0,
) -> CertReport:
    """nu(F_j(gamma)) >= n(mu, j) for gamma in e_mu + z gl_m[[z]]."""
    m = mu.total
    bounds = [n_of(mu, j) for j in range(1, m + 1)]
    _require_precision(precision, max(bounds, default=0), "prop2")
    report = CertReport(
        "prop2",
        {"partition": str(mu), "trials": trials, "bound": bound, "precision": precision, "seed": seed},
    )
    if m == 0:
        return report
    e = jordan_nilpotent(mu)
    observed: list[int | None] = [None] * m
    attained = [0] * m
    for t in range(trials):
        gamma = sample_series_element("coset", e, bound, precision, seed, t, f"prop2:{mu}")
        vals = [series_valuation(F) for F in charpoly_coeffs(gamma)]
        for j, (v, b) in enumerate(zip(vals, bounds), start=1):
            if not v.at_least(b):
                report.violations.append(f"trial {t}: nu(F_{j}) = {v} < {b}")
            if v.exact:
                observed[j - 1] = v.value if observed[j - 1] is None else min(observed[j - 1], v.value)
                if v.value == b:
                    attained[j - 1] += 1
        report.trials.append({"trial": t, "valuations": [str(v) for v in vals]})
    report.observed_min = {f"F_{j}": observed[j - 1] for j in range(1, m + 1)}
    report.stats = {
        "bounds": {f"F_{j}": b for j, b in enumerate(bounds, start=1)},
        "attainment": {f"F_{j}": Fraction(attained[j - 1], trials) for j in range(1, m + 1)},
    }
    return report


def lemma4_certify(
    flag: FlagSpec,
    trials: int = 100,
    bound: int = 9,
    precision: int = DEFAULT_PRECISION,
    seed: int = 0,
    richardson_trials: int = 25,
) -> CertReport:
    """nu(F_d(gamma)) >= -(d - n(Lambda, d)) on (1/z)(n + z g[[z]]).

    For sp only even d carry invariants; odd F_d must vanish to the working
    precision.  Each sample also checks the sharper intermediate bound with
    the Jordan type of its polar part and that this type is dominated by
    the Richardson type.
    """
    kind = flag.kind
    m = kind.m
    _require_precision(precision, m, "lemma4")
    lam = richardson_partition(flag, richardson_trials, bound, seed)
    nil = nilradical_basis(parabolic_basis(flag))
    symplectic = kind.family == "sp"
    indices = [d for d in range(1, m + 1) if not symplectic or d % 2 == 0]
    bounds = {d: -(d - n_of(lam, d)) for d in indices}
    report = CertReport(
        "lemma4",
        {
            "flag": str(flag),
            "richardson": str(lam),
            "trials": trials,
            "bound": bound,
            "precision": precision,
            "seed": seed,
        },
    )
    observed: dict[int, int | None] = {d: None for d in indices}
    attained = {d: 0 for d in indices}
    for t in range(trials):
        gamma = sample_series_element("dual_lattice", nil, bound, precision, seed, t, f"lemma4:{flag}")
        polar = gamma.coefficient(-1)
        mu_x = jordan_type(polar)
        if not dominance_leq(mu_x, lam):
            report.violations.append(f"trial {t}: polar type {mu_x} not dominated by {lam}")
        F = charpoly_coeffs(gamma)
        vals = [series_valuation(f) for f in F]
        for d in range(1, m + 1):
            v = vals[d - 1]
            if d in bounds:
                if not v.at_least(-(d - n_of(mu_x, d))):
                    report.violations.append(f"trial {t}: nu(F_{d}) = {v} below the {mu_x} bound")
                if not v.at_least(bounds[d]):
                    report.violations.append(f"trial {t}: nu(F_{d}) = {v} < {bounds[d]}")
                if v.exact:
                    observed[d] = v.value if observed[d] is None else min(observed[d], v.value)
                    attained[d] += v.value == bounds[d]
            elif v.exact:
                report.violations.append(f"trial {t}: odd invariant F_{d} has nonzero term z^{v.value}")
        report.trials.append(
            {"trial": t, "polar_type": str(mu_x), "valuations": [str(v) for v in vals]}
        )
    report.observed_min = {f"F_{d}": observed[d] for d in indices}
    report.stats = {
        "bounds": {f"F_{d}": b for d, b in bounds.items()},
        "attainment": {f"F_{d}": Fraction(attained[d], trials) for d in indices},
    }
    return report


def _random_pole_free(m: int, precision: int, bound: int, rng) -> dict[int, RationalMatrix]:
    draws = rng.integers(-bound, bound + 1, size=(precision, m, m))
    return {t: RationalMatrix(draws[t].tolist()) for t in range(precision)}


def jet_dependence_check(
    m: int,
    j: int,
    k: int,
    trials: int = 50,
    seed: int = 0,
    precision: int = DEFAULT_PRECISION,
    bound: int = 9,
) -> CertReport:
    """The z^0..z^k coefficients of F_j depend only on the (k+1)-jet."""
    if not 1 <= j <= m:
        raise ValueError(f"j={j} outside 1..{m}")
    if not 0 <= k < precision - 1:
        raise PrecisionTooSmall(f"jet order {k} needs precision above {k + 1}")
    report = CertReport(
        "jet",
        {"m": m, "j": j, "k": k, "trials": trials, "precision": precision, "seed": seed},
    )
    lowest: int | None = None
    for t in range(trials):
        rng = trial_rng(seed, t, f"jet:{m}:{j}:{k}")
        base = _random_pole_free(m, precision, bound, rng)
        tail = _random_pole_free(m, precision, bound, rng)
        other = {e: (base[e] if e <= k else tail[e]) for e in base}
        Fa = charpoly_coeffs(SeriesMatrix.from_coefficients(base, precision))[j - 1]
        Fb = charpoly_coeffs(SeriesMatrix.from_coefficients(other, precision))[j - 1]
        for e in range(k + 1):
            if Fa[e] != Fb[e]:
                report.violations.append(f"trial {t}: z^{e} coefficients differ")
        v = series_valuation(Fa - Fb)
        if v.exact:
            lowest = v.value if lowest is None else min(lowest, v.value)
        report.trials.append({"trial": t, "difference_valuation": str(v)})
    report.observed_min = {"difference": lowest}
    return report


# ---------------------------------------------------------------------------
# Dimension counts
# ---------------------------------------------------------------------------


def h0(genus: int, degree: int) -> int:
    """Sections of a line bundle of the given degree, nonspecial range only."""
    if genus < 2:
        raise ValueError("genus must be at least 2")
    if degree <= 2 * genus - 2:
        raise SpecialRange(
            f"degree {degree} <= 2g-2 = {2 * genus - 2}: h0 is not determined by the degree"
        )
    return degree - genus + 1


def full_flag(kind: AlgebraKind) -> FlagSpec:
    if kind.family in ("gl", "sl"):
        return FlagSpec(kind, (1,) * kind.m)
    return FlagSpec(kind, tuple(range(1, kind.m // 2 + 1)))


def invariant_degrees(kind: AlgebraKind) -> list[int]:
    """Degrees of the characteristic-polynomial generators."""
    m = kind.m
    if kind.family == "sl":
        degrees = list(range(2, m + 1))
    elif kind.family == "gl":
        degrees = list(range(1, m + 1))
    elif kind.family == "sp":
        degrees = list(range(2, m + 1, 2))
    else:
        raise ValueError("so is not supported: the dimension count fails there")
    flag_variety = nilradical_basis(parabolic_basis(full_flag(kind))).dim
    if sum(degrees) != flag_variety + kind.rank:
        raise ArithmeticError(
            f"sum of degrees {sum(degrees)} != dim G/B + rank = {flag_variety} + {kind.rank}"
        )
    return degrees


def hitchin_base_dim(genus: int, summands: list[tuple[int, int]]) -> DimensionBreakdown:
    """dim of the sum of H^0(K^d(c x)) over (d, c) pairs."""
    values = [h0(genus, d * (2 * genus - 2) + c) for d, c in summands]
    return DimensionBreakdown(
        genus, "", "", [d for d, _ in summands], [c for _, c in summands], values
    )


def bun_dim(genus: int, flag: FlagSpec) -> int:
    if genus < 2:
        raise ValueError("genus must be at least 2")
    nil = nilradical_basis(parabolic_basis(flag))
    return len(algebra_basis(flag.kind)) * (genus - 1) + nil.dim


def pole_orders(flag: FlagSpec, lam: Partition) -> list[int]:
    """Sharp pole order d - n(Lambda, d) for each invariant degree d."""
    return [d - n_of(lam, d) for d in invariant_degrees(flag.kind)]


def dim_match(
    genus: int,
    flag: FlagSpec,
    trials: int = 25,
    bound: int = 9,
    seed: int = 0,
    pole: int | None = None,
) -> DimensionBreakdown:
    """Compare the Hitchin base dimension with dim Bun.

    ``pole`` replaces every per-summand pole order with one constant C.
    """
    lam = richardson_partition(flag, trials, bound, seed)
    degrees = invariant_degrees(flag.kind)
    poles = [pole] * len(degrees) if pole is not None else pole_orders(flag, lam)
    base = hitchin_base_dim(genus, list(zip(degrees, poles)))
    base.kind = flag.kind.family
    base.flag = str(flag)
    base.richardson = str(lam)
    base.bun_dim = bun_dim(genus, flag)
    return base


def so5_remark_check() -> dict:
    """The symplectic identity's analogue evaluated on (2,2,1) in so_5."""
    mu = Partition((2, 2, 1))
    n = 2
    lhs = n_of(mu, 2) + n_of(mu, 4)
    rhs = Fraction(n + centralizer_dim_formula(mu, "so"), 2)
    return {"partition": str(mu), "lhs": lhs, "rhs": rhs, "equal": lhs == rhs}


def richardson_check(flag: FlagSpec, trials: int = 25, bound: int = 9, seed: int = 0) -> CertReport:
    """Sampled Richardson type with the dim-Levi cross-check."""
    from .liealg import centralizer_dim_oracle, levi_dim

    lam, rep, observed = richardson_sample(flag, trials, bound, seed)
    report = CertReport(
        "richardson",
        {"flag": str(flag), "trials": trials, "bound": bound, "seed": seed},
        stats={"partition": str(lam), "observed": [str(mu) for mu in observed]},
    )
    z = centralizer_dim_oracle(flag.kind, rep)
    levi = levi_dim(flag)
    report.stats.update({"centralizer_dim": z, "levi_dim": levi})
    if z != levi:
        report.violations.append(f"centralizer dim {z} != Levi dim {levi}")
    return report
