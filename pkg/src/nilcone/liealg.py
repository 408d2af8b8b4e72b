"""Classical matrix Lie algebras over Q.

Conventions: ``sp`` preserves J = [[0, I_n], [-I_n, 0]]; ``so`` preserves the
antidiagonal identity.  Membership in either is X^T J + J X = 0.  Flags are
coordinate flags: for ``sp`` the isotropic subspace of dimension d is
span(e_1..e_d); for ``so`` it is likewise span(e_1..e_d), and its
perpendicular is span(e_1..e_{m-d}).
"""

from __future__ import annotations

import re
import zlib
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .linalg import (
    RationalMatrix,
    SeriesMatrix,
    bareiss_rank,
    bracket,
    inverse,
    jordan_type,
    nullspace,
    trace_pairing,
)
from .partitions import Partition, check_admissible, dominance_leq
from .report import CertReport
from .series import series_valuation


FAMILIES = ("gl", "sl", "sp", "so")


class InvalidFlag(ValueError):
    pass


class RichardsonAmbiguity(RuntimeError):
    pass


@dataclass(frozen=True)
class AlgebraKind:
    family: str
    m: int

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown algebra family {self.family!r}")
        if self.m < 1:
            raise ValueError("matrix size must be positive")
        if self.family == "sp" and self.m % 2:
            raise ValueError("sp needs an even matrix size")

    @property
    def n(self) -> int:
        """Maximal isotropic dimension (rank for sp)."""
        return self.m // 2

    @property
    def rank(self) -> int:
        return {"gl": self.m, "sl": self.m - 1, "sp": self.n, "so": self.m // 2}[self.family]

    def __str__(self) -> str:
        return f"{self.family}{self.m}"


@dataclass(frozen=True)
class FlagSpec:
    """A coordinate flag; ``dims`` is a composition of m for gl/sl and an
    increasing list of isotropic dimensions for sp/so."""

    kind: AlgebraKind
    dims: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "dims", tuple(self.dims))
        fam, m, dims = self.kind.family, self.kind.m, self.dims
        if fam in ("gl", "sl"):
            if not dims or any(b < 1 for b in dims) or sum(dims) != m:
                raise InvalidFlag(f"{dims} is not a composition of {m}")
        else:
            if any(a >= b for a, b in zip(dims, dims[1:])):
                raise InvalidFlag(f"isotropic dimensions {dims} must increase")
            if dims and (dims[0] < 1 or dims[-1] > m // 2):
                raise InvalidFlag(f"isotropic dimensions {dims} must lie in 1..{m // 2}")

    def __str__(self) -> str:
        parts = ",".join(map(str, self.dims))
        if self.kind.family in ("gl", "sl"):
            return f"{self.kind.family}:{parts}"
        return f"{self.kind}:{parts}"

    @classmethod
    def parse(cls, text: str) -> FlagSpec:
        """Parse "gl:2,2", "gl4:2,2", "sl:1,1,1", "sp4:1,2", "so5:1"."""
        mt = re.fullmatch(r"\s*(gl|sl|sp|so)(\d*):([\d,\s]*)", text)
        if not mt:
            raise InvalidFlag(f"cannot parse flag {text!r}")
        fam, size, body = mt.groups()
        try:
            dims = tuple(int(t) for t in body.split(",") if t.strip())
        except ValueError:
            raise InvalidFlag(f"cannot parse flag {text!r}") from None
        if fam in ("gl", "sl"):
            m = sum(dims)
            if size and int(size) != m:
                raise InvalidFlag(f"composition {dims} does not sum to {size}")
        else:
            if not size:
                raise InvalidFlag(f"flag {text!r} needs a matrix size, e.g. sp4:1,2")
            m = int(size)
        try:
            return cls(AlgebraKind(fam, m), dims)
        except ValueError as exc:
            raise InvalidFlag(str(exc)) from None

    def subspaces(self) -> list[tuple[int, ...]]:
        """Coordinate index sets of the completed flag (0-based)."""
        m, fam = self.kind.m, self.kind.family
        if fam in ("gl", "sl"):
            out, s = [], 0
            for b in self.dims[:-1]:
                s += b
                out.append(tuple(range(s)))
            return out
        out = [tuple(range(d)) for d in self.dims]
        if fam == "sp":
            n = m // 2
            out += [tuple(range(n)) + tuple(range(n + d, m)) for d in self.dims]
        else:
            out += [tuple(range(m - d)) for d in self.dims]
        return out


@dataclass(frozen=True)
class SubalgebraBasis:
    kind: AlgebraKind
    basis: tuple[RationalMatrix, ...]

    @property
    def dim(self) -> int:
        return len(self.basis)


def isotropic_flags(kind: AlgebraKind) -> list[FlagSpec]:
    """Every nonempty coordinate isotropic flag for sp/so, every composition for gl/sl."""
    if kind.family in ("gl", "sl"):
        return [FlagSpec(kind, c) for c in compositions(kind.m)]
    top = kind.m // 2
    out = []
    for mask in range(1, 2**top):
        out.append(FlagSpec(kind, tuple(d for d in range(1, top + 1) if mask >> (d - 1) & 1)))
    return out


def compositions(m: int) -> list[tuple[int, ...]]:
    if m == 0:
        return [()]
    return [(first,) + rest for first in range(m, 0, -1) for rest in compositions(m - first)]


# ---------------------------------------------------------------------------
# Forms, membership, bases
# ---------------------------------------------------------------------------


def standard_form(kind: AlgebraKind) -> RationalMatrix:
    m = kind.m
    if kind.family == "sp":
        n = kind.n
        rows = [[0] * m for _ in range(m)]
        for i in range(n):
            rows[i][n + i] = 1
            rows[n + i][i] = -1
        return RationalMatrix(rows)
    if kind.family == "so":
        return RationalMatrix([[int(i + j == m - 1) for j in range(m)] for i in range(m)])
    raise ValueError(f"{kind.family} carries no invariant bilinear form here")


def is_member(kind: AlgebraKind, X: RationalMatrix) -> bool:
    if X.size != kind.m:
        return False
    if kind.family == "gl":
        return True
    if kind.family == "sl":
        return X.trace() == 0
    J = standard_form(kind)
    return (X.T @ J + J @ X).is_zero()


@lru_cache(maxsize=None)
def algebra_basis(kind: AlgebraKind) -> tuple[RationalMatrix, ...]:
    m = kind.m
    if kind.family == "gl":
        return tuple(RationalMatrix.unit(m, i, j) for i in range(m) for j in range(m))
    if kind.family == "sl":
        off = [RationalMatrix.unit(m, i, j) for i in range(m) for j in range(m) if i != j]
        diag = [
            RationalMatrix.unit(m, i, i) - RationalMatrix.unit(m, i + 1, i + 1)
            for i in range(m - 1)
        ]
        return tuple(off + diag)
    # X^T J + J X = 0, one row per entry, unknowns the m^2 entries of X
    J = standard_form(kind)
    rows = []
    for a in range(m):
        for b in range(m):
            row = [0] * (m * m)
            for c in range(m):
                # (X^T J)_{ab} = sum_c X_{ca} J_{cb};  (J X)_{ab} = sum_c J_{ac} X_{cb}
                row[c * m + a] += J[c, b]
                row[c * m + b] += J[a, c]
            rows.append(row)
    return tuple(RationalMatrix.from_flat(m, v) for v in nullspace(rows, m * m))


# ---------------------------------------------------------------------------
# Nilpotent representatives
# ---------------------------------------------------------------------------


def _jordan_block(k: int) -> list[list[int]]:
    return [[int(j == i + 1) for j in range(k)] for i in range(k)]


def jordan_nilpotent(mu: Partition) -> RationalMatrix:
    m = mu.total
    rows = [[0] * m for _ in range(m)]
    start = 0
    for p in mu.parts:
        for i in range(p - 1):
            rows[start + i][start + i + 1] = 1
        start += p
    return RationalMatrix(rows)


def _sp_block_even(lam: int) -> list[list[int]]:
    # [[A, E_kk], [0, -A^T]] on a 2k-dim symplectic space: one chain of length 2k
    k = lam // 2
    X = [[0] * lam for _ in range(lam)]
    for i in range(k - 1):
        X[i][i + 1] = 1
        X[k + i + 1][k + i] = -1
    X[k - 1][2 * k - 1] = 1
    return X


def _sp_block_pair(lam: int) -> list[list[int]]:
    # diag(A, -A^T): two chains of length lam on a Lagrangian and its dual
    s = 2 * lam
    X = [[0] * s for _ in range(s)]
    for i in range(lam - 1):
        X[i][i + 1] = 1
        X[lam + i + 1][lam + i] = -1
    return X


def _so_block_pair(lam: int) -> list[list[Fraction]]:
    s = 2 * lam
    X = [[Fraction(0)] * s for _ in range(s)]
    for i in range(lam - 1):
        X[i][i + 1] = Fraction(1)
        X[s - 2 - i][s - 1 - i] = Fraction(-1)
    return X


def _so_block_odd(a: int) -> list[list[Fraction]]:
    # regular nilpotent of so_a for the antidiagonal form, a odd
    k = a // 2
    X = [[Fraction(0)] * a for _ in range(a)]
    for i in range(a - 1):
        X[i][i + 1] = Fraction(1 if i < k else -1)
    return X


def _so_block_two_odd(a: int, b: int) -> list[list[Fraction]]:
    """Regular nilpotents of so_a and so_b on J_a (+) -J_b, rewritten in a
    basis where the form is the antidiagonal identity of size a + b."""
    s = a + b
    X = [[Fraction(0)] * s for _ in range(s)]
    for i, row in enumerate(_so_block_odd(a)):
        X[i][:a] = row
    for i, row in enumerate(_so_block_odd(b)):
        X[a + i][a:] = row
    ha, hb = (a - 1) // 2, (b - 1) // 2
    xs, ys = [], []

    def e(i):
        v = [Fraction(0)] * s
        v[i] = Fraction(1)
        return v

    for t in range(ha):
        xs.append(e(t))
        ys.append(e(a - 1 - t))
    for t in range(hb):
        xs.append([-c for c in e(a + t)])
        ys.append(e(s - 1 - t))
    u, w = e(ha), e(a + hb)
    # <1> (+) <-1> is a hyperbolic plane
    xs.append([(p + q) / 2 for p, q in zip(u, w)])
    ys.append([p - q for p, q in zip(u, w)])
    cols = xs + ys[::-1]
    W = RationalMatrix([[cols[c][r] for c in range(s)] for r in range(s)])
    Xn = inverse(W) @ RationalMatrix(X) @ W
    return [list(r) for r in Xn.rows]


def _place(rows, X, m: int, offset: int, antidiagonal: bool, half: int = 0) -> None:
    """Embed a local block.

    antidiagonal: local form is the antidiagonal identity of size s; local t
    and s-1-t go to global offset+t and m-1-offset-t, an odd center to the
    global center.  Otherwise local form is [[0, I], [-I, 0]] with ``half``
    e-coordinates, mapped to offset+t and n+offset+t.
    """
    s = len(X)
    if antidiagonal:
        def g(t):
            if 2 * t + 1 == s:
                return (m - 1) // 2
            return offset + t if t < s // 2 else m - 1 - offset - (s - 1 - t)
    else:
        n = m // 2

        def g(t):
            return offset + t if t < half else n + offset + (t - half)
    for i in range(s):
        for j in range(s):
            if X[i][j]:
                rows[g(i)][g(j)] = X[i][j]


def classical_nilpotent(kind: AlgebraKind, mu: Partition) -> RationalMatrix:
    """A nilpotent of Jordan type mu inside kind; checked before returning."""
    if mu.total != kind.m:
        raise ValueError(f"{mu} is not a partition of {kind.m}")
    fam, m = kind.family, kind.m
    if fam in ("gl", "sl"):
        return jordan_nilpotent(mu)
    check_admissible(mu, fam)
    mult = Counter(mu.parts)
    rows = [[Fraction(0)] * m for _ in range(m)]
    offset = 0
    if fam == "sp":
        for p in sorted(mult, reverse=True):
            c = mult[p]
            if p % 2 == 0:
                for _ in range(c):
                    _place(rows, _sp_block_even(p), m, offset, False, p // 2)
                    offset += p // 2
            else:
                for _ in range(c // 2):
                    _place(rows, _sp_block_pair(p), m, offset, False, p)
                    offset += p
    else:
        singles = []
        for p in sorted(mult, reverse=True):
            c = mult[p]
            for _ in range(c // 2):
                _place(rows, _so_block_pair(p), m, offset, True)
                offset += p
            if c % 2:
                singles.append(p)
        while len(singles) >= 2:
            a, b = singles.pop(0), singles.pop(0)
            _place(rows, _so_block_two_odd(a, b), m, offset, True)
            offset += (a + b) // 2
        if singles:
            _place(rows, _so_block_odd(singles[0]), m, offset, True)
    X = RationalMatrix(rows)
    if not is_member(kind, X):
        raise AssertionError(f"constructed representative for {mu} left {kind}")
    got = jordan_type(X)
    if got != mu:
        raise AssertionError(f"constructed representative for {mu} has type {got}")
    return X


# ---------------------------------------------------------------------------
# Parabolics and nilradicals
# ---------------------------------------------------------------------------


def _span_solve(kind: AlgebraKind, constraint) -> tuple[RationalMatrix, ...]:
    """Subspace of the algebra cut out by linear functionals of X.

    ``constraint(g)`` returns the list of functional values on basis element g.
    """
    basis = algebra_basis(kind)
    cols = [constraint(g) for g in basis]
    nrows = len(cols[0]) if cols else 0
    rows = [[cols[i][r] for i in range(len(basis))] for r in range(nrows)]
    out = []
    for coeffs in nullspace(rows, len(basis)):
        X = RationalMatrix.zeros(kind.m)
        for c, g in zip(coeffs, basis):
            if c:
                X = X + g * c
        out.append(X)
    return tuple(out)


@lru_cache(maxsize=None)
def parabolic_basis(flag: FlagSpec) -> SubalgebraBasis:
    kind = flag.kind
    m = kind.m
    subspaces = flag.subspaces()

    def constraint(g):
        vals = []
        for S in subspaces:
            Sset = set(S)
            vals.extend(g[r, c] for c in S for r in range(m) if r not in Sset)
        return vals

    if not subspaces:
        return SubalgebraBasis(kind, algebra_basis(kind))
    return SubalgebraBasis(kind, _span_solve(kind, constraint))


@lru_cache(maxsize=None)
def nilradical_basis(p: SubalgebraBasis) -> SubalgebraBasis:
    """Trace-form orthogonal of p inside the ambient algebra."""
    return SubalgebraBasis(
        p.kind, _span_solve(p.kind, lambda g: [(g @ y).trace() for y in p.basis])
    )


def levi_dim(flag: FlagSpec) -> int:
    p = parabolic_basis(flag)
    return p.dim - nilradical_basis(p).dim


def centralizer_dim_oracle(kind: AlgebraKind, e: RationalMatrix) -> int:
    if not is_member(kind, e):
        raise ValueError(f"element is not in {kind}")
    basis = algebra_basis(kind)
    images = [bracket(g, e).flat() for g in basis]
    return len(basis) - bareiss_rank(images)


# ---------------------------------------------------------------------------
# Sampling
# ---------------------------------------------------------------------------


def trial_rng(seed: int, trial: int, stream: str = "") -> np.random.Generator:
    """Generator that depends only on (seed, trial, stream)."""
    return np.random.default_rng([seed, trial, zlib.crc32(stream.encode())])


def _random_combination(basis, bound: int, rng: np.random.Generator, m: int) -> RationalMatrix:
    coeffs = rng.integers(-bound, bound + 1, size=len(basis))
    acc = [[Fraction(0)] * m for _ in range(m)]
    for c, g in zip(coeffs, basis):
        if c:
            for i in range(m):
                for j in range(m):
                    if g.rows[i][j]:
                        acc[i][j] += int(c) * g.rows[i][j]
    return RationalMatrix(acc)


def sample_series_element(
    mode: str,
    target,
    bound: int = 9,
    precision: int = 12,
    seed: int = 0,
    trial: int = 0,
    stream: str = "",
) -> SeriesMatrix:
    """Random element of e + z gl_m[[z]] (mode "coset", target e) or of
    (1/z)(n + z g[[z]]) (mode "dual_lattice", target the nilradical basis).
    The tail carries integer coefficients in [-bound, bound] at exponents
    0..precision-2 before the factor z.
    """
    if precision < 2:
        raise ValueError("precision must be at least 2")
    if bound < 1:
        raise ValueError("coefficient bound must be at least 1")
    rng = trial_rng(seed, trial, stream or mode)
    if mode == "coset":
        e = target
        m = e.size
        tail = rng.integers(-bound, bound + 1, size=(precision - 1, m, m))
        coeffs = {0: e}
        for t in range(precision - 1):
            coeffs[t + 1] = RationalMatrix(tail[t].tolist())
        return SeriesMatrix.from_coefficients(coeffs, precision)
    if mode == "dual_lattice":
        nil: SubalgebraBasis = target
        m = nil.kind.m
        ambient = algebra_basis(nil.kind)
        x = _random_combination(nil.basis, bound, rng, m)
        coeffs = {-1: x}
        for t in range(precision - 1):
            coeffs[t] = _random_combination(ambient, bound, rng, m)
        return SeriesMatrix.from_coefficients(coeffs, precision - 1)
    raise ValueError(f"unknown sampling mode {mode!r}")


# ---------------------------------------------------------------------------
# Dual lattice and Richardson orbits
# ---------------------------------------------------------------------------


def check_dual_lattice(flag: FlagSpec, precision: int = 12) -> CertReport:
    """Inclusion and maximality of (1/z)(n + z g[[z]]) as the trace dual of
    the parahoric ev^{-1}(p), tested on generators at truncation N."""
    if precision < 3:
        raise ValueError("dual lattice check needs precision >= 3")
    kind = flag.kind
    N = precision
    g = algebra_basis(kind)
    p = parabolic_basis(flag)
    nil = nilradical_basis(p)
    report = CertReport(
        "dual-lattice",
        {"flag": str(flag), "precision": N},
        stats={"dim_g": len(g), "dim_p": p.dim, "dim_n": nil.dim},
    )

    def ser(X, exp):
        return SeriesMatrix.from_coefficients({exp: X}, N + exp)

    if p.dim + nil.dim != len(g):
        report.violations.append(f"dim p + dim n = {p.dim + nil.dim} != dim g = {len(g)}")

    us = [("n/z", i, ser(x, -1)) for i, x in enumerate(nil.basis)]
    us += [("g", i, ser(x, 0)) for i, x in enumerate(g)]
    vs = [("p", i, ser(y, 0)) for i, y in enumerate(p.basis)]
    vs += [("z*g", i, ser(y, 1)) for i, y in enumerate(g)]
    pairs = 0
    for ulabel, ui, u in us:
        for vlabel, vi, v in vs:
            val = series_valuation(trace_pairing(u, v))
            pairs += 1
            if not val.at_least(0):
                report.violations.append(
                    f"inclusion: nu(tr({ulabel}[{ui}] * {vlabel}[{vi}])) = {val}"
                )
    report.stats["inclusion_pairs"] = pairs

    # complement of n in g, greedily from the algebra basis
    chosen = [x.flat() for x in nil.basis]
    rank = bareiss_rank(chosen) if chosen else 0
    complement = []
    for x in g:
        r = bareiss_rank(chosen + [x.flat()])
        if r > rank:
            chosen.append(x.flat())
            complement.append(x)
            rank = r
    for i, y in enumerate(complement):
        yz = ser(y, -1)
        witness = any(
            series_valuation(trace_pairing(yz, ser(v, 0))).value == -1
            and series_valuation(trace_pairing(yz, ser(v, 0))).exact
            for v in p.basis
        )
        if not witness:
            report.violations.append(f"maximality: complement vector {i} pairs integrally with p")
    gram = [[(y @ v).trace() for v in p.basis] for y in complement]
    if complement and bareiss_rank(gram) != len(complement):
        report.violations.append("maximality: complement pairs degenerately with p")
    report.stats["complement_dim"] = len(complement)
    return report


def richardson_sample(
    flag: FlagSpec, trials: int = 25, bound: int = 9, seed: int = 0
) -> tuple[Partition, RationalMatrix, list[Partition]]:
    """Dominance-maximal Jordan type among random nilradical elements, a
    representative of it, and the sorted distinct observed types."""
    if trials < 1:
        raise ValueError("need at least one trial")
    nil = nilradical_basis(parabolic_basis(flag))
    m = flag.kind.m
    seen: dict[Partition, RationalMatrix] = {}
    for t in range(trials):
        x = _random_combination(nil.basis, bound, trial_rng(seed, t, f"richardson:{flag}"), m)
        seen.setdefault(jordan_type(x), x)
    observed = sorted(seen, reverse=True)
    top = [lam for lam in observed if all(dominance_leq(mu, lam) for mu in observed)]
    if not top:
        raise RichardsonAmbiguity(
            f"no dominance-maximal type among {[str(mu) for mu in observed]} for {flag}"
        )
    return top[0], seen[top[0]], observed


def richardson_partition(flag: FlagSpec, trials: int = 25, bound: int = 9, seed: int = 0) -> Partition:
    return richardson_sample(flag, trials, bound, seed)[0]
