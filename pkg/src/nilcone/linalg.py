"""Exact matrices over Q and over truncated Laurent series.

Rank uses Bareiss fraction-free elimination on an integer rescaling of the
input.  Characteristic-polynomial coefficients use the trace recurrence,
which only divides by the integers 1..m and so works over any Q-algebra.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import reduce
from typing import Iterable, Sequence

import numpy as np

from .partitions import Partition, dual_partition
from .series import TruncatedLaurentSeries, _q, series_add, series_mul


class SizeMismatch(ValueError):
    pass


class NotNilpotent(ValueError):
    pass


# ---------------------------------------------------------------------------
# Rational matrices
# ---------------------------------------------------------------------------


class RationalMatrix:
    __slots__ = ("rows",)

    def __init__(self, rows: Iterable[Iterable]):
        rows = tuple(tuple(_q(x) for x in r) for r in rows)
        m = len(rows)
        if any(len(r) != m for r in rows):
            raise SizeMismatch("RationalMatrix must be square")
        object.__setattr__(self, "rows", rows)

    def __setattr__(self, name, value):
        raise AttributeError("RationalMatrix is immutable")

    @classmethod
    def zeros(cls, m: int) -> RationalMatrix:
        return cls([[0] * m for _ in range(m)])

    @classmethod
    def identity(cls, m: int) -> RationalMatrix:
        return cls([[int(i == j) for j in range(m)] for i in range(m)])

    @classmethod
    def unit(cls, m: int, i: int, j: int) -> RationalMatrix:
        """Matrix unit E_ij, 0-based."""
        return cls([[int((r, c) == (i, j)) for c in range(m)] for r in range(m)])

    @classmethod
    def from_flat(cls, m: int, flat: Sequence) -> RationalMatrix:
        return cls([flat[r * m:(r + 1) * m] for r in range(m)])

    @property
    def size(self) -> int:
        return len(self.rows)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def flat(self) -> list[Fraction]:
        return [x for r in self.rows for x in r]

    def _check(self, other):
        if other.size != self.size:
            raise SizeMismatch(f"sizes {self.size} and {other.size} differ")

    def __add__(self, other):
        self._check(other)
        return RationalMatrix(
            [[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)]
        )

    def __sub__(self, other):
        self._check(other)
        return RationalMatrix(
            [[a - b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)]
        )

    def __neg__(self):
        return RationalMatrix([[-a for a in r] for r in self.rows])

    def __mul__(self, c):
        c = _q(c)
        return RationalMatrix([[c * a for a in r] for r in self.rows])

    __rmul__ = __mul__

    def __matmul__(self, other):
        self._check(other)
        cols = list(zip(*other.rows))
        return RationalMatrix(
            [[sum((a * b for a, b in zip(r, c)), Fraction(0)) for c in cols] for r in self.rows]
        )

    def __pow__(self, k: int):
        out = RationalMatrix.identity(self.size)
        for _ in range(k):
            out = out @ self
        return out

    @property
    def T(self) -> RationalMatrix:
        return RationalMatrix(zip(*self.rows))

    def trace(self) -> Fraction:
        return sum((self.rows[i][i] for i in range(self.size)), Fraction(0))

    def is_zero(self) -> bool:
        return not any(any(r) for r in self.rows)

    def __eq__(self, other):
        if not isinstance(other, RationalMatrix):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        body = "; ".join(" ".join(str(x) for x in r) for r in self.rows)
        return f"RationalMatrix([{body}])"


def bracket(x: RationalMatrix, y: RationalMatrix) -> RationalMatrix:
    return x @ y - y @ x


# ---------------------------------------------------------------------------
# Exact elimination
# ---------------------------------------------------------------------------


def _integer_rows(rows: Sequence[Sequence]) -> list[list[int]]:
    """Scale each row by the lcm of its denominators."""
    out = []
    for r in rows:
        r = [_q(x) for x in r]
        d = reduce(math.lcm, (x.denominator for x in r), 1)
        out.append([int(x * d) for x in r])
    return out


def bareiss_rank(rows: Sequence[Sequence]) -> int:
    """Rank of a (not necessarily square) rational matrix given by rows."""
    a = _integer_rows(rows)
    if not a:
        return 0
    nrows, ncols = len(a), len(a[0])
    rank, prev = 0, 1
    for col in range(ncols):
        if rank == nrows:
            break
        piv = next((r for r in range(rank, nrows) if a[r][col]), None)
        if piv is None:
            continue
        a[rank], a[piv] = a[piv], a[rank]
        p = a[rank][col]
        for r in range(rank + 1, nrows):
            f = a[r][col]
            row_r, row_p = a[r], a[rank]
            for c in range(col, ncols):
                # exact by Sylvester's identity
                row_r[c] = (p * row_r[c] - f * row_p[c]) // prev
        prev = p
        rank += 1
    return rank


def rational_rank(M: RationalMatrix) -> int:
    return bareiss_rank(M.rows)


def nullspace(rows: Sequence[Sequence], ncols: int) -> list[list[int]]:
    """Basis of {x : rows . x = 0} as primitive integer vectors.

    Each basis vector has a 1-free-variable normal form (one free variable
    set, the others zero) before clearing denominators, so the result is
    deterministic.
    """
    a = [[_q(x) for x in r] for r in rows]
    pivots: list[int] = []
    r = 0
    for col in range(ncols):
        piv = next((i for i in range(r, len(a)) if a[i][col]), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        p = a[r][col]
        a[r] = [x / p for x in a[r]]
        for i in range(len(a)):
            if i != r and a[i][col]:
                f = a[i][col]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(col)
        r += 1
        if r == len(a):
            break
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for fcol in free:
        v = [Fraction(0)] * ncols
        v[fcol] = Fraction(1)
        for i, pcol in enumerate(pivots):
            v[pcol] = -a[i][fcol]
        basis.append(_primitive(v))
    return basis


def inverse(M: RationalMatrix) -> RationalMatrix:
    """Gauss-Jordan inverse over Q."""
    m = M.size
    a = [list(r) + [Fraction(int(i == j)) for j in range(m)] for i, r in enumerate(M.rows)]
    for col in range(m):
        piv = next((r for r in range(col, m) if a[r][col]), None)
        if piv is None:
            raise ZeroDivisionError("matrix is singular")
        a[col], a[piv] = a[piv], a[col]
        p = a[col][col]
        a[col] = [x / p for x in a[col]]
        for r in range(m):
            if r != col and a[r][col]:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return RationalMatrix([r[m:] for r in a])


def _primitive(v: Sequence[Fraction]) -> list[int]:
    d = reduce(math.lcm, (x.denominator for x in v), 1)
    ints = [int(x * d) for x in v]
    g = reduce(math.gcd, ints, 0) or 1
    return [x // g for x in ints]


# ---------------------------------------------------------------------------
# Nilpotent Jordan type
# ---------------------------------------------------------------------------


def rank_sequence(N: RationalMatrix) -> list[int]:
    """[rank N^0, rank N^1, ..., rank N^m]."""
    m = N.size
    ranks, P = [m], RationalMatrix.identity(m)
    for _ in range(m):
        P = P @ N
        ranks.append(rational_rank(P))
    return ranks


def jordan_type(N: RationalMatrix) -> Partition:
    ranks = rank_sequence(N)
    if ranks[-1]:
        k = next(k for k in range(len(ranks) - 1) if ranks[k] == ranks[k + 1])
        raise NotNilpotent(
            f"matrix is not nilpotent: rank of power {k} is {ranks[k]} and stays there"
        )
    dual = [ranks[k - 1] - ranks[k] for k in range(1, len(ranks))]
    return dual_partition(Partition([d for d in dual if d]))


# ---------------------------------------------------------------------------
# Series matrices
# ---------------------------------------------------------------------------


class SeriesMatrix:
    __slots__ = ("entries",)

    def __init__(self, entries: Iterable[Iterable[TruncatedLaurentSeries]]):
        entries = tuple(tuple(r) for r in entries)
        m = len(entries)
        if any(len(r) != m for r in entries):
            raise SizeMismatch("SeriesMatrix must be square")
        object.__setattr__(self, "entries", entries)

    def __setattr__(self, name, value):
        raise AttributeError("SeriesMatrix is immutable")

    @classmethod
    def from_coefficients(cls, coeffs: dict[int, RationalMatrix], precision: int) -> SeriesMatrix:
        """Sum of z^t * coeffs[t]; exponents must lie below precision."""
        m = next(iter(coeffs.values())).size
        return cls(
            [
                [
                    _make_entry([(t, c[i, j]) for t, c in coeffs.items()], precision)
                    for j in range(m)
                ]
                for i in range(m)
            ]
        )

    @classmethod
    def from_rational(cls, M: RationalMatrix, precision: int) -> SeriesMatrix:
        return cls.from_coefficients({0: M}, precision)

    @property
    def size(self) -> int:
        return len(self.entries)

    def __getitem__(self, ij) -> TruncatedLaurentSeries:
        i, j = ij
        return self.entries[i][j]

    @property
    def lead_exp(self) -> int:
        return min(e.lead_exp for r in self.entries for e in r)

    @property
    def precision(self) -> int:
        return min(e.precision for r in self.entries for e in r)

    def coefficient(self, t: int) -> RationalMatrix:
        """The matrix of z^t coefficients."""
        return RationalMatrix([[e[t] for e in r] for r in self.entries])

    def shift(self, k: int) -> SeriesMatrix:
        return SeriesMatrix([[e.shift(k) for e in r] for r in self.entries])

    def __add__(self, other):
        return mat_arith("add", self, other)

    def __sub__(self, other):
        return mat_arith("add", self, mat_arith("scale", other, -1))

    def __matmul__(self, other):
        return mat_arith("mul", self, other)

    def __mul__(self, c):
        return mat_arith("scale", self, c)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, SeriesMatrix):
            return NotImplemented
        return self.size == other.size and all(
            a == b for r, s in zip(self.entries, other.entries) for a, b in zip(r, s)
        )

    __hash__ = None

    def __repr__(self):
        return "SeriesMatrix(" + repr([list(r) for r in self.entries]) + ")"


def _make_entry(pairs, precision):
    from .series import series_make

    return series_make([(t, c) for t, c in pairs if c], precision)


def mat_arith(op: str, A: SeriesMatrix, B) -> SeriesMatrix:
    """``add``/``mul`` take two SeriesMatrix; ``scale`` takes a scalar or series."""
    if op == "scale":
        return SeriesMatrix([[B * e for e in r] for r in A.entries])
    if not isinstance(B, SeriesMatrix):
        raise TypeError(f"{op} needs two series matrices")
    if A.size != B.size:
        raise SizeMismatch(f"sizes {A.size} and {B.size} differ")
    m = A.size
    if op == "add":
        return SeriesMatrix(
            [[series_add(A[i, j], B[i, j]) for j in range(m)] for i in range(m)]
        )
    if op == "mul":
        out = []
        for i in range(m):
            row = []
            for j in range(m):
                acc = series_mul(A[i, 0], B[0, j])
                for k in range(1, m):
                    acc = series_add(acc, series_mul(A[i, k], B[k, j]))
                row.append(acc)
            out.append(row)
        return SeriesMatrix(out)
    raise ValueError(f"unknown matrix operation {op!r}")


def trace_pairing(X: SeriesMatrix, Y: SeriesMatrix) -> TruncatedLaurentSeries:
    if X.size != Y.size:
        raise SizeMismatch(f"sizes {X.size} and {Y.size} differ")
    m = X.size
    acc = None
    for i in range(m):
        for k in range(m):
            term = series_mul(X[i, k], Y[k, i])
            acc = term if acc is None else series_add(acc, term)
    return acc


def _polymatmul(X: np.ndarray, Y: np.ndarray) -> np.ndarray:
    """Product of matrices over Z[z]/z^K stored as (K, m, m) object arrays."""
    K = X.shape[0]
    out = np.zeros_like(X)
    nzx = [s for s in range(K) if X[s].any()]
    nzy = [s for s in range(K) if Y[s].any()]
    for s in nzx:
        for t in nzy:
            if s + t >= K:
                break
            out[s + t] += X[s] @ Y[t]
    return out


def charpoly_coeffs(M: SeriesMatrix) -> list[TruncatedLaurentSeries]:
    """[F_1, ..., F_m] with det(T*Id - M) = T^m + F_1 T^(m-1) + ... + F_m.

    Entries are put on a common window z^L * (Q[z] / z^K) where L is the
    smallest lead exponent and L + K the smallest precision; for entries of
    equal lead this reproduces the entrywise precision rules exactly, and
    otherwise it is more pessimistic.  F_k then lives at lead k*L with
    precision k*L + K.
    """
    m = M.size
    if m < 1:
        raise ValueError("characteristic polynomial of an empty matrix")
    L, P = M.lead_exp, M.precision
    L = min(L, P)
    K = P - L
    if K <= 0:
        return [TruncatedLaurentSeries.zero(k * L + K) for k in range(1, m + 1)]

    denom = 1
    for r in M.entries:
        for e in r:
            for c in e.coeffs:
                denom = math.lcm(denom, c.denominator)
    A = np.zeros((K, m, m), dtype=object)
    A[...] = 0
    for i in range(m):
        for j in range(m):
            e = M[i, j]
            for t in range(K):
                k = L + t
                if e.lead_exp <= k < e.precision:
                    A[t, i, j] = int(e[k] * denom)

    eye = np.zeros((m, m), dtype=object)
    eye[...] = 0
    for i in range(m):
        eye[i, i] = 1

    coeffs: list[np.ndarray] = []
    Mk = A
    for k in range(1, m + 1):
        tr = np.array([Mk[t].trace() for t in range(K)], dtype=object)
        c = np.empty(K, dtype=object)
        for t in range(K):
            q, r = divmod(tr[t], k)
            if r:
                raise ArithmeticError("trace recurrence produced a non-integral coefficient")
            c[t] = -q
        coeffs.append(c)
        if k < m:
            shifted = Mk + c[:, None, None] * eye[None, :, :]
            Mk = _polymatmul(A, shifted)

    out = []
    for k, c in enumerate(coeffs, start=1):
        scale = Fraction(1, denom**k)
        out.append(
            TruncatedLaurentSeries(k * L, [Fraction(int(x)) * scale for x in c], k * L + K)
        )
    return out


def charpoly_by_cofactors(M: RationalMatrix) -> list[Fraction]:
    """Brute-force oracle: expand det(T*Id - M) along the first row.

    Polynomials in T are coefficient lists, lowest degree first.
    """

    def pmul(p, q):
        out = [Fraction(0)] * (len(p) + len(q) - 1)
        for i, x in enumerate(p):
            for j, y in enumerate(q):
                out[i + j] += x * y
        return out

    def padd(p, q):
        n = max(len(p), len(q))
        return [
            (p[i] if i < len(p) else 0) + (q[i] if i < len(q) else 0) for i in range(n)
        ]

    def det(grid):
        n = len(grid)
        if n == 1:
            return grid[0][0]
        total = [Fraction(0)]
        for col in range(n):
            minor = [row[:col] + row[col + 1:] for row in grid[1:]]
            term = pmul(grid[0][col], det(minor))
            if col % 2:
                term = [-x for x in term]
            total = padd(total, term)
        return total

    m = M.size
    grid = [
        [[-M[i, j], Fraction(1)] if i == j else [-M[i, j]] for j in range(m)]
        for i in range(m)
    ]
    p = det(grid)
    p = p + [Fraction(0)] * (m + 1 - len(p))
    # p[m] is the leading 1; F_k is the coefficient of T^(m-k)
    return [p[m - k] for k in range(1, m + 1)]
