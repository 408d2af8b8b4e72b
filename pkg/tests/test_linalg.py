import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from nilcone.linalg import (
    NotNilpotent,
    RationalMatrix,
    SeriesMatrix,
    SizeMismatch,
    bareiss_rank,
    charpoly_by_cofactors,
    charpoly_coeffs,
    inverse,
    jordan_type,
    mat_arith,
    nullspace,
    rational_rank,
    trace_pairing,
)
from nilcone.liealg import jordan_nilpotent
from nilcone.partitions import Partition, iter_partitions
from nilcone.series import AtLeast, Exact, series_make, series_valuation

E = RationalMatrix.unit


def sm(coeffs, precision=8):
    return SeriesMatrix.from_coefficients(coeffs, precision)


def random_int_matrix(rng, m, bound=5):
    return RationalMatrix([[rng.randint(-bound, bound) for _ in range(m)] for _ in range(m)])


# -- mat_arith ------------------------------------------------------------------


def test_add_negation_cancels():
    A = sm({0: RationalMatrix([[1, 2], [3, 4]]), 1: RationalMatrix([[0, 1], [1, 0]])})
    Z = mat_arith("add", A, mat_arith("scale", A, -1))
    assert all(series_valuation(Z[i, j]) == AtLeast(8) for i in range(2) for j in range(2))


def test_identity_multiplication():
    A = sm({0: RationalMatrix([[1, 2], [3, 4]]), 2: RationalMatrix([[5, 0], [0, -1]])})
    assert mat_arith("mul", SeriesMatrix.from_rational(RationalMatrix.identity(2), 8), A) == A


def test_scale_by_z_shifts_lead():
    A = sm({0: RationalMatrix([[1, 2], [3, 4]])})
    B = mat_arith("scale", A, series_make([(1, 1)], 9))
    for i in range(2):
        for j in range(2):
            assert B[i, j].lead_exp == A[i, j].lead_exp + 1
            assert B[i, j][1] == A[i, j][0]


def test_size_mismatch():
    with pytest.raises(SizeMismatch):
        mat_arith("add", sm({0: RationalMatrix.identity(2)}), sm({0: RationalMatrix.identity(3)}))


# -- characteristic polynomial ----------------------------------------------------


@pytest.mark.parametrize("mu", [(1,), (2,), (2, 1), (3, 1, 1), (2, 2, 1)])
def test_charpoly_of_nilpotent_vanishes(mu):
    e = jordan_nilpotent(Partition(mu))
    for F in charpoly_coeffs(SeriesMatrix.from_rational(e, 6)):
        assert F.is_zero()


def test_charpoly_two_by_two_hand_expansion():
    # det(T - [[0,1],[z,0]]) = T^2 - z
    M = sm({0: E(2, 0, 1), 1: E(2, 1, 0)})
    F1, F2 = charpoly_coeffs(M)
    assert F1.is_zero()
    assert F2 == series_make([(1, -1)], 8)


def test_charpoly_identity():
    F1, F2 = charpoly_coeffs(SeriesMatrix.from_rational(RationalMatrix.identity(2), 5))
    assert F1[0] == -2 and F2[0] == 1


def test_charpoly_rational_entries():
    M = RationalMatrix([[Fraction(1, 2), 1], [0, Fraction(1, 3)]])
    F1, F2 = charpoly_coeffs(SeriesMatrix.from_rational(M, 3))
    assert F1[0] == Fraction(-5, 6) and F2[0] == Fraction(1, 6)


def test_charpoly_matches_cofactors():
    rng = random.Random(11)
    for _ in range(60):
        m = rng.randint(1, 4)
        M = random_int_matrix(rng, m)
        got = [F[0] for F in charpoly_coeffs(SeriesMatrix.from_rational(M, 3))]
        assert got == charpoly_by_cofactors(M)


def _series_det_cofactor(M: SeriesMatrix, prec: int):
    """det(T - M) coefficients by cofactor expansion on the z^0..z^(prec-1)
    coefficient matrices, pole-free M only: expand as polynomial in z."""
    m = M.size
    # each entry as list of z-coefficients; polynomials in (T, z) as dicts
    def entry(i, j):
        poly = {}
        for k in range(prec):
            c = -M[i, j][k]
            if c:
                poly[(0, k)] = c
        if i == j:
            poly[(1, 0)] = poly.get((1, 0), 0) + 1
        return poly

    def mul(p, q):
        out = {}
        for (a, b), x in p.items():
            for (c, d), y in q.items():
                if b + d < prec:
                    out[(a + c, b + d)] = out.get((a + c, b + d), 0) + x * y
        return out

    def add(p, q, sign=1):
        out = dict(p)
        for k, v in q.items():
            out[k] = out.get(k, 0) + sign * v
        return out

    def det(rows, cols):
        if len(rows) == 1:
            return entry(rows[0], cols[0])
        total = {}
        for idx, c in enumerate(cols):
            sub = det(rows[1:], cols[:idx] + cols[idx + 1:])
            total = add(total, mul(entry(rows[0], c), sub), -1 if idx % 2 else 1)
        return total

    return det(list(range(m)), list(range(m)))


def test_charpoly_series_matches_cofactors():
    rng = random.Random(5)
    prec = 4
    for _ in range(20):
        m = rng.randint(1, 3)
        coeffs = {k: random_int_matrix(rng, m, 3) for k in range(prec)}
        M = sm(coeffs, prec)
        brute = _series_det_cofactor(M, prec)
        for j, F in enumerate(charpoly_coeffs(M), start=1):
            for k in range(prec):
                assert F[k] == brute.get((m - j, k), 0)


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 4), st.integers(0, 3), st.randoms(use_true_random=False))
def test_homogeneity(m, k, rnd):
    coeffs = {t: random_int_matrix(rnd, m, 3) for t in range(4)}
    M = sm(coeffs, 8)
    Mk = M.shift(k)
    for j, (F, G) in enumerate(zip(charpoly_coeffs(M), charpoly_coeffs(Mk)), start=1):
        v, w = series_valuation(F), series_valuation(G)
        assert w.exact == v.exact and w.value == v.value + j * k


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 4), st.integers(0, 2**32))
def test_conjugation_invariance(m, seed):
    rnd = random.Random(seed)
    while True:
        P = random_int_matrix(rnd, m, 3)
        if rational_rank(P) == m:
            break
    Pi = inverse(P)
    coeffs = {t: random_int_matrix(rnd, m, 3) for t in range(3)}
    M = sm(coeffs, 5)
    conj = sm({t: P @ c @ Pi for t, c in coeffs.items()}, 5)
    for F, G in zip(charpoly_coeffs(M), charpoly_coeffs(conj)):
        assert F == G


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 4), st.integers(0, 5), st.randoms(use_true_random=False))
def test_jet_dependence(m, k, rnd):
    prec = 8
    base = {t: random_int_matrix(rnd, m, 4) for t in range(prec)}
    other = {t: (base[t] if t <= k else random_int_matrix(rnd, m, 4)) for t in range(prec)}
    for F, G in zip(charpoly_coeffs(sm(base, prec)), charpoly_coeffs(sm(other, prec))):
        assert all(F[e] == G[e] for e in range(k + 1))


def test_charpoly_precision_with_pole():
    M = sm({-1: E(2, 0, 1), 0: E(2, 1, 0)}, 5)
    F1, F2 = charpoly_coeffs(M)
    assert F2.lead_exp == -2 and F2.precision == -2 + 6
    assert series_valuation(F2) == Exact(-1)


# -- rank, nullspace, Jordan type ---------------------------------------------------


def test_rank_examples():
    assert rational_rank(RationalMatrix.zeros(3)) == 0
    assert rational_rank(RationalMatrix.identity(4)) == 4
    assert rational_rank(RationalMatrix([[1, 2], [2, 4]])) == 1


@settings(max_examples=100, deadline=None)
@given(
    st.integers(1, 5),
    st.integers(1, 5),
    st.randoms(use_true_random=False),
)
def test_rank_nullity(nrows, ncols, rnd):
    rows = [[Fraction(rnd.randint(-2, 2), rnd.randint(1, 3)) for _ in range(ncols)] for _ in range(nrows)]
    if rnd.random() < 0.5 and nrows > 1:
        rows[-1] = [a + b for a, b in zip(rows[0], rows[1 % nrows])]
    kernel = nullspace(rows, ncols)
    assert bareiss_rank(rows) + len(kernel) == ncols
    for v in kernel:
        assert all(sum(r[i] * v[i] for i in range(ncols)) == 0 for r in rows)


def test_inverse():
    M = RationalMatrix([[2, 1], [1, 1]])
    assert M @ inverse(M) == RationalMatrix.identity(2)


def test_jordan_type_examples():
    assert jordan_type(RationalMatrix([[0, 1], [0, 0]])) == Partition((2,))
    assert jordan_type(RationalMatrix.zeros(3)) == Partition((1, 1, 1))
    assert jordan_type(jordan_nilpotent(Partition((2, 2, 1)))) == Partition((2, 2, 1))


def test_jordan_type_rejects_non_nilpotent():
    with pytest.raises(NotNilpotent, match="not nilpotent"):
        jordan_type(RationalMatrix([[0, 1, 0], [0, 0, 0], [0, 0, 1]]))


def test_jordan_roundtrip_small():
    for m in range(1, 8):
        for mu in iter_partitions(m):
            assert jordan_type(jordan_nilpotent(mu)) == mu


def test_jordan_type_conjugated():
    rng = random.Random(3)
    mu = Partition((3, 2, 2, 1))
    e = jordan_nilpotent(mu)
    while True:
        P = random_int_matrix(rng, 8, 2)
        if rational_rank(P) == 8:
            break
    assert jordan_type(P @ e @ inverse(P)) == mu


# -- trace pairing ---------------------------------------------------------------------


def test_trace_pairing_identity():
    I = SeriesMatrix.from_rational(RationalMatrix.identity(2), 6)
    assert trace_pairing(I, I) == series_make([(0, 2)], 6)


def test_trace_pairing_upper_vs_strict_upper():
    X = SeriesMatrix.from_rational(RationalMatrix([[0, 3, 1], [0, 0, 2], [0, 0, 0]]), 6)
    Y = SeriesMatrix.from_rational(RationalMatrix([[1, 2, 3], [0, 4, 5], [0, 0, 6]]), 6)
    assert trace_pairing(X, Y).is_zero()


def test_trace_pairing_single_term():
    X = sm({-1: E(2, 0, 1)}, 6)
    Y = sm({1: E(2, 1, 0)}, 6)
    p = trace_pairing(X, Y)
    assert series_valuation(p) == Exact(0) and p[0] == 1
