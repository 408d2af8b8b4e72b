"""Partitions and the nilpotent-orbit numerology attached to them."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from itertools import accumulate
from typing import Iterator


class InadmissiblePartition(ValueError):
    pass


@dataclass(frozen=True, order=True)
class Partition:
    parts: tuple[int, ...]

    def __init__(self, parts=()):
        parts = tuple(int(p) for p in parts)
        if any(p < 1 for p in parts):
            raise ValueError(f"partition parts must be positive: {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"partition parts must be weakly decreasing: {parts}")
        object.__setattr__(self, "parts", parts)

    @property
    def total(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __str__(self) -> str:
        return ",".join(map(str, self.parts))

    @classmethod
    def _trusted(cls, parts: tuple[int, ...]) -> Partition:
        # skips validation; for generators that produce sorted tuples
        obj = object.__new__(cls)
        object.__setattr__(obj, "parts", parts)
        return obj

    @classmethod
    def parse(cls, text: str) -> Partition:
        """Inverse of ``str``: "2,2,1" -> (2,2,1); the empty string is the empty partition."""
        text = text.strip()
        if not text:
            return cls(())
        try:
            parts = [int(tok) for tok in text.split(",")]
        except ValueError:
            raise ValueError(f"cannot parse partition {text!r}") from None
        return cls(parts)


def dual_partition(mu: Partition) -> Partition:
    if not mu.parts:
        return Partition(())
    return Partition([sum(1 for p in mu.parts if p >= j) for j in range(1, mu.parts[0] + 1)])


def n_of(mu: Partition, j: int) -> int:
    """Index a with m_1 + ... + m_{a-1} < j <= m_1 + ... + m_a."""
    if not 1 <= j <= mu.total:
        raise ValueError(f"j={j} outside 1..{mu.total}")
    for a, s in enumerate(accumulate(mu.parts), start=1):
        if j <= s:
            return a
    raise AssertionError("unreachable")


def classify(mu: Partition) -> dict[str, bool]:
    mult = Counter(mu.parts)
    return {
        "symplectic": all(c % 2 == 0 for p, c in mult.items() if p % 2 == 1),
        "orthogonal": all(c % 2 == 0 for p, c in mult.items() if p % 2 == 0),
    }


def check_admissible(mu: Partition, kind: str) -> None:
    if kind in ("gl", "sl"):
        return
    flags = classify(mu)
    if kind == "sp":
        if mu.total % 2 or not flags["symplectic"]:
            raise InadmissiblePartition(f"{mu} is not the partition of a symplectic nilpotent")
    elif kind == "so":
        if not flags["orthogonal"]:
            raise InadmissiblePartition(f"{mu} is not the partition of an orthogonal nilpotent")
    else:
        raise ValueError(f"unknown algebra family {kind!r}")


def centralizer_dim_formula(mu: Partition, kind: str) -> int:
    check_admissible(mu, kind)
    sq = sum(p * p for p in dual_partition(mu).parts)
    odd = sum(1 for p in mu.parts if p % 2)
    if kind == "gl":
        return sq
    if kind == "sl":
        return sq - 1
    if kind == "sp":
        return (sq + odd) // 2
    return (sq - odd) // 2


def lemma3_sides(mu: Partition) -> tuple[int, int]:
    """(sum_i i*m_i, 1/2 sum_j (d_j^2 + d_j)) with d the dual partition."""
    lhs = sum(i * p for i, p in enumerate(mu.parts, start=1))
    twice = sum(d * d + d for d in dual_partition(mu).parts)
    return lhs, twice // 2


def cor3_sides(mu: Partition) -> tuple[Fraction, Fraction]:
    """(sum_{j<=n} n(mu,2j), n/2 + dim Z_sp(e)/2) as exact rationals."""
    check_admissible(mu, "sp")
    n = mu.total // 2
    lhs = sum(n_of(mu, 2 * j) for j in range(1, n + 1))
    rhs = Fraction(n, 2) + Fraction(centralizer_dim_formula(mu, "sp"), 2)
    return Fraction(lhs), rhs


def dominance_leq(mu: Partition, lam: Partition) -> bool:
    if mu.total != lam.total:
        raise ValueError(f"totals differ: {mu.total} vs {lam.total}")
    k = max(len(mu), len(lam))
    a = list(accumulate(mu.parts + (0,) * (k - len(mu))))
    b = list(accumulate(lam.parts + (0,) * (k - len(lam))))
    return all(x <= y for x, y in zip(a, b))


def _partitions_desc(m: int) -> Iterator[tuple[int, ...]]:
    if m == 0:
        yield ()
        return
    a = [m]
    while True:
        yield tuple(a)
        ones = 0
        while a and a[-1] == 1:
            a.pop()
            ones += 1
        if not a:
            return
        x = a.pop() - 1
        rem = ones + 1
        a.append(x)
        while rem > x:
            a.append(x)
            rem -= x
        if rem:
            a.append(rem)


def iter_partitions(m: int, filter: str = "all") -> Iterator[Partition]:
    """Partitions of m in reverse-lexicographic order."""
    if m < 0:
        raise ValueError("m must be non-negative")
    if filter not in ("all", "symplectic", "orthogonal"):
        raise ValueError(f"unknown filter {filter!r}")
    for parts in _partitions_desc(m):
        mu = Partition._trusted(parts)
        if filter == "all" or classify(mu)[filter]:
            yield mu


def enumerate_partitions(m: int, filter: str = "all") -> list[Partition]:
    return list(iter_partitions(m, filter))
