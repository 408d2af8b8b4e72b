"""Truncated Laurent series with exact rational coefficients.

A series is stored densely over the window ``lead_exp .. precision - 1``;
everything at exponent ``precision`` and beyond is unknown (``O(z^N)``).
Precision is tracked per value and every operation takes the pessimistic
minimum, so a valuation read off a result is never overstated.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Sequence


DEFAULT_PRECISION = 12


@dataclass(frozen=True)
class Valuation:
    """Order of vanishing: ``exact=True`` means the z^value coefficient is
    nonzero; ``exact=False`` means every known coefficient is zero and the
    true order is at least ``value`` (the precision)."""

    value: int
    exact: bool

    def at_least(self, bound: int) -> bool:
        # An AtLeast(N) with N < bound cannot certify anything.
        return self.value >= bound

    def __str__(self) -> str:
        return f"{self.value}" if self.exact else f">={self.value}"


def Exact(k: int) -> Valuation:
    return Valuation(k, True)


def AtLeast(n: int) -> Valuation:
    return Valuation(n, False)


def _q(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, Rational)):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"coefficient {x!r} is not an exact rational")


class TruncatedLaurentSeries:
    __slots__ = ("lead_exp", "coeffs", "precision")

    def __init__(self, lead_exp: int, coeffs: Sequence, precision: int):
        coeffs = tuple(_q(c) for c in coeffs)
        if lead_exp > precision:
            raise ValueError(f"lead_exp {lead_exp} exceeds precision {precision}")
        if len(coeffs) != precision - lead_exp:
            raise ValueError(
                f"expected {precision - lead_exp} coefficients, got {len(coeffs)}"
            )
        object.__setattr__(self, "lead_exp", lead_exp)
        object.__setattr__(self, "coeffs", coeffs)
        object.__setattr__(self, "precision", precision)

    def __setattr__(self, name, value):
        raise AttributeError("TruncatedLaurentSeries is immutable")

    # -- construction helpers ------------------------------------------------

    @classmethod
    def zero(cls, precision: int = DEFAULT_PRECISION) -> TruncatedLaurentSeries:
        return cls(precision, (), precision)

    @classmethod
    def constant(cls, c, precision: int = DEFAULT_PRECISION) -> TruncatedLaurentSeries:
        return series_make([(0, c)], precision)

    @classmethod
    def monomial(cls, exp: int, c=1, precision: int = DEFAULT_PRECISION) -> TruncatedLaurentSeries:
        return series_make([(exp, c)], precision)

    # -- access ----------------------------------------------------------------

    def __getitem__(self, k: int) -> Fraction:
        """Coefficient of z^k; raises for exponents at or beyond precision."""
        if k >= self.precision:
            raise IndexError(f"coefficient of z^{k} is unknown (precision {self.precision})")
        if k < self.lead_exp:
            return Fraction(0)
        return self.coeffs[k - self.lead_exp]

    def items(self) -> Iterable[tuple[int, Fraction]]:
        """Nonzero (exponent, coefficient) pairs in increasing exponent order."""
        for i, c in enumerate(self.coeffs):
            if c:
                yield self.lead_exp + i, c

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def valuation(self) -> Valuation:
        return series_valuation(self)

    def truncate(self, precision: int) -> TruncatedLaurentSeries:
        if precision >= self.precision:
            return self
        lead = min(self.lead_exp, precision)
        return TruncatedLaurentSeries(lead, self.coeffs[: precision - lead], precision)

    def shift(self, k: int) -> TruncatedLaurentSeries:
        """Multiply by z^k."""
        return TruncatedLaurentSeries(self.lead_exp + k, self.coeffs, self.precision + k)

    # -- arithmetic ------------------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, TruncatedLaurentSeries):
            other = TruncatedLaurentSeries.constant(other, self.precision)
        return series_add(self, other)

    __radd__ = __add__

    def __neg__(self):
        return TruncatedLaurentSeries(self.lead_exp, [-c for c in self.coeffs], self.precision)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, TruncatedLaurentSeries):
            return series_mul(self, other)
        c = _q(other)
        return TruncatedLaurentSeries(self.lead_exp, [c * x for x in self.coeffs], self.precision)

    __rmul__ = __mul__

    def __truediv__(self, other):
        c = _q(other)
        if not c:
            raise ZeroDivisionError("division of a series by zero")
        return TruncatedLaurentSeries(self.lead_exp, [x / c for x in self.coeffs], self.precision)

    def __eq__(self, other):
        # Only the range known on both sides is compared.
        if not isinstance(other, TruncatedLaurentSeries):
            return NotImplemented
        lo = min(self.lead_exp, other.lead_exp)
        hi = min(self.precision, other.precision)
        return all(self[k] == other[k] for k in range(lo, hi))

    __hash__ = None

    def __repr__(self) -> str:
        terms = []
        for k, c in self.items():
            if k == 0:
                terms.append(f"{c}")
            else:
                mono = "z" if k == 1 else f"z^{k}"
                terms.append(mono if c == 1 else f"{c}*{mono}")
        terms.append(f"O(z^{self.precision})")
        return " + ".join(terms)


def series_make(coeff_pairs, precision: int) -> TruncatedLaurentSeries:
    """Build a series from (exponent, coefficient) pairs; repeated exponents add."""
    pairs = [(int(e), _q(c)) for e, c in coeff_pairs]
    for e, _ in pairs:
        if e >= precision:
            raise ValueError(f"exponent {e} is not below precision {precision}")
    if not pairs:
        return TruncatedLaurentSeries.zero(precision)
    lead = min(e for e, _ in pairs)
    coeffs = [Fraction(0)] * (precision - lead)
    for e, c in pairs:
        coeffs[e - lead] += c
    return TruncatedLaurentSeries(lead, coeffs, precision)


def series_add(a: TruncatedLaurentSeries, b: TruncatedLaurentSeries) -> TruncatedLaurentSeries:
    prec = min(a.precision, b.precision)
    lead = min(a.lead_exp, b.lead_exp, prec)
    return TruncatedLaurentSeries(lead, [a[k] + b[k] for k in range(lead, prec)], prec)


def series_mul(a: TruncatedLaurentSeries, b: TruncatedLaurentSeries) -> TruncatedLaurentSeries:
    lead = a.lead_exp + b.lead_exp
    prec = min(a.precision + b.lead_exp, b.precision + a.lead_exp)
    out = [Fraction(0)] * (prec - lead)
    ac, bc = a.coeffs, b.coeffs
    for i, x in enumerate(ac):
        if not x:
            continue
        for j in range(min(len(bc), len(out) - i)):
            y = bc[j]
            if y:
                out[i + j] += x * y
    return TruncatedLaurentSeries(lead, out, prec)


def series_valuation(s: TruncatedLaurentSeries) -> Valuation:
    for i, c in enumerate(s.coeffs):
        if c:
            return Exact(s.lead_exp + i)
    return AtLeast(s.precision)
