"""High-precision comparisons for quantities built from ``1/sqrt(d+1)``.

Rational sides stay as :class:`~fractions.Fraction`.  Irrational sides are
evaluated with :mod:`decimal` at 60 significant digits, and two values whose
difference is below :data:`GUARD` are treated as equal.  Every such sum
compared here has magnitude below ``10**12``, so the guard band is tens of
orders of magnitude wider than the evaluation error and far narrower than any
genuine gap.
"""

from __future__ import annotations

from decimal import Context, Decimal
from fractions import Fraction
from typing import Mapping

CTX = Context(prec=60)
GUARD = Decimal("1e-40")

_inv_sqrt_cache: dict[int, Decimal] = {}


def inv_sqrt(m: int) -> Decimal:
    """``1/sqrt(m)`` for a positive integer ``m``."""
    value = _inv_sqrt_cache.get(m)
    if value is None:
        value = CTX.divide(Decimal(1), CTX.sqrt(Decimal(m)))
        _inv_sqrt_cache[m] = value
    return value


def to_decimal(x: Fraction | int) -> Decimal:
    x = Fraction(x)
    return CTX.divide(Decimal(x.numerator), Decimal(x.denominator))


def inv_sqrt_sum(hist: Mapping[int, int]) -> Decimal:
    """``sum(count / sqrt(d + 1))`` over a distance histogram ``{d: count}``."""
    total = Decimal(0)
    for d, count in hist.items():
        total = CTX.add(total, CTX.multiply(Decimal(count), inv_sqrt(d + 1)))
    return total


def inv_sum(hist: Mapping[int, int]) -> Fraction:
    """``sum(count / (d + 1))`` exactly."""
    return sum((Fraction(count, d + 1) for d, count in hist.items()), Fraction(0))


def exceeds(lhs, rhs) -> bool:
    """``lhs > rhs`` outside the guard band."""
    return CTX.subtract(_dec(lhs), _dec(rhs)) > GUARD


def at_least(lhs, rhs) -> bool:
    """``lhs >= rhs`` up to the guard band."""
    return CTX.subtract(_dec(lhs), _dec(rhs)) >= -GUARD


def _dec(x) -> Decimal:
    if isinstance(x, Decimal):
        return x
    if isinstance(x, (int, Fraction)):
        return to_decimal(x)
    return Decimal(repr(float(x)))
