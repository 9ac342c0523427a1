# SPDX-License-Identifier: LGPL-2.1-only
# Copyright (C) 2026 qgenocchi contributors
"""
Truncated power series in eps over the rationals, and the q -> 1 limits.

We expand around q = 1 + eps (not 1 - q), so q^k = (1 + eps)^k has
nonnegative binomial coefficients for k >= 0.

A :class:`FormalSeries` stores ``order`` known coefficients starting at
eps^valuation; it is known modulo eps^(valuation + order). Leading zeros are
stripped on construction, which lowers ``order`` accordingly. A series whose
known coefficients all vanish keeps no coefficients and its valuation equals
its absolute precision.
"""

from __future__ import annotations

import logging
import math
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Union

from typing_extensions import Self

from .errors import OrderTooSmallError
from .qcore import IdentityReport, WeightPair, pascal_row, require_index, to_fraction

logger = logging.getLogger(__name__)

Scalar = Union[Fraction, int]


@dataclass(frozen=True)
class FormalSeries:
    valuation: int
    coefficients: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        coeffs = tuple(Fraction(c) for c in self.coefficients)
        skip = 0
        while skip < len(coeffs) and coeffs[skip] == 0:
            skip += 1
        object.__setattr__(self, "valuation", self.valuation + skip)
        object.__setattr__(self, "coefficients", coeffs[skip:])

    @classmethod
    def from_coefficients(cls, coefficients: Iterable[Scalar], valuation: int = 0) -> Self:
        return cls(valuation, tuple(Fraction(c) for c in coefficients))

    @classmethod
    def zero(cls, precision: int) -> Self:
        return cls(precision, ())

    @classmethod
    def constant(cls, value: Scalar, precision: int) -> Self:
        """``value`` known modulo eps^precision."""
        if precision <= 0:
            return cls.zero(precision)
        return cls(0, (Fraction(value),) + (Fraction(0),) * (precision - 1))

    @classmethod
    def binomial_power(cls, k: Scalar, precision: int) -> Self:
        """(1 + eps)^k for any rational k, by the generalized binomial series."""
        k = Fraction(k)
        coeffs = []
        c = Fraction(1)
        for j in range(precision):
            coeffs.append(c)
            c = c * (k - j) / (j + 1)
        return cls(0, tuple(coeffs))

    @classmethod
    def exponential(cls, precision: int) -> Self:
        """exp(t) to the given precision."""
        return cls(0, tuple(Fraction(1, math.factorial(j)) for j in range(precision)))

    @property
    def order(self) -> int:
        return len(self.coefficients)

    @property
    def precision(self) -> int:
        """Absolute precision: the series is known modulo eps^precision."""
        return self.valuation + self.order

    @property
    def is_zero(self) -> bool:
        return not self.coefficients

    def coefficient(self, k: int) -> Fraction:
        if k >= self.precision:
            raise OrderTooSmallError(
                f"order too small: coefficient of eps^{k} requested, series known mod eps^{self.precision}"
            )
        if k < self.valuation:
            return Fraction(0)
        return self.coefficients[k - self.valuation]

    @property
    def constant_term(self) -> Fraction:
        return self.coefficient(0)

    def __neg__(self) -> FormalSeries:
        return FormalSeries(self.valuation, tuple(-c for c in self.coefficients))

    def __add__(self, other: FormalSeries | Scalar) -> FormalSeries:
        if not isinstance(other, FormalSeries):
            other = FormalSeries.constant(other, self.precision)
        precision = min(self.precision, other.precision)
        start = min(self.valuation, other.valuation)
        if precision <= start:
            return FormalSeries.zero(precision)
        coeffs = [Fraction(0)] * (precision - start)
        for series in (self, other):
            for i, c in enumerate(series.coefficients):
                k = series.valuation + i - start
                if k >= len(coeffs):
                    break
                coeffs[k] += c
        return FormalSeries(start, tuple(coeffs))

    __radd__ = __add__

    def __sub__(self, other: FormalSeries | Scalar) -> FormalSeries:
        return self + (-other)

    def __rsub__(self, other: Scalar) -> FormalSeries:
        return (-self) + other

    def _scaled(self, factor: Scalar) -> FormalSeries:
        factor = Fraction(factor)
        if factor == 0:
            return FormalSeries.zero(self.precision)
        return FormalSeries(self.valuation, tuple(factor * c for c in self.coefficients))

    def __mul__(self, other: FormalSeries | Scalar) -> FormalSeries:
        if not isinstance(other, FormalSeries):
            return self._scaled(other)
        valuation = self.valuation + other.valuation
        order = min(self.order, other.order)
        a, b = self.coefficients, other.coefficients
        coeffs = tuple(
            sum((a[i] * b[k - i] for i in range(k + 1)), Fraction(0)) for k in range(order)
        )
        if not coeffs:
            return FormalSeries.zero(valuation)
        return FormalSeries(valuation, coeffs)

    __rmul__ = __mul__

    def __truediv__(self, other: FormalSeries | Scalar) -> FormalSeries:
        if not isinstance(other, FormalSeries):
            return self._scaled(1 / Fraction(other))
        if other.is_zero:
            raise OrderTooSmallError(
                f"order too small: divisor vanishes modulo eps^{other.precision}"
            )
        valuation = self.valuation - other.valuation
        order = min(self.order, other.order)
        a, b = self.coefficients, other.coefficients
        lead = b[0]
        quotient: list[Fraction] = []
        for k in range(order):
            acc = a[k] - sum((b[j] * quotient[k - j] for j in range(1, k + 1)), Fraction(0))
            quotient.append(acc / lead)
        if not quotient:
            return FormalSeries.zero(valuation)
        return FormalSeries(valuation, tuple(quotient))

    def __rtruediv__(self, other: Scalar) -> FormalSeries:
        return FormalSeries.constant(other, self.order) / self

    def __pow__(self, exponent: int) -> FormalSeries:
        require_index("exponent", exponent)
        result = FormalSeries.constant(1, max(self.order, 1))
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    def __str__(self) -> str:
        terms = [f"({c})*eps^{self.valuation + i}" for i, c in enumerate(self.coefficients) if c]
        return " + ".join(terms + [f"O(eps^{self.precision})"])


def _genocchi_series(n: int, w: WeightPair, order: int, x: Fraction) -> FormalSeries:
    if n == 0:
        return FormalSeries.zero(order)
    one = FormalSeries.constant(1, order)
    total = FormalSeries.zero(order)
    for l, c in enumerate(pascal_row(n - 1)):
        term = FormalSeries.binomial_power(w.alpha * l * x, order) * c
        term = term / (one + FormalSeries.binomial_power(w.alpha * l, order))
        total = total - term if l % 2 else total + term
    denominator = (one - FormalSeries.binomial_power(w.alpha, order)) ** (n - 1)
    if total.valuation < denominator.valuation:
        logger.debug("numerator valuation %d below denominator %d", total.valuation, denominator.valuation)
        raise OrderTooSmallError()
    prefactor = (one + FormalSeries.binomial_power(w.beta, order)) * n
    result = total / denominator * prefactor
    if result.precision < 1:
        raise OrderTooSmallError()
    return result


def _check_order(n: int, order: int | None) -> int:
    require_index("n", n)
    if order is None:
        return n + 4
    require_index("order", order, 1)
    if order < n + 2:
        raise OrderTooSmallError(f"order too small: need order >= n + 2 = {n + 2}, got {order}")
    return order


def series_genocchi(n: int, w: WeightPair, order: int | None = None) -> FormalSeries:
    """Expansion of g_{n,q}^{(alpha,beta)} at q = 1 + eps (default order n + 4)."""
    order = _check_order(n, order)
    return _genocchi_series(n, w, order, Fraction(0))


def series_genocchi_polynomial(n: int, w: WeightPair, x: int, order: int | None = None) -> FormalSeries:
    """Expansion of g_{n,q}^{(alpha,beta)}(x) at q = 1 + eps, for an integer x."""
    order = _check_order(n, order)
    if isinstance(x, bool) or not isinstance(x, int):
        raise TypeError(f"x must be an integer, got {type(x).__name__}")
    return _genocchi_series(n, w, order, Fraction(x))


@lru_cache(maxsize=64)
def classical_genocchi_table(n_max: int) -> tuple[Fraction, ...]:
    """G_0..G_{n_max} from 2t / (e^t + 1) by exact series division."""
    require_index("n_max", n_max)
    precision = n_max + 2
    numerator = FormalSeries(1, (Fraction(2),) + (Fraction(0),) * n_max)
    denominator = FormalSeries.exponential(precision) + 1
    quotient = numerator / denominator
    return tuple(math.factorial(k) * quotient.coefficient(k) for k in range(n_max + 1))


def classical_genocchi(n: int) -> Fraction:
    require_index("n", n)
    return classical_genocchi_table(max(n, 1))[n]


def classical_genocchi_polynomial(n: int, x: Scalar | str) -> Fraction:
    """G_n(x), the coefficients of 2t e^{xt} / (e^t + 1)."""
    require_index("n", n)
    x = to_fraction(x)
    table = classical_genocchi_table(max(n, 1))
    return sum((c * table[k] * x ** (n - k) for k, c in enumerate(pascal_row(n))), Fraction(0))


def genocchi_convolution_residuals(n_max: int) -> list[Fraction]:
    """Residuals of (e^t + 1) * sum G_n t^n / n! = 2t, coefficient by coefficient.

    Entry k is k! times the t^k coefficient of the left side minus that of 2t.
    """
    table = classical_genocchi_table(max(n_max, 1))
    residuals = []
    for k in range(n_max + 1):
        # k! [t^k] (e^t * G(t)) = sum_j C(k, j) G_j, plus G_k from the "+1"
        lhs = sum((c * table[j] for j, c in enumerate(pascal_row(k))), Fraction(0)) + table[k]
        rhs = Fraction(2) if k == 1 else Fraction(0)
        residuals.append(lhs - rhs)
    return residuals


def check_classical_limit(n: int, w: WeightPair, order: int | None = None) -> IdentityReport:
    """Constant term of the expansion at q = 1 against G_n."""
    series = series_genocchi(n, w, order)
    lhs = series.constant_term
    rhs = classical_genocchi(n)
    params = {"n": n, "alpha": w.alpha, "beta": w.beta, "order": order or n + 4}
    return IdentityReport("classical_limit", params, lhs, rhs, lhs - rhs, lhs == rhs)


def check_classical_polynomial_limit(n: int, w: WeightPair, x: int,
                                     order: int | None = None) -> IdentityReport:
    series = series_genocchi_polynomial(n, w, x, order)
    lhs = series.constant_term
    rhs = classical_genocchi_polynomial(n, x)
    params = {"n": n, "alpha": w.alpha, "beta": w.beta, "x": x, "order": order or n + 4}
    return IdentityReport("classical_polynomial_limit", params, lhs, rhs, lhs - rhs, lhs == rhs)


def limit_table(n_max: int, w: WeightPair) -> Sequence[Fraction]:
    """lim_{q->1} g_{n,q}^{(alpha,beta)} for n = 0..n_max."""
    return [series_genocchi(n, w).constant_term for n in range(n_max + 1)]
