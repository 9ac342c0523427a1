# SPDX-License-Identifier: LGPL-2.1-only
# Copyright (C) 2026 qgenocchi contributors
"""
p-adic numbers at finite precision and Riemann sums of the fermionic q-measure.

The level-N Riemann sum of f against mu_{-q^beta} is

    S_N(f) = 1 / [p^N]_{-q^beta} * sum_{x < p^N} (-1)^x q^(beta x) f(x)

and is computed exactly over the rationals. Reduction to Z_p happens only when
two values are compared, so nothing is lost inside the sum.
"""

from __future__ import annotations

import logging
from collections.abc import Mapping, Sequence
from dataclasses import dataclass, field
from fractions import Fraction
from typing import NamedTuple

from typing_extensions import Self

from .config import padic_defaults, term_budget
from .errors import BudgetExceededError, DegenerateQError, InadmissibleQError, PrecisionExhaustedError
from .qcore import IdentityReport, RationalLike, WeightPair, bracket, pascal_row, require_index, to_fraction

logger = logging.getLogger(__name__)


def p_valuation(n: int, p: int) -> int:
    """v_p of a nonzero integer."""
    if n == 0:
        raise ValueError("v_p(0) is infinite")
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def require_odd_prime(p: int) -> int:
    require_index("p", p, 3)
    if p % 2 == 0 or any(p % d == 0 for d in range(3, int(p**0.5) + 1, 2)):
        raise ValueError(f"p must be an odd prime, got {p}")
    return p


@dataclass(frozen=True)
class PadicNumber:
    """p^valuation * unit, known modulo p^(valuation + precision).

    The zero of a given absolute precision A has unit 0, valuation A and
    precision 0: it is "divisible by p^A and nothing more is known".
    """

    prime: int
    precision: int
    valuation: int
    unit: int

    def __post_init__(self) -> None:
        if self.unit == 0:
            if self.precision != 0:
                raise ValueError("zero carries its precision in the valuation")
            return
        if self.precision < 1:
            raise PrecisionExhaustedError()
        if self.unit % self.prime == 0:
            raise ValueError(f"unit {self.unit} is divisible by {self.prime}")
        object.__setattr__(self, "unit", self.unit % self.prime**self.precision)

    @classmethod
    def zero(cls, prime: int, absolute_precision: int) -> Self:
        return cls(prime, 0, absolute_precision, 0)

    @classmethod
    def _normalized(cls, prime: int, value: int, start: int, absolute_precision: int) -> Self:
        """p^start * value modulo p^absolute_precision, with p-factors moved into the valuation."""
        value %= prime ** max(absolute_precision - start, 0)
        if value == 0:
            return cls.zero(prime, absolute_precision)
        shift = p_valuation(value, prime)
        return cls(prime, absolute_precision - start - shift, start + shift, value // prime**shift)

    @property
    def is_zero(self) -> bool:
        return self.unit == 0

    @property
    def absolute_precision(self) -> int:
        return self.valuation + self.precision

    def _check(self, other: PadicNumber) -> None:
        if self.prime != other.prime:
            raise ValueError(f"mixed primes {self.prime} and {other.prime}")

    def _coerce(self, other: PadicNumber | RationalLike) -> PadicNumber:
        if isinstance(other, PadicNumber):
            self._check(other)
            return other
        return padic_reduce(other, self.prime, max(self.absolute_precision, 1))

    def __neg__(self) -> PadicNumber:
        if self.is_zero:
            return self
        return PadicNumber(self.prime, self.precision, self.valuation, -self.unit)

    def __add__(self, other: PadicNumber | RationalLike) -> PadicNumber:
        other = self._coerce(other)
        absolute = min(self.absolute_precision, other.absolute_precision)
        start = min(self.valuation, other.valuation)
        p = self.prime
        value = self.unit * p ** (self.valuation - start) + other.unit * p ** (other.valuation - start)
        return PadicNumber._normalized(p, value, start, absolute)

    __radd__ = __add__

    def __sub__(self, other: PadicNumber | RationalLike) -> PadicNumber:
        return self + (-self._coerce(other))

    def __rsub__(self, other: RationalLike) -> PadicNumber:
        return self._coerce(other) - self

    def __mul__(self, other: PadicNumber | RationalLike) -> PadicNumber:
        other = self._coerce(other)
        valuation = self.valuation + other.valuation
        if self.is_zero or other.is_zero:
            return PadicNumber.zero(self.prime, valuation)
        precision = min(self.precision, other.precision)
        return PadicNumber(self.prime, precision, valuation, self.unit * other.unit)

    __rmul__ = __mul__

    def __truediv__(self, other: PadicNumber | RationalLike) -> PadicNumber:
        other = self._coerce(other)
        if other.is_zero:
            raise PrecisionExhaustedError(
                f"precision exhausted: divisor is 0 modulo {self.prime}^{other.valuation}"
            )
        valuation = self.valuation - other.valuation
        if self.is_zero:
            return PadicNumber.zero(self.prime, valuation)
        precision = min(self.precision, other.precision)
        inverse = pow(other.unit, -1, self.prime**precision)
        return PadicNumber(self.prime, precision, valuation, self.unit * inverse)

    def __pow__(self, exponent: int) -> PadicNumber:
        require_index("exponent", exponent)
        result = padic_reduce(1, self.prime, max(self.precision, 1))
        for _ in range(exponent):
            result = result * self
        return result

    def agrees_with(self, other: PadicNumber) -> int:
        """v_p(self - other), capped at the common absolute precision."""
        return (self - other).valuation

    def residue(self) -> Fraction:
        """The stored value p^valuation * unit as a rational representative."""
        if self.is_zero:
            return Fraction(0)
        return self.unit * Fraction(self.prime) ** self.valuation

    def __str__(self) -> str:
        big_o = f"O({self.prime}^{self.absolute_precision})"
        if self.is_zero:
            return big_o
        if self.valuation == 0:
            return f"{self.unit} + {big_o}"
        return f"{self.prime}^{self.valuation} * {self.unit} + {big_o}"


def padic_reduce(r: RationalLike, p: int, K: int) -> PadicNumber:
    """The image of r in Q_p, with K digits after the leading one.

    A denominator carrying more than K factors of p leaves nothing of the unit
    part inside the window and raises PrecisionExhaustedError.
    """
    require_odd_prime(p)
    require_index("K", K, 1)
    r = to_fraction(r)
    if r == 0:
        return PadicNumber.zero(p, K)
    num_v = p_valuation(r.numerator, p)
    den_v = p_valuation(r.denominator, p)
    if den_v > K:
        raise PrecisionExhaustedError(f"precision exhausted: {r} has {p}-adic valuation -{den_v} below -{K}")
    modulus = p**K
    numerator = r.numerator // p**num_v
    denominator = r.denominator // p**den_v
    return PadicNumber(p, K, num_v - den_v, numerator * pow(denominator, -1, modulus) % modulus)


@dataclass(frozen=True)
class PadicQ:
    """A rational q admissible for the p-adic measure: q = 1 (mod p), q != 1."""

    q: Fraction
    p: int

    def __post_init__(self) -> None:
        value = to_fraction(self.q)
        require_odd_prime(self.p)
        if value == 1:
            raise DegenerateQError()
        if value == 0 or value.denominator % self.p == 0 or (value.numerator - value.denominator) % self.p:
            raise InadmissibleQError(f"q = {value} is not congruent to 1 modulo {self.p}")
        object.__setattr__(self, "q", value)

    def one_minus_valuation(self, exponent: int) -> int:
        """v_p(1 - q^exponent)."""
        diff = 1 - self.q**exponent
        return p_valuation(diff.numerator, self.p) - p_valuation(diff.denominator, self.p)

    def __str__(self) -> str:
        return str(self.q)


class IntegrandTerm(NamedTuple):
    """coeff * q^(c x) * [x]_{q^a}^k"""

    coeff: Fraction
    c: int
    a: int
    k: int


@dataclass(frozen=True)
class IntegrandSpec:
    """A finite sum of terms coeff * q^(c x) * [x]_{q^a}^k, like terms merged."""

    terms: tuple[IntegrandTerm, ...] = ()

    def __post_init__(self) -> None:
        merged: dict[tuple[int, int, int], Fraction] = {}
        for coeff, c, a, k in self.terms:
            require_index("a", a, 1)
            require_index("k", k)
            if isinstance(c, bool) or not isinstance(c, int):
                raise TypeError(f"c must be an integer, got {type(c).__name__}")
            key = (c, a, k)
            merged[key] = merged.get(key, Fraction(0)) + to_fraction(coeff)
        terms = tuple(IntegrandTerm(v, *key) for key, v in sorted(merged.items()) if v != 0)
        object.__setattr__(self, "terms", terms)

    @classmethod
    def monomial(cls, c: int = 0, a: int = 1, k: int = 0, coeff: RationalLike = 1) -> Self:
        return cls((IntegrandTerm(to_fraction(coeff), c, a, k),))

    @classmethod
    def constant(cls, value: RationalLike = 1) -> Self:
        return cls.monomial(coeff=value)

    def __add__(self, other: IntegrandSpec) -> IntegrandSpec:
        return IntegrandSpec(self.terms + other.terms)

    def scale(self, factor: RationalLike) -> IntegrandSpec:
        factor = to_fraction(factor)
        return IntegrandSpec(tuple(t._replace(coeff=t.coeff * factor) for t in self.terms))

    def twist(self, c: int) -> IntegrandSpec:
        """Multiply by q^(c x)."""
        return IntegrandSpec(tuple(t._replace(c=t.c + c) for t in self.terms))

    def shift(self, m: int, q: RationalLike) -> IntegrandSpec:
        """The integrand x -> f(x + m), for a fixed value of q.

        Uses [x + m]_Q = [m]_Q + Q^m [x]_Q and q^(c (x + m)) = q^(c m) q^(c x).
        """
        if isinstance(m, bool) or not isinstance(m, int):
            raise TypeError(f"m must be an integer, got {type(m).__name__}")
        q = to_fraction(q)
        out: list[IntegrandTerm] = []
        for coeff, c, a, k in self.terms:
            base = q**a
            head = bracket(m, base)
            stretch = base**m
            outer = coeff * q ** (c * m)
            for j, binom in enumerate(pascal_row(k)):
                out.append(IntegrandTerm(outer * binom * head ** (k - j) * stretch**j, c, a, j))
        return IntegrandSpec(tuple(out))

    def evaluate(self, x: int, q: RationalLike) -> Fraction:
        q = to_fraction(q)
        return sum((coeff * q ** (c * x) * bracket(x, q**a) ** k for coeff, c, a, k in self.terms), Fraction(0))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"{t.coeff}*q^({t.c}x)*[x]_q^{t.a}^{t.k}" for t in self.terms)


def odd_normalizer(count: int, base: Fraction) -> Fraction:
    """(1 + base^count) / (1 + base), which is [count]_{-base} for odd count."""
    if count % 2 == 0:
        raise ValueError(f"count must be odd, got {count}")
    return (1 + base**count) / (1 + base)


def level_size(p: int, N: int, budget: int | None = None) -> int:
    """p^N, refusing anything above the term budget."""
    require_index("N", N, 1)
    limit = term_budget(budget)
    size = 1
    for _ in range(N):
        size *= p
        if size > limit:
            raise BudgetExceededError(f"budget exceeded: {p}^{N} terms, limit {limit}")
    return size


def alternating_partial_sum(f: IntegrandSpec, start: int, stop: int, q: Fraction, beta: int) -> Fraction:
    """sum_{start <= x < stop} (-1)^x q^(beta x) f(x), exactly.

    Independent ranges can be summed separately and added.
    """
    total = Fraction(0)
    for coeff, c, a, k in f.terms:
        base = q**a
        ratio = -(q ** (beta + c))
        weight = ratio**start
        value = bracket(start, base)
        step = base**start
        acc = Fraction(0)
        for _ in range(start, stop):
            acc += weight * value**k
            weight *= ratio
            # [x + 1] = [x] + Q^x
            value += step
            step *= base
        total += coeff * acc
    return total


def riemann_sum(f: IntegrandSpec, N: int, p: int, q: PadicQ, beta: int,
                budget: int | None = None) -> Fraction:
    """S_N(f) against mu_{-q^beta}, as an exact rational."""
    require_index("beta", beta, 1)
    if q.p != p:
        raise ValueError(f"q was admitted for p = {q.p}, not {p}")
    size = level_size(p, N, budget)
    logger.debug("riemann sum p=%d N=%d (%d points, %d terms)", p, N, size, len(f.terms))
    total = alternating_partial_sum(f, 0, size, q.q, beta)
    return total / odd_normalizer(size, q.q**beta)


def twisted_moment(c: int, n: int, alpha: int, beta: int, p: int, q: PadicQ, N: int,
                   budget: int | None = None) -> Fraction:
    """S_N of q^(c x) [x]_{q^alpha}^n under mu_{-q^beta}."""
    require_index("n", n)
    return riemann_sum(IntegrandSpec.monomial(c, alpha, n), N, p, q, beta, budget)


def witt_integrand(n: int, w: WeightPair, q: PadicQ, x: int = 0) -> IntegrandSpec:
    """q^(-beta t) [x + t]_{q^alpha}^n as a function of t."""
    base = IntegrandSpec.monomial(0, w.alpha, n)
    if x:
        base = base.shift(x, q.q)
    return base.twist(-w.beta)


def padic_closed_form(n: int, w: WeightPair, p: int, q: PadicQ, K: int, x: int = 0) -> PadicNumber:
    """g_{n+1,q}(x) / (n + 1) evaluated in Z_p.

    The alternating sum is divisible by (1 - q^alpha)^n; the working precision
    is raised by that valuation plus two guard digits before dividing.
    """
    require_index("n", n)
    require_index("K", K, 1)
    Q = q.q**w.alpha
    drop = n * q.one_minus_valuation(w.alpha)
    working = K + drop + 2
    total = PadicNumber.zero(p, working)
    for l, binom in enumerate(pascal_row(n)):
        term = padic_reduce(binom * Q ** (l * x), p, working) / padic_reduce(1 + Q**l, p, working)
        total = total - term if l % 2 else total + term
    quotient = total / padic_reduce(1 - Q, p, working) ** n
    result = quotient * padic_reduce(1 + q.q**w.beta, p, working)
    if result.absolute_precision < K:
        raise PrecisionExhaustedError(
            f"precision exhausted: closed form known to {result.absolute_precision} digits, wanted {K}"
        )
    return result


@dataclass(frozen=True)
class ConvergenceReport:
    """Valuations v_p(S_N - closed form) for N = 1..N_max."""

    identity: str
    params: Mapping[str, object]
    closed_form: PadicNumber
    levels: tuple[int, ...]
    sums: tuple[Fraction, ...]
    valuations: tuple[int, ...]
    delta: int
    passed: bool
    notes: tuple[str, ...] = field(default=())

    @property
    def monotone(self) -> bool:
        return all(a <= b for a, b in zip(self.valuations, self.valuations[1:]))

    @property
    def floor(self) -> tuple[int, ...]:
        return agreement_floor(self.valuations)


def agreement_floor(valuations: Sequence[int]) -> tuple[int, ...]:
    """min(v_N, v_{N+1}, ...) for each N; non-decreasing by construction.

    A level whose sum happens to share more digits with the limit than a later
    level does is lowered to what the later levels guarantee.
    """
    floor: list[int] = []
    running: int | None = None
    for v in reversed(valuations):
        running = v if running is None else min(running, v)
        floor.append(running)
    return tuple(reversed(floor))


def _converges(levels: tuple[int, ...], valuations: list[int], delta: int) -> tuple[bool, tuple[str, ...]]:
    floor = agreement_floor(valuations)
    notes = tuple(
        f"extra agreement at N={N}: {v} > {f}" for N, v, f in zip(levels, valuations, floor) if v > f
    )
    return all(f >= N - delta for N, f in zip(levels, floor)), notes


def witt_check(n: int, w: WeightPair, p: int, q: PadicQ, K: int | None = None, N_max: int = 3,
               x: int = 0, delta: int | None = None, budget: int | None = None) -> ConvergenceReport:
    """Riemann sums of q^(-beta t) [x + t]^n against g_{n+1,q}(x) / (n + 1).

    Passes when the agreement floor, the running minimum of the valuations over
    later levels, is at least N - delta at every level. Levels that agree beyond
    the floor are listed in the notes.
    """
    defaults = padic_defaults()
    K = defaults["precision"] if K is None else K
    delta = defaults["delta"] if delta is None else delta
    require_index("N_max", N_max, 1)
    level_size(p, N_max, budget)

    working = K + n * q.one_minus_valuation(w.alpha) + 2
    closed = padic_closed_form(n, w, p, q, K, x)
    integrand = witt_integrand(n, w, q, x)
    sums = []
    valuations = []
    for N in range(1, N_max + 1):
        s = riemann_sum(integrand, N, p, q, w.beta, budget)
        sums.append(s)
        valuations.append(padic_reduce(s, p, working).agrees_with(closed))
    levels = tuple(range(1, N_max + 1))
    passed, notes = _converges(levels, valuations, delta)
    params = {"n": n, "alpha": w.alpha, "beta": w.beta, "p": p, "q": q.q, "K": K, "x": x}
    logger.debug("witt n=%d p=%d valuations=%s", n, p, valuations)
    return ConvergenceReport("witt", params, closed, levels, tuple(sums), tuple(valuations), delta,
                             passed, notes)


def lemma1_check(f: IntegrandSpec, n: int, p: int, q: PadicQ, beta: int, N: int,
                 K: int | None = None, delta: int | None = None, budget: int | None = None) -> IdentityReport:
    """I(q^(-beta x) f(x + n)) + (-1)^(n-1) I(q^(-beta x) f) against [2]_{q^beta} sum_l (-1)^(n-l-1) f(l)."""
    require_index("n", n, 1)
    defaults = padic_defaults()
    K = defaults["precision"] if K is None else K
    delta = defaults["delta"] if delta is None else delta

    shifted = riemann_sum(f.shift(n, q.q).twist(-beta), N, p, q, beta, budget)
    plain = riemann_sum(f.twist(-beta), N, p, q, beta, budget)
    lhs = shifted + plain if n % 2 == 1 else shifted - plain
    rhs = (1 + q.q**beta) * sum(
        (f.evaluate(l, q.q) * (1 if (n - l - 1) % 2 == 0 else -1) for l in range(n)), Fraction(0)
    )
    residual = lhs - rhs
    valuation = padic_reduce(residual, p, K).valuation
    passed = residual == 0 or valuation >= N - delta
    params = {"n": n, "p": p, "q": q.q, "beta": beta, "N": N, "K": K, "f": str(f)}
    return IdentityReport("lemma1", params, lhs, rhs, residual, passed, valuation=valuation)

