# SPDX-License-Identifier: LGPL-2.1-only
# Copyright (C) 2026 qgenocchi contributors
"""
Exact evaluation of modified q-Genocchi numbers and polynomials with weight.

Everything here is rational arithmetic on :class:`fractions.Fraction`; there is
no floating point in this module.

Conventions:
- ``genocchi_number(n, ...)`` returns g_n (not g_{n+1}/(n+1)); g_0 = 0.
- Polynomials take ``y = q**x`` instead of ``x``. Every occurrence of x in the
  closed form is through q^(alpha*l*x) = y^(alpha*l), so fractional arguments
  such as x + a/d stay exact.
- The divergent defining series is never summed; the finite closed form

      g_n = n [2]_{q^b} / (1 - q^a)^(n-1) * sum_l C(n-1, l) (-1)^l y^(a l) / (1 + q^(a l))

  is the computational definition (it is the Abel value of the series).
"""

from __future__ import annotations

import threading
from collections.abc import Mapping
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from typing import Union

from typing_extensions import Self

from .errors import DegenerateQError, EmptyTailError, ParityViolationError

RationalLike = Union[Fraction, int, str]


def to_fraction(value: RationalLike) -> Fraction:
    """Coerce ints, Fractions and ``"num/den"`` strings to a Fraction.

    Floats are rejected: they would silently smuggle rounding into exact code.
    """
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"Cannot use {type(value).__name__} as an exact rational")


def require_index(name: str, value: int, minimum: int = 0) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise TypeError(f"{name} must be an integer, got {type(value).__name__}")
    if value < minimum:
        raise ValueError(f"{name} must be >= {minimum}, got {value}")
    return value


@dataclass(frozen=True)
class WeightPair:
    """The weights (alpha, beta): alpha deforms the bracket base, beta the measure."""

    alpha: int = 1
    beta: int = 1

    def __post_init__(self) -> None:
        require_index("alpha", self.alpha, 1)
        require_index("beta", self.beta, 1)

    def with_beta(self, beta: int) -> WeightPair:
        return WeightPair(self.alpha, beta)

    def __str__(self) -> str:
        return f"({self.alpha},{self.beta})"


@dataclass(frozen=True)
class QPoint:
    """A rational q with 0 < q and q != 1."""

    q: Fraction

    def __post_init__(self) -> None:
        value = to_fraction(self.q)
        if value <= 0:
            raise DegenerateQError(f"degenerate q: q must be positive, got {value}")
        if value == 1:
            raise DegenerateQError()
        object.__setattr__(self, "q", value)

    @classmethod
    def of(cls, value: QPoint | RationalLike) -> Self:
        if isinstance(value, cls):
            return value
        return cls(to_fraction(value))  # type: ignore[arg-type]

    @property
    def is_analytic(self) -> bool:
        """True when 0 < q < 1, the regime of the complex-analytic statements."""
        return self.q < 1

    def power(self, k: int) -> QPoint:
        return QPoint(self.q**k)

    def __str__(self) -> str:
        return str(self.q)


@dataclass(frozen=True)
class PolyArgument:
    """The polynomial argument, carried as y = q^x.

    ``x_label`` is only used for reporting and for the consistency check in
    :func:`genocchi_polynomial` when it is an integer.
    """

    y: Fraction
    x_label: Fraction | None = None

    def __post_init__(self) -> None:
        value = to_fraction(self.y)
        if value <= 0:
            raise ValueError(f"y = q^x must be positive, got {value}")
        object.__setattr__(self, "y", value)
        if self.x_label is not None:
            object.__setattr__(self, "x_label", to_fraction(self.x_label))

    @classmethod
    def at(cls, x: int, q: QPoint) -> Self:
        """The argument x for an integer x, i.e. y = q**x exactly."""
        if isinstance(x, bool) or not isinstance(x, int):
            raise TypeError(f"x must be an integer, got {type(x).__name__}")
        return cls(q.q**x, Fraction(x))

    @classmethod
    def zero(cls) -> Self:
        return cls(Fraction(1), Fraction(0))

    def check_against(self, q: QPoint) -> None:
        label = self.x_label
        if label is not None and label.denominator == 1 and self.y != q.q ** int(label):
            raise ValueError(f"y = {self.y} is not q^{label} for q = {q.q}")

    def __str__(self) -> str:
        if self.x_label is not None:
            return f"x={self.x_label}"
        return f"y={self.y}"


class Orientation(str, Enum):
    """Left-hand ordering of the tail identity."""

    LEMMA = "lemma"            # g(n) + (-1)^(n-1) g, consistent with the proof
    AS_PRINTED = "as_printed"  # g + (-1)^(n-1) g(n), the printed ordering


class EulerForm(str, Enum):
    """Sign of the modified q-Euler umbral recurrence."""

    DERIVED = "derived"        # (q eps + 1)^k + eps_k
    AS_PRINTED = "as_printed"  # (q eps + 1)^k - eps_k


@dataclass(frozen=True)
class IdentityReport:
    """Both sides of a checked identity plus their residual.

    ``residual`` is exact (a Fraction) for rational identities and a float
    (relative or absolute error) for the floating-point checks.
    ``valuation`` is set by the p-adic checks.
    """

    identity: str
    params: Mapping[str, object]
    lhs: object
    rhs: object
    residual: object
    passed: bool
    valuation: int | None = None
    notes: tuple[str, ...] = field(default=())


_PASCAL: list[tuple[int, ...]] = [(1,)]
_PASCAL_LOCK = threading.Lock()


def pascal_row(n: int) -> tuple[int, ...]:
    """Row n of Pascal's triangle, built by the additive recurrence."""
    require_index("n", n)
    if n >= len(_PASCAL):
        with _PASCAL_LOCK:
            while len(_PASCAL) <= n:
                prev = _PASCAL[-1]
                _PASCAL.append((1, *(prev[i] + prev[i + 1] for i in range(len(prev) - 1)), 1))
    return _PASCAL[n]


def binomial(n: int, k: int) -> int:
    if k < 0 or k > n:
        return 0
    return pascal_row(n)[k]


def bracket(x: int, base: Fraction) -> Fraction:
    """[x]_base = (1 - base^x) / (1 - base)."""
    if base == 1:
        raise DegenerateQError()
    return (1 - base**x) / (1 - base)


def signed_bracket(x: int, base: Fraction) -> Fraction:
    """[x]_{-base} = (1 - (-base)^x) / (1 + base)."""
    if base == -1:
        raise DegenerateQError()
    return (1 - (-base) ** x) / (1 + base)


def q_bracket(x: int, q: QPoint) -> Fraction:
    require_index("x", x)
    return bracket(x, q.q)


def q_bracket_signed(x: int, q: QPoint) -> Fraction:
    require_index("x", x)
    return signed_bracket(x, q.q)


@lru_cache(maxsize=4096)
def _genocchi_value(n: int, alpha: int, beta: int, q: Fraction, y: Fraction) -> Fraction:
    if n == 0:
        return Fraction(0)
    qa = q**alpha
    ya = y**alpha
    total = Fraction(0)
    qa_l = Fraction(1)
    ya_l = Fraction(1)
    for l, c in enumerate(pascal_row(n - 1)):
        term = c * ya_l / (1 + qa_l)
        total += -term if l % 2 else term
        qa_l *= qa
        ya_l *= ya
    return n * (1 + q**beta) * total / (1 - qa) ** (n - 1)


def genocchi_number(n: int, w: WeightPair, q: QPoint) -> Fraction:
    """g_{n,q}^{(alpha,beta)} from the closed form; 0 for n = 0."""
    require_index("n", n)
    return _genocchi_value(n, w.alpha, w.beta, q.q, Fraction(1))


def genocchi_polynomial(n: int, w: WeightPair, q: QPoint, arg: PolyArgument) -> Fraction:
    """g_{n,q}^{(alpha,beta)}(x) with q^(alpha l x) realised as y^(alpha l)."""
    require_index("n", n)
    arg.check_against(q)
    return _genocchi_value(n, w.alpha, w.beta, q.q, arg.y)


def modified_q_euler(n: int, q: QPoint) -> Fraction:
    """eps_{n,q} = g_{n+1,q}^{(1,1)} / (n + 1)."""
    require_index("n", n)
    return genocchi_number(n + 1, WeightPair(1, 1), q) / (n + 1)


def q_euler_polynomial(n: int, q: QPoint, arg: PolyArgument) -> Fraction:
    require_index("n", n)
    return genocchi_polynomial(n + 1, WeightPair(1, 1), q, arg) / (n + 1)


def _report(identity: str, params: Mapping[str, object], lhs: Fraction, rhs: Fraction,
            notes: tuple[str, ...] = ()) -> IdentityReport:
    residual = lhs - rhs
    return IdentityReport(identity, dict(params), lhs, rhs, residual, residual == 0, notes=notes)


def check_boundary(n: int, w: WeightPair, q: QPoint) -> IdentityReport:
    """g_n(1) + g_n = [2]_{q^beta} when n = 1 and 0 otherwise."""
    require_index("n", n)
    at_one = genocchi_polynomial(n, w, q, PolyArgument.at(1, q))
    at_zero = genocchi_number(n, w, q)
    rhs = (1 + q.q**w.beta) if n == 1 else Fraction(0)
    params = {"n": n, "alpha": w.alpha, "beta": w.beta, "q": q.q}
    return _report("boundary", params, at_one + at_zero, rhs,
                   notes=(f"g(1)={at_one}", f"g={at_zero}"))


def tail_sum(m: int, n: int, w: WeightPair, q: QPoint) -> Fraction:
    """[2]_{q^beta} * sum_{l<n} (-1)^(n-l-1) [l]_{q^alpha}^m, with [0]^0 = 1."""
    qa = q.q**w.alpha
    total = Fraction(0)
    for l in range(n):
        term = bracket(l, qa) ** m
        total += term if (n - l - 1) % 2 == 0 else -term
    return (1 + q.q**w.beta) * total


def check_tail(m: int, n: int, w: WeightPair, q: QPoint,
               orientation: Orientation | str = Orientation.LEMMA) -> IdentityReport:
    """The finite tail identity obtained by iterating the shift relation n times."""
    require_index("m", m)
    if isinstance(n, bool) or not isinstance(n, int):
        raise TypeError(f"n must be an integer, got {type(n).__name__}")
    if n < 1:
        raise EmptyTailError()
    orientation = Orientation(orientation)
    number = genocchi_number(m + 1, w, q) / (m + 1)
    poly = genocchi_polynomial(m + 1, w, q, PolyArgument.at(n, q)) / (m + 1)
    sign = 1 if n % 2 == 1 else -1
    if orientation is Orientation.LEMMA:
        lhs = poly + sign * number
    else:
        lhs = number + sign * poly
    params = {"m": m, "n": n, "alpha": w.alpha, "beta": w.beta, "q": q.q,
              "orientation": orientation.value}
    return _report("tail", params, lhs, tail_sum(m, n, w, q))


def check_multiplication(n: int, d: int, w: WeightPair, q: QPoint,
                         arg: PolyArgument) -> IdentityReport:
    """Distribution formula for odd d.

    Left side at argument dx (y^d, base q); right side at base q^d with the
    arguments x + a/d, i.e. y^d * q^a.
    """
    require_index("n", n, 1)
    require_index("d", d, 1)
    if d % 2 == 0:
        raise ParityViolationError()
    arg.check_against(q)
    label = arg.x_label
    lhs = genocchi_polynomial(n, w, q, PolyArgument(arg.y**d, None if label is None else d * label))

    qd = q.power(d)
    factor = bracket(d, q.q**w.alpha) ** (n - 1) / signed_bracket(d, q.q**w.beta)
    total = Fraction(0)
    for a in range(d):
        shifted = PolyArgument(arg.y**d * q.q**a, None if label is None else label + Fraction(a, d))
        term = genocchi_polynomial(n, w, qd, shifted)
        total += -term if a % 2 else term
    params = {"n": n, "d": d, "alpha": w.alpha, "beta": w.beta, "q": q.q, "y": arg.y}
    return _report("multiplication", params, lhs, factor * total)


def check_euler_boundary(n: int, q: QPoint) -> IdentityReport:
    """eps_n(1) + eps_n = [2]_q when n = 0 and 0 otherwise."""
    require_index("n", n)
    lhs = q_euler_polynomial(n, q, PolyArgument.at(1, q)) + modified_q_euler(n, q)
    rhs = (1 + q.q) if n == 0 else Fraction(0)
    return _report("euler_boundary", {"n": n, "q": q.q}, lhs, rhs)


def check_euler_recurrence(k: int, q: QPoint,
                           form: EulerForm | str = EulerForm.DERIVED) -> IdentityReport:
    """Umbral recurrence (q eps + 1)^k +/- eps_k = [2]_q [k = 0], eps^j -> eps_{j,q}.

    The ``derived`` sign follows from [x + 1]_q = 1 + q [x]_q and the boundary
    identity; the ``as_printed`` sign is the one found in the literature.
    """
    require_index("k", k)
    form = EulerForm(form)
    umbral = Fraction(0)
    q_j = Fraction(1)
    for j, c in enumerate(pascal_row(k)):
        umbral += c * q_j * modified_q_euler(j, q)
        q_j *= q.q
    eps_k = modified_q_euler(k, q)
    lhs = umbral + eps_k if form is EulerForm.DERIVED else umbral - eps_k
    rhs = (1 + q.q) if k == 0 else Fraction(0)
    return _report("euler_recurrence", {"k": k, "q": q.q, "form": form.value}, lhs, rhs)


def check_beta_symmetry(n: int, w: WeightPair, beta2: int, q: QPoint) -> IdentityReport:
    """g / [2]_{q^beta} does not depend on beta."""
    other = w.with_beta(beta2)
    lhs = genocchi_number(n, w, q) / (1 + q.q**w.beta)
    rhs = genocchi_number(n, other, q) / (1 + q.q**beta2)
    params = {"n": n, "alpha": w.alpha, "beta": w.beta, "beta2": beta2, "q": q.q}
    return _report("beta_symmetry", params, lhs, rhs)
