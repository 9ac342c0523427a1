# SPDX-License-Identifier: LGPL-2.1-only
# Copyright (C) 2026 qgenocchi contributors
"""
Floating-point side: the weighted q-zeta function and Abel radial summation.

The zeta function

    xi(s, x | q) = [2]_{q^b} sum_m (-1)^m / [m + x]_{q^a}^s

is continued to all complex s through the binomial series

    [2]_{q^b} (1 - q^a)^s sum_j C(-s, j) (-1)^j q^(a j x) / (1 + q^(a j)),

which converges absolutely for every s and terminates at s = -n.

The defining series does not converge in the ordinary sense ([m]_q tends to
1 / (1 - q), not 0). Grouping it in pairs is NOT Abel-consistent: for a
constant sequence the pairwise sum is 0 while the Abel value is 1/2. Every
oracle here therefore sums radially, A(r) = sum (-r)^m a_m, and extrapolates
r -> 1-.
"""

from __future__ import annotations

import logging
import math
from collections.abc import Callable, Sequence
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Union

import mpmath

from .config import abel_term_budget, analytic_defaults, zeta_term_budget
from .errors import BudgetExceededError, NonFiniteValueError, NotAbelSummableError
from .qcore import IdentityReport, PolyArgument, QPoint, WeightPair, genocchi_polynomial, to_fraction

logger = logging.getLogger(__name__)

Real = Union[Fraction, int, float, str]
Number = Union[Real, complex]

# smallest relative term kept in a radial sum
_EPS = 1e-17
_BLOWUP = 1e60


def _to_ctx(ctx: Any, value: Any) -> Any:
    """Convert ints, Fractions and "a/b" strings without going through float."""
    if isinstance(value, str):
        value = Fraction(value)
    if isinstance(value, Fraction):
        return ctx.mpf(value.numerator) / value.denominator
    return ctx.convert(value)


def _require_finite(ctx: Any, value: Any, what: str) -> Any:
    if ctx.isnan(value) or ctx.isinf(value):
        raise NonFiniteValueError(f"non-finite value in {what}: {value}")
    return value


def parse_complex(text: str) -> complex:
    """``"RE"`` or ``"RE,IM"`` as used by the --s flag."""
    parts = text.split(",")
    if len(parts) == 1:
        return complex(float(parts[0]), 0.0)
    if len(parts) == 2:
        return complex(float(parts[0]), float(parts[1]))
    raise ValueError(f"Invalid complex value: {text!r} (expected RE or RE,IM)")


@dataclass(frozen=True)
class ZetaParams:
    s: Number
    x: Real
    w: WeightPair
    q: Real

    def __post_init__(self) -> None:
        q = float(to_fraction(self.q)) if not isinstance(self.q, float) else self.q
        if not 0 < q < 1:
            raise ValueError(f"q must lie in (0, 1), got {self.q}")
        x = float(to_fraction(self.x)) if not isinstance(self.x, float) else self.x
        if x <= 0:
            raise ValueError(f"x must be positive, got {self.x}")


def qzeta(params: ZetaParams, tol: float | None = None, dps: int | None = None,
          max_terms: int | None = None) -> mpmath.mpc:
    """xi^(alpha,beta)(s, x | q) from the binomial series, at ``dps`` digits."""
    defaults = analytic_defaults()
    tol = defaults["tol"] if tol is None else tol
    dps = defaults["dps"] if dps is None else dps
    max_terms = zeta_term_budget() if max_terms is None else max_terms
    ctx = mpmath.mp
    with ctx.workdps(dps):
        s = ctx.mpc(params.s)
        q = _to_ctx(ctx, params.q)
        x = _to_ctx(ctx, params.x)
        Q = q**params.w.alpha
        coeff = ctx.mpc(1)
        total = ctx.mpc(0)
        for j in range(max_terms):
            Qj = Q**j
            term = coeff * Qj**x / (1 + Qj)
            total += -term if j % 2 else term
            next_coeff = coeff * (-s - j) / (j + 1)
            if next_coeff == 0:
                break
            # |C(-s, j+1) / C(-s, j)| q^a < 1 from here on
            settled = abs((-s - j) / (j + 1)) * Q < 1
            if settled and abs(term) <= tol * abs(total):
                break
            coeff = next_coeff
        else:
            raise BudgetExceededError(f"budget exceeded: qzeta needed more than {max_terms} terms")
        logger.debug("qzeta s=%s q=%s converged after %d terms", params.s, params.q, j + 1)
        value = (1 + q**params.w.beta) * (1 - Q) ** s * total
        _require_finite(ctx, value, "qzeta")
        return +value


def abel_schedule(levels: int | None = None) -> list[float]:
    """Radii 1 - 2^-k, k = 1..levels."""
    levels = analytic_defaults()["abel_levels"] if levels is None else levels
    return [1 - 2.0**-k for k in range(1, levels + 1)]


def hurwitz_schedule(levels: int | None = None) -> list[float]:
    """q = 1 - 2^-k, k = 1..levels, for the extrapolation to q = 1."""
    levels = analytic_defaults()["hurwitz_levels"] if levels is None else levels
    return [1 - 2.0**-k for k in range(1, levels + 1)]


def radial_value(term_fn: Callable[[int], Any], r: Any, ctx: Any = mpmath.fp,
                 max_terms: int | None = None) -> Any:
    """A(r) = sum_m (-r)^m a_m, summed until the remaining terms are negligible."""
    max_terms = abel_term_budget() if max_terms is None else max_terms
    # r^m < _EPS beyond this index; the tail test below still has to hold
    floor = int(math.log(_EPS) / math.log(float(r))) + 1 if r < 1 else max_terms
    total = ctx.mpf(0)
    weight = ctx.mpf(1)
    quiet = 0
    for m in range(max_terms):
        term = weight * term_fn(m)
        if ctx.isnan(term) or ctx.isinf(term) or abs(term) > _BLOWUP:
            raise NotAbelSummableError(f"not Abel-summable under budget: term {m} at r={r} is {term}")
        total += -term if m % 2 else term
        weight *= r
        if m >= floor and abs(term) <= _EPS * max(abs(total), 1):
            quiet += 1
            if quiet >= 8:
                return total
        else:
            quiet = 0
    raise NotAbelSummableError(f"not Abel-summable under budget: {max_terms} terms at r={r}")


def richardson(values: Sequence[Any], steps: Sequence[float]) -> tuple[Any, float]:
    """Polynomial extrapolation of values(h) to h = 0.

    Returns the diagonal entry with the smallest change from its predecessor
    and that change as the error estimate.
    """
    if not values:
        raise ValueError("nothing to extrapolate")
    previous_row = [values[0]]
    best, best_err = values[0], math.inf
    for i in range(1, len(values)):
        row = [values[i]]
        for j in range(1, i + 1):
            factor = steps[i] / (steps[i - j] - steps[i])
            row.append(row[j - 1] + (row[j - 1] - previous_row[j - 1]) * factor)
        err = float(abs(row[-1] - previous_row[-1]))
        if err < best_err:
            best, best_err = row[-1], err
        previous_row = row
    return best, best_err


def abel_radial_sum(term_fn: Callable[[int], Any], r_schedule: Sequence[float] | None = None,
                    extrapolate: bool = True, *, tol: float = 1e-9, ctx: Any = mpmath.fp,
                    max_terms: int | None = None) -> Any:
    """Abel value lim_{r->1-} sum_m (-1)^m r^m a_m.

    ``term_fn(m)`` returns a_m and should be bounded with geometric variation.
    With ``extrapolate`` off the value at the last radius is returned as is.
    """
    radii = list(abel_schedule() if r_schedule is None else r_schedule)
    if not radii or any(not 0 < r < 1 for r in radii):
        raise ValueError("radii must lie in (0, 1)")
    values = [radial_value(term_fn, ctx.convert(r), ctx, max_terms) for r in radii]
    if not extrapolate:
        return values[-1]
    value, err = richardson(values, [1 - r for r in radii])
    if err > tol * max(1.0, float(abs(value))):
        raise NotAbelSummableError(
            f"not Abel-summable under budget: radial values did not settle (change {err:.3g})"
        )
    logger.debug("abel sum %s (estimated error %.3g)", value, err)
    return value


def _analytic_q(q: QPoint) -> QPoint:
    if not q.is_analytic:
        raise ValueError(f"q must lie in (0, 1) here, got {q}")
    return q


def _relative_error(lhs: Any, rhs: Any) -> float:
    return float(abs(lhs - rhs) / max(1, abs(rhs)))


def _bracket_terms(w: WeightPair, q: QPoint, arg: PolyArgument, ctx: Any) -> Callable[[int], Any]:
    """m -> [m + x]_{q^alpha} with q^(alpha x) = y^alpha."""
    Q = _to_ctx(ctx, q.q**w.alpha)
    shift = _to_ctx(ctx, arg.y**w.alpha)
    denominator = 1 - Q
    return lambda m: (1 - Q**m * shift) / denominator


def series_number_check(n: int, w: WeightPair, q: QPoint, tol: float = 1e-6,
                        arg: PolyArgument | None = None) -> IdentityReport:
    """[2]_{q^beta} * Abel(sum (-1)^m [m + x]^n) against g_{n+1,q}(x) / (n + 1)."""
    q = _analytic_q(q)
    arg = arg or PolyArgument.zero()
    ctx = mpmath.fp
    bracket = _bracket_terms(w, q, arg, ctx)
    abel = abel_radial_sum(lambda m: bracket(m) ** n, ctx=ctx)
    lhs = (1 + _to_ctx(ctx, q.q**w.beta)) * abel
    exact = genocchi_polynomial(n + 1, w, q, arg) / (n + 1)
    rhs = _to_ctx(ctx, exact)
    err = _relative_error(lhs, rhs)
    params = {"n": n, "alpha": w.alpha, "beta": w.beta, "q": q.q, "arg": str(arg), "tol": tol}
    return IdentityReport("series_number", params, float(lhs), exact, err, err <= tol)


def generating_check(t: Real, arg: PolyArgument, w: WeightPair, q: QPoint, n_terms: int = 8,
                     tol: float = 1e-8) -> IdentityReport:
    """Truncated sum g_n(x) t^n / n! against [2]_{q^beta} t * Abel(sum (-1)^m e^(t [m + x]))."""
    q = _analytic_q(q)
    t = to_fraction(t) if not isinstance(t, float) else t
    if abs(t) > 0.25:
        raise ValueError(f"|t| must be at most 1/4, got {t}")
    ctx = mpmath.fp
    tt = _to_ctx(ctx, t)
    lhs = ctx.mpf(0)
    for n in range(n_terms + 1):
        lhs += _to_ctx(ctx, genocchi_polynomial(n, w, q, arg)) * tt**n / math.factorial(n)
    bracket = _bracket_terms(w, q, arg, ctx)
    abel = abel_radial_sum(lambda m: ctx.exp(tt * bracket(m)), ctx=ctx)
    rhs = (1 + _to_ctx(ctx, q.q**w.beta)) * tt * abel
    err = _relative_error(lhs, rhs)
    params = {"t": t, "alpha": w.alpha, "beta": w.beta, "q": q.q, "arg": str(arg),
              "n_terms": n_terms, "tol": tol}
    return IdentityReport("generating", params, float(lhs), float(rhs), err, err <= tol)


def closed_form_at(n: int, w: WeightPair, q: QPoint, x: Real, dps: int = 40) -> mpmath.mpf:
    """g_{n+1,q}(x) / (n + 1) for real x, in extended precision."""
    ctx = mpmath.mp
    with ctx.workdps(dps):
        Q = _to_ctx(ctx, q.q) ** w.alpha
        xx = _to_ctx(ctx, x)
        total = ctx.mpf(0)
        for l in range(n + 1):
            term = ctx.binomial(n, l) * Q ** (l * xx) / (1 + Q**l)
            total += -term if l % 2 else term
        return +((1 + _to_ctx(ctx, q.q) ** w.beta) * total / (1 - Q) ** n)


def interpolation_check(n: int, x: Real, w: WeightPair, q: QPoint, tol: float = 1e-10) -> IdentityReport:
    """xi(-n, x | q) against g_{n+1,q}(x) / (n + 1).

    Integer x goes through the exact closed form; other x through
    :func:`closed_form_at` at extended precision.
    """
    q = _analytic_q(q)
    xf = to_fraction(x) if not isinstance(x, float) else x
    value = qzeta(ZetaParams(-n, xf, w, q.q), tol=1e-30)
    if isinstance(xf, Fraction) and xf.denominator == 1:
        exact: object = genocchi_polynomial(n + 1, w, q, PolyArgument.at(int(xf), q)) / (n + 1)
        rhs = _to_ctx(mpmath.mp, exact)
    else:
        rhs = closed_form_at(n, w, q, xf)
        exact = float(rhs)
    err = _relative_error(value, rhs)
    params = {"n": n, "x": xf, "alpha": w.alpha, "beta": w.beta, "q": q.q, "tol": tol}
    return IdentityReport("interpolation", params, complex(value), exact, err, err <= tol)


def pairwise_sum(term_fn: Callable[[int], Any], ctx: Any = mpmath.fp, max_pairs: int | None = None) -> Any:
    """sum_k (a_{2k} - a_{2k+1}); converges when a_m tends to a limit geometrically."""
    max_pairs = abel_term_budget() if max_pairs is None else max_pairs
    total = ctx.mpf(0)
    quiet = 0
    for k in range(max_pairs):
        pair = term_fn(2 * k) - term_fn(2 * k + 1)
        total += pair
        quiet = quiet + 1 if abs(pair) <= _EPS * max(abs(total), 1) else 0
        if quiet >= 4:
            return total
    raise BudgetExceededError(f"budget exceeded: pairwise sum needed more than {max_pairs} pairs")


def continuation_check(s: float, x: Real, w: WeightPair, q: QPoint, tol: float = 1e-8) -> IdentityReport:
    """qzeta at real s against the Abel value of the defining series.

    a_m = [m + x]^-s tends to c = (1 - q^alpha)^s, so the pairwise sum plus c/2
    must also agree; the report notes both.
    """
    q = _analytic_q(q)
    xf = to_fraction(x) if not isinstance(x, float) else x
    ctx = mpmath.fp
    Q = _to_ctx(ctx, q.q**w.alpha)
    xx = _to_ctx(ctx, xf)
    ss = ctx.convert(s)
    def a(m: int) -> Any:
        return ((1 - Q ** (m + xx)) / (1 - Q)) ** (-ss)

    two = 1 + _to_ctx(ctx, q.q**w.beta)
    abel = two * abel_radial_sum(a, ctx=ctx)
    limit = (1 - Q) ** ss
    pairwise = two * (pairwise_sum(a, ctx) + limit / 2)
    value = qzeta(ZetaParams(s, xf, w, q.q))
    err = max(_relative_error(value.real, abel), _relative_error(pairwise, abel))
    params = {"s": s, "x": xf, "alpha": w.alpha, "beta": w.beta, "q": q.q, "tol": tol}
    notes = (f"pairwise+c/2={float(pairwise)!r}", f"c={float(limit)!r}")
    return IdentityReport("continuation", params, float(value.real), float(abel), err, err <= tol, notes=notes)


def hurwitz_reference(s: Number, x: Real, dps: int = 30) -> mpmath.mpc:
    """sum_m (-1)^m / (m + x)^s by mpmath's series acceleration (Re s > 0)."""
    ctx = mpmath.mp
    with ctx.workdps(dps):
        ss = ctx.mpc(s)
        if ss.real <= 0:
            raise ValueError(f"Re(s) must be positive, got {s}")
        xx = _to_ctx(ctx, x)
        return +ctx.nsum(lambda m: (-1) ** int(m) / (m + xx) ** ss, [0, ctx.inf])


def hurwitz_limit_check(s: Number, x: Real, q_schedule: Sequence[float] | None = None,
                        tol: float = 1e-6) -> IdentityReport:
    """Extrapolated xi^(1,1)(s, x | q -> 1-) against 2 sum (-1)^m / (m + x)^s."""
    schedule = list(q_schedule) if q_schedule is not None else hurwitz_schedule()
    w = WeightPair(1, 1)
    values = [qzeta(ZetaParams(s, x, w, q), tol=1e-20) for q in schedule]
    lhs, estimate = richardson(values, [1 - q for q in schedule])
    rhs = 2 * hurwitz_reference(s, x)
    err = float(abs(lhs - rhs))
    params = {"s": s, "x": x, "tol": tol, "levels": len(schedule)}
    return IdentityReport("hurwitz_limit", params, complex(lhs), complex(rhs), err, err <= tol,
                          notes=(f"extrapolation change {estimate:.3g}",))

