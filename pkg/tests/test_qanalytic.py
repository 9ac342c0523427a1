import math
from fractions import Fraction

import mpmath
import pytest

from qgenocchi.errors import BudgetExceededError, NotAbelSummableError
from qgenocchi.qanalytic import (
    ZetaParams,
    abel_radial_sum,
    abel_schedule,
    closed_form_at,
    continuation_check,
    generating_check,
    hurwitz_limit_check,
    hurwitz_reference,
    hurwitz_schedule,
    interpolation_check,
    parse_complex,
    qzeta,
    radial_value,
    richardson,
    series_number_check,
)
from qgenocchi.qcore import PolyArgument, QPoint, WeightPair, genocchi_polynomial

HALF = QPoint.of("1/2")
WEIGHTS = [WeightPair(a, b) for a in (1, 2) for b in (1, 2)]


def _wid(w):
    return f"w{w.alpha}{w.beta}"


def test_parse_complex():
    assert parse_complex("2") == complex(2, 0)
    assert parse_complex("0.5,-14.1") == complex(0.5, -14.1)
    with pytest.raises(ValueError):
        parse_complex("1,2,3")


@pytest.mark.parametrize(
    "q, x",
    [
        pytest.param("1", "1", id="q_one"),
        pytest.param("3/2", "1", id="q_above_one"),
        pytest.param("1/2", "0", id="x_zero"),
    ],
)
def test_zeta_params_validation(q, x):
    with pytest.raises(ValueError):
        ZetaParams(2, x, WeightPair(), q)


def test_qzeta_at_minus_one():
    value = qzeta(ZetaParams(-1, "1", WeightPair(), "1/2"))
    assert abs(value - mpmath.mpf("0.5")) < 1e-25


def test_qzeta_at_zero_is_half_two_bracket():
    value = qzeta(ZetaParams(0, "3/2", WeightPair(1, 2), "1/2"))
    assert abs(value - mpmath.mpf("0.625")) < 1e-25


def test_qzeta_close_to_one():
    value = qzeta(ZetaParams(2, 1, WeightPair(), 0.999))
    assert abs(value.real - math.pi**2 / 6) < 1e-2


def test_qzeta_budget():
    with pytest.raises(BudgetExceededError, match="budget exceeded"):
        qzeta(ZetaParams(2, 1, WeightPair(), "1/2"), max_terms=3)


def test_qzeta_terminates_across_s_grid():
    for re in (-7.5, -2.0, 0.5, 3.0, 12.0):
        for im in (0.0, 10.0, -25.0):
            value = qzeta(ZetaParams(complex(re, im), "1/2", WeightPair(2, 1), "2/3"), tol=1e-12)
            assert mpmath.isfinite(value.real) and mpmath.isfinite(value.imag)


@pytest.mark.parametrize(
    "term, expected",
    [
        pytest.param(lambda m: 1.0 / (m + 1), math.log(2), id="log2"),
        pytest.param(lambda m: 1.0, 0.5, id="grandi"),
        pytest.param(lambda m: 2.0 * (1 - 0.5**m), -1 / 3, id="half_bracket"),
    ],
)
def test_abel_radial_sum(term, expected):
    assert abs(abel_radial_sum(term) - expected) < 1e-8


def test_abel_without_extrapolation_is_last_radius():
    radii = [0.5, 0.75]
    assert abel_radial_sum(lambda m: 1.0, radii, extrapolate=False) == pytest.approx(1 / 1.75)


def test_abel_rejects_growth():
    with pytest.raises(NotAbelSummableError):
        abel_radial_sum(lambda m: 3.0**m)


def test_abel_term_budget():
    with pytest.raises(NotAbelSummableError):
        radial_value(lambda m: 1.0, 0.999, max_terms=100)


def test_abel_rejects_bad_radii():
    with pytest.raises(ValueError):
        abel_radial_sum(lambda m: 1.0, [0.5, 1.0])


def test_schedule_and_richardson():
    radii = abel_schedule(4)
    assert radii == [0.5, 0.75, 0.875, 0.9375]
    steps = [1 - r for r in radii]
    best, err = richardson([3 + 2 * h - h * h for h in steps], steps)
    assert best == pytest.approx(3, abs=1e-12)
    assert err < 1e-9


@pytest.mark.parametrize("w", WEIGHTS, ids=_wid)
def test_series_against_closed_form(w):
    for n in range(6):
        report = series_number_check(n, w, HALF, tol=1e-6)
        assert report.passed, (n, report.residual)


def test_series_with_polynomial_argument():
    report = series_number_check(2, WeightPair(1, 2), HALF, tol=1e-6, arg=PolyArgument.at(1, HALF))
    assert report.passed


@pytest.mark.parametrize("x", [0, 1], ids=lambda x: f"x{x}")
def test_generating_function(x):
    report = generating_check("1/10", PolyArgument.at(x, HALF), WeightPair(), HALF, n_terms=8, tol=1e-8)
    assert report.passed, report.residual


def test_generating_rejects_large_t():
    with pytest.raises(ValueError):
        generating_check("1/2", PolyArgument.zero(), WeightPair(), HALF)


@pytest.mark.parametrize("w", WEIGHTS, ids=_wid)
@pytest.mark.parametrize("x", ["1", "2", "1/2"], ids=["x1", "x2", "x_half"])
def test_interpolation_at_negative_integers(w, x):
    for n in range(7):
        report = interpolation_check(n, x, w, HALF, tol=1e-10)
        assert report.passed, (n, report.residual)


def test_closed_form_at_integer_matches_exact():
    exact = genocchi_polynomial(4, WeightPair(2, 1), HALF, PolyArgument.at(2, HALF)) / 4
    value = closed_form_at(3, WeightPair(2, 1), HALF, 2)
    with mpmath.workdps(40):
        assert abs(value - mpmath.mpf(exact.numerator) / exact.denominator) < 1e-30


def test_continuation_agrees_with_series():
    report = continuation_check(6.0, "1", WeightPair(), HALF, tol=1e-8)
    assert report.passed, report.residual
    assert any(note.startswith("pairwise+c/2=") for note in report.notes)


def test_analytic_checks_need_q_below_one():
    with pytest.raises(ValueError):
        series_number_check(1, WeightPair(), QPoint.of(3), tol=1e-6)


@pytest.mark.parametrize(
    "s, x",
    [pytest.param(3, 2, id="s3_x2"), pytest.param(2, Fraction(1, 2), id="s2_x_half"), pytest.param(1.5, 1, id="s1.5_x1")],
)
def test_hurwitz_reference_cross_check(s, x):
    reference = hurwitz_reference(s, x)
    with mpmath.workdps(30):
        xx = mpmath.mpf(x.numerator) / x.denominator if isinstance(x, Fraction) else mpmath.mpf(x)
        split = mpmath.mpf(2) ** (-s) * (mpmath.zeta(s, xx / 2) - mpmath.zeta(s, (xx + 1) / 2))
        assert abs(reference - split) < 1e-20


def test_hurwitz_reference_eta_two():
    reference = hurwitz_reference(2, 1)
    with mpmath.workdps(30):
        assert abs(reference - mpmath.pi**2 / 12) < 1e-20
    with pytest.raises(ValueError):
        hurwitz_reference(-1, 1)


def test_hurwitz_limit():
    report = hurwitz_limit_check(2, "1", tol=1e-6)
    assert report.passed, report.residual
    assert abs(report.rhs - math.pi**2 / 6) < 1e-12
    assert report.params["levels"] == 10


def test_hurwitz_schedule_from_defaults():
    schedule = hurwitz_schedule()
    assert len(schedule) == 10
    assert schedule[:2] == [0.5, 0.75]
    assert hurwitz_schedule(3) == abel_schedule(3)
