from fractions import Fraction

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from qgenocchi.errors import (
    BudgetExceededError,
    DegenerateQError,
    InadmissibleQError,
    PrecisionExhaustedError,
)
from qgenocchi.qcore import PolyArgument, QPoint, WeightPair, genocchi_polynomial, q_bracket_signed
from qgenocchi.qpadic import (
    IntegrandSpec,
    PadicNumber,
    PadicQ,
    agreement_floor,
    alternating_partial_sum,
    level_size,
    lemma1_check,
    odd_normalizer,
    p_valuation,
    padic_closed_form,
    padic_reduce,
    riemann_sum,
    twisted_moment,
    witt_check,
)

WEIGHTS = [WeightPair(a, b) for a in (1, 2) for b in (1, 2)]

small_ints = st.integers(min_value=-50, max_value=50)
units_3 = st.integers(min_value=1, max_value=200).filter(lambda d: d % 3)


def test_p_valuation():
    assert p_valuation(54, 3) == 3
    assert p_valuation(-7, 7) == 1
    with pytest.raises(ValueError):
        p_valuation(0, 3)


def test_reduce_and_print():
    seven = padic_reduce(7, 3, 2)
    assert str(seven) == "7 + O(3^2)"
    assert seven.valuation == 0
    nine = padic_reduce(9, 3, 2)
    assert nine.valuation == 2
    assert nine.absolute_precision == 4
    half = padic_reduce(Fraction(1, 2), 3, 3)
    assert half.unit == 14
    assert half.residue() == 14


def test_zero_carries_absolute_precision():
    zero = padic_reduce(0, 3, 5)
    assert zero.is_zero
    assert zero.absolute_precision == 5
    assert str(zero) == "O(3^5)"
    a = padic_reduce(Fraction(5, 7), 3, 4)
    diff = a - a
    assert diff.is_zero
    assert diff.valuation == 4


def test_precision_exhausted():
    with pytest.raises(PrecisionExhaustedError):
        padic_reduce(Fraction(1, 27), 3, 2)
    with pytest.raises(PrecisionExhaustedError):
        padic_reduce(1, 3, 4) / PadicNumber.zero(3, 4)


def test_agreement_is_valuation_of_difference():
    assert padic_reduce(1, 3, 5).agrees_with(padic_reduce(10, 3, 5)) == 2
    assert padic_reduce(1, 3, 5).agrees_with(padic_reduce(1, 3, 5)) == 5


def test_mixed_primes_rejected():
    with pytest.raises(ValueError):
        padic_reduce(1, 3, 4) + padic_reduce(1, 5, 4)


@settings(max_examples=60, deadline=None)
@given(a=small_ints, b=units_3, c=small_ints, d=units_3, K=st.integers(1, 8))
def test_reduction_is_a_ring_map(a, b, c, d, K):
    assume(a and c)
    x, y = Fraction(a, b), Fraction(c, d)
    px, py = padic_reduce(x, 3, K), padic_reduce(y, 3, K)
    assert (px * py).agrees_with(padic_reduce(x * y, 3, K)) >= K
    assume(x + y != 0)
    assert (px + py).agrees_with(padic_reduce(x + y, 3, K)) >= K


@pytest.mark.parametrize(
    "q, p, error",
    [
        pytest.param(1, 3, DegenerateQError, id="q_one"),
        pytest.param(2, 3, InadmissibleQError, id="not_one_mod_p"),
        pytest.param(Fraction(4, 3), 3, InadmissibleQError, id="p_in_denominator"),
        pytest.param(5, 4, ValueError, id="not_prime"),
        pytest.param(3, 2, ValueError, id="even_prime"),
    ],
)
def test_padic_q_rejects(q, p, error):
    with pytest.raises(error):
        PadicQ(q, p)


def test_padic_q_valuations():
    q = PadicQ(4, 3)
    assert q.one_minus_valuation(1) == 1
    assert q.one_minus_valuation(3) == 2
    assert PadicQ(Fraction(7, 4), 3).one_minus_valuation(1) == 1


def test_integrand_merges_like_terms():
    f = IntegrandSpec.monomial(0, 1, 1) + IntegrandSpec.monomial(0, 1, 1)
    assert len(f.terms) == 1
    assert f.terms[0].coeff == 2
    assert str(f + f.scale(-1)) == "0"
    assert IntegrandSpec.constant(3).evaluate(5, 4) == 3


@settings(max_examples=50, deadline=None)
@given(
    c=st.integers(-2, 2),
    a=st.integers(1, 2),
    k=st.integers(0, 3),
    m=st.integers(0, 4),
    x=st.integers(0, 5),
    q=st.sampled_from([Fraction(4), Fraction(1, 2), Fraction(7, 4)]),
)
def test_shift_matches_evaluation(c, a, k, m, x, q):
    f = IntegrandSpec.monomial(c, a, k)
    assert f.shift(m, q).evaluate(x, q) == f.evaluate(x + m, q)
    assert f.twist(2).evaluate(x, q) == q ** (2 * x) * f.evaluate(x, q)


def test_level_budget(monkeypatch):
    assert level_size(3, 2) == 9
    with pytest.raises(BudgetExceededError, match="budget exceeded"):
        level_size(3, 13)
    monkeypatch.setenv("QGEN_BUDGET", "10")
    with pytest.raises(BudgetExceededError):
        level_size(3, 3)
    assert level_size(3, 3, budget=27) == 27
    monkeypatch.setenv("QGEN_BUDGET", "lots")
    with pytest.raises(ValueError):
        level_size(3, 1)


def test_riemann_sum_example():
    # f(x) = q^(-x) [x]_q, p = 3, q = 4: ([0] - [1] + [2]) / [3]_{-4} = 4 / 13
    f = IntegrandSpec.monomial(-1, 1, 1)
    assert riemann_sum(f, 1, 3, PadicQ(4, 3), 1) == Fraction(4, 13)


def test_riemann_sum_requires_matching_prime():
    with pytest.raises(ValueError):
        riemann_sum(IntegrandSpec.constant(), 1, 5, PadicQ(4, 3), 1)


def test_partial_sums_split():
    f = IntegrandSpec.monomial(1, 1, 2) + IntegrandSpec.monomial(-1, 2, 1, coeff="1/3")
    q = Fraction(4)
    whole = alternating_partial_sum(f, 0, 20, q, 1)
    assert alternating_partial_sum(f, 0, 7, q, 1) + alternating_partial_sum(f, 7, 20, q, 1) == whole


def test_twisted_moment_regression():
    expected = Fraction((1 + 2**54) // 65 - (1 + 2**36) // 17, 3 * 52429)
    assert twisted_moment(1, 1, 1, 1, 3, PadicQ(4, 3), 2) == expected
    assert expected == Fraction(92380183377136, 52429)


@pytest.mark.parametrize("w", WEIGHTS, ids=lambda w: f"w{w.alpha}{w.beta}")
def test_witt_constant_moment(w):
    # S_N - (1 + Q)/2 carries exactly the factor 1 - Q^(3^N)
    report = witt_check(0, w, 3, PadicQ(4, 3), N_max=3)
    assert report.valuations == (2, 3, 4)
    assert report.monotone
    assert report.passed


@pytest.mark.parametrize(
    "p, levels",
    [pytest.param(3, 6, id="p3"), pytest.param(5, 4, id="p5"), pytest.param(7, 4, id="p7")],
)
def test_witt_formula_grid(p, levels):
    q = PadicQ(p + 1, p)
    for w in WEIGHTS:
        for n in range(7):
            report = witt_check(n, w, p, q, N_max=levels)
            assert list(report.floor) == sorted(report.floor), (w, n, report.valuations)
            assert all(v >= N - 2 for N, v in zip(report.levels, report.floor)), (w, n)
            assert report.passed


def test_witt_extra_agreement_at_first_level():
    # S_1 shares one more digit with the limit than S_2 does
    report = witt_check(5, WeightPair(1, 1), 3, PadicQ(4, 3), N_max=6)
    assert report.valuations == (4, 3, 4, 5, 6, 7)
    assert not report.monotone
    assert report.floor == (3, 3, 4, 5, 6, 7)
    assert report.notes == ("extra agreement at N=1: 4 > 3",)
    assert report.passed


def test_agreement_floor_is_running_minimum():
    assert agreement_floor([2, 3, 4]) == (2, 3, 4)
    assert agreement_floor([5, 2, 6, 4]) == (2, 2, 4, 4)
    assert agreement_floor([]) == ()


def test_witt_fails_below_required_floor():
    report = witt_check(0, WeightPair(1, 1), 3, PadicQ(4, 3), N_max=3, delta=-2)
    assert report.valuations == (2, 3, 4)
    assert not report.passed


def test_witt_with_shift():
    report = witt_check(2, WeightPair(1, 1), 3, PadicQ(4, 3), N_max=4, x=1)
    assert report.passed
    assert report.params["x"] == 1


@pytest.mark.parametrize("x", [0, 1, 2], ids=lambda x: f"x{x}")
def test_closed_form_matches_exact_value(x):
    q = PadicQ(4, 3)
    qp = QPoint.of(4)
    for w in WEIGHTS:
        for n in range(5):
            exact = genocchi_polynomial(n + 1, w, qp, PolyArgument.at(x, qp)) / (n + 1)
            closed = padic_closed_form(n, w, 3, q, 8, x)
            assert closed.agrees_with(padic_reduce(exact, 3, 8)) >= 8


@pytest.mark.parametrize("beta", [1, 2], ids=lambda b: f"beta{b}")
@pytest.mark.parametrize(
    "f",
    [
        pytest.param(IntegrandSpec.constant(1), id="constant"),
        pytest.param(IntegrandSpec.monomial(0, 1, 1), id="bracket"),
        pytest.param(IntegrandSpec.monomial(1, 2, 2) + IntegrandSpec.monomial(0, 1, 0, coeff="-1/2"), id="mixed"),
    ],
)
def test_shift_relation(f, beta):
    q = PadicQ(4, 3)
    for n in range(1, 5):
        report = lemma1_check(f, n, 3, q, beta, 4)
        assert report.passed, (n, report.valuation)
        assert report.valuation >= 2


@pytest.mark.parametrize("q", ["4", "1/2", "7/4"], ids=lambda q: f"q{q.replace('/', '_')}")
def test_odd_normalizer_is_signed_bracket(q):
    base = Fraction(q)
    for p in (3, 5):
        for N in (1, 2, 3):
            assert odd_normalizer(p**N, base) == q_bracket_signed(p**N, QPoint.of(base))
    with pytest.raises(ValueError):
        odd_normalizer(4, base)


@pytest.mark.parametrize("p", [3, 5], ids=lambda p: f"p{p}")
def test_riemann_sums_are_padic_integers(p):
    q = PadicQ(p + 1, p)
    for c in range(-2, 3):
        for k in range(4):
            f = IntegrandSpec.monomial(c, 1, k)
            for N in (1, 2):
                s = riemann_sum(f, N, p, q, 1)
                assert padic_reduce(s, p, 6).valuation >= 0, (c, k, N, s)


def test_padic_power():
    two = padic_reduce(2, 3, 5)
    assert (two**3).agrees_with(padic_reduce(8, 3, 5)) >= 5
    assert (two**0).agrees_with(padic_reduce(1, 3, 5)) >= 5
    assert (padic_reduce(3, 3, 4) ** 2).valuation == 2
