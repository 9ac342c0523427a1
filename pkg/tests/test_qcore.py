from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qgenocchi.errors import DegenerateQError, EmptyTailError, ParityViolationError, QGenocchiError
from qgenocchi.qcore import (
    EulerForm,
    Orientation,
    PolyArgument,
    QPoint,
    WeightPair,
    binomial,
    check_beta_symmetry,
    check_boundary,
    check_euler_boundary,
    check_euler_recurrence,
    check_multiplication,
    check_tail,
    genocchi_number,
    genocchi_polynomial,
    modified_q_euler,
    pascal_row,
    q_bracket,
    q_bracket_signed,
    q_euler_polynomial,
    to_fraction,
)

Q_GRID = [Fraction(1, 2), Fraction(1, 3), Fraction(2, 3), Fraction(3, 5)]
WEIGHTS = [WeightPair(a, b) for a in range(1, 4) for b in range(1, 4)]

# q away from 1 on both sides, small denominators to keep the rationals short
q_values = st.one_of(
    st.fractions(min_value=Fraction(1, 10), max_value=Fraction(9, 10), max_denominator=40),
    st.fractions(min_value=Fraction(11, 10), max_value=Fraction(4), max_denominator=40),
)
weights = st.builds(WeightPair, st.integers(1, 3), st.integers(1, 3))


def _grid_ids(value):
    if isinstance(value, WeightPair):
        return f"w{value.alpha}{value.beta}"
    return str(value).replace("/", "_")


@pytest.mark.parametrize(
    "n, w, q, expected",
    [
        pytest.param(0, WeightPair(1, 1), "1/2", Fraction(0), id="g0"),
        pytest.param(1, WeightPair(1, 1), "1/2", Fraction(3, 4), id="g1"),
        pytest.param(2, WeightPair(1, 1), "1/2", Fraction(-1), id="g2"),
        pytest.param(1, WeightPair(1, 2), "1/2", Fraction(5, 8), id="g1_beta2"),
        pytest.param(1, WeightPair(3, 1), "1/2", Fraction(3, 4), id="g1_alpha_free"),
    ],
)
def test_genocchi_number_values(n, w, q, expected):
    assert genocchi_number(n, w, QPoint.of(q)) == expected


def test_polynomial_at_zero_is_the_number():
    q = QPoint.of("2/3")
    for w in WEIGHTS:
        for n in range(8):
            assert genocchi_polynomial(n, w, q, PolyArgument.zero()) == genocchi_number(n, w, q)


def test_polynomial_at_two_half():
    # g_2(y) = 3 - 4y for q = 1/2, (1,1)
    q = QPoint.of("1/2")
    assert genocchi_polynomial(2, WeightPair(), q, PolyArgument.at(2, q)) == 2
    assert genocchi_polynomial(2, WeightPair(), q, PolyArgument(Fraction(1, 3))) == Fraction(5, 3)


@pytest.mark.parametrize(
    "value",
    [pytest.param(1, id="one"), pytest.param(0, id="zero"), pytest.param("-1/2", id="negative")],
)
def test_degenerate_q_rejected(value):
    with pytest.raises(DegenerateQError):
        QPoint.of(value)


def test_degenerate_q_is_a_value_error():
    with pytest.raises(ValueError, match="degenerate q"):
        QPoint(Fraction(1))
    assert issubclass(DegenerateQError, QGenocchiError)


def test_floats_are_not_exact():
    with pytest.raises(TypeError):
        to_fraction(0.5)
    with pytest.raises(TypeError):
        to_fraction(True)
    assert to_fraction(" 3/5 ") == Fraction(3, 5)


def test_weights_must_be_positive():
    with pytest.raises(ValueError):
        WeightPair(0, 1)
    with pytest.raises(ValueError):
        WeightPair(1, 0)


def test_poly_argument_checks():
    q = QPoint.of("1/2")
    with pytest.raises(TypeError):
        PolyArgument.at(Fraction(1, 2), q)
    with pytest.raises(ValueError):
        PolyArgument(Fraction(0))
    # label says x = 1 but y is not q^1
    with pytest.raises(ValueError):
        genocchi_polynomial(2, WeightPair(), q, PolyArgument(Fraction(1, 3), Fraction(1)))


def test_pascal_and_brackets():
    assert pascal_row(5) == (1, 5, 10, 10, 5, 1)
    assert binomial(6, 3) == 20
    assert binomial(3, 5) == 0
    q = QPoint.of("1/2")
    assert q_bracket(3, q) == Fraction(7, 4)
    assert q_bracket(0, q) == 0
    # [2]_{-q} = 1 - q
    assert q_bracket_signed(2, q) == Fraction(1, 2)
    assert q_bracket_signed(3, q) == Fraction(3, 4)


@pytest.mark.parametrize("q", Q_GRID, ids=_grid_ids)
@pytest.mark.parametrize("w", WEIGHTS, ids=_grid_ids)
def test_boundary_identity_grid(q, w):
    qp = QPoint(q)
    for n in range(21):
        report = check_boundary(n, w, qp)
        assert report.residual == 0, f"n={n}: {report}"
        assert report.passed


@pytest.mark.parametrize("q", Q_GRID, ids=_grid_ids)
@pytest.mark.parametrize("w", WEIGHTS, ids=_grid_ids)
def test_tail_identity_grid(q, w):
    qp = QPoint(q)
    printed_misses = 0
    for m in range(11):
        for n in range(1, 10):
            assert check_tail(m, n, w, qp, Orientation.LEMMA).residual == 0, (m, n)
            printed = check_tail(m, n, w, qp, Orientation.AS_PRINTED)
            if n % 2 == 1:
                # both orderings coincide for odd n
                assert printed.residual == 0
            elif printed.residual != 0:
                printed_misses += 1
    assert printed_misses > 0


def test_tail_as_printed_example():
    report = check_tail(1, 2, WeightPair(), QPoint.of("1/2"), "as_printed")
    assert report.residual == -3
    assert not report.passed
    assert report.params["orientation"] == "as_printed"


def test_tail_zero_rejected():
    with pytest.raises(EmptyTailError, match="empty tail"):
        check_tail(1, 0, WeightPair(), QPoint.of("1/2"))


@pytest.mark.parametrize("q", Q_GRID, ids=_grid_ids)
@pytest.mark.parametrize("w", WEIGHTS, ids=_grid_ids)
def test_multiplication_grid(q, w):
    qp = QPoint(q)
    for d in (1, 3, 5):
        for n in range(1, 11):
            for k in range(3):
                report = check_multiplication(n, d, w, qp, PolyArgument.at(k, qp))
                assert report.residual == 0, (d, n, k)


def test_multiplication_rejects_even_d():
    q = QPoint.of("1/2")
    with pytest.raises(ParityViolationError):
        check_multiplication(3, 2, WeightPair(), q, PolyArgument.zero())


def test_q_euler_values():
    q = QPoint.of("1/2")
    assert modified_q_euler(0, q) == Fraction(3, 4)
    assert modified_q_euler(1, q) == Fraction(-1, 2)
    assert q_euler_polynomial(1, q, PolyArgument.zero()) == modified_q_euler(1, q)


@pytest.mark.parametrize("q", Q_GRID, ids=_grid_ids)
def test_q_euler_boundary_and_recurrence(q):
    qp = QPoint(q)
    printed_residuals = []
    for n in range(13):
        assert check_euler_boundary(n, qp).residual == 0
        assert check_euler_recurrence(n, qp, EulerForm.DERIVED).residual == 0
        printed_residuals.append(check_euler_recurrence(n, qp, EulerForm.AS_PRINTED).residual)
    # k = 0: eps_0 - eps_0 = 0 against [2]_q
    assert printed_residuals[0] == -(1 + q)
    assert any(r != 0 for r in printed_residuals[1:])


def test_beta_symmetry():
    for q in Q_GRID:
        qp = QPoint(q)
        for n in range(11):
            assert check_beta_symmetry(n, WeightPair(2, 1), 3, qp).passed


@settings(max_examples=40, deadline=None)
@given(q=q_values, w=weights, n=st.integers(0, 8))
def test_boundary_holds_for_random_q(q, w, n):
    assert check_boundary(n, w, QPoint(q)).residual == 0


@settings(max_examples=40, deadline=None)
@given(q=q_values, w=weights, m=st.integers(0, 5), n=st.integers(1, 6))
def test_tail_lemma_holds_for_random_q(q, w, m, n):
    assert check_tail(m, n, w, QPoint(q)).residual == 0


@settings(max_examples=30, deadline=None)
@given(q=q_values, w=weights, n=st.integers(1, 6), d=st.sampled_from([1, 3]), k=st.integers(0, 2))
def test_multiplication_holds_for_random_q(q, w, n, d, k):
    qp = QPoint(q)
    assert check_multiplication(n, d, w, qp, PolyArgument.at(k, qp)).residual == 0
