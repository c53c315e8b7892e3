from collections import Counter

import pytest

from eulerinv.distributions import (
    first_log_concavity_failure,
    full_eulerian,
    gamma_vector,
    involution_eulerian,
    is_log_concave,
    is_symmetric,
    is_unimodal,
    r_closed,
    r_recurrence,
    signed_involution_eulerian,
    signed_involution_eulerian_recurrence,
)
from eulerinv.polynomials import IntPolynomial, binomial, expand_negative_binomial_product
from eulerinv.tableaux import enumerate_all_syb, syb_des_b
from oracles import signed_telephone_number, telephone_number

INVOLUTION_ROWS = {
    1: (1,),
    2: (1, 1),
    3: (1, 2, 1),
    4: (1, 4, 4, 1),
    5: (1, 6, 12, 6, 1),
    6: (1, 9, 28, 28, 9, 1),
}

SIGNED_ROWS = {
    1: (1, 1),
    2: (1, 4, 1),
    3: (1, 9, 9, 1),
    4: (1, 17, 40, 17, 1),
    5: (1, 28, 127, 127, 28, 1),
}


def test_involution_rows():
    assert involution_eulerian(0).coefficients() == (1,)
    for n, row in INVOLUTION_ROWS.items():
        dist = involution_eulerian(n)
        assert dist.coefficients() == row
        assert dist.kind == "A-involutions"


def test_signed_involution_rows():
    for n, row in SIGNED_ROWS.items():
        assert signed_involution_eulerian(n).coefficients() == row


def test_signed_involution_row_six_reconciliation():
    # the disputed row: enumeration decides 634, and the total must be b(6)
    dist = signed_involution_eulerian(6)
    assert dist.coefficients() == (1, 43, 331, 634, 331, 43, 1)
    assert dist.total() == 1384


def test_totals_match_counting_recurrences():
    for n in range(0, 8):
        assert involution_eulerian(n).total() == telephone_number(n)
        assert signed_involution_eulerian(n).total() == signed_telephone_number(n)


def test_full_eulerian_examples():
    assert full_eulerian(2, signed=False).coefficients() == (1, 1)
    assert full_eulerian(2, signed=True).coefficients() == (1, 6, 1)
    assert full_eulerian(1, signed=True).coefficients() == (1, 1)
    assert full_eulerian(3, signed=True, statistic="desCoxeter").coefficients() == (1, 23, 23, 1)


def test_unknown_statistic_rejected():
    with pytest.raises(ValueError):
        signed_involution_eulerian(2, statistic="major")


def test_recurrence_small_rows():
    assert signed_involution_eulerian_recurrence(3).coefficients() == (1, 9, 9, 1)
    assert signed_involution_eulerian_recurrence(0).coefficients() == (1,)


def test_recurrence_decomposition_by_hand():
    # row 3, middle coefficient: 3*9 = 3*4 + 5*1 + 6*1 + 4*1
    assert 3 * 9 == 3 * 4 + 5 * 1 + 6 * 1 + 4 * 1
    # row 4, center: 4*40 = 5*9 + 5*9 + 15*1 + 10*4 + 15*1
    assert 4 * 40 == 5 * 9 + 5 * 9 + 15 * 1 + 10 * 4 + 15 * 1
    assert signed_involution_eulerian_recurrence(4).coefficients() == (1, 17, 40, 17, 1)


def test_recurrence_agrees_with_enumeration():
    for n in range(1, 8):
        assert (
            signed_involution_eulerian_recurrence(n).poly
            == signed_involution_eulerian(n).poly
        ), n


def test_bitableau_route_gives_same_polynomial():
    for n in range(0, 7):
        histogram = Counter(syb_des_b(q) for q in enumerate_all_syb(n))
        row = tuple(histogram.get(k, 0) for k in range(n + 1))
        assert row == signed_involution_eulerian(n).coefficients(), n


def test_r_closed_values():
    for m in range(0, 6):
        assert r_closed(0, m) == 1
        assert r_closed(1, m) == 2 * m + 1
    assert r_closed(2, 1) == 7


def test_r_recurrence_values():
    assert r_recurrence(2, 1) == 7
    assert r_recurrence(2, 0) == 1
    assert r_recurrence(3, 1) == r_closed(3, 1)


def test_r_three_routes_agree():
    for n in range(0, 21):
        for m in range(0, 7):
            closed = r_closed(n, m)
            assert closed == r_recurrence(n, m)
            series = expand_negative_binomial_product(2 * m + 1, m * m, n)
            assert closed == series.coefficient(n)


def test_genfun_hand_checks():
    # type B at n=1, k=1: 1*C(2,1) + 1*C(1,1) = 3 = r(1,1)
    row = signed_involution_eulerian(1).coefficients()
    assert sum(c * binomial(1 + 1 - j, 1) for j, c in enumerate(row)) == 3 == r_closed(1, 1)
    # type A at n=1, m=1 against the series route
    series = expand_negative_binomial_product(2, 1, 1)
    assert binomial(2, 1) == series.coefficient(1) == 2


def test_genfun_a_with_frozen_row_six():
    # the published n=6 row feeds the left side directly
    row = INVOLUTION_ROWS[6]
    for m in range(0, 5):
        lhs = sum(c * binomial(6 + m - j, 6) for j, c in enumerate(row))
        series = expand_negative_binomial_product(m + 1, m * (m + 1) // 2, 6)
        assert lhs == series.coefficient(6), m


def test_inexact_division_aborts_loudly():
    from eulerinv.distributions import InexactDivisionError, _exact_div

    assert _exact_div(160, 4, "test") == 40
    with pytest.raises(InexactDivisionError, match="not divisible"):
        _exact_div(7, 3, "test")
    # n up to 40 never trips it: every recurrence division is exact
    signed_involution_eulerian_recurrence(40)
    assert r_recurrence(50, 6) == r_closed(50, 6)


def test_is_symmetric():
    assert is_symmetric(IntPolynomial(SIGNED_ROWS[5]), 5)
    assert not is_symmetric(IntPolynomial((1, 2)), 1)
    assert is_symmetric(IntPolynomial(), 3)
    assert is_symmetric(IntPolynomial((0, 1)), 2)
    assert not is_symmetric(IntPolynomial((0, 1)), 0)


def test_is_unimodal():
    assert is_unimodal(IntPolynomial((1, 17, 40, 17, 1)))
    assert not is_unimodal(IntPolynomial((1, 0, 1)))
    assert is_unimodal(IntPolynomial((5,)))
    assert is_unimodal(IntPolynomial())
    assert is_unimodal(IntPolynomial((1, 1, 2, 2, 1)))


def test_is_log_concave():
    assert is_log_concave(IntPolynomial((1, 2, 1)))
    assert not is_log_concave(IntPolynomial((1, 1, 2)))
    prefix = [r_closed(89, k) for k in range(4)]
    assert first_log_concavity_failure(prefix) is not None


def test_gamma_vector_examples():
    assert gamma_vector(IntPolynomial((1, 17, 40, 17, 1)), 4).gammas == (1, 13, 8)
    row6 = signed_involution_eulerian_recurrence(6).poly
    assert gamma_vector(row6, 6).gammas == (1, 37, 168, 56)
    assert gamma_vector(IntPolynomial((1, 4, 6, 4, 1)), 4).gammas == (1, 0, 0)
    assert gamma_vector(IntPolynomial((1, 2, 1)), 2).gammas == (1, 0)


def test_gamma_vector_roundtrip():
    for n in range(0, 13):
        poly = signed_involution_eulerian_recurrence(n).poly
        gv = gamma_vector(poly, n)
        assert gv.reconstruct() == poly
        assert len(gv.gammas) == n // 2 + 1


def test_gamma_vector_rejects_asymmetric():
    with pytest.raises(ValueError):
        gamma_vector(IntPolynomial((1, 2)), 1)


def test_gamma_vector_allows_negative_entries():
    # symmetric but not gamma-positive
    gv = gamma_vector(IntPolynomial((1, 0, 1)), 2)
    assert gv.gammas == (1, -2)
    assert not gv.is_nonnegative
    assert gv.reconstruct() == IntPolynomial((1, 0, 1))


def test_recurrence_rows_symmetric_and_unimodal_to_40():
    for n in range(0, 41):
        poly = signed_involution_eulerian_recurrence(n).poly
        assert is_symmetric(poly, n)
        assert is_unimodal(poly)


def test_involution_rows_symmetric():
    for n in range(1, 9):
        assert is_symmetric(involution_eulerian(n).poly, n - 1)
