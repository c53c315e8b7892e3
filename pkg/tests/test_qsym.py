from itertools import combinations

from eulerinv.permutations import des_b, enumerate_group, signed_descent_set
from eulerinv.polynomials import binomial
from eulerinv.qsym import (
    fundamental_spec,
    schur_spec,
    signed_fundamental_spec,
    verify_cauchy_spec,
    verify_signed_schur_spec,
    verify_signed_spec_closed_form,
)
from eulerinv.tableaux import partitions
from oracles import count_chains, count_ssyt


def test_fundamental_spec_examples():
    assert fundamental_spec(2, (), 2) == 3
    assert fundamental_spec(2, {1}, 2) == 1
    assert fundamental_spec(3, (), 1) == 1
    assert fundamental_spec(0, (), 5) == 1
    assert fundamental_spec(2, (), 0) == 0


def test_fundamental_spec_closed_form():
    for n in range(0, 7):
        for size in range(n):
            for strict in combinations(range(1, n), size):
                for m in range(1, 9):
                    assert fundamental_spec(n, strict, m) == binomial(
                        n + m - 1 - len(strict), n
                    ), (n, strict, m)


def test_signed_fundamental_spec_examples():
    assert signed_fundamental_spec(signed_descent_set((-1,)), 3) == 2
    # identity: unconstrained multiset count
    for n in range(0, 5):
        identity = tuple(range(1, n + 1))
        for m in range(1, 5):
            assert signed_fundamental_spec(signed_descent_set(identity), m) == binomial(
                n + m - 1, n
            )
    # the one-descent, trailing-minus window: only the chain (1, 2) survives
    assert signed_fundamental_spec(signed_descent_set((2, -1)), 2) == 1


def test_signed_fundamental_spec_against_chain_enumeration():
    for n in range(0, 4):
        for w in enumerate_group(n, signed=True):
            sdes = signed_descent_set(w)
            minimums = tuple(2 if s == -1 else 1 for s in sdes.signs)
            for m in range(1, 5):
                assert signed_fundamental_spec(sdes, m) == count_chains(
                    n, sdes.positions, minimums, m
                ), (w, m)


def test_signed_fundamental_spec_closed_form_exhaustive():
    for n in range(0, 5):
        for w in enumerate_group(n, signed=True):
            sdes = signed_descent_set(w)
            for m in range(1, 7):
                assert signed_fundamental_spec(sdes, m) == binomial(n + m - 1 - des_b(w), n)


def test_schur_spec_examples():
    assert schur_spec((1, 1), 2) == 1
    assert schur_spec((5,), 1) == 1
    assert schur_spec((2, 1), 2) == 2
    assert schur_spec((), 0) == 1
    assert schur_spec((2,), 0) == 0


def test_schur_spec_matches_ssyt_oracle():
    for n in range(0, 6):
        for shape in partitions(n):
            for m in range(0, 5):
                assert schur_spec(shape, m) == count_ssyt(shape, m), (shape, m)


def test_specializations_weakly_increase_in_m():
    for n in range(0, 5):
        for shape in partitions(n):
            values = [schur_spec(shape, m) for m in range(6)]
            assert all(a <= b for a, b in zip(values, values[1:]))
    for w in enumerate_group(3, signed=True):
        sdes = signed_descent_set(w)
        values = [signed_fundamental_spec(sdes, m) for m in range(1, 7)]
        assert all(a <= b for a, b in zip(values, values[1:]))


def test_verify_cauchy_spec():
    report = verify_cauchy_spec(6, 4)
    assert report.ok
    by_params = {record.params: record for record in report}
    assert by_params[(("n", 1), ("m", 2))].lhs == "2"
    assert by_params[(("n", 2), ("m", 2))].lhs == "4"
    assert by_params[(("n", 0), ("m", 3))].lhs == "1"


def test_verify_signed_schur_spec():
    report = verify_signed_schur_spec(4, 4)
    assert report.ok
    by_params = {record.params: record for record in report}
    assert by_params[(("n", 1), ("plus", "1"), ("minus", "0"), ("m", 2))].lhs == "2"
    assert by_params[(("n", 1), ("plus", "0"), ("minus", "1"), ("m", 2))].lhs == "1"
    assert by_params[(("n", 2), ("plus", "1"), ("minus", "1"), ("m", 2))].lhs == "2"


def test_verify_signed_spec_closed_form():
    assert verify_signed_spec_closed_form(3, 5).ok
