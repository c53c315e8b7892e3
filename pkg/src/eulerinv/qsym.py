"""Principal specializations of fundamental quasisymmetric and Schur functions.

A specialization count is the number of weakly increasing index chains into
1..m, strict at prescribed positions; the two-alphabet (signed) variant
additionally bans index 1 at negatively signed positions, which is exactly
what substituting 0 for the first variable of the second alphabet does.

Counts are computed by dynamic programming over chain positions.  The
matching closed forms (single binomial coefficients) are deliberately NOT
used here: they serve as the independent second route in the verification
sweeps and the test suite.
"""
from __future__ import annotations

from collections.abc import Collection

from .permutations import SignedDescentSet, des_b, enumerate_group, signed_descent_set
from .polynomials import binomial, expand_negative_binomial_product
from .reports import CheckRecord, Report
from .tableaux import (
    Shape,
    bipartitions,
    enumerate_syb,
    enumerate_syt,
    partitions,
    syb_signed_descent_set,
    syt_descent_set,
    validate_shape,
)


def _count_chains(n: int, strict_after: Collection[int], minimums: tuple[int, ...], m: int) -> int:
    """Chains 1 <= i_1 <= ... <= i_n <= m with i_j < i_{j+1} for j in
    strict_after and i_j >= minimums[j-1] throughout."""
    if n == 0:
        return 1
    if m <= 0:
        return 0
    # ways[v] = chains so far ending at value v (1-indexed into 1..m)
    ways = [0] * (m + 1)
    for v in range(minimums[0], m + 1):
        ways[v] = 1
    for j in range(2, n + 1):
        strict = (j - 1) in strict_after
        prefix = 0
        new = [0] * (m + 1)
        for v in range(1, m + 1):
            if strict:
                new[v] = prefix if v >= minimums[j - 1] else 0
                prefix += ways[v]
            else:
                prefix += ways[v]
                new[v] = prefix if v >= minimums[j - 1] else 0
        ways = new
    return sum(ways)


def fundamental_spec(n: int, strict_positions: Collection[int], m: int) -> int:
    """Specialize the fundamental quasisymmetric function indexed by a subset
    of 1..n-1 at m variables set to one: the count of weakly increasing
    chains into 1..m, strict where prescribed."""
    if m < 0:
        raise ValueError("m must be nonnegative")
    return _count_chains(n, frozenset(strict_positions), (1,) * n, m)


def signed_fundamental_spec(sdes: SignedDescentSet, m: int) -> int:
    """Specialize the two-alphabet fundamental function of a signed descent
    set at (1^m, 01^(m-1)): negative positions must avoid index 1."""
    if m < 0:
        raise ValueError("m must be nonnegative")
    minimums = tuple(2 if s == -1 else 1 for s in sdes.signs)
    return _count_chains(sdes.n, sdes.positions, minimums, m)


def schur_spec(shape: Shape, m: int) -> int:
    """Principal specialization of a Schur function: the sum of fundamental
    specializations over the standard tableaux of the shape.  Counts the
    semistandard fillings with entries at most m."""
    validate_shape(shape)
    n = sum(shape)
    if m == 0:
        return 1 if n == 0 else 0
    return sum(fundamental_spec(n, syt_descent_set(q), m) for q in enumerate_syt(shape))


def verify_signed_spec_closed_form(n_max: int = 4, m_max: int = 6) -> Report:
    """Exhaustively check, over every signed permutation of each B_n, that the
    chain-count specialization equals C(n + m - 1 - des_B, n)."""
    report = Report()
    for n in range(n_max + 1):
        for m in range(1, m_max + 1):
            bad = None
            for w in enumerate_group(n, signed=True):
                lhs = signed_fundamental_spec(signed_descent_set(w), m)
                rhs = binomial(n + m - 1 - des_b(w), n)
                if lhs != rhs:
                    bad = (w, lhs, rhs)
                    break
            if bad is None:
                report.add(
                    CheckRecord(
                        "signed-spec-closed-form",
                        (("n", n), ("m", m)),
                        "pass",
                        "chain-count",
                        "binomial",
                    )
                )
            else:
                w, lhs, rhs = bad
                report.add(
                    CheckRecord(
                        "signed-spec-closed-form",
                        (("n", n), ("m", m), ("w", " ".join(map(str, w)))),
                        "fail",
                        str(lhs),
                        str(rhs),
                    )
                )
    return report


def verify_cauchy_spec(n_max: int = 6, m_max: int = 4) -> Report:
    """Check that summing Schur specializations over all partitions of n
    matches the t^n coefficient of (1-t)^(-m) (1-t^2)^(-C(m,2))."""
    report = Report()
    for m in range(m_max + 1):
        series = expand_negative_binomial_product(m, binomial(m, 2), n_max)
        for n in range(n_max + 1):
            lhs = sum(schur_spec(shape, m) for shape in partitions(n))
            rhs = series.coefficient(n)
            report.add(
                CheckRecord(
                    "cauchy-specialization",
                    (("n", n), ("m", m)),
                    "pass" if lhs == rhs else "fail",
                    str(lhs),
                    str(rhs),
                )
            )
    return report


def verify_signed_schur_spec(n_max: int = 5, m_max: int = 4) -> Report:
    """Check, shape pair by shape pair, that summing signed specializations
    over the bitableaux of a bipartition factors as the product of the two
    Schur specializations at m and m-1 variables."""
    report = Report()
    for n in range(n_max + 1):
        for plus, minus in bipartitions(n):
            sdes_list = [syb_signed_descent_set(q) for q in enumerate_syb((plus, minus))]
            for m in range(1, m_max + 1):
                lhs = sum(signed_fundamental_spec(s, m) for s in sdes_list)
                rhs = schur_spec(plus, m) * schur_spec(minus, m - 1)
                report.add(
                    CheckRecord(
                        "signed-schur-factorization",
                        (
                            ("n", n),
                            ("plus", ".".join(map(str, plus)) or "0"),
                            ("minus", ".".join(map(str, minus)) or "0"),
                            ("m", m),
                        ),
                        "pass" if lhs == rhs else "fail",
                        str(lhs),
                        str(rhs),
                    )
                )
    return report
