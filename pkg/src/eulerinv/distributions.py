"""Descent-number distributions over (signed) permutation classes.

Builds the involution and whole-group Eulerian polynomials by direct
enumeration, the type-B involution polynomial by its linear recurrence, the
coefficient family r(n, m) of the expanded generating function by two
routes, and the symmetry / unimodality / log-concavity / gamma machinery.

The recurrence divides by n at every step; the division is exact when the
coefficients are right, so a nonzero remainder aborts loudly instead of
being rounded away.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .permutations import (
    des_b,
    des_coxeter,
    descent_set,
    enumerate_group,
    enumerate_involutions,
    enumerate_signed_involutions,
)
from .polynomials import IntPolynomial, binomial

DES_B = "desB"
DES_COXETER = "desCoxeter"
_STATISTICS = {DES_B: des_b, DES_COXETER: des_coxeter}


class InexactDivisionError(ArithmeticError):
    """A recurrence step did not divide evenly: the coefficients are wrong."""


def _statistic(name: str):
    try:
        return _STATISTICS[name]
    except KeyError:
        raise ValueError(f"unknown statistic {name!r}; expected desB or desCoxeter") from None


@dataclass(frozen=True)
class EulerianDistribution:
    """A descent-number distribution: which class it came from, and the
    polynomial whose x^k coefficient counts elements with k descents."""

    n: int
    kind: str
    poly: IntPolynomial

    def coefficients(self) -> tuple[int, ...]:
        return self.poly.coeffs

    def total(self) -> int:
        return self.poly.evaluate(1)


def _histogram_poly(n: int, values) -> IntPolynomial:
    counts = Counter(values)
    return IntPolynomial(counts.get(k, 0) for k in range(n + 1))


def involution_eulerian(n: int, budget: int | None = None) -> EulerianDistribution:
    """Distribution of the descent number over involutions of S_n."""
    poly = _histogram_poly(n, (len(descent_set(w)) for w in enumerate_involutions(n, budget)))
    return EulerianDistribution(n, "A-involutions", poly)


def signed_involution_eulerian(
    n: int, statistic: str = DES_B, budget: int | None = None
) -> EulerianDistribution:
    """Distribution of a type-B descent statistic over involutions of B_n."""
    stat = _statistic(statistic)
    poly = _histogram_poly(n, (stat(w) for w in enumerate_signed_involutions(n, budget)))
    return EulerianDistribution(n, f"B-involutions-{statistic}", poly)


def full_eulerian(
    n: int, signed: bool, statistic: str = DES_B, budget: int | None = None
) -> EulerianDistribution:
    """Distribution over the whole group S_n or B_n."""
    if signed:
        stat = _statistic(statistic)
        kind = f"B-full-{statistic}"
    else:
        stat = lambda w: len(descent_set(w))
        kind = "A-full"
    poly = _histogram_poly(n, (stat(w) for w in enumerate_group(n, signed, budget)))
    return EulerianDistribution(n, kind, poly)


def _exact_div(total: int, n: int, context: str) -> int:
    q, r = divmod(total, n)
    if r:
        raise InexactDivisionError(f"{context}: {total} is not divisible by {n}")
    return q


def signed_involution_eulerian_recurrence(n: int) -> EulerianDistribution:
    """Type-B involution distribution computed by the three-term linear
    recurrence on coefficient rows, entirely without enumeration.

    Row n is assembled from rows n-1 and n-2 and divided by n; the division
    must leave no remainder.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    rows = [(1,), (1, 1), (1, 4, 1)]
    for size in range(3, n + 1):
        prev = rows[size - 1]
        prev2 = rows[size - 2]

        def get(row, k):
            return row[k] if 0 <= k < len(row) else 0

        row = []
        for k in range(size + 1):
            total = (
                (2 * k + 1) * get(prev, k)
                + (2 * size - 2 * k + 1) * get(prev, k - 1)
                + (size - 1 + 2 * k * (k + 1)) * get(prev2, k)
                + (2 * (size - 1) + 4 * (size - k - 1) * (k - 1)) * get(prev2, k - 1)
                + ((2 * size - 3) * (size - 1) + 2 * (k - 2) * (k - 2 * size + 1))
                * get(prev2, k - 2)
            )
            row.append(_exact_div(total, size, f"recurrence row n={size}, k={k}"))
        rows.append(tuple(row))
    return EulerianDistribution(n, f"B-involutions-{DES_B}", IntPolynomial(rows[n]))


def r_closed(n: int, m: int) -> int:
    """The x^m coefficient of the B-involution polynomial divided by
    (1-x)^(n+1), as the closed double-binomial sum."""
    if n < 0 or m < 0:
        raise ValueError("n and m must be nonnegative")
    total = 0
    for j in range(n // 2 + 1):
        left = 1 if j == 0 else binomial(m * m + j - 1, j)
        if left:
            total += left * binomial(2 * m + n - 2 * j, n - 2 * j)
    return total


def r_recurrence(n: int, m: int) -> int:
    """Same quantity by the two-term recurrence in n, seeded from the closed
    form at n = 0, 1; every division by n must be exact."""
    if n < 0 or m < 0:
        raise ValueError("n and m must be nonnegative")
    if n <= 1:
        return r_closed(n, m)
    prev2 = r_closed(0, m)
    prev = r_closed(1, m)
    for size in range(2, n + 1):
        total = (2 * m + 1) * prev + (2 * m * m + 2 * m + size - 1) * prev2
        prev2, prev = prev, _exact_div(total, size, f"r-recurrence n={size}, m={m}")
    return prev


def is_symmetric(p: IntPolynomial, n: int) -> bool:
    """Whether coefficients satisfy a_i = a_{n-i} for 0 <= i <= n, reading
    absent coefficients as zero."""
    if p.is_zero:
        return True
    if n < p.degree:
        return False
    return all(p.coefficient(i) == p.coefficient(n - i) for i in range(n + 1))


def is_unimodal(p: IntPolynomial) -> bool:
    """Whether coefficients weakly rise and then weakly fall."""
    coeffs = p.coeffs
    i = 0
    while i + 1 < len(coeffs) and coeffs[i] <= coeffs[i + 1]:
        i += 1
    while i + 1 < len(coeffs) and coeffs[i] >= coeffs[i + 1]:
        i += 1
    return i + 1 >= len(coeffs)


def first_log_concavity_failure(values) -> int | None:
    """First interior index where a_i^2 < a_{i-1} a_{i+1}, or None."""
    values = list(values)
    for i in range(1, len(values) - 1):
        if values[i] ** 2 < values[i - 1] * values[i + 1]:
            return i
    return None


def is_log_concave(p: IntPolynomial) -> bool:
    """Whether a_i^2 >= a_{i-1} a_{i+1} at every interior index."""
    return first_log_concavity_failure(p.coeffs) is None


@dataclass(frozen=True)
class GammaVector:
    """Expansion of a symmetric polynomial in the basis x^i (1+x)^(n-2i),
    where n is twice the center of symmetry."""

    center_doubled: int
    gammas: tuple[int, ...]

    @property
    def is_nonnegative(self) -> bool:
        return all(g >= 0 for g in self.gammas)

    def reconstruct(self) -> IntPolynomial:
        n = self.center_doubled
        one_plus_x = IntPolynomial((1, 1))
        total = IntPolynomial()
        for i, g in enumerate(self.gammas):
            basis = one_plus_x ** (n - 2 * i)
            total = total + g * IntPolynomial((0,) * i + (1,)) * basis
        return total


def gamma_vector(p: IntPolynomial, n: int) -> GammaVector:
    """Extract the gamma expansion of a polynomial symmetric with center n/2.

    Works from the bottom coefficient up: gamma_i is whatever coefficient of
    x^i the previous subtractions left behind.  Entries may be negative;
    asymmetric input is rejected.
    """
    if not is_symmetric(p, n):
        raise ValueError(f"polynomial {p!r} is not symmetric with doubled center {n}")
    residual = list(p.coeffs) + [0] * (n + 1 - len(p.coeffs))
    gammas = []
    one_plus_x = IntPolynomial((1, 1))
    for i in range(n // 2 + 1):
        g = residual[i]
        gammas.append(g)
        if g:
            basis = (one_plus_x ** (n - 2 * i)).coeffs
            for j, c in enumerate(basis):
                residual[i + j] -= g * c
    if any(residual):
        raise ValueError("gamma extraction left a nonzero residual")
    return GammaVector(n, tuple(gammas))
