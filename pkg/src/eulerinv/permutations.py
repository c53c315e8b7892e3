"""Permutations of S_n and signed permutations of B_n with descent statistics.

A permutation is a window tuple (w(1), ..., w(n)) of distinct values; a
signed permutation additionally carries signs, the implicit symmetry being
w(-a) = -w(a).  Involutions are generated constructively (fixed points with
free signs, 2-cycles with a shared sign) rather than by filtering the full
group: B_9 has about 1.9 * 10^11 elements but only 168,992 involutions.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations as _itertools_permutations
from itertools import product as _itertools_product
from math import factorial
from typing import Iterator

Window = tuple[int, ...]

#: Cap on objects a single enumeration call may generate.
DEFAULT_BUDGET = 20_000_000


class BudgetExceededError(RuntimeError):
    """The requested enumeration would exceed the configured object budget."""


def _check_budget(n: int, count: int, budget: int | None, what: str) -> None:
    cap = DEFAULT_BUDGET if budget is None else budget
    if count > cap:
        raise BudgetExceededError(
            f"enumerating {what} for n={n} needs {count} objects, over the budget of {cap}"
        )


@dataclass(frozen=True)
class SignedDescentSet:
    """Descent positions together with the sign vector, shared by signed
    permutations and bitableaux.

    Signs are +1/-1 per position.  A sign rise (-, +) can never be a descent,
    which the constructor enforces.
    """

    positions: frozenset[int]
    signs: tuple[int, ...]

    def __post_init__(self):
        n = len(self.signs)
        for s in self.signs:
            if s not in (-1, 1):
                raise ValueError(f"signs must be +1 or -1, got {s}")
        for i in self.positions:
            if not 1 <= i <= n - 1:
                raise ValueError(f"descent position {i} outside 1..{n - 1}")
            if self.signs[i - 1] == -1 and self.signs[i] == 1:
                raise ValueError(f"position {i} has a -,+ sign rise and cannot be a descent")

    @property
    def n(self) -> int:
        return len(self.signs)

    def type_b_descents(self) -> int:
        """|Des| plus one when the first sign is negative."""
        extra = 1 if self.signs and self.signs[0] == -1 else 0
        return len(self.positions) + extra


def validate_window(window: Window, signed: bool) -> None:
    n = len(window)
    seen = sorted(abs(v) for v in window)
    if seen != list(range(1, n + 1)):
        raise ValueError(f"window {window} is not a permutation of 1..{n} in absolute value")
    if not signed and any(v < 0 for v in window):
        raise ValueError(f"window {window} carries signs but was declared unsigned")


def descent_set(window: Window) -> frozenset[int]:
    """Positions i with w(i) > w(i+1), natural order."""
    return frozenset(i for i in range(1, len(window)) if window[i - 1] > window[i])


def signed_descent_set(window: Window) -> SignedDescentSet:
    """Signed descent set (Des(w), epsilon) of a signed window.

    i is a descent when the signs step +,- , or when they agree and the
    absolute values step down; a -,+ step is never a descent.
    """
    n = len(window)
    signs = tuple(1 if v > 0 else -1 for v in window)
    positions = []
    for i in range(1, n):
        a, b = window[i - 1], window[i]
        sa, sb = signs[i - 1], signs[i]
        if sa == 1 and sb == -1:
            positions.append(i)
        elif sa == sb and abs(a) > abs(b):
            positions.append(i)
    return SignedDescentSet(frozenset(positions), signs)


def des_b(window: Window) -> int:
    """Type-B descent number of a signed window (colored-permutation order)."""
    return signed_descent_set(window).type_b_descents()


def des_coxeter(window: Window) -> int:
    """Descent number of a signed window in the Coxeter sense: natural
    integer order with w(0) = 0 prepended."""
    count = 0
    prev = 0
    for v in window:
        if prev > v:
            count += 1
        prev = v
    return count


def is_involution(window: Window) -> bool:
    """Whether composing the (possibly signed) window with itself is the identity."""
    n = len(window)
    values = {abs(v) for v in window}
    if values != set(range(1, n + 1)):
        return False
    for i in range(1, n + 1):
        j = window[i - 1]
        image = window[abs(j) - 1]
        if j < 0:
            image = -image
        if image != i:
            return False
    return True


def inverse(window: Window) -> Window:
    """Inverse of a (possibly signed) window."""
    n = len(window)
    out = [0] * n
    for i, v in enumerate(window, start=1):
        if v > 0:
            out[v - 1] = i
        else:
            out[-v - 1] = -i
    return tuple(out)


def involution_count(n: int) -> int:
    """Number of involutions in S_n: T(n) = T(n-1) + (n-1) T(n-2)."""
    a, b = 1, 1
    for k in range(2, n + 1):
        a, b = b, b + (k - 1) * a
    return b if n >= 1 else 1


def signed_involution_count(n: int) -> int:
    """Number of involutions in B_n: b(n) = 2 b(n-1) + 2(n-1) b(n-2)."""
    a, b = 1, 2
    if n == 0:
        return 1
    for k in range(2, n + 1):
        a, b = b, 2 * b + 2 * (k - 1) * a
    return b


def enumerate_involutions(n: int, budget: int | None = None) -> Iterator[Window]:
    """Yield each involution of S_n once, in lexicographic window order."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    _check_budget(n, involution_count(n), budget, "involutions of the symmetric group")
    window = [0] * (n + 1)

    def fill(available: tuple[int, ...]) -> Iterator[Window]:
        if not available:
            yield tuple(window[1:])
            return
        p = available[0]
        rest = available[1:]
        window[p] = p
        yield from fill(rest)
        for idx, q in enumerate(rest):
            window[p], window[q] = q, p
            yield from fill(rest[:idx] + rest[idx + 1 :])

    yield from fill(tuple(range(1, n + 1)))


def enumerate_signed_involutions(n: int, budget: int | None = None) -> Iterator[Window]:
    """Yield each involution of B_n once, in lexicographic window order.

    Fixed points take either sign; the two positions of a 2-cycle must agree
    in sign for the square to be the identity.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    _check_budget(n, signed_involution_count(n), budget, "involutions of the hyperoctahedral group")
    window = [0] * (n + 1)

    def fill(available: tuple[int, ...]) -> Iterator[Window]:
        if not available:
            yield tuple(window[1:])
            return
        p = available[0]
        rest = available[1:]
        # Candidates for w(p) ascending in the natural integer order:
        # -q for q descending, then +p, then +q ascending.
        for idx in range(len(rest) - 1, -1, -1):
            q = rest[idx]
            window[p], window[q] = -q, -p
            yield from fill(rest[:idx] + rest[idx + 1 :])
        window[p] = -p
        yield from fill(rest)
        window[p] = p
        yield from fill(rest)
        for idx, q in enumerate(rest):
            window[p], window[q] = q, p
            yield from fill(rest[:idx] + rest[idx + 1 :])

    yield from fill(tuple(range(1, n + 1)))


def enumerate_group(n: int, signed: bool, budget: int | None = None) -> Iterator[Window]:
    """Yield all of S_n (n! windows) or B_n (2^n n! windows)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    order = factorial(n) * (2**n if signed else 1)
    name = "the hyperoctahedral group" if signed else "the symmetric group"
    _check_budget(n, order, budget, name)
    if not signed:
        for perm in _itertools_permutations(range(1, n + 1)):
            yield perm
        return
    for perm in _itertools_permutations(range(1, n + 1)):
        for signs in _itertools_product((1, -1), repeat=n):
            yield tuple(s * v for s, v in zip(signs, perm))
