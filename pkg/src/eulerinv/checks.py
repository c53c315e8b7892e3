"""Verification sweeps: every identity the library can check, as reports.

Each sweep compares two independently computed sides of an identity and
emits one record per checked case, in deterministic (n, k) order.  Hard
identities get pass/fail records; open questions and known print
discrepancies get note records that never fail a run.
"""
from __future__ import annotations

import random
from collections import Counter

from . import reference
from .distributions import (
    DES_B,
    DES_COXETER,
    GammaVector,
    first_log_concavity_failure,
    gamma_vector,
    involution_eulerian,
    is_symmetric,
    is_unimodal,
    r_closed,
    signed_involution_eulerian,
    signed_involution_eulerian_recurrence,
)
from .permutations import (
    descent_set,
    enumerate_involutions,
    enumerate_signed_involutions,
    signed_descent_set,
)
from .polynomials import IntPolynomial, binomial, expand_negative_binomial_product
from .reports import CheckRecord, Report, int_list
from .tableaux import (
    enumerate_all_syb,
    enumerate_all_syt,
    syb_des_b,
    syb_signed_descent_set,
    syb_transpose,
    syt_descent_set,
    syt_transpose,
)

#: Seed for the randomized lemma check; fixed so runs are reproducible.
DEFAULT_SEED = 271828


def _compare(report: Report, check: str, params, lhs, rhs) -> None:
    report.add(
        CheckRecord(check, tuple(params), "pass" if lhs == rhs else "fail", str(lhs), str(rhs))
    )


def verify_recurrence_route(n_max: int = 9, budget: int | None = None) -> Report:
    """Recurrence-computed type-B involution rows against brute-force
    enumeration, coefficient by coefficient."""
    report = Report()
    for n in range(1, n_max + 1):
        enum_row = signed_involution_eulerian(n, budget=budget).coefficients()
        rec_row = signed_involution_eulerian_recurrence(n).coefficients()
        _compare(
            report,
            "recurrence-vs-enumeration",
            (("n", n),),
            int_list(rec_row),
            int_list(enum_row),
        )
    return report


def verify_genfun_a(n_max: int = 8, m_max: int = 6, budget: int | None = None) -> Report:
    """Coefficient extraction of the symmetric-group generating identity:
    the x^m coefficient of I_n(x)/(1-x)^(n+1) must equal the t^n coefficient
    of (1-t)^-(m+1) (1-t^2)^-(m(m+1)/2)."""
    report = Report()
    rows = [involution_eulerian(n, budget=budget).coefficients() for n in range(n_max + 1)]
    for m in range(m_max + 1):
        series = expand_negative_binomial_product(m + 1, m * (m + 1) // 2, n_max)
        for n in range(n_max + 1):
            lhs = sum(c * binomial(n + m - j, n) for j, c in enumerate(rows[n]))
            _compare(report, "genfun-a", (("n", n), ("m", m)), lhs, series.coefficient(n))
    return report


def verify_genfun_b(n_max: int = 8, k_max: int = 8, budget: int | None = None) -> Report:
    """Coefficient extraction of the hyperoctahedral generating identity:
    the x^k coefficient of I_n^B(x)/(1-x)^(n+1) must equal the closed
    double-binomial sum r(n, k)."""
    report = Report()
    for n in range(n_max + 1):
        row = signed_involution_eulerian(n, budget=budget).coefficients()
        for k in range(k_max + 1):
            lhs = sum(c * binomial(n + k - j, n) for j, c in enumerate(row))
            _compare(report, "genfun-b", (("n", n), ("k", k)), lhs, r_closed(n, k))
    return report


def verify_descent_multiset_bijection(
    signed_n_max: int = 6, unsigned_n_max: int = 7, budget: int | None = None
) -> Report:
    """Descent-preserving bijection consequences, checked as multiset
    equalities: signed descent sets over B-involutions against bitableaux,
    and descent sets over involutions against standard tableaux."""
    report = Report()
    for n in range(signed_n_max + 1):
        perm_side = Counter(signed_descent_set(w) for w in enumerate_signed_involutions(n, budget))
        tab_side = Counter(syb_signed_descent_set(q) for q in enumerate_all_syb(n))
        report.add(
            CheckRecord(
                "sdes-multiset-signed",
                (("n", n),),
                "pass" if perm_side == tab_side else "fail",
                f"{sum(perm_side.values())} involutions",
                f"{sum(tab_side.values())} bitableaux",
            )
        )
    for n in range(unsigned_n_max + 1):
        perm_side = Counter(descent_set(w) for w in enumerate_involutions(n, budget))
        tab_side = Counter(syt_descent_set(q) for q in enumerate_all_syt(n))
        report.add(
            CheckRecord(
                "des-multiset-unsigned",
                (("n", n),),
                "pass" if perm_side == tab_side else "fail",
                f"{sum(perm_side.values())} involutions",
                f"{sum(tab_side.values())} tableaux",
            )
        )
    return report


def verify_transpose_complement(signed_n_max: int = 6, unsigned_n_max: int = 7) -> Report:
    """Transposition sends descent numbers to their complements: n - des_B on
    bitableaux, n - 1 - des on tableaux; both maps are involutive bijections."""
    report = Report()
    for n in range(signed_n_max + 1):
        bad = 0
        seen = set()
        total = 0
        for q in enumerate_all_syb(n):
            total += 1
            t = syb_transpose(q)
            seen.add(t)
            if syb_des_b(t) != n - syb_des_b(q) or syb_transpose(t) != q:
                bad += 1
        ok = bad == 0 and len(seen) == total
        report.add(
            CheckRecord(
                "transpose-signed",
                (("n", n),),
                "pass" if ok else "fail",
                f"{total} bitableaux",
                f"{bad} violations",
            )
        )
    for n in range(unsigned_n_max + 1):
        bad = 0
        total = 0
        for q in enumerate_all_syt(n):
            total += 1
            t = syt_transpose(q)
            des_q = len(syt_descent_set(q))
            if n and (len(syt_descent_set(t)) != n - 1 - des_q or syt_transpose(t) != q):
                bad += 1
        report.add(
            CheckRecord(
                "transpose-unsigned",
                (("n", n),),
                "pass" if bad == 0 else "fail",
                f"{total} tableaux",
                f"{bad} violations",
            )
        )
    return report


def _proof_coefficients(n: int, k: int) -> tuple[tuple[int, int, int], tuple[int, int, int, int]]:
    a = (2 * k + 1, 2 * n - 4 * k + 2, -2 * n + 2 * k - 3)
    d = (
        n + 2 * k * k + 2 * k - 1,
        4 * n * k - 3 * n - 6 * k * k + 2 * k + 3,
        2 * n * n - 8 * n * k + 9 * n + 6 * k * k - 10 * k + 1,
        -2 * n * n + 4 * n * k - 7 * n - 2 * k * k + 6 * k - 3,
    )
    return a, d


def verify_proof_identity(n_max: int = 20) -> Report:
    """The difference decomposition behind the unimodality proof.

    For each n the seven-term identity for n (I(n,k) - I(n,k-1)) is checked
    at every k, and the sign facts the proof feeds to the averaging lemma
    are checked on 0 <= k <= floor(n/2).  The one exception is D0+D1 >= 0,
    which the proof only needs for k >= 1 (it evaluates to 2 - 2n at k = 0,
    where the remaining terms of the identity vanish anyway); that boundary
    value is recorded as a note.
    """
    report = Report()
    rows = [signed_involution_eulerian_recurrence(n).coefficients() for n in range(n_max + 1)]

    def get(row, k):
        return row[k] if 0 <= k < len(row) else 0

    for n in range(3, n_max + 1):
        row, prev, prev2 = rows[n], rows[n - 1], rows[n - 2]
        for k in range(n + 4):
            a, d = _proof_coefficients(n, k)
            lhs = n * (get(row, k) - get(row, k - 1))
            rhs = (
                a[0] * get(prev, k)
                + a[1] * get(prev, k - 1)
                + a[2] * get(prev, k - 2)
                + d[0] * get(prev2, k)
                + d[1] * get(prev2, k - 1)
                + d[2] * get(prev2, k - 2)
                + d[3] * get(prev2, k - 3)
            )
            if lhs != rhs:
                report.add(
                    CheckRecord(
                        "proof-identity",
                        (("n", n), ("k", k)),
                        "fail",
                        str(lhs),
                        str(rhs),
                    )
                )
        # zero-sum identities hold for every k; sign facts on the proof's range
        facts_ok = True
        for k in range(n + 4):
            a, d = _proof_coefficients(n, k)
            if sum(a) != 0 or sum(d) != 0:
                facts_ok = False
        for k in range(n // 2 + 1):
            a, d = _proof_coefficients(n, k)
            if a[0] < 0 or a[0] + a[1] < 0:
                facts_ok = False
            if d[0] < 0 or d[0] + d[1] + d[2] < 0:
                facts_ok = False
            if k >= 1 and d[0] + d[1] < 0:
                facts_ok = False
        report.add(
            CheckRecord(
                "proof-identity",
                (("n", n),),
                "pass" if facts_ok else "fail",
                "identity and sign facts",
                f"k=0..{n + 3}",
            )
        )
    if n_max >= 3:
        report.add(
            CheckRecord(
                "proof-identity",
                (("k", 0),),
                "note",
                "D0+D1 = 2-2n at k=0",
                "averaging lemma unused there; single-term positivity suffices",
            )
        )
    return report


def verify_counterexample_89(convolution_n_max: int = 8, budget: int | None = None) -> Report:
    """The degree-89 non-log-concavity witness, plus the convolution identity
    that backs it at desk scale.

    r(89, .) is computed from the closed form; the two exact products are
    pinned to their published values.  The convolution route multiplies the
    enumerated involution row by the binomial polynomial q and truncates,
    re-deriving r(n, k) for every k <= n <= convolution_n_max.
    """
    report = Report()
    r1, r2, r3 = r_closed(89, 1), r_closed(89, 2), r_closed(89, 3)
    _compare(report, "r89-square", (("k", 2),), r2 * r2, reference.R89_SQUARE_AT_2)
    _compare(report, "r89-product", (("k", "1*3"),), r1 * r3, reference.R89_PRODUCT_1_3)
    report.add(
        CheckRecord(
            "r89-strict-inequality",
            (),
            "pass" if r2 * r2 < r1 * r3 else "fail",
            str(r2 * r2),
            str(r1 * r3),
        )
    )
    sequence = [r_closed(89, k) for k in range(90)]
    failure = first_log_concavity_failure(sequence)
    report.add(
        CheckRecord(
            "r89-not-log-concave",
            (("first_failing_index", failure),),
            "pass" if failure is not None else "fail",
            "log-concavity violated",
            f"index 2 violated: {r2 * r2 < r1 * r3}",
        )
    )
    for n in range(convolution_n_max + 1):
        row = IntPolynomial(signed_involution_eulerian(n, budget=budget).coefficients())
        q_poly = IntPolynomial([binomial(n + k, k) for k in range(n + 1)])
        product = (row * q_poly).truncated(n)
        expected = IntPolynomial([r_closed(n, k) for k in range(n + 1)])
        _compare(
            report,
            "r-convolution",
            (("n", n),),
            int_list(product.coeffs),
            int_list(expected.coeffs),
        )
    return report


def check_guo_zeng_lemma(
    trials: int = 10_000, length_max: int = 8, seed: int = DEFAULT_SEED
) -> Report:
    """Randomized check of the averaging lemma: against any weakly decreasing
    nonnegative weights, a sequence with nonnegative prefix sums has a
    nonnegative weighted sum.

    Instances are built so the hypothesis holds by construction (prefix sums
    drawn nonnegative, then differenced), which keeps every trial productive.
    """
    rng = random.Random(seed)
    failures = 0
    first_failure = None
    for _ in range(trials):
        length = rng.randint(1, length_max)
        prefix = [rng.randint(0, 12) for _ in range(length)]
        a = [prefix[0]] + [prefix[i] - prefix[i - 1] for i in range(1, length)]
        x = sorted((rng.randint(0, 12) for _ in range(length)), reverse=True)
        if sum(ai * xi for ai, xi in zip(a, x)) < 0:
            failures += 1
            if first_failure is None:
                first_failure = (a, x)
    report = Report()
    params = (("trials", trials), ("length_max", length_max), ("seed", seed))
    if failures == 0:
        report.add(
            CheckRecord("guo-zeng-lemma", params, "pass", f"{trials} trials", "0 counterexamples")
        )
    else:
        a, x = first_failure
        report.add(
            CheckRecord(
                "guo-zeng-lemma",
                params,
                "fail",
                f"a={int_list(a)}",
                f"x={int_list(x)}",
            )
        )
    return report


def check_des_statistic_conjecture(n_max: int = 7, budget: int | None = None) -> Report:
    """Compare the two type-B descent statistics over involutions.

    Equality is a hard assertion for n <= 5 (the confirmed range) and an
    open question beyond, so larger n produce note records carrying both
    polynomials whatever the outcome.
    """
    report = Report()
    for n in range(n_max + 1):
        colored = signed_involution_eulerian(n, DES_B, budget=budget).coefficients()
        coxeter = signed_involution_eulerian(n, DES_COXETER, budget=budget).coefficients()
        equal = colored == coxeter
        if n <= 5:
            _compare(
                report,
                "des-statistics-agree",
                (("n", n),),
                int_list(colored),
                int_list(coxeter),
            )
        else:
            report.add(
                CheckRecord(
                    "des-statistics-agree",
                    (("n", n), ("equal", equal)),
                    "note",
                    int_list(colored),
                    int_list(coxeter),
                )
            )
    return report


def gamma_positivity_report(
    n_max: int = 30, unsigned_n_max: int = 10, budget: int | None = None
) -> Report:
    """Gamma vectors of both involution polynomial families.

    The type-B side runs on the recurrence, so it reaches large n cheaply;
    rows n <= 6 must reproduce the published expansions exactly.  The
    symmetric-group side needs enumeration and is capped separately.
    Positivity beyond the published range is conjectural, so sign findings
    are notes, not assertions.
    """
    report = Report()
    for n in range(1, n_max + 1):
        row = signed_involution_eulerian_recurrence(n)
        gv = gamma_vector(row.poly, n)
        if n in reference.GAMMA_ROWS_B:
            _compare(
                report,
                "gamma-signed",
                (("n", n),),
                int_list(gv.gammas),
                int_list(reference.GAMMA_ROWS_B[n]),
            )
        report.add(
            CheckRecord(
                "gamma-signed-signs",
                (("n", n),),
                "note",
                int_list(gv.gammas),
                "all nonnegative" if gv.is_nonnegative else "NEGATIVE ENTRY",
            )
        )
    for n in range(1, min(n_max, unsigned_n_max) + 1):
        row = involution_eulerian(n, budget=budget)
        gv = gamma_vector(row.poly, n - 1)
        report.add(
            CheckRecord(
                "gamma-unsigned-signs",
                (("n", n),),
                "note",
                int_list(gv.gammas),
                "all nonnegative" if gv.is_nonnegative else "NEGATIVE ENTRY",
            )
        )
    return report


def reference_table_report(budget: int | None = None) -> Report:
    """Recompute every published reference row and compare.

    The n = 6 type-B row is handled specially: enumeration decides the
    disputed x^3 coefficient, the published gamma expansion must rebuild the
    enumerated row, and the printed 632 is flagged as a note."""
    report = Report()
    for n, expected in sorted(reference.INVOLUTION_ROWS_A.items()):
        computed = involution_eulerian(n, budget=budget).coefficients()
        _compare(report, "table-a", (("n", n),), int_list(computed), int_list(expected))
    for n, expected in sorted(reference.INVOLUTION_ROWS_B_PRINTED.items()):
        computed = signed_involution_eulerian(n, budget=budget).coefficients()
        if n != 6:
            _compare(report, "table-b", (("n", n),), int_list(computed), int_list(expected))
            continue
        gamma_row = GammaVector(6, reference.GAMMA_ROWS_B[6]).reconstruct().coeffs
        _compare(
            report,
            "table-b-gamma-expansion",
            (("n", n),),
            int_list(computed),
            int_list(gamma_row),
        )
        _compare(report, "table-b-total", (("n", n),), sum(computed), 1384)
        if computed != expected:
            report.add(
                CheckRecord(
                    "table-b-print-discrepancy",
                    (("n", n),),
                    "note",
                    f"printed row {int_list(expected)}",
                    f"enumeration gives {int_list(computed)}",
                )
            )
    for n, expected in sorted(reference.GAMMA_ROWS_B.items()):
        row = signed_involution_eulerian(n, budget=budget)
        gv = gamma_vector(row.poly, n)
        _compare(report, "table-gamma-b", (("n", n),), int_list(gv.gammas), int_list(expected))
    for n in range(1, 13):
        poly = signed_involution_eulerian_recurrence(n).poly
        ok = is_symmetric(poly, n) and is_unimodal(poly)
        report.add(
            CheckRecord(
                "table-shape",
                (("n", n),),
                "pass" if ok else "fail",
                "symmetric and unimodal",
                int_list(poly.coeffs),
            )
        )
    return report
