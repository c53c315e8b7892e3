"""Reference coefficient data for desk-scale cross-checks.

These are the published small-n rows this library re-derives from scratch.
The n = 6 type-B row is stored exactly as printed even though its x^3 entry
(632) is known to disagree with direct enumeration (634); the table report
recomputes the truth and flags the difference instead of silently preferring
either number.
"""
from __future__ import annotations

# Descent distribution over involutions of S_n.
INVOLUTION_ROWS_A: dict[int, tuple[int, ...]] = {
    1: (1,),
    2: (1, 1),
    3: (1, 2, 1),
    4: (1, 4, 4, 1),
    5: (1, 6, 12, 6, 1),
    6: (1, 9, 28, 28, 9, 1),
}

# Type-B descent distribution over involutions of B_n, as printed.
INVOLUTION_ROWS_B_PRINTED: dict[int, tuple[int, ...]] = {
    1: (1, 1),
    2: (1, 4, 1),
    3: (1, 9, 9, 1),
    4: (1, 17, 40, 17, 1),
    5: (1, 28, 127, 127, 28, 1),
    6: (1, 43, 331, 632, 331, 43, 1),  # x^3 entry disputed; enumeration gives 634
}

# Gamma expansions of the type-B involution rows.
GAMMA_ROWS_B: dict[int, tuple[int, ...]] = {
    1: (1,),
    2: (1, 2),
    3: (1, 6),
    4: (1, 13, 8),
    5: (1, 23, 48),
    6: (1, 37, 168, 56),
}

# The exact products exhibiting non-log-concavity of r(89, .) at index 2.
R89_SQUARE_AT_2 = 113789153706560010000
R89_PRODUCT_1_3 = 114890217312335629500
