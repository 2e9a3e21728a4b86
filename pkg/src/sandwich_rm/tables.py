"""Reference [N, K, D] parameters of C_3(t+1, I, 4) for 0 <= t <= 6.

Keyed by I, then by t.  ``TABLE_EVEN`` covers even t, ``TABLE_ODD`` odd t.
"""

from __future__ import annotations

TABLE_EVEN = {
    (1,): {0: (81, 5, 54), 2: (81, 27, 18), 4: (81, 62, 6), 6: (81, 80, 2)},
    (3,): {0: (81, 1, 81), 2: (81, 19, 27), 4: (81, 54, 9), 6: (81, 76, 3)},
    (1, 3): {0: (81, 5, 54), 2: (81, 31, 18), 4: (81, 66, 6), 6: (81, 80, 2)},
}

TABLE_ODD = {
    (0,): {1: (81, 9, 45), 3: (81, 40, 9), 5: (81, 70, 5)},
    (2,): {1: (81, 11, 36), 3: (81, 39, 16), 5: (81, 72, 4)},
    (4,): {1: (81, 5, 54), 3: (81, 33, 18), 5: (81, 66, 6)},
    (0, 2): {1: (81, 15, 27), 3: (81, 48, 9), 5: (81, 76, 3)},
    (0, 4): {1: (81, 9, 45), 3: (81, 42, 9), 5: (81, 70, 5)},
    (2, 4): {1: (81, 11, 36), 3: (81, 41, 16), 5: (81, 72, 4)},
    (0, 2, 4): {1: (81, 15, 27), 3: (81, 50, 9), 5: (81, 76, 3)},
}


def entries(table) -> list[tuple[int, tuple, tuple]]:
    """Flatten to ``(t, I, (N, K, D))`` in row order."""
    return [(t, I, nkd) for I, row in table.items() for t, nkd in row.items()]


def all_entries() -> list[tuple[int, tuple, tuple]]:
    return entries(TABLE_EVEN) + entries(TABLE_ODD)
