"""Word-metric upper bounds from caret and cluster counts.

Both bounds hold up to a universal multiplicative constant; the constant is
estimated empirically by the search oracle, so these functions return the
bare base-2 expressions.
"""

from __future__ import annotations

import math


def birget_upper(n: int) -> float:
    """n * log2(n); the caret-only bound. 0 and 1 carets give 0."""
    if n < 0:
        raise ValueError("caret count must be non-negative")
    if n <= 1:
        return 0.0
    return n * math.log2(n)


def new_upper(n: int, b: int) -> float:
    """n + b * log2(b); the cluster bound. Requires 1 <= b <= n + 1."""
    if n < 0:
        raise ValueError("caret count must be non-negative")
    if not 1 <= b <= n + 1:
        raise ValueError(f"cluster count {b} outside 1..{n + 1}")
    if b == 1:
        return float(n)
    return n + b * math.log2(b)
