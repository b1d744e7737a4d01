"""Lower and upper bounds for the a-number of a Z/p cover of the line.

Every floor is taken of an exact rational written over a common
denominator; no floating point is involved.
"""

from __future__ import annotations

from typing import Iterable

__all__ = ["lower_bound_multi", "lower_bound_single", "lower_bound_terms", "upper_bound", "upper_bound_multi"]


def _term(p: int, d: int, i: int, j: int) -> int:
    # floor(i d / p) - floor(i d / p - (1 - 1/p) j d / p)
    #   = floor(i d / p) - floor((p i d - (p - 1) j d) / p^2)
    return (i * d) // p - (p * i * d - (p - 1) * j * d) // (p * p)


def lower_bound_terms(p: int, D: Iterable[int]) -> list[int]:
    """Value of the bound's inner double sum for each ``j = 1 .. p-1``."""
    D = list(D)
    return [
        sum(_term(p, d, i, j) for d in D for i in range(j, p))
        for j in range(1, p)
    ]


def lower_bound_multi(p: int, D: Iterable[int]) -> int:
    D = list(D)
    if not D:
        return 0
    if any(d < 1 for d in D):
        raise ValueError("ramification breaks must be positive")
    return max(lower_bound_terms(p, D))


def lower_bound_single(p: int, d: int) -> int:
    """L(d) for a single branch point: the j = (p+1)/2 term of the general bound."""
    if d < 1:
        raise ValueError("ramification break must be positive")
    j = (p + 1) // 2
    return sum(_term(p, d, i, j) for i in range(j, p))


def upper_bound(p: int, d: int, a_base: int = 0) -> int:
    """``p a_base + sum_i (floor(i d / p) - (p - i) floor(i d / p^2))``."""
    return p * a_base + sum(
        (i * d) // p - (p - i) * ((i * d) // (p * p)) for i in range(1, p)
    )


def upper_bound_multi(p: int, D: Iterable[int], a_base: int = 0) -> int:
    """Upper bound summed over every branch point in ``D``."""
    return p * a_base + sum(upper_bound(p, d, 0) for d in D)
