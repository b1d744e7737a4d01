"""Ordered basis ``y^i x^j dx`` of the regular differentials, and the genus."""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd
from typing import NamedTuple

__all__ = ["BasisIndex", "OrderedBasis", "basis_enumerate", "genus", "max_x_exponent"]


class BasisIndex(NamedTuple):
    """``y^i x^j dx``; tuple comparison is the lex order with y > x."""

    i: int
    j: int


def _check(p: int, d: int) -> None:
    if d < 1:
        raise ValueError(f"break d={d} must be positive")
    if gcd(d, p) != 1:
        raise ValueError(f"break d={d} is divisible by p={p}")


def genus(p: int, d: int) -> int:
    _check(p, d)
    return (p - 1) * (d - 1) // 2


def max_x_exponent(p: int, d: int, i: int) -> int:
    """Largest j with ``y^i x^j dx`` regular: ``ceil((p-i-1) d / p) - 2``.

    Negative when the row is empty.
    """
    return -((-(p - i - 1) * d) // p) - 2


@dataclass(frozen=True)
class OrderedBasis:
    p: int
    d: int
    elements: tuple[BasisIndex, ...]
    _pos: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "_pos", {b: k for k, b in enumerate(self.elements)})

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __getitem__(self, k: int) -> BasisIndex:
        return self.elements[k]

    def position(self, i: int, j: int) -> int:
        return self._pos[(i, j)]

    def __contains__(self, b) -> bool:
        return tuple(b) in self._pos

    def row_offsets(self) -> list[int]:
        """Position of ``(i, 0)`` for each i (rows are contiguous in the order)."""
        offs, k = [], 0
        for i in range(self.p - 1):
            offs.append(k)
            k += max(max_x_exponent(self.p, self.d, i) + 1, 0)
        return offs


def basis_enumerate(p: int, d: int) -> OrderedBasis:
    _check(p, d)
    elems = tuple(
        BasisIndex(i, j)
        for i in range(p - 1)
        for j in range(max_x_exponent(p, d, i) + 1)
    )
    return OrderedBasis(p, d, elems)
