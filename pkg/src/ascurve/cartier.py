"""Cartier operator on the regular differentials of ``y^p - y = f``.

Matrix convention: ``M[r, c]`` is the coefficient of ``basis[r]`` in
``C(basis[c])``.  Rows and columns both follow the lex order with y > x.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

import numpy as np

from .arith import FpPoly, poly_pow_table
from .curve import Curve
from .holo import BasisIndex, OrderedBasis, basis_enumerate, max_x_exponent

__all__ = [
    "CartierMatrix",
    "InternalRangeError",
    "PolyDifferential",
    "cartier_classical",
    "cartier_matrix",
    "cartier_of_basis_elem",
]


class InternalRangeError(RuntimeError):
    """A Cartier image left the span of the basis, which holomorphy forbids."""


@dataclass(frozen=True)
class PolyDifferential:
    """``h(x) dx``."""

    h: FpPoly


def cartier_classical(w: PolyDifferential, p: int) -> PolyDifferential:
    """``C(x^s dx) = x^((s+1)/p - 1) dx`` if ``s = -1 mod p``, else 0.

    Coefficients are their own p-th roots in F_p.
    """
    h = w.h
    if h.p != p:
        raise ValueError("modulus mismatch")
    return PolyDifferential(FpPoly(p, h.coeffs[p - 1 :: p]))


@dataclass(frozen=True)
class CartierMatrix:
    p: int
    d: int
    basis: OrderedBasis
    entries: np.ndarray

    @property
    def g(self) -> int:
        return len(self.basis)

    def to_rows(self) -> list[list[int]]:
        return self.entries.tolist()


class _Assembler:
    """Shared per-curve state: powers ``f^0..f^(p-2)`` and row offsets."""

    def __init__(self, c: Curve):
        self.p, self.d = c.p, c.d
        self.basis = basis_enumerate(c.p, c.d)
        self.offsets = self.basis.row_offsets()
        self.row_max = [max_x_exponent(c.p, c.d, i) for i in range(c.p - 1)]
        # powers of -f, so y^m = sum_i binom(m, i) y^(p i) (-f)^(m-i)
        neg_f = -c.f
        self.powers = [q.to_array() for q in poly_pow_table(neg_f, c.p - 2)]
        self.binom = [
            [comb(m, i) % c.p for i in range(m + 1)] for m in range(c.p - 1)
        ]

    def column(self, m: int, n: int, out: np.ndarray) -> None:
        """Accumulate the coordinates of ``C(y^m x^n dx)`` into ``out``."""
        p = self.p
        for i in range(m + 1):
            b = self.binom[m][i]
            if not b:
                continue
            h = self.powers[m - i]
            start = (p - 1 - n) % p
            vals = h[start::p]
            nz = np.flatnonzero(vals)
            if nz.size == 0:
                continue
            vals = vals[: nz[-1] + 1]
            t0 = (start + n - (p - 1)) // p
            t_hi = t0 + len(vals) - 1
            if t_hi > self.row_max[i]:
                raise InternalRangeError(
                    f"C(y^{m} x^{n} dx) has term y^{i} x^{t_hi} dx outside the basis"
                )
            r0 = self.offsets[i] + t0
            seg = out[r0 : r0 + len(vals)]
            seg += b * vals
            seg %= p


def cartier_of_basis_elem(c: Curve, b: BasisIndex, _asm: _Assembler | None = None) -> np.ndarray:
    asm = _asm or _Assembler(c)
    if tuple(b) not in asm.basis:
        raise ValueError(f"{tuple(b)} is not a basis index for p={c.p}, d={c.d}")
    out = np.zeros(len(asm.basis), dtype=np.int64)
    asm.column(b[0], b[1], out)
    return out


def cartier_matrix(c: Curve) -> CartierMatrix:
    asm = _Assembler(c)
    g = len(asm.basis)
    entries = np.zeros((g, g), dtype=np.int64)
    col = np.zeros(g, dtype=np.int64)
    for k, (m, n) in enumerate(asm.basis):
        col[:] = 0
        asm.column(m, n, col)
        entries[:, k] = col
    return CartierMatrix(c.p, c.d, asm.basis, entries)
