"""Exact linear algebra over F_p on int64 numpy arrays.

Elimination runs through the compiled kernel when it is importable, and
through the numpy fallback otherwise.  Set ``ASCURVE_PURE_PYTHON=1`` to force
the fallback.
"""

from __future__ import annotations

import os

import numpy as np

from . import _fallback

try:
    if os.environ.get("ASCURVE_PURE_PYTHON"):
        raise ImportError("compiled kernel disabled by ASCURVE_PURE_PYTHON")
    from . import _kernels
except ImportError:
    _kernels = None

BACKEND = "compiled" if _kernels is not None else "python"

__all__ = [
    "BACKEND",
    "available_backends",
    "image_dimensions",
    "kernel_dim",
    "matmul_mod",
    "matpow_mod",
    "nilpotency_index",
    "p_rank_via_power",
    "rank",
    "row_basis",
]


def available_backends() -> list[str]:
    return ["compiled", "python"] if _kernels is not None else ["python"]


def _echelon_fn(backend: str | None):
    backend = backend or BACKEND
    if backend == "compiled":
        if _kernels is None:
            raise RuntimeError("compiled kernel is not available")
        return _kernels.echelon_inplace
    if backend == "python":
        return _fallback.echelon_inplace
    raise ValueError(f"unknown backend {backend!r}")


def _as_fp(m, p: int) -> np.ndarray:
    a = np.array(m, dtype=np.int64, order="C", copy=True)
    if a.ndim != 2:
        a = a.reshape(len(a), -1)
    a %= p
    return a


def rank(m, p: int, backend: str | None = None) -> int:
    a = _as_fp(m, p)
    if a.size == 0:
        return 0
    return int(_echelon_fn(backend)(a, p))


def row_basis(m, p: int, backend: str | None = None) -> np.ndarray:
    """Echelon rows spanning the row space of ``m``."""
    a = _as_fp(m, p)
    if a.size == 0:
        return a[:0]
    r = int(_echelon_fn(backend)(a, p))
    return a[:r]


def kernel_dim(m, p: int, backend: str | None = None) -> int:
    a = np.asarray(m)
    return a.shape[1] - rank(a, p, backend)


# float64 products are exact while every dot-product sum stays below 2**53
_EXACT = 2**53


class _Operand:
    """Right-hand factor reused across many products, converted once."""

    def __init__(self, b: np.ndarray, p: int):
        self.p = p
        self.b = np.asarray(b, dtype=np.int64) % p
        self.chunk = (_EXACT - 1) // max((p - 1) ** 2, 1)
        self.bf = self.b.astype(np.float64) if self.chunk >= 1 else None

    def left_mul(self, a: np.ndarray) -> np.ndarray:
        p = self.p
        a = np.asarray(a, dtype=np.int64) % p
        if self.bf is None:
            prod = a.astype(object).dot(self.b.astype(object)) % p
            return prod.astype(np.int64)
        af = a.astype(np.float64)
        inner = a.shape[1]
        if inner <= self.chunk:
            return np.rint(af @ self.bf).astype(np.int64) % p
        out = np.zeros((a.shape[0], self.b.shape[1]), dtype=np.int64)
        for k in range(0, inner, self.chunk):
            part = af[:, k : k + self.chunk] @ self.bf[k : k + self.chunk, :]
            out = (out + np.rint(part).astype(np.int64)) % p
        return out


def matmul_mod(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    return _Operand(b, p).left_mul(a)


def matpow_mod(m: np.ndarray, e: int, p: int) -> np.ndarray:
    n = m.shape[0]
    result = np.eye(n, dtype=np.int64)
    base = np.asarray(m, dtype=np.int64) % p
    while e:
        if e & 1:
            result = matmul_mod(result, base, p)
        e >>= 1
        if e:
            base = matmul_mod(base, base, p)
    return result


def _square(m) -> np.ndarray:
    a = np.asarray(m, dtype=np.int64)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    return a


def p_rank_via_power(m, g: int, p: int, backend: str | None = None) -> int:
    """Rank of ``m^g``, via the iterated image with early stopping.

    Image dimensions are non-increasing; once two successive images have the
    same dimension they are equal and every later power has the same rank.
    """
    a = _square(m)
    if a.shape[0] != g:
        raise ValueError(f"matrix is {a.shape[0]}x{a.shape[0]}, expected g={g}")
    dims = image_dimensions(a, p, max_power=g, backend=backend)
    return dims[-1] if g > 0 else 0


def image_dimensions(m, p: int, max_power: int | None = None, backend: str | None = None) -> list[int]:
    """``[rank m^0, rank m^1, ...]`` up to stabilization or ``max_power``."""
    a = _square(m) % p
    n = a.shape[0]
    max_power = n if max_power is None else max_power
    dims = [n]
    if max_power == 0 or n == 0:
        return dims
    # rows of ``basis`` span the row space of m^k; the row space of m^(k+1)
    # is spanned by basis @ m
    op = _Operand(a, p)
    basis = row_basis(a, p, backend)
    dims.append(basis.shape[0])
    while len(dims) <= max_power and 0 < dims[-1] < dims[-2]:
        basis = row_basis(op.left_mul(basis), p, backend)
        dims.append(basis.shape[0])
    return dims


def nilpotency_index(m, p: int, backend: str | None = None) -> int | None:
    """Smallest k with ``m^k = 0``, or None if ``m`` is not nilpotent."""
    dims = image_dimensions(m, p, backend=backend)
    if dims[-1] != 0:
        return None
    return len(dims) - 1
