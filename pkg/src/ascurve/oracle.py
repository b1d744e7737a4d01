"""Brute-force Cartier matrix for cross-checking.

Shares nothing with :mod:`ascurve.cartier` beyond the basis bounds.  A
differential is held as ``{y_exponent: {x_exponent: coeff}}``; single y
factors are traded for ``y^p - f`` one at a time until every y exponent is
a multiple of p, and the Cartier rule is then applied monomial by monomial.
"""

from __future__ import annotations

from .curve import Curve
from .holo import basis_enumerate

__all__ = ["cartier_matrix_bruteforce", "expand_differential"]


def _add_into(dst: dict, src: dict, scale: int, shift: int, p: int) -> None:
    for e, c in src.items():
        k = e + shift
        v = (dst.get(k, 0) + scale * c) % p
        if v:
            dst[k] = v
        else:
            dst.pop(k, None)


def _mul_sparse(a: dict, b: dict, p: int) -> dict:
    out: dict = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            k = ea + eb
            out[k] = (out.get(k, 0) + ca * cb) % p
    return {k: v for k, v in out.items() if v}


def expand_differential(c: Curve, m: int, n: int) -> dict:
    """Rewrite ``y^m x^n dx`` so only y exponents divisible by p remain."""
    p = c.p
    f = {e: v for e, v in enumerate(c.f.coeffs) if v}
    pending = {m: {n: 1}}
    done: dict = {}
    while pending:
        e = max(pending)
        h = pending.pop(e)
        if not h:
            continue
        if e % p == 0:
            acc = done.setdefault(e, {})
            _add_into(acc, h, 1, 0, p)
            continue
        # y^e h = y^(e-1+p) h - y^(e-1) f h
        _add_into(pending.setdefault(e - 1 + p, {}), h, 1, 0, p)
        _add_into(pending.setdefault(e - 1, {}), _mul_sparse(h, f, p), -1, 0, p)
    return {e: h for e, h in done.items() if h}


def cartier_matrix_bruteforce(c: Curve) -> list[list[int]]:
    p = c.p
    basis = basis_enumerate(p, c.d)
    g = len(basis)
    pos = {tuple(b): k for k, b in enumerate(basis)}
    mat = [[0] * g for _ in range(g)]
    for col, (m, n) in enumerate(basis):
        for ye, h in expand_differential(c, m, n).items():
            for xe, coeff in h.items():
                if (xe + 1) % p:
                    continue
                key = (ye // p, (xe + 1) // p - 1)
                if key not in pos:
                    raise AssertionError(f"y^{key[0]} x^{key[1]} dx is not a basis element")
                row = pos[key]
                mat[row][col] = (mat[row][col] + coeff) % p
    return mat
