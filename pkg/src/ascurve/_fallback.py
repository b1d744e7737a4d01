"""numpy implementation of the elimination kernel, used when the compiled
extension is unavailable or ``ASCURVE_PURE_PYTHON`` is set."""

from __future__ import annotations

import numpy as np


def echelon_inplace(a: np.ndarray, p: int) -> int:
    """Row-reduce ``a`` in place; return the rank.  Same contract as the
    compiled kernel: the first ``rank`` rows span the row space."""
    rows, cols = a.shape
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(a[r:, c])
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            a[[r, piv], c:] = a[[piv, r], c:]
        inv = pow(int(a[r, c]), -1, p)
        a[r, c:] = a[r, c:] * inv % p
        below = r + 1 + np.flatnonzero(a[r + 1 :, c])
        if below.size:
            f = (p - a[below, c])[:, None]
            a[below, c:] = (a[below, c:] + f * a[r, c:]) % p
        r += 1
    return r
