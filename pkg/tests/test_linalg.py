import itertools

import numpy as np
import pytest

from ascurve import linalg
from ascurve.cartier import cartier_matrix
from ascurve.curve import curve_new


def span_rank(a, p):
    """log_p of the number of distinct row combinations."""
    rows = [tuple(r) for r in np.asarray(a) % p]
    seen = set()
    for coefs in itertools.product(range(p), repeat=len(rows)):
        v = tuple(sum(c * r[k] for c, r in zip(coefs, rows)) % p for k in range(len(rows[0])))
        seen.add(v)
    r = 0
    while p**r < len(seen):
        r += 1
    assert p**r == len(seen)
    return r


def low_rank(rng, p, rows, cols, k):
    return (rng.integers(0, p, (rows, k)) @ rng.integers(0, p, (k, cols))) % p


def test_examples(backend):
    assert linalg.rank(np.eye(3, dtype=int), 3, backend) == 3
    assert linalg.rank(np.zeros((4, 5), dtype=int), 5, backend) == 0
    assert linalg.rank(np.zeros((0, 0), dtype=int), 5, backend) == 0
    m = cartier_matrix(curve_new(3, "x^7")).entries
    assert linalg.rank(m, 3, backend) == 2
    assert linalg.kernel_dim(m, 3, backend) == 4


def test_rank_against_span_enumeration(backend, rng):
    for _ in range(100):
        p = int(rng.choice([3, 5]))
        r, c = rng.integers(1, 4), rng.integers(1, 5)
        a = low_rank(rng, p, r, c, int(rng.integers(1, 4)))
        assert linalg.rank(a, p, backend) == span_rank(a, p)


@pytest.mark.parametrize("p", [3, 5, 7, 11])
def test_row_vs_column_elimination(p, backend, rng):
    for _ in range(200):
        r, c = rng.integers(1, 25, 2)
        a = low_rank(rng, p, r, c, int(rng.integers(1, 25)))
        ra = linalg.rank(a, p, backend)
        assert ra == linalg.rank(a.T, p, backend)
        assert ra <= min(r, c)


def test_backends_agree(rng):
    for _ in range(50):
        p = int(rng.choice([3, 13, 2**31 - 1]))
        a = low_rank(rng, p, 40, 30, int(rng.integers(1, 40)))
        ranks = {linalg.rank(a, p, b) for b in linalg.available_backends()}
        assert len(ranks) == 1


def test_product_rank(backend, rng):
    for _ in range(100):
        p = int(rng.choice([3, 5, 7]))
        a = low_rank(rng, p, 12, 10, int(rng.integers(1, 10)))
        b = low_rank(rng, p, 10, 14, int(rng.integers(1, 10)))
        ab = linalg.matmul_mod(a, b, p)
        assert np.array_equal(ab, a @ b % p)
        assert linalg.rank(ab, p, backend) <= min(linalg.rank(a, p, backend), linalg.rank(b, p, backend))


def test_matmul_large_modulus(rng):
    p = 2**31 - 1
    a, b = rng.integers(0, p, (5, 7)), rng.integers(0, p, (7, 3))
    ref = (a.astype(object) @ b.astype(object)) % p
    assert linalg.matmul_mod(a, b, p).tolist() == ref.tolist()


def test_p_rank_examples(backend):
    m = cartier_matrix(curve_new(3, "x^7")).entries
    assert linalg.p_rank_via_power(m, 6, 3, backend) == 0
    assert linalg.p_rank_via_power(np.eye(3, dtype=int), 3, 5, backend) == 3
    assert linalg.p_rank_via_power(np.triu(np.ones((4, 4), dtype=int), 1), 4, 5, backend) == 0
    with pytest.raises(ValueError):
        linalg.p_rank_via_power(np.ones((2, 3), dtype=int), 2, 3)


def test_p_rank_matches_repeated_squaring(backend, rng):
    for _ in range(60):
        p = int(rng.choice([3, 5, 7]))
        n = int(rng.integers(1, 15))
        a = rng.integers(0, p, (n, n))
        if rng.random() < 0.5:
            # nilpotent: conjugate of a strictly upper triangular matrix
            u = np.triu(rng.integers(0, p, (n, n)), 1)
            s = np.eye(n, dtype=np.int64) + np.tril(rng.integers(0, p, (n, n)), -1)
            s_inv = _inv_unit_lower(s, p)
            a = linalg.matmul_mod(linalg.matmul_mod(s, u, p), s_inv, p)
        want = linalg.rank(linalg.matpow_mod(a, n, p), p, backend)
        assert linalg.p_rank_via_power(a, n, p, backend) == want
        idx = linalg.nilpotency_index(a, p, backend)
        nilpotent = not linalg.matpow_mod(a, n, p).any()
        assert (want == 0) == nilpotent == (idx is not None)
        if idx is not None:
            assert not linalg.matpow_mod(a, idx, p).any()
            assert idx == 0 or linalg.matpow_mod(a, idx - 1, p).any()


def _inv_unit_lower(s, p):
    n = len(s)
    inv = np.eye(n, dtype=np.int64)
    for i in range(n):
        for j in range(i):
            inv[i] = (inv[i] - s[i, j] * inv[j]) % p
    assert np.array_equal(linalg.matmul_mod(s, inv, p), np.eye(n, dtype=np.int64))
    return inv


def test_image_dimensions_monotone(rng):
    m = cartier_matrix(curve_new(5, "x^23 + 3*x^7 + x")).entries
    dims = linalg.image_dimensions(m, 5)
    assert dims[0] == len(m) and dims[-1] == 0
    assert all(a > b for a, b in zip(dims, dims[1:]))
