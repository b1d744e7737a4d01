import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from ascurve.arith import (
    FpPoly,
    PolyParseError,
    check_prime,
    parse_poly,
    poly_derivative,
    poly_mul,
    poly_pow_table,
)


def P(p, *coeffs):
    return FpPoly.from_coeffs(p, coeffs)


def test_mul_examples():
    assert poly_mul(P(3, 1, 1), P(3, 2, 1)) == P(3, 2, 0, 1)
    assert poly_mul(P(3, 0, 0, 2), P(3, 0, 2)) == P(3, 0, 0, 0, 1)
    assert poly_mul(P(5, 1, 2, 3), FpPoly.zero(5)).is_zero()


def test_mul_modulus_mismatch():
    with pytest.raises(ValueError, match="modulus"):
        poly_mul(P(3, 1), P(5, 1))


def test_canonical_form():
    f = P(3, 4, 0, 3, 6)
    assert f.coeffs == (1,)
    assert f.degree == 0
    assert FpPoly.zero(7).degree == -1


def test_pow_table():
    t = poly_pow_table(P(3, 1, 1), 3)
    assert t[0] == FpPoly.one(3)
    assert t[3] == P(3, 1, 0, 0, 1)
    f = P(7, 3, 0, 5, 1)
    table = poly_pow_table(f, 6)
    for k in range(1, 7):
        assert table[k] == poly_mul(table[k - 1], f)
        assert table[k].degree == k * f.degree


def test_derivative():
    assert poly_derivative(FpPoly.monomial(3, 7)) == FpPoly.monomial(3, 6)
    assert poly_derivative(FpPoly.monomial(3, 3)).is_zero()
    assert poly_derivative(P(5, 4)).is_zero()


def _rand(p, rng, maxdeg=8):
    return FpPoly.from_coeffs(p, rng.integers(0, p, rng.integers(0, maxdeg + 2)).tolist())


@pytest.mark.parametrize("p", [3, 5, 7])
def test_ring_axioms(p, rng):
    for _ in range(1000):
        a, b, c = (_rand(p, rng) for _ in range(3))
        assert poly_mul(poly_mul(a, b), c) == poly_mul(a, poly_mul(b, c))
        assert poly_mul(a, b + c) == poly_mul(a, b) + poly_mul(a, c)
        assert poly_mul(a, b) == poly_mul(b, a)


@pytest.mark.parametrize("p", [3, 5, 7])
def test_freshman_dream(p, rng):
    for _ in range(50):
        a, b = _rand(p, rng), _rand(p, rng)
        assert poly_pow_table(a + b, p)[p] == poly_pow_table(a, p)[p] + poly_pow_table(b, p)[p]


def test_mul_matches_schoolbook(rng):
    # large modulus forces the object-dtype path
    for p in (3, 2**31 - 1):
        for _ in range(50):
            a, b = _rand(p, rng, 20), _rand(p, rng, 20)
            ref = [0] * (len(a.coeffs) + len(b.coeffs))
            for i, x in enumerate(a.coeffs):
                for j, y in enumerate(b.coeffs):
                    ref[i + j] += x * y
            assert poly_mul(a, b) == FpPoly.from_coeffs(p, ref)


@pytest.mark.parametrize(
    "text, coeffs",
    [
        ("x^7", [0] * 7 + [1]),
        ("x^7 + x^5", [0] * 5 + [1, 0, 1]),
        ("-x^8-x^4", [0, 0, 0, 0, 2, 0, 0, 0, 2]),
        ("−x^8 − x^4", [0, 0, 0, 0, 2, 0, 0, 0, 2]),
        ("2*x^2 + 5*x + 7", [1, 2, 2]),
        ("x", [0, 1]),
        ("3x^2", [0, 0, 0]),
        ("x**2 + 1", [1, 0, 1]),
        ("[1, -1, 4]", [1, 2, 1]),
        ("x^2 + x^2", [0, 0, 2]),
    ],
)
def test_parse(text, coeffs):
    assert parse_poly(3, text) == FpPoly.from_coeffs(3, coeffs)


@pytest.mark.parametrize("bad", ["", "x^", "1/x", "x^2 +", "y^2", "x^-1", "2 3", "[1, a]"])
def test_parse_rejects(bad):
    with pytest.raises(PolyParseError):
        parse_poly(5, bad)


@settings(max_examples=200, deadline=None)
@given(st.sampled_from([3, 5, 7, 11]), st.lists(st.integers(-50, 50), max_size=12))
def test_text_roundtrip(p, coeffs):
    f = FpPoly.from_coeffs(p, coeffs)
    assert parse_poly(p, f.to_text()) == f
    assert parse_poly(p, list(f.coeffs)) == f


@pytest.mark.parametrize("p", [1, 2, 4, 9, 2**31])
def test_check_prime_rejects(p):
    with pytest.raises(ValueError):
        check_prime(p)


def test_compose_scale():
    f = P(5, 1, 1, 1)
    assert f.compose_scale(2) == P(5, 1, 2, 4)
    x = np.arange(5)
    assert [sum(c * (2 * v) ** e for e, c in enumerate(f.coeffs)) % 5 for v in x] == [
        sum(c * v**e for e, c in enumerate(f.compose_scale(2).coeffs)) % 5 for v in x
    ]
