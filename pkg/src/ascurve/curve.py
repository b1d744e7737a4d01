"""Artin-Schreier covers ``y^p - y = f(x)`` branched only at infinity."""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .arith import FpPoly, check_prime, parse_poly

__all__ = [
    "BreakChanged",
    "ConstantRHS",
    "Curve",
    "CurveError",
    "DegreeDivisibleByP",
    "as_equivalent",
    "curve_new",
    "normalize_poly",
    "ramification_break",
]


class CurveError(ValueError):
    pass


class ConstantRHS(CurveError):
    """f is constant, so the cover is reducible."""


class DegreeDivisibleByP(CurveError):
    """deg f is divisible by p; the break at infinity is undefined."""


class BreakChanged(CurveError):
    """An Artin-Schreier substitution would change the pole order of f."""


@dataclass(frozen=True)
class Curve:
    p: int
    f: FpPoly

    @property
    def d(self) -> int:
        return self.f.degree

    def __str__(self) -> str:
        return f"y^{self.p} - y = {self.f}"


def normalize_poly(f: FpPoly) -> FpPoly:
    """Strip monomials ``c*x^(p*m)``, m >= 1, via ``f - (c x^m)^p + c x^m``.

    Works from the top degree down so one pass suffices; each replacement
    lands on a strictly smaller exponent.
    """
    p = f.p
    coeffs = list(f.coeffs)
    for e in range(len(coeffs) - 1, 0, -1):
        c = coeffs[e]
        if c and e % p == 0:
            coeffs[e] = 0
            coeffs[e // p] = (coeffs[e // p] + c) % p
    return FpPoly(p, tuple(coeffs))


def curve_new(p: int, f: FpPoly | str, normalize: bool = True) -> Curve:
    p = check_prime(p)
    if not isinstance(f, FpPoly):
        f = parse_poly(p, f)
    elif f.p != p:
        raise ValueError(f"polynomial over F_{f.p} given for p={p}")
    if f.is_constant():
        raise ConstantRHS(f"f = {f} is constant")
    if normalize:
        f = normalize_poly(f)
    if f.degree % p == 0:
        raise DegreeDivisibleByP(f"deg f = {f.degree} is divisible by p = {p}")
    return Curve(p, f)


def ramification_break(c: Curve) -> int:
    d = c.f.degree
    assert gcd(d, c.p) == 1
    return d


def as_equivalent(c: Curve, g: FpPoly) -> Curve:
    """The isomorphic cover obtained from ``y -> y + g``: ``f + g^p - g``."""
    if g.p != c.p:
        raise ValueError("modulus mismatch")
    if not g.is_zero() and c.p * g.degree >= c.d:
        raise BreakChanged(f"deg(g^p) = {c.p * g.degree} >= d = {c.d}")
    return Curve(c.p, c.f + g.pow(c.p) - g)
