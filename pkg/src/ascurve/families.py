"""Explicit curves whose a-number is expected to meet the lower bound.

``bc-minus``   y^p - y = -x^(p^2-1) - x^((p^2-1)/2)
``bc-plus``    y^p - y = -x^(p^2+1) - x^((p^2+1)/2 + p)
``farnell``    any f of degree p - 1
``experiment`` y^p - y = -x^(n p^2 - 1) - x^((n p^2 + (n-1) p - 1)/2), n >= 1
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .arith import FpPoly, check_prime
from .curve import Curve, curve_new
from .report import InvariantReport, invariants
from .search import random_poly

__all__ = ["FAMILIES", "FamilyError", "FamilyId", "family_poly", "family_verify"]

FAMILIES = ("bc-minus", "bc-plus", "farnell", "experiment")


class FamilyError(ValueError):
    pass


@dataclass(frozen=True)
class FamilyId:
    name: str
    p: int
    n: int | None = None
    deg: int | None = None

    def __post_init__(self):
        if self.name not in FAMILIES:
            raise FamilyError(f"unknown family {self.name!r}; choose from {', '.join(FAMILIES)}")
        try:
            check_prime(self.p)
        except ValueError as exc:
            raise FamilyError(str(exc)) from None
        if self.name == "experiment":
            if self.n is None or self.n < 1:
                raise FamilyError("experiment family needs n >= 1")
        elif self.n is not None:
            raise FamilyError(f"family {self.name} takes no n")
        if self.deg is not None and self.deg != self.degree():
            raise FamilyError(f"family {self.name} at p={self.p} has degree {self.degree()}, not {self.deg}")

    def degree(self) -> int:
        p = self.p
        return {
            "bc-minus": p * p - 1,
            "bc-plus": p * p + 1,
            "farnell": p - 1,
            "experiment": (self.n or 0) * p * p - 1,
        }[self.name]


def _binomial_family(p: int, d: int, e: int) -> Curve:
    return curve_new(p, FpPoly.from_terms(p, {d: -1, e: -1}), normalize=False)


def family_poly(fid: FamilyId, poly: FpPoly | None = None, seed: int | None = None) -> Curve:
    """Defining curve of a family member.

    ``farnell`` uses ``poly`` when given (it must have degree p - 1) and
    otherwise draws a random one from ``seed``.
    """
    p = fid.p
    if fid.name == "bc-minus":
        d = p * p - 1
        return _binomial_family(p, d, d // 2)
    if fid.name == "bc-plus":
        d = p * p + 1
        return _binomial_family(p, d, d // 2 + p)
    if fid.name == "experiment":
        n = fid.n
        num = n * p * p + (n - 1) * p - 1
        assert num % 2 == 0, "odd p makes the second exponent integral"
        return _binomial_family(p, n * p * p - 1, num // 2)
    # farnell
    if poly is None:
        poly = random_poly(p, p - 1, np.random.default_rng(seed))
    elif poly.degree != p - 1:
        raise FamilyError(f"farnell family needs degree {p - 1}, got {poly.degree}")
    return curve_new(p, poly, normalize=False)


def family_verify(
    fid: FamilyId,
    poly: FpPoly | None = None,
    seed: int | None = None,
    backend: str | None = None,
) -> InvariantReport:
    return invariants(family_poly(fid, poly=poly, seed=seed), backend=backend)
