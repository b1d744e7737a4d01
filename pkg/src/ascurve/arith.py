"""Prime-field residues and dense polynomials over F_p.

Coefficients are stored low degree first, as plain Python ints in ``[0, p)``.
Every coefficient lives in the prime field, so the Frobenius map fixes it and
taking p-th roots of coefficients is the identity.  The Cartier code relies
on this.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

__all__ = [
    "FpPoly",
    "PolyParseError",
    "check_prime",
    "is_prime",
    "parse_poly",
    "poly_derivative",
    "poly_mul",
    "poly_pow_table",
]

MAX_PRIME = 2**31 - 1


class PolyParseError(ValueError):
    pass


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    i = 3
    while i * i <= n:
        if n % i == 0:
            return False
        i += 2
    return True


def check_prime(p: int) -> int:
    """Validate an odd prime modulus and return it as an int."""
    p = int(p)
    if not 3 <= p <= MAX_PRIME:
        raise ValueError(f"modulus {p} outside [3, 2^31 - 1]")
    if not is_prime(p):
        raise ValueError(f"modulus {p} is not prime")
    return p


def _trim(coeffs: Iterable[int], p: int) -> tuple[int, ...]:
    out = [int(c) % p for c in coeffs]
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


@dataclass(frozen=True)
class FpPoly:
    """Polynomial over F_p in canonical dense form.

    ``coeffs[k]`` is the coefficient of ``x^k``; the zero polynomial has
    empty ``coeffs``.
    """

    p: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _trim(self.coeffs, self.p))

    @classmethod
    def from_coeffs(cls, p: int, coeffs: Iterable[int]) -> "FpPoly":
        return cls(p, tuple(int(c) for c in coeffs))

    @classmethod
    def from_terms(cls, p: int, terms: dict[int, int]) -> "FpPoly":
        """Build from a sparse ``{exponent: coefficient}`` mapping."""
        if not terms:
            return cls(p, ())
        if min(terms) < 0:
            raise ValueError("negative exponent")
        dense = [0] * (max(terms) + 1)
        for e, c in terms.items():
            dense[e] = (dense[e] + c) % p
        return cls(p, tuple(dense))

    @classmethod
    def monomial(cls, p: int, e: int, c: int = 1) -> "FpPoly":
        return cls.from_terms(p, {e: c})

    @classmethod
    def zero(cls, p: int) -> "FpPoly":
        return cls(p, ())

    @classmethod
    def one(cls, p: int) -> "FpPoly":
        return cls(p, (1,))

    @property
    def degree(self) -> int:
        """Degree, or -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def __getitem__(self, e: int) -> int:
        return self.coeffs[e] if 0 <= e < len(self.coeffs) else 0

    def terms(self) -> dict[int, int]:
        return {e: c for e, c in enumerate(self.coeffs) if c}

    def _check(self, other: "FpPoly"):
        if not isinstance(other, FpPoly):
            return NotImplemented
        if other.p != self.p:
            raise ValueError(f"modulus mismatch: {self.p} vs {other.p}")
        return None

    def __add__(self, other: "FpPoly") -> "FpPoly":
        bad = self._check(other)
        if bad is not None:
            return bad
        n = max(len(self.coeffs), len(other.coeffs))
        return FpPoly(self.p, tuple(self[k] + other[k] for k in range(n)))

    def __neg__(self) -> "FpPoly":
        return FpPoly(self.p, tuple(-c for c in self.coeffs))

    def __sub__(self, other: "FpPoly") -> "FpPoly":
        bad = self._check(other)
        if bad is not None:
            return bad
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        return poly_mul(self, other)

    __rmul__ = __mul__

    def scale(self, c: int) -> "FpPoly":
        return FpPoly(self.p, tuple(c * a for a in self.coeffs))

    def shift(self, k: int) -> "FpPoly":
        """Multiply by ``x^k``."""
        if self.is_zero():
            return self
        return FpPoly(self.p, (0,) * k + self.coeffs)

    def pow(self, k: int) -> "FpPoly":
        if k < 0:
            raise ValueError("negative power")
        result = FpPoly.one(self.p)
        base = self
        while k:
            if k & 1:
                result = poly_mul(result, base)
            k >>= 1
            if k:
                base = poly_mul(base, base)
        return result

    def compose_scale(self, c: int) -> "FpPoly":
        """Return ``f(c*x)``."""
        out, ck = [], 1
        for a in self.coeffs:
            out.append(a * ck)
            ck = ck * c % self.p
        return FpPoly(self.p, tuple(out))

    def to_array(self) -> np.ndarray:
        return np.array(self.coeffs, dtype=np.int64 if self.p < 2**31 else object)

    def to_text(self) -> str:
        """Canonical text, highest degree first, e.g. ``2*x^8 + x^4 + 1``."""
        if not self.coeffs:
            return "0"
        parts = []
        for e in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[e]
            if not c:
                continue
            if e == 0:
                parts.append(str(c))
            else:
                mono = "x" if e == 1 else f"x^{e}"
                parts.append(mono if c == 1 else f"{c}*{mono}")
        return " + ".join(parts)

    def __str__(self) -> str:
        return self.to_text()


def _conv_dtype(p: int, length: int):
    # int64 convolution is exact while every output sum fits in 63 bits.
    if length * (p - 1) ** 2 < 2**63:
        return np.int64
    return object


def poly_mul(a: FpPoly, b: FpPoly) -> FpPoly:
    if a.p != b.p:
        raise ValueError(f"modulus mismatch: {a.p} vs {b.p}")
    if a.is_zero() or b.is_zero():
        return FpPoly.zero(a.p)
    dt = _conv_dtype(a.p, min(len(a.coeffs), len(b.coeffs)))
    prod = np.convolve(np.array(a.coeffs, dtype=dt), np.array(b.coeffs, dtype=dt))
    return FpPoly(a.p, tuple(int(c) for c in prod % a.p))


def poly_pow_table(f: FpPoly, m: int) -> list[FpPoly]:
    """Return ``[f^0, f^1, ..., f^m]``."""
    if m < 0:
        raise ValueError("m must be nonnegative")
    table = [FpPoly.one(f.p)]
    for _ in range(m):
        table.append(poly_mul(table[-1], f))
    return table


def poly_derivative(f: FpPoly) -> FpPoly:
    return FpPoly(f.p, tuple(e * c for e, c in enumerate(f.coeffs))[1:])


# term grammar: [coef][*]x[^exp] | coef ; signs handled by the splitter
_TERM = re.compile(
    r"""^(?:
        (?P<c1>\d+)\s*\*?\s*x\s*(?:(?:\^|\*\*)\s*(?P<e1>\d+))?
      | x\s*(?:(?:\^|\*\*)\s*(?P<e2>\d+))?
      | (?P<c3>\d+)
    )$""",
    re.VERBOSE,
)


def _parse_text(p: int, text: str) -> FpPoly:
    s = text.replace("−", "-").replace("–", "-").strip()
    if not s:
        raise PolyParseError("empty polynomial")
    if "/" in s:
        raise PolyParseError("rational functions are not accepted; f must be a polynomial")
    tokens = re.split(r"([+-])", s)
    terms: dict[int, int] = {}
    sign = 1
    expect_term = True
    for tok in tokens:
        tok = tok.strip()
        if not tok:
            continue
        if tok in "+-":
            if tok == "-":
                sign = -sign
            expect_term = True
            continue
        if not expect_term:
            raise PolyParseError(f"missing operator before {tok!r}")
        m = _TERM.match(tok)
        if m is None:
            raise PolyParseError(f"cannot parse term {tok!r}")
        if m.group("c3") is not None:
            c, e = int(m.group("c3")), 0
        elif m.group("c1") is not None:
            c, e = int(m.group("c1")), int(m.group("e1") or 1)
        else:
            c, e = 1, int(m.group("e2") or 1)
        terms[e] = terms.get(e, 0) + sign * c
        sign = 1
        expect_term = False
    if expect_term:
        raise PolyParseError("dangling operator")
    return FpPoly.from_terms(p, terms)


def parse_poly(p: int, source: str | Sequence[int]) -> FpPoly:
    """Parse ``"c*x^e - x^e + c"`` text or a raw coefficient list ``[c0, c1, ...]``.

    Coefficients may be negative; they are reduced mod p.
    """
    if isinstance(source, str):
        s = source.strip()
        if s.startswith("["):
            try:
                source = json.loads(s)
            except json.JSONDecodeError as exc:
                raise PolyParseError(f"bad coefficient list: {exc}") from None
        else:
            return _parse_text(p, s)
    try:
        coeffs = [int(c) for c in source]
    except (TypeError, ValueError):
        raise PolyParseError("coefficient list must contain integers") from None
    return FpPoly.from_coeffs(p, coeffs)
