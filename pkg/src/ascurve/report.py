"""Invariant reports for a single curve, with JSON and CSV serialization."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import asdict, dataclass, fields

from .bounds import lower_bound_single, upper_bound
from .cartier import cartier_matrix
from .curve import Curve
from .holo import genus
from . import linalg

__all__ = ["InvariantReport", "InvariantViolation", "a_number", "invariants", "reports_to_csv"]


class InvariantViolation(AssertionError):
    """A computed report broke one of the identities every curve must satisfy."""


@dataclass(frozen=True)
class InvariantReport:
    p: int
    d: int
    f: str
    genus: int
    a_number: int
    p_rank: int
    lower_bound: int
    upper_bound: int
    attains_lower: bool

    def to_dict(self) -> dict:
        return asdict(self)

    def to_json(self, **kw) -> str:
        return json.dumps(self.to_dict(), **kw)

    def check(self) -> None:
        problems = []
        if self.genus != (self.p - 1) * (self.d - 1) // 2:
            problems.append("genus formula")
        if not self.lower_bound <= self.a_number <= self.upper_bound:
            problems.append(
                f"a-number {self.a_number} outside [{self.lower_bound}, {self.upper_bound}]"
            )
        if self.p_rank != 0:
            problems.append(f"p-rank {self.p_rank} != 0")
        if self.a_number + self.p_rank > self.genus:
            problems.append("a + p-rank exceeds genus")
        if problems:
            raise InvariantViolation(f"{self.f} over F_{self.p}: " + "; ".join(problems))


def a_number(c: Curve, backend: str | None = None) -> int:
    m = cartier_matrix(c)
    return m.g - linalg.rank(m.entries, c.p, backend)


def invariants(c: Curve, backend: str | None = None, check: bool = True) -> InvariantReport:
    m = cartier_matrix(c)
    g = m.g
    a = g - linalg.rank(m.entries, c.p, backend)
    s = linalg.p_rank_via_power(m.entries, g, c.p, backend)
    lo = lower_bound_single(c.p, c.d)
    rep = InvariantReport(
        p=c.p,
        d=c.d,
        f=c.f.to_text(),
        genus=genus(c.p, c.d),
        a_number=a,
        p_rank=s,
        lower_bound=lo,
        upper_bound=upper_bound(c.p, c.d, 0),
        attains_lower=a == lo,
    )
    if g != rep.genus:
        raise InvariantViolation(f"basis size {g} != genus {rep.genus}")
    if check:
        rep.check()
    return rep


def reports_to_csv(reports) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow([f.name for f in fields(InvariantReport)])
    for r in reports:
        w.writerow([getattr(r, f.name) for f in fields(InvariantReport)])
    return buf.getvalue()
