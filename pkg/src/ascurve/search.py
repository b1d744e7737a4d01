"""Seeded search for polynomials whose curve meets the a-number lower bound.

Trial ``t`` draws its polynomial from a generator seeded by ``(seed, t)``, so
the trial sequence does not depend on how trials are spread over threads.
The reported witness is always the lowest-indexed one, and statistics cover
exactly the trials up to it.
"""

from __future__ import annotations

import csv
import io
import itertools
import json
import time
from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from math import gcd

import numpy as np

from .arith import FpPoly, check_prime
from .bounds import lower_bound_single, upper_bound
from .cartier import cartier_matrix
from .curve import Curve
from . import linalg

__all__ = [
    "EXHAUSTIVE_LIMIT",
    "SearchConfig",
    "SearchResult",
    "SearchWitness",
    "TrialRecord",
    "exhaustive_count",
    "exhaustive_poly",
    "random_poly",
    "search_minimal",
    "trial_rng",
]

EXHAUSTIVE_LIMIT = 10**6
STRATEGIES = ("random", "exhaustive-small")


@dataclass(frozen=True)
class SearchConfig:
    p: int
    d: int
    budget: int = 1000
    seed: int = 0
    threads: int = 1
    strategy: str = "random"

    def __post_init__(self):
        check_prime(self.p)
        if self.d < 1 or gcd(self.d, self.p) != 1:
            raise ValueError(f"d={self.d} must be positive and coprime to p={self.p}")
        if self.budget < 1:
            raise ValueError("budget must be at least 1")
        if self.threads < 1:
            raise ValueError("threads must be at least 1")
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must be a 64-bit unsigned integer")
        if self.strategy not in STRATEGIES:
            raise ValueError(f"strategy must be one of {STRATEGIES}")
        if self.strategy == "exhaustive-small" and exhaustive_count(self.p, self.d) > EXHAUSTIVE_LIMIT:
            raise ValueError(
                f"{exhaustive_count(self.p, self.d)} polynomials exceed the exhaustive limit {EXHAUSTIVE_LIMIT}"
            )


@dataclass(frozen=True)
class TrialRecord:
    trial: int
    poly: str
    a: int


@dataclass(frozen=True)
class SearchWitness:
    curve: Curve
    a: int
    L: int
    trial: int
    trials_used: int
    seed: int
    elapsed: float

    def to_dict(self) -> dict:
        return {
            "p": self.curve.p,
            "d": self.curve.d,
            "f": self.curve.f.to_text(),
            "coeffs": list(self.curve.f.coeffs),
            "a": self.a,
            "L": self.L,
            "trial": self.trial,
            "trials_used": self.trials_used,
            "seed": self.seed,
            "elapsed": self.elapsed,
        }


@dataclass
class SearchResult:
    config: SearchConfig
    witness: SearchWitness | None
    L: int
    upper: int
    records: list[TrialRecord] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def trials(self) -> int:
        return len(self.records)

    @property
    def min_a(self) -> int | None:
        return min((r.a for r in self.records), default=None)

    def histogram(self) -> dict[int, int]:
        return dict(sorted(Counter(r.a for r in self.records).items()))

    def to_dict(self, timing: bool = True) -> dict:
        cfg = self.config
        out = {
            "p": cfg.p,
            "d": cfg.d,
            "budget": cfg.budget,
            "seed": cfg.seed,
            "threads": cfg.threads,
            "strategy": cfg.strategy,
            "L": self.L,
            "upper_bound": self.upper,
            "found": self.witness is not None,
            "witness": self.witness.to_dict() if self.witness else None,
            "statistics": {
                "trials": self.trials,
                "min_a": self.min_a,
                "histogram": {str(k): v for k, v in self.histogram().items()},
            },
        }
        if timing:
            out["elapsed"] = self.elapsed
        elif out["witness"]:
            del out["witness"]["elapsed"]
        return out

    def to_json(self, **kw) -> str:
        return json.dumps(self.to_dict(), **kw)

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["trial", "poly", "a", "L", "attained"])
        for r in self.records:
            w.writerow([r.trial, r.poly, r.a, self.L, r.a == self.L])
        return buf.getvalue()


def _free_exponents(p: int, d: int) -> list[int]:
    return [e for e in range(1, d) if e % p]


def random_poly(p: int, d: int, rng: np.random.Generator) -> FpPoly:
    """Degree-d polynomial with no positive exponent divisible by p.

    Leading coefficient uniform on F_p^*, the rest uniform on F_p.
    """
    if gcd(d, p) != 1:
        raise ValueError(f"d={d} is divisible by p={p}")
    coeffs = rng.integers(0, p, size=d + 1)
    coeffs[d] = rng.integers(1, p)
    coeffs[p:d:p] = 0
    return FpPoly.from_coeffs(p, coeffs.tolist())


def trial_rng(seed: int, trial: int) -> np.random.Generator:
    return np.random.default_rng(np.random.SeedSequence([seed, trial]))


def exhaustive_count(p: int, d: int) -> int:
    return (p - 1) * p ** len(_free_exponents(p, d))


def exhaustive_poly(p: int, d: int, index: int) -> FpPoly:
    """The ``index``-th reduced polynomial of degree d with zero constant term.

    Mixed radix: leading coefficient first (base p-1), then the free
    exponents in increasing order (base p).  Constant terms are skipped
    because ``f + c`` defines the same cover.
    """
    free = _free_exponents(p, d)
    terms = {d: 1 + index % (p - 1)}
    index //= p - 1
    for e in free:
        index, c = divmod(index, p)
        terms[e] = c
    return FpPoly.from_terms(p, terms)


def iter_exhaustive(p: int, d: int):
    """All reduced degree-d polynomials, in ``exhaustive_poly`` order."""
    free = _free_exponents(p, d)
    for digits in itertools.product(range(p), repeat=len(free)):
        for lead in range(1, p):
            terms = dict(zip(reversed(free), digits))
            terms[d] = lead
            yield FpPoly.from_terms(p, terms)


def _a_number(p: int, f: FpPoly, backend: str | None) -> int:
    m = cartier_matrix(Curve(p, f))
    return m.g - linalg.rank(m.entries, p, backend)


def search_minimal(cfg: SearchConfig, backend: str | None = None, batch: int = 64) -> SearchResult:
    t0 = time.perf_counter()
    p, d = cfg.p, cfg.d
    L = lower_bound_single(p, d)
    if cfg.strategy == "random":
        n_trials = cfg.budget

        def make(t: int) -> FpPoly:
            return random_poly(p, d, trial_rng(cfg.seed, t))
    else:
        n_trials = min(cfg.budget, exhaustive_count(p, d))

        def make(t: int) -> FpPoly:
            return exhaustive_poly(p, d, t)

    def run(t: int) -> tuple[int, FpPoly, int]:
        f = make(t)
        return t, f, _a_number(p, f, backend)

    records: list[TrialRecord] = []
    found: tuple[int, FpPoly, int] | None = None
    pool = ThreadPoolExecutor(cfg.threads) if cfg.threads > 1 else None
    try:
        step = batch * cfg.threads
        for start in range(0, n_trials, step):
            idx = range(start, min(start + step, n_trials))
            results = list(pool.map(run, idx)) if pool else map(run, idx)
            for t, f, a in results:
                records.append(TrialRecord(t, f.to_text(), a))
                if a == L:
                    found = (t, f, a)
                    break
            if found:
                break
    finally:
        if pool:
            pool.shutdown()

    elapsed = time.perf_counter() - t0
    witness = None
    if found:
        t, f, a = found
        witness = SearchWitness(Curve(p, f), a, L, t, len(records), cfg.seed, elapsed)
    return SearchResult(cfg, witness, L, upper_bound(p, d, 0), records, elapsed)
