"""Enumeration of feasible srg parameter tuples and the named-graph table."""

from __future__ import annotations

import json
import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .errors import InputError
from .graph import SrgParams
from .srg import FeasibilityReport, QecReport, SrgSpectrum, _closed_form, _spectrum, qec_closed_form, validate_params

N_MAX_LIMIT = 100_000

TSV_COLUMNS = ("n", "k", "lambda", "mu", "s", "r", "f", "g", "qec", "class", "conference", "existence")


@dataclass(frozen=True)
class ScanRow:
    params: SrgParams
    feasibility: FeasibilityReport
    spectrum: SrgSpectrum
    qec: QecReport

    def record(self) -> dict:
        p, sp = self.params, self.spectrum
        return {
            "n": p.n,
            "k": p.k,
            "lambda": p.lam,
            "mu": p.mu,
            "s": sp.s,
            "r": sp.r,
            "f": sp.f,
            "g": sp.g,
            "qec": self.qec.qec,
            "class": self.qec.qe_class.value,
            "conference": self.feasibility.is_conference,
            "existence": self.feasibility.existence,
        }


def candidates(n: int):
    """Tuples ``(k, lam, mu)`` for order ``n`` that pass the bounds and the counting relation.

    ``mu = (k-lam-1) k / (n-k-1)`` is forced, so only ``t = k-lam-1`` that make
    it integral are visited: multiples of ``(n-k-1) / gcd(n-k-1, k)``.
    ``mu <= k`` caps ``t`` at ``n-k-1``.
    """
    for k in range(2, n - 1):
        m = n - k - 1
        step = m // math.gcd(m, k)
        for t in range(step, min(m, k - 1) + 1, step):
            yield k, k - 1 - t, t * k // m


def _scan_order(n: int) -> list[ScanRow]:
    rows = []
    isqrt = math.isqrt
    for k, lam, mu in candidates(n):
        # cheap necessary conditions; validate_params has the final word
        if 2 * k + (n - 1) * (lam - mu):
            disc = (lam - mu) ** 2 + 4 * (k - mu)
            root = isqrt(disc)
            if root * root != disc or ((mu - lam + root) // 2 * (n - 1) - k) % root:
                continue
        p = SrgParams(n, k, lam, mu)
        rep = validate_params(p)
        if rep.feasible:
            sp = _spectrum(n, k, lam, mu)
            rows.append(ScanRow(p, rep, sp, _closed_form(n, k, lam, mu, sp)))
    return rows


def _scan_block(ns: range) -> list[ScanRow]:
    out = []
    for n in ns:
        out.extend(_scan_order(n))
    return out


def enumerate_feasible(n_max: int, workers: int | None = None) -> list[ScanRow]:
    """All tuples with ``n <= n_max`` and ``mu >= 1`` that pass :func:`validate_params`.

    Rows are sorted by ``(n, k, lambda, mu)``. With ``workers > 1`` orders are
    split across processes; the merge is sorted so output is identical.
    """
    if not (4 <= n_max <= N_MAX_LIMIT):
        raise InputError(f"n_max must lie in [4, {N_MAX_LIMIT}], got {n_max}")
    if workers is None:
        workers = min(os.cpu_count() or 1, 8)
    if workers <= 1 or n_max < 200:
        rows = _scan_block(range(4, n_max + 1))
    else:
        # interleaved blocks balance the O(n) cost per order
        blocks = [range(4 + i, n_max + 1, workers) for i in range(workers)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            rows = [row for part in pool.map(_scan_block, blocks) for row in part]
    rows.sort(key=lambda row: row.params.as_tuple())
    return rows


def _fmt(v) -> str:
    if isinstance(v, bool):
        return "yes" if v else "no"
    if isinstance(v, float):
        return f"{v:.10g}"
    return str(v)


def to_tsv(rows, header: bool = True):
    if header:
        yield "\t".join(TSV_COLUMNS)
    for row in rows:
        rec = row.record()
        yield "\t".join(_fmt(rec[c]) for c in TSV_COLUMNS)


def to_json_lines(rows):
    for row in rows:
        yield json.dumps(row.record())


# Named strongly regular graphs: (name, n, k, lambda, mu, QEC as tabulated).
NAMED_GRAPHS = (
    ("Petersen", 10, 3, 0, 1, 0),
    ("Clebsch", 16, 5, 0, 2, 1),
    ("Shrikhande", 16, 6, 2, 2, 0),
    ("Schläfli", 27, 16, 10, 8, 0),
    ("Changs", 28, 12, 6, 4, 0),
    ("Hoffman-Singleton", 50, 7, 0, 1, 1),
    ("Sims-Gewirtz", 56, 10, 0, 2, 2),
    ("Brouwer-Haemers", 81, 20, 1, 6, 5),
    ("Higman-Sims", 100, 22, 0, 6, 6),
)


@dataclass(frozen=True)
class TableRow:
    name: str
    params: SrgParams
    expected: int
    computed: float

    @property
    def passed(self) -> bool:
        return isinstance(self.computed, int) and self.computed == self.expected


def named_table() -> list[TableRow]:
    """Recompute the QEC column of the named-graph table from the closed form."""
    rows = []
    for name, n, k, lam, mu, expected in NAMED_GRAPHS:
        p = SrgParams(n, k, lam, mu)
        rows.append(TableRow(name, p, expected, qec_closed_form(p).qec))
    return rows
