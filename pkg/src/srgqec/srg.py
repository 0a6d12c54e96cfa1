"""Closed-form results for strongly regular graphs.

Everything here is a function of the parameter tuple ``(n, k, lambda, mu)``
alone. Feasibility logic runs in exact integer arithmetic; floating point
only appears for the irrational eigenvalues of conference parameters.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum

import numpy as np

from .errors import InputError
from .graph import Graph, SrgParams, detect_srg, distance_matrix


class QEClass(str, Enum):
    """Quadratic-embedding verdict.

    ``yes``: QEC < 0; ``boundary``: QEC = 0 (still embeddable);
    ``no``: QEC > 0, no quadratic embedding exists.
    """

    YES = "yes"
    BOUNDARY = "boundary"
    NO = "no"

    def __str__(self):
        return self.value

    @property
    def embeddable(self) -> bool:
        return self is not QEClass.NO


# violated-condition identifiers carried by FeasibilityReport.reason
BOUNDS = "bounds"
RELATION = "relation"
DISCRIMINANT = "discriminant"
MULTIPLICITY = "multiplicity"
CONFERENCE = "conference"


@dataclass(frozen=True)
class FeasibilityReport:
    feasible: bool
    reason: str | None = None
    is_conference: bool = False
    integer_eigenvalues: bool = False
    existence: str = "unknown"
    note: str = ""


@dataclass(frozen=True)
class SrgSpectrum:
    """Adjacency spectrum ``{s^g, r^f, k^1}`` of an srg with mu >= 1.

    ``s`` and ``r`` are Python ints whenever ``disc`` is a perfect square.
    """

    s: float
    r: float
    k: int
    f: int
    g: int
    disc: int

    @property
    def integral(self) -> bool:
        return isinstance(self.s, int) and isinstance(self.r, int)


@dataclass(frozen=True)
class QecReport:
    qec: float
    delta1: float
    delta2: float
    qe_class: QEClass
    method: str
    transmission_regular: bool | None = None
    qec_equals_delta2: bool | None = None
    maximizer: np.ndarray | None = field(default=None, repr=False, compare=False)
    spectrum: np.ndarray | None = field(default=None, repr=False, compare=False)

    def to_dict(self) -> dict:
        out = {
            "qec": self.qec,
            "delta1": self.delta1,
            "delta2": self.delta2,
            "qe_class": self.qe_class.value,
            "method": self.method,
        }
        if self.transmission_regular is not None:
            out["transmission_regular"] = self.transmission_regular
        if self.qec_equals_delta2 is not None:
            out["qec_equals_delta2"] = self.qec_equals_delta2
        return out


def _ints(p: SrgParams) -> tuple[int, int, int, int]:
    vals = p.as_tuple()
    if all(type(v) is int for v in vals):
        return vals
    if any(v is None or isinstance(v, bool) or int(v) != v for v in vals):
        raise InputError(f"parameters must be four integers, got {vals}")
    return tuple(int(v) for v in vals)


def _coerce(p) -> SrgParams:
    return p if isinstance(p, SrgParams) else SrgParams(*p)


def is_perfect_square(x: int) -> bool:
    return x >= 0 and math.isqrt(x) ** 2 == x


def conference_indicator(n: int, k: int, lam: int, mu: int) -> int:
    """``2k + (n-1)(lambda-mu)``; zero exactly in the conference case (and f = g)."""
    return 2 * k + (n - 1) * (lam - mu)


def discriminant(k: int, lam: int, mu: int) -> int:
    return (lam - mu) ** 2 + 4 * (k - mu)


def validate_params(p) -> FeasibilityReport:
    """Check a tuple against the necessary conditions for an srg with mu >= 1.

    Conditions are tried in order (parameter bounds, the counting relation,
    then integrality of eigenvalues and multiplicities, or the conference
    shape) and the first failure is reported. Passing means the tuple
    survives these necessary conditions; it says nothing about whether a
    graph with these parameters exists.
    """
    n, k, lam, mu = _ints(_coerce(p))
    if not (n >= 4 and 2 <= k <= n - 2 and 1 <= mu <= k and 0 <= lam <= k - 2):
        return FeasibilityReport(False, BOUNDS)
    if (n - k - 1) * mu != (k - lam - 1) * k:
        return FeasibilityReport(False, RELATION)

    disc = discriminant(k, lam, mu)
    square = is_perfect_square(disc)
    if conference_indicator(n, k, lam, mu) == 0:
        if not (n % 4 == 1 and 2 * k == n - 1 and 4 * lam == n - 5 and 4 * mu == n - 1):
            return FeasibilityReport(False, CONFERENCE, is_conference=True)
        return FeasibilityReport(
            True,
            is_conference=True,
            integer_eigenvalues=square,
            note="conference parameters: existence of a graph is not settled by these conditions",
        )

    if not square:
        return FeasibilityReport(False, DISCRIMINANT)
    root = math.isqrt(disc)
    # (lam-mu) and root share parity because disc = (lam-mu)^2 mod 4
    s = (lam - mu - root) // 2
    r = (lam - mu + root) // 2
    f_num = -s * (n - 1) - k
    g_num = r * (n - 1) + k
    if f_num % root or g_num % root or f_num < 0 or g_num < 0:
        return FeasibilityReport(False, MULTIPLICITY, integer_eigenvalues=True)
    return FeasibilityReport(True, integer_eigenvalues=True)


def _require_feasible(p) -> tuple[int, int, int, int]:
    p = _coerce(p)
    if p.mu is None:
        raise InputError(f"{p}: mu undetermined (complete graph); the closed form needs mu >= 1")
    n, k, lam, mu = _ints(p)
    if mu == 0:
        raise InputError(f"{p}: mu = 0 means the graph is disconnected; QEC is undefined")
    rep = validate_params(p)
    if not rep.feasible:
        raise InputError(f"{p} is infeasible ({rep.reason})")
    return n, k, lam, mu


def adjacency_eigenvalues(p) -> SrgSpectrum:
    """Eigenvalues ``s < r < k`` of the adjacency matrix and multiplicities ``g, f, 1``."""
    return _spectrum(*_require_feasible(p))


def _spectrum(n: int, k: int, lam: int, mu: int) -> SrgSpectrum:
    disc = discriminant(k, lam, mu)
    if is_perfect_square(disc):
        root = math.isqrt(disc)
        s = (lam - mu - root) // 2
        r = (lam - mu + root) // 2
        f = (-s * (n - 1) - k) // root
        g = (r * (n - 1) + k) // root
        return SrgSpectrum(s=s, r=r, k=k, f=f, g=g, disc=disc)
    # only conference parameters survive validation with an irrational root
    rn = math.sqrt(n)
    half = (n - 1) // 2
    return SrgSpectrum(s=(-1 - rn) / 2, r=(-1 + rn) / 2, k=k, f=half, g=half, disc=disc)


def distance_eigenvalues(p) -> tuple[float, float, float]:
    """Distance-matrix eigenvalues ``(-r-2, -s-2, 2(n-1)-k)`` in increasing order.

    Their multiplicities are ``f``, ``g`` and 1 respectively.
    """
    n = _coerce(p).n
    sp = adjacency_eigenvalues(p)
    return (-sp.r - 2, -sp.s - 2, 2 * (n - 1) - sp.k)


def classify_qe(p) -> QEClass:
    """QE verdict from the sign of ``k - 2 lambda + mu - 4``."""
    _, k, lam, mu = _require_feasible(p)
    t = k - 2 * lam + mu
    if t == 4:
        return QEClass.BOUNDARY
    return QEClass.YES if t < 4 else QEClass.NO


def qec_closed_form(p) -> QecReport:
    """Exact QEC of a connected non-complete srg: ``-s - 2``.

    Integer-valued whenever the discriminant is a perfect square, which
    covers every non-conference tuple.
    """
    return _closed_form(*_require_feasible(p))


def _closed_form(n: int, k: int, lam: int, mu: int, sp: SrgSpectrum | None = None) -> QecReport:
    sp = sp or _spectrum(n, k, lam, mu)
    qec = -sp.s - 2
    t = k - 2 * lam + mu
    return QecReport(
        qec=qec,
        delta1=2 * (n - 1) - k,
        delta2=qec,
        qe_class=QEClass.BOUNDARY if t == 4 else (QEClass.YES if t < 4 else QEClass.NO),
        method="closed_form",
        transmission_regular=True,
        qec_equals_delta2=True,
    )


def complement_params(p) -> SrgParams:
    """Parameters of the complementary graph."""
    n, k, lam, mu = _ints(_coerce(p))
    return SrgParams(n, n - k - 1, n - 2 - 2 * k + mu, n - 2 * k + lam)


@dataclass(frozen=True)
class IdentityFailure:
    identity: str
    entry: tuple[int, int]
    lhs: int
    rhs: int


@dataclass(frozen=True)
class IdentityReport:
    results: dict[str, bool]
    failures: list[IdentityFailure]

    @property
    def passed(self) -> bool:
        return not self.failures

    def summary(self) -> str:
        if self.passed:
            return "all identities hold"
        return "; ".join(f"{f.identity} fails at {f.entry}: {f.lhs} != {f.rhs}" for f in self.failures)


def _compare(name: str, lhs: np.ndarray, rhs: np.ndarray, results: dict, failures: list):
    bad = np.argwhere(lhs != rhs)
    results[name] = bad.size == 0
    if bad.size:
        i, j = (int(x) for x in bad[0])
        failures.append(IdentityFailure(name, (i, j), int(lhs[i, j]), int(rhs[i, j])))


def matrix_identity_check(g: Graph, p=None) -> IdentityReport:
    """Verify the srg matrix identities on an actual graph in integer arithmetic.

    Checked: ``A^2 = mu J - (mu-lambda) A - (mu-k) I``, the cubic
    ``(A-kI)(A^2 + (mu-lambda) A + (mu-k) I) = 0``,
    ``mu D = 2A^2 - (2 lambda - mu) A - 2k I`` and ``D = 2J - 2I - A``.
    """
    found = detect_srg(g)
    p = found if p is None else _coerce(p)
    if found is None or found != p:
        raise InputError(f"graph does not have parameters {p} (detected {found})")
    n, k, lam, mu = _require_feasible(p)

    a = g.adjacency_matrix(np.int64)
    eye = np.eye(n, dtype=np.int64)
    j = np.ones((n, n), dtype=np.int64)
    a2 = a @ a
    d = distance_matrix(g).d.astype(np.int64)

    results: dict[str, bool] = {}
    failures: list[IdentityFailure] = []
    _compare("A^2 = mu J - (mu-lambda) A - (mu-k) I", a2, mu * j - (mu - lam) * a - (mu - k) * eye, results, failures)
    quad = a2 + (mu - lam) * a + (mu - k) * eye
    _compare("(A-kI)(A^2+(mu-lambda)A+(mu-k)I) = 0", (a - k * eye) @ quad, np.zeros_like(a), results, failures)
    _compare("mu D = 2A^2 - (2lambda-mu) A - 2k I", mu * d, 2 * a2 - (2 * lam - mu) * a - 2 * k * eye, results, failures)
    _compare("D = 2J - 2I - A", d, 2 * j - 2 * eye - a, results, failures)
    return IdentityReport(results, failures)
