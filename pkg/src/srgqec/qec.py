"""Numeric QE constants of arbitrary connected graphs."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .config import TOL
from .errors import InputError, NumericalError
from .graph import DistanceMatrix, Graph, SrgParams, detect_srg, distance_matrix
from .spectra import jacobi_eigen, restricted_eigen
from .srg import QEClass, QecReport, adjacency_eigenvalues, distance_eigenvalues, qec_closed_form, validate_params


def classify_value(qec: float, band: float = TOL.qe_band) -> QEClass:
    if abs(qec) <= band:
        return QEClass.BOUNDARY
    return QEClass.YES if qec < 0 else QEClass.NO


def is_transmission_regular(g: Graph | DistanceMatrix) -> tuple[bool, int | None]:
    """Whether all distance row sums agree; returns ``(flag, common row sum or None)``."""
    dm = g if isinstance(g, DistanceMatrix) else distance_matrix(g)
    sums = dm.row_sums()
    if (sums == sums[0]).all():
        return True, int(sums[0])
    return False, None


def qec_numeric(g: Graph) -> QecReport:
    """QEC as the top eigenvalue of the distance matrix compressed to 1-perp.

    ``delta1``/``delta2`` come from the unrestricted spectrum. The report
    carries the maximising unit vector, orthogonal to the all-ones vector.
    """
    if g.n < 2:
        raise InputError("QEC is defined for graphs on two or more vertices")
    dm = distance_matrix(g)
    d = dm.d.astype(float)
    full = jacobi_eigen(d).values
    restricted = restricted_eigen(d)
    qec = float(restricted.values[0])
    delta1, delta2 = float(full[0]), float(full[1])

    if qec < delta2 - TOL.bracket or qec >= delta1:
        raise NumericalError(f"bracket delta2 <= QEC < delta1 violated: {delta2!r}, {qec!r}, {delta1!r}")

    tr, _ = is_transmission_regular(dm)
    return QecReport(
        qec=qec,
        delta1=delta1,
        delta2=delta2,
        qe_class=classify_value(qec),
        method="numeric",
        transmission_regular=tr,
        qec_equals_delta2=abs(qec - delta2) <= TOL.bracket,
        maximizer=restricted.lifted_vectors()[:, 0],
        spectrum=full,
    )


def cluster_spectrum(values, radius: float = TOL.cluster) -> list[tuple[float, int]]:
    """Group sorted eigenvalues whose neighbours lie within ``radius``; returns (mean, count) pairs ascending."""
    vals = np.sort(np.asarray(values, dtype=float))
    groups: list[list[float]] = []
    for v in vals:
        if groups and v - groups[-1][-1] <= radius:
            groups[-1].append(v)
        else:
            groups.append([v])
    return [(float(np.mean(grp)), len(grp)) for grp in groups]


def expected_distance_spectrum(p: SrgParams) -> list[tuple[float, int]]:
    """Distance eigenvalues with multiplicities, ascending: ``-r-2`` (f), ``-s-2`` (g), ``2(n-1)-k`` (1)."""
    sp = adjacency_eigenvalues(p)
    lo, mid, top = distance_eigenvalues(p)
    return [(float(lo), sp.f), (float(mid), sp.g), (float(top), 1)]


def spectrum_matches(values, expected: list[tuple[float, int]], tol: float = TOL.cross_check) -> bool:
    clusters = cluster_spectrum(values)
    if len(clusters) != len(expected):
        return False
    vals = np.sort(np.asarray(values, dtype=float))
    start = 0
    for (_, count), (target, mult) in zip(clusters, expected):
        if count != mult or np.abs(vals[start:start + count] - target).max() > tol:
            return False
        start += count
    return True


@dataclass(frozen=True)
class CrossCheck:
    numeric: QecReport
    params: SrgParams | None = None
    closed_form: QecReport | None = None
    difference: float | None = None
    spectrum_ok: bool | None = None
    distance_spectrum: np.ndarray | None = field(default=None, repr=False, compare=False)

    @property
    def passed(self) -> bool:
        if self.closed_form is None:
            return True
        return self.difference <= TOL.cross_check and bool(self.spectrum_ok)


def cross_check(g: Graph) -> CrossCheck:
    """Numeric QEC, plus the closed form and distance-spectrum check when ``g`` is an srg with mu >= 1."""
    numeric = qec_numeric(g)
    p = detect_srg(g)
    if p is None or not p.mu or p.lam is None or not validate_params(p).feasible:
        return CrossCheck(numeric=numeric, params=p)
    closed = qec_closed_form(p)
    spectrum = numeric.spectrum
    return CrossCheck(
        numeric=numeric,
        params=p,
        closed_form=closed,
        difference=abs(numeric.qec - float(closed.qec)),
        spectrum_ok=spectrum_matches(spectrum, expected_distance_spectrum(p)),
        distance_spectrum=spectrum,
    )
