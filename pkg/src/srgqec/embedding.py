"""Quadratic embeddings: points whose squared Euclidean distances are graph distances."""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .config import TOL
from .errors import InputError, NotQEClass, NumericalError
from .graph import DistanceMatrix
from .spectra import jacobi_eigen


@dataclass(frozen=True, eq=False)
class Embedding:
    n: int
    dim: int
    points: np.ndarray
    max_deviation: float

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "dim": self.dim,
            "points": self.points.tolist(),
            "max_deviation": self.max_deviation,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: dict) -> "Embedding":
        pts = np.array(data["points"], dtype=float).reshape(data["n"], data["dim"])
        return cls(n=int(data["n"]), dim=int(data["dim"]), points=pts, max_deviation=float(data["max_deviation"]))

    def save(self, path):
        Path(path).write_text(self.to_json() + "\n")


def _dist(d) -> np.ndarray:
    return np.asarray(d.d if isinstance(d, DistanceMatrix) else d, dtype=float)


def gram_matrix(d) -> np.ndarray:
    """Centred Gram matrix ``-1/2 P D P`` with ``P = I - J/n``.

    ``D`` already holds squared target distances, so no squaring happens here.
    """
    dd = _dist(d)
    n = dd.shape[0]
    p = np.eye(n) - np.full((n, n), 1.0 / n)
    m = -0.5 * (p @ dd @ p)
    return (m + m.T) / 2.0


def verify_embedding(e: Embedding, d) -> float:
    """Largest ``|‖ψ(x)-ψ(y)‖² - d(x,y)|`` over all pairs."""
    dd = _dist(d)
    if e.n != dd.shape[0] or e.points.shape[0] != e.n:
        raise InputError(f"embedding has {e.points.shape[0]} points but the distance matrix is {dd.shape[0]}x{dd.shape[0]}")
    diff = e.points[:, None, :] - e.points[None, :, :]
    sq = (diff * diff).sum(axis=-1)
    return float(np.abs(sq - dd).max(initial=0.0))


def construct_embedding(d) -> Embedding:
    """Classical-scaling embedding of a distance matrix with ``‖ψ(x)-ψ(y)‖² = d(x,y)``.

    Raises
    ------
    NotQEClass
        If the Gram matrix has an eigenvalue below ``-tol * max|M|``.
    NumericalError
        If the embedding misses the target distances by more than the tolerance.
    """
    dd = _dist(d)
    m = gram_matrix(dd)
    scale = float(np.abs(m).max(initial=0.0))
    eig = jacobi_eigen(m)
    lowest = float(eig.values[-1]) if eig.values.size else 0.0
    if lowest < -TOL.psd * scale:
        raise NotQEClass(lowest)

    keep = eig.values > TOL.rank
    points = eig.vectors[:, keep] * np.sqrt(eig.values[keep])
    e = Embedding(n=dd.shape[0], dim=int(keep.sum()), points=points, max_deviation=0.0)
    dev = verify_embedding(e, dd)
    if dev > TOL.embedding:
        raise NumericalError(f"embedding deviates from the distances by {dev:.3e}")
    return Embedding(n=e.n, dim=e.dim, points=points, max_deviation=dev)
