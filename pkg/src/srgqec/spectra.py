"""Dense symmetric eigensolver and the eigenproblem restricted to 1-perp.

The solver is a cyclic-by-row Jacobi method. It is slower than LAPACK but
simple to audit and very accurate on the small matrices this package
handles (a few hundred rows at most).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .config import TOL
from .errors import InputError, NumericalError


def as_symmetric(m) -> np.ndarray:
    """Return ``m`` as a float array, insisting on exact symmetry."""
    a = np.array(m, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise InputError(f"expected a square matrix, got shape {a.shape}")
    if not np.array_equal(a, a.T):
        raise InputError("matrix is not exactly symmetric")
    return a


@dataclass(frozen=True, eq=False)
class EigenDecomposition:
    """Eigenvalues sorted descending; ``vectors[:, i]`` pairs with ``values[i]``."""

    values: np.ndarray
    vectors: np.ndarray
    sweeps: int = 0

    def residual(self, m) -> float:
        m = np.asarray(m, dtype=float)
        return float(np.abs(m @ self.vectors - self.vectors * self.values).max(initial=0.0))

    def orthogonality_error(self) -> float:
        v = self.vectors
        return float(np.abs(v.T @ v - np.eye(v.shape[1])).max(initial=0.0))

    def reconstruct(self) -> np.ndarray:
        return (self.vectors * self.values) @ self.vectors.T


def _off_norm(a: np.ndarray) -> float:
    # summing squares of the off-diagonal part directly; total minus diagonal cancels badly
    off = a.copy()
    np.fill_diagonal(off, 0.0)
    return float(np.linalg.norm(off))


def jacobi_eigen(m, *, tol: float = TOL.jacobi_off, max_sweeps: int = TOL.jacobi_max_sweeps) -> EigenDecomposition:
    """Full eigendecomposition of a real symmetric matrix by cyclic Jacobi rotations.

    Sweeps visit pairs ``(p, q)`` row by row and annihilate ``a[p, q]`` with a
    plane rotation. Iteration stops once the off-diagonal Frobenius norm is
    at most ``tol * ||m||_F``.

    Raises
    ------
    NumericalError
        If ``max_sweeps`` sweeps do not reach the tolerance.
    """
    a = as_symmetric(m)
    n = a.shape[0]
    # rows of vt are the eigenvectors; row access is contiguous
    vt = np.eye(n)
    scale = math.sqrt(float((a * a).sum()))
    target = tol * scale
    # rotations on entries this small cannot move the off-norm measurably
    negligible = 1e-18 * scale / max(n, 1)

    sweeps = 0
    off = _off_norm(a)
    while off > target:
        if sweeps >= max_sweeps:
            raise NumericalError(
                f"Jacobi did not converge in {max_sweeps} sweeps (off-diagonal norm {off:.3e}, target {target:.3e})"
            )
        sweeps += 1
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if abs(apq) <= negligible:
                    continue
                app = a[p, p]
                aqq = a[q, q]
                theta = (aqq - app) / (2.0 * apq)
                t = 1.0 / (abs(theta) + math.sqrt(theta * theta + 1.0))
                if theta < 0:
                    t = -t
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c

                rp = a[p].copy()
                rq = a[q]
                a[p] = c * rp - s * rq
                a[q] = s * rp + c * rq
                a[:, p] = a[p]
                a[:, q] = a[q]
                a[p, p] = app - t * apq
                a[q, q] = aqq + t * apq
                a[p, q] = a[q, p] = 0.0

                vp = vt[p].copy()
                vt[p] = c * vp - s * vt[q]
                vt[q] = s * vp + c * vt[q]
        off = _off_norm(a)

    values = np.diag(a).copy()
    order = np.argsort(-values, kind="stable")
    return EigenDecomposition(values=values[order], vectors=vt[order].T.copy(), sweeps=sweeps)


def eigenvalues(m) -> np.ndarray:
    return jacobi_eigen(m).values


def ones_complement_basis(n: int) -> np.ndarray:
    """Orthonormal ``n x (n-1)`` basis of the subspace orthogonal to the all-ones vector.

    Built from the Householder reflector ``H`` with ``H e_1 = 1/sqrt(n)``;
    the remaining columns of ``H`` span the complement.
    """
    if n < 2:
        raise InputError(f"need n >= 2 for a non-trivial complement of 1, got {n}")
    u = np.full(n, 1.0 / math.sqrt(n))
    w = -u
    w[0] += 1.0
    h = np.eye(n) - 2.0 * np.outer(w, w) / (w @ w)
    return h[:, 1:]


@dataclass(frozen=True, eq=False)
class RestrictedEigen:
    """Eigenpairs of ``Q^T M Q`` together with the basis ``Q``."""

    decomposition: EigenDecomposition
    basis: np.ndarray

    @property
    def values(self) -> np.ndarray:
        return self.decomposition.values

    def lifted_vectors(self) -> np.ndarray:
        """Eigenvectors mapped back into R^n (columns orthogonal to 1)."""
        return self.basis @ self.decomposition.vectors


def restricted_eigen(m) -> RestrictedEigen:
    a = as_symmetric(m)
    q = ones_complement_basis(a.shape[0])
    b = q.T @ a @ q
    # round-off in the product leaves b asymmetric in the last ulp
    b = (b + b.T) / 2.0
    return RestrictedEigen(decomposition=jacobi_eigen(b), basis=q)


def restricted_spectrum(m) -> np.ndarray:
    """The n-1 eigenvalues of ``m`` compressed to ``1``-perp, sorted descending."""
    return restricted_eigen(m).values
