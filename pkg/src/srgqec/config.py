"""Numerical tolerances shared by every module.

Kept in one record so the acceptance suite and the library agree on a
single set of thresholds.
"""

from dataclasses import dataclass


@dataclass(frozen=True)
class Tolerances:
    residual: float = 1e-9          # ||M v - lambda v||_inf per eigenpair
    ortho: float = 1e-9             # |V^T V - I|_inf
    jacobi_off: float = 1e-12       # off-diagonal Frobenius / ||M||_F at convergence
    jacobi_max_sweeps: int = 100
    qe_band: float = 1e-9           # |qec| <= band  ->  boundary
    psd: float = 1e-9               # relative PSD slack for Gram matrices
    rank: float = 1e-9              # eigenvalues above this count toward embedding dim
    embedding: float = 1e-8         # max |‖ψx-ψy‖² - d(x,y)|
    cross_check: float = 1e-8       # |closed form - numeric|
    bracket: float = 1e-9           # slack on delta2 <= qec < delta1
    cluster: float = 1e-6           # eigenvalue clustering radius for multiplicities


TOL = Tolerances()
