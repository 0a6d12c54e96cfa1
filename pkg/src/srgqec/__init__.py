"""Quadratic embedding constants of graphs, exact for strongly regular graphs."""

from .config import TOL, Tolerances
from .embedding import Embedding, construct_embedding, gram_matrix, verify_embedding
from .errors import DisconnectedError, InputError, NotQEClass, NumericalError
from .generators import generate
from .graph import DistanceMatrix, Graph, SrgParams, complement, detect_srg, distance_matrix, from_edge_list
from .qec import cross_check, is_transmission_regular, qec_numeric
from .scan import enumerate_feasible, named_table
from .spectra import EigenDecomposition, jacobi_eigen, restricted_spectrum
from .srg import (
    FeasibilityReport,
    QEClass,
    QecReport,
    SrgSpectrum,
    adjacency_eigenvalues,
    classify_qe,
    distance_eigenvalues,
    matrix_identity_check,
    qec_closed_form,
    validate_params,
)

__version__ = "0.1.0"
