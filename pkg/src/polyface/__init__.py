"""Exact face numbers of matroid base polytopes.

Closed formulas for split matroids (``polyface.formulas``) next to a
brute-force face-lattice oracle (``polyface.oracle``) for checking them.
"""

from .catalog import MatroidSpec, build_matroid
from .errors import FormulaError, InputError, NotSplitError, OracleLimitError, PolyfaceError
from .formulas import (
    SplitProfile,
    hypersimplex_f,
    matroid_f,
    rank2_f,
    sparse_paving_f,
    split_f,
    two_flat_f,
    u_poly,
    w_poly,
)
from .matroid import Matroid, cyclic_flats, is_split, lambda_mu_tables
from .oracle import f_vector_oracle, face_lattice
from .poly import FPolynomial, LaurentPolynomial

__all__ = [
    "FPolynomial",
    "FormulaError",
    "InputError",
    "LaurentPolynomial",
    "Matroid",
    "MatroidSpec",
    "NotSplitError",
    "OracleLimitError",
    "PolyfaceError",
    "SplitProfile",
    "build_matroid",
    "cyclic_flats",
    "f_vector_oracle",
    "face_lattice",
    "hypersimplex_f",
    "is_split",
    "lambda_mu_tables",
    "matroid_f",
    "rank2_f",
    "sparse_paving_f",
    "split_f",
    "two_flat_f",
    "u_poly",
    "w_poly",
]

__version__ = "0.1.0"
