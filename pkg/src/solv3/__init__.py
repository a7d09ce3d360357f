"""Index of symmetry of left-invariant metrics on solvable 3D Lie groups."""

from .algebra import LieAlgebraClass, Triple, bracket, classify, milnor_K, structure_constants, validate_triple
from .curvature import RicciData, diagonalize_ricci, is_generic, ricci_from_connection, ricci_matrix
from .errors import DomainError, NumericalError, StratumError
from .index import IndexReport, SubspaceBasis, analyze, cross_check_parallel_fields, index, subindex
from .table import table1

__all__ = [
    "DomainError", "IndexReport", "LieAlgebraClass", "NumericalError", "RicciData", "StratumError",
    "SubspaceBasis", "Triple", "analyze", "bracket", "classify", "cross_check_parallel_fields",
    "diagonalize_ricci", "index", "is_generic", "milnor_K", "ricci_from_connection", "ricci_matrix",
    "structure_constants", "subindex", "table1", "validate_triple",
]
