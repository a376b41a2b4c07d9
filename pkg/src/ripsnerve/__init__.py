"""Complexes from relations, covers and finite metrics, with homology over GF(p)."""

from .complex import (
    SimplicialComplex,
    TruncatedComplexError,
    clique_expand,
    euler_characteristic,
    f_vector,
    insert_simplex,
)
from .homology import (
    BACKEND,
    BettiTable,
    BoundaryMatrix,
    NotASubcomplexError,
    PrimeField,
    betti_numbers,
    boundary_matrix,
    inclusion_rank,
)

__version__ = "0.1.0"
