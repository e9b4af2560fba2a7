"""Symmetric cycles in hypercube tope graphs and decompositions of (sub)topes
over the subtopes labelling their edges, in exact integer arithmetic."""

from .closedform import IntervalSet, canonical_intervals, closed_form_xbar, componentwise_xbar, singleton_xbar
from .cycles import (
    SubtopeSequence,
    SymmetricCycle,
    distinguished_cycle,
    load_cycle,
    matrix_M,
    matrix_N,
    matrix_P,
    matrix_W,
    random_cycle,
    subtope_sequence,
    validate_cycle,
)
from .decomp import (
    Decomposition,
    VertexDecomposition,
    matrix_X,
    reconstruct,
    subtope_decomposition,
    subtope_to_tope_pair,
    tope_coords,
    tope_decomposition,
    vertex_decomposition,
    xbar_of_subtope,
    xbar_of_tope,
)
from .errors import (
    DomainError,
    NotACycleError,
    NotAdjacentError,
    NotATopeError,
    NotSymmetricError,
    OracleContradictionError,
    SingularError,
    SubtopeError,
)
from .signs import (
    HalfLabeling,
    SignVector,
    Subtope,
    Tope,
    hamming_distance,
    meet_midpoint,
    negate,
    support,
    to_binary_labeling,
    tope_from_negative_part,
)

__version__ = "0.1.0"
