"""Enumeration and spectral extremal search for k-path graphs."""

from .errors import KPathError
from .extremal import Direction, ExtremalRecord, Objective, ObjectiveKind, scan, search, sweep, verify_conjectures
from .g6codec import decode, encode
from .graph import Graph
from .kpathgraph import (
    KPathGraph,
    build_from_sequence,
    derive_color_sequence,
    generalized_fan,
    ribbon,
    weak_generalized_fan,
)
from .seqcore import ColorSequence, count_closed_form, enumerate_sequences, normalize
from .spectra import (
    TABLE_TOL,
    TIE_TOL,
    MatrixKind,
    algebraic_connectivity,
    alpha_index,
    second_alpha_eigenvalue,
    spectrum,
)

__version__ = "0.1.0"

__all__ = [
    "ColorSequence",
    "Direction",
    "ExtremalRecord",
    "Graph",
    "KPathError",
    "KPathGraph",
    "MatrixKind",
    "Objective",
    "ObjectiveKind",
    "TABLE_TOL",
    "TIE_TOL",
    "algebraic_connectivity",
    "alpha_index",
    "build_from_sequence",
    "count_closed_form",
    "decode",
    "derive_color_sequence",
    "encode",
    "enumerate_sequences",
    "generalized_fan",
    "normalize",
    "ribbon",
    "scan",
    "search",
    "second_alpha_eigenvalue",
    "spectrum",
    "sweep",
    "verify_conjectures",
    "weak_generalized_fan",
]
