"""Sum index workbench: exact solver, bounds, constructions, extremal tables
and group-valued variants for edge rank sums of graphs."""

from __future__ import annotations

from .bounds import BoundReport, chromatic_index, haslegrave_bound, known_formula, sum_index_bounds
from .constructions import (
    ConstructionResult,
    extremal_construction,
    label_cluster,
    label_hypercube,
    label_join_family,
    label_multipartite,
)
from .errors import ConstructionError, Graph6Error, InputError, LabelingError, SumdexError
from .graph import FamilySpec, Graph, decode_graph6, encode_graph6, generate, read_graph
from .labeling import Labeling, SumSignature, affine_map, rank_sums, validate_labeling
from .solver import SumIndexCertificate, solve_for_k, sum_index_exact, verify_certificate

__version__ = "0.1.0"

__all__ = [
    "BoundReport", "ConstructionError", "ConstructionResult", "FamilySpec", "Graph",
    "Graph6Error", "InputError", "Labeling", "LabelingError", "SumIndexCertificate",
    "SumSignature", "SumdexError", "affine_map", "chromatic_index", "decode_graph6",
    "encode_graph6", "extremal_construction", "generate", "haslegrave_bound", "known_formula",
    "label_cluster", "label_hypercube", "label_join_family", "label_multipartite",
    "rank_sums", "read_graph", "solve_for_k", "sum_index_bounds", "sum_index_exact",
    "validate_labeling", "verify_certificate",
]
