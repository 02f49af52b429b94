"""Exact tooling for locally stable Boolean functions on the hypercube.

A k-function on Q_n takes values +/-1 and disagrees with exactly k of the
n neighbours of every vertex — equivalently, its Fourier support sits on
level k.  This package enumerates them, counts them exactly (F(n, k) and
the class count G(n, k)), canonicalizes them under the signed automorphism
group, builds them (pair lifting, disjoint composition, the 64-term
uncoverable example), bounds their counts by sums-of-squares counting, and
computes the exact law of the word a random walk reads off one.
"""

from .core import (
    MAX_DENSE_N,
    SparsePolynomial,
    Spectrum,
    TruthTable,
    evaluate_sparse,
    inverse_wht,
    neighbours,
    relevant_indices,
    sparse_from_spectrum,
    sparse_from_truth_table,
    spectrum_from_sparse,
    wht,
)
from .group import (
    SignedAutomorphism,
    apply,
    are_isomorphic,
    canonical_form,
    compose,
    group_elements,
    group_order,
    inverse,
    pad_to,
)
from .kfunctions import (
    CountRecord,
    count_table,
    count_table_csv,
    enumerate_spectral,
    enumerate_truth_tables,
    flip_count,
    is_k_function_direct,
    is_k_function_spectral,
    orbit_classes,
    p_parameter,
    uniform_flip_count,
)
from .constructions import (
    complement,
    compose_outer,
    cover_check,
    disjoint_copy,
    is_cover,
    lift_pair,
    max_relevant_construct,
    uncoverable4,
)
from .sos import (
    BoundsReport,
    SosResult,
    check_bounds,
    f_upper_bound,
    sos_bruteforce,
    sos_count,
)
from .scenery import (
    SceneryDistribution,
    distributions_equal,
    exact_scenery,
    markov_scenery,
)
from . import errors

__version__ = "0.1.0"

__all__ = [
    "MAX_DENSE_N",
    "SparsePolynomial",
    "Spectrum",
    "TruthTable",
    "evaluate_sparse",
    "inverse_wht",
    "neighbours",
    "relevant_indices",
    "sparse_from_spectrum",
    "sparse_from_truth_table",
    "spectrum_from_sparse",
    "wht",
    "SignedAutomorphism",
    "apply",
    "are_isomorphic",
    "canonical_form",
    "compose",
    "group_elements",
    "group_order",
    "inverse",
    "pad_to",
    "CountRecord",
    "count_table",
    "count_table_csv",
    "enumerate_spectral",
    "enumerate_truth_tables",
    "flip_count",
    "is_k_function_direct",
    "is_k_function_spectral",
    "orbit_classes",
    "p_parameter",
    "uniform_flip_count",
    "complement",
    "compose_outer",
    "cover_check",
    "disjoint_copy",
    "is_cover",
    "lift_pair",
    "max_relevant_construct",
    "uncoverable4",
    "BoundsReport",
    "SosResult",
    "check_bounds",
    "f_upper_bound",
    "sos_bruteforce",
    "sos_count",
    "SceneryDistribution",
    "distributions_equal",
    "exact_scenery",
    "markov_scenery",
    "errors",
]
