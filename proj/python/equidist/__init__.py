"""Exact verification, bounds, Hadamard constructions and exhaustive search
for equidistant (single Hamming distance) families and q-ary codes."""

from ._core import (
    BoundReport,
    EquidistanceCertificate,
    EquidistanceViolation,
    Error,
    Family,
    GramCertificate,
    HadamardMatrix,
    InvalidInput,
    Isometry,
    NotEquidistant,
    OutOfRegime,
    ResourceLimit,
    SearchResult,
    SweepReport,
    SweepRow,
    Underdetermined,
    UnsupportedAlphabet,
    __version__,
    apply_isometry,
    bound_delsarte,
    bound_single_distance,
    check_equidistant,
    conjecture_bound,
    det_exact,
    enumerate_extremal,
    gram_certificate,
    hadamard_kronecker,
    hadamard_of_order,
    hadamard_paley,
    hadamard_sylvester,
    hadamard_to_family,
    hamming_distance,
    is_positive_definite_structured,
    max_equidistant,
    quadratic_form_value,
    rank_exact,
    signed_incidence_matrix,
    structured_det,
    sweep_conjecture,
    sweep_theorem,
)

__all__ = [name for name in dir() if not name.startswith("_")]
