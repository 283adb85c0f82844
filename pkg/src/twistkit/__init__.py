"""Exact truncated tensor algebra on surface homology and the generalized-twist pipeline."""

from .algebra import (
    Letter,
    SeriesDomainError,
    StructureMismatchError,
    TensorSeries,
    commutator,
)
from .dehn import (
    CalibrationError,
    CoefficientSolution,
    LemmaHypothesisError,
    LInvariant,
    L,
    L_degree_lemmas,
    Table2Row,
    TwistReport,
    calibrate_twist_convention,
    contradiction_residual,
    expansion_independence_check,
    generalized_twist,
    independence_matrix,
    residual_closed_form,
    solve_coefficients,
    table2,
)
from .expansion import (
    BoundaryStatus,
    ExpansionTable,
    UnspecifiedDegreeError,
    check_boundary,
    ell,
    load_table,
    massuyeau_theta0,
    perturb_expansion,
    save_table,
    table_from_json,
    table_to_json,
    theta,
)
from .series import LieSeries, bch, dynkin_map, is_lie_element, random_lie_series, texp, tlog
from .symplectic import (
    AlgebraAutomorphism,
    Derivation,
    apply_derivation,
    check_kills_omega,
    check_preserves_omega,
    conjugate_derivation,
    derivation_bracket,
    derivation_from_tensor,
    exp_derivation,
    intersection,
    nmap,
    omega,
)
from .words import Configuration, ConfigurationError, GroupWord, config_xy, parse_group_word, zeta

__version__ = "0.1.0"
