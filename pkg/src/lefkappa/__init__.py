"""Kodaira dimension and topological invariants of Lefschetz fibrations and pencils."""

from .classifier import (
    EllipticDescriptor,
    ObstructionReport,
    conjecture_obstructions,
    elliptic_kappa,
    enriques_class_kappa,
    fiber_sum_kappa_bound,
    fibration_verdict,
    kappa_lefschetz,
    subadditivity_holds,
    torus_bundle_kappa,
)
from .dataset import DatasetRecord, format_dataset, format_record, parse_dataset
from .hyperelliptic import (
    FibrationData,
    endo_signature,
    hyperelliptic_k_squared,
    prop_he_verdict,
    signature_lower_bound,
    xiao_slope_holds,
)
from .invariants import (
    KodairaDim,
    KodairaVerdict,
    ManifoldInvariants,
    Provenance,
    Rational,
    compute_invariants,
    euler_characteristic,
    kodaira_from_canonical,
    plurigenus_general_type,
    surface_kappa,
)
from .oracle import EnumerationReport, enumerate_hyperelliptic
from .pencil import (
    ConventionMode,
    PencilData,
    canonical_dot_h,
    fibration_to_pencil_genus,
    kappa0_pencil_constraints,
    kappa_pencil,
    pencil_consistency,
    pencil_genus,
    singular_fiber_count,
)

__version__ = "0.1.0"
