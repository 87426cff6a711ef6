"""levilab: exact Hermitian polynomial algebra and Levi-form geometry checks
for circular and Reinhardt-adjacent domains."""

__version__ = "0.1.0"

from .algebra import (
    AlgebraError,
    BaseFactor,
    BranchCutError,
    DimensionError,
    HermitianExpr,
    PairingError,
    Term,
    conj_variable,
    constant,
    expr_from_dict,
    expr_from_json,
    expr_to_dict,
    expr_to_json,
    modulus_sq,
    variable,
)
from .geometry import (
    DomainSpec,
    InvarianceLattice,
    LeviReport,
    LocusSpec,
    StratificationReport,
    canonical_tangent_levi,
    complex_gradient,
    levi_restricted,
    pseudoconvexity_scan,
    sample_boundary,
    stratify,
    torus_invariance_lattice,
)
from .maps import (
    MapComponent,
    OrbitReport,
    RadicalMap,
    ScalarPower,
    aut_dimension_bookkeeping,
    gradient_identity_check,
    identity_map,
    multiplier_identity_check,
    orbit,
    pullback,
    retraction_check,
    sign_preservation_scan,
)
from .rationals import GR, GaussianRational
from .reinhardt import (
    ModelDomain,
    NormalizedSignature,
    achievable_dims,
    cauchy_bound,
    cauchy_derivative_numeric,
    decay_scan,
    dim_aut0,
    enumerate_signatures,
    lemma_a_cases,
)
