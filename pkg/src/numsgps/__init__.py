"""Numerical semigroups: factorization invariants and random models."""

from .arithmetical import (
    ArithParams,
    CanonicalRep,
    DeltaFamily,
    arith_delta,
    arith_length_set,
    arith_membership,
    canonical_rep,
    delta_multiples_family,
    delta_skip_family,
    length_systems_equal,
    two_gen_delta,
    validate_family,
)
from .errors import (
    BoundTooLarge,
    GcdNotOne,
    InsufficientData,
    InvalidFamilyParams,
    InvalidParams,
    NoRepresentation,
    NotCoprime,
    NotMember,
    NotThreeGenerated,
    NumsgpsError,
    Overflow,
    ZeroElement,
)
from .factorizations import (
    length_sets_up_to,
    DEFAULT_BUDGET,
    ElasticityValue,
    LengthData,
    LengthMultiset,
    QuasilinearProbe,
    count_by_length,
    delta_sequence,
    delta_set,
    element_elasticity,
    elasticity_profile,
    factorizations,
    fulcrum_constant,
    length_multiset,
    length_set,
    max_length,
    mean_length,
    mean_length_slope,
    median_length,
    median_length_slope,
    min_length,
    norm_extremes,
    probe_quasilinear,
    semigroup_delta_set,
    semigroup_elasticity,
)
from .randommodels import (
    COFINITE,
    NON_COFINITE,
    TRIVIAL,
    ErParams,
    IntersectionParams,
    MultiplicityParams,
    SampleStats,
    TrialReport,
    classify_selection,
    model_sweep,
    monte_carlo,
    run_trials,
    sample_er,
    sample_intersection_model,
    sample_multiplicity_model,
    threshold_scan,
    trial_seed,
)
from .semigroup import (
    NumericalSemigroup,
    closure_members,
    minimal_generators,
    sylvester_frobenius,
)

__all__ = [name for name in dir() if not name.startswith("_")]
