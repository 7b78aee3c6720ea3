"""Exact Hilbert-Mumford semistability calculus for decorated vector bundles.

Everything is computed in exact rational arithmetic: torus states of GL(r)
representation expressions, weight vectors of one-parameter subgroups,
state-cell decompositions of the dominant cone with minimal integral
generators, and the delta-(semi)stability test on weighted filtrations.
"""

from .cones import (
    Cone,
    StateFan,
    corner_rays,
    critical_weight_vectors,
    is_critical,
    primitive_vector,
    rays,
    state_cell,
    state_fan,
    weight_cone,
)
from .errors import (
    ChiNotInAError,
    DecostabError,
    EmptySupportError,
    IndexOutOfRangeError,
    InhomogeneousError,
    LengthMismatchError,
    MixedRankError,
    NoCriticalTypeError,
    NonpositiveDeltaError,
    NonZeroSumError,
    NoSolutionsError,
    NotOrderedError,
    RankOrderError,
    SchemaError,
    SigmaNotNormalizedError,
    TooManyStatesError,
    ValidationError,
)
from .rep import (
    DetPow,
    DirectSum,
    Dual,
    RepExpr,
    StateSet,
    Std,
    Sym,
    Tensor,
    Trivial,
    Wedge,
    enumerate_states,
    envelope,
    homogeneity_degree,
    homogenize,
    state_containment,
)
from .stability import (
    FiltrationData,
    StabilityCondition,
    StabilityParams,
    SupportSpec,
    Verdict,
    bound_c1,
    check,
    check_subbundle,
    combine_direct_sum,
    conic_critical_type,
    conic_minimal_support,
    conic_subbundle_support,
    delta_threshold,
    framed_support,
    gieseker_epsilon,
    hitchin_nilpotent_mu,
    hitchin_support,
    m_value,
    nilpotent_support,
    profile_conic,
    profile_extension,
    profile_framed,
    profile_hitchin,
    sectional_check,
    simplify,
)
from .weights import (
    WeightVector,
    compose,
    corner_basis,
    decompose,
    mu,
    mu_filtration,
    pairing,
)

__version__ = "0.1.0"
