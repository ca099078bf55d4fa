"""Exact-arithmetic toolkit for weak triangularizability of matrix spaces
over finite fields: decision procedures, invariant-flag recovery, split-pencil
sweeps, and exhaustive Grassmannian survey campaigns."""

from .adapted import (
    find_adapted_vector,
    is_adapted_hyperplane,
    is_adapted_vector,
    projective_reps,
    range_constrained,
)
from .errors import (
    BudgetExceededError,
    PreconditionError,
    SpaceFileError,
    TheoremViolationError,
)
from .flags import (
    Flag,
    LevelRecord,
    RecoveryTrace,
    base_case_n2,
    extract_structure_maps,
    find_rank1_idempotent,
    flag_space,
    invariant_subspaces,
    is_chain,
    recover_flag,
)
from .gf import (
    FieldCtx,
    Poly,
    field_new,
    is_prime,
    parse_field,
    poly_gcd,
    radical,
    roots_with_multiplicity,
    splits_over,
)
from .grassmann import enumerate_subspaces, grassmann_count
from .linalg import Mat, Vec, char_poly, det, invert, kernel_basis, rref, rref_solve, span_rows
from .pencils import (
    CounterexampleReport,
    PencilReport,
    char2_odd_counterexample,
    pencil_splits_all,
    verify_pencil_division,
)
from .spaces import (
    DEFAULT_BUDGET,
    MatSpace,
    format_spacefile,
    parse_spacefile,
    space_from_span,
)
from .survey import (
    DEFAULT_SEED,
    CampaignReport,
    CampaignSpec,
    HitRecord,
    count_flags,
    gen_joint,
    gen_random,
    gen_sl,
    gen_sym,
    gen_triangular,
    run_campaign,
)
from .triang import (
    SpaceVerdict,
    is_triangularizable,
    space_weakly_triangularizable,
    triangularize,
)

__version__ = "0.1.0"
