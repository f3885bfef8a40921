"""Verification laboratory for norm inequalities in matrix ideals."""

__version__ = "0.1.0"

from .errors import (  # noqa: F401
    ConvergenceFailure,
    DomainError,
    InvalidParameter,
    NoWitness,
    NonHermitianInput,
    NotPositiveDefinite,
    OpineqError,
    PoleError,
    ShapeMismatch,
    SignatureMismatch,
    SingularMatrix,
    SizeLimit,
    UnknownCase,
    UnknownFunction,
)
from .linalg import (  # noqa: F401
    SpectralDecomposition,
    complex_gamma,
    hermitian_eigendecompose,
    matrix_from_json,
    matrix_function_hermitian,
    matrix_to_json,
    polar_decompose,
    singular_values,
)
from .norms import NORM_SWEEP, NormSpec, kyfan, norm, parse_norm, schatten  # noqa: F401
from .calculus import (  # noqa: F401
    TwoSidedOperator,
    apply_calculus,
    dexp,
    induced_norm_lower_estimate,
    induced_norm_p2,
    integral_mean,
    superop_flatten,
)
from .functions import (  # noqa: F401
    EntireFunctionSpec,
    alpha_of,
    catalog_roots,
    cpr_function,
    parse_function,
    weierstrass_truncated,
)
from .cases import Margin, equality_audit, evaluate_case, get_case, registry  # noqa: F401
from .harness import (  # noqa: F401
    CampaignConfig,
    counterexample_search,
    random_hermitian,
    random_positive,
    replay_witness,
    run_campaign,
    sample_inputs,
)
