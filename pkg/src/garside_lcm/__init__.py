"""Right-lcms in right-complemented monoids via right-reversing.

Positive words are tuples of generator indices; signed words encode the
generator ``i`` as ``i + 1`` and its inverse as ``-(i + 1)``.
"""

from .completeness import CompletenessCertificate, CubeReport, certify, theta_cube
from .errors import (
    AmbiguousGcd,
    ClassificationExhausted,
    ComplementUndefined,
    Diverged,
    GarsideError,
    NotCertified,
    NotHomogeneous,
    NotRightComplemented,
    PresentationParseError,
    WordParseError,
)
from .garside import (
    ClosureLimits,
    GarsideFamily,
    compute_minimal_garside,
    extremal_elements,
    family_table,
    verify_garside,
)
from .presentation import (
    ComplementTable,
    CoxeterMatrix,
    Presentation,
    Relation,
    build_artin_tits,
    derive_complement_table,
    is_homogeneous,
    load_presentation,
    parse_presentation,
)
from .presets import PRESET_NAMES, preset
from .reversing import (
    BudgetExhausted,
    Defined,
    Irreducible,
    Stuck,
    export_trace_dot,
    extended_complement,
    reverse,
)
from .trichotomy import (
    ClassifierLimits,
    ClassifierSession,
    Complement,
    EventuallyPeriodic,
    Exhausted,
    Failing,
    Ternary,
    classify,
    has_common_right_multiple,
    right_lcm,
)
from .wordproblem import (
    EquivalenceClass,
    ElementSet,
    WordProblem,
    canonical,
    equivalence_class,
    left_divisors,
    left_gcd,
    oracle_common_multiple,
    right_divisors,
    word_problem,
    words_equal,
)
from .words import Alphabet, concat, formal_inverse, fraction, negative, positive

__version__ = "0.1.0"
