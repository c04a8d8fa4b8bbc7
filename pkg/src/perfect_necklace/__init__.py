"""Lexicographically greatest (n,k)-perfect necklaces built from Lyndon pairs."""
from .core import (
    LyndonPair,
    Mode,
    Ordering,
    Pair,
    Params,
    cmp_succ,
    expand,
    is_maximal,
    reduce,
    rotate_left,
    rotate_right,
    rotation_class,
    theta,
    theta_preimage,
)
from .errors import (
    BudgetExceededError,
    CapacityError,
    DomainError,
    InvalidInputError,
    InvalidParamsError,
    NecklaceError,
    NoPredecessorError,
    PreconditionError,
    SearchExhaustedError,
    TheoremViolation,
)
from .generator import (
    DEFAULT_GUARD,
    ChainCursor,
    NecklaceStream,
    build_necklace,
    chain_iter,
    lyndon_list,
    maximal_list,
    necklace_length,
)
from .oracle import (
    PerfectnessReport,
    Violation,
    brute_force_filter,
    brute_force_greatest,
    check_perfect,
    fkm_reference,
)

__version__ = "0.1.0"
