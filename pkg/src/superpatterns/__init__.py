"""Linear and circular superpatterns built from zigzag words.

Permutations are one-line tuples over ``1..n``; positions in witnesses and
index sets are 1-based.
"""

from .constructions import (
    ConstructionResult,
    bounds,
    circular_from_linear,
    ev_linear_superpattern,
    zzc_permutation,
    zzc_word,
)
from .containment import (
    Witness,
    contains_circular,
    contains_pattern,
    exact_cyclic_subsequence,
    exact_subsequence,
    witness_is_valid,
)
from .perm import (
    Permutation,
    Word,
    canonical_rotation,
    direct_sum,
    distant_inverse_descents,
    is_layered,
    lift,
    make_permutation,
    pattern_of,
    restrict,
    rotate,
)
from .verify import (
    Budget,
    CheckReport,
    SearchResult,
    VerificationReport,
    check_circular_construction,
    check_embedding_theorems,
    check_identities,
    check_zzc_claim,
    enumerate_cyclic_classes,
    enumerate_patterns,
    min_superpattern_length,
    verify_circular_superpattern,
    verify_superpattern,
)
from .zigzag import (
    ScoreReport,
    ZigzagSpec,
    break_ties,
    circular_score,
    greedy_place,
    initial_cost,
    local_cost,
    min_runs,
    parity_sign,
    run,
    score,
    shifted_score,
    zz,
)

__version__ = "0.1.0"
