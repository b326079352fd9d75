"""n-valued coset groups of free products of cyclic groups and their growth."""

from .coset import CosetGroup, coset_mul, zplus_isomorphism_check
from .errors import NumericError, PrecisionRangeError, ResourceError, UsageError
from .freeproduct import (
    GroupSpec,
    NormalWord,
    OrbitClass,
    Syllable,
    apply_phi,
    canonical,
    enumerate_normal_words,
    invert,
    parse_word,
    reduce,
)
from .multiset import (
    Multiset,
    MultiValuedGroup,
    ZPlusGroup,
    check_associativity,
    check_inverse,
    check_unit,
    growth_sequence,
    multiset_from,
    new_counts,
    zplus_mul,
)
from .nbonacci import (
    RootSet,
    all_roots,
    binet_nbonacci,
    closed_form_xi,
    dominant_root,
    nbonacci_exact,
    rnd_formula,
    rnd_precision_range,
    s_counts_zm,
)
from .symbolic import (
    FIBONACCI,
    THUE_MORSE,
    CubelessTree,
    Morphism,
    ThetaSequence,
    apply_morphism,
    build_tree,
    check_level_sorted,
    export_dot,
    export_json,
    fixed_point_prefix,
    is_cubeless,
    q_count,
    q_set,
    subtree_level_counts,
)

__version__ = "0.1.0"
