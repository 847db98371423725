"""Exact homogeneous-weight coding theory over finite Frobenius rings.

Rings are finite structures with full operation tables, weights are
exact rationals obtained from generating characters, and codes are
enumerated word sets, so every bound verdict and sharpness certificate
is an exact statement.
"""

__version__ = "0.1.0"

from .bounds import (
    BoundReport,
    averaging_bound,
    ceil_log,
    check_all,
    max_cyclic_size,
    plotkin_minham,
    plotkin_minimal_ideal,
    plotkin_refined,
    singleton_P,
    singleton_Q,
    singleton_weak,
)
from .families import (
    NotChainRingError,
    ResidualChain,
    gray_image,
    gray_map,
    hjelmslev_line,
    min_hamming_distance,
    octacode,
    residual_chain,
    simplex,
)
from .homweight import (
    CyclotomicSum,
    HomWeightTable,
    NonRationalSumError,
    cyclotomic_polynomial,
    cyclotomic_reduce,
    cyclotomic_residue,
    extend_weight,
    hom_weight_table,
    local_socle_weight_table,
    solve_weight_axioms,
    verify_axioms,
)
from .lincode import (
    CyclicSubmodule,
    DecompositionError,
    LinearCode,
    SweepCapError,
    build_code,
    code_from_words,
    coset_average,
    cyclic_span,
    cyclic_submodule,
    ell,
    min_hamming_word_structure,
    read_generator_rows,
    residual,
    shorten,
    support,
    write_generator_file,
)
from .rings import (
    CardinalityCapError,
    ChainQuad,
    CharacterError,
    GF,
    Ideal,
    Mat,
    NotLocalError,
    Prod,
    Ring,
    RingSpecError,
    Zm,
    build_ring,
    canonical_ring_name,
    is_generating_character,
    is_local,
    minimal_left_ideals,
    parse_element,
    parse_ring_spec,
    principal_ideal,
    radical,
    socle_local,
)
