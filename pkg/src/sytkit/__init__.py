"""Standard Young tableaux: RSK, Knuth classes, jeu de taquin, the weak
order poset, shuffle products, and exhaustive desk-scale checks."""

from .knuthclass import KnuthClass, knuth_class, knuth_class_words
from .permutation import (
    ParseError,
    Word,
    all_words,
    descents_left,
    dual_knuth_move_word,
    dual_knuth_neighbors,
    evac_word,
    format_word,
    interleavings,
    inverse,
    inversions_left,
    knuth_neighbors,
    parse_word,
    restrict_standardize,
    shuffle,
    transpose_word,
    weak_covers,
    weak_leq,
)
from .report import VerificationReport
from .tableau import (
    Cell,
    Rows,
    Shape,
    SkewTableau,
    all_standard_tableaux,
    beside,
    corners,
    descent_set,
    dominance_leq,
    dual_knuth_move,
    evacuate,
    format_skew,
    format_tableau,
    inner_tableau,
    inner_translate,
    insert,
    insertion_tableau,
    is_hook,
    jdt_slide,
    jdt_slide_trace,
    over,
    parse_skew,
    parse_tableau,
    partitions,
    rectify,
    restrict,
    reverse_insert,
    row_word,
    rsk,
    shape_of,
    standard_tableaux,
    transpose,
)
from .weakorder import (
    Interval,
    TableauPoset,
    build_poset,
    cached_poset,
    check_monotone_descent,
    check_monotone_shape,
    induced_covers,
    interval,
    is_isomorphic,
    leq,
    poset_to_json,
    to_dot,
)
from .hopf import (
    PlacticSum,
    interval_product,
    plactic_product,
    product_interval,
    verify_interval_isomorphism,
)
from .verify import (
    cover_witness_words,
    verify_antisymmetry,
    verify_descents_constant,
    verify_dual_knuth_connectivity,
    verify_evac_transpose_monotone,
    verify_hook_eta,
    verify_inner_tableau_translation,
    verify_inner_translation_fails,
    verify_restriction_insertion,
    verify_restriction_monotone,
    verify_special_cases,
    verify_structural,
)
