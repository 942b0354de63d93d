"""Oppositions between quantified sentences, by semantics and by integer segments.

The package classifies pairs of monadic first-order sentences into the
classical opposition relations by exhaustive finite-model enumeration,
and encodes the square of oppositions and its hexagonal extension as
assignments of integers on a one-dimensional segment, where the
relations are recovered from sign, sum, and order conditions.
"""

from .formula import (
    FORALL,
    EXISTS,
    FORMS,
    MIXED,
    UNIVERSAL_ONLY,
    EXISTENTIAL_ONLY,
    REPRESENTATIONS,
    PRESETS,
    Atom,
    And,
    DecorationPreset,
    Implies,
    MAnd,
    MImplies,
    MNot,
    MOr,
    Matrix,
    Not,
    Or,
    Quantified,
    Sentence,
    Vocabulary,
    make_categorical,
    print_sentence,
    sentence_predicates,
    sentence_vocabulary,
)
from .parser import Corpus, ParseError, parse_corpus, parse_sentence
from .graph import (
    CONTRADICTORY,
    CONTRARY,
    EQUIVALENT,
    SUBCONTRARY,
    UNCONNECTED,
    OppositionGraph,
    Relation,
    RelationKind,
    from_structured,
    graph_equal,
    render_segment,
    subaltern,
    to_dot,
    to_structured,
)
from .semantics import (
    Evidence,
    Model,
    VocabularyMismatchError,
    build_graph,
    classification_evidence,
    classify,
    default_bound,
    enumerate_models,
    evaluate,
)
from .segment import (
    A_HIGH,
    A_LOW,
    AssignmentError,
    ClauseSystem,
    DistinctObjects,
    Mismatch,
    Polarity,
    Role,
    SegmentAssignment,
    ShapeError,
    VerificationReport,
    contrary_triple,
    decode_graph,
    distinct_objects,
    extend_hexagon,
    hexagon_clause_matches,
    hexagon_relation,
    infer_role,
    make_square_assignment,
    square_clause_matches,
    square_relation,
    subcontrary_triple,
    synthesize,
    verify_against,
)

__version__ = "0.1.0"
