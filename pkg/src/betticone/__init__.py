"""Exact arithmetic for the cone and semigroup of graded Betti diagrams.

Pure diagrams and their normalizations, greedy cone decompositions, chain
enumeration in a degree window, Smith-normal-form lattice data and Hilbert
basis generators of the virtual semigroup, and the diagram-level obstruction
battery that certifies non-realizability.
"""

from .diagram import (
    BettiDiagram,
    DegreeWindow,
    DiagramError,
    HilbertFunction,
    degree_sequence,
    diagram_from_rows,
    parse_diagram,
)
from .fan import (
    Chain,
    NotInCone,
    PureDecomposition,
    decompose,
    degseq_leq,
    enumerate_chains,
    format_chain,
    in_cone,
    in_lattice,
    parse_chain,
    window_sequences,
)
from .lattice import (
    GeneratorSet,
    brute_force_generators,
    determinant,
    generator_bound,
    hilbert_basis,
    minimal_antichain,
    phi_matrix,
    semigroup_generators,
    smith_normal_form,
    universal_denominator,
)
from .obstructions import (
    ALL_SPLITS_OBSTRUCTED,
    CODIM_EQUALITY_MISMATCH,
    CODIM_TOO_FEW,
    E_ALPHA_FAMILY,
    MAXIMAL_MINOR,
    NO_OBSTRUCTION_FOUND,
    OBSTRUCTED,
    REGULARITY,
    SECOND_SYZYGY,
    SPLIT_SEARCH_CAP,
    UNRESOLVED,
    UNRESOLVED_SPLIT_EXISTS,
    Finding,
    MembershipVerdict,
    NotApplicable,
    ObstructionReport,
    RankBounds,
    RecordedFact,
    SplitSearchResult,
    battery,
    buchsbaum_rim_table,
    cm_consistent,
    codimension_check,
    e_alpha,
    e_alpha_check,
    infer_rank_bounds,
    leaf_obstructed,
    level_decide,
    maximal_minor_check,
    pd1_decide,
    recorded_fact,
    regularity_check,
    second_syzygy_check,
    split_search,
    syzygy_degrees,
)
from .pure import (
    NormalizedPure,
    PureDiagram,
    is_pure_multiple,
    normalized_pure,
    prime_family,
    pure_diagram,
)

__version__ = "0.1.0"

__all__ = [
    "ALL_SPLITS_OBSTRUCTED",
    "CODIM_EQUALITY_MISMATCH",
    "CODIM_TOO_FEW",
    "E_ALPHA_FAMILY",
    "MAXIMAL_MINOR",
    "NO_OBSTRUCTION_FOUND",
    "OBSTRUCTED",
    "REGULARITY",
    "SECOND_SYZYGY",
    "SPLIT_SEARCH_CAP",
    "UNRESOLVED",
    "UNRESOLVED_SPLIT_EXISTS",
    "BettiDiagram",
    "Chain",
    "DegreeWindow",
    "DiagramError",
    "Finding",
    "GeneratorSet",
    "HilbertFunction",
    "MembershipVerdict",
    "NormalizedPure",
    "NotApplicable",
    "NotInCone",
    "ObstructionReport",
    "PureDecomposition",
    "PureDiagram",
    "RankBounds",
    "RecordedFact",
    "SplitSearchResult",
    "battery",
    "brute_force_generators",
    "buchsbaum_rim_table",
    "cm_consistent",
    "codimension_check",
    "decompose",
    "degree_sequence",
    "degseq_leq",
    "determinant",
    "diagram_from_rows",
    "e_alpha",
    "e_alpha_check",
    "enumerate_chains",
    "format_chain",
    "generator_bound",
    "hilbert_basis",
    "in_cone",
    "in_lattice",
    "infer_rank_bounds",
    "is_pure_multiple",
    "leaf_obstructed",
    "level_decide",
    "maximal_minor_check",
    "minimal_antichain",
    "normalized_pure",
    "parse_chain",
    "parse_diagram",
    "pd1_decide",
    "phi_matrix",
    "prime_family",
    "pure_diagram",
    "recorded_fact",
    "regularity_check",
    "second_syzygy_check",
    "semigroup_generators",
    "smith_normal_form",
    "split_search",
    "syzygy_degrees",
    "universal_denominator",
    "window_sequences",
]
