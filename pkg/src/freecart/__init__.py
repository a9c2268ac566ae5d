"""Free cartesian category toolkit.

Typed arrow terms over generating letters, their graphs, reduction to a
unique normal form, a decision procedure for equality of arrows, and
witnesses showing that any extra equation collapses models to preorders.
"""

from .collapse import CollapseWitness, collapse_witness, verify_witness
from .decide import equal_in_cart, equal_via_normal_forms, synth_from_graph
from .errors import (
    AlreadyEqual,
    ArityMismatch,
    FreecartError,
    IncompatibleGraph,
    InternalError,
    InvalidRedex,
    ModeViolation,
    PositionOutOfRange,
    TypeMismatch,
    Unrealizable,
)
from .graphs import (
    Graph,
    graph_compose,
    graph_equal,
    graph_from_json_dict,
    graph_identity,
    graph_of,
    graph_to_json_dict,
    letter_compatible,
)
from .rewrite import (
    Degree,
    RedexKind,
    ReductionStep,
    ReductionTrace,
    alpha_measure,
    beta_measure,
    degree,
    find_redex,
    gamma_measure,
    is_atomized_k_composition,
    is_normal_form,
    normalize,
    product_eliminative_occurrences,
    step,
)
from .syntax import (
    Diagnostic,
    ParseError,
    SourceTerm,
    parse_arrow,
    parse_object,
    print_arrow,
    print_object,
)
from .terms import (
    ArrowTerm,
    ArrowType,
    Bang,
    Compose,
    Identity,
    Letter,
    LetterObj,
    Mode,
    ObjectExpr,
    Pair,
    Product,
    Proj1,
    Proj2,
    Terminal,
    assoc_l,
    assoc_r,
    codomain,
    compose,
    delta,
    derived_arrow,
    domain,
    dup,
    iter_subterms,
    letter_at,
    letter_length,
    letters_of,
    product_of_arrows,
    replace_subterm,
    sigma,
    substitute_all_letters,
    subterm_at,
    swap,
    symbol_length,
    typecheck,
)
from .cli import run_cli

__version__ = "0.1.0"
