"""Locating-dominating sets in digraphs: constructions with certified size bounds."""

from .digraph import (
    Digraph,
    bfs_layers,
    build_digraph,
    connectivity,
    induced,
    neighbourhood,
    reverse,
    strong_components,
)
from .errors import (
    DomainError,
    GenerationError,
    HypothesisError,
    InfeasibleSizeError,
    InputError,
    InternalInconsistencyError,
    LocDomError,
    ParseError,
    StructuralAssertionError,
)
from .ldcore import (
    CertifiedSet,
    Kind,
    evaluate_set,
    exact_min_set,
    s_partition,
    tournament_ld_set,
    tournament_locating_set,
)
from .structure import (
    classify,
    is_round_labelling,
    minimal_separator,
    round_decomposition,
    twin_report,
)
from .roundable import solve_roundable
from .nonroundable import separator_decomposition, solve_local_tournament, solve_nonroundable
from .supervising import find_supervising_vertex, solve_supervising
from .io import parse_instance, read_instance, render_dot, render_instance

__version__ = "0.1.0"
