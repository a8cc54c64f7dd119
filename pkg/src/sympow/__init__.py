"""Symbolic powers, Waldschmidt constants and fractional chromatic numbers
of hypergraph edge ideals, in exact arithmetic."""

__version__ = "0.1.0"

from .errors import (  # noqa: E402
    CrossCheckError,
    InputError,
    ParseError,
    SympowError,
    TooLarge,
)
from .hypergraph import (  # noqa: E402
    BadWitness,
    Hypergraph,
    Partition,
    edge_vertex_incidence,
    find_bad_subhypergraphs,
    find_r_partition,
    independence_number,
    is_uniform,
    is_vertex_transitive,
    load_hypergraph,
    minimal_vertex_covers,
    parse_hypergraph,
    validate_simple,
)
from .mengerian import (  # noqa: E402
    MengerianReport,
    check_mengerian_upto,
    ip_max_matching,
    ip_min_cover,
)
from .monomials import (  # noqa: E402
    Monomial,
    MonomialIdeal,
    alpha,
    colon,
    contains,
    equals,
    ideal_sum,
    intersect,
    minimalize,
    power,
    product,
)
from .paths import (  # noqa: E402
    RootedTree,
    check_t_partite_cycle,
    path_hypergraph_cycle,
    path_hypergraph_tree,
    waldschmidt_cycle_path,
)
from .symbolic import (  # noqa: E402
    Classification,
    EqualityReport,
    Verdict,
    check_equality,
    classify_3partite_equality,
    edge_ideal,
    second_symbolic_via_bad,
    sullivant_member,
    symbolic_power,
)
from .waldschmidt import (  # noqa: E402
    LpSolution,
    alpha_sequence,
    fractional_chromatic,
    waldschmidt_r_partite,
    waldschmidt_upper_bounds,
    waldschmidt_via_chi,
)
