"""Free left legal semigroups and finite semigroup structure checks."""

from .congruences import (
    enumerate_congruences,
    is_subdirectly_irreducible,
    least_semilattice_congruence,
    principal_congruence,
)
from .errors import (
    LeftLegalError,
    NotAssociativeError,
    ParseError,
    PreconditionError,
    SizeError,
    TableError,
    WordError,
)
from .finite import (
    CayleyTable,
    Identity,
    Partition,
    adjoin_identity,
    basic_predicates,
    direct_product,
    format_cayley,
    is_associative,
    parse_cayley,
    parse_identity,
    read_cayley,
    rees_quotient,
    satisfies_identity,
    square_ideal,
)
from .fixtures import load_fixture
from .structure import (
    eta_relation,
    is_putcha,
    semilattice_components,
    separativity,
    square_retract_check,
    tau_relation,
    theorem_audit,
)
from .varieties import are_isomorphic, enumerate_semigroups, variety_membership
from .words import are_equivalent, circ, free_semigroup, normalize, star, support_sequence

__version__ = "0.1.0"
