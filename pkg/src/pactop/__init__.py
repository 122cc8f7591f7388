"""Exact engine for partial actions of finite groups on finite spaces.

Everything is computed over explicit tables: group multiplication,
open-set families as bitmasks, per-element partial maps.  The package
validates partial-action axioms in two independent formulations, builds
the enveloping space with its quotient topology and total action,
computes category transforms, and certifies selector, transversal
topology and bireducibility facts, each as a structured report.
"""

from .errors import (
    AxiomViolation,
    InvalidOpenSet,
    InvalidOrder,
    InvalidSubset,
    NoIdentity,
    NoInverse,
    NotAnAction,
    NotASubgroup,
    NotAssociative,
    NotOpen,
    PactopError,
    ParseError,
    SchemaError,
)
from .globalize import (
    Globalization,
    build,
    effros_report,
    embedding_report,
    enveloping_relation,
    hat_relation_report,
)
from .groups import FiniteGroup, cyclic, is_subgroup, make_group
from .instances import example_k3, induced_family, mutant_family
from .paction import (
    PartialAction,
    acting_set,
    induced,
    lifted_action,
    orbit,
    orbit_consistency_report,
    orbit_equivalence,
    pair_action,
    pair_index,
    pair_split,
    stabilizer,
    subgroup_restriction,
    validate,
)
from .relations import EqRel, from_blocks, from_relation
from .reports import Check, Report, ReportBuilder
from .selector import (
    BorelReport,
    SelectorMap,
    action_continuity_table,
    bireducibility_report,
    is_selector_for,
    min_selector,
    normalized_selector,
    orbit_homeomorphism_report,
    transversal,
    transversal_topology,
)
from .topology import (
    FinTop,
    SeparationFlags,
    SetFamily,
    all_topologies,
    borel_algebra,
    borel_atoms,
    closure,
    discrete,
    homeomorphisms,
    indiscrete,
    interior,
    is_borel,
    is_closed,
    is_continuous,
    is_gdelta,
    is_meager_in,
    is_open,
    is_open_map,
    make_topology,
    minimal_neighborhoods,
    product,
    product_with_discrete,
    quotient,
    separation,
    subspace,
    transported,
)
from .vaught import (
    delta_transform,
    ideal_member,
    ideal_section_set,
    open_case,
    star_transform,
    transform_identities_report,
)

__all__ = [name for name in dir() if not name.startswith("_")]

__version__ = "0.1.0"
