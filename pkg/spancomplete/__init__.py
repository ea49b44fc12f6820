"""spancomplete."""

__version__ = "0.1.0"

from .acyclic import (
    Complex,
    DirectedComplex,
    FillerProvider,
    GrahamResult,
    RipOrder,
    directed_graham_reduce,
    directed_rip_order,
    fill_configuration,
    graham_reduce,
    is_chordal,
    is_directed_graham_acyclic,
    is_graham_acyclic,
    polygon_triangulation,
    rip_order,
    satisfies_rip,
    spheres_filled,
)
from .config import RunConfig
from .datasets import (
    load_chain3,
    load_cyclic_group2,
    load_database_fill,
    load_fan_triangulation,
    load_fixture_file,
    load_hollow_triangle,
    load_metric_fill,
    load_no_pushout_span,
    load_pushout_span,
    load_spine4,
    load_walking_arrow,
)
from .delta import (
    MonotoneMap,
    compose,
    defect,
    factor_into_generators,
    generating_codegeneracy,
    generating_coface,
    identity,
    is_efficient,
    reedy_factorize,
)
from .diagrams import Grid, Span, Square
from .exceptions import SpanCompleteError
from .instances import (
    Distribution,
    Pseudometric,
    Table,
    dist_fill,
    join,
    metric_fill,
    provider,
    support_search,
)
from .logging_setup import configure_logging
from .oracle import (
    brute_force_pushout,
    is_universal,
    sweep_acyclicity,
    sweep_concrete_criterion,
    sweep_factorizations,
    sweep_pushouts,
)
from .reports import (
    catalog_table,
    classifier_table,
    summarise_sweep,
    validation_summary,
)
from .squares import (
    balanced_completion,
    basic_coface_square,
    catalog,
    compute_pushout,
    factor_balanced,
    factor_into_basic,
    has_pushout,
    is_balanced,
    is_pushout_square,
    pushout_failure_witness,
)
from .sset import (
    FinCategory,
    TruncatedSSet,
    classify,
    comp_contains,
    ex_contains,
    find_filler,
    forced_discrete,
    is_inner_span_complete,
    is_kan,
    is_quasicategory,
    is_segal_nerve,
    is_span_complete,
    nerve,
    representable,
    validate,
)
from .vee import (
    VeeDecomposition,
    VeeFamily,
    components_of_map,
    pushforward,
    vee_product,
)

__all__ = [
    "Complex",
    "DirectedComplex",
    "Distribution",
    "FillerProvider",
    "FinCategory",
    "GrahamResult",
    "Grid",
    "MonotoneMap",
    "Pseudometric",
    "RipOrder",
    "RunConfig",
    "Span",
    "SpanCompleteError",
    "Square",
    "Table",
    "TruncatedSSet",
    "VeeDecomposition",
    "VeeFamily",
    "balanced_completion",
    "basic_coface_square",
    "brute_force_pushout",
    "catalog",
    "catalog_table",
    "classifier_table",
    "classify",
    "comp_contains",
    "components_of_map",
    "compose",
    "compute_pushout",
    "configure_logging",
    "defect",
    "directed_graham_reduce",
    "directed_rip_order",
    "dist_fill",
    "ex_contains",
    "factor_balanced",
    "factor_into_basic",
    "factor_into_generators",
    "fill_configuration",
    "find_filler",
    "forced_discrete",
    "generating_codegeneracy",
    "generating_coface",
    "graham_reduce",
    "has_pushout",
    "identity",
    "is_balanced",
    "is_chordal",
    "is_directed_graham_acyclic",
    "is_efficient",
    "is_graham_acyclic",
    "is_inner_span_complete",
    "is_kan",
    "is_pushout_square",
    "is_quasicategory",
    "is_segal_nerve",
    "is_span_complete",
    "is_universal",
    "join",
    "load_chain3",
    "load_cyclic_group2",
    "load_database_fill",
    "load_fan_triangulation",
    "load_fixture_file",
    "load_hollow_triangle",
    "load_metric_fill",
    "load_no_pushout_span",
    "load_pushout_span",
    "load_spine4",
    "load_walking_arrow",
    "metric_fill",
    "nerve",
    "polygon_triangulation",
    "provider",
    "pushforward",
    "pushout_failure_witness",
    "reedy_factorize",
    "representable",
    "rip_order",
    "satisfies_rip",
    "spheres_filled",
    "summarise_sweep",
    "support_search",
    "sweep_acyclicity",
    "sweep_concrete_criterion",
    "sweep_factorizations",
    "sweep_pushouts",
    "validate",
    "validation_summary",
    "vee_product",
]
