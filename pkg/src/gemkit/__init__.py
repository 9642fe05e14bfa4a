"""Edge-colored gem graphs of compact PL manifolds: invariants,
constructions, and a machine-checkable identity/bound harness."""

from .core import (
    BoundaryGraph,
    ColoredGraph,
    FaceVector,
    GemError,
    ResidueCensus,
    ResidueComponent,
    ValidationReport,
    VertexTally,
    boundary_graph,
    census,
    face_vector,
    residue_components,
    validate,
)
from .gemfile import export_gem, load_gem, parse_gem, save_gem
from .constructions import (
    Dipole,
    DoubleProvenance,
    connected_sum,
    crystallize_double,
    double,
    find_one_dipoles,
    interval_product,
    remove_one_dipole,
    sphere_connector_sum,
)
from .genus import (
    GenusProfile,
    ManifoldMeta,
    MinimalityReport,
    SchemeProfile,
    WeakSemiSimpleReport,
    boundary_genus_cap,
    certify_minimal,
    complexity_lower_bounds,
    enumerate_schemes,
    gem_complexity,
    genus_lower_bounds,
    rank_upper_bound,
    regular_genus,
    rho_epsilon,
    rho_epsilon_census,
    rho_epsilon_via_double,
    vertex_lower_bounds,
    weak_semi_simple,
)
from .verify import Check, IdentityReport, Skip, verify_bounds, verify_identities
from .catalog import CatalogEntry, catalog_get, catalog_list

__version__ = "1.0.0"

__all__ = [
    "BoundaryGraph",
    "CatalogEntry",
    "Check",
    "ColoredGraph",
    "Dipole",
    "DoubleProvenance",
    "FaceVector",
    "GemError",
    "GenusProfile",
    "IdentityReport",
    "ManifoldMeta",
    "MinimalityReport",
    "ResidueCensus",
    "ResidueComponent",
    "SchemeProfile",
    "Skip",
    "ValidationReport",
    "VertexTally",
    "WeakSemiSimpleReport",
    "boundary_genus_cap",
    "boundary_graph",
    "catalog_get",
    "catalog_list",
    "census",
    "certify_minimal",
    "complexity_lower_bounds",
    "connected_sum",
    "crystallize_double",
    "double",
    "enumerate_schemes",
    "export_gem",
    "face_vector",
    "find_one_dipoles",
    "gem_complexity",
    "genus_lower_bounds",
    "interval_product",
    "load_gem",
    "parse_gem",
    "rank_upper_bound",
    "regular_genus",
    "remove_one_dipole",
    "residue_components",
    "rho_epsilon",
    "rho_epsilon_census",
    "rho_epsilon_via_double",
    "save_gem",
    "sphere_connector_sum",
    "validate",
    "vertex_lower_bounds",
    "verify_bounds",
    "verify_identities",
    "weak_semi_simple",
]
