"""Bohr radii for univalent harmonic mappings.

Truncation-exact power series, dilatation-coupled coefficient
construction, certified root solving for the radius equations, and
grid verification of the Bohr inequalities the radii govern.
"""

from .bohr import (
    COMPATIBLE,
    DEFAULT_GRID_SIZE,
    DEFAULT_MARGIN,
    BohrProfile,
    bohr_partial_sum,
    boundary_reach,
    check_pairing,
    default_bound_inputs,
    profile_for_named_map,
    sharpness_scan,
    verify_inequality,
)
from .catalog import (
    ALIASES,
    BOUNDARY_DISTANCE,
    MAP_NAMES,
    PARAMETRIC_MAPS,
    TAIL_CONSTANTS,
    NamedMap,
    closed_form_eval,
    make_map,
    resolve_name,
)
from .dilatation import (
    MOBIUS_VARIANTS,
    MobiusDilatation,
    MonomialDilatation,
    dilatation_residual,
    g_from_mobius,
    g_from_monomial,
)
from .radii import (
    IDENTITIES,
    IDENTITY_NAMES,
    NEEDS_DISTANCE,
    ROOT_DEFINED,
    THEOREM_ALIASES,
    VARIANTS,
    MajorantIdentity,
    RadiusProblem,
    closed_form_radius,
    identity_tail_bound,
    m2_tail,
    majorant_identity_check,
    majorant_value,
    resolve_variant,
)
from .selfcheck import CheckResult, run_selfcheck
from .series import (
    DEFAULT_COMPOSE_ORDER,
    DEFAULT_ORDER,
    HarmonicMap,
    PowerSeries,
    cauchy_product,
    circle_grid,
    compose,
    eval_harmonic,
    evaluate,
    term_differentiate,
    term_integrate,
)
from .solver import (
    DEFAULT_BRACKET,
    RESIDUAL_TOL,
    WIDTH_TOL,
    RootCertificate,
    bracket_root,
    min_rule_radius,
    solve_radius,
)
from .subordination import (
    DOMINATION_TOL,
    MAX_BLASCHKE_MODULUS,
    MAX_RANDOM_DEGREE,
    SchwarzFunction,
    blaschke_schwarz,
    check_domination,
    check_harmonic_subordination_bound,
    domination_campaign,
    monomial_schwarz,
    random_schwarz,
    scaled_identity,
    schwarz_sup,
    subordinate,
)

__version__ = "0.1.0"

__all__ = [
    "ALIASES",
    "BOUNDARY_DISTANCE",
    "BohrProfile",
    "COMPATIBLE",
    "CheckResult",
    "DEFAULT_BRACKET",
    "DEFAULT_COMPOSE_ORDER",
    "DEFAULT_GRID_SIZE",
    "DEFAULT_MARGIN",
    "DEFAULT_ORDER",
    "DOMINATION_TOL",
    "HarmonicMap",
    "IDENTITIES",
    "IDENTITY_NAMES",
    "MAP_NAMES",
    "MAX_BLASCHKE_MODULUS",
    "MAX_RANDOM_DEGREE",
    "MOBIUS_VARIANTS",
    "MajorantIdentity",
    "MobiusDilatation",
    "MonomialDilatation",
    "NEEDS_DISTANCE",
    "NamedMap",
    "PARAMETRIC_MAPS",
    "PowerSeries",
    "RESIDUAL_TOL",
    "ROOT_DEFINED",
    "RadiusProblem",
    "RootCertificate",
    "SchwarzFunction",
    "TAIL_CONSTANTS",
    "THEOREM_ALIASES",
    "VARIANTS",
    "WIDTH_TOL",
    "__version__",
    "blaschke_schwarz",
    "bohr_partial_sum",
    "boundary_reach",
    "bracket_root",
    "cauchy_product",
    "check_domination",
    "check_harmonic_subordination_bound",
    "check_pairing",
    "circle_grid",
    "closed_form_eval",
    "closed_form_radius",
    "compose",
    "default_bound_inputs",
    "dilatation_residual",
    "domination_campaign",
    "eval_harmonic",
    "evaluate",
    "g_from_mobius",
    "g_from_monomial",
    "identity_tail_bound",
    "m2_tail",
    "majorant_identity_check",
    "majorant_value",
    "make_map",
    "min_rule_radius",
    "monomial_schwarz",
    "profile_for_named_map",
    "random_schwarz",
    "resolve_name",
    "resolve_variant",
    "run_selfcheck",
    "scaled_identity",
    "schwarz_sup",
    "sharpness_scan",
    "solve_radius",
    "subordinate",
    "term_differentiate",
    "term_integrate",
    "verify_inequality",
]
