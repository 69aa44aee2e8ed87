"""Exact workbench for the tree of iterated quadratic transforms of k[x,y]
localized at the origin.

Public surface is re-exported here; see the individual modules for the
machinery (`poly` for arithmetic, `expr` for parsing, `tree` for points
and charts, `position` for zero/pole analysis, `proximity`, `valuations`,
`families`, `topology`, `oracle` for the ring-membership questions,
`jsonio`, `dot`, `demos`, and `cli` for the front end).
"""

from .errors import (
    BlowupError,
    BranchError,
    CertificateError,
    ComponentError,
    ComputationError,
    DepthCapError,
    InputError,
    LocateError,
    ResolveError,
)
from .expr import (
    INF,
    ExprSyntaxError,
    format_path,
    format_step,
    parse_element,
    parse_path,
    parse_step,
)
from .poly import Poly, RatFunc, format_poly, format_ratfunc, poly_gcd
from .tree import Point
from .position import (
    ParametricPosition,
    Position,
    Resolution,
    locate,
    position,
    position_parametric,
    resolve,
)
from .proximity import (
    is_proximate,
    proximate_ancestors,
    proximate_points,
    second_kind_contains,
)
from .valuations import (
    FirstKind,
    MinimalCurveBranch,
    MinimalEventuallyPeriodic,
    SecondKind,
    branch_step,
    monomial_path,
    monomial_valuation,
)
from .families import (
    Chain,
    Fiber,
    MoebiusMap,
    Siblings,
    Singleton,
    downset_member,
    family_parts,
    member,
    pairwise_incomparable,
    q1_downset_count,
)
from .topology import (
    ClosedSetRepr,
    NoetherianCertificate,
    closure_member,
    divisor_limit_counts,
    irreducible_components,
    is_irreducible,
    is_noetherian,
    patch_limit_points,
    zariski_closure,
)
from .oracle import (
    IrredundanceCertificate,
    MembershipAnswer,
    in_family,
    in_point,
    irredundance_certificate,
    semigroup_member,
)
from .jsonio import (
    family_from_json,
    family_set_from_json,
    family_set_to_json,
    family_to_json,
    valuation_from_json,
    valuation_to_json,
)
from .dot import export_dot
from .demos import DEMOS, demo_names, run_demo

__all__ = [
    "BlowupError",
    "BranchError",
    "CertificateError",
    "ComponentError",
    "ComputationError",
    "DepthCapError",
    "InputError",
    "LocateError",
    "ResolveError",
    "ExprSyntaxError",
    "INF",
    "format_path",
    "format_step",
    "parse_element",
    "parse_path",
    "parse_step",
    "Poly",
    "RatFunc",
    "format_poly",
    "format_ratfunc",
    "poly_gcd",
    "Point",
    "ParametricPosition",
    "Position",
    "Resolution",
    "locate",
    "position",
    "position_parametric",
    "resolve",
    "is_proximate",
    "proximate_ancestors",
    "proximate_points",
    "second_kind_contains",
    "FirstKind",
    "MinimalCurveBranch",
    "MinimalEventuallyPeriodic",
    "SecondKind",
    "branch_step",
    "monomial_path",
    "monomial_valuation",
    "Chain",
    "Fiber",
    "MoebiusMap",
    "Siblings",
    "Singleton",
    "downset_member",
    "family_parts",
    "member",
    "pairwise_incomparable",
    "q1_downset_count",
    "ClosedSetRepr",
    "NoetherianCertificate",
    "closure_member",
    "divisor_limit_counts",
    "irreducible_components",
    "is_irreducible",
    "is_noetherian",
    "patch_limit_points",
    "zariski_closure",
    "IrredundanceCertificate",
    "MembershipAnswer",
    "in_family",
    "in_point",
    "irredundance_certificate",
    "semigroup_member",
    "family_from_json",
    "family_set_from_json",
    "family_set_to_json",
    "family_to_json",
    "valuation_from_json",
    "valuation_to_json",
    "export_dot",
    "DEMOS",
    "demo_names",
    "run_demo",
]
