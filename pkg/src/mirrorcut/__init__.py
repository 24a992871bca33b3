"""Dissections of a scalene triangle into its mirror image using
rotations and translations only, with numerical certification, additive
invariants, integer angle relations, and a straight-cut search."""

from .constructions import (
    ClosureError,
    Dissection,
    RootFindError,
    WrongFamilyError,
    cut_2beta_acute,
    cut_2beta_obtuse,
    cut_alpha_3beta,
    cut_gear,
    cut_incenter3,
    cut_median,
    cut_scissors,
    cut_wheel,
)
from .geom import (
    DegenerateSpecError,
    DirectedLine,
    Point,
    Polygon,
    Polyline,
    RigidMotion,
    TriangleSpec,
    TriangulationError,
    apply_motion,
    construct_triangle,
    find_motion,
    incenter,
    intersection_area,
    is_mirror_symmetric,
    mirror_polygon,
    oriented_angle,
    signed_area,
)
from .invariants import (
    DirectedLineFunctional,
    IllDefinedFunctionalError,
    j_classic,
    j_general,
    orbit_functional,
)
from .relations import (
    IntegerRelation,
    MultipleWitness,
    find_integer_relation,
    is_multiple,
    is_rational_angle,
)
from .certificate import (
    SCHEMA_VERSION,
    CertificateError,
    CertificateVersionError,
    parse_certificate,
    serialize_certificate,
)
from .search import (
    RESOLUTION_CAVEAT,
    CutCandidate,
    boundary_point,
    search_straight_cuts,
    split_by_params,
)
from .svg import render_svg
from .verifier import (
    ArityError,
    ClaimReport,
    NiceReport,
    claim_angle_checks,
    recover_motions,
    theorem1_check,
    verify_nice,
    verify_partition,
)

__version__ = "0.1.0"

__all__ = [
    "ArityError",
    "CertificateError",
    "CertificateVersionError",
    "ClaimReport",
    "ClosureError",
    "CutCandidate",
    "DegenerateSpecError",
    "DirectedLine",
    "DirectedLineFunctional",
    "Dissection",
    "IllDefinedFunctionalError",
    "IntegerRelation",
    "MultipleWitness",
    "NiceReport",
    "Point",
    "Polygon",
    "Polyline",
    "RESOLUTION_CAVEAT",
    "RigidMotion",
    "RootFindError",
    "SCHEMA_VERSION",
    "TriangleSpec",
    "TriangulationError",
    "WrongFamilyError",
    "apply_motion",
    "boundary_point",
    "claim_angle_checks",
    "construct_triangle",
    "cut_2beta_acute",
    "cut_2beta_obtuse",
    "cut_alpha_3beta",
    "cut_gear",
    "cut_incenter3",
    "cut_median",
    "cut_scissors",
    "cut_wheel",
    "find_integer_relation",
    "find_motion",
    "incenter",
    "intersection_area",
    "is_mirror_symmetric",
    "is_multiple",
    "is_rational_angle",
    "j_classic",
    "j_general",
    "mirror_polygon",
    "orbit_functional",
    "oriented_angle",
    "parse_certificate",
    "recover_motions",
    "render_svg",
    "search_straight_cuts",
    "serialize_certificate",
    "signed_area",
    "split_by_params",
    "theorem1_check",
    "verify_nice",
    "verify_partition",
]
