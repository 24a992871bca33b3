"""Numerical certification of dissections.

A dissection is "nice" when its pieces tile the cake, their images under
the per-piece proper rigid motions tile the box, and no reflection was
smuggled in.  Everything here measures; construction code decides what
to do about failures.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from typing import TYPE_CHECKING, Optional, Sequence

from .geom import (
    DirectedLine,
    Point,
    Polygon,
    RigidMotion,
    apply_motion,
    dist,
    find_motion,
    intersection_area,
    oriented_angle,
)
from .relations import (
    IntegerRelation,
    MultipleWitness,
    find_integer_relation,
    is_multiple,
    is_rational_angle,
)

if TYPE_CHECKING:  # pragma: no cover
    from .constructions import Dissection

__all__ = [
    "ArityError",
    "ClaimReport",
    "NiceReport",
    "PartitionReport",
    "claim_angle_checks",
    "recover_motions",
    "theorem1_check",
    "verify_nice",
    "verify_partition",
]


class ArityError(ValueError):
    """A two-piece check was asked about a dissection of another size."""


@dataclass(frozen=True, slots=True)
class PartitionReport:
    """Measured partition quality of a set of pieces against a target."""

    ok: bool
    area_defect: float
    max_overlap_area: float
    max_containment_defect: float


@dataclass(frozen=True, slots=True)
class NiceReport:
    """Verdict of verify_nice, with the measured maxima behind it."""

    partition_cake: bool
    partition_box: bool
    motions_proper: bool
    max_overlap_area: float
    area_defect: float
    passed: bool


def verify_partition(
    pieces: Sequence[Polygon],
    target: Polygon,
    tol: float = 1e-9,
) -> PartitionReport:
    """Check that pieces tile target: areas add up, pairwise overlaps are
    negligible, and every piece lies inside the target.

    tol is relative; the absolute area budget is tol * area(target).
    """
    eps_area = tol * target.area
    total = sum(p.area for p in pieces)
    defect = total - target.area
    max_overlap = 0.0
    for i in range(len(pieces)):
        for j in range(i + 1, len(pieces)):
            max_overlap = max(max_overlap, intersection_area(pieces[i], pieces[j]))
    max_containment = 0.0
    for p in pieces:
        inside = intersection_area(p, target)
        max_containment = max(max_containment, abs(inside - p.area))
    ok = (
        abs(defect) <= eps_area
        and max_overlap <= eps_area
        and max_containment <= eps_area
    )
    return PartitionReport(ok, defect, max_overlap, max_containment)


def _motions_proper(motions: Sequence[RigidMotion]) -> bool:
    for m in motions:
        r = math.radians(m.phi)
        det = math.cos(r) ** 2 + math.sin(r) ** 2
        if abs(det - 1.0) > 1e-12:
            return False
    return True


def verify_nice(d: "Dissection", tol: float = 1e-9) -> NiceReport:
    """Certify a dissection end to end.

    Checks the pieces against the cake, the moved pieces against the
    box, and that all motions are proper.  tol is relative to the
    respective target areas.
    """
    rep_cake = verify_partition(d.pieces, d.cake, tol)
    moved = [apply_motion(m, p) for m, p in zip(d.motions, d.pieces)]
    rep_box = verify_partition(moved, d.box, tol)
    proper = _motions_proper(d.motions)
    defect = max((rep_cake.area_defect, rep_box.area_defect), key=abs)
    overlap = max(rep_cake.max_overlap_area, rep_box.max_overlap_area)
    passed = rep_cake.ok and rep_box.ok and proper
    return NiceReport(
        partition_cake=rep_cake.ok,
        partition_box=rep_box.ok,
        motions_proper=proper,
        max_overlap_area=overlap,
        area_defect=defect,
        passed=passed,
    )


def recover_motions(
    cake_pieces: Sequence[Polygon],
    box_pieces: Sequence[Polygon],
    tol: Optional[float] = None,
) -> Optional[list[RigidMotion]]:
    """Per-piece proper motions matching cake pieces to box pieces.

    Greedy matching by area closeness with a congruence check; on greedy
    failure and at most 8 pieces, falls back to full bipartite
    enumeration.  Returns None when no matching exists (for example when
    a piece is only mirror-congruent to its counterpart).
    """
    n = len(cake_pieces)
    if n != len(box_pieces):
        return None
    used = [False] * n
    motions: list[Optional[RigidMotion]] = [None] * n
    for i, piece in enumerate(cake_pieces):
        order = sorted(
            (j for j in range(n) if not used[j]),
            key=lambda j: abs(box_pieces[j].area - piece.area),
        )
        for j in order:
            m = find_motion(piece, box_pieces[j], tol)
            if m is not None:
                used[j] = True
                motions[i] = m
                break
        if motions[i] is None:
            break
    if all(m is not None for m in motions):
        return motions  # type: ignore[return-value]
    if n > 8:
        return None
    for perm in itertools.permutations(range(n)):
        candidate: list[RigidMotion] = []
        for i, j in enumerate(perm):
            m = find_motion(cake_pieces[i], box_pieces[j], tol)
            if m is None:
                break
            candidate.append(m)
        else:
            return candidate
    return None


def _cake_angles(d: "Dissection") -> tuple[float, float, float]:
    if len(d.cake) != 3:
        raise ValueError("expected a triangular cake")
    a, b, g = d.cake.interior_angles()
    return a, b, g


def theorem1_check(
    d: "Dissection",
    k_max: int = 10,
    tol: float = 1e-6,
) -> Optional[IntegerRelation]:
    """Integer angle relation that a two-piece dissection must satisfy.

    For a genuine two-piece rearrangement of a scalene cake into its
    mirror image, some relation k*alpha + l*beta + m*gamma = 0 with small
    integer coefficients, not all zero, must hold.  Returns the minimal
    bounded relation or None; an empty result marks the dissection as
    suspect rather than disproving it, since the coefficient bound is
    finite.
    """
    if len(d.pieces) != 2:
        raise ArityError(
            f"theorem-1 check applies to 2-piece dissections, got {len(d.pieces)}"
        )
    alpha, beta, gamma = _cake_angles(d)
    return find_integer_relation(alpha, beta, gamma, k_max=k_max, tol=tol)


@dataclass(frozen=True, slots=True)
class ClaimReport:
    """Angle bookkeeping for a two-piece dissection, after normalizing so
    piece 0 stays fixed.

    no_rotation is set when the remaining motion is a pure translation;
    everything downstream is then vacuous.  Preconditions record whether
    the corresponding multiple-of statements were entitled to hold: each
    needs the rotation angle to be irrational (no bounded rational
    witness) or the center to avoid the relevant side lines.
    """

    no_rotation: bool
    phi: Optional[float]
    center: Optional[Point]
    sides_through_center: int
    phi_rational: Optional[tuple[int, int]]
    angle_ab_image: Optional[float]
    ab_multiple: Optional[MultipleWitness]
    ab_precondition_holds: bool
    two_alpha: Optional[float]
    two_alpha_multiple: Optional[MultipleWitness]
    two_alpha_precondition_holds: bool
    notes: tuple[str, ...] = ()


def _line_through(a: Point, b: Point) -> DirectedLine:
    return DirectedLine.through(a, b)


def claim_angle_checks(
    d: "Dissection",
    k_max: int = 8,
    l_max: int = 2,
    tol_deg: float = 1e-6,
) -> ClaimReport:
    """Report the rotation-angle facts behind the two-piece obstruction.

    Normalizes the dissection so piece 0 is fixed (composing every motion
    with the inverse of motion 0 and moving the box along), then reports
    the rotation angle and center of the remaining motion, how many cake
    side lines pass through the center, and multiple-of witnesses for the
    angle between the cake side AB and its box image, and for 2*alpha.
    Violated preconditions are reported, never asserted through.
    """
    if len(d.pieces) != 2:
        raise ArityError(
            f"claim checks apply to 2-piece dissections, got {len(d.pieces)}"
        )
    inv0 = d.motions[0].inverse()
    moving = inv0.compose(d.motions[1])
    box_n = apply_motion(inv0, d.box)
    notes: list[str] = []

    if moving.is_translation(tol_deg=1e-9):
        return ClaimReport(
            no_rotation=True,
            phi=None,
            center=None,
            sides_through_center=0,
            phi_rational=None,
            angle_ab_image=None,
            ab_multiple=None,
            ab_precondition_holds=False,
            two_alpha=None,
            two_alpha_multiple=None,
            two_alpha_precondition_holds=False,
            notes=(
                "normalized motion is a pure translation; a translation-only "
                "two-piece rearrangement contradicts the additive invariant",
            ),
        )

    phi_raw = moving.phi
    phi = phi_raw if phi_raw <= 180.0 else 360.0 - phi_raw
    center = moving.rotation_center()
    assert center is not None

    cake = d.cake.vertices
    eps_len = 1e-9 * d.cake.diameter
    side_lines = [
        _line_through(cake[0], cake[1]),
        _line_through(cake[1], cake[2]),
        _line_through(cake[2], cake[0]),
    ]
    on_side = [line.distance_to(center) < eps_len for line in side_lines]
    sides_through_center = sum(on_side)

    alpha, beta, _ = d.cake.interior_angles()
    rational = is_rational_angle(phi, l_max=360, tol=tol_deg)
    irrational = rational is None

    # Locate the box images of A and B by interior angle; needs a scalene cake.
    box_angles = box_n.interior_angles()
    a_prime = _match_vertex(box_n, box_angles, alpha)
    b_prime = _match_vertex(box_n, box_angles, beta)
    angle_ab: Optional[float] = None
    ab_witness: Optional[MultipleWitness] = None
    if a_prime is None or b_prime is None:
        notes.append("cake is not scalene enough to identify A'B' uniquely")
    else:
        angle_ab = oriented_angle(
            (cake[0], cake[1]), (a_prime, b_prime)
        )
        ab_witness = is_multiple(angle_ab, phi, k_max=k_max, l_max=l_max, tol=tol_deg)

    ab_precondition = irrational or not on_side[0]
    two_alpha = 2.0 * alpha
    two_alpha_witness = is_multiple(two_alpha, phi, k_max=k_max, l_max=l_max, tol=tol_deg)
    # The 2*alpha statement leans on both side lines through A.
    two_alpha_precondition = irrational or (not on_side[0] and not on_side[2])

    return ClaimReport(
        no_rotation=False,
        phi=phi,
        center=center,
        sides_through_center=sides_through_center,
        phi_rational=rational,
        angle_ab_image=angle_ab,
        ab_multiple=ab_witness,
        ab_precondition_holds=ab_precondition,
        two_alpha=two_alpha,
        two_alpha_multiple=two_alpha_witness,
        two_alpha_precondition_holds=two_alpha_precondition,
        notes=tuple(notes),
    )


def _match_vertex(
    poly: Polygon, angles: Sequence[float], target: float, tol: float = 1e-6
) -> Optional[Point]:
    hits = [i for i, a in enumerate(angles) if abs(a - target) <= tol]
    if len(hits) != 1:
        return None
    return poly.vertices[hits[0]]
