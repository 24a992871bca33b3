"""Grid search for straight two-piece mirror dissections.

A straight cut is a chord between two boundary points of the cake,
parameterized by counterclockwise arc length from A.  The search cuts
the cake at (s, t), cuts it again at (s_box, t_box) and mirrors that
split to tile the box, then asks whether the two cake pieces are
directly congruent to the two box pieces (in either assignment).  Grid
hits can be polished by coordinate-wise golden-section descent and are
re-certified end to end before being reported.

An empty result means no straight nice cut was found at the requested
resolution; it is never a proof that none exists.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

from .geom import Point, Polygon, Polyline, TriangleSpec, construct_triangle, mirror_polygon
from .verifier import recover_motions, verify_nice
from .constructions import Dissection

__all__ = [
    "CutCandidate",
    "RESOLUTION_CAVEAT",
    "boundary_point",
    "search_straight_cuts",
    "split_by_params",
]

RESOLUTION_CAVEAT = (
    "no straight nice cut found at this resolution; "
    "this does not prove that none exists"
)


@dataclass(frozen=True, slots=True)
class CutCandidate:
    """A straight cake cut paired with a straight box cut.

    s, t are boundary parameters (counterclockwise arc length from A) of
    the cake cut; s_box, t_box parameterize the cut whose mirrored pieces
    tile the box.  crossed records the piece assignment: False matches
    piece 1 to mirrored piece 1, True swaps them.  residual is the worst
    vertex mismatch of the certifying congruences, in length units.
    """

    s: float
    t: float
    s_box: float
    t_box: float
    crossed: bool
    residual: float


def _vertex_params(poly: Polygon) -> list[float]:
    out = [0.0]
    verts = poly.vertices
    for i in range(len(verts)):
        nxt = verts[(i + 1) % len(verts)]
        out.append(out[-1] + math.hypot(nxt.x - verts[i].x, nxt.y - verts[i].y))
    return out  # length n+1, last entry == perimeter


def boundary_point(poly: Polygon, s: float) -> Point:
    """Point at counterclockwise arc length s from vertex 0."""
    point, _ = _locate(poly, s, 0.0)
    return point


def _locate(poly: Polygon, s: float, snap: float) -> tuple[Point, set[int]]:
    """Boundary point at parameter s plus the set of sides it lies on.

    Parameters within snap of a vertex are snapped to it; a vertex
    belongs to both adjacent sides.
    """
    cum = _vertex_params(poly)
    per = cum[-1]
    s = s % per
    n = len(poly.vertices)
    for i in range(n):
        if abs(s - cum[i]) <= snap or abs(s - cum[i] - per) <= snap:
            return poly.vertices[i], {(i - 1) % n, i}
    for i in range(n):
        if cum[i] <= s <= cum[i + 1]:
            a = poly.vertices[i]
            b = poly.vertices[(i + 1) % n]
            frac = (s - cum[i]) / (cum[i + 1] - cum[i])
            return Point(a.x + frac * (b.x - a.x), a.y + frac * (b.y - a.y)), {i}
    return poly.vertices[0], {n - 1, 0}


def split_by_params(
    poly: Polygon, s: float, t: float
) -> Optional[tuple[Polygon, Polygon]]:
    """Split a convex polygon along the chord between boundary parameters.

    Returns (piece from s to t counterclockwise, piece from t to s), or
    None when the chord is degenerate: endpoints coincide, or both lie
    on one side so the chord runs along the boundary.
    """
    cum = _vertex_params(poly)
    per = cum[-1]
    snap = 1e-9 * per
    p_s, sides_s = _locate(poly, s, snap)
    p_t, sides_t = _locate(poly, t, snap)
    if sides_s & sides_t:
        return None
    if math.hypot(p_s.x - p_t.x, p_s.y - p_t.y) <= snap:
        return None

    def walk(from_s: float, to_t: float, start: Point, stop: Point) -> Optional[Polygon]:
        pos = from_s % per
        span = (to_t - from_s) % per
        n = len(poly.vertices)
        passed = [
            (offset, poly.vertices[i])
            for i in range(n)
            if snap < (offset := (cum[i] - pos) % per) < span - snap
        ]
        passed.sort(key=lambda ov: ov[0])
        verts = [start] + [v for _, v in passed] + [stop]
        try:
            return Polygon(tuple(verts))
        except ValueError:
            return None

    first = walk(s, t, p_s, p_t)
    second = walk(t, s, p_t, p_s)
    if first is None or second is None:
        return None
    return first, second


def _cyclic_residual(zp: tuple[complex, ...], zq: tuple[complex, ...]) -> float:
    """Best-fit proper-motion residual between two equal-length vertex
    cycles, minimized over cyclic alignment."""
    n = len(zp)
    mean_p = sum(zp) / n
    mean_q = sum(zq) / n
    zpc = [z - mean_p for z in zp]
    zqc = [z - mean_q for z in zq]
    best = math.inf
    for k in range(n):
        w = 0j
        for i in range(n):
            w += zqc[(i + k) % n] * zpc[i].conjugate()
        rot = w / abs(w) if w != 0 else 1.0 + 0j
        worst = 0.0
        for i in range(n):
            err = abs(zpc[i] * rot - zqc[(i + k) % n])
            if err > worst:
                worst = err
        if worst < best:
            best = worst
    return best


def _poly_complex(p: Polygon) -> tuple[complex, ...]:
    return tuple(complex(v.x, v.y) for v in p.vertices)


@dataclass
class _Split:
    s: float
    t: float
    pieces: tuple[Polygon, Polygon]
    z: tuple[tuple[complex, ...], tuple[complex, ...]]
    mz: tuple[tuple[complex, ...], tuple[complex, ...]]


def _make_split(cake: Polygon, axis: float, s: float, t: float) -> Optional[_Split]:
    pieces = split_by_params(cake, s, t)
    if pieces is None:
        return None
    m0 = mirror_polygon(pieces[0], axis)
    m1 = mirror_polygon(pieces[1], axis)
    return _Split(
        s=s,
        t=t,
        pieces=pieces,
        z=(_poly_complex(pieces[0]), _poly_complex(pieces[1])),
        mz=(_poly_complex(m0), _poly_complex(m1)),
    )


def _pair_residual(a: _Split, b: _Split, crossed: bool) -> float:
    i, j = (1, 0) if crossed else (0, 1)
    if len(a.z[0]) != len(b.mz[i]) or len(a.z[1]) != len(b.mz[j]):
        return math.inf
    r1 = _cyclic_residual(a.z[0], b.mz[i])
    if not math.isfinite(r1):
        return r1
    return max(r1, _cyclic_residual(a.z[1], b.mz[j]))


def _golden_line(
    f: Callable[[float], float],
    x0: float,
    f0: float,
    radius: float,
    iters: int = 48,
) -> tuple[float, float]:
    """Golden-section line search around x0 that never worsens f0."""
    invphi = (math.sqrt(5.0) - 1.0) / 2.0
    a = x0 - radius
    b = x0 + radius
    best_x, best_f = x0, f0
    c = b - invphi * (b - a)
    d = a + invphi * (b - a)
    fc, fd = f(c), f(d)
    for _ in range(iters):
        if fc < best_f:
            best_x, best_f = c, fc
        if fd < best_f:
            best_x, best_f = d, fd
        if fc < fd:
            b, d, fd = d, c, fc
            c = b - invphi * (b - a)
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + invphi * (b - a)
            fd = f(d)
    return best_x, best_f


def search_straight_cuts(
    spec: TriangleSpec,
    grid_n: int,
    tol: float = 1e-7,
    refine: bool = False,
    max_refine: int = 64,
    prefilters: bool = True,
    progress: Optional[Callable[[str, float], None]] = None,
) -> list[CutCandidate]:
    """Scan a boundary-parameter grid for straight two-piece mirror cuts.

    grid_n points are placed uniformly along the perimeter (the three
    vertices are always included); every pair of cake cut and box cut is
    screened by vertex count, piece areas and edge-length multisets, and
    surviving pairs by the best-fit congruence residual.  With refine,
    each grid hit is polished by three sweeps of coordinate-wise
    golden-section descent; only the max_refine lowest-residual hits get
    that treatment, which bounds the cost on nearly mirror-symmetric
    cakes where near-misses abound.  Candidates survive only if their
    residual stays within tol * perimeter and the assembled dissection
    passes verify_nice at tol; results are sorted by (s, t, s_box,
    t_box).

    prefilters exists for testing; disabling it must not change results.
    """
    if grid_n < 4:
        raise ValueError("grid_n must be at least 4")
    cake = construct_triangle(spec)
    axis = spec.side_c / 2.0
    cum = _vertex_params(cake)
    per = cum[-1]
    step = per / grid_n
    params = sorted({(i * per / grid_n) % per for i in range(grid_n)} | set(cum[:3]))

    def report(stage: str, frac: float) -> None:
        if progress is not None:
            progress(stage, frac)

    report("split", 0.0)
    splits: list[_Split] = []
    for i in range(len(params)):
        for j in range(i + 1, len(params)):
            sp = _make_split(cake, axis, params[i], params[j])
            if sp is not None:
                splits.append(sp)
    report("split", 1.0)
    if not splits:
        return []

    m = len(splits)
    n1 = np.array([len(sp.z[0]) for sp in splits])
    n2 = np.array([len(sp.z[1]) for sp in splits])
    area1 = np.array([sp.pieces[0].area for sp in splits])
    area2 = np.array([sp.pieces[1].area for sp in splits])

    def padded_edges(which: int) -> np.ndarray:
        out = np.zeros((m, 4))
        for idx, sp in enumerate(splits):
            e = sorted(sp.pieces[which].edge_lengths())
            out[idx, : len(e)] = e
        return out

    edges1 = padded_edges(0)
    edges2 = padded_edges(1)

    # A true cut sits within half a grid step per parameter, so each
    # chord endpoint is off by at most half a step on the cake and half
    # a step on the box side: residual <= step, edge lengths off by at
    # most step, areas by at most step * diameter / 2.  The slacks add
    # margin on top of those bounds so no true hit is screened out.
    grid_tol = 1.05 * step
    slack_area = 0.8 * cake.diameter * step
    slack_len = 1.3 * step

    hits: list[tuple[float, float, float, float, bool, float]] = []
    all_indices = np.arange(m)
    for i, sp in enumerate(splits):
        report("scan", i / m)
        for crossed in (False, True):
            if crossed:
                a_first, a_second = area2[i], area1[i]
                n_first, n_second = n2[i], n1[i]
                e_first, e_second = edges2[i], edges1[i]
            else:
                a_first, a_second = area1[i], area2[i]
                n_first, n_second = n1[i], n2[i]
                e_first, e_second = edges1[i], edges2[i]
            if prefilters:
                mask = (
                    (n1 == n_first)
                    & (n2 == n_second)
                    & (np.abs(area1 - a_first) <= slack_area)
                    & (np.abs(area2 - a_second) <= slack_area)
                )
                mask &= np.abs(edges1 - e_first).max(axis=1) <= slack_len
                mask &= np.abs(edges2 - e_second).max(axis=1) <= slack_len
                candidates = np.nonzero(mask)[0]
            else:
                candidates = all_indices
            for j in candidates:
                # residual is measured cake-split -> mirrored box-split,
                # so splits[j] plays the box role here
                res = _pair_residual(splits[j], sp, crossed)
                if res <= grid_tol:
                    hits.append((splits[j].s, splits[j].t, sp.s, sp.t, crossed, res))
    report("scan", 1.0)

    def dedupe(
        rows: list[tuple[float, float, float, float, bool, float]],
        radius: float,
    ) -> list[tuple[float, float, float, float, bool, float]]:
        """Keep the lowest-residual row of each cluster of rows that agree
        on the assignment and sit within radius in every parameter."""
        rows = sorted(rows, key=lambda h: h[5])
        kept: list[tuple[float, float, float, float, bool, float]] = []

        def close(a: float, b: float) -> bool:
            d = abs(a - b) % per
            return min(d, per - d) < radius

        for h in rows:
            if any(
                h[4] == k[4] and all(close(h[x], k[x]) for x in range(4))
                for k in kept
            ):
                continue
            kept.append(h)
        return kept

    kept = dedupe(hits, 1.25 * step)

    max_residual = tol * per
    refined: list[tuple[float, float, float, float, bool, float]] = []
    for idx, h in enumerate(kept):
        report("refine", idx / max(1, len(kept)))
        vec = list(h[:4])
        crossed = h[4]
        value = h[5]
        if refine and idx < max_refine and value > 1e-3 * max_residual:
            for _ in range(3):
                for coord in range(4):
                    # Only one of the two splits changes along this line;
                    # build the other once.
                    if coord < 2:
                        fixed = _make_split(cake, axis, vec[2], vec[3])
                    else:
                        fixed = _make_split(cake, axis, vec[0], vec[1])
                    if fixed is None:
                        continue

                    def line(x: float, c: int = coord, fx: _Split = fixed) -> float:
                        if c < 2:
                            s_, t_ = (x, vec[1]) if c == 0 else (vec[0], x)
                            moved = _make_split(cake, axis, s_, t_)
                            if moved is None:
                                return math.inf
                            return _pair_residual(moved, fx, crossed)
                        s_, t_ = (x, vec[3]) if c == 2 else (vec[2], x)
                        moved = _make_split(cake, axis, s_, t_)
                        if moved is None:
                            return math.inf
                        return _pair_residual(fx, moved, crossed)

                    vec[coord], value = _golden_line(line, vec[coord], value, step)
        refined.append(
            (vec[0] % per, vec[1] % per, vec[2] % per, vec[3] % per, crossed, value)
        )
    report("refine", 1.0)
    refined = dedupe(refined, step)

    # Final certification: assemble and verify end to end.
    out: list[CutCandidate] = []
    for s, t, sb, tb, crossed, res in refined:
        if res > max_residual:
            continue
        candidate = _certify(cake, axis, spec, s, t, sb, tb, crossed, tol)
        if candidate is not None:
            out.append(candidate)
    out.sort(key=lambda c: (c.s, c.t, c.s_box, c.t_box, c.crossed))
    report("done", 1.0)
    return out


def _certify(
    cake: Polygon,
    axis: float,
    spec: TriangleSpec,
    s: float,
    t: float,
    sb: float,
    tb: float,
    crossed: bool,
    tol: float,
) -> Optional[CutCandidate]:
    a = _make_split(cake, axis, s, t)
    b = _make_split(cake, axis, sb, tb)
    if a is None or b is None:
        return None
    res = _pair_residual(a, b, crossed)
    box_pieces = (b.pieces[1], b.pieces[0]) if crossed else b.pieces
    box_mirrored = [mirror_polygon(p, axis) for p in box_pieces]
    motions = recover_motions(
        list(a.pieces), box_mirrored, tol=max(10.0 * res, 1e-9 * cake.diameter)
    )
    if motions is None:
        return None
    try:
        d = Dissection(
            cake=cake,
            box=mirror_polygon(cake, axis),
            pieces=a.pieces,
            motions=tuple(motions),
            cut=Polyline((a.pieces[0].vertices[0], a.pieces[0].vertices[-1])),
            family="straight",
        )
    except ValueError:
        return None
    if not verify_nice(d, tol=tol).passed:
        return None
    return CutCandidate(s=s, t=t, s_box=sb, t_box=tb, crossed=crossed, residual=res)
