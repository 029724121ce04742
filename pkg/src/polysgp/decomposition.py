"""Structure of the gap set between consecutive dilations.

The integer cone points missed by the semigroup sit between consecutive
dilations of the body.  Past a computable overlap level that in-between
region splits into corner slabs (fans of tetrahedra hanging off the rays
whose chord is a single point) and bridge slabs joining adjacent corner
slabs, and the whole family translates along the rays from level to
level.  This module classifies the vertices driving that structure,
computes the overlap and separation levels, builds the slabs, and
enumerates the gap points themselves.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Optional, Sequence

from .errors import (
    AssumptionViolated,
    BadParameter,
    DegenerateInput,
    NotSimplicial,
    UnsupportedCase,
)
from .geometry import (
    ORIGIN,
    Point3,
    Polyhedron,
    clip_segment_facets,
    contains,
    convex_hull,
    dilate,
    integer_points_in_hull,
    minkowski_difference_contains_origin,
)

IntVec = tuple[int, int, int]


@dataclass(frozen=True)
class VertexClassification:
    """Partition of the vertex set by how each vertex sits on its ray.

    A vertex is the whole chord (point classes), the near end of a
    segment chord (entry classes) or the far end (exit classes), with
    extremal-ray versions kept apart from the rest:

      point_extremal:  chord is the vertex itself, ray extremal
      entry_extremal:  near end of a segment chord on an extremal ray
      exit_extremal:   far end of a segment chord on an extremal ray
      entry_inner:     near end, ray not extremal
      exit_inner:      far end, ray not extremal
    """

    point_extremal: tuple[int, ...]
    entry_extremal: tuple[int, ...]
    exit_extremal: tuple[int, ...]
    entry_inner: tuple[int, ...]
    exit_inner: tuple[int, ...]
    paired_point: dict[int, Point3]
    chords: dict[int, tuple[Fraction, Fraction]]

    def entry_classes(self) -> frozenset[int]:
        return frozenset(self.entry_extremal) | frozenset(self.entry_inner)

    def exit_classes(self) -> frozenset[int]:
        return frozenset(self.exit_extremal) | frozenset(self.exit_inner)

    def class_of(self, vi: int) -> str:
        for name in (
            "point_extremal",
            "entry_extremal",
            "exit_extremal",
            "entry_inner",
            "exit_inner",
        ):
            if vi in getattr(self, name):
                return name
        raise BadParameter("vertex index %d not classified" % vi)


@dataclass(frozen=True)
class CornerSlab:
    """Gap slab at one corner: the region between level k and level k+1
    hanging off a point-chord ray, spanned by the two apexes and a fan
    of crossing points.

    The authoritative region is the hull of apexes and fan; the
    tetrahedra list is its spoke-by-spoke presentation and its cells
    degenerate to flat pieces when two fan points line up behind one
    another as seen from the axis (the hull can then be flat too)."""

    ray: int
    level: int
    apex_pair: tuple[Point3, Point3]
    fan: tuple[Point3, ...]
    tetrahedra: tuple[tuple[Point3, Point3, Point3, Point3], ...]

    def is_empty(self) -> bool:
        """True when no crossing points exist; the apex segment itself
        still carries gap points in that case."""
        return not self.fan

    def vertex_list(self) -> tuple[Point3, ...]:
        return (*self.apex_pair, *self.fan)

    def hull(self) -> Optional[Polyhedron]:
        """Full-dimensional hull, or None when the slab is flat."""
        try:
            return convex_hull(self.vertex_list())
        except DegenerateInput:
            return None


@dataclass(frozen=True)
class BridgeSlab:
    """Gap slab joining two adjacent corner slabs: the hull of one
    triangle from each (body is None when that hull is flat)."""

    ray: int
    next_ray: int
    level: int
    triangles: tuple[tuple[Point3, Point3, Point3], ...]
    body: Optional[Polyhedron]

    def vertex_list(self) -> tuple[Point3, ...]:
        return self.triangles[0] + self.triangles[1]


@dataclass(frozen=True)
class SlabSet:
    corner: tuple[CornerSlab, ...]
    bridge: tuple[BridgeSlab, ...]


@dataclass(frozen=True)
class GapRegion:
    """Everything needed to enumerate and reason about the gap set: the
    overlap and separation levels, the hull covering the low levels, the
    slab templates at the base level with their per-ray translation
    periods, and the slabs forming one full period (the finite region
    all divisibility questions reduce to)."""

    overlap: int
    separation: Optional[int]
    base_level: int
    hull_part: Polyhedron
    corner_templates: tuple[CornerSlab, ...]
    bridge_templates: tuple[BridgeSlab, ...]
    period_vectors: dict[int, Point3]
    periods: dict[int, int]
    period_slabs: tuple[CornerSlab, ...]


def classify(h) -> VertexClassification:
    """Classify every vertex by its position on the chord its ray cuts
    out of the body."""
    ray_dirs = {r.int_tuple() for r in h.rays}
    point_e, entry_e, exit_e, entry_i, exit_i = [], [], [], [], []
    paired: dict[int, Point3] = {}
    chords: dict[int, tuple[Fraction, Fraction]] = {}
    for vi, v in enumerate(h.body.vertices):
        hit = _vertex_chord(h.body, v)
        lo, hi = hit
        chords[vi] = (lo, hi)
        extremal = _primitive(v) in ray_dirs
        if lo == hi:
            if not extremal:
                raise UnsupportedCase(
                    "vertex %s is an isolated chord on a non-extremal ray"
                    % (v,)
                )
            point_e.append(vi)
            paired[vi] = v
        elif lo == 1:
            (entry_e if extremal else entry_i).append(vi)
            paired[vi] = v * hi
        elif hi == 1:
            (exit_e if extremal else exit_i).append(vi)
            paired[vi] = v * lo
        else:
            raise AssumptionViolated(
                "vertex %s lies strictly inside its chord" % (v,)
            )
    return VertexClassification(
        tuple(point_e),
        tuple(entry_e),
        tuple(exit_e),
        tuple(entry_i),
        tuple(exit_i),
        paired,
        chords,
    )


def _vertex_chord(body: Polyhedron, v: Point3) -> tuple[Fraction, Fraction]:
    """Chord parameters [lo, hi] of the ray through vertex v, normalized
    so the vertex sits at 1."""
    lo = None
    hi = None
    for facet in body.facets:
        nd = facet.normal.dot(v)
        c = facet.offset
        if nd == 0:
            if c > 0:
                raise AssumptionViolated("vertex ray misses the body")
            continue
        bound = c / nd
        if nd > 0:
            if lo is None or bound > lo:
                lo = bound
        else:
            if hi is None or bound < hi:
                hi = bound
    if lo is None:
        lo = Fraction(0)
    if hi is None or not lo <= 1 <= hi:
        raise AssumptionViolated("vertex %s escapes its own chord" % (v,))
    return (lo, hi)


def _primitive(v: Point3) -> IntVec:
    mult = v.denominator_lcm()
    ix, iy, iz = int(v.x * mult), int(v.y * mult), int(v.z * mult)
    g = gcd(gcd(abs(ix), abs(iy)), abs(iz))
    return (ix // g, iy // g, iz // g)


def _interior_window(body: Polyhedron, q: Point3) -> tuple[Fraction, Fraction]:
    """Open interval of scales mu with mu*q strictly inside every facet
    whose plane avoids the origin (through-origin facet planes support
    the whole cone and are exempt)."""
    mlo: Optional[Fraction] = None
    mhi: Optional[Fraction] = None
    for facet in body.facets:
        c = facet.offset
        if c == 0:
            continue
        nd = facet.normal.dot(q)
        if nd == 0:
            if c > 0:
                raise UnsupportedCase(
                    "vertex %s can never clear a separating facet" % (q,)
                )
            continue
        bound = c / nd
        if nd > 0:
            if mlo is None or bound > mlo:
                mlo = bound
        else:
            if mhi is None or bound < mhi:
                mhi = bound
    if mlo is None:
        mlo = Fraction(0)
    if mhi is None:
        raise AssumptionViolated("unbounded interior window")
    return (mlo, mhi)


def overlap_level(h, cls: Optional[VertexClassification] = None) -> int:
    """Least level from which each dilation reaches far enough into the
    next (and previous) one for the slab description of the gaps to
    hold; 0 when every vertex is its own chord."""
    if cls is None:
        cls = classify(h)
    best = 0
    exempt = tuple(
        i for i, f in enumerate(h.body.facets) if f.offset == 0
    )
    for vi in list(cls.entry_extremal) + list(cls.entry_inner):
        q = h.body.vertices[vi]
        mlo, mhi = _interior_window(h.body, q)
        # scales (k+1)/k decrease toward 1, so they enter the window from
        # above; the window must reach above 1 for any k to work
        if mhi <= 1:
            raise UnsupportedCase(
                "chord of vertex %s touches the body boundary" % (q,)
            )
        k = _floor(1 / (mhi - 1)) + 1
        if not Fraction(k + 1, k) > mlo:
            raise UnsupportedCase(
                "interior window of vertex %s excludes all levels" % (q,)
            )
        _check_interior(h, q, k, k + 1, exempt)
        best = max(best, k)
    for vi in list(cls.exit_extremal) + list(cls.exit_inner):
        q = h.body.vertices[vi]
        mlo, mhi = _interior_window(h.body, q)
        # scales k/(k+1) increase toward 1 and enter from below
        if mlo >= 1:
            raise UnsupportedCase(
                "chord of vertex %s touches the body boundary" % (q,)
            )
        k = _floor(mlo / (1 - mlo)) + 1
        if not Fraction(k, k + 1) < mhi:
            raise UnsupportedCase(
                "interior window of vertex %s excludes all levels" % (q,)
            )
        _check_interior(h, q, k + 1, k, exempt)
        best = max(best, k)
    return best


def _floor(v: Fraction) -> int:
    return v.numerator // v.denominator


def _check_interior(h, q: Point3, outer: int, inner: int, exempt) -> None:
    """The scaled vertex inner*q must sit T-interior to outer*body."""
    target = dilate(h.body, outer)
    if not contains(
        target, q * inner, mode="relative_interior", exempt_facets=exempt
    ):
        raise AssumptionViolated(
            "closed-form overlap level fails its interiority check at %s"
            % (q,)
        )


def ray_point(h, cls: VertexClassification, i: int) -> Point3:
    """The structural point of ray i: the chord itself for a point
    chord, otherwise the near end of the segment chord."""
    hit = h.ray_data[i]
    return h.rays[i] * hit.lo


def ray_chord_class(h, cls: VertexClassification, i: int) -> str:
    """'point' when ray i meets the body in one point, 'entry_vertex'
    when the near chord end is a vertex, else 'entry_hidden'."""
    hit = h.ray_data[i]
    if hit.kind == "point":
        return "point"
    if _ray_vertex_index(h, cls, i) is not None:
        return "entry_vertex"
    return "entry_hidden"


def _ray_vertex_index(h, cls: VertexClassification, i: int) -> Optional[int]:
    """Vertex index of the near chord end of ray i, if it is a vertex."""
    p = ray_point(h, cls, i)
    for vi, v in enumerate(h.body.vertices):
        if v == p:
            return vi
    return None


def ray_period(h, i: int) -> int:
    """Least step between levels whose slabs at ray i are exact integer
    translates: the denominator of the chord point's scale."""
    hit = h.ray_data[i]
    if hit.kind != "point":
        return 1
    return hit.lo.denominator


def corner_vertex_set(
    h, cls: VertexClassification, i: int, k: int
) -> list[Point3]:
    """Vertex set of the corner slab of point-chord ray i at level k:
    both apexes plus, per adjacent vertex on a segment chord, the point
    where the scaled edge toward it crosses into the neighboring
    dilation."""
    if h.ray_data[i].kind != "point":
        raise BadParameter("ray %d does not meet the body in a point" % i)
    if k < 1:
        raise BadParameter("corner slabs start at level 1")
    vi = _ray_vertex_index(h, cls, i)
    if vi is None:
        raise AssumptionViolated("point chord of ray %d is not a vertex" % i)
    p = h.body.vertices[vi]
    out = [p * k, p * (k + 1)]
    out.extend(pt for pt, _fids in _corner_fan_points(h, cls, i, k))
    return out


def _corner_fan_points(
    h, cls: VertexClassification, i: int, k: int
) -> list[tuple[Point3, tuple[int, ...]]]:
    """Unordered crossing points generating the fan of the corner slab,
    each with the indices of the facets it lands on (facet order matches
    the undilated body)."""
    vi = _ray_vertex_index(h, cls, i)
    p = h.body.vertices[vi]
    entries = cls.entry_classes()
    exits = cls.exit_classes()
    lower = dilate(h.body, k)
    upper = dilate(h.body, k + 1)
    pts: list[tuple[Point3, tuple[int, ...]]] = []
    for wi in h.body.adjacent_vertices(vi):
        q = h.body.vertices[wi]
        if wi in entries:
            a, b = p * (k + 1), q * (k + 1)
            target = lower
        elif wi in exits:
            a, b = p * k, q * k
            target = upper
        else:
            continue
        clipped = clip_segment_facets(target, a, b)
        if clipped is None:
            raise AssumptionViolated(
                "edge toward %s never enters the neighboring dilation"
                % (q,)
            )
        t0, fids, _t1, _f1 = clipped
        hit = a + (b - a) * t0
        if not contains(target, hit):
            raise AssumptionViolated("crossing point fell off the dilation")
        pts.append((hit, fids))
    merged: dict[Point3, set[int]] = {}
    order: list[Point3] = []
    for hit, fids in pts:
        if hit not in merged:
            merged[hit] = set()
            order.append(hit)
        merged[hit].update(fids)
    return [(hit, tuple(sorted(merged[hit]))) for hit in order]


def _transverse(x: Point3, d: Point3) -> Point3:
    """Component of x across the axis d, scaled by |d|^2 to stay exact."""
    return x * d.dot(d) - d * d.dot(x)


def _sign(v: Fraction) -> int:
    return (v > 0) - (v < 0)


def _ordered_fan(
    h, cls: VertexClassification, i: int, k: int
) -> tuple[tuple[Point3, Point3], list[Point3]]:
    """Apex pair and fan points of corner slab (i, k), the fan swept in
    cyclic order so its last point faces the cyclically next ray.  Fan
    points seen under the same angle are kept, ordered near to far."""
    vi = _ray_vertex_index(h, cls, i)
    p = h.body.vertices[vi]
    apexes = (p * k, p * (k + 1))
    raw = _corner_fan_points(h, cls, i, k)
    if not raw:
        return apexes, []
    t = len(h.rays)
    d = h.rays[i]
    u_ref = _transverse(h.rays[(i - 1) % t], d)
    v_ref = _transverse(h.rays[(i + 1) % t], d)
    orient = _sign(d.dot(u_ref.cross(v_ref)))
    if orient == 0:
        raise AssumptionViolated("neighbor rays collapse around ray %d" % i)
    ws = []
    for e, _fids in raw:
        w = _transverse(e, d)
        if w.is_zero():
            raise AssumptionViolated("fan point sits on its own axis")
        ws.append(w)

    def cmp(a: int, b: int) -> int:
        if a == b:
            return 0
        s = _sign(d.dot(ws[a].cross(ws[b])))
        if s:
            return -1 if s == orient else 1
        if ws[a].dot(ws[b]) < 0:
            raise AssumptionViolated(
                "fan of ray %d spans a straight angle" % i
            )
        m = _sign(ws[a].dot(ws[a]) - ws[b].dot(ws[b]))
        if m:
            return m
        return _sign(d.dot(raw[a][0] - raw[b][0]))

    order = sorted(range(len(raw)), key=functools.cmp_to_key(cmp))
    first_w = ws[order[0]]
    last_w = ws[order[-1]]
    # the sweep must run from the previous ray's side to the next ray's
    if _sign(d.dot(u_ref.cross(first_w))) not in (0, orient) or _sign(
        d.dot(last_w.cross(v_ref))
    ) not in (0, orient):
        raise AssumptionViolated(
            "fan of ray %d leaves the wedge of its neighbor rays" % i
        )
    return apexes, [raw[j][0] for j in order]


def _corner_slab(h, cls: VertexClassification, i: int, k: int) -> CornerSlab:
    apexes, fan = _ordered_fan(h, cls, i, k)
    tets = tuple(
        (apexes[0], apexes[1], a, b) for a, b in zip(fan, fan[1:])
    )
    return CornerSlab(
        ray=i,
        level=k,
        apex_pair=apexes,
        fan=tuple(fan),
        tetrahedra=tets,
    )


def _bridge_slab(
    h, cls: VertexClassification, i: int, k: int
) -> BridgeSlab:
    """Bridge between the corner slabs of ray i and the next ray: one
    triangle cut from each fan, joined by an edge parallel to the chord
    between the two corner points.  The triangle corners are the facing
    fan ends; when those are not parallel to the chord (the fans were
    flat, so their ends are ordered by distance, not angle) the unique
    parallel pair of fan points takes over."""
    t = len(h.rays)
    j = (i + 1) % t
    a_apex, a_fan = _ordered_fan(h, cls, i, k)
    b_apex, b_fan = _ordered_fan(h, cls, j, k)
    if not a_fan or not b_fan:
        raise UnsupportedCase(
            "bridge between rays %d and %d lacks fan points" % (i, j)
        )
    chord = ray_point(h, cls, j) - ray_point(h, cls, i)

    def parallel(qa: Point3, qb: Point3) -> bool:
        return (qb - qa).cross(chord).is_zero()

    if parallel(a_fan[-1], b_fan[0]):
        qa, qb = a_fan[-1], b_fan[0]
    else:
        pairs = {
            (pa, pb)
            for pa in a_fan
            for pb in b_fan
            if parallel(pa, pb)
        }
        if len(pairs) != 1:
            raise AssumptionViolated(
                "bridge edge between rays %d and %d: %d candidate pairs "
                "parallel to the corner chord" % (i, j, len(pairs))
            )
        ((qa, qb),) = pairs
    tri_a = (a_apex[0], a_apex[1], qa)
    tri_b = (b_apex[0], b_apex[1], qb)
    try:
        body: Optional[Polyhedron] = convex_hull(tri_a + tri_b)
    except DegenerateInput:
        body = None
    return BridgeSlab(
        ray=i, next_ray=j, level=k, triangles=(tri_a, tri_b), body=body
    )


def slabs(h, cls: VertexClassification, k: int) -> SlabSet:
    """All corner and bridge slabs at level k (only the nonempty kinds:
    corner slabs exist on point-chord rays, bridges between consecutive
    point-chord rays)."""
    if k < 1:
        raise BadParameter("slabs start at level 1")
    t = len(h.rays)
    for i in range(t):
        if ray_chord_class(h, cls, i) == "entry_hidden":
            raise UnsupportedCase(
                "ray %d has a segment chord whose near end is not a "
                "vertex" % i
            )
    point_rays = [
        i for i in range(t) if h.ray_data[i].kind == "point"
    ]
    corner = tuple(_corner_slab(h, cls, i, k) for i in point_rays)
    bridges = []
    point_set = set(point_rays)
    for i in point_rays:
        j = (i + 1) % t
        if j in point_set:
            bridges.append(_bridge_slab(h, cls, i, k))
    return SlabSet(corner=corner, bridge=tuple(bridges))


def corner_slab(h, cls: VertexClassification, i: int, k: int) -> CornerSlab:
    """The corner slab of one point-chord ray at one level."""
    if k < 1:
        raise BadParameter("slabs start at level 1")
    if h.ray_data[i].kind != "point":
        raise BadParameter("ray %d has a segment chord, no corner slab" % i)
    return _corner_slab(h, cls, i, k)


def slab_integer_points(slab) -> set[IntVec]:
    """Integer points of a slab (its hull, flat slabs included)."""
    return set(integer_points_in_hull(slab.vertex_list()))


def separation_level(
    h,
    cls: Optional[VertexClassification] = None,
    generators: Optional[Sequence[Point3]] = None,
) -> int:
    """Least level past which no corner-slab point, translated by the
    generator of another ray, can land in that ray's corner slab or in
    the bridge between the other two rays.

    Needs a three-ray cone whose rays all have point chords, except
    possibly one whose near chord end is an extremal-ray vertex.
    `generators` overrides the translation vectors (one per ray, in ray
    order); by default the ray generators of the semigroup are used.
    """
    if cls is None:
        cls = classify(h)
    if not h.simplicial:
        raise NotSimplicial("separation level needs a three-ray cone")
    point_rays = [i for i in range(3) if h.ray_data[i].kind == "point"]
    if len(point_rays) == 2:
        other = next(i for i in range(3) if i not in point_rays)
        if ray_chord_class(h, cls, other) != "entry_vertex" or (
            _ray_vertex_index(h, cls, other) not in cls.entry_extremal
        ):
            raise UnsupportedCase(
                "segment-chord ray %d does not start at an extremal vertex"
                % other
            )
    elif len(point_rays) != 3:
        raise UnsupportedCase(
            "separation level needs at least two point-chord rays"
        )

    base = max(1, overlap_level(h, cls))
    gens = tuple(generators) if generators is not None else h.ray_generators
    if len(gens) != 3:
        raise BadParameter("one translation generator per ray is required")
    cache: dict[tuple[str, int, int], Optional[tuple[Point3, ...]]] = {}

    def slab_verts(kind: str, i: int, k: int) -> Optional[tuple[Point3, ...]]:
        key = (kind, i, k)
        if key not in cache:
            if kind == "c":
                cache[key] = _corner_slab(h, cls, i, k).vertex_list()
            else:
                try:
                    cache[key] = _bridge_slab(h, cls, i, k).vertex_list()
                except UnsupportedCase:
                    cache[key] = None
        return cache[key]

    worst = base - 1
    for i in point_rays:
        others = [j for j in range(3) if j != i]
        both_point = all(j in point_rays for j in others)
        bridge_ray = (
            others[0] if (others[0] + 1) % 3 == others[1] else others[1]
        )
        targets: list[tuple[str, int]] = [
            ("c", j) for j in others if j in point_rays
        ]
        if both_point:
            targets.append(("b", bridge_ray))
        step_i = h.rays[i] * h.ray_data[i].lo
        for j in others:
            g = gens[j]
            for kind, tj in targets:
                worst = max(
                    worst,
                    _worst_collision(
                        h, base, step_i, i, g, kind, tj, slab_verts
                    ),
                )
    return max(base, worst + 1)


def _dual_positive(axis: Point3, *kill: Point3) -> Point3:
    """A vector orthogonal to every kill direction with positive product
    against axis."""
    if len(kill) == 1:
        k = kill[0]
        n = axis * k.dot(k) - k * k.dot(axis)
    else:
        n = kill[0].cross(kill[1])
        if n.dot(axis) < 0:
            n = n * Fraction(-1)
    if n.dot(axis) <= 0:
        raise AssumptionViolated("rays are not linearly independent")
    return n


_SCAN_CAP = 4000


def _worst_collision(
    h, base: int, step_i: Point3, i: int, g: Point3, kind: str, tj: int,
    slab_verts,
) -> int:
    """Largest min(source level, target level) over colliding pairs of
    (translated source corner slab, target slab), or base-1 if none.

    Both scans terminate through linear gauges: one vanishing on the
    target's per-level translation directions but growing along the
    source ray (so the source eventually sails past every target
    level), and the all-ones functional growing on both (so for a fixed
    source the target eventually sails past it)."""
    if kind == "c":
        t_dirs = [h.rays[tj] * h.ray_data[tj].lo]
    else:
        jn = (tj + 1) % 3
        t_dirs = [
            h.rays[tj] * h.ray_data[tj].lo,
            h.rays[jn] * h.ray_data[jn].lo,
        ]
    t_base = slab_verts(kind, tj, base)
    if t_base is None:
        return base - 1
    ones = Point3.of(1, 1, 1)
    n = _dual_positive(step_i, *t_dirs)
    t_max = max(n.dot(v) for v in t_base)

    worst = base - 1
    a = base
    while True:
        if a > base + _SCAN_CAP:
            raise AssumptionViolated("separation scan failed to terminate")
        sp = slab_verts("c", i, a)
        src = [v + g for v in sp]
        if min(n.dot(v) for v in src) > t_max:
            break
        s_hi = max(ones.dot(v) for v in src)
        b = base
        while True:
            if b > base + _SCAN_CAP:
                raise AssumptionViolated(
                    "separation scan failed to terminate"
                )
            tgt = slab_verts(kind, tj, b)
            if tgt is None:
                break
            if min(ones.dot(v) for v in tgt) > s_hi:
                break
            if minkowski_difference_contains_origin(tgt, src):
                worst = max(worst, min(a, b))
            b += 1
        a += 1
    return worst


def gap_region(
    h, cls: Optional[VertexClassification] = None
) -> GapRegion:
    """Assemble the finite description of the whole gap set."""
    if cls is None:
        cls = classify(h)
    kappa = overlap_level(h, cls)
    sep: Optional[int]
    try:
        sep = separation_level(h, cls)
    except (UnsupportedCase, NotSimplicial):
        sep = None
    base = max(1, sep if sep is not None else kappa)

    t = len(h.rays)
    hull_part = convex_hull(
        [ORIGIN]
        + [ray_point(h, cls, i) * base for i in range(t)]
        + [ray_point(h, cls, i) * (base + 1) for i in range(t)]
    )
    slab_set = slabs(h, cls, base)
    periods = {s.ray: ray_period(h, s.ray) for s in slab_set.corner}
    period_vectors = {
        i: h.rays[i] * (h.ray_data[i].lo * periods[i]) for i in periods
    }
    period_slabs: list[CornerSlab] = []
    for s in slab_set.corner:
        for k in range(base, base + periods[s.ray]):
            period_slabs.append(
                s if k == base else _corner_slab(h, cls, s.ray, k)
            )
    return GapRegion(
        overlap=kappa,
        separation=sep,
        base_level=base,
        hull_part=hull_part,
        corner_templates=slab_set.corner,
        bridge_templates=slab_set.bridge,
        period_vectors=period_vectors,
        periods=periods,
        period_slabs=tuple(period_slabs),
    )


def gap_points(h, region: GapRegion, extra_periods: int = 2) -> list[Point3]:
    """All integer gap points up to the base level plus the requested
    number of slab periods: cone points no dilation of the body reaches.
    Sorted lexicographically."""
    from .semigroup import semigroup_shells

    if extra_periods < 0:
        raise BadParameter("extra_periods must be nonnegative")
    maxh = max(region.periods.values(), default=1)
    bound = region.base_level + extra_periods * maxh + 1
    out = [
        Point3.of(*p)
        for _s, p, ok in semigroup_shells(h, 1, bound)
        if not ok
    ]
    out.sort(key=lambda p: p.as_tuple())
    return out
