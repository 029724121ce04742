"""Exact rational geometry for convex polytopes in three dimensions.

Everything here is computed over the rationals: points carry Fraction
coordinates, facet half-spaces are stored with primitive integer normals,
and every predicate reduces to integer sign tests.  No floating point is
used anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Iterator, Optional, Sequence

from .errors import AssumptionViolated, BadParameter, DegenerateInput

Rat = Fraction


def _frac(value) -> Fraction:
    """Exact conversion; strings like '33/16' and '2.2' parse exactly."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, float):
        raise BadParameter(
            "refusing float %r: pass an int, Fraction, or string" % (value,)
        )
    return Fraction(value)


@dataclass(frozen=True, slots=True)
class Point3:
    """A point (or vector) in Q^3."""

    x: Fraction
    y: Fraction
    z: Fraction

    @staticmethod
    def of(x, y, z) -> "Point3":
        return Point3(_frac(x), _frac(y), _frac(z))

    @staticmethod
    def from_seq(seq) -> "Point3":
        a, b, c = seq
        return Point3.of(a, b, c)

    def __add__(self, other: "Point3") -> "Point3":
        return Point3(self.x + other.x, self.y + other.y, self.z + other.z)

    def __sub__(self, other: "Point3") -> "Point3":
        return Point3(self.x - other.x, self.y - other.y, self.z - other.z)

    def __mul__(self, k) -> "Point3":
        k = _frac(k)
        return Point3(self.x * k, self.y * k, self.z * k)

    __rmul__ = __mul__

    def dot(self, other: "Point3") -> Fraction:
        return self.x * other.x + self.y * other.y + self.z * other.z

    def cross(self, other: "Point3") -> "Point3":
        return Point3(
            self.y * other.z - self.z * other.y,
            self.z * other.x - self.x * other.z,
            self.x * other.y - self.y * other.x,
        )

    def is_zero(self) -> bool:
        return not (self.x or self.y or self.z)

    def is_nonnegative(self) -> bool:
        return self.x >= 0 and self.y >= 0 and self.z >= 0

    def is_integral(self) -> bool:
        return (
            self.x.denominator == 1
            and self.y.denominator == 1
            and self.z.denominator == 1
        )

    def int_tuple(self) -> tuple[int, int, int]:
        if not self.is_integral():
            raise BadParameter("point %s is not integral" % (self,))
        return (int(self.x), int(self.y), int(self.z))

    def as_tuple(self) -> tuple[Fraction, Fraction, Fraction]:
        return (self.x, self.y, self.z)

    def denominator_lcm(self) -> int:
        return lcm(self.x.denominator, self.y.denominator, self.z.denominator)

    def __repr__(self) -> str:
        return "(%s, %s, %s)" % (self.x, self.y, self.z)


ORIGIN = Point3(Fraction(0), Fraction(0), Fraction(0))


@dataclass(frozen=True, slots=True)
class HalfSpace:
    """Closed half-space {p : normal . p >= offset} with a primitive
    integer normal; the boundary plane carries the facet."""

    normal: Point3
    offset: Fraction

    def int_tuple(self) -> tuple[int, int, int, int]:
        n = self.normal
        return (int(n.x), int(n.y), int(n.z), int(self.offset))

    def value(self, p: Point3) -> Fraction:
        return self.normal.dot(p) - self.offset


def _primitive_halfspace(a: Sequence, c) -> HalfSpace:
    """Normalize (a, c) with rational entries to primitive integers,
    preserving the solution set of a.x >= c."""
    fa = [_frac(v) for v in a]
    fc = _frac(c)
    mult = lcm(
        fa[0].denominator, fa[1].denominator, fa[2].denominator, fc.denominator
    )
    ia = [int(v * mult) for v in fa]
    ic = int(fc * mult)
    g = gcd(gcd(abs(ia[0]), abs(ia[1])), gcd(abs(ia[2]), abs(ic)))
    if g == 0:
        raise BadParameter("zero normal in half-space")
    if g > 1:
        ia = [v // g for v in ia]
        ic //= g
    return HalfSpace(
        Point3(Fraction(ia[0]), Fraction(ia[1]), Fraction(ia[2])), Fraction(ic)
    )


@dataclass(frozen=True, slots=True)
class RayHit:
    """Intersection of the ray {t * direction : t >= 0} with a polytope:
    empty, a single point, or a segment, with the scale interval [lo, hi]."""

    kind: str  # "empty" | "point" | "segment"
    lo: Optional[Fraction]
    hi: Optional[Fraction]

    def is_point(self) -> bool:
        return self.kind == "point"

    def is_segment(self) -> bool:
        return self.kind == "segment"


@dataclass(frozen=True, slots=True)
class SegmentHit:
    """Intersection of a closed segment with one facet of a polytope."""

    kind: str  # "empty" | "point" | "segment"
    points: tuple[Point3, ...]


@dataclass(frozen=True, slots=True)
class OriginPoint:
    """Degenerate zero-fold dilation: the single point at the origin."""

    point: Point3 = ORIGIN
    is_degenerate: bool = True


class Polyhedron:
    """Bounded full-dimensional convex polytope with both vertex and facet
    descriptions plus their incidence.

    Construct through :func:`convex_hull`; the raw constructor trusts its
    arguments (used internally by measure-preserving transforms).
    """

    __slots__ = ("vertices", "facets", "facet_vertices", "edges", "_int_facets")

    def __init__(self, vertices, facets, facet_vertices, edges):
        self.vertices: tuple[Point3, ...] = tuple(vertices)
        self.facets: tuple[HalfSpace, ...] = tuple(facets)
        self.facet_vertices: tuple[tuple[int, ...], ...] = tuple(
            tuple(c) for c in facet_vertices
        )
        self.edges: tuple[tuple[int, int], ...] = tuple(
            tuple(e) for e in edges
        )
        self._int_facets: Optional[tuple[tuple[int, int, int, int], ...]] = None

    @property
    def int_facets(self) -> tuple[tuple[int, int, int, int], ...]:
        if self._int_facets is None:
            self._int_facets = tuple(f.int_tuple() for f in self.facets)
        return self._int_facets

    def adjacent_vertices(self, vi: int) -> list[int]:
        out = set()
        for a, b in self.edges:
            if a == vi:
                out.add(b)
            elif b == vi:
                out.add(a)
        return sorted(out)

    def bounding_box(self) -> tuple[Point3, Point3]:
        xs = [v.x for v in self.vertices]
        ys = [v.y for v in self.vertices]
        zs = [v.z for v in self.vertices]
        return (
            Point3(min(xs), min(ys), min(zs)),
            Point3(max(xs), max(ys), max(zs)),
        )

    def __repr__(self) -> str:
        return "Polyhedron(%d vertices, %d facets)" % (
            len(self.vertices),
            len(self.facets),
        )


def _sign(v: int) -> int:
    return (v > 0) - (v < 0)


def _orient(a, b, c, d) -> int:
    """Sign of det[b-a; c-a; d-a] for integer triples: positive when d is
    on the counterclockwise-normal side of triangle (a, b, c)."""
    ux, uy, uz = b[0] - a[0], b[1] - a[1], b[2] - a[2]
    vx, vy, vz = c[0] - a[0], c[1] - a[1], c[2] - a[2]
    wx, wy, wz = d[0] - a[0], d[1] - a[1], d[2] - a[2]
    det = (
        ux * (vy * wz - vz * wy)
        - uy * (vx * wz - vz * wx)
        + uz * (vx * wy - vy * wx)
    )
    return _sign(det)


def _orient_ref4(a, b, c, ref4) -> int:
    """Same as _orient against the point ref4/4, kept integral by scaling
    the last row; used with the interior reference of the start simplex."""
    ux, uy, uz = b[0] - a[0], b[1] - a[1], b[2] - a[2]
    vx, vy, vz = c[0] - a[0], c[1] - a[1], c[2] - a[2]
    wx = ref4[0] - 4 * a[0]
    wy = ref4[1] - 4 * a[1]
    wz = ref4[2] - 4 * a[2]
    det = (
        ux * (vy * wz - vz * wy)
        - uy * (vx * wz - vz * wx)
        + uz * (vx * wy - vy * wx)
    )
    return _sign(det)


def _initial_simplex(pts) -> Optional[list[int]]:
    """Indices of four affinely independent points, or None."""
    n = len(pts)
    i0 = 0
    i1 = next((i for i in range(n) if pts[i] != pts[i0]), None)
    if i1 is None:
        return None
    a, b = pts[i0], pts[i1]
    ab = (b[0] - a[0], b[1] - a[1], b[2] - a[2])
    i2 = None
    for i in range(n):
        p = pts[i]
        ap = (p[0] - a[0], p[1] - a[1], p[2] - a[2])
        cx = ab[1] * ap[2] - ab[2] * ap[1]
        cy = ab[2] * ap[0] - ab[0] * ap[2]
        cz = ab[0] * ap[1] - ab[1] * ap[0]
        if cx or cy or cz:
            i2 = i
            break
    if i2 is None:
        return None
    i3 = next(
        (i for i in range(n) if _orient(a, b, pts[i2], pts[i]) != 0), None
    )
    if i3 is None:
        return None
    return [i0, i1, i2, i3]


def _triangulated_hull(pts) -> list[tuple[int, int, int]]:
    """Outward-oriented triangles covering the hull boundary of integer
    points; coplanar regions come out as multiple triangles."""
    simplex = _initial_simplex(pts)
    if simplex is None:
        raise DegenerateInput("points do not span a three-dimensional body")
    s0, s1, s2, s3 = simplex
    ref4 = tuple(
        pts[s0][i] + pts[s1][i] + pts[s2][i] + pts[s3][i] for i in range(3)
    )

    def outward(tri) -> tuple[int, int, int]:
        i, j, k = tri
        if _orient_ref4(pts[i], pts[j], pts[k], ref4) > 0:
            return (i, k, j)
        return tri

    faces: set[tuple[int, int, int]] = {
        outward(t)
        for t in ((s0, s1, s2), (s0, s1, s3), (s0, s2, s3), (s1, s2, s3))
    }
    placed = set(simplex)
    for idx in range(len(pts)):
        if idx in placed:
            continue
        q = pts[idx]
        visible = [
            f for f in faces if _orient(pts[f[0]], pts[f[1]], pts[f[2]], q) > 0
        ]
        if not visible:
            continue
        directed = set()
        for i, j, k in visible:
            directed.update(((i, j), (j, k), (k, i)))
        horizon = [(u, v) for (u, v) in directed if (v, u) not in directed]
        faces.difference_update(visible)
        for u, v in horizon:
            faces.add(outward((u, v, idx)))
    return sorted(faces)


def _plane_key(pts, tri) -> tuple[int, int, int, int]:
    """Canonical primitive (normal, offset) of a triangle's outward plane."""
    a, b, c = pts[tri[0]], pts[tri[1]], pts[tri[2]]
    ux, uy, uz = b[0] - a[0], b[1] - a[1], b[2] - a[2]
    vx, vy, vz = c[0] - a[0], c[1] - a[1], c[2] - a[2]
    nx = uy * vz - uz * vy
    ny = uz * vx - ux * vz
    nz = ux * vy - uy * vx
    off = nx * a[0] + ny * a[1] + nz * a[2]
    g = gcd(gcd(abs(nx), abs(ny)), gcd(abs(nz), abs(off)))
    return (nx // g, ny // g, nz // g, off // g)


def _hull2d_strict(points2d: list[tuple[int, int, int]]) -> list[int]:
    """Monotone chain over (u, w, id) triples; returns ids of the strict
    hull corners in counterclockwise order (collinear points dropped)."""
    pts = sorted(set(points2d))
    if len(pts) < 3:
        return [p[2] for p in pts]

    def cross(o, a, b) -> int:
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])

    lower: list = []
    for p in pts:
        while len(lower) >= 2 and cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper: list = []
    for p in reversed(pts):
        while len(upper) >= 2 and cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return [p[2] for p in lower[:-1] + upper[:-1]]


def convex_hull(points: Iterable) -> Polyhedron:
    """Exact convex hull. Returns the polytope with interior and
    facet-interior points discarded, coplanar faces merged into facets,
    and vertex/facet/edge incidence filled in."""
    src = []
    seen = set()
    for p in points:
        if not isinstance(p, Point3):
            p = Point3.from_seq(p)
        if p not in seen:
            seen.add(p)
            src.append(p)
    if len(src) < 4:
        raise DegenerateInput("need at least four distinct points")

    scale = 1
    for p in src:
        scale = lcm(scale, p.denominator_lcm())
    ipts = [
        (int(p.x * scale), int(p.y * scale), int(p.z * scale)) for p in src
    ]

    tris = _triangulated_hull(ipts)
    groups: dict[tuple[int, int, int, int], set[int]] = {}
    for tri in tris:
        groups.setdefault(_plane_key(ipts, tri), set()).update(tri)

    facet_cycles: list[list[int]] = []
    planes: list[tuple[int, int, int, int]] = []
    for key in sorted(groups):
        nx, ny, nz, _off = key
        axis = max(range(3), key=lambda i: abs((nx, ny, nz)[i]))
        keep = [(axis + 1) % 3, (axis + 2) % 3]
        flat = [
            (ipts[i][keep[0]], ipts[i][keep[1]], i) for i in groups[key]
        ]
        cycle = _hull2d_strict(flat)
        if len(cycle) < 3:
            raise AssumptionViolated("facet degenerated to fewer than 3 corners")
        if (nx, ny, nz)[axis] < 0:
            cycle.reverse()
        facet_cycles.append(cycle)
        planes.append(key)

    used = sorted({i for cyc in facet_cycles for i in cyc})
    remap = {old: new for new, old in enumerate(used)}
    verts = [
        Point3(
            Fraction(ipts[i][0], scale),
            Fraction(ipts[i][1], scale),
            Fraction(ipts[i][2], scale),
        )
        for i in used
    ]

    order = sorted(
        range(len(verts)), key=lambda i: verts[i].as_tuple()
    )
    final_pos = {old: pos for pos, old in enumerate(order)}
    verts = [verts[i] for i in order]

    halves = []
    cycles = []
    for key, cyc in zip(planes, facet_cycles):
        nx, ny, nz, off = key
        # inward form: -n . x >= -off, in original (unscaled) coordinates
        halves.append(
            _primitive_halfspace((-nx, -ny, -nz), Fraction(-off, scale))
        )
        cycles.append([final_pos[remap[i]] for i in cyc])

    facet_order = sorted(
        range(len(halves)), key=lambda i: halves[i].int_tuple()
    )
    halves = [halves[i] for i in facet_order]
    cycles = [cycles[i] for i in facet_order]

    edge_set = set()
    for cyc in cycles:
        for a, b in zip(cyc, cyc[1:] + cyc[:1]):
            edge_set.add((min(a, b), max(a, b)))
    edges = sorted(edge_set)

    return Polyhedron(verts, halves, cycles, edges)


def contains(
    poly: Polyhedron,
    p: Point3,
    mode: str = "closed",
    exempt_facets: Sequence[int] = (),
) -> bool:
    """Membership test.  mode='closed' uses every facet non-strictly;
    mode='relative_interior' is strict except on the exempt facets (those
    whose planes also support the ambient cone)."""
    if mode not in ("closed", "relative_interior"):
        raise BadParameter("unknown containment mode %r" % (mode,))
    exempt = frozenset(exempt_facets)
    for idx, facet in enumerate(poly.facets):
        v = facet.value(p)
        if mode == "closed" or idx in exempt:
            if v < 0:
                return False
        elif v <= 0:
            return False
    return True


def cone_supporting_facets(poly: Polyhedron) -> tuple[int, ...]:
    """Indices of facets whose plane passes through the origin; these are
    exactly the facets lying inside facets of the spanned cone."""
    return tuple(
        i for i, f in enumerate(poly.facets) if f.offset == 0
    )


def ray_intersect(poly: Polyhedron, direction: Point3) -> RayHit:
    """Scale interval {t >= 0 : t*direction in poly}."""
    if not isinstance(direction, Point3):
        direction = Point3.from_seq(direction)
    if direction.is_zero():
        raise BadParameter("zero direction")
    lo = Fraction(0)
    hi: Optional[Fraction] = None
    for facet in poly.facets:
        nd = facet.normal.dot(direction)
        c = facet.offset
        if nd == 0:
            if c > 0:
                return RayHit("empty", None, None)
        elif nd > 0:
            bound = c / nd
            if bound > lo:
                lo = bound
        else:
            bound = c / nd
            if hi is None or bound < hi:
                hi = bound
    if hi is None:
        raise AssumptionViolated("unbounded ray interval in a bounded polytope")
    if lo > hi:
        return RayHit("empty", None, None)
    if lo == hi:
        return RayHit("point", lo, hi)
    return RayHit("segment", lo, hi)


def dilate(poly: Polyhedron, k) -> Polyhedron | OriginPoint:
    """Scale about the origin by a nonnegative rational factor."""
    k = _frac(k)
    if k < 0:
        raise BadParameter("dilation factor must be nonnegative")
    if k == 0:
        return OriginPoint()
    verts = [v * k for v in poly.vertices]
    halves = [
        _primitive_halfspace(f.normal.as_tuple(), f.offset * k)
        for f in poly.facets
    ]
    return Polyhedron(verts, halves, poly.facet_vertices, poly.edges)


def translate(poly: Polyhedron, v: Point3) -> Polyhedron:
    """Translate by a rational vector."""
    if not isinstance(v, Point3):
        v = Point3.from_seq(v)
    verts = [p + v for p in poly.vertices]
    halves = [
        _primitive_halfspace(
            f.normal.as_tuple(), f.offset + f.normal.dot(v)
        )
        for f in poly.facets
    ]
    return Polyhedron(verts, halves, poly.facet_vertices, poly.edges)


def hull_union(a: Polyhedron, b: Polyhedron) -> Polyhedron:
    """Convex hull of the union of two polytopes."""
    return convex_hull(list(a.vertices) + list(b.vertices))


def clip_segment_facets(
    poly: Polyhedron, a: Point3, b: Point3
) -> Optional[tuple[Fraction, tuple[int, ...], Fraction, tuple[int, ...]]]:
    """Parameter interval [t0, t1] of {a + t(b-a) : 0 <= t <= 1} inside
    the polytope together with the facet indices pinning each end (empty
    when the end is the segment's own endpoint), or None on a miss."""
    t0, t1 = Fraction(0), Fraction(1)
    f0: list[int] = []
    f1: list[int] = []
    for idx, facet in enumerate(poly.facets):
        va = facet.value(a)
        vb = facet.value(b)
        dv = vb - va
        if dv == 0:
            if va < 0:
                return None
            continue
        bound = -va / dv
        if dv > 0:
            # feasible for t >= -va/dv
            if bound > t0:
                t0, f0 = bound, [idx]
            elif bound == t0:
                f0.append(idx)
        else:
            if bound < t1:
                t1, f1 = bound, [idx]
            elif bound == t1:
                f1.append(idx)
        if t0 > t1:
            return None
    return (t0, tuple(f0), t1, tuple(f1))


def clip_segment(
    poly: Polyhedron, a: Point3, b: Point3
) -> Optional[tuple[Fraction, Fraction]]:
    """Parameter interval [t0, t1] of {a + t(b-a) : 0 <= t <= 1} inside
    the polytope, or None when they miss each other."""
    hit = clip_segment_facets(poly, a, b)
    if hit is None:
        return None
    t0, _, t1, _ = hit
    return (t0, t1)


def segment_plane_hit(
    poly: Polyhedron, facet_index: int, a: Point3, b: Point3
) -> SegmentHit:
    """Intersection of the closed segment [a, b] with one facet of the
    polytope (the boundary plane restricted to the facet's 2D extent)."""
    facet = poly.facets[facet_index]
    va = facet.value(a)
    vb = facet.value(b)
    if (va > 0 and vb > 0) or (va < 0 and vb < 0):
        return SegmentHit("empty", ())
    if va == 0 and vb == 0:
        clipped = clip_segment(poly, a, b)
        if clipped is None:
            return SegmentHit("empty", ())
        t0, t1 = clipped
        d = b - a
        p0, p1 = a + d * t0, a + d * t1
        if t0 == t1:
            return SegmentHit("point", (p0,))
        return SegmentHit("segment", (p0, p1))
    t = va / (va - vb)
    hit = a + (b - a) * t
    if contains(poly, hit):
        return SegmentHit("point", (hit,))
    return SegmentHit("empty", ())


def _ceildiv(p: int, q: int) -> int:
    return -((-p) // q)


def _frac_ceil(v: Fraction) -> int:
    return -((-v.numerator) // v.denominator)


def _frac_floor(v: Fraction) -> int:
    return v.numerator // v.denominator


def integer_points(poly: Polyhedron) -> Iterator[tuple[int, int, int]]:
    """All integer points of the polytope, column by column, in
    lexicographic order.  Pure integer arithmetic throughout."""
    lo, hi = poly.bounding_box()
    x0, x1 = _frac_ceil(lo.x), _frac_floor(hi.x)
    y0, y1 = _frac_ceil(lo.y), _frac_floor(hi.y)
    facets = poly.int_facets
    for x in range(x0, x1 + 1):
        for y in range(y0, y1 + 1):
            zlo, zhi = None, None
            feasible = True
            for ax, ay, az, c in facets:
                rem = c - ax * x - ay * y
                if az == 0:
                    if rem > 0:
                        feasible = False
                        break
                elif az > 0:
                    b = _ceildiv(rem, az)
                    if zlo is None or b > zlo:
                        zlo = b
                else:
                    b = rem // az
                    if zhi is None or b < zhi:
                        zhi = b
            if not feasible:
                continue
            if zlo is None or zhi is None:
                raise AssumptionViolated("unbounded z-column in a polytope")
            for z in range(zlo, zhi + 1):
                yield (x, y, z)


def integer_point_count(poly: Polyhedron) -> int:
    return sum(1 for _ in integer_points(poly))


def _column_interval(facets, x: int, y: int) -> Optional[tuple[int, int]]:
    """Integer z-range of the (x, y) column inside a facet system."""
    zlo, zhi = None, None
    for ax, ay, az, c in facets:
        rem = c - ax * x - ay * y
        if az == 0:
            if rem > 0:
                return None
        elif az > 0:
            b = _ceildiv(rem, az)
            if zlo is None or b > zlo:
                zlo = b
        else:
            b = rem // az
            if zhi is None or b < zhi:
                zhi = b
    if zlo is None or zhi is None:
        raise AssumptionViolated("unbounded z-column in a polytope")
    if zlo > zhi:
        return None
    return (zlo, zhi)


def shell_integer_points(
    outer: Polyhedron, inner: Optional[Polyhedron]
) -> Iterator[tuple[int, int, int]]:
    """Integer points of outer minus those of inner (inner may be None or
    not nested; subtraction is per point, done column by column)."""
    lo, hi = outer.bounding_box()
    x0, x1 = _frac_ceil(lo.x), _frac_floor(hi.x)
    y0, y1 = _frac_ceil(lo.y), _frac_floor(hi.y)
    of = outer.int_facets
    inf = inner.int_facets if inner is not None else None
    for x in range(x0, x1 + 1):
        for y in range(y0, y1 + 1):
            oc = _column_interval(of, x, y)
            if oc is None:
                continue
            zlo, zhi = oc
            ic = _column_interval(inf, x, y) if inf is not None else None
            if ic is None:
                for z in range(zlo, zhi + 1):
                    yield (x, y, z)
            else:
                ilo, ihi = ic
                for z in range(zlo, min(zhi, ilo - 1) + 1):
                    yield (x, y, z)
                for z in range(max(zlo, ihi + 1), zhi + 1):
                    yield (x, y, z)


def integer_points_in_hull(points: Iterable) -> list[tuple[int, int, int]]:
    """Integer points of the convex hull of a point cloud of any affine
    dimension, sorted lexicographically.  Full-dimensional clouds defer
    to integer_points; flat ones are enumerated inside their affine
    span."""
    pts: list[Point3] = []
    seen = set()
    for p in points:
        if not isinstance(p, Point3):
            p = Point3.from_seq(p)
        if p not in seen:
            seen.add(p)
            pts.append(p)
    if not pts:
        return []
    base = pts[0]
    span: list[Point3] = []
    for p in pts[1:]:
        d = p - base
        if d.is_zero():
            continue
        if not span:
            span.append(d)
        elif len(span) == 1:
            if not span[0].cross(d).is_zero():
                span.append(d)
        elif span[0].cross(span[1]).dot(d) != 0:
            span.append(d)
            break
    if len(span) == 3:
        return sorted(integer_points(convex_hull(pts)))
    if len(span) == 2:
        return _planar_integer_points(pts, base, span)
    if len(span) == 1:
        return _segment_integer_points(pts, base, span[0])
    return [base.int_tuple()] if base.is_integral() else []


def _segment_integer_points(
    pts: list[Point3], base: Point3, u: Point3
) -> list[tuple[int, int, int]]:
    """Integer points on the hull of a collinear cloud."""
    params = [(p - base).dot(u) / u.dot(u) for p in pts]
    a = base + u * min(params)
    b = base + u * max(params)
    d = b - a
    axis = max(range(3), key=lambda i: abs(d.as_tuple()[i]))
    da = d.as_tuple()[axis]
    if da == 0:
        return [a.int_tuple()] if a.is_integral() else []
    w0, w1 = sorted((a.as_tuple()[axis], b.as_tuple()[axis]))
    out = []
    for w in range(_frac_ceil(w0), _frac_floor(w1) + 1):
        p = a + d * ((w - a.as_tuple()[axis]) / da)
        if p.is_integral():
            out.append(p.int_tuple())
    return sorted(set(out))


def _planar_integer_points(
    pts: list[Point3], base: Point3, span: list[Point3]
) -> list[tuple[int, int, int]]:
    """Integer points on the hull of a coplanar cloud: solve the plane
    equation over the projection onto the two free coordinates."""
    n = span[0].cross(span[1])
    mult = n.denominator_lcm()
    nt = [int(c * mult) for c in n.as_tuple()]
    g = gcd(gcd(abs(nt[0]), abs(nt[1])), abs(nt[2]))
    nt = [c // g for c in nt]
    c_off = sum(Fraction(ni) * bi for ni, bi in zip(nt, base.as_tuple()))
    if c_off.denominator != 1:
        return []
    c_off = int(c_off)
    axis = max(range(3), key=lambda i: abs(nt[i]))
    keep = [(axis + 1) % 3, (axis + 2) % 3]
    verts2d = [
        (p.as_tuple()[keep[0]], p.as_tuple()[keep[1]]) for p in pts
    ]
    out = []
    for u, v in _polygon_integer_points(verts2d):
        rem = c_off - nt[keep[0]] * u - nt[keep[1]] * v
        q, r = divmod(rem, nt[axis])
        if r:
            continue
        coords = [0, 0, 0]
        coords[keep[0]] = u
        coords[keep[1]] = v
        coords[axis] = q
        out.append((coords[0], coords[1], coords[2]))
    return sorted(out)


def _polygon_integer_points(
    verts2d: list[tuple[Fraction, Fraction]]
) -> list[tuple[int, int]]:
    """Integer pairs in the convex hull of rational points in the plane,
    column by column."""
    scale = 1
    for u, v in verts2d:
        scale = lcm(scale, lcm(u.denominator, v.denominator))
    flat = [
        (int(u * scale), int(v * scale), i)
        for i, (u, v) in enumerate(verts2d)
    ]
    ring = [verts2d[i] for i in _hull2d_strict(flat)]
    if len(ring) == 1:
        u, v = ring[0]
        if u.denominator == 1 and v.denominator == 1:
            return [(int(u), int(v))]
        return []
    if len(ring) == 2:
        return _segment2d_integer_points(*ring)
    out = []
    us = [u for u, _ in ring]
    for u in range(_frac_ceil(min(us)), _frac_floor(max(us)) + 1):
        vs: list[Fraction] = []
        for (pu, pv), (qu, qv) in zip(ring, ring[1:] + ring[:1]):
            if pu == qu:
                if pu == u:
                    vs.extend((pv, qv))
            elif min(pu, qu) <= u <= max(pu, qu):
                vs.append(pv + (qv - pv) * (u - pu) / (qu - pu))
        if not vs:
            continue
        for v in range(_frac_ceil(min(vs)), _frac_floor(max(vs)) + 1):
            out.append((u, v))
    return out


def _segment2d_integer_points(
    a: tuple[Fraction, Fraction], b: tuple[Fraction, Fraction]
) -> list[tuple[int, int]]:
    du, dv = b[0] - a[0], b[1] - a[1]
    if abs(du) >= abs(dv):
        w0, w1, wa, dw = a[0], b[0], a[0], du
    else:
        w0, w1, wa, dw = a[1], b[1], a[1], dv
    w0, w1 = min(w0, w1), max(w0, w1)
    out = []
    for w in range(_frac_ceil(w0), _frac_floor(w1) + 1):
        t = (w - wa) / dw
        u, v = a[0] + du * t, a[1] + dv * t
        if u.denominator == 1 and v.denominator == 1:
            out.append((int(u), int(v)))
    return sorted(set(out))


def minkowski_difference_contains_origin(a, b) -> bool:
    """Whether two convex bodies (polytopes or vertex lists) intersect,
    decided as O in {x - y}."""
    va = a.vertices if isinstance(a, Polyhedron) else list(a)
    vb = b.vertices if isinstance(b, Polyhedron) else list(b)
    diffs = [p - q for p in va for q in vb]
    return _hull_contains_origin(diffs)


def _hull_contains_origin(points: list[Point3]) -> bool:
    """Membership of the origin in the hull of a point cloud, decided by
    searching for a separating plane among support planes (small inputs)."""
    # Any separating certificate is a face of the hull; testing the hull's
    # facets directly is simplest and exact.
    try:
        hull = convex_hull(points)
    except DegenerateInput:
        return _degenerate_hull_contains_origin(points)
    return contains(hull, ORIGIN)


def _degenerate_hull_contains_origin(points: list[Point3]) -> bool:
    """Origin membership when the cloud spans < 3 dimensions."""
    pts = sorted(set(points), key=lambda p: p.as_tuple())
    if not pts:
        return False
    base = pts[0]
    dirs = [p - base for p in pts[1:]]
    span: list[Point3] = []
    for d in dirs:
        if d.is_zero():
            continue
        if not span:
            span.append(d)
        elif len(span) == 1:
            if not span[0].cross(d).is_zero():
                span.append(d)
    if not span:  # single point
        return base.is_zero()
    if len(span) == 1:  # segment: O = base + t*u with t in [0, 1]-range
        u = span[0]
        ts = []
        for comp_b, comp_u in (
            (base.x, u.x),
            (base.y, u.y),
            (base.z, u.z),
        ):
            if comp_u == 0:
                if comp_b != 0:
                    return False
            else:
                ts.append(-comp_b / comp_u)
        if not ts or any(t != ts[0] for t in ts):
            return False
        t = ts[0]
        lo = min(Fraction(0), *(d.dot(span[0]) / span[0].dot(span[0]) for d in dirs))
        hi = max(Fraction(0), *(d.dot(span[0]) / span[0].dot(span[0]) for d in dirs))
        return lo <= t <= hi
    # planar cloud: drop to 2D and run an exact point-in-convex-polygon test
    n = span[0].cross(span[1])
    if base.dot(n) != 0:
        return False
    axis = max(range(3), key=lambda i: abs(n.as_tuple()[i]))
    keep = [(axis + 1) % 3, (axis + 2) % 3]
    flat = sorted({(p.as_tuple()[keep[0]], p.as_tuple()[keep[1]]) for p in pts})

    def cross2(o, a, b):
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])

    lower: list = []
    for p in flat:
        while len(lower) >= 2 and cross2(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper: list = []
    for p in reversed(flat):
        while len(upper) >= 2 and cross2(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    ring = lower[:-1] + upper[:-1]
    if len(ring) == 1:
        return ring[0] == (0, 0)
    if len(ring) == 2:
        a, b = ring
        o = (Fraction(0), Fraction(0))
        if cross2(a, b, o) != 0:
            return False
        inside = min(a[0], b[0]) <= 0 <= max(a[0], b[0]) and min(
            a[1], b[1]
        ) <= 0 <= max(a[1], b[1])
        return inside
    o = (Fraction(0), Fraction(0))
    for a, b in zip(ring, ring[1:] + ring[:1]):
        if cross2(a, b, o) < 0:
            return False
    return True
