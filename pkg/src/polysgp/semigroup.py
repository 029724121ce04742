"""Affine semigroups cut out by integer dilations of a rational polytope.

Given a bounded full-dimensional polytope B in the nonnegative orthant
with the origin outside, the semigroup studied here is

    S = union over j >= 0 of (j * B) intersected with N^3,

together with its spanned cone, extremal rays, minimal generating set,
Apery sets of the ray generators, and the closure semigroup (elements of
the cone whose translates by every minimal generator land in S).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import ceil, gcd, lcm
from typing import Iterator, Optional, Sequence

from .errors import (
    AssumptionViolated,
    BadParameter,
    DegenerateInput,
    NotSimplicial,
    OriginInside,
    OutsideCone,
    UnsupportedCase,
)
from .geometry import (
    ORIGIN,
    Point3,
    Polyhedron,
    RayHit,
    contains,
    convex_hull,
    dilate,
    ray_intersect,
    shell_integer_points,
)

IntVec = tuple[int, int, int]


def _as_point(p) -> Point3:
    return p if isinstance(p, Point3) else Point3.from_seq(p)


def _as_intvec(p) -> IntVec:
    if isinstance(p, Point3):
        return p.int_tuple()
    t = tuple(p)
    if len(t) != 3 or not all(isinstance(v, int) for v in t):
        raise BadParameter("expected an integer 3-vector, got %r" % (p,))
    return t  # type: ignore[return-value]


def _primitive_direction(v: Point3) -> IntVec:
    mult = v.denominator_lcm()
    ix, iy, iz = int(v.x * mult), int(v.y * mult), int(v.z * mult)
    g = gcd(gcd(abs(ix), abs(iy)), abs(iz))
    return (ix // g, iy // g, iz // g)


@dataclass(frozen=True)
class GeneratorSet:
    """Minimal generating set of the semigroup (or a partial one when the
    search hit its layer budget before certifying)."""

    generators: tuple[Point3, ...]
    layer_index: tuple[int, ...]
    certified: bool
    layers_scanned: int

    def int_tuples(self) -> list[IntVec]:
        return [g.int_tuple() for g in self.generators]


@dataclass(frozen=True)
class AperyBasis:
    """Points of the semigroup whose translate by each ray generator
    leaves it, with the maximal ones under the semigroup order."""

    elements: tuple[Point3, ...]
    maximal_elements: tuple[Point3, ...]
    complete: bool


class SemigroupHandle:
    """Immutable computed view of one polytope semigroup.

    Holds the body, its extremal rays in fan (cyclic) order, the per-ray
    chords, and, for three-ray cones, the smallest semigroup element on
    each ray.  Pure queries (`member`) are thread-safe.
    """

    __slots__ = (
        "body",
        "rays",
        "simplicial",
        "ray_data",
        "ray_generators",
        "_near",
        "_far",
        "_flat",
        "_span_hull",
        "_sum_min",
        "_sum_max",
    )

    def __init__(self, body, rays, simplicial, ray_data, ray_generators):
        self.body: Polyhedron = body
        self.rays: tuple[Point3, ...] = rays
        self.simplicial: bool = simplicial
        self.ray_data: tuple[RayHit, ...] = ray_data
        self.ray_generators: Optional[tuple[Point3, ...]] = ray_generators
        near, far, flat = [], [], []
        for ax, ay, az, c in body.int_facets:
            if c > 0:
                near.append((ax, ay, az, c))
            elif c < 0:
                far.append((ax, ay, az, c))
            else:
                flat.append((ax, ay, az))
        if not near:
            raise AssumptionViolated(
                "no facet separates the origin from the body"
            )
        self._near = tuple(near)
        self._far = tuple(far)
        self._flat = tuple(flat)
        self._span_hull: Optional[Polyhedron] = None
        sums = [v.x + v.y + v.z for v in body.vertices]
        self._sum_min: Fraction = min(sums)
        self._sum_max: Fraction = max(sums)

    @property
    def span_hull(self) -> Polyhedron:
        """Hull of the body together with the origin; its dilations nest
        and sweep out the cone."""
        if self._span_hull is None:
            self._span_hull = convex_hull(
                [ORIGIN] + list(self.body.vertices)
            )
        return self._span_hull

    def ray_chord_periods(self) -> list[int]:
        """For each ray whose chord is a single point P, the least h with
        h*P integral; segment-chord rays contribute nothing."""
        out = []
        for hit in self.ray_data:
            if hit.kind == "point":
                out.append(hit.lo.denominator)
        return out

    def period(self) -> int:
        """lcm of the point-chord denominators (1 when every chord is a
        segment); the vertical period of the far gap structure."""
        ps = self.ray_chord_periods()
        return lcm(*ps) if ps else 1


def dilation_interval(
    h: SemigroupHandle, p: IntVec
) -> Optional[tuple[int, Optional[int]]]:
    """Integer bounds [lo, hi] on dilation factors k >= 1 with p in k*B,
    or None when p violates a through-origin facet.  hi may undershoot
    lo, which means no integer dilation contains p."""
    x, y, z = p
    for ax, ay, az in h._flat:
        if ax * x + ay * y + az * z < 0:
            return None
    lo = 1
    for ax, ay, az, c in h._far:
        v = ax * x + ay * y + az * z
        k = -((-v) // c)
        if k > lo:
            lo = k
    hi: Optional[int] = None
    for ax, ay, az, c in h._near:
        v = ax * x + ay * y + az * z
        k = v // c
        if hi is None or k < hi:
            hi = k
    return (lo, hi)


def member_int(h: SemigroupHandle, p: IntVec) -> tuple[bool, Optional[int]]:
    """Fast membership on raw integer triples; no cone diagnosis, points
    outside the cone simply report False."""
    x, y, z = p
    if x < 0 or y < 0 or z < 0:
        return (False, None)
    if x == 0 and y == 0 and z == 0:
        return (True, 0)
    iv = dilation_interval(h, p)
    if iv is None:
        return (False, None)
    lo, hi = iv
    if hi is not None and lo <= hi:
        return (True, lo)
    return (False, None)


def in_cone_int(h: SemigroupHandle, p: IntVec) -> bool:
    """Exact test against the spanned cone (union of all real dilations)."""
    x, y, z = p
    if x < 0 or y < 0 or z < 0:
        return False
    if x == 0 and y == 0 and z == 0:
        return True
    for ax, ay, az in h._flat:
        if ax * x + ay * y + az * z < 0:
            return False
    real_lo = Fraction(0)
    for ax, ay, az, c in h._far:
        v = Fraction(ax * x + ay * y + az * z, c)
        if v > real_lo:
            real_lo = v
    real_hi: Optional[Fraction] = None
    for ax, ay, az, c in h._near:
        v = Fraction(ax * x + ay * y + az * z, c)
        if real_hi is None or v < real_hi:
            real_hi = v
    return real_hi is not None and real_lo <= real_hi and real_hi > 0


def build(vertices: Sequence) -> SemigroupHandle:
    """Validate the input polytope and compute the semigroup view.

    The vertices must span a bounded full-dimensional polytope with
    nonnegative rational coordinates; the origin must stay outside (an
    origin inside would make the semigroup the whole cone, reported as
    OriginInside rather than silently degenerating the machinery).
    """
    pts = [_as_point(p) for p in vertices]
    if len(pts) < 4:
        raise DegenerateInput("need at least four vertices")
    for p in pts:
        if not p.is_nonnegative():
            raise BadParameter("vertex %s has a negative coordinate" % (p,))
    body = convex_hull(pts)
    if contains(body, ORIGIN):
        raise OriginInside("the origin lies in the polytope")

    # Extremal rays: vertex directions meet the plane x+y+z = 1 in a 2D
    # point cloud whose strict hull corners, in ccw order, are the rays.
    dirs: dict[IntVec, Point3] = {}
    for v in body.vertices:
        d = _primitive_direction(v)
        dirs.setdefault(d, Point3.of(*d))
    keys = sorted(dirs)
    mult = 1
    cross = []
    for d in keys:
        s = d[0] + d[1] + d[2]
        cross.append((Fraction(d[0], s), Fraction(d[1], s)))
    for cx, cy in cross:
        mult = lcm(mult, cx.denominator, cy.denominator)
    flat = [
        (int(cx * mult), int(cy * mult), i)
        for i, (cx, cy) in enumerate(cross)
    ]
    ring = _hull2d_ccw(flat)
    if len(ring) < 3:
        raise DegenerateInput("vertex directions span fewer than 3 rays")
    start = min(range(len(ring)), key=lambda i: keys[ring[i]])
    ring = ring[start:] + ring[:start]
    rays = tuple(Point3.of(*keys[i]) for i in ring)

    ray_data = tuple(ray_intersect(body, r) for r in rays)
    for hit in ray_data:
        if hit.kind == "empty":
            raise AssumptionViolated("extremal ray misses the body")

    simplicial = len(rays) == 3
    handle = SemigroupHandle(body, rays, simplicial, ray_data, None)
    if simplicial:
        handle.ray_generators = tuple(
            _smallest_ray_point(handle, i) for i in range(len(rays))
        )
    return handle


def _hull2d_ccw(points: list[tuple[int, int, int]]) -> list[int]:
    """Strict convex hull of (u, w, id) triples, returning ids of the
    corners counterclockwise."""
    pts = sorted(set(points))
    if len(pts) < 3:
        return [p[2] for p in pts]

    def cr(o, a, b) -> int:
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])

    lower: list = []
    for p in pts:
        while len(lower) >= 2 and cr(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper: list = []
    for p in reversed(pts):
        while len(upper) >= 2 and cr(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return [p[2] for p in lower[:-1] + upper[:-1]]


def _smallest_ray_point(h: SemigroupHandle, i: int) -> Point3:
    """Least multiple m of the primitive ray direction with m*d in the
    semigroup; for a point chord at lambda = a/b this is m = a."""
    d = h.rays[i].int_tuple()
    hit = h.ray_data[i]
    lo, hi = hit.lo, hit.hi
    if lo == hi:
        cap = lo.numerator
    else:
        # beyond lo*hi/(hi-lo) every multiple admits an integer dilation
        cap = ceil(lo * hi / (hi - lo))
    m = 1
    while m <= cap + 1:
        p = (m * d[0], m * d[1], m * d[2])
        ok, _ = member_int(h, p)
        if ok:
            return Point3.of(*p)
        m += 1
    raise AssumptionViolated("no semigroup point found on an extremal ray")


def ray_generator(h: SemigroupHandle, i: int) -> Point3:
    """Smallest (in ray parameter) semigroup element on ray i."""
    if not h.simplicial:
        raise NotSimplicial("ray generators are kept for three-ray cones")
    if not 0 <= i < len(h.rays):
        raise BadParameter("ray index %d out of range" % i)
    return h.ray_generators[i]


def member(h: SemigroupHandle, p) -> tuple[bool, Optional[int]]:
    """Membership of an integer point, with the least dilation factor as
    witness; the origin is a member at dilation 0.

    Raises OutsideCone for points outside the spanned cone, so callers
    can tell gaps (inside the cone, outside the semigroup) apart from
    points no dilation could ever reach.
    """
    pv = _as_intvec(p)
    ok, k = member_int(h, pv)
    if ok:
        return (True, k)
    if not in_cone_int(h, pv):
        raise OutsideCone("%s is outside the spanned cone" % (pv,))
    return (False, None)


def semigroup_shells(
    h: SemigroupHandle, first: int, last: int
) -> Iterator[tuple[int, IntVec, bool]]:
    """Integer cone points with real entry level in (first-1, last],
    reported shell by shell as (shell, point, is_member).

    A point's shell is the least real dilation of the body reaching it,
    rounded up; members of shell s are exactly the semigroup points
    first appearing in the s-fold dilation.
    """
    inner = dilate(h.span_hull, first - 1) if first > 1 else None
    for s in range(first, last + 1):
        outer = dilate(h.span_hull, s)
        for p in shell_integer_points(outer, inner):
            if p == (0, 0, 0):
                continue
            ok, k = member_int(h, p)
            if ok and k != s:
                raise AssumptionViolated(
                    "shell %d point %s reports dilation %s" % (s, p, k)
                )
            yield (s, p, ok)
        inner = outer


def _sum3(p: IntVec) -> int:
    return p[0] + p[1] + p[2]


def minimal_generators(
    h: SemigroupHandle, budget_layers: int = 400
) -> GeneratorSet:
    """Unique minimal generating set, by a graded sieve over dilation
    shells.

    Points are collected shell by shell and judged in order of
    coordinate sum (any decomposition uses parts of strictly smaller
    sum, so every candidate is judged after all generators that could
    reduce it).  Scanning stops once the decided shells extend a full
    far-structure period past both the last generator and the level
    where consecutive dilations begin to overlap, with the following
    period checked to decompose entirely; hitting the budget first
    yields the partial set flagged uncertified.
    """
    from .decomposition import overlap_level

    kappa = overlap_level(h)
    period = h.period()
    pending: dict[int, list[tuple[IntVec, int]]] = {}
    gens: list[IntVec] = []
    gen_layers: list[int] = []
    gen_layer_max = 0
    scanned = 0
    finalized_below = 0  # all semigroup points with sum < this are judged

    def finalize(limit: int) -> None:
        nonlocal gen_layer_max
        for s in sorted(k for k in pending if k < limit):
            for p, layer in sorted(pending.pop(s)):
                if not _reducible(h, p, gens):
                    gens.append(p)
                    gen_layers.append(layer)
                    if layer > gen_layer_max:
                        gen_layer_max = layer

    certified = False
    while scanned < budget_layers:
        scanned += 1
        for _s, p, ok in semigroup_shells(h, scanned, scanned):
            if ok:
                pending.setdefault(_sum3(p), []).append((p, scanned))
        # later layers only contribute points of sum >= (scanned+1)*min,
        # so every smaller sum is now fully collected and can be judged
        finalized_below = ceil((scanned + 1) * h._sum_min)
        finalize(finalized_below)
        decided_layers = _last_decided_layer(h, finalized_below)
        if decided_layers >= max(gen_layer_max, kappa) + 2 * period + 1:
            certified = True
            break
    if not certified:
        finalize(10 ** 18)

    order = sorted(range(len(gens)), key=lambda i: gens[i])
    return GeneratorSet(
        generators=tuple(Point3.of(*gens[i]) for i in order),
        layer_index=tuple(gen_layers[i] for i in order),
        certified=certified,
        layers_scanned=scanned,
    )


def _last_decided_layer(h: SemigroupHandle, sum_limit: int) -> int:
    """Largest dilation layer all of whose points have sum < sum_limit."""
    # points of layer j have coordinate sum at most j * max vertex sum
    j = max(0, int(Fraction(sum_limit) / h._sum_max) - 2)
    while (j + 1) * h._sum_max < sum_limit:
        j += 1
    return j


def _reducible(h: SemigroupHandle, p: IntVec, gens: list[IntVec]) -> bool:
    px, py, pz = p
    for gx, gy, gz in gens:
        dx, dy, dz = px - gx, py - gy, pz - gz
        if dx < 0 or dy < 0 or dz < 0:
            continue
        if dx == 0 and dy == 0 and dz == 0:
            continue
        ok, _ = member_int(h, (dx, dy, dz))
        if ok:
            return True
    return False


def apery_intersection(
    h: SemigroupHandle, budget_layers: int = 400
) -> AperyBasis:
    """Semigroup points that leave the semigroup when any ray generator
    is subtracted, with their maximal elements under the divisibility
    order x <= y iff y - x is again a member.

    The scan runs over dilation shells until a full period passes with
    no new basis element beyond the structural bound; exhausting the
    budget first returns the partial basis flagged incomplete.
    """
    from .decomposition import overlap_level

    if not h.simplicial:
        raise NotSimplicial("Apery intersection needs a three-ray cone")
    kappa = overlap_level(h)
    period = h.period()
    gens = [g.int_tuple() for g in h.ray_generators]
    margins = []
    for g in gens:
        iv = dilation_interval(h, g)
        lo, hi = iv
        margins.append(max(1, (hi - lo) + 1) if hi is not None else 1)
    base = kappa + period + max(margins)

    found: list[IntVec] = [(0, 0, 0)]
    last_hit = 0
    scanned = 0
    complete = False
    while scanned < budget_layers:
        scanned += 1
        for _s, p, ok in semigroup_shells(h, scanned, scanned):
            if not ok:
                continue
            if _is_apery(h, p, gens):
                found.append(p)
                last_hit = scanned
        if scanned >= base and scanned >= last_hit + period:
            complete = True
            break

    elements = tuple(Point3.of(*p) for p in sorted(set(found)))
    maximal = _maximal_under_order(h, [e.int_tuple() for e in elements])
    return AperyBasis(
        elements=elements,
        maximal_elements=tuple(Point3.of(*p) for p in maximal),
        complete=complete,
    )


def _is_apery(h: SemigroupHandle, p: IntVec, gens: list[IntVec]) -> bool:
    for gx, gy, gz in gens:
        d = (p[0] - gx, p[1] - gy, p[2] - gz)
        if d[0] < 0 or d[1] < 0 or d[2] < 0:
            continue
        ok, _ = member_int(h, d)
        if ok:
            return False
    return True


def _maximal_under_order(
    h: SemigroupHandle, elems: list[IntVec]
) -> list[IntVec]:
    maximal = []
    for e in elems:
        dominated = False
        for f in elems:
            if f == e:
                continue
            d = (f[0] - e[0], f[1] - e[1], f[2] - e[2])
            if d[0] < 0 or d[1] < 0 or d[2] < 0:
                continue
            ok, _ = member_int(h, d)
            if ok:
                dominated = True
                break
        if not dominated:
            maximal.append(e)
    return sorted(maximal)


@dataclass(frozen=True)
class ClosureResult:
    """The closure semigroup: original members plus the finitely many
    cone points all of whose generator translates are members."""

    added_points: tuple[Point3, ...]
    gens_of_closure: GeneratorSet
    added_set: frozenset[IntVec] = field(repr=False)

    def is_trivial(self) -> bool:
        return not self.added_points


def closure_member_int(
    h: SemigroupHandle, cl: ClosureResult, p: IntVec
) -> bool:
    ok, _ = member_int(h, p)
    return ok or p in cl.added_set


def closure(h: SemigroupHandle, budget_layers: int = 400) -> ClosureResult:
    """Compute the closure semigroup and its minimal generators.

    Candidate additions live inside the dilation of the origin-spanned
    hull at the overlap level; a safety rescan one full period further
    must produce nothing new, otherwise the configuration is outside
    the supported families and is reported as such.
    """
    from .decomposition import overlap_level

    if not h.simplicial:
        raise NotSimplicial("closure is computed for three-ray cones")
    kappa = max(1, overlap_level(h))
    period = h.period()
    msg = minimal_generators(h, budget_layers=budget_layers)
    gens = [g.int_tuple() for g in msg.generators]

    added: list[IntVec] = []
    for s, p, ok in semigroup_shells(h, 1, kappa + period):
        if ok:
            continue
        if all(
            member_int(h, (p[0] + g[0], p[1] + g[1], p[2] + g[2]))[0]
            for g in gens
        ):
            if s > kappa:
                raise UnsupportedCase(
                    "closure point %s beyond the overlap level %d"
                    % (p, kappa)
                )
            added.append(p)

    added_set = frozenset(added)
    closure_gens = _closure_generators(h, msg, added_set)
    return ClosureResult(
        added_points=tuple(Point3.of(*p) for p in sorted(added)),
        gens_of_closure=closure_gens,
        added_set=added_set,
    )


def _closure_generators(
    h: SemigroupHandle, msg: GeneratorSet, added: frozenset[IntVec]
) -> GeneratorSet:
    """Graded sieve over the only possible closure generators: original
    minimal generators and the added points."""

    def cmember(p: IntVec) -> bool:
        if p[0] < 0 or p[1] < 0 or p[2] < 0:
            return False
        ok, _ = member_int(h, p)
        return ok or p in added

    candidates = sorted(
        set(msg.int_tuples()) | added, key=lambda p: (_sum3(p), p)
    )
    accepted: list[IntVec] = []
    for p in candidates:
        reducible = False
        for g in accepted:
            d = (p[0] - g[0], p[1] - g[1], p[2] - g[2])
            if d == (0, 0, 0):
                continue
            if cmember(d):
                reducible = True
                break
        if not reducible:
            accepted.append(p)

    order = sorted(range(len(accepted)), key=lambda i: accepted[i])
    layers = []
    for i in order:
        iv = dilation_interval(h, accepted[i])
        if iv is not None and iv[1] is not None and iv[0] <= iv[1]:
            layers.append(iv[0])
        else:
            layers.append(0)  # an added point, outside every dilation
    return GeneratorSet(
        generators=tuple(Point3.of(*accepted[i]) for i in order),
        layer_index=tuple(layers),
        certified=msg.certified,
        layers_scanned=msg.layers_scanned,
    )
