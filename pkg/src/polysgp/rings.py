"""Deciders for the ring properties of a polytope semigroup.

All three properties reduce to one combinatorial criterion: the
semigroup ring fails to be Cohen-Macaulay exactly when some gap lands
back in the semigroup under translation by two different extremal-ray
generators.  The cone configuration decides how much of the (usually
infinite) gap set must actually be inspected:

* no point-chord ray: the gap set is finite, and any gap at all
  produces a refuting pair by walking a staircase of generators;
* one point-chord ray, two segment chords: same emptiness test, with
  the scan window stretched by the point ray's translation period;
* two or three point-chord rays: the gap set is infinite but periodic,
  and one period of corner slabs past the separation level, together
  with the hull below it, carries a refuting gap iff any gap does.

Gorenstein adds the unique-maximal-element test on the intersection of
the ray-generator Apery sets, and Buchsbaum is the Cohen-Macaulay
question asked of the closure semigroup instead.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Optional

from .decomposition import (
    VertexClassification,
    classify,
    corner_slab,
    overlap_level,
    ray_chord_class,
    ray_period,
    ray_point,
    separation_level,
    slab_integer_points,
)
from .errors import (
    AssumptionViolated,
    BadParameter,
    NotAGap,
    NotSimplicial,
    UnsupportedCase,
)
from .geometry import ORIGIN, Point3, integer_points_in_hull
from .semigroup import (
    SemigroupHandle,
    apery_intersection,
    closure,
    closure_member_int,
    in_cone_int,
    member_int,
    semigroup_shells,
)

IntVec = tuple[int, int, int]
MemberFn = Callable[[IntVec], bool]


@dataclass(frozen=True)
class Witness:
    """A gap refuting the property: both listed generator translates
    are members while the point itself is not."""

    point: Point3
    indices: tuple[int, int]


@dataclass(frozen=True)
class PropertyVerdict:
    property: str
    verdict: str
    witness: Optional[Witness]
    case_used: str
    diagnostics: dict = field(default_factory=dict)


@dataclass(frozen=True)
class Condition3Result:
    count: int
    indices: tuple[int, ...]


def check_condition3(h: SemigroupHandle, p) -> Condition3Result:
    """Which ray-generator translates of a gap are members.

    The property deciders refute Cohen-Macaulayness exactly when the
    count reaches two.
    """
    if not h.simplicial:
        raise NotSimplicial("the refutation test needs a three-ray cone")
    q = _as_intvec(p)
    if not in_cone_int(h, q):
        raise NotAGap("%s lies outside the cone" % (q,))
    ok, _ = member_int(h, q)
    if ok:
        raise NotAGap("%s is a member, not a gap" % (q,))
    gens = [g.int_tuple() for g in h.ray_generators]
    idx = tuple(
        i for i, g in enumerate(gens) if member_int(h, _add(q, g))[0]
    )
    return Condition3Result(count=len(idx), indices=idx)


def is_cohen_macaulay(h: SemigroupHandle) -> PropertyVerdict:
    """Decide Cohen-Macaulayness of the semigroup ring."""
    if not h.simplicial:
        raise NotSimplicial("the decision procedures need a three-ray cone")
    cls = classify(h)
    member: MemberFn = lambda p: member_int(h, p)[0]
    return _decide(
        h,
        cls,
        member,
        h.ray_generators,
        prop="Cohen-Macaulay",
        diag={},
        added=frozenset(),
    )


def is_buchsbaum(h: SemigroupHandle, budget_layers: int = 400) -> PropertyVerdict:
    """Decide Buchsbaumness: Cohen-Macaulayness of the closure
    semigroup, with membership, generators, and the separation level
    all recomputed relative to the closure."""
    if not h.simplicial:
        raise NotSimplicial("the decision procedures need a three-ray cone")
    cls = classify(h)
    try:
        cl = closure(h, budget_layers=budget_layers)
    except UnsupportedCase as exc:
        return PropertyVerdict(
            property="Buchsbaum",
            verdict="unsupported",
            witness=None,
            case_used="closure computation: %s" % exc,
            diagnostics={},
        )
    diag: dict = {
        "membership": "closure",
        "closure_added_points": len(cl.added_points),
    }
    if not cl.gens_of_closure.certified:
        return PropertyVerdict(
            property="Buchsbaum",
            verdict="inconclusive",
            witness=None,
            case_used="closure generator enumeration hit its layer budget",
            diagnostics=diag,
        )
    member: MemberFn = lambda p: closure_member_int(h, cl, p)
    gens = _closure_ray_generators(h, member)
    diag["generators_recomputed"] = tuple(gens) != tuple(h.ray_generators)
    return _decide(
        h,
        cls,
        member,
        gens,
        prop="Buchsbaum",
        diag=diag,
        added=cl.added_set,
    )


def is_gorenstein(h: SemigroupHandle, budget_layers: int = 400) -> PropertyVerdict:
    """Decide Gorensteinness: Cohen-Macaulay plus a unique maximal
    element in the intersection of the ray-generator Apery sets."""
    cm = is_cohen_macaulay(h)
    if cm.verdict == "unsupported":
        return PropertyVerdict(
            property="Gorenstein",
            verdict="unsupported",
            witness=None,
            case_used="Cohen-Macaulay stage: %s" % cm.case_used,
            diagnostics=cm.diagnostics,
        )
    if cm.verdict == "no":
        return PropertyVerdict(
            property="Gorenstein",
            verdict="no",
            witness=cm.witness,
            case_used="not Cohen-Macaulay (%s)" % cm.case_used,
            diagnostics=cm.diagnostics,
        )
    ap = apery_intersection(h, budget_layers=budget_layers)
    diag = dict(cm.diagnostics)
    diag["apery_elements"] = len(ap.elements)
    diag["apery_maximal"] = tuple(
        m.int_tuple() for m in ap.maximal_elements
    )
    if not ap.complete:
        return PropertyVerdict(
            property="Gorenstein",
            verdict="inconclusive",
            witness=None,
            case_used="Apery enumeration hit its layer budget",
            diagnostics=diag,
        )
    if len(ap.maximal_elements) == 1:
        return PropertyVerdict(
            property="Gorenstein",
            verdict="yes",
            witness=None,
            case_used="Cohen-Macaulay with a unique maximal Apery element",
            diagnostics=diag,
        )
    return PropertyVerdict(
        property="Gorenstein",
        verdict="no",
        witness=None,
        case_used="Cohen-Macaulay but %d maximal Apery elements"
        % len(ap.maximal_elements),
        diagnostics=diag,
    )


def gorenstein_family(k: int) -> list[Point3]:
    """The shipped one-parameter family of Gorenstein tetrahedra."""
    if not isinstance(k, int) or isinstance(k, bool) or k < 2:
        raise BadParameter("the family is defined for integers k >= 2")
    return [
        Point3.of(4, 0, 0),
        Point3.of(4 + 2 * k, 0, 0),
        Point3.of(4 + k, k, 0),
        Point3.of(4 + k, 0, 1),
    ]


@dataclass(frozen=True)
class AperyTable:
    """The z=0 slice of Ap(g1) n Ap(g2) for a family member, row by
    row in y; rows at y >= k are verified empty."""

    k: int
    rows: tuple[tuple[IntVec, ...], ...]
    empty_rows_checked: tuple[int, ...]


def apery_table(k: int) -> AperyTable:
    """Exact per-row table of Ap(g1) n Ap(g2) n {z=0} for the family
    member with parameter k.

    Elements with positive third coordinate never matter here: for this
    family any member with z > 0 stays a member after subtracting the
    z-carrying generator, an optimization valid for the family only.
    """
    h = build_family(k)
    g1, g2 = _family_plane_generators(h)
    rows = []
    for j in range(k + 2):
        rows.append(_pair_apery_row(h, g1, g2, j, k))
    for j in (k, k + 1):
        if rows[j]:
            raise AssumptionViolated(
                "family row y=%d unexpectedly nonempty: %s" % (j, rows[j])
            )
    return AperyTable(
        k=k,
        rows=tuple(rows[:k]),
        empty_rows_checked=(k, k + 1),
    )


def build_family(k: int) -> SemigroupHandle:
    from .semigroup import build

    return build(gorenstein_family(k))


def _family_plane_generators(h: SemigroupHandle) -> tuple[IntVec, IntVec]:
    """The x-axis generator and the in-plane oblique generator."""
    g1 = g2 = None
    for g in h.ray_generators:
        t = g.int_tuple()
        if t[2] != 0:
            continue
        if t[1] == 0:
            g1 = t
        else:
            g2 = t
    if g1 is None or g2 is None:
        raise AssumptionViolated("family generators not where expected")
    return g1, g2


def _pair_apery_row(
    h: SemigroupHandle, g1: IntVec, g2: IntVec, j: int, k: int
) -> tuple[IntVec, ...]:
    """Row y=j of Ap(g1) n Ap(g2) n {z=0}.

    Membership along the row is monotone under adding g1, so once every
    residue class modulo g1's length has seen a member, everything one
    step further is a member with a member below it and the row is
    finished.
    """
    step = g1[0]
    first: dict[int, int] = {}
    cap = 24 + 8 * k
    x = 0
    while len(first) < step and x <= cap:
        if member_int(h, (x, j, 0))[0]:
            first.setdefault(x % step, x)
        x += 1
    if len(first) < step:
        raise AssumptionViolated(
            "row y=%d never covers all residues modulo %d" % (j, step)
        )
    stop = max(first.values()) + step
    row = []
    for x in range(stop + 1):
        p = (x, j, 0)
        if not member_int(h, p)[0]:
            continue
        if member_int(h, _sub(p, g1))[0]:
            continue
        if member_int(h, _sub(p, g2))[0]:
            continue
        row.append(p)
    return tuple(row)


def _as_intvec(p) -> IntVec:
    if hasattr(p, "int_tuple"):
        return p.int_tuple()
    x, y, z = p
    return (int(x), int(y), int(z))


def _add(a: IntVec, b: IntVec) -> IntVec:
    return (a[0] + b[0], a[1] + b[1], a[2] + b[2])


def _sub(a: IntVec, b: IntVec) -> IntVec:
    return (a[0] - b[0], a[1] - b[1], a[2] - b[2])


def _closure_ray_generators(
    h: SemigroupHandle, member: MemberFn
) -> tuple[Point3, ...]:
    """Least multiple of each primitive ray direction inside the
    closure; point-chord rays keep their generator, segment rays may
    shrink when the closure fills their first gaps."""
    out = []
    for i, g in enumerate(h.ray_generators):
        if h.ray_data[i].kind == "point":
            out.append(g)
            continue
        d = h.rays[i].int_tuple()
        full = g.int_tuple()
        mult = full[0] // d[0] if d[0] else (
            full[1] // d[1] if d[1] else full[2] // d[2]
        )
        pick = g
        for m in range(1, mult + 1):
            q = (m * d[0], m * d[1], m * d[2])
            if member(q):
                pick = Point3.of(*q)
                break
        out.append(pick)
    return tuple(out)


def _decide(
    h: SemigroupHandle,
    cls: VertexClassification,
    member: MemberFn,
    gens: tuple[Point3, ...],
    prop: str,
    diag: dict,
    added: frozenset,
) -> PropertyVerdict:
    """Shared dispatcher: the Cohen-Macaulay criterion evaluated
    against an arbitrary membership function (plain or closure)."""
    classes = [ray_chord_class(h, cls, i) for i in range(3)]
    kappa = overlap_level(h, cls)
    diag = dict(diag)
    diag["overlap_level"] = kappa
    diag["chord_classes"] = tuple(classes)
    point_rays = [i for i in range(3) if classes[i] == "point"]

    if len(point_rays) == 0:
        last = kappa + 2
        gap = _first_shell_gap(h, last, added)
        diag["scan_shells"] = last
        case = "all chords are segments: finite gap set emptiness"
        return _emptiness_verdict(
            h, member, gens, prop, diag, case, gap, (0, 1), kappa
        )

    if len(point_rays) == 1:
        i0 = point_rays[0]
        last = kappa + ray_period(h, i0) + 1
        gap = _first_shell_gap(h, last, added)
        diag["scan_shells"] = last
        others = tuple(sorted(j for j in range(3) if j != i0))
        case = (
            "one point chord on ray %d: gap set emptiness over one "
            "translation period" % i0
        )
        return _emptiness_verdict(
            h, member, gens, prop, diag, case, gap, others, kappa
        )

    try:
        sep = separation_level(h, cls, generators=gens)
    except (UnsupportedCase, NotSimplicial) as exc:
        return PropertyVerdict(
            property=prop,
            verdict="unsupported",
            witness=None,
            case_used="configuration outside the decided cases: %s" % exc,
            diagnostics=diag,
        )
    diag["separation_level"] = sep
    region = _corner_window(h, cls, sep, point_rays)
    diag["region_points"] = len(region)
    gens_int = [g.int_tuple() for g in gens]
    refuters = []
    gap_count = 0
    for p in sorted(region):
        if member(p):
            continue
        gap_count += 1
        idx = tuple(
            i for i, g in enumerate(gens_int) if member(_add(p, g))
        )
        if len(idx) >= 2:
            refuters.append((p, idx))
    diag["region_gaps"] = gap_count
    case = (
        "corner-slab window at separation level %d over %d point "
        "chords" % (sep, len(point_rays))
    )
    if refuters:
        p, idx = refuters[0]
        return PropertyVerdict(
            property=prop,
            verdict="no",
            witness=Witness(point=Point3.of(*p), indices=idx[:2]),
            case_used=case,
            diagnostics=diag,
        )
    return PropertyVerdict(
        property=prop,
        verdict="yes",
        witness=None,
        case_used=case,
        diagnostics=diag,
    )


def _first_shell_gap(
    h: SemigroupHandle, last: int, added: frozenset
) -> Optional[IntVec]:
    """Lexicographically smallest gap within the shell window, with the
    closure's added points not counting as gaps."""
    gaps = [
        p
        for _s, p, ok in semigroup_shells(h, 1, last)
        if not ok and p not in added
    ]
    return min(gaps) if gaps else None


def _emptiness_verdict(
    h: SemigroupHandle,
    member: MemberFn,
    gens: tuple[Point3, ...],
    prop: str,
    diag: dict,
    case: str,
    gap: Optional[IntVec],
    climb: tuple[int, int],
    kappa: int,
) -> PropertyVerdict:
    if gap is None:
        return PropertyVerdict(
            property=prop,
            verdict="yes",
            witness=None,
            case_used=case,
            diagnostics=diag,
        )
    i, j = climb
    cap = 16 * (kappa + h.period() + 4)
    p = _staircase(member, gap, gens[i].int_tuple(), gens[j].int_tuple(), cap)
    return PropertyVerdict(
        property=prop,
        verdict="no",
        witness=Witness(point=Point3.of(*p), indices=(i, j)),
        case_used=case,
        diagnostics=diag,
    )


def _staircase(
    member: MemberFn, start: IntVec, gi: IntVec, gj: IntVec, cap: int
) -> IntVec:
    """From any gap, climb by one generator to the last non-member,
    then by the other: the end point is a gap both of whose climbs'
    next steps are members."""
    li = _climb(member, start, gi, cap)
    q = _add(start, _scale(gi, li - 1))
    lj = _climb(member, q, gj, cap)
    return _add(q, _scale(gj, lj - 1))


def _climb(member: MemberFn, p: IntVec, g: IntVec, cap: int) -> int:
    for l in range(1, cap + 1):
        if member(_add(p, _scale(g, l))):
            return l
    raise AssumptionViolated(
        "no member found along %s from %s within %d steps" % (g, p, cap)
    )


def _scale(g: IntVec, m: int) -> IntVec:
    return (m * g[0], m * g[1], m * g[2])


def _corner_window(
    h: SemigroupHandle,
    cls: VertexClassification,
    sep: int,
    point_rays: list[int],
) -> set[IntVec]:
    """Integer points of one full period of corner slabs from the
    separation level, plus the hull joining the origin to the
    separation-level ray points."""
    pts: set[IntVec] = set()
    for i in point_rays:
        for k in range(sep, sep + ray_period(h, i)):
            pts |= slab_integer_points(corner_slab(h, cls, i, k))
    hull_corners = [ORIGIN] + [
        ray_point(h, cls, i) * sep for i in range(3)
    ]
    pts.update(integer_points_in_hull(hull_corners))
    return pts
