"""Vertex classification, overlap and separation levels, and the slab
decomposition of the layer-closure gap region."""

from __future__ import annotations

from fractions import Fraction as F

import pytest

from polysgp import build, oracle
from polysgp.decomposition import (
    classify,
    corner_slab,
    gap_points,
    gap_region,
    overlap_level,
    ray_chord_class,
    ray_period,
    ray_point,
    separation_level,
    slab_integer_points,
    slabs,
)
from polysgp.errors import BadParameter, NotSimplicial
from polysgp.geometry import (
    Point3,
    cone_supporting_facets,
    contains,
    dilate,
)


def _t_interior(body, k, p):
    """Membership in the dilation's relative interior, treating the
    walls shared with the ambient cone as closed."""
    scaled = dilate(body, k)
    exempt = cone_supporting_facets(scaled)
    return contains(scaled, p, mode="relative_interior", exempt_facets=exempt)


def _overlap_predicate(h, cls, k):
    """The defining condition of the overlap level, recomputed from
    geometry primitives: every near vertex of level k+1 is swallowed by
    level k, every far vertex of level k by level k+1."""
    verts = h.body.vertices
    for vi in cls.entry_extremal + cls.entry_inner:
        if not _t_interior(h.body, k, verts[vi] * (k + 1)):
            return False
    for vi in cls.exit_extremal + cls.exit_inner:
        if not _t_interior(h.body, k + 1, verts[vi] * k):
            return False
    return True


def test_classify_s3(s3):
    cls = classify(s3)
    verts = s3.body.vertices
    names = lambda idxs: {verts[i].as_tuple() for i in idxs}
    assert names(cls.point_extremal) == {(2, 3, 1), (3, 3, 2)}
    assert names(cls.entry_extremal) == {(1, 2, 3)}
    assert names(cls.exit_extremal) == {(F(3, 2), 3, F(9, 2))}
    assert cls.entry_inner == ()
    assert names(cls.exit_inner) == {(F(33, 16), F(27, 8), F(63, 16))}


def test_classify_covers_all_vertices(s3, s5, nn, we):
    for h in (s3, s5, nn, we):
        cls = classify(h)
        groups = (
            cls.point_extremal,
            cls.entry_extremal,
            cls.exit_extremal,
            cls.entry_inner,
            cls.exit_inner,
        )
        seen = [i for grp in groups for i in grp]
        assert sorted(seen) == list(range(len(h.body.vertices)))


def test_chord_classes(s3, s5, nn, we):
    def kinds(h):
        cls = classify(h)
        return tuple(ray_chord_class(h, cls, i) for i in range(len(h.rays)))

    assert sorted(kinds(s3)) == ["entry_vertex", "point", "point"]
    assert kinds(s5) == ("point", "point", "point")
    assert kinds(nn) == ("point", "point", "point")
    assert kinds(we) == ("entry_vertex",) * 3


def test_ray_point_and_period(s3):
    cls = classify(s3)
    for i in range(3):
        if ray_chord_class(s3, cls, i) == "point":
            p = ray_point(s3, cls, i)
            hit = s3.ray_data[i]
            assert p == s3.rays[i] * hit.lo
            assert ray_period(s3, i) == hit.lo.denominator
        else:
            assert ray_period(s3, i) == 1


def test_overlap_levels(s3, s5, nn):
    assert overlap_level(s3) == 3
    assert overlap_level(s5) == 3
    assert overlap_level(nn) == 11


def test_overlap_level_is_minimal(s3, s5, nn, we):
    for h in (s3, s5, nn, we):
        cls = classify(h)
        kappa = overlap_level(h, cls)
        assert _overlap_predicate(h, cls, kappa)
        assert _overlap_predicate(h, cls, kappa + 1)
        if kappa > 1:
            assert not _overlap_predicate(h, cls, kappa - 1)


def test_separation_levels(s3, s5, nn):
    assert separation_level(s3) == 3
    assert separation_level(s5) == 3
    assert separation_level(nn) == 11


def test_separation_level_generator_override(s5):
    assert separation_level(s5, generators=s5.ray_generators) == 3
    with pytest.raises(BadParameter):
        separation_level(s5, generators=s5.ray_generators[:2])


def test_separation_not_below_overlap(s3, s5, nn):
    for h in (s3, s5, nn):
        assert separation_level(h) >= overlap_level(h)


def test_decomposition_matches_oracle_layer_gaps(s3):
    # the union of closed slabs at level k carries exactly the integer
    # points of the layer closure that neither adjacent dilation covers
    cls = classify(s3)
    top = max(c for v in s3.body.vertices for c in v.as_tuple())
    for k in range(3, 6):
        box = oracle.box_for(s3, int((k + 2) * top) + 2)
        covered = oracle.scan_layer(s3, k, box) | oracle.scan_layer(
            s3, k + 1, box
        )
        ss = slabs(s3, cls, k)
        slab_pts = set()
        for s in ss.corner + ss.bridge:
            slab_pts |= slab_integer_points(s)
        assert slab_pts - covered == oracle.scan_layer_gaps(s3, k, box)


def test_no_point_rays_means_no_slabs_and_no_high_gaps(we):
    cls = classify(we)
    kappa = overlap_level(we, cls)
    ss = slabs(we, cls, kappa)
    assert ss.corner == () and ss.bridge == ()
    top = 3
    for k in range(kappa, kappa + 3):
        box = oracle.box_for(we, (k + 2) * top + 2)
        assert oracle.scan_layer_gaps(we, k, box) == set()


def test_corner_slab_vertexwise_translation(s3):
    # one level up, every corner slab translates by its ray's chord
    # point; periods here are 1 so integer points translate as well
    cls = classify(s3)
    base = separation_level(s3, cls)
    for i in range(3):
        if ray_chord_class(s3, cls, i) != "point":
            continue
        p = ray_point(s3, cls, i)
        assert ray_period(s3, i) == 1
        for j in range(1, 6):
            lo_slab = corner_slab(s3, cls, i, base)
            hi_slab = corner_slab(s3, cls, i, base + j)
            shift = p * j
            assert [v + shift for v in lo_slab.vertex_list()] == list(
                hi_slab.vertex_list()
            )
            moved = {
                (q[0] + int(shift.x), q[1] + int(shift.y), q[2] + int(shift.z))
                for q in slab_integer_points(lo_slab)
            }
            assert moved == slab_integer_points(hi_slab)


def test_corner_slab_fractional_period_translation():
    # chord point with denominator 2: vertex lists translate every
    # level by the chord point, integer points every two levels
    h = build(
        [(F(3, 2), 0, 0), (0, 2, 0), (0, 3, 0), (0, 0, 2), (0, 0, 3), (1, 1, 1)]
    )
    cls = classify(h)
    point_rays = [
        i for i in range(3) if ray_chord_class(h, cls, i) == "point"
    ]
    assert point_rays, "construction must yield a point chord"
    base = gap_region(h, cls).base_level
    for i in point_rays:
        p = ray_point(h, cls, i)
        h_i = ray_period(h, i)
        assert h_i == p.denominator_lcm()
        lo_slab = corner_slab(h, cls, i, base)
        vec = p * h_i
        hi_slab = corner_slab(h, cls, i, base + h_i)
        assert [v + vec for v in lo_slab.vertex_list()] == list(
            hi_slab.vertex_list()
        )
        moved = {
            (q[0] + int(vec.x), q[1] + int(vec.y), q[2] + int(vec.z))
            for q in slab_integer_points(lo_slab)
        }
        assert moved == slab_integer_points(hi_slab)


def test_corner_slab_parameter_validation(s3):
    cls = classify(s3)
    segment_ray = next(
        i for i in range(3) if ray_chord_class(s3, cls, i) == "entry_vertex"
    )
    point_ray = next(
        i for i in range(3) if ray_chord_class(s3, cls, i) == "point"
    )
    with pytest.raises(BadParameter):
        corner_slab(s3, cls, segment_ray, 3)
    with pytest.raises(BadParameter):
        corner_slab(s3, cls, point_ray, 0)
    with pytest.raises(BadParameter):
        slabs(s3, cls, 0)


def test_chord_near_ends_are_always_vertices(s3, s5, nn, we):
    # the two cone walls through an extremal ray pin any face meeting
    # the ray to the ray itself, so a chord end is always a body vertex;
    # the 'entry_hidden' branch exists only as an internal guard
    import instancegen

    handles = [s3, s5, nn, we]
    for seed in range(40):
        try:
            handles.append(build(instancegen.poly_vertices(seed)))
        except Exception:
            continue
    for h in handles:
        cls = classify(h)
        vset = set(h.body.vertices)
        for i in range(len(h.rays)):
            assert ray_chord_class(h, cls, i) in ("point", "entry_vertex")
            assert ray_point(h, cls, i) in vset


def test_slabs_reject_non_simplicial(pyramid):
    with pytest.raises(NotSimplicial):
        separation_level(pyramid)


def test_gap_region_shape(s3):
    region = gap_region(s3)
    assert region.overlap == 3
    assert region.separation == 3
    assert region.base_level == 3
    assert len(region.corner_templates) == 2
    assert len(region.bridge_templates) == 1
    assert set(region.periods.values()) == {1}
    for i, vec in region.period_vectors.items():
        assert vec == ray_point(s3, classify(s3), i) * region.periods[i]


def test_gap_points_are_exactly_the_low_shell_gaps(s3):
    from polysgp.semigroup import in_cone_int, member_int

    region = gap_region(s3)
    pts = gap_points(s3, region, extra_periods=1)
    assert pts == sorted(pts, key=lambda p: p.as_tuple())
    for p in pts:
        t = p.int_tuple()
        assert in_cone_int(s3, t)
        assert not member_int(s3, t)[0]
    with pytest.raises(BadParameter):
        gap_points(s3, region, extra_periods=-1)


def test_gap_points_match_oracle_box(s3):
    # within a box that the enumerated shells fully cover, the gap list
    # and the oracle's cone-minus-semigroup scan agree
    region = gap_region(s3)
    pts = {p.int_tuple() for p in gap_points(s3, region, extra_periods=2)}
    probe = 9
    box = oracle.box_for(s3, probe)
    oracle_gaps = oracle.scan_gaps(s3, box)
    assert {p for p in pts if max(p) <= probe} == {
        g for g in oracle_gaps if max(g) <= probe
    }
