"""Checks for the brute-force scan oracle itself.

The oracle works from vertex coordinates alone, so these tests pin its
behaviour against published data, against its own definitions at two
window sizes, and against the main algorithms over full boxes.
"""

from itertools import product

import pytest

from conftest import S3_GENERATORS, S3_VERTICES, WE_VERTICES
from polysgp import member_int, oracle
from polysgp.errors import BoxTooSmall, DegenerateInput


def test_box_rejects_empty_windows():
    with pytest.raises(BoxTooSmall):
        oracle.Box(0, 5)
    with pytest.raises(BoxTooSmall):
        oracle.Box(5, 0)


def test_scan_rejects_uncovered_box(s3):
    # [0, 10]^3 needs more than one dilation layer to classify points
    # near the far corner.
    with pytest.raises(BoxTooSmall):
        oracle.scan_semigroup(s3, oracle.Box(10, 1))


def test_scan_agrees_with_point_member(s3):
    box = oracle.box_for(s3, 9)
    present = oracle.scan_semigroup(s3, box)
    for p in product(range(10), repeat=3):
        assert (p in present) == oracle.point_member(s3, p)


def test_naive_msg_matches_published_generators(s3):
    box = oracle.box_for(s3, 15)
    assert oracle.naive_msg(s3, box) == set(S3_GENERATORS)


def test_raw_vertices_and_handle_agree(s3):
    box = oracle.box_for(S3_VERTICES, 8)
    assert oracle.scan_semigroup(S3_VERTICES, box) == oracle.scan_semigroup(
        s3, box
    )


def test_gaps_stable_under_box_growth(we):
    small = oracle.box_for(we, 10)
    big = oracle.box_for(we, 16)
    gaps_small = oracle.scan_gaps(we, small)
    gaps_big = oracle.scan_gaps(we, big)
    assert gaps_small == {p for p in gaps_big if max(p) <= 10}


def test_semigroup_monotone_under_box_growth(s3):
    small = oracle.scan_semigroup(s3, oracle.box_for(s3, 8))
    big = oracle.scan_semigroup(s3, oracle.box_for(s3, 12))
    assert small <= big


def test_cone_rays_match_main_handle(s3, nn):
    for h in (s3, nn):
        main = {r.int_tuple() for r in h.rays}
        assert set(oracle.cone_rays(h)) == main


def test_ray_generators_match_main_handle(s3, we):
    for h in (s3, we):
        main = {g.int_tuple() for g in h.ray_generators}
        assert set(oracle.ray_generators(h)) == main


def test_naive_condition3_empty_for_s3(s3):
    assert oracle.naive_condition3(s3, oracle.box_for(s3, 12)) == []


def test_naive_condition3_flags_s5(s5):
    # The least ray elements reach coordinate 24, so the window must
    # extend at least that far before translates can be tested.
    hits = oracle.naive_condition3(s5, oracle.box_for(s5, 26))
    by_point = dict(hits)
    assert (5, 5, 5) in by_point
    assert len(by_point[(5, 5, 5)]) >= 2


def test_degenerate_inputs_rejected():
    with pytest.raises(DegenerateInput):
        oracle.scan_semigroup([(1, 0, 0), (0, 1, 0), (0, 0, 1)])
    with pytest.raises(DegenerateInput):
        oracle.scan_semigroup([(1, 0, 0), (0, 1, 0), (1, 1, 0), (2, 2, 0)])
    with pytest.raises(DegenerateInput):
        oracle.scan_semigroup([(1, 0, 0), (-1, 0, 0), (0, 1, 0), (0, 0, 1)])
    with pytest.raises(DegenerateInput):
        oracle.scan_semigroup([(0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1)])


def test_scan_layer_covers_low_shells(we):
    # Layer four of this body starts at coordinate sum 8, so below sum 8
    # the first three layers account for every present point.
    box = oracle.box_for(we, 9)
    union = {(0, 0, 0)}
    for j in range(1, 4):
        union |= oracle.scan_layer(we, j, box)
    present = oracle.scan_semigroup(we, box)
    assert union <= present
    assert {p for p in union if sum(p) <= 7} == {
        p for p in present if sum(p) <= 7
    }


def test_oracle_matches_main_membership(s3, we):
    for h in (s3, we):
        box = oracle.box_for(h, 12)
        present = oracle.scan_semigroup(h, box)
        for p in product(range(13), repeat=3):
            assert (p in present) == member_int(h, p)[0]
