from __future__ import annotations

import pytest

from navmap import (
    CorridorParams,
    LandmarkError,
    MaskBuilder,
    Side,
    attach_landmarks,
    load_mask,
    resolve_turnings,
    skeletonize,
)
from navmap.junctions import NEIGHBORS_8, _centroid_pixel, _erode_to_center, bresenham
from navmap.skeleton import Skeleton


def _square(x0, y0, size):
    return tuple((x, y) for y in range(y0, y0 + size) for x in range(x0, x0 + size))


def test_erosion_finds_center_of_odd_square():
    assert _erode_to_center(set(_square(0, 0, 7))) == (3, 3)
    assert _erode_to_center(set(_square(10, 20, 5))) == (12, 22)


def test_erosion_even_square_has_no_isolated_pixel():
    assert _erode_to_center(set(_square(0, 0, 4))) is None


def test_thin_shape_falls_back_to_centroid():
    shape = ((5, 5), (6, 5), (7, 5))  # 3x1, no interior possible
    assert _erode_to_center(set(shape)) is None
    assert _centroid_pixel(shape) == (6, 5)


def test_centroid_tie_breaks_lexicographically():
    shape = _square(0, 0, 2)  # centroid (0.5, 0.5) is equidistant from all four
    assert _centroid_pixel(shape) == (0, 0)


def test_bresenham_lines_are_8_connected():
    for end in [(7, 0), (0, 7), (7, 7), (7, 3), (-5, -2), (3, -6)]:
        line = bresenham((0, 0), end)
        assert line[0] == (0, 0) and line[-1] == end
        for a, b in zip(line, line[1:]):
            assert max(abs(a[0] - b[0]), abs(a[1] - b[1])) == 1


def _skeleton_with_shape(shape, skeleton_pixels):
    return Skeleton(
        pixels=frozenset(skeleton_pixels),
        residual_shapes=(tuple(sorted(shape, key=lambda p: (p[1], p[0]))),),
        removed=frozenset(),
        hits=(),
    )


def test_resolve_square_shape_two_connectors():
    # 7x7 square with skeleton lines touching mid-left and mid-bottom
    shape = _square(10, 10, 7)
    left_line = [(x, 13) for x in range(4, 10)]
    bottom_line = [(13, y) for y in range(17, 23)]
    skeleton = _skeleton_with_shape(shape, left_line + bottom_line)
    nodes, updated = resolve_turnings(skeleton)
    assert len(nodes) == 1
    assert nodes[0].center == (13, 13)
    assert len(nodes[0].connectors) == 2
    for connector in nodes[0].connectors:
        assert connector[0] == (13, 13)
        assert connector[-1] in {(9, 13), (13, 17)}
        assert set(connector[1:-1]) <= set(updated.pixels)
    # conservation: consumed shape pixels either joined the skeleton or moved to removed
    assert set(shape) <= updated.pixels | updated.removed


def test_resolve_drops_single_contact_stub():
    shape = _square(10, 10, 5)
    line = [(x, 12) for x in range(5, 10)]  # touches only from the left
    skeleton = _skeleton_with_shape(shape, line)
    nodes, updated = resolve_turnings(skeleton)
    assert nodes == []
    assert set(shape) <= updated.removed
    assert updated.pixels == frozenset(line)


def test_resolved_skeleton_is_connected(lshape_path, default_params):
    mask = load_mask(lshape_path)
    _, skeleton = resolve_turnings(skeletonize(mask, default_params))
    pixels = set(skeleton.pixels)
    seed = next(iter(pixels))
    seen = {seed}
    frontier = [seed]
    while frontier:
        nxt = []
        for x, y in frontier:
            for dx, dy in NEIGHBORS_8:
                p = (x + dx, y + dy)
                if p in pixels and p not in seen:
                    seen.add(p)
                    nxt.append(p)
        frontier = nxt
    assert seen == pixels


def _lshape_landmarks(params=None):
    import mapdefs

    params = params or mapdefs.DEFAULT_PARAMS
    mask = mapdefs.build_lshape().build()
    turnings, skeleton = resolve_turnings(skeletonize(mask, params))
    return mask, skeleton, attach_landmarks(skeleton, mask, skeleton.hits, params)


def test_attach_landmarks_lshape():
    _, _, landmarks = _lshape_landmarks()
    entries = [(d.pixel, d.side, d.is_target) for d in landmarks.doors]
    assert entries == [
        ((122, 23), Side.RIGHT, True),
        ((43, 106), Side.TOP, False),
        ((73, 106), Side.BOTTOM, False),
    ]
    assert landmarks.start == (14, 106)
    assert landmarks.end == (122, 23)
    targets = [d for d in landmarks.doors if d.is_target]
    assert len(targets) == 1 and targets[0].pixel == landmarks.end


def test_side_tags_match_geometry():
    _, _, landmarks = _lshape_landmarks()
    for door in landmarks.doors:
        cx, cy = door.region_centroid
        px, py = door.pixel
        if door.side is Side.TOP:
            assert cy < py
        elif door.side is Side.BOTTOM:
            assert cy > py
        elif door.side is Side.LEFT:
            assert cx < px
        else:
            assert cx > px


def test_facing_doors_share_pixel_with_distinct_sides():
    import mapdefs

    params = mapdefs.DEFAULT_PARAMS
    mask = mapdefs.build_facing().build()
    turnings, skeleton = resolve_turnings(skeletonize(mask, params))
    landmarks = attach_landmarks(skeleton, mask, skeleton.hits, params)
    plain = [d for d in landmarks.doors if not d.is_target]
    assert len(plain) == 2
    assert plain[0].pixel == plain[1].pixel == (63, 56)
    assert {d.side for d in plain} == {Side.TOP, Side.BOTTOM}


def test_unreachable_target_door_raises():
    builder = MaskBuilder(120, 40)
    builder.corridor(5, 10, 114, 23)
    builder.start(5, 13, 8, 20)
    builder.target_door(60, 34, 67, 39)  # 10 px below the corridor
    mask = builder.build()
    params = CorridorParams(min_width=8, max_width=60, door_probe=5)
    turnings, skeleton = resolve_turnings(skeletonize(mask, params))
    with pytest.raises(LandmarkError) as err:
        attach_landmarks(skeleton, mask, skeleton.hits, params)
    assert err.value.code == "target-door-unreachable"


def test_start_far_from_skeleton_raises():
    builder = MaskBuilder(200, 120)
    builder.corridor(5, 10, 194, 23)
    builder.start(5, 100, 8, 107)  # ~85 px below the corridor
    builder.target_door(100, 24, 107, 29)
    mask = builder.build()
    params = CorridorParams(min_width=8, max_width=60)
    turnings, skeleton = resolve_turnings(skeletonize(mask, params))
    with pytest.raises(LandmarkError) as err:
        attach_landmarks(skeleton, mask, skeleton.hits, params)
    assert err.value.code == "start-not-on-main-path"
