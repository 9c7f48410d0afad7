from __future__ import annotations

import numpy as np
import pytest
from scipy import ndimage

from navmap import (
    Axis,
    CorridorError,
    CorridorParams,
    MaskBuilder,
    PixelClass,
    Side,
    find_border_pixels,
    load_mask,
    scan_axis,
    skeletonize,
)

from oracles import brute_force_border


def test_params_validation():
    with pytest.raises(ValueError):
        CorridorParams(min_width=0, max_width=10)
    with pytest.raises(ValueError):
        CorridorParams(min_width=10, max_width=10)
    assert CorridorParams(min_width=3, max_width=40).door_probe == 40
    assert CorridorParams(min_width=3, max_width=40, door_probe=20).door_probe == 20


def test_border_all_path_3x3():
    # every edge pixel counts its missing neighbors as non-path; the center
    # pixel has all eight neighbors in-bounds and path, so it is interior
    mask = MaskBuilder(3, 3).corridor(0, 0, 2, 2).build()
    border = find_border_pixels(mask)
    assert (1, 1) not in border
    assert len(border) == 8


def test_border_5x5_center_excluded():
    mask = MaskBuilder(5, 5).corridor(1, 1, 3, 3).build()
    border = find_border_pixels(mask)
    assert (2, 2) not in border
    assert len(border) == 8


def test_border_matches_brute_force_on_lshape(lshape_path):
    mask = load_mask(lshape_path)
    expected = brute_force_border(np.asarray(mask.classes), int(PixelClass.PATH))
    got = find_border_pixels(mask)
    assert set(got) == expected
    assert got == sorted(got, key=lambda p: (p[1], p[0]))  # raster order


def _row_mask(x0, x1, y=7, width=90, height=16, extras=None):
    builder = MaskBuilder(width, height)
    builder.corridor(x0, y, x1, y)
    for cls, rect in extras or []:
        builder.rect(cls, *rect)
    return builder.build()


def test_scan_odd_run_midpoint():
    mask = _row_mask(10, 14)
    hits, removed = scan_axis(mask, CorridorParams(min_width=3, max_width=40), Axis.VERTICAL)
    assert [h.center for h in hits] == [(12, 7)]
    assert hits[0].span == ((10, 7), (14, 7))
    assert removed == {(10, 7), (11, 7), (13, 7), (14, 7)}


def test_scan_below_min_width_removes_run():
    mask = _row_mask(10, 11)
    hits, removed = scan_axis(mask, CorridorParams(min_width=3, max_width=40), Axis.VERTICAL)
    assert hits == []
    assert removed == {(10, 7), (11, 7)}


def test_scan_above_max_width_defers_run():
    mask = _row_mask(10, 70)
    hits, removed = scan_axis(mask, CorridorParams(min_width=3, max_width=40), Axis.VERTICAL)
    assert hits == []
    assert removed == set()


def test_scan_even_run_takes_lower_median():
    mask = _row_mask(10, 13)
    hits, _ = scan_axis(mask, CorridorParams(min_width=3, max_width=40), Axis.VERTICAL)
    assert [h.center for h in hits] == [(11, 7)]


def test_scan_probe_finds_door_on_left():
    mask = _row_mask(10, 14, extras=[(PixelClass.DOOR, (9, 7, 9, 7))])
    hits, _ = scan_axis(mask, CorridorParams(min_width=3, max_width=40), Axis.VERTICAL)
    assert len(hits) == 1
    assert [(d.side, d.is_target, d.door_pixel) for d in hits[0].door_hits] == [
        (Side.LEFT, False, (9, 7))
    ]


def test_scan_probe_target_door_and_range():
    # target door 5 px right of the run end: inside a probe of 5, outside 4
    extras = [(PixelClass.TARGET_DOOR, (19, 7, 19, 7))]
    mask = _row_mask(10, 14, extras=extras)
    hits, _ = scan_axis(mask, CorridorParams(min_width=3, max_width=40, door_probe=5), Axis.VERTICAL)
    assert [(d.side, d.is_target) for d in hits[0].door_hits] == [(Side.RIGHT, True)]
    hits, _ = scan_axis(mask, CorridorParams(min_width=3, max_width=40, door_probe=4), Axis.VERTICAL)
    assert hits[0].door_hits == ()


def test_scan_horizontal_axis_probes_top_bottom():
    builder = MaskBuilder(16, 90)
    builder.corridor(7, 10, 7, 14)  # vertical 1-px strip in one column
    builder.door(7, 9, 7, 9)
    mask = builder.build()
    hits, _ = scan_axis(mask, CorridorParams(min_width=3, max_width=40), Axis.HORIZONTAL)
    assert [h.center for h in hits] == [(7, 12)]
    assert [(d.side, d.is_target) for d in hits[0].door_hits] == [(Side.TOP, False)]


def test_skeletonize_straight_corridor_row():
    builder = MaskBuilder(100, 20)
    builder.corridor(0, 0, 99, 19)
    skeleton = skeletonize(builder.build(), CorridorParams(min_width=3, max_width=40))
    assert skeleton.pixels == {(x, 9) for x in range(100)}
    assert skeleton.residual_shapes == ()


def test_skeletonize_plus_residual_at_crossing():
    builder = MaskBuilder(200, 200)
    builder.corridor(10, 90, 189, 109)  # 20 tall
    builder.corridor(90, 10, 109, 189)  # 20 wide
    skeleton = skeletonize(builder.build(), CorridorParams(min_width=3, max_width=40))
    assert len(skeleton.residual_shapes) == 1
    crossing = {(x, y) for x in range(90, 110) for y in range(90, 110)}
    assert set(skeleton.residual_shapes[0]) == crossing
    # two straight segments: horizontal centers at y=99, vertical at x=99
    assert {(x, 99) for x in range(10, 90)} <= skeleton.pixels
    assert {(99, y) for y in range(10, 90)} <= skeleton.pixels


def test_skeletonize_too_narrow_everywhere():
    builder = MaskBuilder(100, 10)
    builder.corridor(0, 4, 99, 5)  # 2 px tall, kept shorter than nothing useful
    with pytest.raises(CorridorError) as err:
        skeletonize(builder.build(), CorridorParams(min_width=8, max_width=20))
    assert err.value.code == "no-navigable-corridor"


def test_scanhit_equidistance_invariant(lshape_path, default_params):
    mask = load_mask(lshape_path)
    skeleton = skeletonize(mask, default_params)
    for hit in skeleton.hits:
        (nx, ny), (fx, fy) = hit.span
        cx, cy = hit.center
        near = abs(cx - nx) + abs(cy - ny)
        far = abs(fx - cx) + abs(fy - cy)
        assert abs(near - far) <= 1
        width = near + far + 1
        assert default_params.min_width <= width <= default_params.max_width


def test_conservation_partition(lshape_path, default_params):
    mask = load_mask(lshape_path)
    skeleton = skeletonize(mask, default_params)
    path = {(int(x), int(y)) for y, x in np.argwhere(mask.pixels_of(PixelClass.PATH))}
    shape_pixels = {p for shape in skeleton.residual_shapes for p in shape}
    assert skeleton.pixels | skeleton.removed | shape_pixels == path
    assert skeleton.pixels & skeleton.removed == set()
    assert skeleton.pixels & shape_pixels == set()
    assert skeleton.removed & shape_pixels == set()


def test_skeletonize_deterministic(lshape_path, default_params):
    mask = load_mask(lshape_path)
    first = skeletonize(mask, default_params)
    second = skeletonize(mask, default_params)
    assert first == second


def test_skeleton_tracks_ridge_of_distance_transform():
    builder = MaskBuilder(300, 60)
    builder.corridor(5, 20, 294, 39)  # 20 px tall straight corridor
    mask = builder.build()
    skeleton = skeletonize(mask, CorridorParams(min_width=3, max_width=45))
    edt = ndimage.distance_transform_edt(np.asarray(mask.pixels_of(PixelClass.PATH)))
    for hit in skeleton.hits:
        (nx, ny), (fx, fy) = hit.span
        cx, cy = hit.center
        if hit.axis is Axis.VERTICAL:
            line = edt[cy, nx : fx + 1]
            ridge = np.flatnonzero(line == line.max()) + nx
            assert np.min(np.abs(ridge - cx)) <= 1
        else:
            line = edt[ny : fy + 1, cx]
            ridge = np.flatnonzero(line == line.max()) + ny
            assert np.min(np.abs(ridge - cy)) <= 1
