"""Turning-shape resolution and door/start/end landmark attachment."""

from __future__ import annotations

from dataclasses import dataclass, replace

import numpy as np
from scipy import ndimage

from .errors import LandmarkError
from .mask import EIGHT_CONNECTED, GridMask, Pixel, PixelClass
from .skeleton import CorridorParams, ScanHit, Side, Skeleton

NEIGHBORS_8 = ((0, -1), (1, -1), (1, 0), (1, 1), (0, 1), (-1, 1), (-1, 0), (-1, -1))


@dataclass(frozen=True)
class TurningNode:
    """A residual shape collapsed to its center, wired back to the skeleton."""

    center: Pixel
    connectors: tuple[tuple[Pixel, ...], ...]


@dataclass(frozen=True)
class DoorLandmark:
    """A door attached to a skeleton pixel, tagged with its geometric side."""

    pixel: Pixel
    side: Side
    is_target: bool
    region_centroid: tuple[float, float]


@dataclass(frozen=True)
class LandmarkSet:
    doors: tuple[DoorLandmark, ...]
    start: Pixel
    end: Pixel


def bresenham(p0: Pixel, p1: Pixel) -> list[Pixel]:
    """8-connected straight line from p0 to p1, inclusive."""
    x0, y0 = p0
    x1, y1 = p1
    dx, dy = abs(x1 - x0), -abs(y1 - y0)
    sx = 1 if x0 < x1 else -1
    sy = 1 if y0 < y1 else -1
    err = dx + dy
    line = []
    while True:
        line.append((x0, y0))
        if (x0, y0) == (x1, y1):
            return line
        doubled = 2 * err
        if doubled >= dy:
            err += dy
            x0 += sx
        if doubled <= dx:
            err += dx
            y0 += sy


def _erode_to_center(shape: set[Pixel]) -> Pixel | None:
    """Strip border layers until a pixel is left with no 8-neighbors in the set.

    Returns None when the shape erodes away without ever isolating a pixel
    (thin shapes), which triggers the centroid fallback.
    """
    xs = [x for x, _ in shape]
    ys = [y for _, y in shape]
    x0, y0 = min(xs), min(ys)
    grid = np.zeros((max(ys) - y0 + 3, max(xs) - x0 + 3), dtype=bool)
    for x, y in shape:
        grid[y - y0 + 1, x - x0 + 1] = True

    while grid.any():
        neighbor_count = np.zeros(grid.shape, dtype=np.int8)
        for dx, dy in NEIGHBORS_8:
            neighbor_count += np.roll(np.roll(grid, dy, axis=0), dx, axis=1)
        isolated = grid & (neighbor_count == 0)
        if isolated.any():
            iy, ix = np.argwhere(isolated)[0]  # argwhere is (y, x) sorted
            return (int(ix) + x0 - 1, int(iy) + y0 - 1)
        grid &= neighbor_count == 8
    return None


def _centroid_pixel(shape: tuple[Pixel, ...]) -> Pixel:
    cx = sum(x for x, _ in shape) / len(shape)
    cy = sum(y for _, y in shape) / len(shape)
    return min(shape, key=lambda p: ((p[0] - cx) ** 2 + (p[1] - cy) ** 2, p[1], p[0]))


def resolve_turnings(skeleton: Skeleton) -> tuple[list[TurningNode], Skeleton]:
    """Collapse each residual shape to one center and connect it to the skeleton.

    Shapes touched by fewer than two skeleton pixels are dead-end stubs and
    are discarded.  Every consumed shape pixel that does not become part of
    the skeleton moves to the removed set.
    """
    base = skeleton.pixels
    nodes: list[TurningNode] = []
    added: set[Pixel] = set()
    removed = set(skeleton.removed)

    for shape in skeleton.residual_shapes:
        shape_set = set(shape)
        touching = sorted(
            {
                (px + dx, py + dy)
                for px, py in shape
                for dx, dy in NEIGHBORS_8
                if (px + dx, py + dy) in base
            },
            key=lambda p: (p[1], p[0]),
        )
        if len(touching) < 2:
            removed.update(shape_set)
            continue
        center = _erode_to_center(shape_set) or _centroid_pixel(shape)
        connectors = tuple(tuple(bresenham(center, t)) for t in touching)
        used = {center} | {p for line in connectors for p in line}
        added |= used - base
        removed.update(shape_set - used)
        nodes.append(TurningNode(center=center, connectors=connectors))

    updated = replace(
        skeleton,
        pixels=frozenset(base | added),
        residual_shapes=(),
        removed=frozenset(removed - added),
    )
    return nodes, updated


def _region_centroids(labels: np.ndarray, count: int) -> dict[int, tuple[float, float]]:
    centroids = {}
    for index, (cy, cx) in enumerate(
        ndimage.center_of_mass(labels > 0, labels, range(1, count + 1)), start=1
    ):
        centroids[index] = (float(cx), float(cy))
    return centroids


def attach_landmarks(
    skeleton: Skeleton, mask: GridMask, hits: tuple[ScanHit, ...], params: CorridorParams
) -> LandmarkSet:
    """Collapse scan-time door hits per door region and locate start/end.

    Several scan lines of the same corridor see the same door region; they
    collapse to the one skeleton pixel nearest the region centroid.  The
    start node is the start-marker centroid snapped to the nearest
    skeleton pixel.
    """
    door_labels, door_count = ndimage.label(
        mask.pixels_of(PixelClass.DOOR), structure=EIGHT_CONNECTED
    )
    target_labels, target_count = ndimage.label(
        mask.pixels_of(PixelClass.TARGET_DOOR), structure=EIGHT_CONNECTED
    )
    door_centroids = _region_centroids(door_labels, door_count)
    target_centroids = _region_centroids(target_labels, target_count)

    grouped: dict[tuple[bool, int], list[tuple[Pixel, Side]]] = {}
    for hit in hits:
        for door_hit in hit.door_hits:
            dx, dy = door_hit.door_pixel
            labels = target_labels if door_hit.is_target else door_labels
            region = int(labels[dy, dx])
            if region == 0:
                continue
            grouped.setdefault((door_hit.is_target, region), []).append(
                (hit.center, door_hit.side)
            )

    doors = []
    for (is_target, region), candidates in grouped.items():
        cx, cy = (target_centroids if is_target else door_centroids)[region]
        pixel, side = min(
            candidates,
            key=lambda c: ((c[0][0] - cx) ** 2 + (c[0][1] - cy) ** 2, c[0][1], c[0][0], c[1].value),
        )
        doors.append(
            DoorLandmark(pixel=pixel, side=side, is_target=is_target, region_centroid=(cx, cy))
        )
    doors.sort(key=lambda d: (d.pixel[1], d.pixel[0], d.side.value, d.is_target))

    targets = [d for d in doors if d.is_target]
    if not targets:
        raise LandmarkError(
            "target-door-unreachable",
            "no corridor scan line reached the target door within the probe distance",
        )
    end = targets[0].pixel

    marker = np.argwhere(mask.pixels_of(PixelClass.START_MARKER))
    if marker.size == 0:
        raise LandmarkError("no-start-marker", "mask has no start marker")
    my, mx = marker.mean(axis=0)
    start, dist_sq = None, None
    for px, py in sorted(skeleton.pixels, key=lambda p: (p[1], p[0])):
        d = (px - mx) ** 2 + (py - my) ** 2
        if dist_sq is None or d < dist_sq:
            start, dist_sq = (px, py), d
    if dist_sq is None or dist_sq > params.max_width**2:
        raise LandmarkError(
            "start-not-on-main-path",
            f"no skeleton pixel within {params.max_width} px of the start marker",
        )

    return LandmarkSet(doors=tuple(doors), start=start, end=end)
