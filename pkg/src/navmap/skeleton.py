"""Corridor centerline extraction by row-wise and column-wise run scanning.

Each image row is split into maximal runs of path pixels; a run whose
length falls inside the corridor width window yields one center pixel
(the vertical-corridor pass).  Columns are scanned the same way for
horizontal corridors.  Runs below the minimum width are deleted, runs
above the maximum are left for junction resolution.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np
from scipy import ndimage

from .errors import CorridorError
from .mask import EIGHT_CONNECTED, GridMask, Pixel, PixelClass


class Axis(Enum):
    VERTICAL = "vertical"  # row-by-row scan, detects corridors running vertically
    HORIZONTAL = "horizontal"  # column-by-column scan, detects horizontal corridors


class Side(Enum):
    LEFT = "left"
    RIGHT = "right"
    TOP = "top"
    BOTTOM = "bottom"


@dataclass(frozen=True)
class CorridorParams:
    """Width window for navigable corridors, in pixels.

    ``door_probe`` is how far beyond a corridor border the scanner looks
    for door pixels; it defaults to ``max_width``.
    """

    min_width: int = 8
    max_width: int = 60
    door_probe: int | None = None

    def __post_init__(self):
        if not 1 <= self.min_width < self.max_width:
            raise ValueError("need 1 <= min_width < max_width")
        if self.door_probe is None:
            object.__setattr__(self, "door_probe", self.max_width)
        if self.door_probe < 1:
            raise ValueError("door_probe must be >= 1")


@dataclass(frozen=True)
class DoorHit:
    """A door pixel seen from a corridor border during scanning."""

    side: Side
    is_target: bool
    door_pixel: Pixel


@dataclass(frozen=True)
class ScanHit:
    """One accepted border-pair measurement: a center pixel and its span."""

    center: Pixel
    axis: Axis
    span: tuple[Pixel, Pixel]
    door_hits: tuple[DoorHit, ...] = ()


@dataclass(frozen=True)
class Skeleton:
    """Center pixels plus the bookkeeping needed by later stages.

    ``residual_shapes`` holds the 8-connected components of path pixels
    that both scan passes deferred (over-wide regions, i.e. turning
    candidates).  ``removed`` holds path pixels consumed by scanning
    without becoming centers.
    """

    pixels: frozenset[Pixel]
    residual_shapes: tuple[tuple[Pixel, ...], ...]
    removed: frozenset[Pixel]
    hits: tuple[ScanHit, ...] = ()


def find_border_pixels(mask: GridMask) -> list[Pixel]:
    """Path pixels with at least one non-path 8-neighbor, in raster order.

    Pixels on the image edge count their missing neighbors as non-path.
    """
    path = mask.pixels_of(PixelClass.PATH)
    padded = np.pad(path, 1, constant_values=False)
    interior = np.ones_like(path)
    for dy in (-1, 0, 1):
        for dx in (-1, 0, 1):
            if dx == 0 and dy == 0:
                continue
            interior &= padded[1 + dy : 1 + dy + path.shape[0], 1 + dx : 1 + dx + path.shape[1]]
    border = path & ~interior
    return [(int(x), int(y)) for y, x in np.argwhere(border)]


def _runs(line: np.ndarray) -> list[tuple[int, int]]:
    """Maximal runs of True as inclusive (start, stop) index pairs."""
    idx = np.flatnonzero(line)
    if idx.size == 0:
        return []
    breaks = np.flatnonzero(np.diff(idx) > 1)
    starts = np.concatenate(([idx[0]], idx[breaks + 1]))
    stops = np.concatenate((idx[breaks], [idx[-1]]))
    return list(zip(starts.tolist(), stops.tolist()))


def _probe(classes: np.ndarray, side: Side, fixed: int, start: int, distance: int, axis: Axis):
    """Walk up to ``distance`` pixels outward from a span endpoint.

    Returns DoorHit entries for the first door pixel and the first
    target-door pixel encountered, in walk order.
    """
    if axis is Axis.VERTICAL:
        # span lies along x; fixed is the row
        if side is Side.LEFT:
            segment = classes[fixed, max(0, start - distance) : start][::-1]
            coords = [(start - 1 - i, fixed) for i in range(segment.size)]
        else:
            segment = classes[fixed, start + 1 : start + 1 + distance]
            coords = [(start + 1 + i, fixed) for i in range(segment.size)]
    else:
        # span lies along y; fixed is the column
        if side is Side.TOP:
            segment = classes[max(0, start - distance) : start, fixed][::-1]
            coords = [(fixed, start - 1 - i) for i in range(segment.size)]
        else:
            segment = classes[start + 1 : start + 1 + distance, fixed]
            coords = [(fixed, start + 1 + i) for i in range(segment.size)]
    hits = []
    for target, cls in ((False, PixelClass.DOOR), (True, PixelClass.TARGET_DOOR)):
        where = np.flatnonzero(segment == cls)
        if where.size:
            hits.append(DoorHit(side=side, is_target=target, door_pixel=coords[int(where[0])]))
    return hits


def scan_axis(
    mask: GridMask, params: CorridorParams, axis: Axis
) -> tuple[list[ScanHit], set[Pixel]]:
    """Scan rows (VERTICAL) or columns (HORIZONTAL) for corridor centers.

    Runs narrower than ``min_width`` are deleted into the removed set.
    Runs wider than ``max_width`` are left untouched.  Accepted runs
    yield one ScanHit at the lower-median position, all their remaining
    pixels go to the removed set, and both span endpoints are probed
    outward for doors.
    """
    classes = mask.classes
    path = mask.pixels_of(PixelClass.PATH)
    hits: list[ScanHit] = []
    removed: set[Pixel] = set()
    lines = path if axis is Axis.VERTICAL else path.T

    for fixed in range(lines.shape[0]):
        for lo, hi in _runs(lines[fixed]):
            width = hi - lo + 1
            if width < params.min_width:
                if axis is Axis.VERTICAL:
                    removed.update((x, fixed) for x in range(lo, hi + 1))
                else:
                    removed.update((fixed, y) for y in range(lo, hi + 1))
                continue
            if width > params.max_width:
                continue
            mid = lo + (hi - lo) // 2
            door_hits: list[DoorHit] = []
            if axis is Axis.VERTICAL:
                center = (mid, fixed)
                span = ((lo, fixed), (hi, fixed))
                door_hits += _probe(classes, Side.LEFT, fixed, lo, params.door_probe, axis)
                door_hits += _probe(classes, Side.RIGHT, fixed, hi, params.door_probe, axis)
                removed.update((x, fixed) for x in range(lo, hi + 1) if x != mid)
            else:
                center = (fixed, mid)
                span = ((fixed, lo), (fixed, hi))
                door_hits += _probe(classes, Side.TOP, fixed, lo, params.door_probe, axis)
                door_hits += _probe(classes, Side.BOTTOM, fixed, hi, params.door_probe, axis)
                removed.update((fixed, y) for y in range(lo, hi + 1) if y != mid)
            hits.append(ScanHit(center=center, axis=axis, span=span, door_hits=tuple(door_hits)))
    return hits, removed


def skeletonize(mask: GridMask, params: CorridorParams) -> Skeleton:
    """Run both scan passes and partition the path pixels.

    Every path pixel ends up exactly one of: a center, removed, or part
    of a residual shape (deferred by both passes).  Raises CorridorError
    when no run falls inside the width window.
    """
    v_hits, v_removed = scan_axis(mask, params, Axis.VERTICAL)
    h_hits, h_removed = scan_axis(mask, params, Axis.HORIZONTAL)
    hits = tuple(v_hits + h_hits)
    centers = {hit.center for hit in hits}
    if not centers:
        raise CorridorError(
            "no-navigable-corridor",
            f"no corridor with width in [{params.min_width}, {params.max_width}]",
        )
    removed = (v_removed | h_removed) - centers

    leftover = mask.pixels_of(PixelClass.PATH).copy()
    if centers:
        xs, ys = zip(*centers)
        leftover[np.array(ys), np.array(xs)] = False
    if removed:
        xs, ys = zip(*removed)
        leftover[np.array(ys), np.array(xs)] = False

    labels, count = ndimage.label(leftover, structure=EIGHT_CONNECTED)
    shapes = []
    for index in range(1, count + 1):
        coords = np.argwhere(labels == index)
        shape = tuple((int(x), int(y)) for y, x in coords)
        shapes.append(shape)
    shapes.sort(key=lambda shape: (shape[0][1], shape[0][0]))

    return Skeleton(
        pixels=frozenset(centers),
        residual_shapes=tuple(shapes),
        removed=frozenset(removed),
        hits=hits,
    )
