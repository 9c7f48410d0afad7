"""Loading, validation, and rendering of classified floor-plan rasters.

A mask raster assigns every pixel one of five classes: background, main
path, door, target door, or start marker.  Coordinates follow the image
convention: ``(x, y)`` with x growing rightward and y growing downward.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import IntEnum
from pathlib import Path

import numpy as np
from PIL import Image, UnidentifiedImageError
from scipy import ndimage

from .errors import MaskError

Pixel = tuple[int, int]  # (x, y)

FOUR_CONNECTED = np.array([[0, 1, 0], [1, 1, 1], [0, 1, 0]], dtype=np.uint8)
EIGHT_CONNECTED = np.ones((3, 3), dtype=np.uint8)


class PixelClass(IntEnum):
    BACKGROUND = 0
    PATH = 1
    DOOR = 2
    TARGET_DOOR = 3
    START_MARKER = 4


_COLOR_KEYS = {
    "path": PixelClass.PATH,
    "door": PixelClass.DOOR,
    "target_door": PixelClass.TARGET_DOOR,
    "target-door": PixelClass.TARGET_DOOR,
    "start": PixelClass.START_MARKER,
    "start_marker": PixelClass.START_MARKER,
    "start-marker": PixelClass.START_MARKER,
}

Rgb = tuple[int, int, int]


@dataclass(frozen=True)
class ColorMap:
    """Injective mapping from RGB triples to the four non-background classes.

    Any color not present in the mapping classifies as background.
    """

    path: Rgb = (0xFF, 0xFF, 0xFF)
    door: Rgb = (0x00, 0xFF, 0x00)
    target_door: Rgb = (0x00, 0x00, 0xFF)
    start: Rgb = (0xFF, 0x00, 0x00)

    def __post_init__(self):
        colors = [self.path, self.door, self.target_door, self.start]
        for color in colors:
            if len(color) != 3 or not all(0 <= c <= 255 for c in color):
                raise ValueError(f"not an RGB triple: {color!r}")
        if len(set(colors)) != 4:
            raise ValueError("class colors must be pairwise distinct")

    def items(self) -> list[tuple[Rgb, PixelClass]]:
        return [
            (self.path, PixelClass.PATH),
            (self.door, PixelClass.DOOR),
            (self.target_door, PixelClass.TARGET_DOOR),
            (self.start, PixelClass.START_MARKER),
        ]

    def color_of(self, cls: PixelClass) -> Rgb:
        for color, known in self.items():
            if known is cls:
                return color
        raise KeyError(f"no color for {cls!r}")

    @classmethod
    def from_file(cls, path: str | Path) -> "ColorMap":
        """Parse a ``key=hex`` file; keys are path/door/target_door/start."""
        values: dict[str, Rgb] = {}
        for raw in Path(path).read_text().splitlines():
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            if "=" not in line:
                raise ValueError(f"bad colormap line: {raw!r}")
            key, _, value = line.partition("=")
            key = key.strip().lower()
            if key not in _COLOR_KEYS:
                raise ValueError(f"unknown colormap key: {key!r}")
            hexval = value.strip().lstrip("#")
            if len(hexval) != 6:
                raise ValueError(f"expected 6 hex digits for {key}: {value.strip()!r}")
            rgb = tuple(int(hexval[i : i + 2], 16) for i in (0, 2, 4))
            canonical = _COLOR_KEYS[key].name.lower()
            values[canonical] = rgb
        kwargs = {
            "path": values.get("path"),
            "door": values.get("door"),
            "target_door": values.get("target_door"),
            "start": values.get("start_marker"),
        }
        missing = [k for k, v in kwargs.items() if v is None]
        if missing:
            raise ValueError(f"colormap file missing keys: {', '.join(missing)}")
        return cls(**kwargs)


DEFAULT_COLORS = ColorMap()


@dataclass(frozen=True)
class GridMask:
    """Classified raster; ``classes`` is a read-only (height, width) array."""

    classes: np.ndarray

    def __post_init__(self):
        arr = np.ascontiguousarray(np.asarray(self.classes, dtype=np.uint8))
        if arr.ndim != 2 or arr.size == 0:
            raise MaskError("empty-grid", "mask must be a non-empty 2-D grid")
        if arr.max(initial=0) > max(PixelClass):
            raise MaskError("bad-class-value", "grid holds values outside PixelClass")
        arr = arr.copy()
        arr.flags.writeable = False
        object.__setattr__(self, "classes", arr)

    @property
    def width(self) -> int:
        return self.classes.shape[1]

    @property
    def height(self) -> int:
        return self.classes.shape[0]

    def in_bounds(self, pixel: Pixel) -> bool:
        x, y = pixel
        return 0 <= x < self.width and 0 <= y < self.height

    def class_at(self, pixel: Pixel) -> PixelClass:
        x, y = pixel
        return PixelClass(self.classes[y, x])

    def pixels_of(self, cls: PixelClass) -> np.ndarray:
        """Boolean (height, width) array selecting one class."""
        return self.classes == cls

    def class_counts(self) -> dict[PixelClass, int]:
        counts = np.bincount(self.classes.ravel(), minlength=len(PixelClass))
        return {cls: int(counts[cls]) for cls in PixelClass}


def classify_image(rgb: np.ndarray, colors: ColorMap | None = None) -> GridMask:
    """Classify an (h, w, 3) uint8 array into a GridMask without validating it."""
    colors = colors or DEFAULT_COLORS
    rgb = np.asarray(rgb, dtype=np.uint8)
    if rgb.ndim != 3 or rgb.shape[2] != 3:
        raise MaskError("bad-image-shape", f"expected (h, w, 3) RGB data, got {rgb.shape}")
    packed = (
        rgb[:, :, 0].astype(np.uint32) << 16
        | rgb[:, :, 1].astype(np.uint32) << 8
        | rgb[:, :, 2].astype(np.uint32)
    )
    classes = np.zeros(packed.shape, dtype=np.uint8)
    for (r, g, b), cls in colors.items():
        classes[packed == (r << 16 | g << 8 | b)] = cls
    return GridMask(classes)


def validate_mask(mask: GridMask) -> None:
    """Check the load-time invariants, raising MaskError with a rule-named code."""
    counts = mask.class_counts()
    if counts[PixelClass.PATH] == 0:
        raise MaskError("no-path-pixels", "mask contains no main-path pixels")
    _require_single_region(mask, PixelClass.START_MARKER, "start-marker")
    _require_single_region(mask, PixelClass.TARGET_DOOR, "target-door")


def _require_single_region(mask: GridMask, cls: PixelClass, label: str) -> None:
    _, count = ndimage.label(mask.pixels_of(cls), structure=FOUR_CONNECTED)
    if count == 0:
        raise MaskError(f"no-{label}", f"mask contains no {label} region")
    if count > 1:
        raise MaskError(
            f"multiple-{label}s", f"mask contains {count} {label} regions, expected exactly one"
        )


def load_mask(
    path: str | Path, colors: ColorMap | None = None, validate: bool = True
) -> GridMask:
    """Load a PNG or binary PGM/PPM raster and classify it.

    Alpha channels are ignored; grayscale images are promoted to RGB before
    the color lookup, so a PGM's white pixels still classify as path.
    """
    try:
        with Image.open(path) as img:
            rgb = np.asarray(img.convert("RGB"))
    except (OSError, UnidentifiedImageError, ValueError) as exc:
        raise MaskError("unreadable-file", f"cannot decode {path}: {exc}") from None
    mask = classify_image(rgb, colors)
    if validate:
        validate_mask(mask)
    return mask


SKELETON_COLOR: Rgb = (0, 0, 0)
NODE_COLOR: Rgb = (255, 0, 0)
ROUTE_COLOR: Rgb = (255, 165, 0)


def _background_render_color(colors: ColorMap) -> Rgb:
    mapped = {color for color, _ in colors.items()}
    gray = 220
    while (gray, gray, gray) in mapped:
        gray -= 1
    return (gray, gray, gray)


def render_overlay(
    mask: GridMask,
    out_path: str | Path,
    skeleton=None,
    graph=None,
    route=None,
    colors: ColorMap | None = None,
) -> Path:
    """Write a PNG: class colors, skeleton black, route orange, nodes red.

    Output bytes are deterministic for fixed inputs.  Rendering a mask with
    no layers recolors the input; reloading that PNG with the same ColorMap
    reproduces the class grid (the background render color is unmapped).
    """
    colors = colors or DEFAULT_COLORS
    canvas = np.empty((mask.height, mask.width, 3), dtype=np.uint8)
    canvas[:] = _background_render_color(colors)
    for color, cls in colors.items():
        canvas[mask.pixels_of(cls)] = color

    if skeleton is not None:
        for x, y in skeleton.pixels:
            if not mask.in_bounds((x, y)):
                raise ValueError(f"skeleton pixel out of bounds: {(x, y)}")
            canvas[y, x] = SKELETON_COLOR

    if route is not None:
        if graph is None:
            raise ValueError("rendering a route requires the graph it indexes into")
        for a, b in zip(route.node_sequence, route.node_sequence[1:]):
            edge = graph.edge_between(a, b)
            for x, y in edge.trace:
                if not mask.in_bounds((x, y)):
                    raise ValueError(f"route trace pixel out of bounds: {(x, y)}")
                canvas[y, x] = ROUTE_COLOR

    if graph is not None:
        for node in graph.nodes:
            x, y = node.pixel
            if not mask.in_bounds((x, y)):
                raise ValueError(f"graph node out of bounds: {(x, y)}")
            # 3x3 dot, clipped at the image edge, so nodes stay visible
            canvas[max(0, y - 1) : y + 2, max(0, x - 1) : x + 2] = NODE_COLOR

    out_path = Path(out_path)
    Image.fromarray(canvas, mode="RGB").save(out_path, format="PNG")
    return out_path
