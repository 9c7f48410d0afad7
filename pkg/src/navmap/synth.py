"""Programmatic construction of classified floor-plan masks."""

from __future__ import annotations

from pathlib import Path

import numpy as np

from .mask import ColorMap, GridMask, PixelClass, render_overlay


class MaskBuilder:
    """Paints class rectangles onto a grid; later paints overwrite earlier ones."""

    def __init__(self, width: int, height: int):
        self._classes = np.zeros((height, width), dtype=np.uint8)

    def rect(self, cls: PixelClass, x0: int, y0: int, x1: int, y1: int) -> "MaskBuilder":
        """Fill the inclusive rectangle [x0, x1] x [y0, y1] with one class."""
        h, w = self._classes.shape
        if not (0 <= x0 <= x1 < w and 0 <= y0 <= y1 < h):
            raise ValueError(f"rectangle ({x0},{y0})-({x1},{y1}) outside {w}x{h} grid")
        self._classes[y0 : y1 + 1, x0 : x1 + 1] = cls
        return self

    def corridor(self, x0, y0, x1, y1):
        return self.rect(PixelClass.PATH, x0, y0, x1, y1)

    def door(self, x0, y0, x1, y1):
        return self.rect(PixelClass.DOOR, x0, y0, x1, y1)

    def target_door(self, x0, y0, x1, y1):
        return self.rect(PixelClass.TARGET_DOOR, x0, y0, x1, y1)

    def start(self, x0, y0, x1, y1):
        return self.rect(PixelClass.START_MARKER, x0, y0, x1, y1)

    def build(self) -> GridMask:
        return GridMask(self._classes)

    def save_png(self, path: str | Path, colors: ColorMap | None = None) -> Path:
        """Write the mask as a PNG in the ColorMap's colors."""
        return render_overlay(self.build(), path, colors=colors)
