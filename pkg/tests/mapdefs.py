"""Bundled fixture map geometry, shared by the generator script and the tests.

Every fixture keeps corridor lengths above max_width so lengthwise runs
defer instead of producing bogus centers, and widths inside the window.
Expected values (node pixels, directive) are derived from the geometry by
hand and frozen here.
"""

from __future__ import annotations

from pathlib import Path

from navmap import CorridorParams, MaskBuilder

FIXTURE_DIR = Path(__file__).parent / "fixtures"

DEFAULT_PARAMS = CorridorParams(min_width=8, max_width=60)


def build_lshape() -> MaskBuilder:
    """L corridor: horizontal arm west-east, vertical arm rising at the east end."""
    b = MaskBuilder(160, 160)
    b.corridor(10, 100, 129, 113)  # horizontal arm, 14 px tall
    b.corridor(116, 10, 129, 113)  # vertical arm, 14 px wide
    b.start(10, 103, 13, 110)
    b.door(40, 94, 47, 99)  # above the horizontal arm
    b.door(70, 114, 77, 119)  # below the horizontal arm
    b.target_door(130, 20, 135, 27)  # east of the vertical arm, near its top
    return b


LSHAPE_CLASS_COUNTS = {
    "BACKGROUND": 160 * 160 - 2908 - 96 - 48 - 32,
    "PATH": 2908,  # 120*14 + 14*104 - 14*14 overlap - 32 start carve
    "DOOR": 96,
    "TARGET_DOOR": 48,
    "START_MARKER": 32,
}


def build_plus() -> MaskBuilder:
    """Plus crossing with one dead arm; target on the bottom arm's east side."""
    b = MaskBuilder(200, 200)
    b.corridor(10, 93, 189, 106)  # horizontal bar
    b.corridor(93, 10, 106, 189)  # vertical bar
    b.start(10, 96, 13, 103)
    b.door(140, 87, 147, 92)  # right arm, above
    b.door(87, 130, 92, 137)  # bottom arm, west side
    b.door(107, 140, 112, 147)  # bottom arm, east side
    b.target_door(107, 160, 112, 167)  # bottom arm, east side, past the doors
    return b


def build_straight() -> MaskBuilder:
    """Single straight corridor with one door below and the target above."""
    b = MaskBuilder(200, 80)
    b.corridor(10, 30, 189, 43)
    b.start(10, 33, 13, 40)
    b.door(80, 44, 87, 49)
    b.target_door(160, 24, 167, 29)
    return b


def build_facing() -> MaskBuilder:
    """Two door regions facing each other across the corridor (same skeleton pixel)."""
    b = MaskBuilder(180, 110)
    b.corridor(10, 50, 169, 63)
    b.start(10, 53, 13, 60)
    b.door(60, 44, 67, 49)  # above
    b.door(60, 64, 67, 69)  # below, facing the one above
    b.target_door(150, 44, 157, 49)
    return b


BUILDERS = {
    "lshape": build_lshape,
    "plus": build_plus,
    "straight": build_straight,
    "facing": build_facing,
}

# (travel side, ordinal, corridor axis) per fixture, derived geometrically
EXPECTED_DIRECTIVES = {
    "lshape": ("right", 1, "vertical"),
    "plus": ("left", 2, "vertical"),
    "straight": ("left", 1, "horizontal"),
    "facing": ("left", 2, "horizontal"),
}


def fixture_path(name: str) -> Path:
    return FIXTURE_DIR / f"{name}.png"
