"""Translate a node sequence into turn instructions via triangle angles."""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .graph import NavGraph
from .mask import Pixel
from .routing import RoutePlan


class Direction(Enum):
    HARD_RIGHT = "hard_right"
    NORMAL_RIGHT = "normal_right"
    LIGHT_RIGHT = "light_right"
    STRAIGHT = "straight"
    LIGHT_LEFT = "light_left"
    NORMAL_LEFT = "normal_left"
    HARD_LEFT = "hard_left"


@dataclass(frozen=True)
class TurnInstruction:
    at_node: int
    angle: float
    direction: Direction

    @property
    def actionable(self) -> bool:
        return self.direction is not Direction.STRAIGHT


@dataclass(frozen=True)
class DirectionScript:
    """One instruction per interior route node plus the terminal door directive."""

    instructions: tuple[TurnInstruction, ...]
    terminal: object | None = None  # DoorDirective, attached by the pipeline


def triangle_angle(p1: Pixel, p2: Pixel, p3: Pixel) -> float:
    """Turn angle at p2 in degrees, in (0, 360).

    The triangle side lengths give the interior angle at p2 by the law of
    cosines; the cross product of the two travel legs decides whether that
    angle (right turn, below 180) or its reflex complement (left turn,
    above 180) is reported.  Collinear triples return exactly 180.  Image
    coordinates: y grows downward, so a positive cross product is a
    clockwise, i.e. right, turn.
    """
    if p1 == p2 or p2 == p3:
        raise ValueError("triangle legs must have nonzero length")
    line1_sq = (p2[0] - p1[0]) ** 2 + (p2[1] - p1[1]) ** 2
    line2_sq = (p3[0] - p2[0]) ** 2 + (p3[1] - p2[1]) ** 2
    line3_sq = (p3[0] - p1[0]) ** 2 + (p3[1] - p1[1]) ** 2
    cos_theta = (line1_sq + line2_sq - line3_sq) / (2.0 * math.sqrt(line1_sq * line2_sq))
    theta = math.degrees(math.acos(max(-1.0, min(1.0, cos_theta))))
    cross = (p2[0] - p1[0]) * (p3[1] - p2[1]) - (p2[1] - p1[1]) * (p3[0] - p2[0])
    if cross > 0:
        return theta
    if cross < 0:
        return 360.0 - theta
    return 180.0


def direction_for_angle(angle: float) -> Direction:
    """Bucket an angle from (0, 360) into one of the seven turn directions."""
    if not 0.0 < angle < 360.0:
        raise ValueError(f"angle must lie strictly between 0 and 360, got {angle}")
    if angle <= 45.0:
        return Direction.HARD_RIGHT
    if angle < 150.0:
        return Direction.NORMAL_RIGHT
    if angle < 180.0:
        return Direction.LIGHT_RIGHT
    if angle == 180.0:
        return Direction.STRAIGHT
    if angle <= 210.0:
        return Direction.LIGHT_LEFT
    if angle <= 315.0:
        return Direction.NORMAL_LEFT
    return Direction.HARD_LEFT


def compile_directions(route: RoutePlan, graph: NavGraph) -> DirectionScript:
    """Emit one TurnInstruction per interior route node; terminal left unset.

    Straight instructions stay in the script (flagged non-actionable via
    ``TurnInstruction.actionable``) so instruction count always equals the
    route node count minus two.
    """
    pixels = [graph.node_by_id(node_id).pixel for node_id in route.node_sequence]
    instructions = []
    for i in range(1, len(pixels) - 1):
        angle = triangle_angle(pixels[i - 1], pixels[i], pixels[i + 1])
        instructions.append(
            TurnInstruction(
                at_node=route.node_sequence[i],
                angle=angle,
                direction=direction_for_angle(angle),
            )
        )
    return DirectionScript(instructions=tuple(instructions))
