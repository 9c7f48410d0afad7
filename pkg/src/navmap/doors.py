"""Resolve the target door's travel-relative side and ordinal in the final corridor."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import GraphError
from .graph import NavGraph
from .junctions import LandmarkSet
from .routing import RoutePlan
from .skeleton import Axis, Side

_SIDE_NORMALS = {
    Side.TOP: (0, -1),
    Side.BOTTOM: (0, 1),
    Side.LEFT: (-1, 0),
    Side.RIGHT: (1, 0),
}


@dataclass(frozen=True)
class DoorDirective:
    """The terminal instruction: the Nth door on the robot's left or right."""

    side: Side
    ordinal: int
    corridor_axis: Axis


def classify_final_corridor(route: RoutePlan, graph: NavGraph) -> tuple[Axis, tuple[int, int]]:
    """Axis of the last route leg and the unit heading toward the end node.

    Equal spans classify as vertical (the >= rule).
    """
    if len(route.node_sequence) < 2:
        raise ValueError("route needs at least two nodes")
    px, py = graph.node_by_id(route.node_sequence[-2]).pixel
    ex, ey = graph.node_by_id(route.node_sequence[-1]).pixel
    line_height = abs(ey - py)
    line_width = abs(ex - px)
    axis = Axis.VERTICAL if line_height >= line_width else Axis.HORIZONTAL
    heading = ((ex > px) - (ex < px), (ey > py) - (ey < py))
    return axis, heading


def travel_side(heading: tuple[int, int], mask_side: Side) -> Side:
    """Map a door's geometric side tag to the robot's left or right.

    With y growing downward, a door normal clockwise from the heading is on
    the robot's right.  Tags parallel to travel (only possible for doors
    probed along the corridor axis at a crossing) resolve to right.
    """
    hx, hy = heading
    nx, ny = _SIDE_NORMALS[mask_side]
    cross = hx * ny - hy * nx
    return Side.LEFT if cross < 0 else Side.RIGHT


def resolve_target_door(
    route: RoutePlan, landmarks: LandmarkSet, graph: NavGraph
) -> DoorDirective:
    """Count same-side doors along the final corridor up to the target.

    Doors are ordered by trace position from the approach (penultimate)
    node; the ordinal is the target's 1-based rank among doors sharing its
    travel-relative side.  Approaching from the opposite end therefore
    inverts every side and reverses the counting order.
    """
    if len(route.node_sequence) < 2:
        raise ValueError("route needs at least two nodes")
    penultimate, end = route.node_sequence[-2], route.node_sequence[-1]
    edge = graph.edge_between(penultimate, end)
    trace = edge.trace
    if trace and trace[0] != graph.node_by_id(penultimate).pixel:
        trace = trace[::-1]
    position = {pixel: i for i, pixel in enumerate(trace)}

    axis, heading = classify_final_corridor(route, graph)

    on_trace = [
        (position[d.pixel], d.pixel[1], d.pixel[0], d.side.value, d)
        for d in landmarks.doors
        if d.pixel in position
    ]
    on_trace.sort(key=lambda item: item[:4])

    target_entries = [d for *_, d in on_trace if d.is_target]
    if not target_entries:
        raise GraphError(
            "target-door-off-trace", "target door does not lie on the final route edge"
        )
    target = target_entries[0]
    side = travel_side(heading, target.side)

    ordinal = 0
    for *_, door in on_trace:
        if travel_side(heading, door.side) is side:
            ordinal += 1
        if door is target:
            break
    return DoorDirective(side=side, ordinal=ordinal, corridor_axis=axis)
