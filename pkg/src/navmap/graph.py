"""Convert the labeled skeleton into an undirected weighted graph."""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .errors import GraphError, RouteError
from .junctions import LandmarkSet, TurningNode
from .mask import Pixel
from .skeleton import Skeleton

# fixed neighbor iteration order: N, NE, E, SE, S, SW, W, NW
NEIGHBOR_ORDER = ((0, -1), (1, -1), (1, 0), (1, 1), (0, 1), (-1, 1), (-1, 0), (-1, -1))

SQRT2 = math.sqrt(2.0)


class NodeKind(Enum):
    TURNING = "turning"
    DOOR = "door"
    START = "start"
    END = "end"


class WalkOutcome(Enum):
    REACHED = "reached"
    CLOSED_PATH = "closed_path"
    DEAD_END = "dead_end"


@dataclass(frozen=True)
class NavNode:
    id: int
    pixel: Pixel
    kind: NodeKind


@dataclass(frozen=True)
class NavEdge:
    """Undirected edge stored with a < b; trace runs from a's pixel to b's."""

    a: int
    b: int
    length: float
    trace: tuple[Pixel, ...]


@dataclass(frozen=True)
class WalkResult:
    outcome: WalkOutcome
    trace: tuple[Pixel, ...]
    length: float


@dataclass(frozen=True)
class NavGraph:
    nodes: tuple[NavNode, ...]
    edges: tuple[NavEdge, ...]

    def node_by_id(self, node_id: int) -> NavNode:
        return self.nodes[node_id]

    def node_of_kind(self, kind: NodeKind) -> NavNode:
        for node in self.nodes:
            if node.kind is kind:
                return node
        raise GraphError("missing-node-kind", f"graph has no {kind.value} node")

    def edge_between(self, a: int, b: int) -> NavEdge:
        lo, hi = min(a, b), max(a, b)
        for edge in self.edges:
            if edge.a == lo and edge.b == hi:
                return edge
        raise GraphError("missing-edge", f"no edge between nodes {a} and {b}")

    def neighbors(self, node_id: int) -> list[tuple[int, NavEdge]]:
        out = []
        for edge in self.edges:
            if edge.a == node_id:
                out.append((edge.b, edge))
            elif edge.b == node_id:
                out.append((edge.a, edge))
        return out


def collect_nodes(
    skeleton: Skeleton, turnings: list[TurningNode], landmarks: LandmarkSet
) -> list[NavNode]:
    """Merge turning centers, door pixels, and start/end into one node list.

    A pixel holding both a door and the end is a single End node; any other
    kind collision is an upstream inconsistency.
    """
    kinds: dict[Pixel, NodeKind] = {}
    for turning in turnings:
        kinds[turning.center] = NodeKind.TURNING
    for door in landmarks.doors:
        existing = kinds.get(door.pixel)
        if existing is NodeKind.TURNING:
            raise GraphError(
                "conflicting-node-kinds", f"door and turning share pixel {door.pixel}"
            )
        kinds[door.pixel] = NodeKind.DOOR
    if kinds.get(landmarks.end) not in (None, NodeKind.DOOR):
        raise GraphError(
            "conflicting-node-kinds", f"end overlaps a {kinds[landmarks.end].value} node"
        )
    kinds[landmarks.end] = NodeKind.END
    if landmarks.start in kinds:
        raise GraphError(
            "conflicting-node-kinds", f"start overlaps a {kinds[landmarks.start].value} node"
        )
    kinds[landmarks.start] = NodeKind.START

    for pixel in kinds:
        if pixel not in skeleton.pixels:
            raise GraphError("node-off-skeleton", f"node pixel {pixel} is not on the skeleton")

    ordered = sorted(kinds, key=lambda p: (p[1], p[0]))
    return [NavNode(id=i, pixel=pixel, kind=kinds[pixel]) for i, pixel in enumerate(ordered)]


def _step_cost(a: Pixel, b: Pixel) -> float:
    return SQRT2 if a[0] != b[0] and a[1] != b[1] else 1.0


def _adjacent(a: Pixel, b: Pixel) -> bool:
    return a != b and abs(a[0] - b[0]) <= 1 and abs(a[1] - b[1]) <= 1


def walk_to_next_node(
    skeleton: Skeleton, nodes: list[NavNode], node_pixel: Pixel, first_step: Pixel
) -> WalkResult:
    """Follow skeleton pixels from a node until another node, a dead end,
    or the starting node (closed path).

    The walk never steps back onto the immediately previous pixel.  A
    branching pixel that is not a node means junction resolution missed a
    turning, which is reported as an error rather than guessed through.
    """
    node_pixels = {node.pixel for node in nodes}
    return _walk(skeleton.pixels, node_pixels, node_pixel, first_step)


def _walk(
    skeleton_pixels: frozenset[Pixel],
    node_pixels: set[Pixel],
    node_pixel: Pixel,
    first_step: Pixel,
) -> WalkResult:
    if first_step not in skeleton_pixels:
        raise GraphError("bad-first-step", f"{first_step} is not a skeleton pixel")
    if not _adjacent(first_step, node_pixel):
        raise GraphError("bad-first-step", f"{first_step} is not adjacent to {node_pixel}")
    prev, cur = node_pixel, first_step
    trace = [node_pixel]
    length = 0.0
    while True:
        trace.append(cur)
        length += _step_cost(prev, cur)
        if cur == node_pixel:
            return WalkResult(WalkOutcome.CLOSED_PATH, tuple(trace), length)
        if cur in node_pixels:
            return WalkResult(WalkOutcome.REACHED, tuple(trace), length)
        forward = [
            (cur[0] + dx, cur[1] + dy)
            for dx, dy in NEIGHBOR_ORDER
            if (cur[0] + dx, cur[1] + dy) in skeleton_pixels and (cur[0] + dx, cur[1] + dy) != prev
        ]
        if prev == node_pixel:
            # On the very first step, the origin node's other neighbors are
            # the starts of other walks, not continuations of this one.
            forward = [p for p in forward if not _adjacent(p, node_pixel)]
        if len(forward) > 1:
            # Thick corners: a diagonal candidate adjacent to an orthogonal
            # one is a shortcut across that corner, not a separate branch.
            orthogonal = [p for p in forward if p[0] == cur[0] or p[1] == cur[1]]
            forward = [
                p
                for p in forward
                if p in orthogonal or not any(_adjacent(p, o) for o in orthogonal)
            ]
        if len(forward) > 1:
            # Staircase chains: the pixel two steps back stays diagonally
            # adjacent; a diagonal candidate touching prev lies behind the
            # walk, while an orthogonal one may be a genuine branch.
            kept = [
                p
                for p in forward
                if (p[0] == cur[0] or p[1] == cur[1]) or not _adjacent(p, prev)
            ]
            if kept:
                forward = kept
        if not forward:
            return WalkResult(WalkOutcome.DEAD_END, tuple(trace), length)
        if len(forward) > 1:
            on_nodes = [p for p in forward if p in node_pixels]
            if not on_nodes:
                raise GraphError(
                    "unlabeled-junction",
                    f"branching skeleton pixel {cur} is not a node; "
                    "turning resolution missed a junction",
                )
            prev, cur = cur, on_nodes[0]
        else:
            prev, cur = cur, forward[0]


def connect_nodes(skeleton: Skeleton, nodes: list[NavNode]) -> NavGraph:
    """Walk outward from every node along the skeleton and record edges.

    Each undirected pair keeps one edge; parallel walks between the same
    pair keep the shorter trace (first found wins ties).  Raises when the
    start and end nodes end up in different components.
    """
    if not nodes:
        raise GraphError("no-nodes", "cannot build a graph without nodes")
    by_pixel = {node.pixel: node for node in nodes}
    node_pixels = set(by_pixel)
    edges: dict[tuple[int, int], tuple[float, tuple[Pixel, ...]]] = {}

    for node in sorted(nodes, key=lambda n: n.id):
        x, y = node.pixel
        for dx, dy in NEIGHBOR_ORDER:
            step = (x + dx, y + dy)
            if step not in skeleton.pixels:
                continue
            result = _walk(skeleton.pixels, node_pixels, node.pixel, step)
            if result.outcome is not WalkOutcome.REACHED:
                continue
            other = by_pixel[result.trace[-1]]
            key = (min(node.id, other.id), max(node.id, other.id))
            trace = result.trace if node.id <= other.id else result.trace[::-1]
            existing = edges.get(key)
            if existing is None or result.length < existing[0] - 1e-9:
                edges[key] = (result.length, trace)

    edge_tuple = tuple(
        NavEdge(a=a, b=b, length=length, trace=trace)
        for (a, b), (length, trace) in sorted(edges.items())
    )
    graph = NavGraph(nodes=tuple(nodes), edges=edge_tuple)

    start = graph.node_of_kind(NodeKind.START)
    end = graph.node_of_kind(NodeKind.END)
    seen = {start.id}
    frontier = [start.id]
    while frontier:
        nxt = []
        for nid in frontier:
            for nbr, _ in graph.neighbors(nid):
                if nbr not in seen:
                    seen.add(nbr)
                    nxt.append(nbr)
        frontier = nxt
    if end.id not in seen:
        raise RouteError("no-route", "start and target door are not connected")
    return graph
