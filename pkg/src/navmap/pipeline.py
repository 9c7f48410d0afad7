"""End-to-end orchestration and knowledge-base serialization."""

from __future__ import annotations

import dataclasses
import hashlib
import json
from contextlib import contextmanager
from dataclasses import dataclass
from pathlib import Path

from .directions import DirectionScript, compile_directions
from .doors import DoorDirective, resolve_target_door
from .errors import GraphError, NavMapError
from .graph import NavGraph, NodeKind, collect_nodes, connect_nodes
from .junctions import attach_landmarks, resolve_turnings
from .mask import ColorMap, load_mask
from .routing import RoutePlan, k_shortest_paths, optimal_path
from .skeleton import CorridorParams, skeletonize

TOOL_VERSION = "0.1.0"


@dataclass(frozen=True)
class KnowledgeBase:
    """Everything a navigating agent needs for one analyzed map."""

    map_id: str
    graph: NavGraph
    route: RoutePlan
    directions: DirectionScript
    door_directive: DoorDirective
    params: CorridorParams
    provenance: dict


@contextmanager
def _stage(name: str):
    try:
        yield
    except NavMapError as exc:
        if exc.stage is None:
            exc.stage = name
        raise


def run_pipeline(
    input_path: str | Path,
    params: CorridorParams | None = None,
    colors: ColorMap | None = None,
    k: int = 3,
) -> KnowledgeBase:
    """Run mask loading through door resolution and assemble the knowledge base.

    Deterministic for fixed inputs; any stage error is re-raised with the
    stage name attached.
    """
    input_path = Path(input_path)
    params = params or CorridorParams()

    with _stage("mask-io"):
        mask = load_mask(input_path, colors)
    with _stage("medial-axis"):
        skeleton = skeletonize(mask, params)
    with _stage("junction-labeler"):
        turnings, skeleton = resolve_turnings(skeleton)
        landmarks = attach_landmarks(skeleton, mask, skeleton.hits, params)
    with _stage("nav-graph"):
        nodes = collect_nodes(skeleton, turnings, landmarks)
        graph = connect_nodes(skeleton, nodes)
    with _stage("route-planner"):
        start = graph.node_of_kind(NodeKind.START)
        end = graph.node_of_kind(NodeKind.END)
        candidates = k_shortest_paths(graph, start.id, end.id, k)
        route = optimal_path(candidates)
    with _stage("direction-compiler"):
        script = compile_directions(route, graph)
    with _stage("door-resolver"):
        directive = resolve_target_door(route, landmarks, graph)
        script = dataclasses.replace(script, terminal=directive)

    provenance = {
        "input_sha256": hashlib.sha256(input_path.read_bytes()).hexdigest(),
        "tool_version": TOOL_VERSION,
    }
    return KnowledgeBase(
        map_id=input_path.stem,
        graph=graph,
        route=route,
        directions=script,
        door_directive=directive,
        params=params,
        provenance=provenance,
    )


def _round_floats(value):
    if isinstance(value, float):
        return round(value, 3)
    if isinstance(value, dict):
        return {key: _round_floats(item) for key, item in value.items()}
    if isinstance(value, (list, tuple)):
        return [_round_floats(item) for item in value]
    return value


def knowledge_base_to_dict(kb: KnowledgeBase) -> dict:
    """Plain-data view of a knowledge base, ready for canonical JSON."""
    return {
        "map_id": kb.map_id,
        "params": {
            "min_width": kb.params.min_width,
            "max_width": kb.params.max_width,
            "door_probe": kb.params.door_probe,
        },
        "graph": {
            "nodes": [
                {"id": n.id, "x": n.pixel[0], "y": n.pixel[1], "kind": n.kind.value}
                for n in kb.graph.nodes
            ],
            "edges": [
                {
                    "a": e.a,
                    "b": e.b,
                    "length": e.length,
                    "trace": [[x, y] for x, y in e.trace],
                }
                for e in kb.graph.edges
            ],
        },
        "route": {
            "node_sequence": list(kb.route.node_sequence),
            "total_length": kb.route.total_length,
            "turn_count": kb.route.turn_count,
        },
        "directions": {
            "instructions": [
                {
                    "at_node": inst.at_node,
                    "angle": inst.angle,
                    "direction": inst.direction.value,
                    "actionable": inst.actionable,
                }
                for inst in kb.directions.instructions
            ],
            "terminal": _directive_dict(kb.directions.terminal),
        },
        "door_directive": _directive_dict(kb.door_directive),
        "provenance": dict(kb.provenance),
    }


def _directive_dict(directive: DoorDirective | None):
    if directive is None:
        return None
    return {
        "side": directive.side.value,
        "ordinal": directive.ordinal,
        "corridor_axis": directive.corridor_axis.value,
    }


def _check_consistency(kb: KnowledgeBase) -> None:
    node_ids = {node.id for node in kb.graph.nodes}
    missing = [nid for nid in kb.route.node_sequence if nid not in node_ids]
    if missing:
        raise GraphError(
            "inconsistent-knowledge-base",
            f"route references nodes absent from the graph: {missing}",
        )
    for inst in kb.directions.instructions:
        if inst.at_node not in node_ids:
            raise GraphError(
                "inconsistent-knowledge-base",
                f"instruction references node {inst.at_node} absent from the graph",
            )


def emit_knowledge_base(kb: KnowledgeBase, out: str | Path) -> Path:
    """Write canonical JSON: sorted keys, floats fixed to 3 decimals.

    Refuses to serialize a knowledge base whose route or directions
    reference nodes missing from the graph.
    """
    _check_consistency(kb)
    payload = _round_floats(knowledge_base_to_dict(kb))
    text = json.dumps(payload, sort_keys=True, indent=2) + "\n"
    out = Path(out)
    out.write_text(text)
    return out
