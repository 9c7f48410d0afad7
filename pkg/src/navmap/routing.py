"""All-pairs shortest paths, k-shortest alternatives, fewest-turn selection."""

from __future__ import annotations

import heapq
from dataclasses import dataclass

import numpy as np

from .errors import RouteError
from .graph import NavGraph


@dataclass(frozen=True)
class DistanceMatrix:
    """Floyd-Warshall output: distances plus next-hop ids for reconstruction."""

    n: int
    dist: np.ndarray
    next_hop: np.ndarray

    def __post_init__(self):
        for name in ("dist", "next_hop"):
            arr = getattr(self, name)
            arr = arr.copy()
            arr.flags.writeable = False
            object.__setattr__(self, name, arr)


@dataclass(frozen=True)
class RoutePlan:
    node_sequence: tuple[int, ...]
    total_length: float
    turn_count: int


def floyd_all_pairs(graph: NavGraph) -> DistanceMatrix:
    """Classic triple loop with strict-improvement updates (earlier k wins ties)."""
    n = len(graph.nodes)
    dist = np.full((n, n), np.inf)
    next_hop = np.full((n, n), -1, dtype=np.int64)
    np.fill_diagonal(dist, 0.0)
    next_hop[np.diag_indices(n)] = np.arange(n)
    for edge in graph.edges:
        if edge.length < dist[edge.a, edge.b]:
            dist[edge.a, edge.b] = dist[edge.b, edge.a] = edge.length
            next_hop[edge.a, edge.b] = edge.b
            next_hop[edge.b, edge.a] = edge.a
    for k in range(n):
        through = dist[:, k, None] + dist[None, k, :]
        better = through < dist
        if better.any():
            dist[better] = through[better]
            next_hop[better] = np.broadcast_to(next_hop[:, k, None], (n, n))[better]
    return DistanceMatrix(n=n, dist=dist, next_hop=next_hop)


def shortest_path(matrix: DistanceMatrix, graph: NavGraph, start: int, end: int) -> RoutePlan:
    """Reconstruct the start-to-end route from the next-hop matrix."""
    if start == end:
        raise ValueError("start and end must differ")
    if not np.isfinite(matrix.dist[start, end]):
        raise RouteError("no-route", f"no route exists between nodes {start} and {end}")
    sequence = [start]
    cur = start
    while cur != end:
        cur = int(matrix.next_hop[cur, end])
        sequence.append(cur)
        if len(sequence) > matrix.n:
            raise RouteError("broken-next-hop", "next-hop matrix does not reach the end node")
    return RoutePlan(
        node_sequence=tuple(sequence),
        total_length=float(matrix.dist[start, end]),
        turn_count=len(sequence) - 2,
    )


def _adjacency(graph: NavGraph) -> dict[int, list[tuple[int, float]]]:
    adj: dict[int, list[tuple[int, float]]] = {node.id: [] for node in graph.nodes}
    for edge in graph.edges:
        adj[edge.a].append((edge.b, edge.length))
        adj[edge.b].append((edge.a, edge.length))
    for neighbors in adj.values():
        neighbors.sort()
    return adj


def _lex_dijkstra(
    adj: dict[int, list[tuple[int, float]]],
    source: int,
    target: int,
    banned_nodes: set[int],
    banned_edges: set[tuple[int, int]],
) -> tuple[float, tuple[int, ...]] | None:
    """Shortest path minimizing (cost, node sequence); None when unreachable.

    Keying the heap by the full path tuple makes the result the
    lexicographically smallest among equal-cost shortest paths, which pins
    down tie order for the k-shortest enumeration.
    """
    if source in banned_nodes or target in banned_nodes:
        return None
    heap: list[tuple[float, tuple[int, ...]]] = [(0.0, (source,))]
    settled: set[int] = set()
    while heap:
        cost, path = heapq.heappop(heap)
        node = path[-1]
        if node == target:
            return cost, path
        if node in settled:
            continue
        settled.add(node)
        for nbr, weight in adj[node]:
            if nbr in settled or nbr in banned_nodes:
                continue
            if (min(node, nbr), max(node, nbr)) in banned_edges:
                continue
            heapq.heappush(heap, (cost + weight, path + (nbr,)))
    return None


def _plan(graph: NavGraph, path: tuple[int, ...]) -> RoutePlan:
    total = 0.0
    for a, b in zip(path, path[1:]):
        total += graph.edge_between(a, b).length
    return RoutePlan(node_sequence=path, total_length=total, turn_count=len(path) - 2)


def k_shortest_paths(graph: NavGraph, start: int, end: int, k: int = 3) -> list[RoutePlan]:
    """The k shortest loopless routes, ordered by (length, node sequence).

    Yen-style spur enumeration; returns fewer than k plans when the graph
    does not admit that many simple paths.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    adj = _adjacency(graph)
    first = _lex_dijkstra(adj, start, end, set(), set())
    if first is None:
        raise RouteError("no-route", f"no route exists between nodes {start} and {end}")
    accepted: list[tuple[float, tuple[int, ...]]] = [first]
    candidates: dict[tuple[int, ...], float] = {}

    while len(accepted) < k:
        _, prev_path = accepted[-1]
        for i in range(len(prev_path) - 1):
            spur = prev_path[i]
            root = prev_path[: i + 1]
            root_cost = 0.0
            for a, b in zip(root, root[1:]):
                root_cost += graph.edge_between(a, b).length
            banned_edges = {
                (min(p[i], p[i + 1]), max(p[i], p[i + 1]))
                for _, p in accepted
                if len(p) > i + 1 and p[: i + 1] == root
            }
            banned_nodes = set(root[:-1])
            spur_result = _lex_dijkstra(adj, spur, end, banned_nodes, banned_edges)
            if spur_result is None:
                continue
            spur_cost, spur_path = spur_result
            total_path = root + spur_path[1:]
            if any(total_path == p for _, p in accepted):
                continue
            total_cost = root_cost + spur_cost
            if total_path not in candidates or total_cost < candidates[total_path]:
                candidates[total_path] = total_cost
        if not candidates:
            break
        best = min(candidates.items(), key=lambda item: (item[1], item[0]))
        del candidates[best[0]]
        accepted.append((best[1], best[0]))

    accepted.sort(key=lambda item: (item[0], item[1]))
    return [_plan(graph, path) for _, path in accepted]


def optimal_path(candidates: list[RoutePlan]) -> RoutePlan:
    """The plan with the fewest nodes; ties fall to shorter, then lexicographic."""
    if not candidates:
        raise ValueError("optimal_path needs at least one candidate")
    return min(
        candidates,
        key=lambda plan: (len(plan.node_sequence), plan.total_length, plan.node_sequence),
    )
