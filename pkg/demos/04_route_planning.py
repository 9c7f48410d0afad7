"""
Graph building, Floyd-Warshall, and the fewest-turn route
=========================================================

Nodes are turning centers, door pixels, and the start/end markers.
Walking the skeleton pixel by pixel from each node yields weighted edges
(1 per orthogonal step, sqrt(2) per diagonal).  Floyd's algorithm gives
all-pairs distances; a Yen-style enumeration lists the three shortest
routes; the one with the fewest nodes wins.
"""

from navmap import (
    CorridorParams,
    MaskBuilder,
    NodeKind,
    attach_landmarks,
    collect_nodes,
    connect_nodes,
    floyd_all_pairs,
    k_shortest_paths,
    optimal_path,
    resolve_turnings,
    shortest_path,
    skeletonize,
)

# Two parallel east-west corridors joined at both ends: two distinct routes.
builder = MaskBuilder(260, 220)
builder.corridor(10, 20, 249, 33)    # north corridor
builder.corridor(10, 180, 249, 193)  # south corridor
builder.corridor(10, 20, 23, 193)    # west link
builder.corridor(236, 20, 249, 193)  # east link
builder.start(10, 23, 13, 30)
builder.door(60, 12, 67, 19)         # two doors along the north corridor
builder.door(140, 12, 147, 19)
builder.target_door(250, 100, 255, 107)  # east link, halfway down
mask = builder.build()

params = CorridorParams(min_width=8, max_width=60)
skeleton = skeletonize(mask, params)
turnings, skeleton = resolve_turnings(skeleton)
landmarks = attach_landmarks(skeleton, mask, skeleton.hits, params)
nodes = collect_nodes(skeleton, turnings, landmarks)
graph = connect_nodes(skeleton, nodes)

print(f"{len(graph.nodes)} nodes, {len(graph.edges)} edges")
for edge in graph.edges:
    a, b = graph.node_by_id(edge.a), graph.node_by_id(edge.b)
    print(f"  {a.kind.value:7s} {a.pixel} -- {b.kind.value:7s} {b.pixel}  length {edge.length:.1f}")

start = graph.node_of_kind(NodeKind.START)
end = graph.node_of_kind(NodeKind.END)

matrix = floyd_all_pairs(graph)
direct = shortest_path(matrix, graph, start.id, end.id)
print(f"shortest route: {direct.node_sequence}, length {direct.total_length:.1f}")

plans = k_shortest_paths(graph, start.id, end.id, k=3)
for rank, plan in enumerate(plans, 1):
    print(
        f"  #{rank}: {len(plan.node_sequence)} nodes, "
        f"length {plan.total_length:.1f}, {plan.node_sequence}"
    )

best = optimal_path(plans)
print(f"fewest-turn pick: {best.node_sequence} ({len(best.node_sequence)} nodes)")
