"""Floor-plan mask to navigation graph, fewest-turn route, and directions."""

from .directions import (
    Direction,
    DirectionScript,
    TurnInstruction,
    compile_directions,
    direction_for_angle,
    triangle_angle,
)
from .doors import DoorDirective, classify_final_corridor, resolve_target_door, travel_side
from .errors import (
    CorridorError,
    GraphError,
    LandmarkError,
    MaskError,
    NavMapError,
    RouteError,
)
from .graph import (
    NavEdge,
    NavGraph,
    NavNode,
    NodeKind,
    WalkOutcome,
    WalkResult,
    collect_nodes,
    connect_nodes,
    walk_to_next_node,
)
from .junctions import (
    DoorLandmark,
    LandmarkSet,
    TurningNode,
    attach_landmarks,
    resolve_turnings,
)
from .mask import (
    ColorMap,
    DEFAULT_COLORS,
    GridMask,
    Pixel,
    PixelClass,
    classify_image,
    load_mask,
    render_overlay,
    validate_mask,
)
from .pipeline import (
    KnowledgeBase,
    emit_knowledge_base,
    knowledge_base_to_dict,
    run_pipeline,
)
from .routing import (
    DistanceMatrix,
    RoutePlan,
    floyd_all_pairs,
    k_shortest_paths,
    optimal_path,
    shortest_path,
)
from .skeleton import (
    Axis,
    CorridorParams,
    DoorHit,
    ScanHit,
    Side,
    Skeleton,
    find_border_pixels,
    scan_axis,
    skeletonize,
)
from .synth import MaskBuilder

__version__ = "0.1.0"
