"""
Turn-by-turn directions and the knowledge-base file
===================================================

The full pipeline in one call: the route's node triples become turn
instructions (angle buckets from hard right to hard left), the final
corridor yields the terminal door directive ("the Nth door on your
left/right"), and everything serializes to canonical JSON.

The same run is available from the shell:

    navmap analyze --input map.png --out kb.json --render overlay.png
"""

import json
from pathlib import Path

from navmap import (
    MaskBuilder,
    emit_knowledge_base,
    load_mask,
    render_overlay,
    resolve_turnings,
    run_pipeline,
    skeletonize,
)

OUT = Path(__file__).parent / "output"
OUT.mkdir(exist_ok=True)

# An L-shaped route with two distractor doors before the turn and two
# doors in the final corridor, the far one being the target.
builder = MaskBuilder(220, 220)
builder.corridor(10, 150, 179, 163)   # horizontal arm
builder.corridor(166, 20, 179, 163)   # vertical arm heading north
builder.start(10, 153, 13, 160)
builder.door(50, 144, 57, 149)
builder.door(90, 164, 97, 169)
builder.door(180, 100, 185, 107)      # east side of the vertical arm
builder.target_door(180, 40, 185, 47) # east side, further north
map_png = builder.save_png(OUT / "demo_building.png")

kb = run_pipeline(map_png)
print(f"route: {kb.route.node_sequence}, length {kb.route.total_length:.1f} px")
for inst in kb.directions.instructions:
    marker = "" if inst.actionable else "   (keep going)"
    print(f"  at node {inst.at_node}: {inst.angle:5.1f} deg -> {inst.direction.value}{marker}")
directive = kb.door_directive
print(
    f"terminal directive: take {directive.side.value} door #{directive.ordinal} "
    f"of the {directive.corridor_axis.value} corridor"
)

kb_path = emit_knowledge_base(kb, OUT / "demo_kb.json")
payload = json.loads(kb_path.read_text())
print(f"wrote {kb_path} ({len(payload['graph']['nodes'])} nodes serialized)")

mask = load_mask(map_png)
_, skeleton = resolve_turnings(skeletonize(mask, kb.params))
overlay = render_overlay(
    mask, OUT / "demo_overlay.png", skeleton=skeleton, graph=kb.graph, route=kb.route
)
print(f"wrote {overlay} (skeleton black, route orange, nodes red)")
