"""
Turning shapes and landmark labeling
====================================

Regions too wide for both scan passes survive as residual shapes.  Each
one erodes layer by layer until a single pixel remains isolated: that is
the turning's center, wired back to the corridor centerlines with
straight connectors.  Door hits collapse to one skeleton pixel per door
region, and the start marker snaps to the nearest skeleton pixel.
"""

from pathlib import Path

from navmap import (
    CorridorParams,
    MaskBuilder,
    attach_landmarks,
    render_overlay,
    resolve_turnings,
    skeletonize,
)

OUT = Path(__file__).parent / "output"
OUT.mkdir(exist_ok=True)

# A plus-shaped crossing: four corridor arms around one wide center.
builder = MaskBuilder(200, 200)
builder.corridor(10, 93, 189, 106)
builder.corridor(93, 10, 106, 189)
builder.start(10, 96, 13, 103)
builder.door(87, 130, 92, 137)        # west side of the south arm
builder.target_door(107, 160, 112, 167)
mask = builder.build()

params = CorridorParams(min_width=8, max_width=60)
skeleton = skeletonize(mask, params)
print(f"before resolution: {len(skeleton.residual_shapes)} residual shape(s)")

turnings, skeleton = resolve_turnings(skeleton)
for turning in turnings:
    print(f"turning at {turning.center} with {len(turning.connectors)} connectors")
    for connector in turning.connectors:
        print(f"  connector {connector[0]} -> {connector[-1]} ({len(connector)} px)")

landmarks = attach_landmarks(skeleton, mask, skeleton.hits, params)
print(f"start {landmarks.start}, end {landmarks.end}")
for door in landmarks.doors:
    tag = "target door" if door.is_target else "door"
    print(f"  {tag} at {door.pixel}, {door.side.value} side of the corridor")

render_overlay(mask, OUT / "demo_turnings.png", skeleton=skeleton)
print(f"wrote {OUT / 'demo_turnings.png'}")
