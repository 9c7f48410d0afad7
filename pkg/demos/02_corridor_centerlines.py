"""
Corridor centerlines by row and column scanning
===============================================

Every image row is split into runs of path pixels.  A run whose length
sits inside [min_width, max_width] marks one center pixel; narrower runs
are deleted; wider runs wait for junction resolution.  Columns get the
same treatment.  Door pixels near a run's endpoints are recorded on the
center with the side they were seen from.
"""

from pathlib import Path

from navmap import Axis, CorridorParams, MaskBuilder, render_overlay, skeletonize

OUT = Path(__file__).parent / "output"
OUT.mkdir(exist_ok=True)

# An L of two corridors plus an over-wide hall stub on the west end.
builder = MaskBuilder(260, 200)
builder.corridor(10, 120, 229, 139)   # horizontal, 20 px tall
builder.corridor(210, 10, 229, 139)   # vertical, 20 px wide
builder.door(60, 112, 69, 119)        # door above the horizontal arm
builder.target_door(230, 30, 237, 39) # east of the vertical arm
mask = builder.build()

params = CorridorParams(min_width=8, max_width=60)
skeleton = skeletonize(mask, params)

print(f"center pixels : {len(skeleton.pixels)}")
print(f"removed pixels: {len(skeleton.removed)}")
print(f"residual shapes (turning candidates): {len(skeleton.residual_shapes)}")
for shape in skeleton.residual_shapes:
    xs = [x for x, _ in shape]
    ys = [y for _, y in shape]
    print(f"  shape of {len(shape)} px spanning x {min(xs)}..{max(xs)}, y {min(ys)}..{max(ys)}")

row_hits = [h for h in skeleton.hits if h.axis is Axis.VERTICAL]
col_hits = [h for h in skeleton.hits if h.axis is Axis.HORIZONTAL]
print(f"row-scan hits {len(row_hits)}, column-scan hits {len(col_hits)}")

with_doors = [h for h in skeleton.hits if h.door_hits]
print(f"{len(with_doors)} scan lines saw a door; e.g.:")
for hit in with_doors[:3]:
    tags = ", ".join(f"{d.side.value}{' (target)' if d.is_target else ''}" for d in hit.door_hits)
    print(f"  center {hit.center}: {tags}")

render_overlay(mask, OUT / "demo_skeleton.png", skeleton=skeleton)
print(f"wrote {OUT / 'demo_skeleton.png'} (centers in black)")
