"""
Loading classified floor-plan masks and finding border pixels
==============================================================

A floor-plan mask assigns each pixel one of five classes: background,
main path (white), door (green), target door (blue), start marker (red).
This demo builds a small map in memory, saves it as a PNG, loads it back,
and lists the border pixels of the main path.
"""

from pathlib import Path

from navmap import MaskBuilder, find_border_pixels, load_mask

OUT = Path(__file__).parent / "output"
OUT.mkdir(exist_ok=True)

# A single corridor with a start blob at the west end, one door above,
# and the target door below near the east end.
builder = MaskBuilder(200, 80)
builder.corridor(10, 30, 189, 43)
builder.start(10, 33, 13, 40)
builder.door(60, 24, 67, 29)
builder.target_door(160, 44, 167, 49)
png = builder.save_png(OUT / "demo_map.png")
print(f"wrote {png}")

mask = load_mask(png)
print(f"size: {mask.width}x{mask.height}")
for cls, count in mask.class_counts().items():
    print(f"  {cls.name:13s} {count:6d} px")

border = find_border_pixels(mask)
print(f"border pixels: {len(border)} (path pixels touching a non-path neighbor)")
print("first few, raster order:", border[:8])
