"""Command-line interface: ``navmap analyze`` runs the full pipeline."""

from __future__ import annotations

import argparse
import sys

from .errors import NavMapError
from .mask import ColorMap, render_overlay
from .pipeline import emit_knowledge_base, run_pipeline
from .skeleton import CorridorParams, skeletonize
from .junctions import resolve_turnings
from .mask import load_mask


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="navmap")
    sub = parser.add_subparsers(dest="command", required=True)

    analyze = sub.add_parser("analyze", help="analyze a floor-plan mask")
    analyze.add_argument("--input", required=True, help="PNG or PGM/PPM mask file")
    analyze.add_argument("--min-width", type=int, default=8, help="minimum corridor width (px)")
    analyze.add_argument("--max-width", type=int, default=60, help="maximum corridor width (px)")
    analyze.add_argument(
        "--door-probe", type=int, default=None, help="door search distance (px, default max-width)"
    )
    analyze.add_argument("--k", type=int, default=3, help="number of shortest paths to compare")
    analyze.add_argument("--out", required=True, help="knowledge-base JSON output path")
    analyze.add_argument("--render", default=None, help="optional overlay PNG output path")
    analyze.add_argument("--colors", default=None, help="key=hex colormap override file")
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        params = CorridorParams(
            min_width=args.min_width, max_width=args.max_width, door_probe=args.door_probe
        )
        colors = ColorMap.from_file(args.colors) if args.colors else None
        kb = run_pipeline(args.input, params=params, colors=colors, k=args.k)
        emit_knowledge_base(kb, args.out)
        if args.render:
            mask = load_mask(args.input, colors)
            skeleton = skeletonize(mask, params)
            _, skeleton = resolve_turnings(skeleton)
            render_overlay(
                mask, args.render, skeleton=skeleton, graph=kb.graph, route=kb.route, colors=colors
            )
        directive = kb.door_directive
        print(
            f"{kb.map_id}: {len(kb.graph.nodes)} nodes, route length "
            f"{kb.route.total_length:.1f} px, {kb.route.turn_count} turns; "
            f"target is {directive.side.value} door #{directive.ordinal}"
        )
        return 0
    except NavMapError as exc:
        print(f"error {exc}", file=sys.stderr)
        return exc.exit_code
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def entry() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    entry()
