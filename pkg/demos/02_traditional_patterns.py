#!/usr/bin/env python3
"""Walk the registry of traditional patterns and draw each one."""

from hitomezashi import (PatternSpec, WordProgram, build_grid, list_all,
                         render_ascii)

for entry in list_all():
    spec = entry.spec()
    rows = spec.row_program.to_text() or "(none)"
    cols = spec.col_program.to_text() or "(none)"
    print("=" * 60)
    print(f"{entry.display_name}  ({entry.meaning})")
    print(f"rows: {rows}   cols: {cols}   "
          f"{'self-dual' if entry.self_dual else 'not self-dual'}")
    if entry.expected_stats:
        p, a, h, w = entry.expected_stats
        print(f"largest loop: perimeter {p}, area {a}, {h}x{w} cells")
    print()
    print(render_ascii(build_grid(spec)))
    print()

# Beyond the catalog: switching the word on BOTH axes mirrors the design
# about a horizontal and a vertical axis at once, so the staircases radiate
# from the centre (a further yamagata variant; the stitcher picks where the
# axes sit).
print("=" * 60)
print("yamagata variant with a switch on both axes")
print()
variant = PatternSpec("yamagata variant", WordProgram.parse("01:3,10"),
                      WordProgram.parse("01:3,10"), 12, 12)
print(render_ascii(build_grid(variant)))
