#!/usr/bin/env python3
"""Duality: the reverse of the fabric is the complement encoding.

Stitching a line leaves gaps on the back exactly where the front has
stitches, so the two sides of one piece carry complementary patterns.  Some
designs reproduce themselves on the back after a small translation.
"""

from hitomezashi import (BinaryWord, PatternSpec, WordProgram, build_grid,
                         is_self_dual, render_ascii)

spec = PatternSpec("offset rows", WordProgram.parse("1001100110:1"),
                   WordProgram(), width=10, height=9)
grid = build_grid(spec)
print("front (rows encoded 1001100110, no vertical lines):")
print(render_ascii(grid))
print()
print("back of the same piece:")
print(render_ascii(grid.dual()))
print()
print("The back is the front shifted one stitch sideways; the encoding")
print("says the same thing:",
      is_self_dual(BinaryWord("1001100110"), BinaryWord("")))
print()

pairs = [
    ("kuchizashi", "1", "1"),
    ("dan tsunagi", "01", "10"),
    ("jujizashi", "0110", "011"),
    ("kakinohanazashi", "10100101", "010"),
]
print("self-duality search over two word periods per axis:")
for name, rows, cols in pairs:
    shift = is_self_dual(BinaryWord(rows), BinaryWord(cols))
    verdict = f"self-dual, shift {shift}" if shift else "not self-dual"
    print(f"  {name:<18} rows={rows:<10} cols={cols:<5} {verdict}")
print()

print("Every stitch appears on exactly one side: front + back cover the")
grid = build_grid(PatternSpec("t", WordProgram.parse("0110"),
                              WordProgram.parse("011"), 6, 6))
front = set(grid.segments())
back = set(grid.dual().segments())
lattice = (grid.height + 1) * grid.width + (grid.width + 1) * grid.height
print(f"whole lattice: {len(front)} + {len(back)} = {lattice} segments, "
      f"overlap {len(front & back)}")
