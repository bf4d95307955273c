"""Loop extraction and analysis on stitch grids.

Present segments form a graph of maximum degree two, so every connected
component is either a simple closed loop or an open path.  Closed loops mark
out polyominoes; this module fills them, measures them, checks the known
loop congruences (area 1 mod 4, perimeter 4 mod 8, odd bounding box) and
two-colors the regions a grid cuts the window into.
"""

from __future__ import annotations

import hashlib
from collections import defaultdict
from functools import cached_property
from typing import Iterable, NamedTuple, Optional, Sequence

from .grid import Point, Segment, StitchGrid


class LatticeCycle:
    """A simple closed cycle of unit segments on the integer lattice.

    Vertices are stored in traversal order; the edge back from the last
    vertex to the first is implied.
    """

    __slots__ = ("vertices",)

    def __init__(self, vertices: Sequence[Point]):
        verts = tuple((int(x), int(y)) for x, y in vertices)
        if len(verts) < 4 or len(verts) % 2 != 0:
            raise ValueError("a lattice cycle needs an even number of edges, at least 4")
        if len(set(verts)) != len(verts):
            raise ValueError("self-intersecting")
        for (x1, y1), (x2, y2) in zip(verts, verts[1:] + verts[:1]):
            if abs(x1 - x2) + abs(y1 - y2) != 1:
                raise ValueError("cycle edges must be unit lattice steps")
        self.vertices = verts

    @property
    def perimeter(self) -> int:
        return len(self.vertices)

    def edges(self) -> list[Segment]:
        verts = self.vertices
        return [(verts[i], verts[(i + 1) % len(verts)])
                for i in range(len(verts))]

    def shoelace_area(self) -> int:
        total = 0
        verts = self.vertices
        for (x1, y1), (x2, y2) in self.edges():
            total += x1 * y2 - x2 * y1
        return abs(total) // 2

    def normalized(self) -> "LatticeCycle":
        """Rotate/orient so the smallest vertex comes first, then its
        smaller neighbour; gives a deterministic representative."""
        verts = list(self.vertices)
        i = verts.index(min(verts))
        verts = verts[i:] + verts[:i]
        if verts[-1] < verts[1]:
            verts = [verts[0]] + verts[:0:-1]
        return LatticeCycle(verts)

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, LatticeCycle)
                and self.normalized().vertices == other.normalized().vertices)

    def __hash__(self) -> int:
        return hash(self.normalized().vertices)

    def __repr__(self) -> str:
        return f"LatticeCycle({list(self.vertices)!r})"


class Polyomino:
    """An edge-connected set of unit cells; a cell is named by its
    bottom-left corner."""

    def __init__(self, cells: Iterable[Point]):
        cells = frozenset((int(x), int(y)) for x, y in cells)
        if not cells:
            raise ValueError("a polyomino needs at least one cell")
        seen = {next(iter(sorted(cells)))}
        frontier = list(seen)
        while frontier:
            x, y = frontier.pop()
            for nbr in ((x + 1, y), (x - 1, y), (x, y + 1), (x, y - 1)):
                if nbr in cells and nbr not in seen:
                    seen.add(nbr)
                    frontier.append(nbr)
        if seen != cells:
            raise ValueError("cells must be edge-connected")
        self.cells = cells

    @property
    def area(self) -> int:
        return len(self.cells)

    @property
    def width(self) -> int:
        xs = [x for x, _ in self.cells]
        return max(xs) - min(xs) + 1

    @property
    def height(self) -> int:
        ys = [y for _, y in self.cells]
        return max(ys) - min(ys) + 1

    @cached_property
    def canonical_form(self) -> tuple[Point, ...]:
        """Least translation-normalized image over the 8 lattice symmetries.

        Two polyominoes have equal canonical forms exactly when one can be
        moved onto the other by translation, rotation and reflection.
        """
        images = []
        for flip in (False, True):
            pts = [(-x, y) if flip else (x, y) for x, y in self.cells]
            for _ in range(4):
                pts = [(-y, x) for x, y in pts]
                min_x = min(x for x, _ in pts)
                min_y = min(y for _, y in pts)
                images.append(tuple(sorted((x - min_x, y - min_y)
                                           for x, y in pts)))
        return min(images)

    def canonical_hash(self) -> str:
        digest = hashlib.sha256(repr(self.canonical_form).encode())
        return digest.hexdigest()[:16]

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Polyomino) and other.cells == self.cells

    def __hash__(self) -> int:
        return hash(self.cells)

    def __repr__(self) -> str:
        return f"Polyomino({sorted(self.cells)!r})"


class LoopStats(NamedTuple):
    perimeter: int
    area: int
    height: int
    width: int


class TheoremReport(NamedTuple):
    """Instance checks of the three loop congruences."""

    area_1_mod_4: bool
    perimeter_4_mod_8: bool
    box_dimensions_odd: bool

    @property
    def all_hold(self) -> bool:
        return self.area_1_mod_4 and self.perimeter_4_mod_8 and self.box_dimensions_odd


def components_from_segments(
    segments: Iterable[Segment],
) -> tuple[list[LatticeCycle], list[tuple[Point, ...]]]:
    """Partition unit segments into simple cycles and open paths.

    Raises ValueError("not a simple pattern") if any vertex has more than
    two incident segments; grids built here never do, so the check guards
    segment data imported from elsewhere.
    """
    adjacency: dict[Point, list[Point]] = defaultdict(list)
    for a, b in segments:
        adjacency[a].append(b)
        adjacency[b].append(a)
    for vertex, nbrs in adjacency.items():
        if len(nbrs) > 2:
            raise ValueError("not a simple pattern")
        nbrs.sort()

    visited: set[frozenset[Point]] = set()

    def walk(start: Point) -> list[Point]:
        trail = [start]
        current = start
        while True:
            step = None
            for nbr in adjacency[current]:
                if frozenset((current, nbr)) not in visited:
                    step = nbr
                    break
            if step is None:
                return trail
            visited.add(frozenset((current, step)))
            trail.append(step)
            current = step

    paths = []
    for vertex in sorted(adjacency):
        if len(adjacency[vertex]) == 1 and not any(
            frozenset((vertex, n)) in visited for n in adjacency[vertex]
        ):
            paths.append(tuple(walk(vertex)))

    cycles = []
    for vertex in sorted(adjacency):
        for nbr in adjacency[vertex]:
            if frozenset((vertex, nbr)) not in visited:
                trail = walk(vertex)
                assert trail[-1] == vertex
                cycles.append(LatticeCycle(trail[:-1]).normalized())
                break

    cycles.sort(key=lambda c: c.vertices)
    paths.sort()
    return cycles, paths


def extract_components(
    grid: StitchGrid,
) -> tuple[list[LatticeCycle], list[tuple[Point, ...]]]:
    """Closed loops and open paths of a grid; every present segment lands in
    exactly one component."""
    return components_from_segments(grid.segments())


def cycle_to_polyomino(cycle: LatticeCycle) -> Polyomino:
    """Cells enclosed by a simple cycle (even-odd rule scanline fill)."""
    vertical_edges: dict[int, list[int]] = defaultdict(list)  # row -> x's
    for (x1, y1), (x2, y2) in cycle.edges():
        if x1 == x2:
            vertical_edges[min(y1, y2)].append(x1)
    cells = set()
    for y, xs in vertical_edges.items():
        xs.sort()
        for i in range(0, len(xs), 2):
            for x in range(xs[i], xs[i + 1]):
                cells.add((x, y))
    return Polyomino(cells)


def loop_stats(polyomino: Polyomino, cycle: LatticeCycle) -> LoopStats:
    return LoopStats(
        perimeter=cycle.perimeter,
        area=polyomino.area,
        height=polyomino.height,
        width=polyomino.width,
    )


def check_loop_theorems(stats: LoopStats) -> TheoremReport:
    return TheoremReport(
        area_1_mod_4=stats.area % 4 == 1,
        perimeter_4_mod_8=stats.perimeter % 8 == 4,
        box_dimensions_odd=stats.width % 2 == 1 and stats.height % 2 == 1,
    )


def largest_loop(
    grid: StitchGrid,
) -> Optional[tuple[LatticeCycle, Polyomino, LoopStats]]:
    """The closed loop of greatest area (ties: greatest perimeter, then
    least canonical form), or None when the grid has no closed loop."""
    cycles, _ = extract_components(grid)
    best = None
    for cycle in cycles:
        poly = cycle_to_polyomino(cycle)
        key = (-poly.area, -cycle.perimeter, poly.canonical_form)
        if best is None or key < best[0]:
            best = (key, cycle, poly)
    if best is None:
        return None
    _, cycle, poly = best
    return cycle, poly, loop_stats(poly, cycle)


def _regions(grid: StitchGrid) -> tuple[dict[Point, int], int]:
    """Label window cells with region ids; cells joined across absent
    interior segments share a region.  The window edge acts as a wall."""
    W, H = grid.width, grid.height
    region_of: dict[Point, int] = {}
    next_id = 0
    for start_y in range(H):
        for start_x in range(W):
            if (start_x, start_y) in region_of:
                continue
            region_of[(start_x, start_y)] = next_id
            frontier = [(start_x, start_y)]
            while frontier:
                x, y = frontier.pop()
                reachable = []
                if x + 1 < W and not grid.vertical_present(x + 1, y):
                    reachable.append((x + 1, y))
                if x > 0 and not grid.vertical_present(x, y):
                    reachable.append((x - 1, y))
                if y + 1 < H and not grid.horizontal_present(x, y + 1):
                    reachable.append((x, y + 1))
                if y > 0 and not grid.horizontal_present(x, y):
                    reachable.append((x, y - 1))
                for nbr in reachable:
                    if nbr not in region_of:
                        region_of[nbr] = next_id
                        frontier.append(nbr)
            next_id += 1
    return region_of, next_id


def two_color(grid: StitchGrid) -> dict[Point, int]:
    """Assign 0/1 to every window cell so that distinct regions separated by
    a present stitch get different colors.

    Raises ValueError("not two-colorable") if the region adjacency graph
    has an odd cycle; word-built grids never produce one.
    """
    W, H = grid.width, grid.height
    region_of, count = _regions(grid)

    neighbors: dict[int, set[int]] = {r: set() for r in range(count)}
    for y in range(H):
        for x in range(1, W):
            if grid.vertical_present(x, y):
                a, b = region_of[(x - 1, y)], region_of[(x, y)]
                if a != b:
                    neighbors[a].add(b)
                    neighbors[b].add(a)
    for x in range(W):
        for y in range(1, H):
            if grid.horizontal_present(x, y):
                a, b = region_of[(x, y - 1)], region_of[(x, y)]
                if a != b:
                    neighbors[a].add(b)
                    neighbors[b].add(a)

    colors: dict[int, int] = {}
    for seed in range(count):
        if seed in colors:
            continue
        colors[seed] = 0
        frontier = [seed]
        while frontier:
            region = frontier.pop()
            for nbr in neighbors[region]:
                if nbr not in colors:
                    colors[nbr] = 1 - colors[region]
                    frontier.append(nbr)
                elif colors[nbr] == colors[region]:
                    raise ValueError("not two-colorable")

    return {cell: colors[region] for cell, region in region_of.items()}


def centred_square_check(areas: Sequence[int]) -> bool:
    """True when areas[k] = 2k(k+1)+1 for consecutive k starting at 0."""
    return all(area == 2 * k * (k + 1) + 1 for k, area in enumerate(areas))


def analyze_grid(grid: StitchGrid) -> dict:
    """Structured loop report: per-loop stats with theorem checks, the open
    path count, and the two-coloring as a bottom-up cell matrix."""
    cycles, paths = extract_components(grid)
    ranked = []
    for cycle in cycles:
        poly = cycle_to_polyomino(cycle)
        stats = loop_stats(poly, cycle)
        ranked.append(((-stats.area, -stats.perimeter, poly.canonical_form),
                       cycle, poly, stats))
    ranked.sort(key=lambda item: item[0])

    loops_report = []
    for _, cycle, poly, stats in ranked:
        report = check_loop_theorems(stats)
        loops_report.append({
            "perimeter": stats.perimeter,
            "area": stats.area,
            "height": stats.height,
            "width": stats.width,
            "canonical_hash": poly.canonical_hash(),
            "theorems": {
                "area_1_mod_4": report.area_1_mod_4,
                "perimeter_4_mod_8": report.perimeter_4_mod_8,
                "box_dimensions_odd": report.box_dimensions_odd,
            },
        })

    coloring = two_color(grid)
    matrix = [[coloring[(x, y)] for x in range(grid.width)]
              for y in range(grid.height)]

    return {
        "width": grid.width,
        "height": grid.height,
        "segment_count": grid.segment_count(),
        "loops": loops_report,
        "open_path_count": len(paths),
        "theorems_all_hold": all(
            entry["theorems"][key]
            for entry in loops_report
            for key in entry["theorems"]
        ),
        "two_coloring": matrix,
    }
