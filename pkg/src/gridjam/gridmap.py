"""Occupancy grids: ASCII map parsing, bounds logic, and obstacle overlays.

Grids are immutable values. Overlaying an obstacle returns a new grid, so
maps can be shared freely between runs without defensive copies.
"""

from dataclasses import dataclass, replace
from typing import NamedTuple

from .errors import BadCharError, EmptyMapError, OutOfBoundsError, RaggedRowsError

OCCUPIED_CHAR = "#"
FREE_CHAR = "."


class Cell(NamedTuple):
    """Grid coordinate; col grows rightward, row grows downward from the top."""

    col: int
    row: int

    def __str__(self):
        return f"{self.col},{self.row}"


@dataclass(frozen=True)
class GridMap:
    """Binary occupancy grid with a metric cell size in metres."""

    width: int
    height: int
    cell_size: float
    rows: tuple  # rows[row][col] is True where occupied

    def __post_init__(self):
        if self.width < 1 or self.height < 1:
            raise EmptyMapError(f"grid must be at least 1x1, got {self.width}x{self.height}")
        if self.cell_size <= 0:
            raise ValueError(f"cell_size must be positive, got {self.cell_size}")
        if len(self.rows) != self.height or any(len(r) != self.width for r in self.rows):
            raise ValueError("occupancy rows do not match the declared dimensions")

    def in_bounds(self, cell: Cell) -> bool:
        return 0 <= cell.col < self.width and 0 <= cell.row < self.height

    def is_occupied(self, cell: Cell) -> bool:
        return bool(self.rows[cell.row][cell.col])

    def is_free(self, cell: Cell) -> bool:
        return self.in_bounds(cell) and not self.rows[cell.row][cell.col]

    def with_cell_size(self, cell_size: float) -> "GridMap":
        return replace(self, cell_size=cell_size)


@dataclass(frozen=True)
class ObstaclePlacement:
    """Square obstacle, `side` cells on a side, centred on `center`."""

    center: Cell
    side: int = 3

    def __post_init__(self):
        if self.side < 1 or self.side % 2 == 0:
            raise ValueError(f"obstacle side must be an odd positive integer, got {self.side}")

    @property
    def radius(self) -> int:
        return self.side // 2

    def covers(self, cell: Cell) -> bool:
        """True when `cell` lies inside the (unclipped) footprint square."""
        return (
            abs(cell.col - self.center.col) <= self.radius
            and abs(cell.row - self.center.row) <= self.radius
        )


def parse_map(text: str) -> GridMap:
    """Parse an ASCII occupancy map.

    One line per row, '#' occupied and '.' free, top row first. A final
    newline is optional; anything else (including trailing whitespace) is
    rejected. The parsed grid uses a cell size of 1.0 until a scenario
    overrides it.
    """
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if not lines:
        raise EmptyMapError("map text contains no rows")
    width = len(lines[0])
    rows = []
    for number, line in enumerate(lines):
        if not line:
            raise EmptyMapError(f"row {number} is empty")
        if len(line) != width:
            raise RaggedRowsError(f"row {number} has length {len(line)}, expected {width}")
        for ch in line:
            if ch != OCCUPIED_CHAR and ch != FREE_CHAR:
                raise BadCharError(f"row {number}: unexpected character {ch!r}")
        rows.append(tuple(ch == OCCUPIED_CHAR for ch in line))
    return GridMap(width, len(rows), 1.0, tuple(rows))


def serialize_map(grid: GridMap) -> str:
    """Inverse of parse_map; always emits a trailing newline."""
    lines = []
    for row in grid.rows:
        lines.append("".join(OCCUPIED_CHAR if occ else FREE_CHAR for occ in row))
    return "\n".join(lines) + "\n"


def footprint_cells(placement: ObstaclePlacement, grid: GridMap) -> set:
    """In-bounds cells covered by the placement (clipped at the borders)."""
    r = placement.radius
    col_lo = max(0, placement.center.col - r)
    col_hi = min(grid.width - 1, placement.center.col + r)
    row_lo = max(0, placement.center.row - r)
    row_hi = min(grid.height - 1, placement.center.row + r)
    return {
        Cell(col, row)
        for row in range(row_lo, row_hi + 1)
        for col in range(col_lo, col_hi + 1)
    }


def apply_obstacle(grid: GridMap, placement: ObstaclePlacement) -> GridMap:
    """Return a new grid with the footprint marked occupied.

    Footprints may hang over the border (the overlay is clipped), but a
    placement entirely outside the map is rejected.
    """
    covered = footprint_cells(placement, grid)
    if not covered:
        raise OutOfBoundsError(
            f"obstacle at {placement.center} with side {placement.side} lies outside the map"
        )
    rows = [list(r) for r in grid.rows]
    for cell in covered:
        rows[cell.row][cell.col] = True
    return replace(grid, rows=tuple(tuple(r) for r in rows))
