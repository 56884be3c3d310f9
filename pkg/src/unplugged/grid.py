"""Ball colors, mosaics and the ball inventory of the Pallino machine.

Mosaic text format: one line per row, top row first, one character per
cell (``Y R B W K`` or ``.`` for an empty cell), LF separated, no trailing
newline. Inside a :class:`Mosaic`, row 0 is the bottom row, matching the
coding card convention.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from enum import Enum
from typing import Mapping, Optional, Sequence

from .errors import DimensionMismatch, EmptyMosaic, RaggedLines, UnknownColor

EMPTY_CHAR = "."
PALLINO_COLUMNS = 12
DEFAULT_ROWS = 16


class Color(Enum):
    YELLOW = "Y"
    RED = "R"
    BLUE = "B"
    WHITE = "W"
    BLACK = "K"

    @property
    def code(self) -> str:
        return self.value

    @property
    def label(self) -> str:
        return self.name.lower()

    def __str__(self) -> str:
        return self.value


Cell = Optional[Color]

_BY_NAME = {c.label: c for c in Color}


def color_from_code(code: str) -> Color:
    """Return the color for a one-letter code (case-insensitive)."""
    if len(code) == 1:
        try:
            return Color(code.upper())
        except ValueError:
            pass
    raise UnknownColor(f"unknown color code {code!r}")


def color_from_name(word: str) -> Color:
    """Accept either a full color name (``blue``) or a one-letter code."""
    found = _BY_NAME.get(word.lower())
    if found is not None:
        return found
    return color_from_code(word)


def cell_char(cell: Cell) -> str:
    return EMPTY_CHAR if cell is None else cell.code


def cell_from_char(ch: str) -> Cell:
    return None if ch == EMPTY_CHAR else color_from_code(ch)


@dataclass(frozen=True)
class Mosaic:
    """Rectangular grid of optional colors.

    ``cells[r][c]`` is row ``r`` counted from the bottom and column ``c``
    counted from the left.
    """

    rows: int
    columns: int
    cells: tuple[tuple[Cell, ...], ...]

    def __post_init__(self):
        if self.columns < 1 or self.rows < 0:
            raise ValueError(f"bad mosaic size {self.rows}x{self.columns}")
        if len(self.cells) != self.rows or any(len(r) != self.columns for r in self.cells):
            raise ValueError("cells do not match the mosaic dimensions")

    @classmethod
    def empty(cls, rows: int, columns: int = PALLINO_COLUMNS) -> "Mosaic":
        return cls(rows, columns, tuple((None,) * columns for _ in range(rows)))

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Cell]], columns: int | None = None) -> "Mosaic":
        """Build from bottom-first rows."""
        cells = tuple(tuple(r) for r in rows)
        if columns is None:
            if not cells:
                raise ValueError("columns is required for a mosaic without rows")
            columns = len(cells[0])
        return cls(len(cells), columns, cells)

    def __getitem__(self, pos: tuple[int, int]) -> Cell:
        r, c = pos
        return self.cells[r][c]

    def replace(self, row: int, column: int, cell: Cell) -> "Mosaic":
        cells = [list(r) for r in self.cells]
        cells[row][column] = cell
        return Mosaic.from_rows(cells, self.columns)

    def column(self, c: int) -> tuple[Cell, ...]:
        """Cells of column ``c``, bottom-up."""
        return tuple(row[c] for row in self.cells)

    def counts(self) -> Counter:
        return Counter(cell for row in self.cells for cell in row if cell is not None)

    def filled(self) -> int:
        return sum(self.counts().values())

    def is_gravity_consistent(self) -> bool:
        return not self.gravity_violations()

    def gravity_violations(self) -> list[tuple[int, int]]:
        """(row, column) of each filled cell that sits above an empty one."""
        out = []
        for c in range(self.columns):
            seen_gap = False
            for r in range(self.rows):
                if self.cells[r][c] is None:
                    seen_gap = True
                elif seen_gap:
                    out.append((r, c))
        return out

    def __str__(self) -> str:
        return mosaic_render(self)


def mosaic_parse(text: str) -> Mosaic:
    lines = text.split("\n")
    # tolerate one trailing newline as written by most editors
    if len(lines) > 1 and lines[-1] == "":
        lines.pop()
    if lines == [""]:
        raise EmptyMosaic("mosaic text has no rows")
    width = len(lines[0])
    for n, line in enumerate(lines, 1):
        if len(line) != width:
            raise RaggedLines(f"line {n} has {len(line)} cells, expected {width}")
    top_first = [[cell_from_char(ch) for ch in line] for line in lines]
    return Mosaic.from_rows(top_first[::-1], width)


def mosaic_render(m: Mosaic) -> str:
    return "\n".join("".join(cell_char(c) for c in row) for row in reversed(m.cells))


def check_same_shape(a: Mosaic, b: Mosaic) -> None:
    if (a.rows, a.columns) != (b.rows, b.columns):
        raise DimensionMismatch(
            f"mosaics differ in size: {a.rows}x{a.columns} vs {b.rows}x{b.columns}"
        )


DEFAULT_CAPS = {
    Color.YELLOW: 64,
    Color.RED: 64,
    Color.BLUE: 64,
    Color.WHITE: 16,
    Color.BLACK: 16,
}


@dataclass(frozen=True)
class Inventory:
    caps: Mapping[Color, int] = field(default_factory=lambda: dict(DEFAULT_CAPS))

    def __post_init__(self):
        if any(n < 0 for n in self.caps.values()):
            raise ValueError("inventory caps must be non-negative")

    def cap(self, color: Color) -> int:
        return self.caps.get(color, 0)

    def pool(self) -> list[Color]:
        """Every ball in the inventory, grouped by color in enum order."""
        return [c for c in Color for _ in range(self.cap(c))]


@dataclass(frozen=True)
class Usage:
    color: Color
    used: int
    cap: int

    @property
    def exceeded(self) -> bool:
        return self.used > self.cap

    def __str__(self) -> str:
        return f"{self.color.label} used={self.used} cap={self.cap}"


@dataclass(frozen=True)
class InventoryReport:
    usage: tuple[Usage, ...]

    @property
    def violations(self) -> tuple[Usage, ...]:
        return tuple(u for u in self.usage if u.exceeded)

    @property
    def ok(self) -> bool:
        return not self.violations


def inventory_check(m: Mosaic, inv: Inventory | None = None) -> InventoryReport:
    inv = inv or Inventory()
    used = m.counts()
    return InventoryReport(tuple(Usage(c, used.get(c, 0), inv.cap(c)) for c in Color))
