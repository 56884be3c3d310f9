"""Directional grid-drawing language with loop counters.

Programs are whitespace-separated items::

    START red  E blue  (E blue)3  (S)2  O

``E``/``O``/``N``/``S`` move right/left/up/down by one square. A color after
the direction paints the square moved into. ``(D color)n`` repeats the step
``n`` times. ``START color`` paints the origin (the upper-left square)
before anything moves. Grid coordinates are (row from top, column from left).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum
from itertools import groupby
from typing import Optional, Sequence

from .errors import BadCount, BadToken, DanglingParen, OffGrid
from .grid import Cell, Color, Mosaic, cell_char, color_from_name


class Direction(Enum):
    N = (-1, 0)
    S = (1, 0)
    E = (0, 1)
    O = (0, -1)  # noqa: E741  (Ovest, i.e. west)

    @property
    def delta(self) -> tuple[int, int]:
        return self.value


@dataclass(frozen=True)
class Instruction:
    direction: Direction
    paint: Optional[Color] = None
    repeat: int = 1

    def __post_init__(self):
        if self.repeat < 1:
            raise BadCount(f"repeat must be at least 1, got {self.repeat}")

    def __str__(self) -> str:
        body = self.direction.name
        if self.paint is not None:
            body += " " + self.paint.label
        if self.repeat == 1:
            return body
        return f"({body}){self.repeat}"


@dataclass(frozen=True)
class TurtleProgram:
    start_paint: Optional[Color] = None
    body: tuple[Instruction, ...] = ()

    def __str__(self) -> str:
        return turtle_print(self)


@dataclass(frozen=True)
class PaintedGrid:
    width: int
    height: int
    cells: tuple[tuple[Cell, ...], ...]
    cursor: tuple[int, int] = (0, 0)

    @classmethod
    def blank(cls, width: int, height: int) -> "PaintedGrid":
        return cls(width, height, tuple((None,) * width for _ in range(height)))

    def render(self) -> str:
        """Same text layout as a mosaic file: top row first, ``.`` for empty."""
        return "\n".join("".join(cell_char(c) for c in row) for row in self.cells)

    def to_mosaic(self) -> Mosaic:
        return Mosaic.from_rows(self.cells[::-1], self.width)


def grid_from_mosaic(m: Mosaic) -> tuple[tuple[Cell, ...], ...]:
    """Top-first rows of a mosaic, the orientation the drawing language uses."""
    return tuple(m.cells[::-1])


# -- parsing ---------------------------------------------------------------

_TOKEN_RE = re.compile(r"\s*(?:(?P<paren>[()])|(?P<num>[+-]?\d+(?:\.\d*)?)|(?P<word>[A-Za-z]+)|(?P<bad>\S))")


def _tokenize(text: str) -> list[str]:
    tokens = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m.group("bad"):
            raise BadToken(f"unexpected character {m.group('bad')!r} at offset {m.start('bad')}")
        tokens.append(m.group(m.lastgroup))
        pos = m.end()
    return tokens


def _direction(tok: str | None) -> Direction | None:
    if tok is not None and tok.upper() in Direction.__members__:
        return Direction[tok.upper()]
    return None


def _color(tok: str | None) -> Color | None:
    if tok is None or not tok.isalpha():
        return None
    try:
        return color_from_name(tok)
    except ValueError:
        return None


def turtle_parse(text: str) -> TurtleProgram:
    tokens = _tokenize(text)
    i = 0

    def peek(k: int = 0) -> str | None:
        return tokens[i + k] if i + k < len(tokens) else None

    start = None
    if peek() is not None and peek().upper() == "START":
        start = _color(peek(1))
        if start is None:
            raise BadToken(f"START needs a color, got {peek(1)!r}")
        i = 2

    body = []
    while i < len(tokens):
        tok = tokens[i]
        if tok == "(":
            direction = _direction(peek(1))
            if direction is None:
                raise BadToken(f"expected a direction after '(', got {peek(1)!r}")
            i += 2
            paint = _color(peek())
            if paint is not None:
                i += 1
            if peek() != ")":
                raise DanglingParen(f"missing ')' after ({direction.name}, got {peek()!r}")
            count = peek(1)
            if count is None or not re.fullmatch(r"[+-]?\d+", count):
                raise BadCount(f"expected a whole repeat count after ')', got {count!r}")
            if int(count) < 1:
                raise BadCount(f"repeat count must be at least 1, got {count}")
            body.append(Instruction(direction, paint, int(count)))
            i += 2
        elif tok == ")":
            raise DanglingParen("')' without a matching '('")
        else:
            direction = _direction(tok)
            if direction is None:
                raise BadToken(f"unexpected token {tok!r}")
            i += 1
            paint = _color(peek())
            if paint is not None:
                i += 1
            body.append(Instruction(direction, paint, 1))
    return TurtleProgram(start, tuple(body))


def turtle_print(p: TurtleProgram) -> str:
    parts = [] if p.start_paint is None else [f"START {p.start_paint.label}"]
    parts.extend(str(ins) for ins in p.body)
    return " ".join(parts)


# -- execution -------------------------------------------------------------

def interpret(p: TurtleProgram, width: int, height: int) -> PaintedGrid:
    """Run ``p`` on a blank ``height`` x ``width`` grid.

    Raises OffGrid at the first move that leaves the grid; instruction and
    step numbers in the error are 1-based.
    """
    if width < 1 or height < 1:
        raise ValueError("grid must be at least 1x1")
    cells = [[None] * width for _ in range(height)]
    row, col = 0, 0
    if p.start_paint is not None:
        cells[0][0] = p.start_paint
    for n, ins in enumerate(p.body, 1):
        dr, dc = ins.direction.delta
        for step in range(1, ins.repeat + 1):
            row, col = row + dr, col + dc
            if not (0 <= row < height and 0 <= col < width):
                raise OffGrid(n, step, (row, col))
            if ins.paint is not None:
                cells[row][col] = ins.paint
    return PaintedGrid(width, height, tuple(map(tuple, cells)), (row, col))


def compress(p: TurtleProgram) -> TurtleProgram:
    """Fold runs of identical steps into one counted instruction."""
    body = tuple(
        Instruction(d, c, sum(ins.repeat for ins in group))
        for (d, c), group in groupby(p.body, key=lambda ins: (ins.direction, ins.paint))
    )
    return TurtleProgram(p.start_paint, body)


def compile_grid(grid: Sequence[Sequence[Cell]]) -> TurtleProgram:
    """Program that redraws ``grid`` (top-first rows) with a boustrophedon walk.

    Even rows are walked left to right, odd rows right to left, with one
    ``S`` step between rows, so every square is entered exactly once.
    """
    height = len(grid)
    width = len(grid[0]) if height else 0
    if not height or not width:
        return TurtleProgram()
    steps = []
    for r in range(height):
        if r > 0:
            col = width - 1 if r % 2 else 0
            steps.append(Instruction(Direction.S, grid[r][col]))
        forward = r % 2 == 0
        cols = range(1, width) if forward else range(width - 2, -1, -1)
        for c in cols:
            steps.append(Instruction(Direction.E if forward else Direction.O, grid[r][c]))
    return compress(TurtleProgram(grid[0][0], tuple(steps)))
