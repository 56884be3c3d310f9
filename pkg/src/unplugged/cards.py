"""The Pallino coding-card language.

A card is a stack of lettered rows, ``A`` at the bottom. Each row lists
runs of balls, left to right, as ``<count><color code>``::

    COLS 12          (optional, only when the width is not 12)
    A: 3R 4B 5Y
    B: 12Y
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import groupby
from typing import Sequence

from .errors import (
    BadRunSyntax,
    DuplicateLabel,
    FloatingRow,
    GapInLabels,
    InvalidCard,
    NonPositiveCount,
    PartialRow,
)
from .grid import PALLINO_COLUMNS, Cell, Color, Mosaic, check_same_shape, color_from_code

_ROW_RE = re.compile(r"^([A-Za-z]+)\s*:(.*)$")
_RUN_RE = re.compile(r"^([+-]?\d+)([A-Za-z])$")
_COLS_RE = re.compile(r"^COLS\s+(\S+)$", re.IGNORECASE)


def row_label(index: int) -> str:
    """0 -> A, 25 -> Z, 26 -> AA (spreadsheet style)."""
    if index < 0:
        raise ValueError("row index must be non-negative")
    out = ""
    n = index + 1
    while n:
        n, rem = divmod(n - 1, 26)
        out = chr(ord("A") + rem) + out
    return out


def label_index(label: str) -> int:
    n = 0
    for ch in label.upper():
        n = n * 26 + (ord(ch) - ord("A") + 1)
    return n - 1


@dataclass(frozen=True)
class Run:
    count: int
    color: Color

    def __post_init__(self):
        if self.count < 1:
            raise NonPositiveCount(f"run count must be at least 1, got {self.count}")

    def __str__(self) -> str:
        return f"{self.count}{self.color.code}"


@dataclass(frozen=True)
class CardRow:
    label: str
    runs: tuple[Run, ...]

    @property
    def width(self) -> int:
        return sum(r.count for r in self.runs)

    def expand(self) -> list[Color]:
        return [run.color for run in self.runs for _ in range(run.count)]

    def __str__(self) -> str:
        if not self.runs:
            return f"{self.label}:"
        return f"{self.label}: " + " ".join(str(r) for r in self.runs)


@dataclass(frozen=True)
class CodingCard:
    columns: int = PALLINO_COLUMNS
    rows: tuple[CardRow, ...] = ()

    def __post_init__(self):
        if self.columns < 1:
            raise ValueError("a card needs at least one column")
        for i, row in enumerate(self.rows):
            if row.label != row_label(i):
                raise GapInLabels(f"row {i} is labelled {row.label}, expected {row_label(i)}")

    @classmethod
    def from_runs(cls, rows: Sequence[Sequence[Run]], columns: int = PALLINO_COLUMNS) -> "CodingCard":
        """Build a card from bottom-first run lists, labelling rows A, B, ..."""
        return cls(columns, tuple(CardRow(row_label(i), tuple(r)) for i, r in enumerate(rows)))

    def __str__(self) -> str:
        return card_print(self)


@dataclass(frozen=True)
class RowSumViolation:
    label: str
    total: int
    expected: int

    def __str__(self) -> str:
        return f"RowSum row {self.label}: {self.total} != {self.expected}"


@dataclass(frozen=True)
class Mismatch:
    row: str
    column: int
    expected: Cell
    actual: Cell

    def __str__(self) -> str:
        exp = self.expected.code if self.expected else "."
        act = self.actual.code if self.actual else "."
        return f"{self.row}{self.column}: expected {exp}, got {act}"


def _parse_run(token: str, line_no: int) -> Run:
    m = _RUN_RE.match(token)
    if not m:
        raise BadRunSyntax(f"line {line_no}: bad run {token!r}")
    count = int(m.group(1))
    if count < 1:
        raise NonPositiveCount(f"line {line_no}: run count must be at least 1, got {count}")
    return Run(count, color_from_code(m.group(2)))


def card_parse(text: str) -> CodingCard:
    columns = PALLINO_COLUMNS
    found: dict[str, tuple[Run, ...]] = {}
    for line_no, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line:
            continue
        header = _COLS_RE.match(line)
        if header:
            try:
                columns = int(header.group(1))
            except ValueError:
                raise BadRunSyntax(f"line {line_no}: bad column count {header.group(1)!r}") from None
            if columns < 1:
                raise NonPositiveCount(f"line {line_no}: column count must be positive")
            continue
        m = _ROW_RE.match(line)
        if not m:
            raise BadRunSyntax(f"line {line_no}: expected '<LABEL>: <runs>', got {line!r}")
        label = m.group(1).upper()
        if label in found:
            raise DuplicateLabel(f"line {line_no}: row {label} appears twice")
        found[label] = tuple(_parse_run(tok, line_no) for tok in m.group(2).split())

    ordered = sorted(found, key=label_index)
    for i, label in enumerate(ordered):
        if label != row_label(i):
            raise GapInLabels(f"row {row_label(i)} is missing (found {label})")
    return CodingCard(columns, tuple(CardRow(label, found[label]) for label in ordered))


def card_print(card: CodingCard) -> str:
    lines = [] if card.columns == PALLINO_COLUMNS else [f"COLS {card.columns}"]
    lines.extend(str(row) for row in card.rows)
    return "\n".join(lines)


def validate(card: CodingCard) -> list[RowSumViolation]:
    """Every row must total exactly the card width. Empty list means valid."""
    return [
        RowSumViolation(row.label, row.width, card.columns)
        for row in card.rows
        if row.width != card.columns
    ]


def execute(card: CodingCard) -> Mosaic:
    violations = validate(card)
    if violations:
        raise InvalidCard(violations)
    return Mosaic.from_rows([row.expand() for row in card.rows], card.columns)


def _runs_of(cells: Sequence[Color]) -> tuple[Run, ...]:
    return tuple(Run(len(list(group)), color) for color, group in groupby(cells))


def encode(m: Mosaic) -> CodingCard:
    """Write the canonical card for a mosaic made of full rows stacked from the bottom."""
    filled_rows = []
    for r, row in enumerate(m.cells):
        n = sum(cell is not None for cell in row)
        if 0 < n < m.columns:
            raise PartialRow(f"row {row_label(r)} is only partly filled ({n}/{m.columns})")
        filled_rows.append(n > 0)
    height = filled_rows.index(False) if False in filled_rows else m.rows
    if any(filled_rows[height:]):
        above = height + filled_rows[height:].index(True)
        raise FloatingRow(f"row {row_label(above)} is filled above the empty row {row_label(height)}")
    return CodingCard.from_runs([_runs_of(m.cells[r]) for r in range(height)], m.columns)


def normalize(card: CodingCard) -> CodingCard:
    """Merge adjacent runs of the same color in every row."""
    rows = []
    for row in card.rows:
        merged: list[Run] = []
        for run in row.runs:
            if merged and merged[-1].color == run.color:
                merged[-1] = Run(merged[-1].count + run.count, run.color)
            else:
                merged.append(run)
        rows.append(CardRow(row.label, tuple(merged)))
    return CodingCard(card.columns, tuple(rows))


def diff(target: Mosaic, actual: Mosaic) -> list[Mismatch]:
    """Cells where ``actual`` differs from ``target``, bottom row first, left to right."""
    check_same_shape(target, actual)
    return [
        Mismatch(row_label(r), c + 1, target[r, c], actual[r, c])
        for r in range(target.rows)
        for c in range(target.columns)
        if target[r, c] != actual[r, c]
    ]


def format_violations(violations: Sequence[RowSumViolation]) -> str:
    return "\n".join(str(v) for v in violations)


def format_mismatches(mismatches: Sequence[Mismatch]) -> str:
    return "\n".join(str(m) for m in mismatches)
