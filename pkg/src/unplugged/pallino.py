"""Deterministic model of the Pallino ball machine.

The machine has 12 columns, each filled from the bottom. Balls wait in a
feed queue; the front ball is the one the child sees next. ``Launch``
drops it into a column, ``Exit`` sends it to the back of the queue and
``Reset`` empties one column onto the back of the queue (bottom ball
first). No ball ever leaves the system.

Script format, one command per line::

    L <1-12>    launch the front ball into a column
    X           exit: rotate the front ball to the back
    R <1-12>    reset a column
    P           peek: log the front ball's color
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Sequence, Union

from .errors import BadScriptSyntax, ColumnFull, EmptyFeed, InventoryExceeded, ScriptError, ToyError
from .grid import DEFAULT_ROWS, PALLINO_COLUMNS, Color, Inventory, Mosaic, color_from_code

COLUMNS = PALLINO_COLUMNS


@dataclass(frozen=True)
class MachineState:
    rows: int
    columns: tuple[tuple[Color, ...], ...]  # per column, bottom-up
    feed: tuple[Color, ...]

    def height(self, column: int) -> int:
        return len(self.columns[column - 1])

    def balls(self) -> Counter:
        """Every ball in the machine, on screen or in the feed."""
        return Counter(self.feed) + Counter(b for col in self.columns for b in col)


@dataclass(frozen=True)
class Launch:
    column: int

    def __str__(self) -> str:
        return f"L {self.column}"


@dataclass(frozen=True)
class Exit:
    def __str__(self) -> str:
        return "X"


@dataclass(frozen=True)
class ResetColumn:
    column: int

    def __str__(self) -> str:
        return f"R {self.column}"


@dataclass(frozen=True)
class Peek:
    def __str__(self) -> str:
        return "P"


Command = Union[Launch, Exit, ResetColumn, Peek]


def _check_column(column: int) -> None:
    if not 1 <= column <= COLUMNS:
        raise ValueError(f"column must be 1-{COLUMNS}, got {column}")


def machine_new(feed: Iterable[Color], rows: int = DEFAULT_ROWS, inventory: Inventory | None = None) -> MachineState:
    if rows < 1:
        raise ValueError("the screen needs at least one row")
    feed = tuple(feed)
    inv = inventory or Inventory()
    for color, n in Counter(feed).items():
        if n > inv.cap(color):
            raise InventoryExceeded(f"feed has {n} {color.label} balls, the toy has {inv.cap(color)}")
    return MachineState(rows, ((),) * COLUMNS, feed)


def launch(s: MachineState, column: int) -> MachineState:
    _check_column(column)
    if not s.feed:
        raise EmptyFeed("no ball to launch")
    if s.height(column) >= s.rows:
        raise ColumnFull(column)
    cols = list(s.columns)
    cols[column - 1] = cols[column - 1] + (s.feed[0],)
    return MachineState(s.rows, tuple(cols), s.feed[1:])


def exit_ball(s: MachineState) -> MachineState:
    if not s.feed:
        raise EmptyFeed("no ball to exit")
    return MachineState(s.rows, s.columns, s.feed[1:] + s.feed[:1])


def reset_column(s: MachineState, column: int) -> MachineState:
    _check_column(column)
    balls = s.columns[column - 1]
    if not balls:
        return s
    cols = list(s.columns)
    cols[column - 1] = ()
    return MachineState(s.rows, tuple(cols), s.feed + balls)


def peek(s: MachineState) -> Color:
    if not s.feed:
        raise EmptyFeed("the feed is empty")
    return s.feed[0]


def snapshot(s: MachineState) -> Mosaic:
    cells = [
        [col[r] if r < len(col) else None for col in s.columns]
        for r in range(s.rows)
    ]
    return Mosaic.from_rows(cells, COLUMNS)


def apply(s: MachineState, cmd: Command) -> tuple[MachineState, Color | None]:
    """Run one command; the second item is the peeked color for ``Peek``."""
    if isinstance(cmd, Launch):
        return launch(s, cmd.column), None
    if isinstance(cmd, Exit):
        return exit_ball(s), None
    if isinstance(cmd, ResetColumn):
        return reset_column(s, cmd.column), None
    if isinstance(cmd, Peek):
        return s, peek(s)
    raise TypeError(f"not a command: {cmd!r}")


def parse_script(text: str) -> list[tuple[int, Command]]:
    """(line number, command) pairs; blank lines are skipped."""
    out = []
    for n, raw in enumerate(text.splitlines(), 1):
        parts = raw.split()
        if not parts:
            continue
        op = parts[0].upper()
        if op in ("X", "P") and len(parts) == 1:
            out.append((n, Exit() if op == "X" else Peek()))
            continue
        if op in ("L", "R") and len(parts) == 2 and parts[1].isdigit():
            column = int(parts[1])
            if 1 <= column <= COLUMNS:
                out.append((n, Launch(column) if op == "L" else ResetColumn(column)))
                continue
            raise BadScriptSyntax(f"line {n}: column must be 1-{COLUMNS}, got {column}")
        raise BadScriptSyntax(f"line {n}: expected 'L <col>', 'X', 'R <col>' or 'P', got {raw.strip()!r}")
    return out


def run_script(s: MachineState, script: str) -> tuple[MachineState, list[Color]]:
    """Apply every command in order and return the final state with the peek log.

    The first failing command raises ScriptError carrying its line number and
    the state just before it.
    """
    log = []
    for line, cmd in parse_script(script):
        try:
            s, seen = apply(s, cmd)
        except ToyError as exc:
            raise ScriptError(line, exc, s) from exc
        if seen is not None:
            log.append(seen)
    return s, log


def format_script(commands: Iterable[Command]) -> str:
    return "\n".join(str(c) for c in commands)


def parse_feed(text: str) -> tuple[Color, ...]:
    """Read a feed literal such as ``YYRRB`` or ``FEED YYRRB``; whitespace is ignored."""
    body = text.strip()
    if body[:4].upper() == "FEED":
        body = body[4:]
    return tuple(color_from_code(ch) for ch in "".join(body.split()))


def format_feed(feed: Sequence[Color]) -> str:
    return "FEED " + "".join(c.code for c in feed)


def format_run(s: MachineState, log: Sequence[Color]) -> str:
    """Screen, remaining feed and peek log, as printed by ``sim run``."""
    lines = [str(snapshot(s)), format_feed(s.feed).rstrip()]
    if log:
        lines.append("LOG " + " ".join(c.code for c in log))
    return "\n".join(lines)


def synthesize_script(target: Mosaic, feed: Sequence[Color]) -> list[Command]:
    """Commands that build ``target`` on a fresh machine loaded with ``feed``.

    Columns are built left to right, bottom-up; before each launch the feed
    is rotated with Exit until the needed color is in front.
    """
    if target.columns != COLUMNS:
        raise ValueError(f"target must have {COLUMNS} columns")
    if not target.is_gravity_consistent():
        raise ValueError("target has balls floating above empty cells")
    need, have = target.counts(), Counter(feed)
    short = [c.label for c in need if need[c] > have[c]]
    if short:
        raise InventoryExceeded(f"the feed does not hold enough {', '.join(short)} balls")

    queue = list(feed)
    commands: list[Command] = []
    for c in range(COLUMNS):
        for color in target.column(c):
            if color is None:
                break
            while queue[0] != color:
                queue.append(queue.pop(0))
                commands.append(Exit())
            queue.pop(0)
            commands.append(Launch(c + 1))
    return commands
