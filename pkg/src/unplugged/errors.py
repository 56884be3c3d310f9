"""Exception hierarchy shared by every module.

All domain failures derive from :class:`ToyError` so callers (and the CLI)
can separate them from programming errors.
"""


class ToyError(ValueError):
    """Base class for domain errors."""


class UnknownColor(ToyError):
    pass


# mosaic text
class RaggedLines(ToyError):
    pass


class EmptyMosaic(ToyError):
    pass


class DimensionMismatch(ToyError):
    pass


# coding cards
class CardSyntaxError(ToyError):
    pass


class BadRunSyntax(CardSyntaxError):
    pass


class DuplicateLabel(CardSyntaxError):
    pass


class GapInLabels(CardSyntaxError):
    pass


class NonPositiveCount(CardSyntaxError):
    pass


class InvalidCard(ToyError):
    def __init__(self, violations):
        self.violations = list(violations)
        super().__init__("; ".join(str(v) for v in self.violations))


class PartialRow(ToyError):
    pass


class FloatingRow(ToyError):
    pass


# turtle language
class TurtleSyntaxError(ToyError):
    pass


class BadToken(TurtleSyntaxError):
    pass


class BadCount(TurtleSyntaxError):
    pass


class DanglingParen(TurtleSyntaxError):
    pass


class OffGrid(ToyError):
    def __init__(self, instruction: int, step: int, position: tuple[int, int]):
        self.instruction = instruction
        self.step = step
        self.position = position
        super().__init__(
            f"OffGrid at instruction {instruction}, step {step}: "
            f"position {position} is outside the grid"
        )


# ciphers
class NoLetters(ToyError):
    pass


class UnmappableCharacter(ToyError):
    pass


class UnknownSymbol(ToyError):
    pass


class BadFrequencyTable(ToyError):
    pass


class BadKeyFormat(ToyError):
    pass


class NonBijectiveLayout(BadKeyFormat):
    pass


class BadColorPermutation(BadKeyFormat):
    pass


# simulator
class InventoryExceeded(ToyError):
    pass


class EmptyFeed(ToyError):
    pass


class ColumnFull(ToyError):
    def __init__(self, column: int):
        self.column = column
        super().__init__(f"ColumnFull: column {column} is full")


class BadScriptSyntax(ToyError):
    pass


class ScriptError(ToyError):
    """A command failed while running a script.

    ``line`` is the 1-based script line, ``state`` the machine state just
    before the failing command, ``cause`` the original error.
    """

    def __init__(self, line: int, cause: ToyError, state):
        self.line = line
        self.cause = cause
        self.state = state
        super().__init__(f"line {line}: {cause}")
