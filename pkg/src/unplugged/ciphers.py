"""Caesar, Pigpen and the Peg Code color-pair cipher.

Peg Code is a Polybius square addressed by colored pegs: a letter is named
by the color of its row and the color of its column. The 26 letters share
25 cells, so J is written in I's cell and always decrypts as I.
"""

from __future__ import annotations

import string
from collections import Counter
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Mapping, NamedTuple, Sequence

from .errors import (
    BadColorPermutation,
    BadFrequencyTable,
    BadKeyFormat,
    NoLetters,
    NonBijectiveLayout,
    UnknownSymbol,
    UnmappableCharacter,
)
from .rng import SplitMix64

ALPHABET = string.ascii_uppercase
WORD_BREAK = "/"

# Relative letter frequencies of English text, percent.
ENGLISH_FREQUENCIES = {
    "A": 8.167, "B": 1.492, "C": 2.782, "D": 4.253, "E": 12.702, "F": 2.228,
    "G": 2.015, "H": 6.094, "I": 6.966, "J": 0.153, "K": 0.772, "L": 4.025,
    "M": 2.406, "N": 6.749, "O": 7.507, "P": 1.929, "Q": 0.095, "R": 5.987,
    "S": 6.327, "T": 9.056, "U": 2.758, "V": 0.978, "W": 2.360, "X": 0.150,
    "Y": 1.974, "Z": 0.074,
}


# -- Caesar ----------------------------------------------------------------

def _shift_char(ch: str, shift: int) -> str:
    if "A" <= ch <= "Z":
        return chr((ord(ch) - 65 + shift) % 26 + 65)
    if "a" <= ch <= "z":
        return chr((ord(ch) - 97 + shift) % 26 + 97)
    return ch


def caesar_encrypt(plaintext: str, shift: int) -> str:
    """Shift ASCII letters forward by ``shift`` (mod 26); everything else passes through."""
    return "".join(_shift_char(ch, shift) for ch in plaintext)


def caesar_decrypt(ciphertext: str, shift: int) -> str:
    return caesar_encrypt(ciphertext, -shift)


def normalize_frequencies(table: Mapping[str, float]) -> dict[str, float]:
    """Upper-case, check every letter has a positive weight, scale to sum 1."""
    freq = {k.upper(): float(v) for k, v in table.items()}
    missing = [ch for ch in ALPHABET if freq.get(ch, 0.0) <= 0.0]
    if missing:
        raise BadFrequencyTable(f"letters without a positive frequency: {''.join(missing)}")
    extra = set(freq) - set(ALPHABET)
    if extra:
        raise BadFrequencyTable(f"unexpected keys in frequency table: {sorted(extra)}")
    total = sum(freq.values())
    return {ch: freq[ch] / total for ch in ALPHABET}


def parse_frequency_table(text: str) -> dict[str, float]:
    """Read ``<letter> <weight>`` lines; blank lines and ``#`` comments are skipped."""
    table = {}
    for n, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2 or len(parts[0]) != 1 or not parts[0].isalpha():
            raise BadFrequencyTable(f"line {n}: expected '<letter> <weight>'")
        try:
            table[parts[0].upper()] = float(parts[1])
        except ValueError:
            raise BadFrequencyTable(f"line {n}: bad weight {parts[1]!r}") from None
    return normalize_frequencies(table)


def chi_squared(text: str, frequencies: Mapping[str, float]) -> float:
    """Pearson chi-squared of the letter histogram of ``text`` against ``frequencies``."""
    counts = Counter(ch for ch in text.upper() if ch in ALPHABET)
    total = sum(counts.values())
    score = 0.0
    for ch in ALPHABET:
        expected = total * frequencies[ch]
        score += (counts[ch] - expected) ** 2 / expected
    return score


def caesar_crack(ciphertext: str, frequencies: Mapping[str, float] | None = None) -> list[tuple[int, float]]:
    """Score all 26 shifts, best (lowest chi-squared) first."""
    if not any(ch.upper() in ALPHABET for ch in ciphertext):
        raise NoLetters("ciphertext has no letters to analyse")
    freq = normalize_frequencies(frequencies or ENGLISH_FREQUENCIES)
    scores = [(shift, chi_squared(caesar_decrypt(ciphertext, shift), freq)) for shift in range(26)]
    return sorted(scores, key=lambda item: (item[1], item[0]))


def format_ranking(ranking: Sequence[tuple[int, float]]) -> str:
    return "\n".join(f"{shift} {score:.4f}" for shift, score in ranking)


# -- Pigpen ----------------------------------------------------------------

class Shape(Enum):
    GRID1 = "grid1"
    GRID2 = "grid2"
    X1 = "x1"
    X2 = "x2"


_CELLS = {Shape.GRID1: 9, Shape.GRID2: 9, Shape.X1: 4, Shape.X2: 4}
_DOTTED = {Shape.GRID1: False, Shape.GRID2: True, Shape.X1: False, Shape.X2: True}


@dataclass(frozen=True)
class PigpenSymbol:
    shape: Shape
    cell: int
    dotted: bool

    def __str__(self) -> str:
        mark = "#" if self.shape in (Shape.GRID1, Shape.GRID2) else "x"
        return f"{mark}{self.cell}{'.' if self.dotted else ''}"

    @classmethod
    def parse(cls, token: str) -> "PigpenSymbol":
        body, dotted = (token[:-1], True) if token.endswith(".") else (token, False)
        if len(body) < 2 or body[0] not in "#x" or not body[1:].isdigit():
            raise UnknownSymbol(f"not a pigpen symbol: {token!r}")
        if body[0] == "#":
            shape = Shape.GRID2 if dotted else Shape.GRID1
        else:
            shape = Shape.X2 if dotted else Shape.X1
        cell = int(body[1:])
        if not 1 <= cell <= _CELLS[shape]:
            raise UnknownSymbol(f"{token!r}: {shape.value} cells are 1-{_CELLS[shape]}")
        return cls(shape, cell, dotted)


class PigpenTable:
    """Bijective letter <-> symbol table."""

    def __init__(self, mapping: Mapping[str, PigpenSymbol]):
        self.encoding = {k.upper(): v for k, v in mapping.items()}
        if sorted(self.encoding) != list(ALPHABET):
            raise ValueError("pigpen table must cover exactly the 26 letters")
        self.decoding = {v: k for k, v in self.encoding.items()}
        if len(self.decoding) != 26:
            raise ValueError("pigpen table maps two letters to the same symbol")

    @classmethod
    def default(cls) -> "PigpenTable":
        """A-I plain grid, J-R dotted grid, S-V plain X, W-Z dotted X."""
        order = [(Shape.GRID1, 9), (Shape.GRID2, 9), (Shape.X1, 4), (Shape.X2, 4)]
        symbols = [PigpenSymbol(s, i, _DOTTED[s]) for s, n in order for i in range(1, n + 1)]
        return cls(dict(zip(ALPHABET, symbols)))


def pigpen_encode(plaintext: str, table: PigpenTable | None = None) -> list[PigpenSymbol]:
    table = table or PigpenTable.default()
    out = []
    for ch in plaintext:
        sym = table.encoding.get(ch.upper())
        if sym is None:
            raise UnmappableCharacter(f"pigpen cannot encode {ch!r}")
        out.append(sym)
    return out


def pigpen_decode(tokens: Iterable[PigpenSymbol | str], table: PigpenTable | None = None) -> str:
    table = table or PigpenTable.default()
    out = []
    for tok in tokens:
        sym = PigpenSymbol.parse(tok) if isinstance(tok, str) else tok
        if sym not in table.decoding:
            raise UnknownSymbol(f"symbol {sym} is not in the table")
        out.append(table.decoding[sym])
    return "".join(out)


def pigpen_encode_message(text: str, table: PigpenTable | None = None) -> str:
    """Encode whitespace-separated words; words are joined by ``/``."""
    words = [" ".join(str(s) for s in pigpen_encode(w, table)) for w in text.split()]
    return f" {WORD_BREAK} ".join(words)


def pigpen_decode_message(text: str, table: PigpenTable | None = None) -> str:
    return " ".join(pigpen_decode(word.split(), table) for word in _split_words(text))


def _split_words(text: str) -> list[str]:
    words = [w.strip() for w in text.split(WORD_BREAK)]
    return [w for w in words if w]


# -- Peg Code --------------------------------------------------------------

class PegColor(Enum):
    WHITE = "W"
    ORANGE = "O"
    RED = "R"
    GREEN = "G"
    BLUE = "B"

    @property
    def code(self) -> str:
        return self.value


PEG_ORDER = tuple(PegColor)
PEG_ALPHABET = ALPHABET.replace("J", "")


def peg_color(code: str) -> PegColor:
    try:
        return PegColor(code.upper())
    except ValueError:
        raise UnmappableCharacter(f"unknown peg color {code!r}") from None


class ColorPair(NamedTuple):
    row: PegColor
    col: PegColor

    def __str__(self) -> str:
        return self.row.code + self.col.code

    @classmethod
    def parse(cls, token: str) -> "ColorPair":
        if len(token) != 2:
            raise UnmappableCharacter(f"a color pair is two color codes, got {token!r}")
        return cls(peg_color(token[0]), peg_color(token[1]))


@dataclass(frozen=True)
class PegKey:
    """Row colors (top to bottom), column colors (left to right) and a 5x5 letter layout."""

    row_colors: tuple[PegColor, ...]
    col_colors: tuple[PegColor, ...]
    layout: tuple[str, ...]

    def __post_init__(self):
        for name, colors in (("row", self.row_colors), ("column", self.col_colors)):
            if len(colors) != 5 or set(colors) != set(PegColor):
                raise BadColorPermutation(f"{name} colors must use each of the five colors once")
        letters = "".join(self.layout)
        if len(self.layout) != 5 or any(len(r) != 5 for r in self.layout):
            raise NonBijectiveLayout("layout must be 5 rows of 5 letters")
        if sorted(letters) != sorted(PEG_ALPHABET):
            raise NonBijectiveLayout("layout must hold every letter except J exactly once")

    def cell_of(self, letter: str) -> tuple[int, int]:
        letter = letter.upper()
        if letter == "J":
            letter = "I"
        for r, row in enumerate(self.layout):
            c = row.find(letter)
            if c >= 0:
                return r, c
        raise UnmappableCharacter(f"peg code cannot encode {letter!r}")

    def pair_of(self, letter: str) -> ColorPair:
        r, c = self.cell_of(letter)
        return ColorPair(self.row_colors[r], self.col_colors[c])

    def letter_of(self, pair: ColorPair) -> str:
        return self.layout[self.row_colors.index(pair.row)][self.col_colors.index(pair.col)]


def peg_default_key() -> PegKey:
    """Alphabet in reading order, I/J sharing a cell, both axes W O R G B."""
    layout = tuple(PEG_ALPHABET[i:i + 5] for i in range(0, 25, 5))
    return PegKey(PEG_ORDER, PEG_ORDER, layout)


def peg_keygen(seed: int) -> PegKey:
    """Deterministic random key: shuffle row colors, then column colors, then letters."""
    rng = SplitMix64(seed)
    rows = rng.shuffle(list(PEG_ORDER))
    cols = rng.shuffle(list(PEG_ORDER))
    letters = "".join(rng.shuffle(list(PEG_ALPHABET)))
    return PegKey(tuple(rows), tuple(cols), tuple(letters[i:i + 5] for i in range(0, 25, 5)))


def peg_encrypt(word: str, key: PegKey | None = None, backwards: bool = False) -> list[ColorPair]:
    key = key or peg_default_key()
    pairs = [key.pair_of(ch) for ch in word]
    return pairs[::-1] if backwards else pairs


def peg_decrypt(pairs: Sequence[ColorPair], key: PegKey | None = None, backwards: bool = False) -> str:
    key = key or peg_default_key()
    if backwards:
        pairs = pairs[::-1]
    return "".join(key.letter_of(p) for p in pairs)


def format_pairs(pairs: Iterable[ColorPair]) -> str:
    return " ".join(str(p) for p in pairs)


def parse_pairs(text: str) -> list[ColorPair]:
    return [ColorPair.parse(tok) for tok in text.split()]


def peg_encrypt_message(text: str, key: PegKey | None = None, backwards: bool = False) -> str:
    """Encrypt each whitespace-separated word; words are separated by ``/``."""
    return f" {WORD_BREAK} ".join(format_pairs(peg_encrypt(w, key, backwards)) for w in text.split())


def peg_decrypt_message(text: str, key: PegKey | None = None, backwards: bool = False) -> str:
    return " ".join(peg_decrypt(parse_pairs(w), key, backwards) for w in _split_words(text))


def peg_key_save(key: PegKey) -> str:
    lines = [
        "ROWS " + " ".join(c.code for c in key.row_colors),
        "COLS " + " ".join(c.code for c in key.col_colors),
    ]
    lines.extend(" ".join(row) for row in key.layout)
    return "\n".join(lines)


def _load_colors(line: str, header: str) -> tuple[PegColor, ...]:
    parts = line.split()
    if not parts or parts[0].upper() != header:
        raise BadKeyFormat(f"expected a line starting with {header}, got {line!r}")
    try:
        colors = tuple(PegColor(p.upper()) for p in parts[1:])
    except ValueError:
        raise BadColorPermutation(f"unknown color in {line!r}") from None
    if len(colors) != 5 or len(set(colors)) != 5:
        raise BadColorPermutation(f"{header} must list each of W O R G B once, got {line!r}")
    return colors


def peg_key_load(text: str) -> PegKey:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if len(lines) != 7:
        raise BadKeyFormat(f"a key file has 7 non-blank lines, got {len(lines)}")
    rows = _load_colors(lines[0], "ROWS")
    cols = _load_colors(lines[1], "COLS")
    layout = tuple("".join(ln.split()).upper() for ln in lines[2:])
    if any(len(r) != 5 or not r.isalpha() for r in layout):
        raise BadKeyFormat("layout lines must hold five letters each")
    return PegKey(rows, cols, layout)
