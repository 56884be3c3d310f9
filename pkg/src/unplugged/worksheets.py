"""Printable plain-text lesson material."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from . import cards
from .errors import InventoryExceeded
from .ciphers import PegKey, format_pairs, peg_encrypt
from .grid import Inventory, Mosaic
from .rng import SplitMix64

ANSWER_RULE = "--- answer key ---"


@dataclass(frozen=True)
class Worksheet:
    title: str
    body: tuple[str, ...] = ()
    answer_key: str | None = None

    def render(self, answers: bool = False) -> str:
        parts = [self.title]
        if self.body:
            parts.append("\n\n".join(self.body))
        if answers and self.answer_key is not None:
            parts.append(ANSWER_RULE + "\n" + self.answer_key)
        return "\n\n".join(parts)


def worksheet_cards(m: Mosaic, title: str = "Write the program for this mosaic") -> Worksheet:
    """The mosaic as the exercise and its canonical coding card as the answer."""
    card = cards.encode(m)
    if not card.rows:
        return Worksheet(title, (), "")
    return Worksheet(title, (str(m),), cards.card_print(card))


def worksheet_cipher(words: Sequence[str], key: PegKey, backwards: bool = False,
                     title: str = "Decode the secret words") -> Worksheet:
    """One line of color pairs per word; the answer key lists the words.

    With ``backwards`` the pairs run from the last letter to the first and
    the answers are printed reversed too, so each one lines up with its
    exercise.
    """
    exercises, answers = [], []
    for word in words:
        exercises.append(format_pairs(peg_encrypt(word, key, backwards)))
        plain = word.upper().replace("J", "I")
        answers.append(plain[::-1] if backwards else plain)
    return Worksheet(title, tuple(exercises), "\n".join(answers))


def random_mosaic(seed: int, rows: int, columns: int, full: bool = False,
                  inventory: Inventory | None = None) -> Mosaic:
    """Gravity-valid random mosaic that the toy's ball supply can build.

    Colors are dealt from a shuffled copy of the whole inventory, so the
    result never needs more balls of a color than the box holds. With
    ``full`` every cell is filled; otherwise each column gets a random
    height in ``[0, rows]``. Columns are dealt left to right, bottom-up.
    """
    inv = inventory or Inventory()
    rng = SplitMix64(seed)
    pool = rng.shuffle(inv.pool())
    heights = [rows] * columns if full else [rng.below(rows + 1) for _ in range(columns)]
    if sum(heights) > len(pool):
        raise InventoryExceeded(f"a {rows}x{columns} mosaic needs more balls than the inventory's {len(pool)}")
    cells = [[None] * columns for _ in range(rows)]
    deal = iter(pool)
    for c, h in enumerate(heights):
        for r in range(h):
            cells[r][c] = next(deal)
    return Mosaic.from_rows(cells, columns)
