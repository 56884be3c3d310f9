"""Computational core of the Pallino coding and Peg Code unplugged lessons."""

from .cards import CodingCard, card_parse, card_print, diff, encode, execute, normalize, validate
from .ciphers import (
    PegKey,
    caesar_crack,
    caesar_decrypt,
    caesar_encrypt,
    peg_decrypt,
    peg_default_key,
    peg_encrypt,
    peg_keygen,
    pigpen_decode,
    pigpen_encode,
)
from .errors import ToyError
from .grid import Color, Inventory, Mosaic, color_from_code, inventory_check, mosaic_parse, mosaic_render
from .pallino import MachineState, machine_new, run_script, snapshot
from .turtle_lang import TurtleProgram, compile_grid, compress, interpret, turtle_parse, turtle_print

__version__ = "0.1.0"
