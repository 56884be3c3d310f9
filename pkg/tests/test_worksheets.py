import pytest

from unplugged.ciphers import peg_default_key, peg_keygen
from unplugged.errors import InventoryExceeded, PartialRow, UnmappableCharacter
from unplugged.grid import Mosaic, inventory_check, mosaic_parse
from unplugged.worksheets import ANSWER_RULE, Worksheet, random_mosaic, worksheet_cards, worksheet_cipher


def test_card_worksheet():
    sheet = worksheet_cards(mosaic_parse("RRRBBBBYYYYY"))
    assert sheet.body == ("RRRBBBBYYYYY",)
    assert sheet.answer_key == "A: 3R 4B 5Y"


def test_card_worksheet_empty_and_partial():
    sheet = worksheet_cards(Mosaic.empty(16))
    assert sheet.body == () and sheet.answer_key == ""
    with pytest.raises(PartialRow):
        worksheet_cards(mosaic_parse("RRR.BBBBYYYY"))


def test_answers_only_on_request():
    sheet = worksheet_cards(mosaic_parse("RRRBBBBYYYYY"))
    assert "A: 3R" not in sheet.render()
    assert ANSWER_RULE not in sheet.render()
    assert sheet.render(answers=True).endswith(ANSWER_RULE + "\nA: 3R 4B 5Y")


def test_cipher_worksheet():
    key = peg_default_key()
    fwd = worksheet_cipher(["CAB"], key)
    assert fwd.body == ("WR WW WO",) and fwd.answer_key == "CAB"
    back = worksheet_cipher(["CAB"], key, backwards=True)
    assert back.body == ("WO WW WR",) and back.answer_key == "BAC"
    empty = worksheet_cipher([], key)
    assert empty.body == () and empty.answer_key == ""
    with pytest.raises(UnmappableCharacter):
        worksheet_cipher(["C4B"], key)


def test_render_layout():
    sheet = Worksheet("Title", ("one", "two"), "k")
    assert sheet.render() == "Title\n\none\n\ntwo"
    assert sheet.render(answers=True) == "Title\n\none\n\ntwo\n\n" + ANSWER_RULE + "\nk"


def test_random_mosaic_reproducible():
    a = random_mosaic(5, 16, 12)
    assert a == random_mosaic(5, 16, 12)
    assert a != random_mosaic(6, 16, 12)
    assert a.is_gravity_consistent()


@pytest.mark.parametrize("seed", range(20))
def test_random_mosaic_full_within_inventory(seed):
    m = random_mosaic(seed, 16, 12, full=True)
    assert m.filled() == 192
    assert inventory_check(m).ok


def test_random_mosaic_too_big():
    with pytest.raises(InventoryExceeded):
        random_mosaic(0, 20, 12, full=True)


def test_keygen_seed_gives_usable_worksheet():
    sheet = worksheet_cipher(["PALLINO", "CODING"], peg_keygen(3))
    assert len(sheet.body) == 2
