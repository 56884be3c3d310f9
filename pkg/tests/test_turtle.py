import pytest
from hypothesis import given, strategies as st

from unplugged.errors import BadCount, BadToken, DanglingParen, OffGrid
from unplugged.grid import Color
from unplugged.turtle_lang import (
    Direction,
    Instruction,
    TurtleProgram,
    compile_grid,
    compress,
    interpret,
    turtle_parse,
    turtle_print,
)

from conftest import instructions, programs, sparse_grids

E, O, N, S = Direction.E, Direction.O, Direction.N, Direction.S
BLUE, RED = Color.BLUE, Color.RED


def test_parse_loop():
    assert turtle_parse("(E)3") == TurtleProgram(None, (Instruction(E, None, 3),))
    assert turtle_parse("(E blue)3").body == (Instruction(E, BLUE, 3),)


def test_parse_start_and_colored_move():
    p = turtle_parse("START red E blue")
    assert p.start_paint is RED
    assert p.body == (Instruction(E, BLUE, 1),)


def test_parse_codes_and_case():
    assert turtle_parse("e b (o K)2 s").body == (
        Instruction(E, BLUE), Instruction(O, Color.BLACK, 2), Instruction(S),
    )


def test_parse_empty():
    assert turtle_parse("") == TurtleProgram()
    assert turtle_parse("  \n ") == TurtleProgram()


@pytest.mark.parametrize("text, error", [
    ("(E blue)0", BadCount),
    ("(E)-1", BadCount),
    ("(E)2.5", BadCount),
    ("(E)", BadCount),
    ("(E)x", BadCount),
    ("(E blue 3", DanglingParen),
    ("E)3", DanglingParen),
    ("X", BadToken),
    ("E purple", BadToken),
    ("E 3", BadToken),
    ("START", BadToken),
    ("START E", BadToken),
    ("E START red", BadToken),
    ("E; S", BadToken),
    ("(blue)2", BadToken),
])
def test_parse_errors(text, error):
    with pytest.raises(error):
        turtle_parse(text)


def test_print():
    assert str(Instruction(E, BLUE, 3)) == "(E blue)3"
    assert str(Instruction(N)) == "N"
    assert turtle_print(TurtleProgram(RED, (Instruction(E, BLUE),))) == "START red E blue"


@pytest.mark.parametrize("text", ["(E blue)3", "N", "START red E blue (S)2 O", "", "START white"])
def test_print_round_trip(text):
    assert turtle_print(turtle_parse(text)) == text


@given(programs)
def test_ast_round_trip(p):
    assert turtle_parse(turtle_print(p)) == p


def test_interpret_loop_fill():
    g = interpret(turtle_parse("(E blue)3"), 4, 1)
    assert g.cells[0] == (None, BLUE, BLUE, BLUE)
    assert g.cursor == (0, 3)


def test_interpret_plain_loop_paints_nothing():
    g = interpret(turtle_parse("(E)3"), 4, 1)
    assert g.cells[0] == (None,) * 4
    assert g.cursor == (0, 3)


def test_interpret_north_from_origin_is_off_grid():
    with pytest.raises(OffGrid) as info:
        interpret(turtle_parse("N"), 3, 3)
    assert (info.value.instruction, info.value.step, info.value.position) == (1, 1, (-1, 0))


def test_interpret_reports_step_within_repeat():
    with pytest.raises(OffGrid) as info:
        interpret(turtle_parse("S (E red)5"), 3, 2)
    assert (info.value.instruction, info.value.step, info.value.position) == (2, 3, (1, 3))


def test_interpret_start_only():
    g = interpret(turtle_parse("START red"), 2, 2)
    assert g.cells == ((RED, None), (None, None))
    assert g.cursor == (0, 0)


def test_last_write_wins():
    g = interpret(turtle_parse("E red O E blue"), 2, 1)
    assert g.cells[0] == (None, BLUE)


@given(instructions, st.integers(1, 6), st.integers(1, 6))
def test_unrolling_equivalence(ins, w, h):
    rolled = TurtleProgram(None, (Instruction(S), ins))
    unrolled = TurtleProgram(None, (Instruction(S),) + (Instruction(ins.direction, ins.paint),) * ins.repeat)
    try:
        expected = interpret(unrolled, w, h)
    except OffGrid as exc:
        with pytest.raises(OffGrid) as info:
            interpret(rolled, w, h)
        assert info.value.position == exc.position
    else:
        assert interpret(rolled, w, h) == expected


def hand_trace(text, width, height):
    """Deliberately naive interpreter: unrolls everything and walks a dict."""
    tokens = text.split()
    cells, pos = {}, (0, 0)
    moves = {"E": (0, 1), "O": (0, -1), "N": (-1, 0), "S": (1, 0)}
    names = {"blue": BLUE, "red": RED}
    i = 0
    if tokens[:1] == ["START"]:
        cells[pos] = names[tokens[1]]
        i = 2
    while i < len(tokens):
        d, color = tokens[i], None
        if i + 1 < len(tokens) and tokens[i + 1] in names:
            color = names[tokens[i + 1]]
            i += 1
        i += 1
        pos = (pos[0] + moves[d][0], pos[1] + moves[d][1])
        assert 0 <= pos[0] < height and 0 <= pos[1] < width
        if color:
            cells[pos] = color
    return tuple(tuple(cells.get((r, c)) for c in range(width)) for r in range(height))


def test_compile_examples():
    line = ((BLUE, BLUE, BLUE),)
    assert turtle_print(compile_grid(line)) == "START blue (E blue)2"
    assert hand_trace("START blue E blue E blue", 3, 1) == line

    square = ((RED, RED), (RED, RED))
    assert turtle_print(compile_grid(square)) == "START red E red S red O red"
    assert hand_trace("START red E red S red O red", 2, 2) == square

    assert compile_grid(((None,),)) == TurtleProgram()


def test_compile_traverses_empty_cells():
    grid = ((None, RED, None), (BLUE, None, None))
    p = compile_grid(grid)
    # row 0 left to right, step down at the right edge, row 1 right to left
    assert turtle_print(p) == "E red E S O O blue"
    assert interpret(p, 3, 2).cells == grid


@given(sparse_grids())
def test_compile_round_trip(grid):
    h, w = len(grid), len(grid[0])
    assert interpret(compile_grid(grid), w, h).cells == grid


def test_compress_examples():
    assert turtle_print(compress(turtle_parse("E blue E blue E blue"))) == "(E blue)3"
    assert turtle_print(compress(turtle_parse("(E)2 E"))) == "(E)3"
    assert turtle_print(compress(turtle_parse("E O"))) == "E O"
    assert turtle_print(compress(turtle_parse("E E blue"))) == "E E blue"


@given(programs, st.integers(1, 8), st.integers(1, 8))
def test_compress_sound_and_idempotent(p, w, h):
    c = compress(p)
    assert compress(c) == c
    assert all((a.direction, a.paint) != (b.direction, b.paint) for a, b in zip(c.body, c.body[1:]))
    try:
        expected = interpret(p, w, h)
    except OffGrid:
        return
    assert interpret(c, w, h) == expected
