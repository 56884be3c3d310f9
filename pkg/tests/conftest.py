import pytest
from hypothesis import strategies as st

from unplugged.ciphers import PEG_ALPHABET, PegColor, PegKey
from unplugged.grid import Color, Mosaic
from unplugged.turtle_lang import Direction, Instruction, TurtleProgram

# Exactly 120 characters of plain English.
REFERENCE_SENTENCE = (
    "In the classroom the children wrote secret messages with colored pegs "
    "and then tried to read the notes of the other team"
)

colors = st.sampled_from(list(Color))
cells = st.one_of(st.none(), colors)


@st.composite
def full_row_mosaics(draw, max_rows=16, columns=12):
    """Gravity-valid mosaics whose filled rows are complete, stacked from the bottom."""
    rows = draw(st.integers(1, max_rows))
    filled = draw(st.integers(0, rows))
    body = [draw(st.lists(colors, min_size=columns, max_size=columns)) for _ in range(filled)]
    body += [[None] * columns for _ in range(rows - filled)]
    return Mosaic.from_rows(body, columns)


@st.composite
def gravity_mosaics(draw, rows=st.integers(1, 16), columns=12):
    n = draw(rows)
    heights = draw(st.lists(st.integers(0, n), min_size=columns, max_size=columns))
    grid = [[None] * columns for _ in range(n)]
    for c, h in enumerate(heights):
        for r in range(h):
            grid[r][c] = draw(colors)
    return Mosaic.from_rows(grid, columns)


@st.composite
def sparse_grids(draw, max_side=10):
    """Top-first rows of optional colors with a drawn fill density."""
    h = draw(st.integers(1, max_side))
    w = draw(st.integers(1, max_side))
    density = draw(st.floats(0, 1))
    out = []
    for _ in range(h):
        row = []
        for _ in range(w):
            filled = draw(st.floats(0, 1)) < density
            row.append(draw(colors) if filled else None)
        out.append(tuple(row))
    return tuple(out)


instructions = st.builds(
    Instruction,
    st.sampled_from(list(Direction)),
    st.one_of(st.none(), colors),
    st.integers(1, 4),
)
programs = st.builds(
    TurtleProgram,
    st.one_of(st.none(), colors),
    st.lists(instructions, max_size=12).map(tuple),
)


@st.composite
def peg_keys(draw):
    rows = draw(st.permutations(list(PegColor)))
    cols = draw(st.permutations(list(PegColor)))
    letters = "".join(draw(st.permutations(list(PEG_ALPHABET))))
    return PegKey(tuple(rows), tuple(cols), tuple(letters[i:i + 5] for i in range(0, 25, 5)))


peg_words = st.text(alphabet=PEG_ALPHABET, max_size=20)


@pytest.fixture
def reference_sentence():
    return REFERENCE_SENTENCE


# nodeid -> outcome, and nodeid -> (number, title) for acceptance tests
_acceptance = {}
_criteria = {}


def pytest_runtest_logreport(report):
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        _acceptance.setdefault(report.nodeid, report.outcome)


def pytest_collection_modifyitems(items):
    for item in items:
        mark = getattr(getattr(item, "function", None), "criterion", None)
        if mark:
            _criteria[item.nodeid] = mark


def pytest_terminal_summary(terminalreporter):
    ran = [(num, title, _acceptance[nid]) for nid, (num, title) in _criteria.items() if nid in _acceptance]
    if not ran:
        return
    terminalreporter.section("acceptance criteria")
    for num, title, outcome in sorted(ran):
        terminalreporter.write_line(f"{'PASS' if outcome == 'passed' else 'FAIL'}  criterion {num:>2}: {title}")
