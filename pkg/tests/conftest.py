import pytest
from hypothesis import strategies as st

from mtamari.paths import parse_path


@st.composite
def dyck_strings(draw, max_size=8):
    """Random Dyck path strings, drawn step by step."""
    n = draw(st.integers(0, max_size))
    out, h, ups = [], 0, 0
    while len(out) < 2 * n:
        can_up = ups < n
        can_down = h > 0
        if can_up and can_down:
            up = draw(st.booleans())
        else:
            up = can_up
        out.append("u" if up else "d")
        h += 1 if up else -1
        ups += up
    return "".join(out)


@st.composite
def m_dyck_strings(draw, m, max_n=4):
    n = draw(st.integers(0, max_n))
    out, h, blocks = [], 0, 0
    while blocks < n or h > 0:
        up = blocks < n and (h == 0 or draw(st.booleans()))
        if up:
            out.append("u" * m)
            h += m
            blocks += 1
        else:
            out.append("d")
            h -= 1
    return "".join(out)


@pytest.fixture
def P():
    return parse_path


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import VERDICTS
    if VERDICTS:
        terminalreporter.section("acceptance criteria")
        for k in sorted(VERDICTS):
            terminalreporter.write_line(VERDICTS[k])
