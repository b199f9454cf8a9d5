import pytest

from orthoguard import polygon_from_profile, validate

RECTANGLE = [(0, 0), (4, 0), (4, 3), (0, 3)]
L_SHAPE = [(0, 0), (4, 0), (4, 2), (2, 2), (2, 4), (0, 4)]
H_STAR = [(0, 0), (10, 0), (10, 4), (8, 4), (8, 2), (6, 2), (6, 5), (4, 5),
          (4, 2), (2, 2), (2, 6), (0, 6)]

_acceptance_lines = []


def comb_polygon(k, tall=3, short=1):
    """Histogram with k equal teeth separated by k - 1 dents."""
    tops = [tall if i % 2 == 0 else short for i in range(2 * k - 1)]
    return polygon_from_profile(list(range(len(tops) + 1)), [0] * len(tops), tops)


@pytest.fixture
def rectangle():
    return validate(RECTANGLE)


@pytest.fixture
def lshape():
    return validate(L_SHAPE)


@pytest.fixture
def hstar():
    return validate(H_STAR)


@pytest.fixture
def ushape():
    return polygon_from_profile([0, 2, 4, 6], [0, 0, 0], [4, 2, 4])


@pytest.fixture
def zpoly():
    # Slab 3 sits entirely above the window [0, 2] left by slabs 1-2.
    return polygon_from_profile([0, 1, 2, 3], [0, 0, 3], [2, 4, 4])


@pytest.fixture
def staircase():
    return polygon_from_profile([0, 1, 2, 3, 4], [0, 1, 1, 2], [2, 2, 3, 3])


@pytest.fixture
def acceptance_report():
    """Collects one summary line per acceptance criterion."""
    def record(number, passed, detail):
        line = f"acceptance {number:>2}: {'PASS' if passed else 'FAIL'}  {detail}"
        _acceptance_lines.append(line)
        print(line)
    return record


def pytest_terminal_summary(terminalreporter):
    if _acceptance_lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(_acceptance_lines, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
