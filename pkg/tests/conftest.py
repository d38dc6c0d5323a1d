import pytest

from brinthompson import Pattern, embed_V_into_nV, make_element
from brinthompson.element import Element


@pytest.fixture
def A():
    """The infinite-order V element 0->00, 10->01, 11->1."""
    return make_element(Pattern.of("0", "10", "11"), Pattern.of("00", "01", "1"))


@pytest.fixture
def A2(A):
    return embed_V_into_nV(A, 1, 2)


@pytest.fixture
def swap():
    p = Pattern.of("0,e", "1,e")
    return make_element(p, p, (1, 0))


@pytest.fixture
def coord_swap():
    """The pure twist (x, y) -> (y, x) in 2V_{S_2}."""
    p = Pattern.trivial(2)
    return Element(p, p, (0,), ((1, 0),))


# -- acceptance gate reporting ------------------------------------------------------


def pytest_configure(config):
    config._gate_lines = []


def pytest_runtest_makereport(item, call):
    if call.when != "call" or item.get_closest_marker("acceptance") is None:
        return
    number, label = item.get_closest_marker("acceptance").args
    verdict = "PASS" if call.excinfo is None else "FAIL"
    detail = "; ".join(f"{k}={v}" for k, v in item.user_properties)
    item.config._gate_lines.append((number, f"criterion {number}: {verdict}  {label}  [{detail}]"))


def pytest_terminal_summary(terminalreporter, config):
    lines = sorted(config._gate_lines)
    if lines:
        terminalreporter.section("acceptance gate")
        for _, line in lines:
            terminalreporter.write_line(line)
