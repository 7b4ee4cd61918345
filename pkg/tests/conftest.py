import itertools

import pytest

from lsobstruct import JumpVector, krcatovich_check, pretzel_p_2_3_11


def compositions(total, parts):
    """All tuples of `parts` positive integers summing to `total` (stars and bars)."""
    for cuts in itertools.combinations(range(1, total), parts - 1):
        bounds = (0,) + cuts + (total,)
        yield tuple(b - a for a, b in zip(bounds, bounds[1:]))


def even_jump_vectors(max_sum, admissible_only=True):
    """Every r with r_1 = 1, r_i >= 1, k even and sum(r) <= max_sum."""
    out = []
    for k in range(2, max_sum + 1, 2):
        for total in range(k, max_sum + 1):
            # r_1 = 1 fixed; distribute total-1 over the remaining k-1 slots
            for rest in compositions(total - 1, k - 1):
                r = JumpVector((1,) + rest)
                if admissible_only and krcatovich_check(r):
                    continue
                out.append(r)
    return out


@pytest.fixture
def pretzel():
    return pretzel_p_2_3_11()


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
