import sys
from pathlib import Path

from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from ferrers.partitions import _partitions_of_weight


@st.composite
def partitions(draw, max_weight: int = 12, allow_empty: bool = True):
    """Uniform choice of weight, then uniform choice among that weight's partitions."""
    n = draw(st.integers(0 if allow_empty else 1, max_weight))
    pool = _partitions_of_weight(n)
    return pool[draw(st.integers(0, len(pool) - 1))]


def all_partitions_upto(weight: int, include_empty: bool = True):
    out = []
    for w in range(0 if include_empty else 1, weight + 1):
        out.extend(_partitions_of_weight(w))
    return out


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    """One PASS/FAIL line per acceptance criterion, after capture ends."""
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
