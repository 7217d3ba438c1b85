import pytest
from hypothesis import strategies as st

from spectralign import Nucleotide, ScoringScheme, Sequence


def sequences(min_size=0, max_size=6):
    return st.lists(st.sampled_from(list(Nucleotide)), min_size=min_size, max_size=max_size).map(
        lambda xs: Sequence(tuple(xs))
    )


def scorings(lo=-9, hi=9):
    return st.builds(ScoringScheme, st.integers(lo, hi), st.integers(lo, hi), st.integers(lo, hi))


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(number, text): exit criterion")
    config.addinivalue_line("markers", "property: invariant/property test")


_acceptance = {}


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.outcome != "passed"):
        return
    marker = getattr(report, "acceptance", None)
    if marker is not None:
        _acceptance[marker] = report.outcome


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    m = item.get_closest_marker("acceptance")
    if m is not None:
        rep.acceptance = m.args


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for (number, text), outcome in sorted(_acceptance.items()):
        status = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"[{status}] AC{number}: {text}")
