import random

from hypothesis import settings, strategies as st

from domtile.fuzz import random_region, random_symmetric_region

settings.register_profile("default", deadline=None, max_examples=100)
settings.load_profile("default")


def regions(max_cells=20, min_cells=1):
    return st.integers(0, 2**32 - 1).map(
        lambda s: random_region(random.Random(s), max_cells=max_cells, min_cells=min_cells))


def symmetric_regions(max_cells=30):
    return st.integers(0, 2**32 - 1).map(
        lambda s: random_symmetric_region(random.Random(s), max_cells=max_cells))


ACCEPTANCE = {}


def pytest_runtest_logreport(report):
    if report.when == "call" and "test_acceptance.py" in report.nodeid:
        name = report.nodeid.split("::")[-1]
        ACCEPTANCE[name] = (report.passed, report.duration)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(ACCEPTANCE, key=lambda n: int(n.split("_")[1][1:])):
        ok, secs = ACCEPTANCE[name]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}  ({secs:.1f}s)")
