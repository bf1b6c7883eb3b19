from fractions import Fraction

from hypothesis import HealthCheck, settings, strategies as st

settings.register_profile("default", max_examples=80, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

small_rationals = st.fractions(min_value=-20, max_value=20, max_denominator=7)
nonneg_rationals = st.fractions(min_value=0, max_value=12, max_denominator=5)


def coeff_lists(elements=small_rationals, min_size=0, max_size=8):
    return st.lists(elements, min_size=min_size, max_size=max_size)


def F(s) -> Fraction:
    return Fraction(s)


_criteria = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


def pytest_runtest_makereport(item, call):
    mark = item.get_closest_marker("criterion")
    if mark is None or call.when != "call":
        return
    number, title = mark.args
    _criteria[number] = (title, call.excinfo is None)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        title, ok = _criteria[number]
        terminalreporter.write_line(f"criterion {number:>2} {'PASS' if ok else 'FAIL'}  {title}")
