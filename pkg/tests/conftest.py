from fractions import Fraction

from hypothesis import settings, strategies as st

from runnet.coeffring import Poly
from runnet.powerseries import Series

settings.register_profile("default", deadline=None)
settings.load_profile("default")

small_q = st.fractions(min_value=-5, max_value=5, max_denominator=4)


@st.composite
def polys(draw, max_degree=3):
    return Poly(draw(st.lists(small_q, max_size=max_degree + 1)))


@st.composite
def series(draw, bound=6, unit=False):
    cs = draw(st.lists(polys(2), min_size=bound + 1, max_size=bound + 1))
    if unit:
        c0 = draw(small_q.filter(lambda q: q != 0))
        cs[0] = Poly.const(c0)
    return Series(cs, bound)


def q(a, b=1):
    return Fraction(a, b)


# -- acceptance reporting -----------------------------------------------------------

import pytest

_CRITERIA: dict[int, tuple[str, str, str]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion covered by the test")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None or report.when not in ("setup", "call"):
        return
    if report.when == "setup" and report.passed:
        return
    number, title = mark.args
    detail = ""
    if report.failed:
        detail = str(report.longrepr.reprcrash.message) if hasattr(report.longrepr, "reprcrash") else "error"
    status = "PASS" if report.passed else ("SKIP" if report.skipped else "FAIL")
    _CRITERIA[number] = (title, status, detail.splitlines()[0] if detail else "")


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_CRITERIA):
        title, status, detail = _CRITERIA[number]
        line = f"criterion {number}: {status}  {title}"
        terminalreporter.write_line(line + (f"  ({detail})" if detail else ""))
