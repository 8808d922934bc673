"""Shared fixtures plus the acceptance summary hook.

The acceptance tests in test_acceptance.py each carry a CRITERION
label in their docstring; after the run a one line PASS/FAIL verdict
per criterion is appended to the terminal summary so the whole gate
can be read off at a glance.
"""

import pytest

from vknot import Budget, parse_gauss_code

# Small enough to keep unit tests quick, large enough that every
# diagram the tests touch reduces to its true minimal form.
TEST_BUDGET = Budget(max_nodes=2000, max_extra=2)

# Virtual trefoil: the smallest virtual knot with nonzero writhe
# polynomial.
VT_CODE = "O1+O2+U1+U2+"

# Classical trefoil as a Gauss code.
TREFOIL_CODE = "O1+U2+O3+U1+O2+U3+"

# Classical figure eight (planar; its shadow has Carter genus 0).
FIG8_CODE = "O1+U2+O3-U4-O2+U1+O4-U3-"


def vt():
    return parse_gauss_code(VT_CODE, "virtual-knot")


def trefoil():
    return parse_gauss_code(TREFOIL_CODE, "virtual-knot")


def fig8():
    return parse_gauss_code(FIG8_CODE, "virtual-knot")


@pytest.fixture
def budget():
    return TEST_BUDGET


_acceptance = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py" not in report.nodeid:
        return
    if report.when == "call" or report.outcome != "passed":
        name = report.nodeid.split("::")[-1]
        prev = _acceptance.get(name)
        if prev != "failed":
            _acceptance[name] = report.outcome


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(_acceptance):
        verdict = "PASS" if _acceptance[name] == "passed" else "FAIL"
        terminalreporter.write_line("%-60s %s" % (name, verdict))
