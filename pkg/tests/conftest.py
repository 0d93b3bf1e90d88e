"""Prints one PASS/FAIL line per acceptance criterion after the run.

Only tests named test_cNN_* inside test_acceptance.py feed the summary;
every other test file is left alone.  A criterion that errors during
setup or gets skipped counts as FAIL: the gate never passes silently.
"""

import re

_LABELS = {
    1: "class size sets match the independent oracle",
    2: "product groups multiply class size sets",
    3: "decomposition verdicts across the whole builtin corpus",
    4: "negative control plus divisibility component count",
    5: "active primes force a complement and central Sylow centers",
    6: "class and centralizer laws over normal subgroups and quotients",
    7: "every noncentral element misses a conjugacy class",
    8: "commuting Sylow pairs match the class-size criterion",
    9: "coprime action witnesses split as fixed times commutator",
    10: "scans are byte-identical across worker counts",
    11: "centralizer order times class size equals group order",
}

_PAT = re.compile(r"test_acceptance\.py::test_c(\d{2})_")
_outcomes: dict = {}


def pytest_runtest_logreport(report):
    m = _PAT.search(report.nodeid)
    if m is None:
        return
    num = int(m.group(1))
    if report.when == "call":
        verdict = "PASS" if report.passed else "FAIL"
    elif report.failed or report.skipped:
        verdict = "FAIL"
    else:
        return
    if _outcomes.get(num) != "FAIL":
        _outcomes[num] = verdict


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _outcomes:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(_outcomes):
        verdict = _outcomes[num]
        terminalreporter.write_line(f"ACCEPTANCE C{num} {verdict} - {_LABELS[num]}")
