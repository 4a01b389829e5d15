"""Suite-wide configuration: summary lines for the acceptance criteria."""

from __future__ import annotations

import re

_ACCEPTANCE_PATTERN = re.compile(r"test_acceptance\.py::test_(criterion_\d+)_(\w+)")


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    results: dict[tuple[int, str], str] = {}
    for outcome in ("passed", "failed", "error"):
        for report in terminalreporter.stats.get(outcome, []):
            nodeid = getattr(report, "nodeid", "")
            if getattr(report, "when", "call") != "call" and outcome != "error":
                continue
            match = _ACCEPTANCE_PATTERN.search(nodeid)
            if not match:
                continue
            number = int(match.group(1).split("_")[1])
            name = match.group(2)
            status = "PASS" if outcome == "passed" else "FAIL"
            results[(number, name)] = status
    if not results:
        return
    terminalreporter.write_sep("-", "acceptance criteria")
    for (number, name), status in sorted(results.items()):
        terminalreporter.write_line(f"ACCEPTANCE criterion {number} ({name}): {status}")
