"""Shared pytest hooks.

Echoes the acceptance verdict lines collected by test_acceptance.py in a
summary section, so the per-criterion outcome is visible even when
pytest captures stdout.
"""

import sys


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    module = (sys.modules.get("test_acceptance")
              or sys.modules.get("tests.test_acceptance"))
    results = getattr(module, "RESULTS", None) if module else None
    if not results:
        return
    terminalreporter.ensure_newline()
    terminalreporter.section("acceptance criteria", sep="-")
    for num, description, ok in sorted(results):
        verdict = "PASS" if ok else "FAIL"
        terminalreporter.write_line(f"[criterion {num:2d}] {verdict} - {description}")
