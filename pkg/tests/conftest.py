from __future__ import annotations

import sys


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance") or sys.modules.get("tests.test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for num, name, status, elapsed, limit in sorted(mod.RESULTS):
        terminalreporter.write_line(f"criterion {num:2d}: {status}  {name}  ({elapsed:.2f} s, limit {limit:g} s)")
