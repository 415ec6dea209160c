import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))


def pytest_terminal_summary(terminalreporter):
    from helpers import ACCEPTANCE

    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for criterion, status, detail in ACCEPTANCE:
        terminalreporter.write_line(f"[{status}] criterion {criterion}: {detail}")
