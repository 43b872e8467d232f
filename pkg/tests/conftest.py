import re

import pytest


def pytest_terminal_summary(terminalreporter):
    rows = []
    for outcome in ("passed", "failed", "error"):
        for rep in terminalreporter.stats.get(outcome, []):
            if rep.when != "call" and outcome != "error":
                continue
            label = dict(getattr(rep, "user_properties", ())).get("criterion")
            if label:
                rows.append((label, "PASS" if outcome == "passed" else "FAIL"))
    if rows:
        terminalreporter.section("acceptance criteria")
        for label, flag in sorted(rows, key=lambda r: _order(r[0])):
            terminalreporter.write_line(f"{flag}  {label}")


def _order(label):
    m = re.match(r"(\d+)(\S*)", label)
    return (int(m.group(1)), m.group(2)) if m else (99, label)


@pytest.fixture
def criterion(record_property):
    def tag(label):
        record_property("criterion", label)

    return tag
