import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))


def pytest_terminal_summary(terminalreporter):
    """One line per acceptance criterion, plus any findings recorded on the way."""
    lines = []
    for outcome in ("passed", "failed", "error"):
        for rep in terminalreporter.stats.get(outcome, []):
            if "test_acceptance.py" not in getattr(rep, "nodeid", "") or rep.when != "call":
                if not (outcome == "error" and "test_acceptance.py" in getattr(rep, "nodeid", "")):
                    continue
            props = dict(rep.user_properties)
            if "criterion" not in props:
                continue
            lines.append((props["criterion"], outcome, props.get("title", rep.nodeid), props.get("finding")))
    if not lines:
        return
    terminalreporter.section("acceptance criteria")
    for num, outcome, title, finding in sorted(lines):
        tag = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"[{tag}] criterion {num:>2}: {title}")
        if finding:
            terminalreporter.write_line(f"         finding: {finding}")
