import re

from hypothesis import settings

settings.register_profile("default", deadline=None, max_examples=150)
settings.load_profile("default")

_ACCEPTANCE: dict[str, list[tuple[str, str]]] = {}
_ID = re.compile(r"test_a(\d+)_(\w+)")


def pytest_runtest_logreport(report):
    if "test_acceptance.py" not in report.nodeid:
        return
    m = _ID.search(report.nodeid)
    if not m:
        return
    key = f"A{int(m.group(1))}"
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        _ACCEPTANCE.setdefault(key, []).append((report.outcome, m.group(2).replace("_", " ")))


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(_ACCEPTANCE, key=lambda k: int(k[1:])):
        parts = _ACCEPTANCE[key]
        verdict = "PASS" if all(o == "passed" for o, _ in parts) else "FAIL"
        labels = "; ".join(label if o == "passed" else f"{label} [failed]" for o, label in parts)
        terminalreporter.write_line(f"{key:>4} {verdict}  {labels}")
