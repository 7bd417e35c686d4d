import os

from hypothesis import HealthCheck, settings

settings.register_profile(
    "default",
    max_examples=60,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.register_profile("thorough", max_examples=500, deadline=None)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

# criterion number -> list of (label, passed, detail), filled by test_acceptance
ACCEPTANCE: dict[int, list] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for number in sorted(ACCEPTANCE):
        parts = ACCEPTANCE[number]
        ok = all(p for _, p, _ in parts)
        tr.write_line(f"criterion {number:2d}: {'PASS' if ok else 'FAIL'}")
        for label, passed, detail in parts:
            mark = "ok  " if passed else "FAIL"
            tr.write_line(f"    [{mark}] {label}" + (f" :: {detail}" if detail else ""))
