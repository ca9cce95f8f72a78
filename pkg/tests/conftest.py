from __future__ import annotations

from hypothesis import HealthCheck, settings

# derandomized so every run of the suite sees the same examples
settings.register_profile(
    "repo", derandomize=True, deadline=None, max_examples=60,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("repo")


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for c in sorted(RESULTS):
            terminalreporter.write_line(RESULTS[c])
