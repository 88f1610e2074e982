import time

SUITE_LIMIT = 30.0
_start = time.perf_counter()


def pytest_terminal_summary(terminalreporter):
    elapsed = time.perf_counter() - _start
    verdict = "PASS" if elapsed <= SUITE_LIMIT else "FAIL"
    terminalreporter.write_line(
        "[{}] whole test suite: {:.1f}s (limit {:.0f}s)".format(verdict, elapsed, SUITE_LIMIT)
    )
