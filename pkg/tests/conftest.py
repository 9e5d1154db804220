import re


def pytest_runtest_logreport(report):
    """Echo one pass/fail line per acceptance criterion into the run log."""
    if report.when != "call":
        return
    m = re.search(r"test_acceptance\.py::test_criterion_(\d+)", report.nodeid)
    if m is None:
        return
    status = "PASS" if report.passed else "FAIL"
    print(f"\ncriterion {int(m.group(1)):02d}: {status}")
