import pytest

from contyoung import verify


@pytest.mark.parametrize("name", sorted(verify.SUITES))
def test_suite_passes(name):
    report = verify.run_suite(name, 42)
    failed = [d for d in report["details"] if not d["ok"]]
    assert report["failed"] == 0, failed
    assert report["checks"] == report["passed"] == len(report["details"])


def test_reports_are_deterministic():
    assert verify.run_suite("poset", 7) == verify.run_suite("poset", 7)
    assert verify.run_suite("volz", 7) == verify.run_suite("volz", 7)
