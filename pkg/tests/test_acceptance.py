"""Acceptance criteria 1-7, one test each; every test prints a PASS/FAIL line."""

import pytest

from motivic_chi import selftest

from conftest import ACCEPTANCE_LINES


@pytest.mark.parametrize(
    "check",
    selftest.ACCEPTANCE,
    ids=[
        "1-main-theorem",
        "2-positive-characteristic",
        "3-torus-values",
        "4-corollary-units",
        "5-rule-coherence",
        "6-oracle-equivalence",
        "7-cross-instance",
    ],
)
def test_criterion(check):
    result = check()
    line = f"{result.line()}  [{result.seconds:.2f}s]"
    ACCEPTANCE_LINES.append(line)
    print("\n" + line)
    assert result.passed, result.detail


def test_criterion_5_sample_sizes():
    # the suite must cover at least the stated number of generated cases
    result = selftest.coherence()
    name = result.name
    assert "closed/open x200" in name and "MV x100" in name and "products x200" in name
