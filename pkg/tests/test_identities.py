import pytest

from catalan_hankel import READINGS, REGISTRY, UnknownIdentity, check_readings, verify_identity
from catalan_hankel.identities import closed_gf, l2_first_line, l2_second_line
from catalan_hankel import rational_expand, hankel_polys

STABLE_NAMES = [
    "consecutive-diff", "convolution", "prop4-recurrence", "t4-decomposition", "m4-column-gf",
    "shifted-gf-list", "pair-gf-list", "abm-gf", "L2-entry", "transfer-factorization", "sec7-gf",
]


def test_stable_names_registered():
    assert set(STABLE_NAMES) <= set(REGISTRY)


@pytest.mark.parametrize("name", sorted(REGISTRY))
def test_registry_entry_passes(name):
    report = verify_identity(name)
    assert report.passed, report.counterexample
    assert len(report) > 0


@pytest.mark.parametrize("r", [1, 2, 3, 4, 5, 6])
def test_consecutive_diff_single_shift(r):
    report = verify_identity("consecutive-diff", {"r": r})
    assert report.passed and len(report) == (3 if r <= 4 else 2)


@pytest.mark.parametrize("a,b", [(1, 1), (2, 3), (-1, 2)])
def test_numeric_parameters(a, b):
    for name in ("convolution", "prop4-recurrence", "sec7-gf"):
        assert verify_identity(name, {"a": a, "b": b}).passed


def test_abm_numeric_m5():
    report = verify_identity("abm-gf", {"a": 2, "b": 3, "m": 5})
    assert report.passed
    assert any("tail" in c.label for c in report.cases)


def test_shifted_gf_single_k():
    assert len(verify_identity("shifted-gf-list", {"k": 6})) == 2


def test_unknown_identity():
    with pytest.raises(UnknownIdentity):
        verify_identity("nope")


def test_readings_report_statuses():
    report = check_readings()
    assert report.passed
    labels = [c.label for c in report.cases]
    assert len(labels) == len(READINGS)
    assert any(label.startswith("L2-second-line [refuted]") for label in labels)
    assert any(label.endswith("[unresolved]") for label in labels)


def test_l2_lines_disagree():
    assert l2_first_line(1, 0) == 15
    assert l2_second_line(0, 0) != l2_first_line(0, 0)


def test_closed_gf_shift3():
    assert list(rational_expand(closed_gf(3), 5).coeffs[1:]) == list(hankel_polys(3, 4))
