"""The q-series identity suite."""

import json

from qhaar.scalars import ONE, qq
from qhaar.verify import (IdentityReport, check_S_sum, check_paper_computations,
                          check_prop_5_3, _double_sum, _s_sum)


def test_s_sum_values():
    assert _s_sum(0, 3) == ONE
    # c1 = 0 row collapses to a q-bracket
    assert _s_sum(2, 0) == (ONE - qq(6)) / (ONE - qq(2))


def test_s_sum_grid():
    report = check_S_sum(8, 8)
    assert report.ok()
    assert len(report.parameter_grid) == 81


def test_double_sum_values():
    assert _double_sum(0, 0) == ONE
    assert _double_sum(1, 0) == (ONE - qq(4)) / (qq(2) * (ONE - qq(2)))


def test_double_sum_grid():
    report = check_prop_5_3(6, 6)
    assert report.ok()
    assert len(report.parameter_grid) == 49


def test_report_json():
    report = check_S_sum(1, 1)
    data = json.loads(report.to_json())
    assert data["identity_id"] == "S-sum"
    assert data["failures"] == []
    assert len(data["parameter_grid"]) == 4


def test_report_deterministic():
    a = check_prop_5_3(3, 3)
    b = check_prop_5_3(3, 3)
    assert a.parameter_grid == b.parameter_grid
    assert a.failures == b.failures


def test_small_display_regressions():
    names = {"chain-anchor", "two-column-square", "pochhammer-product",
             "reordered-product", "no-c-square", "gc-square", "gbc-square",
             "g-offdiagonal"}
    reports = check_paper_computations(only=names)
    assert {r.identity_id for r in reports} == names
    for r in reports:
        assert r.ok(), r.identity_id


def test_immutable_report():
    report = check_S_sum(0, 0)
    assert isinstance(report, IdentityReport)
    try:
        report.failures = ["x"]
    except AttributeError:
        pass
    else:
        raise AssertionError("report should be immutable")
