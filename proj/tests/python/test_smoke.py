import pytest

import actionwin


def test_closed_form_barcodes():
    assert actionwin.barcode(actionwin.fixture("one_generator")) == [
        {"start": "2", "end": "inf", "degree": 1}
    ]
    assert actionwin.barcode(actionwin.fixture("acyclic_pair"), engine="both") == [
        {"start": "1", "end": "2", "degree": 0}
    ]


def test_fixture_catalog():
    names = [name for name, _, _ in actionwin.fixtures()]
    assert "two_copy_template" in names
    assert actionwin.fixture("four_generator", "Q")["field"] == "Q"


def test_simulate_handle_slide():
    result = actionwin.simulate(actionwin.fixture("handle_slide_timeline"))
    assert result["all_passed"]
    assert any(c["rule"] == "unaffected" and c["passed"] for c in result["checks"])
    assert result["vineyard"].startswith("t,bar_id,start,end")


def test_linearize_mixed_pair():
    out = actionwin.linearize(actionwin.fixture("mixed_pair"), a="0", b="3")
    assert out["barcode"] == [{"start": "1", "end": "2", "degree": 0}]
    with pytest.raises(actionwin.Error, match="WindowTooWide"):
        actionwin.linearize(actionwin.fixture("mixed_pair"), a="0", b="3", l="2")


def test_bound_examples():
    assert actionwin.theorem_bound(["3", "inf", "3"], [1, 0, 1], "inf", "29/10")["count"] == 2
    at = actionwin.theorem_bound(["3", "inf", "3"], [1, 0, 1], "inf", "3")
    assert at["summary"] == "count: 0, binding: none"
    edge = actionwin.theorem_bound(["3", "3"], [1, 1], "inf", "3")
    assert edge["summary"] == "count: 0 (strict inequality required)"
    unknot = actionwin.theorem_bound(["inf", "inf"], [1, 1], "1", "1/2")
    assert unknot["summary"] == "count: 2, binding: l"
    assert actionwin.schedule_oscillation("5", "2/5") == "2"


def test_errors_are_reported():
    bad = actionwin.fixture("acyclic_pair")
    bad["generators"][1]["action"] = "1"
    with pytest.raises(actionwin.Error, match="ActionIncrease"):
        actionwin.validate_complex(bad)
    with pytest.raises(actionwin.Error, match="ParseError"):
        actionwin.barcode("{not json")
