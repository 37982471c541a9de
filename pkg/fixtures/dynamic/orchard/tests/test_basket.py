from orchard.basket import audit, fill


def test_fill_reports_each_crate():
    assert fill([12, 9]) == 21


def test_overflow_is_reported():
    assert fill([30, 25]) == 40


def test_audit_is_silent():
    assert audit(31) is True
