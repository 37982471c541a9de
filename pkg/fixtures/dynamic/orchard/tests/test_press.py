from orchard.press import drain, idle_check, run_cycle


def test_press_cycle_logs_start_and_finish():
    assert run_cycle(50, 60) == 20


def test_drain_reports_volume():
    assert drain(30) == 30


def test_idle_press_stays_quiet():
    assert idle_check(10) is True
