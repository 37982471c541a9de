from relay.queuebox import enqueue, flush


def test_enqueue_logs_slot():
    assert enqueue([], "alpha") == ["alpha"]


def test_full_window_drops():
    backlog = ["m1", "m2", "m3", "m4", "m5", "m6", "m7", "m8"]
    assert enqueue(backlog, "omega") == backlog


def test_flush_reports_progress():
    assert flush(["alpha", "beta"]) == 2
