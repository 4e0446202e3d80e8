import math
import pytest

from sinclp.logic.workers import GridWorker, Worker


class TestWorker:
    def test_base_is_abstract(self):
        with pytest.raises(NotImplementedError):
            Worker().do_work()

    def test_abort_flag(self):
        worker = Worker()
        worker.request_abort()
        assert worker._abort


class TestGridWorker:
    """Evaluation of a task over a grid."""

    def test_serial_results_in_order(self):
        worker = GridWorker(math.sqrt, [4.0, 1.0, 9.0])
        assert worker.do_work() == [2.0, 1.0, 3.0]

    def test_process_pool_results_in_order(self):
        points = [float(k) for k in range(20, 0, -1)]
        worker = GridWorker(math.sqrt, points, jobs=2)
        assert worker.do_work() == [math.sqrt(p) for p in points]

    def test_progress_reaches_hundred(self):
        seen = []
        worker = GridWorker(
            math.sqrt, range(1, 251), progress_callback=seen.append
        )
        worker.do_work()
        assert seen[0] == 0
        assert seen[-1] == 100
        assert seen == sorted(seen)

    def test_abort_before_start(self):
        worker = GridWorker(math.sqrt, [1.0, 2.0])
        worker.request_abort()
        assert worker.do_work() is None

    def test_empty_grid(self):
        assert GridWorker(math.sqrt, []).do_work() == []

    def test_jobs_at_least_one(self):
        assert GridWorker(math.sqrt, [1.0], jobs=0).jobs == 1
