from concurrent.futures import ProcessPoolExecutor
import logging

from .worker import Worker

logger = logging.getLogger(__name__)


class GridWorker(Worker):
    """
    Worker evaluating a task at every point of a grid of exponents.

    With more than one job, the points are mapped over a process pool. The
    results always come back in the order of `points`.

    Attributes
    ----------
    task : callable
        Picklable function of one grid point.
    points : list[float]
        Points at which to run the task.
    jobs : int
        Number of processes; 1 runs the task in the calling process.
    """

    def __init__(self, task, points, jobs: int = 1, progress_callback=None):
        super().__init__(progress_callback)
        self.task = task
        self.points = list(points)
        self.jobs = max(int(jobs), 1)

    def do_work(self):
        """
        Run the task at the grid points.

        Returns
        -------
        list | None
            Task results in grid order, None if the work was aborted
        """
        total = len(self.points)
        emit_interval = max(total // 100, 1)
        self._report_progress(0)

        if self.jobs == 1 or total < 2:
            results_iter = map(self.task, self.points)
            pool = None
        else:
            pool = ProcessPoolExecutor(max_workers=self.jobs)
            results_iter = pool.map(self.task, self.points)

        results = []
        try:
            for ii, result in enumerate(results_iter):
                if self._abort:
                    logger.info("Grid evaluation aborted after %d points", ii)
                    return None
                results.append(result)
                if ii % emit_interval == 0 or ii == total - 1:
                    self._report_progress(int((ii + 1) / total * 100))
        finally:
            if pool is not None:
                pool.shutdown(cancel_futures=True)
        return results
