class Worker:
    """
    General worker class for performing long computations.

    Attributes
    ----------
    _abort : bool
        Flag indicating whether the worker should abort its task.
    progress_callback : callable | None
        Called with the completed percentage of the task.

    Methods
    -------
    do_work() -> object
        Abstract method implemented by subclasses to perform the actual work.
    request_abort() -> None
        Set the abort flag to True, signaling the worker to stop its task.
    """

    def __init__(self, progress_callback=None):
        self._abort = False
        self.progress_callback = progress_callback

    def do_work(self):
        raise NotImplementedError("Subclasses must implement do_work()")

    def request_abort(self):
        """
        Set the abort flag to True, signaling the worker to stop its task.
        """
        self._abort = True

    def _report_progress(self, percent: int):
        if self.progress_callback is not None:
            self.progress_callback(percent)
