from .grid_worker import GridWorker
from .worker import Worker

__all__ = ["GridWorker", "Worker"]  # noqa: F401
