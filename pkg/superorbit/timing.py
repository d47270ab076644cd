import functools
from contextlib import ContextDecorator
from time import perf_counter

from .log import log


class log_execution_time(ContextDecorator):
    """
    Log how long a block took, at debug level.

    The measured time stays on the instance as `elapsed`, so sweeps can put it in their summaries:

    with log_execution_time("build osp(3|4)") as timer:
        ...
    timer.elapsed
    """

    def __init__(self, msg: str):
        self.msg = msg
        self.elapsed: float | None = None

    def __enter__(self):
        self.time = perf_counter()
        return self

    # runs on exceptions too
    def __exit__(self, _type, _value, _traceback):
        self.elapsed = round(perf_counter() - self.time, 4)

        log.debug(
            self.msg,
            execution_time=self.elapsed,
            function_name=self.msg,
        )


def log_time(msg: str | None = None):
    """
    Decorator that debug logs the execution time of a function.

    >>> @log_time()
    >>> def build_gl(m, n):
    >>>    ...
    """

    def decorator(func):
        function_name = func.__name__

        @functools.wraps(func)
        def wrapper(*args, **kwargs):
            with log_execution_time(msg or function_name):
                return func(*args, **kwargs)

        return wrapper

    return decorator
