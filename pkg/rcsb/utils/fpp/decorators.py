##
# File: decorators.py
# Date: 10-Oct-2026 Jdw
#
# Wall-clock guards for long Monte Carlo and quadrature runs.
##

import signal
import time
from functools import wraps


class TimeoutException(Exception):
    def __init__(self, value):
        super(TimeoutException, self).__init__(value)
        self.value = value

    def __str__(self):
        return str(self.value)

    def __repr__(self):
        return repr(self.value)


def timeout(seconds, message="Function call timed out"):
    """Raise TimeoutException when the wrapped call runs longer than seconds (main thread, SIGALRM platforms).

    A non-positive limit disables the guard.
    """

    def wrapper(function):
        def _handleTimeout(signum, frame):
            raise TimeoutException(message)

        @wraps(function)
        def wrapped(*args, **kwargs):
            if not seconds or seconds <= 0 or not hasattr(signal, "SIGALRM"):
                return function(*args, **kwargs)
            previous = signal.signal(signal.SIGALRM, _handleTimeout)
            signal.alarm(int(seconds))
            try:
                result = function(*args, **kwargs)
            finally:
                signal.alarm(0)
                signal.signal(signal.SIGALRM, previous)
            return result

        return wrapped

    return wrapper


def timed(logger=None):
    """Log the wall-clock time of the wrapped call at info level."""

    def wrapper(function):
        @wraps(function)
        def wrapped(*args, **kwargs):
            startTime = time.time()
            try:
                return function(*args, **kwargs)
            finally:
                if logger:
                    logger.info("Completed %s (%.4f seconds)", function.__name__, time.time() - startTime)

        return wrapped

    return wrapper
