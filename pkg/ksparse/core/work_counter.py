"""Thread-local counter of scalar multiply-adds performed by the sparse kernels.

Every kernel that multiplies stored entries calls ``work_counter.add(n)``. Tests and
reports read the counter instead of wall-clock time.
"""
import threading
from contextlib import contextmanager


class WorkCounter(threading.local):
    def __init__(self):
        self._value = 0

    def add(self, n):
        self._value += int(n)

    @property
    def value(self):
        return self._value

    def reset(self):
        self._value = 0

    @contextmanager
    def measure(self):
        """Count the multiply-adds spent inside a with-block.

        Example:
            >>> with work_counter.measure() as spent:
            ...     sparse_dense_dot(v, x)
            >>> spent.value
        """
        measurement = Measurement()
        start = self._value
        try:
            yield measurement
        finally:
            measurement.value = self._value - start

    def __repr__(self):
        return "<WorkCounter> {0} multiply-adds".format(self._value)


class Measurement:
    def __init__(self):
        self.value = 0


work_counter = WorkCounter()
