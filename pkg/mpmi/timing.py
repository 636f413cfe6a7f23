"""
Elapsed time measurement utilities.
"""
import time
from datetime import datetime

from mpmi.base import Struct

class Timer(Struct):
    """
    Accumulating wall clock timer, also usable as a context manager::

        with Timer('sweep') as timer:
            ...
        output('done in', timer.total)
    """

    def __init__(self, name='timer'):
        Struct.__init__(self, name=name)
        self.time_function = time.perf_counter
        self.reset()

    def __enter__(self):
        return self.start()

    def __exit__(self, *exc):
        self.stop()
        return False

    def reset(self):
        self.t0 = None
        self.total = self.dt = 0.0

        return self

    def start(self):
        self.t0 = self.time_function()

        return self

    def stop(self):
        if self.t0 is None:
            raise ValueError('timer "%s" was not started!' % self.name)

        self.dt = self.time_function() - self.t0
        self.total += self.dt
        self.t0 = None
        return self.dt

def get_timestamp(fmt='%Y-%m-%d %H:%M:%S', dtime=None):
    if dtime is None:
        dtime = datetime.now()
    return dtime.strftime(fmt)
