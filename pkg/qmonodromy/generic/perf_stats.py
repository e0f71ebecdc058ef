#!/usr/bin/env python3
# Copyright (c) Facebook, Inc. and its affiliates.
#
# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

from collections import defaultdict
from time import perf_counter
from typing import Mapping, Optional


class PerfTimer:
    """
    Wall-clock timer, usable as a context manager or via start() / stop():

      with PerfTimer("braid", task.perf_stats) as timer:
          outcome = fn()
      report.elapsed_ms = timer.elapsed_ms

    Intervals accumulate in ``elapsed``. A block that raises is not recorded
    into perf_stats; with perf_stats None nothing is recorded at all.
    """

    def __init__(self, timer_name: str, perf_stats: Optional["PerfStats"] = None):
        self.name = timer_name
        self.elapsed = 0.0
        self._last_interval = 0.0
        self._perf_stats = perf_stats
        self._start_time: Optional[float] = None

    def __enter__(self):
        self.start()
        return self

    def __exit__(self, exc_type, exception, traceback):
        self.stop()
        if exc_type is None:
            self.record()
        return False

    @property
    def elapsed_ms(self) -> int:
        return int(round(self.elapsed * 1000.0))

    def start(self):
        if self._start_time is None:
            self._start_time = perf_counter()

    def stop(self):
        if self._start_time is None:
            return
        self._last_interval = perf_counter() - self._start_time
        self.elapsed += self._last_interval
        self._start_time = None

    def record(self):
        if self._perf_stats is not None:
            assert self._start_time is None, "stop the timer before recording it"
            self._perf_stats.update_with_timer(self)


class PerfMetric:
    """
    Running sum and count of a single timer.
    """

    def __init__(self):
        self.sum_values: float = 0.0
        self.num_updates: int = 0

    def update(self, value: float):
        self.sum_values += value
        self.num_updates += 1

    def get_avg(self):
        if self.num_updates == 0:
            return 0.0
        return self.sum_values / self.num_updates


class PerfStats:
    """
    Accumulate stats (from timers) over many checks
    """

    def __init__(self):
        self._host_stats: Mapping[str, PerfMetric] = defaultdict(PerfMetric)

    def update_with_timer(self, timer: PerfTimer):
        self._host_stats[timer.name].update(timer._last_interval)

    def report_str(self):
        """
        Column-aligned report: average milliseconds and number of calls.
        """
        if not self._host_stats:
            return ""
        name_width = max(len(k) for k in self._host_stats.keys())

        header = ("{:>" + str(name_width + 4) + "s}  {:>9s}  {:>5s}").format(
            "Timer", "Avg", "Calls"
        )
        row_fmt = "{:>" + str(name_width + 4) + "s}: {:>9.2f} ms {:>5d}"

        rows = [header]
        for name, metric in self._host_stats.items():
            rows.append(
                row_fmt.format(name, metric.get_avg() * 1000.0, metric.num_updates)
            )
        return "\n".join(rows)
