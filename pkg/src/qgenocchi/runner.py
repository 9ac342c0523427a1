"""
Audit runner: fans cases out to a worker pool and reports at the end
Copyright (C) 2026  qgenocchi contributors

This library is free software; you can redistribute it and/or
modify it under the terms of the GNU Lesser General Public
License as published by the Free Software Foundation; either
version 2.1 of the License, or (at your option) any later version.

This library is distributed in the hope that it will be useful,
but WITHOUT ANY WARRANTY; without even the implied warranty of
MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the GNU
Lesser General Public License for more details.

You should have received a copy of the GNU Lesser General Public
License along with this library; if not, see <https://www.gnu.org/licenses/>.

Cases are pure functions of their parameters, so they may run in any order
on any worker; results are sorted by case key before anything is printed.
"""

import time
from concurrent.futures import ProcessPoolExecutor

from .audit import SUITES, AuditResult, build_tasks, run_task
from .logging import AuditLogger
from .processing import generate_final_output, process_results
from .qcore import Orientation
from .stats import AuditStatistics
from .utils import resolve_workers


class AuditRunner:
    """Runs one or more audit suites.

    Configuration is passed as keywords: ``suites``, ``n_max``,
    ``orientation``, ``overrides``, ``workers``, ``json_output``,
    ``stats_only``, ``quiet``, ``log_file``. ``overrides`` maps grid
    entries to command-line values. ``workers=0`` means one per physical core.
    """

    __slots__ = (
        'start_time', 'start_perf', 'suites', 'n_max', 'orientation', 'overrides', 'workers',
        'json_output', 'stats_only', 'quiet', 'logger', 'stats', 'result', '_config',
    )

    def __init__(self, **config):
        self.start_perf = time.perf_counter()
        self.start_time = time.time()
        self._config = config

        suites = config.get('suites') or ['all']
        if 'all' in suites:
            suites = list(SUITES)
        unknown = [s for s in suites if s not in SUITES]
        if unknown:
            raise ValueError(f"Unknown suite(s): {', '.join(unknown)}")
        self.suites = suites
        self.n_max = config.get('n_max')
        orientation = config.get('orientation')
        self.orientation = Orientation(orientation) if orientation else None
        self.overrides = {k: v for k, v in (config.get('overrides') or {}).items() if v is not None}
        self.workers = resolve_workers(config.get('workers', 1))
        self.json_output = config.get('json_output', False)
        self.stats_only = config.get('stats_only', False)
        self.quiet = config.get('quiet', False)

        # Built on first use
        self.logger = None
        self.stats = None
        self.result = None

    def _initialize_components(self):
        """Lazily initialize logger and statistics."""
        if self.logger is not None:
            return

        self.logger = AuditLogger(
            json_output=self.json_output,
            quiet=self.quiet,
            log_file=self._config.get('log_file'),
        )
        self.stats = AuditStatistics(slow_case_ms=self._config.get('slow_case_ms', 1000.0))

    def tasks(self):
        tasks = []
        for suite in self.suites:
            tasks.extend(build_tasks(suite, n_max=self.n_max, orientation=self.orientation,
                                     overrides=self.overrides))
        return tasks

    def run(self):
        """Run every case, then log, summarise and return the AuditResult."""
        self._initialize_components()
        tasks = self.tasks()
        self.logger.log_info(f"QGEN Running {len(tasks)} cases from {', '.join(self.suites)} "
                             f"on {self.workers} worker(s)")

        if self.workers == 1 or len(tasks) < 2:
            cases = [run_task(task) for task in tasks]
        else:
            with ProcessPoolExecutor(max_workers=self.workers) as pool:
                cases = list(pool.map(run_task, tasks, chunksize=max(1, len(tasks) // (8 * self.workers))))

        cases.sort(key=lambda case: case.key)
        self.result = AuditResult(self.suites, cases)
        self.stats.wall_time_s = time.perf_counter() - self.start_perf

        process_results(self)
        generate_final_output(self)

        self.logger.close()
        return self.result
