"""
Statistics over finished audit cases
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
"""

import math
from collections import defaultdict


class AuditStatistics:
    """Per-suite counts and timings of audit cases"""

    def __init__(self, slow_case_ms=1000.0):
        self.slow_case_ms = slow_case_ms
        self.stats = {
            'total_cases': 0,
            'total_duration_ms': 0.0,
            'max_duration_ms': 0.0,
            'cases_by_status': defaultdict(int),
            'cases_by_suite': defaultdict(lambda: defaultdict(int)),
        }
        self.duration_history = defaultdict(list)
        self.wall_time_s = 0.0

    def record_case(self, suite, status, duration_ms):
        """Record a finished case"""
        self.stats['total_cases'] += 1
        self.stats['total_duration_ms'] += duration_ms
        self.stats['max_duration_ms'] = max(self.stats['max_duration_ms'], duration_ms)
        self.stats['cases_by_status'][status] += 1
        self.stats['cases_by_suite'][suite][status] += 1
        self.duration_history[suite].append(duration_ms)

    def get_summary_stats(self):
        """Get summary statistics"""
        total = self.stats['total_cases']
        return {
            'total_cases': total,
            'total_case_time': self.stats['total_duration_ms'],
            'average_duration': self.stats['total_duration_ms'] / total if total else 0.0,
            'max_duration': self.stats['max_duration_ms'],
            'cases_by_status': dict(self.stats['cases_by_status']),
            'cases_by_suite': {suite: dict(counts) for suite, counts in self.stats['cases_by_suite'].items()},
        }

    def generate_timing_recommendations(self, workers):
        """Suggestions based on where the time went"""
        recs = []
        for suite, samples in sorted(self.duration_history.items()):
            if not samples:
                continue
            p95 = self._percentile(samples, 95)
            if p95 > self.slow_case_ms:
                recs.append(f"Suite '{suite}' p95 case time is {p95 / 1000:.1f}s. "
                            "Lower --n-max for a quicker pass.")
        busy = self.stats['total_duration_ms'] / 1000.0
        if workers == 1 and busy > 30:
            recs.append(f"Cases took {busy:.0f}s of CPU time on one worker. Try --workers 0 to use every physical core.")
        return recs

    @staticmethod
    def _percentile(samples, percentile):
        """Calculate percentile from samples"""
        if not samples:
            return 0.0
        data = sorted(samples)
        if len(data) == 1:
            return data[0]
        k = (len(data) - 1) * (percentile / 100.0)
        lower = math.floor(k)
        upper = math.ceil(k)
        if lower == upper:
            return data[int(k)]
        return data[lower] + (data[upper] - data[lower]) * (k - lower)
