"""
Logging utilities for qgenocchi audit runs
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

from __future__ import annotations

import json
import sys
from typing import Any


class AuditLogger:
    """Writes audit progress to stderr and, optionally, a log file"""

    def __init__(self, json_output=False, quiet=False, log_file=None):
        self.json_output = json_output
        self.quiet = quiet
        self.log_file = log_file
        self.log_handle = None

        if self.log_file:
            self.log_handle = open(self.log_file, 'w', encoding='utf-8')

    def __del__(self):
        self.close()

    def close(self):
        if self.log_handle:
            self.log_handle.close()
            self.log_handle = None

    def _log_message(self, msg):
        """Log message to stderr and optionally to file"""
        if not self.quiet:
            print(msg, file=sys.stderr)

        if self.log_handle:
            self.log_handle.write(msg + '\n')
            self.log_handle.flush()

    def log_event(self, event_data: dict[str, Any]):
        """Log one finished audit case"""
        if self.json_output:
            output = json.dumps(event_data, sort_keys=True, default=str)
        else:
            duration_str = self._format_duration(event_data.get('duration_ms', 0.0))
            output = (
                f"QGEN CASE  | {event_data['suite']:<8} | #{event_data['seq']:<5} | "
                f"{event_data['status']:<16} | {event_data['identity']} {event_data['label']} | {duration_str}"
            )
        self._log_message(output)

    def log_alert(self, alert_msg):
        """Log alert message"""
        self._log_message(alert_msg)

    def log_info(self, msg):
        """Log informational message"""
        self._log_message(msg)

    @staticmethod
    def _format_duration(duration_ms):
        """Format duration in human-readable format"""
        if duration_ms < 1:
            return f"{duration_ms:.3f}ms"
        elif duration_ms < 1000:
            return f"{duration_ms:.1f}ms"
        else:
            return f"{duration_ms/1000:.2f}s"
