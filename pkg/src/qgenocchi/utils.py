"""Process helpers for audit runs."""

import os

import psutil


def get_memory_usage():
    """Resident set size of this process in bytes, 0 if unavailable."""
    try:
        return psutil.Process(os.getpid()).memory_info().rss
    except psutil.Error:
        return 0


def resolve_workers(workers):
    """0 means one worker per physical core."""
    if workers is None or workers < 0:
        raise ValueError(f"workers must be >= 0, got {workers}")
    if workers == 0:
        return psutil.cpu_count(logical=False) or os.cpu_count() or 1
    return workers
