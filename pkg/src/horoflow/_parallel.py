"""Worker-count handling for the optional threaded bulk paths."""

import os

ENV_VAR = "HOROFLOW_THREADS"


def worker_count() -> int:
    """Number of worker threads, capped by the HOROFLOW_THREADS env var (default 1)."""
    raw = os.environ.get(ENV_VAR)
    if raw is None:
        return 1
    try:
        return max(1, int(raw))
    except ValueError:
        return 1
