"""Shared small helpers."""

from __future__ import annotations

import os


def worker_count() -> int:
    """Worker bound from SUPERJACOBI_THREADS (>= 1; default 1)."""
    raw = os.environ.get("SUPERJACOBI_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1
