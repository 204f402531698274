"""Per-query operation counters.

A single mutable ``QueryStats`` can be threaded through any query; every
move/payload evaluation and dictionary operation increments it.  Queries
run unchanged (and a hair faster) when no stats object is supplied.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass
class QueryStats:
    move_queries: int = 0
    payload_queries: int = 0
    max_scan_steps: int = 0
    dict_inserts: int = 0
    dict_deletes: int = 0
    dict_lookups: int = 0

    @property
    def dict_ops(self) -> int:
        return self.dict_inserts + self.dict_deletes + self.dict_lookups

    @property
    def total_work(self) -> int:
        """Move queries plus dictionary operations (the work measure used
        by the linearity checks)."""
        return self.move_queries + self.payload_queries + self.dict_ops

    def record_scan(self, steps: int) -> None:
        self.move_queries += 1
        if steps > self.max_scan_steps:
            self.max_scan_steps = steps
