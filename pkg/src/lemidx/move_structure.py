"""Disjoint interval sequences: validation, balancing, and constant-time
move queries with optional per-interval linear payloads.

A sequence of pairs (p_i, q_i) encodes a bijection on [1, n] that is
linear on each input interval [p_i, p_{i+1}-1].  Balancing splits input
intervals until no output interval contains more than ``d`` input starts,
which caps the forward scan of a move query at d+1 visited intervals.

Payloads attach one integer to each interval start and extend linearly
with slope -1 inside the interval (the only slope the index needs: both
LCP sample families decrease by one per position).
"""

from __future__ import annotations

import bisect
from dataclasses import dataclass, field
from typing import NamedTuple, Optional, Sequence

import numpy as np

from . import kernels
from .errors import IntervalSequenceError, LemIndexError
from .instrument import QueryStats


@dataclass
class IntervalSequence:
    """k pairs (p, q) over domain size n, sorted by p; p_{k+1} = n+1."""

    pairs: list[tuple[int, int]]
    n: int

    @property
    def k(self) -> int:
        return len(self.pairs)

    def length_of(self, x: int) -> int:
        """Length of input interval x (1-based)."""
        p_next = self.pairs[x][0] if x < self.k else self.n + 1
        return p_next - self.pairs[x - 1][0]

    def apply(self, i: int) -> int:
        """Evaluate the bijection at position i by direct search (slow
        path, used by tests and validation only)."""
        ps = [p for p, _ in self.pairs]
        x = bisect.bisect_right(ps, i) - 1
        p, q = self.pairs[x]
        return q + (i - p)


class MoveResult(NamedTuple):
    pos: int
    interval: int


def disjoint_violation(seq: IntervalSequence) -> Optional[str]:
    """First violated disjointness condition, or None when valid.

    Condition (i): input starts begin at 1, strictly increase, stay <= n.
    Conditions (ii)/(iii): the output intervals, sorted by start, tile
    [1, n] exactly.
    """
    k = seq.k
    n = seq.n
    if k == 0:
        return "condition (i): sequence has no pairs"
    if seq.pairs[0][0] != 1:
        return "condition (i): first input start is not 1"
    for x in range(1, k):
        if seq.pairs[x][0] <= seq.pairs[x - 1][0]:
            return f"condition (i): input starts not strictly increasing at pair {x + 1}"
    if seq.pairs[-1][0] > n:
        return f"condition (i): input start exceeds n at pair {k}"
    lengths = [seq.length_of(x) for x in range(1, k + 1)]
    outs = sorted((q, lengths[x]) for x, (_, q) in enumerate(seq.pairs))
    expect = 1
    for idx, (q, ln) in enumerate(outs):
        if q != expect:
            if q < expect:
                return f"condition (ii)/(iii): output intervals overlap at output start {q} (sorted index {idx + 1})"
            return f"condition (ii)/(iii): gap before output start {q} (sorted index {idx + 1})"
        expect = q + ln
    if expect != n + 1:
        return "condition (ii)/(iii): output intervals do not cover [1, n]"
    return None


def validate_disjoint(seq: IntervalSequence) -> None:
    report = disjoint_violation(seq)
    if report is not None:
        raise IntervalSequenceError(report)


def balance(seq: IntervalSequence, d: int) -> IntervalSequence:
    """Split intervals until every output interval contains at most d
    input starts; the represented bijection is unchanged.

    Fixed-point loop: while some output interval contains more than d
    input starts, split the pair owning that output interval at the
    offset of the (d+1)-th contained start.  Splitting (p, q) at offset t
    yields (p, q), (p+t, q+t).
    """
    if d < 2:
        raise ValueError("balancing parameter d must be >= 2")
    validate_disjoint(seq)
    n = seq.n
    ps = [p for p, _ in seq.pairs]
    q_of = {p: q for p, q in seq.pairs}
    out_q = sorted(q for _, q in seq.pairs)
    out_p = [p for _, p in sorted((q, p) for p, q in seq.pairs)]
    pending = list(ps)
    ops_left = 64 * len(ps) + 256
    while pending:
        ops_left -= 1
        if ops_left < 0:
            raise LemIndexError("balancing fixed point not reached within the operation budget")
        pv = pending.pop()
        x = bisect.bisect_left(ps, pv)
        qv = q_of[pv]
        p_next = ps[x + 1] if x + 1 < len(ps) else n + 1
        lo = bisect.bisect_left(ps, qv)
        hi = bisect.bisect_right(ps, qv + (p_next - pv) - 1)
        if hi - lo <= d:
            continue
        t = ps[lo + d] - qv  # offset of the (d+1)-th contained start
        new_p, new_q = pv + t, qv + t
        bisect.insort(ps, new_p)
        q_of[new_p] = new_q
        j = bisect.bisect_left(out_q, new_q)
        out_q.insert(j, new_q)
        out_p.insert(j, new_p)
        owner = out_p[bisect.bisect_right(out_q, new_p) - 1]
        pending += (pv, new_p, owner)
    return IntervalSequence([(p, q_of[p]) for p in ps], n)


@dataclass
class MoveStructure:
    """A balanced interval sequence with destination pointers, answering
    move queries in at most d+1 visited intervals, plus an optional
    linear payload sampled at interval starts."""

    n: int
    d: int
    k: int
    pre_k: int
    p: np.ndarray  # int64, slots 1..k, p[k+1] = n+1 sentinel
    q: np.ndarray  # int64, slots 1..k
    dest: np.ndarray  # int64, slots 1..k
    payload: Optional[np.ndarray]  # int64, slots 1..k
    _pl: list = field(repr=False, init=False, default=None)
    _ql: list = field(repr=False, init=False, default=None)
    _destl: list = field(repr=False, init=False, default=None)

    def __post_init__(self):
        self._pl = self.p.tolist()  # list mirror for bisect lookups
        if kernels.BACKEND == "compiled":
            self._kp, self._kq, self._kd = self.p, self.q, self.dest
        else:
            self._ql = self.q.tolist()
            self._destl = self.dest.tolist()
            self._kp, self._kq, self._kd = self._pl, self._ql, self._destl

    # -- queries ---------------------------------------------------------

    def move_query(self, i: int, x: int, stats: Optional[QueryStats] = None) -> MoveResult:
        assert 1 <= x <= self.k and self.p[x] <= i < self.p[x + 1], "move query outside interval"
        pos, interval, steps = kernels.move_scan(self._kp, self._kq, self._kd, i, x)
        assert steps <= self.d, "move scan exceeded the balancing bound"
        if stats is not None:
            stats.record_scan(steps)
        return MoveResult(int(pos), int(interval))

    def payload_query(self, i: int, x: int, stats: Optional[QueryStats] = None) -> int:
        if self.payload is None:
            raise LemIndexError("move structure carries no payload")
        assert 1 <= x <= self.k and self.p[x] <= i < self.p[x + 1], "payload query outside interval"
        if stats is not None:
            stats.payload_queries += 1
        return int(self.payload[x]) - (i - int(self.p[x]))

    def interval_of(self, i: int) -> int:
        """Index of the interval containing position i (binary search;
        setup paths only, not the per-step query paths)."""
        if not 1 <= i <= self.n:
            raise LemIndexError(f"position {i} outside [1, {self.n}]")
        return bisect.bisect_right(self._pl, i, 1, self.k + 1) - 1

    def walk(self, pos: int, x: int, count: int, out: np.ndarray,
             stats: Optional[QueryStats] = None) -> tuple[int, int]:
        """Apply the bijection ``count`` times from (pos, x), storing each
        successive position into ``out``; returns the final (pos, x)."""
        assert count <= len(out)
        pos2, x2, max_steps = kernels.walk_moves(self._kp, self._kq, self._kd, pos, x, count, out)
        if stats is not None:
            stats.move_queries += count
            if max_steps > stats.max_scan_steps:
                stats.max_scan_steps = max_steps
        return int(pos2), int(x2)

    # -- bookkeeping -----------------------------------------------------

    def start(self, x: int) -> int:
        return int(self.p[x])

    def stored_integers(self) -> int:
        total = 3 * self.k  # p, q, dest
        if self.payload is not None:
            total += self.k
        return total

    def to_sequence(self) -> IntervalSequence:
        return IntervalSequence([(int(self.p[x]), int(self.q[x])) for x in range(1, self.k + 1)], self.n)

    def __eq__(self, other) -> bool:
        if not isinstance(other, MoveStructure):
            return NotImplemented
        if (self.n, self.d, self.k, self.pre_k) != (other.n, other.d, other.k, other.pre_k):
            return False
        if (self.payload is None) != (other.payload is None):
            return False
        same = (np.array_equal(self.p, other.p) and np.array_equal(self.q, other.q)
                and np.array_equal(self.dest, other.dest))
        if same and self.payload is not None:
            same = np.array_equal(self.payload, other.payload)
        return same


def _padded(values: Sequence[int], extra: int = 0) -> np.ndarray:
    arr = np.zeros(len(values) + 1 + extra, dtype=np.int64)
    arr[1 : len(values) + 1] = values
    return arr


def build_move_structure(seq: IntervalSequence, d: int = 2,
                         payload: Optional[Sequence[int]] = None) -> MoveStructure:
    """Balance ``seq`` with parameter ``d``, compute destination pointers,
    and resample the payload (slope -1) at every post-balance start.

    ``payload`` must align with the pre-balance interval starts.
    """
    if payload is not None and len(payload) != seq.k:
        raise LemIndexError(
            f"payload length {len(payload)} does not match interval count {seq.k}")
    pre_pairs = list(seq.pairs)
    bal = balance(seq, d)
    k = bal.k
    n = bal.n
    p = _padded([pr[0] for pr in bal.pairs], extra=1)
    p[k + 1] = n + 1
    q = _padded([pr[1] for pr in bal.pairs])
    starts = [pr[0] for pr in bal.pairs]
    dest = _padded([bisect.bisect_right(starts, int(q[x])) for x in range(1, k + 1)])
    pay = None
    if payload is not None:
        pre_starts = [pr[0] for pr in pre_pairs]
        pay = np.zeros(k + 1, dtype=np.int64)
        for x in range(1, k + 1):
            j = bisect.bisect_right(pre_starts, starts[x - 1]) - 1
            pay[x] = payload[j] - (starts[x - 1] - pre_starts[j])
    return MoveStructure(n=n, d=d, k=k, pre_k=len(pre_pairs), p=p, q=q, dest=dest, payload=pay)
