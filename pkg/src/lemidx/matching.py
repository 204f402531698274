"""Matching statistics, LCP-aware sa-interval tracking, and enumeration of
all locally maximal exact matches of length >= a threshold ("long LEMs").

A LEM is a match between pattern and text that cannot be extended
simultaneously on either side: extending left (right) fails in the
pattern, in the text, or mismatches.  The query walks the pattern right
to left maintaining the tracked interval of the current length-L window
together with a dictionary keyed by match diagonal (text start minus
pattern start); a suffix leaves the dictionary exactly when its match is
emitted, and the stored value is the pattern position where the maximal
co-extension ends.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, NamedTuple, Optional

import numpy as np

from .errors import InternalConsistencyError, PatternError
from .instrument import QueryStats
from .optbwtrl import Optbwtrl
from .textcore import SENTINEL, SuffixStructures


class Lem(NamedTuple):
    """A match triple: 1-based pattern start, 1-based text start, length."""

    p_start: int
    t_start: int
    len: int


Sink = Callable[[Lem], None]


@dataclass
class AugmentedMs:
    """Per-position matching statistics of a pattern against the text,
    augmented with containing-interval indices.

    For pattern position ``f`` in ``1..m``: ``len_[f]`` is the length of
    the longest prefix of ``P[f..m]`` occurring in the text, ``suff[f]``
    one text position where it occurs (smallest SA row on ties),
    ``row[f]`` that SA row, and ``i_lf/w_phi/x_phi_inv`` the interval
    indices of row/suff in the LF, phi, and phi-inverse structures.
    Entries with ``len_ == 0`` are undefined (other fields 0).
    """

    m: int
    len_: np.ndarray
    suff: np.ndarray
    row: np.ndarray
    i_lf: np.ndarray
    w_phi: np.ndarray
    x_phi_inv: np.ndarray

    def entry(self, f: int) -> tuple[int, int, int]:
        return int(self.len_[f]), int(self.suff[f]), int(self.row[f])


@dataclass
class SaLcpInterval:
    """Tracks an sa-interval's top (b), middle (d), and bottom (e) rows
    with their SA values and containing intervals: i/j/k in the LF
    structure for b/d/e; v/w in the phi structure for sa_b/sa_d; x/y in
    the phi-inverse structure for sa_d/sa_e."""

    b: int
    d: int
    e: int
    sa_b: int
    sa_d: int
    sa_e: int
    i: int
    j: int
    k: int
    v: int
    w: int
    x: int
    y: int


class DiagonalDict:
    """Dynamic dictionary keyed by match diagonal.

    Keys are stable while a suffix keeps co-extending: the suffix tracked
    on diagonal ``delta`` at step f is ``delta + f + 1``.  The built-in
    dict provides the expected-constant-time contract.
    """

    __slots__ = ("_map", "inserts", "deletes", "stats")

    def __init__(self, stats: Optional[QueryStats] = None):
        self._map: dict[int, int] = {}
        self.inserts = 0
        self.deletes = 0
        self.stats = stats

    def insert(self, key: int, value: int) -> None:
        if key in self._map:
            raise InternalConsistencyError(f"diagonal {key} inserted twice")
        self._map[key] = value
        self.inserts += 1
        if self.stats is not None:
            self.stats.dict_inserts += 1

    def pop(self, key: int) -> int:
        try:
            value = self._map.pop(key)
        except KeyError:
            raise InternalConsistencyError(f"diagonal {key} missing") from None
        self.deletes += 1
        if self.stats is not None:
            self.stats.dict_deletes += 1
        return value

    def drain(self) -> list[tuple[int, int]]:
        items = list(self._map.items())
        self._map.clear()
        self.deletes += len(items)
        if self.stats is not None:
            self.stats.dict_deletes += len(items)
        return items

    def keys(self):
        return self._map.keys()

    def items(self):
        return self._map.items()

    def __len__(self) -> int:
        return len(self._map)


# -- matching statistics ------------------------------------------------------


def _lcp_len(tb: bytes, at: int, q: bytes) -> int:
    """Common-prefix length of tb[at:] and q (0-based offsets)."""
    cap = min(len(tb) - at, len(q))
    if cap <= 0 or tb[at] != q[0]:
        return 0
    if tb[at : at + cap] == q[:cap]:
        return cap
    lo, hi = 1, cap - 1
    while lo < hi:
        mid = (lo + hi + 1) // 2
        if tb[at : at + mid] == q[:mid]:
            lo = mid
        else:
            hi = mid - 1
    return lo


def _first_row_at_least(sa: np.ndarray, tb: bytes, n: int, q: bytes) -> int:
    """Smallest SA row whose suffix, capped at len(q) symbols, is >= q."""
    lq = len(q)
    lo, hi = 1, n + 1
    while lo < hi:
        mid = (lo + hi) // 2
        at = int(sa[mid]) - 1
        if tb[at : at + lq] < q:
            lo = mid + 1
        else:
            hi = mid
    return lo


def compute_matching_statistics(s: SuffixStructures, ix: Optbwtrl,
                                pattern: bytes) -> AugmentedMs:
    """Matching statistics via suffix-array binary search on the
    uncompressed structures, with interval augmentation from the index.

    On ties the smallest SA row wins, i.e. the top of the sa-interval of
    the longest match.
    """
    if len(pattern) == 0:
        raise PatternError("empty pattern")
    m = len(pattern)
    pat = s.text.encode_pattern(pattern)
    pb = pat[1:].tobytes()
    tb = s.text.dense_bytes()
    n = s.n
    sa = s.sa
    zeros = np.zeros(m + 1, dtype=np.int64)
    ms = AugmentedMs(m, zeros.copy(), zeros.copy(), zeros.copy(),
                     zeros.copy(), zeros.copy(), zeros.copy())
    for f in range(1, m + 1):
        q = pb[f - 1 :]
        pos = _first_row_at_least(sa, tb, n, q)
        best = _lcp_len(tb, int(sa[pos]) - 1, q) if pos <= n else 0
        if pos > 1:
            above = _lcp_len(tb, int(sa[pos - 1]) - 1, q)
            if above > best:
                best = above
        if best == 0:
            continue
        row = _first_row_at_least(sa, tb, n, q[:best])
        suff = int(sa[row])
        ms.len_[f] = best
        ms.suff[f] = suff
        ms.row[f] = row
        ms.i_lf[f] = ix.f_lf.interval_of(row)
        ms.w_phi[f] = ix.f_phi.interval_of(suff)
        ms.x_phi_inv[f] = ix.f_phi_inv.interval_of(suff)
    return ms


# -- sa-interval extension ----------------------------------------------------


def _empty_salcp(ix: Optbwtrl) -> SaLcpInterval:
    """The 13-tuple of the empty string, middle pinned to the top row."""
    return SaLcpInterval(
        b=1, d=1, e=ix.n, sa_b=ix.n, sa_d=ix.n, sa_e=ix.sa_last,
        i=1, j=1, k=ix.f_lf.k,
        v=ix.phi_iv_of_n, w=ix.phi_iv_of_n,
        x=ix.phiinv_iv_of_n, y=ix.phiinv_iv_of_sa_last)


def _sentinel_salcp(ix: Optbwtrl) -> SaLcpInterval:
    return SaLcpInterval(
        b=1, d=1, e=1, sa_b=ix.n, sa_d=ix.n, sa_e=ix.n,
        i=1, j=1, k=1, v=ix.phi_iv_of_n, w=ix.phi_iv_of_n,
        x=ix.phiinv_iv_of_n, y=ix.phiinv_iv_of_n)


def initial_salcp(ix: Optbwtrl, c: int, strategy: str = "rank",
                  stats: Optional[QueryStats] = None) -> Optional[SaLcpInterval]:
    """The 13-tuple of the single-symbol string c, or None if absent."""
    if c == SENTINEL:
        return _sentinel_salcp(ix)
    return extend_salcp(ix, _empty_salcp(ix), c, strategy, stats)


def extend_salcp(ix: Optbwtrl, t: SaLcpInterval, c: int, strategy: str = "rank",
                 stats: Optional[QueryStats] = None) -> Optional[SaLcpInterval]:
    """The 13-tuple of cP given the 13-tuple of P, or None when cP does
    not occur.  ``strategy`` picks how the nearest interval with symbol c
    is found: "rank" (per-symbol sorted lists) or "scan" (nd/pd jumps).

    Extension by the sentinel returns None: no text position is preceded
    by the sentinel, and the single-symbol sentinel interval is produced
    by initial_salcp instead.
    """
    if c == SENTINEL or c >= ix.sigma:
        return None
    lf = ix.l_first
    f_phi_start = ix.f_phi.start
    f_pinv_start = ix.f_phi_inv.start

    if lf[t.i] == c:
        b2, i2 = ix.lf_step(t.b, t.i, stats)
        sa_b2 = t.sa_b - 1
        v2 = t.v - 1 if t.sa_b == f_phi_start(t.v) else t.v
    else:
        ih = ix.locate_first(c, t.i, t.k, strategy)
        if ih is None:
            return None
        # ih is the first balanced piece of its run (its predecessor has a
        # different symbol), so its top SA sample is a run-top suffix and
        # therefore itself a phi interval start: the containing interval
        # of sample-1 is unconditionally the previous one.
        b2, i2 = ix.lf_step(ix.f_lf.start(ih), ih, stats)
        sa_b2 = int(ix.sa_top[ih]) - 1
        v2 = int(ix.sa_top_phi[ih]) - 1

    if lf[t.k] == c:
        e2, k2 = ix.lf_step(t.e, t.k, stats)
        sa_e2 = t.sa_e - 1
        y2 = t.y - 1 if t.sa_e == f_pinv_start(t.y) else t.y
    else:
        kh = ix.locate_last(c, t.i, t.k, strategy)
        assert kh is not None  # the top rule already found a c interval
        # kh is the last piece of its run, so its bottom SA sample is a
        # run-bottom suffix, hence a phi-inverse interval start.
        e2, k2 = ix.lf_step(int(ix.f_lf.p[kh + 1]) - 1, kh, stats)
        sa_e2 = int(ix.sa_bot[kh]) - 1
        y2 = int(ix.sa_bot_idx[kh]) - 1

    if lf[t.j] == c:
        d2, j2 = ix.lf_step(t.d, t.j, stats)
        sa_d2 = t.sa_d - 1
        w2 = t.w - 1 if t.sa_d == f_phi_start(t.w) else t.w
        x2 = t.x - 1 if t.sa_d == f_pinv_start(t.x) else t.x
    else:
        jh = ix.locate_last(c, t.i, t.j, strategy)
        if jh is not None:
            # nearest preceding c interval: middle behaves like the bottom
            d2, j2 = ix.lf_step(int(ix.f_lf.p[jh + 1]) - 1, jh, stats)
            sa_bot_jh = int(ix.sa_bot[jh])
            sa_d2 = sa_bot_jh - 1
            x2 = int(ix.sa_bot_idx[jh]) - 1
            wb = int(ix.sa_bot_phi[jh])
            w2 = wb - 1 if sa_bot_jh == f_phi_start(wb) else wb
        else:
            # nearest succeeding c interval: middle behaves like the top
            jh = ix.locate_first(c, t.j, t.k, strategy)
            assert jh is not None
            d2, j2 = ix.lf_step(ix.f_lf.start(jh), jh, stats)
            sa_top_jh = int(ix.sa_top[jh])
            sa_d2 = sa_top_jh - 1
            w2 = int(ix.sa_top_phi[jh]) - 1
            xt = int(ix.sa_top_idx[jh])
            x2 = xt - 1 if sa_top_jh == f_pinv_start(xt) else xt

    return SaLcpInterval(b2, d2, e2, sa_b2, sa_d2, sa_e2, i2, j2, k2, v2, w2, x2, y2)


# -- long-LEM machinery -------------------------------------------------------


def output_matches_up(ix: Optbwtrl, dct: DiagonalDict, s: int, iota: int, z: int,
                      f: int, sink: Sink, stats: Optional[QueryStats] = None) -> None:
    """Emit z matches starting at text position s and the z-1 suffixes
    above it in the suffix array (via phi steps), popping each diagonal."""
    assert z >= 1
    while True:
        g = dct.pop(s - (f + 1))
        sink(Lem(f + 1, s, g - f))
        z -= 1
        if z == 0:
            return
        s, iota = ix.phi_step(s, iota, stats)


def output_matches_down(ix: Optbwtrl, dct: DiagonalDict, s: int, iota: int, z: int,
                        f: int, sink: Sink, stats: Optional[QueryStats] = None) -> None:
    """As output_matches_up but walking down via phi-inverse steps."""
    assert z >= 1
    while True:
        g = dct.pop(s - (f + 1))
        sink(Lem(f + 1, s, g - f))
        z -= 1
        if z == 0:
            return
        s, iota = ix.phi_inv_step(s, iota, stats)


def _emit_matches(ix: Optbwtrl, t: SaLcpInterval, c: int, dct: DiagonalDict,
                  f: int, sink: Sink, stats: Optional[QueryStats]) -> None:
    """Emit every suffix in [t.b, t.e] whose preceding text symbol is not
    c; those matches cannot co-extend left and end here.

    BWT runs of symbol c are skipped in one nd jump each.  When c cannot
    precede any text position (the sentinel, or a symbol absent from the
    text) every suffix is emitted.
    """
    lf = ix.l_first
    emit_all = c == SENTINEL or c >= ix.sigma
    if t.i == t.k:
        if not emit_all and lf[t.i] == c:
            return
        output_matches_up(ix, dct, t.sa_d, t.w, t.d - t.b + 1, f, sink, stats)
        if t.e > t.d:
            below, x2 = ix.phi_inv_step(t.sa_d, t.x, stats)
            output_matches_down(ix, dct, below, x2, t.e - t.d, f, sink, stats)
        return
    p = ix.f_lf.p
    if emit_all or lf[t.i] != c:
        output_matches_up(ix, dct, int(ix.sa_bot[t.i]), int(ix.sa_bot_phi[t.i]),
                          int(p[t.i + 1]) - t.b, f, sink, stats)
        o = t.i + 1
    else:
        o = int(ix.nd[t.i])
    while o < t.k:
        if not emit_all and lf[o] == c:
            o = int(ix.nd[o])
            continue
        output_matches_down(ix, dct, int(ix.sa_top[o]), int(ix.sa_top_idx[o]),
                            int(p[o + 1] - p[o]), f, sink, stats)
        o += 1
    if emit_all or lf[t.k] != c:
        output_matches_down(ix, dct, int(ix.sa_top[t.k]), int(ix.sa_top_idx[t.k]),
                            t.e - int(p[t.k]) + 1, f, sink, stats)


def _seed_from_ms(ix: Optbwtrl, ms: AugmentedMs, f: int, min_len: int,
                  dct: DiagonalDict) -> Optional[SaLcpInterval]:
    """Restart the window from the matching-statistics entry at f; only
    possible when the longest match there has exactly the window length."""
    if int(ms.len_[f]) != min_len:
        return None
    row = int(ms.row[f])
    suff = int(ms.suff[f])
    i = int(ms.i_lf[f])
    w = int(ms.w_phi[f])
    x = int(ms.x_phi_inv[f])
    dct.insert(suff - f, f + min_len - 1)
    return SaLcpInterval(row, row, row, suff, suff, suff, i, i, i, w, w, x, x)


def _expand_window(ix: Optbwtrl, t: SaLcpInterval, f: int, min_len: int,
                   dct: DiagonalDict, stats: Optional[QueryStats]) -> SaLcpInterval:
    """Grow [b, e] over all adjacent rows whose LCP chain stays >= the
    window length; each row gained is a suffix whose co-extension ends
    exactly at f + min_len - 1, and is recorded in the dictionary."""
    g = f + min_len - 1
    b, i, v, sa_b = t.b, t.i, t.v, t.sa_b
    while ix.plcp_at(sa_b, v, stats) >= min_len:
        if b == ix.f_lf.start(i):
            i -= 1
        b -= 1
        sa_b, v = ix.phi_step(sa_b, v, stats)
        dct.insert(sa_b - f, g)
    e, k, y, sa_e = t.e, t.k, t.y, t.sa_e
    while ix.plcp_below(sa_e, y, stats) >= min_len:
        if e == int(ix.f_lf.p[k + 1]) - 1:
            k += 1
        e += 1
        sa_e, y = ix.phi_inv_step(sa_e, y, stats)
        dct.insert(sa_e - f, g)
    return SaLcpInterval(b, t.d, e, sa_b, t.sa_d, sa_e, i, t.j, k, v, t.w, t.x, y)


def _insert_all(ix: Optbwtrl, t: SaLcpInterval, f: int, min_len: int,
                dct: DiagonalDict, stats: Optional[QueryStats]) -> None:
    """Record every suffix of a freshly computed window interval; all of
    them co-extend exactly min_len symbols (a longer co-extension would
    have kept the advancement chain alive)."""
    g = f + min_len - 1
    s, iota = t.sa_d, t.w
    z = t.d - t.b + 1
    while True:
        dct.insert(s - f, g)
        z -= 1
        if z == 0:
            break
        s, iota = ix.phi_step(s, iota, stats)
    z = t.e - t.d
    if z:
        s, iota = ix.phi_inv_step(t.sa_d, t.x, stats)
        while True:
            dct.insert(s - f, g)
            z -= 1
            if z == 0:
                break
            s, iota = ix.phi_inv_step(s, iota, stats)


def _direct_window(ix: Optbwtrl, pattern: np.ndarray, f: int, min_len: int,
                   dct: DiagonalDict, stats: Optional[QueryStats]) -> Optional[SaLcpInterval]:
    """Compute the window tuple of P[f, f+L-1] from scratch by L backward
    extensions (rank strategy), then record all its suffixes."""
    t: Optional[SaLcpInterval] = None
    for idx in range(f + min_len - 1, f - 1, -1):
        c = int(pattern[idx])
        t = initial_salcp(ix, c, "rank", stats) if t is None \
            else extend_salcp(ix, t, c, "rank", stats)
        if t is None:
            return None
    _insert_all(ix, t, f, min_len, dct, stats)
    return t


def advance_long_interval(ix: Optbwtrl, pattern: np.ndarray, f: int,
                          cur: Optional[SaLcpInterval], dct: DiagonalDict,
                          ms: Optional[AugmentedMs], min_len: int, sink: Sink,
                          direct: bool = False,
                          stats: Optional[QueryStats] = None) -> Optional[SaLcpInterval]:
    """One step of the main loop.

    Given the tuple of the window starting at f+1 (or None when that
    window has no occurrence), emit all matches whose pattern start is
    f+1, then produce the tuple of the window starting at f: by symbol
    extension plus LCP-chain expansion while the chain holds, restarting
    from the matching statistics (or, in direct mode, from a fresh
    backward search) when it breaks.
    """
    c = int(pattern[f])
    ext: Optional[SaLcpInterval] = None
    if cur is not None:
        _emit_matches(ix, cur, c, dct, f, sink, stats)
        ext = extend_salcp(ix, cur, c, "scan", stats)
    if ext is None:
        if direct:
            return _direct_window(ix, pattern, f, min_len, dct, stats)
        seed = _seed_from_ms(ix, ms, f, min_len, dct)
        if seed is None:
            return None
        return _expand_window(ix, seed, f, min_len, dct, stats)
    return _expand_window(ix, ext, f, min_len, dct, stats)


def _run_query(ix: Optbwtrl, pattern: bytes, ms: Optional[AugmentedMs],
               min_len: int, direct: bool, stats: Optional[QueryStats]) -> list[Lem]:
    if len(pattern) == 0:
        raise PatternError("empty pattern")
    if min_len < 1:
        raise PatternError("minimum match length must be >= 1")
    m = len(pattern)
    out: list[Lem] = []
    if min_len > m:
        return out
    pat = ix.encode_pattern(pattern)
    dct = DiagonalDict(stats)
    cur: Optional[SaLcpInterval] = None
    for f in range(m - min_len + 1, 0, -1):
        cur = advance_long_interval(ix, pat, f, cur, dct, ms, min_len, out.append,
                                    direct=direct, stats=stats)
    for key, g in dct.drain():  # pattern start 1 is always left-maximal
        out.append(Lem(1, key + 1, g))
    return out


def long_lem_query(ix: Optbwtrl, pattern: bytes, ms: AugmentedMs, min_len: int,
                   stats: Optional[QueryStats] = None) -> list[Lem]:
    """All long LEMs given the pattern's matching statistics."""
    if ms.m != len(pattern):
        raise InternalConsistencyError(
            "matching statistics were computed for a different pattern length")
    return _run_query(ix, pattern, ms, min_len, direct=False, stats=stats)


def long_lem_query_direct(ix: Optbwtrl, pattern: bytes, min_len: int,
                          stats: Optional[QueryStats] = None) -> list[Lem]:
    """All long LEMs without matching statistics: broken advancement
    chains recompute the window by fresh backward extensions instead."""
    return _run_query(ix, pattern, None, min_len, direct=True, stats=stats)
