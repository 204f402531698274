"""The run-length BWT move-structure index.

Three move structures (LF over SA positions; phi and phi-inverse over
text positions, each carrying PLCP samples as a slope -1 payload), the
per-interval run-character string with rank/select lists, SA samples at
interval boundaries with their containing-interval pointers, and the
next/previous-different-character jump arrays.  Together these answer
count, locate, phi, phi-inverse, and PLCP queries in run-compressed
space, and carry everything the long-LEM machinery needs.
"""

from __future__ import annotations

import struct
import zlib
from dataclasses import dataclass
from typing import BinaryIO, Optional

import numpy as np

from .errors import (BuildValidationError, ChecksumError, IndexFormatError,
                     MagicError, PatternError, TruncationError, VersionError)
from .instrument import QueryStats
from .move_structure import (IntervalSequence, MoveResult, MoveStructure,
                             build_move_structure, disjoint_violation)
from .textcore import ABSENT, SENTINEL, Rlbwt, SuffixStructures

MAGIC = b"OBRL"
FORMAT_VERSION = 1

FORWARD = "forward"
BACKWARD = "backward"


@dataclass
class SaIntervalSimple:
    """Reduced sa-interval state for count/locate: top and bottom rows
    (b, e), their LF intervals (i, k), their SA values, the phi interval
    of sa_b (v) and the phi-inverse interval of sa_e (y)."""

    b: int
    e: int
    i: int
    k: int
    sa_b: int
    sa_e: int
    v: int
    y: int

    @property
    def width(self) -> int:
        return self.e - self.b + 1


@dataclass(eq=False)
class Optbwtrl:
    n: int
    r: int
    sigma: int
    d: int
    f_lf: MoveStructure
    f_phi: MoveStructure
    f_phi_inv: MoveStructure
    l_first: np.ndarray  # uint8, 1-based over f_lf intervals
    char_positions: list[np.ndarray]  # per symbol, ascending f_lf interval indices
    sa_top: np.ndarray
    sa_bot: np.ndarray
    sa_top_phi: np.ndarray
    sa_top_idx: np.ndarray
    sa_bot_idx: np.ndarray
    sa_bot_phi: np.ndarray
    nd: np.ndarray
    pd: np.ndarray
    alphabet: np.ndarray  # uint8, original byte per dense symbol
    sa_last: int  # SA[n]
    phi_iv_of_n: int  # f_phi interval containing position n
    phiinv_iv_of_n: int  # f_phi_inv interval containing position n
    phiinv_iv_of_sa_last: int  # f_phi_inv interval containing SA[n]

    # -- elementary queries ------------------------------------------------

    def lf_step(self, pos: int, x: int, stats: Optional[QueryStats] = None) -> MoveResult:
        return self.f_lf.move_query(pos, x, stats)

    def phi_step(self, tpos: int, v: int, stats: Optional[QueryStats] = None) -> MoveResult:
        return self.f_phi.move_query(tpos, v, stats)

    def phi_inv_step(self, tpos: int, x: int, stats: Optional[QueryStats] = None) -> MoveResult:
        return self.f_phi_inv.move_query(tpos, x, stats)

    def plcp_at(self, tpos: int, v: int, stats: Optional[QueryStats] = None) -> int:
        """PLCP[tpos], given the f_phi interval containing tpos."""
        return self.f_phi.payload_query(tpos, v, stats)

    def plcp_below(self, tpos: int, x: int, stats: Optional[QueryStats] = None) -> int:
        """PLCP[phi_inv(tpos)], given the f_phi_inv interval containing tpos."""
        return self.f_phi_inv.payload_query(tpos, x, stats)

    def run_jump(self, interval: int, direction: str) -> int:
        """Nearest f_lf interval with a different symbol; sentinel k+1
        going forward, 0 going backward."""
        if direction == FORWARD:
            return int(self.nd[interval])
        if direction == BACKWARD:
            return int(self.pd[interval])
        raise ValueError(f"unknown direction {direction!r}")

    def first_interval_with_char(self, c: int, lo: int, hi: int) -> Optional[int]:
        if not 0 <= c < self.sigma:
            return None
        arr = self.char_positions[c]
        j = int(np.searchsorted(arr, lo, side="left"))
        if j < len(arr) and arr[j] <= hi:
            return int(arr[j])
        return None

    def last_interval_with_char(self, c: int, lo: int, hi: int) -> Optional[int]:
        if not 0 <= c < self.sigma:
            return None
        arr = self.char_positions[c]
        j = int(np.searchsorted(arr, hi, side="right")) - 1
        if j >= 0 and arr[j] >= lo:
            return int(arr[j])
        return None

    def _first_with_char_scan(self, c: int, lo: int, hi: int) -> Optional[int]:
        o = lo
        lf = self.l_first
        while o <= hi:
            if lf[o] == c:
                return o
            o = int(self.nd[o])
        return None

    def _last_with_char_scan(self, c: int, lo: int, hi: int) -> Optional[int]:
        o = hi
        lf = self.l_first
        while o >= lo:
            if lf[o] == c:
                return o
            o = int(self.pd[o])  # 0 sentinel ends the loop
        return None

    def locate_first(self, c: int, lo: int, hi: int, strategy: str) -> Optional[int]:
        if strategy == "rank":
            return self.first_interval_with_char(c, lo, hi)
        return self._first_with_char_scan(c, lo, hi)

    def locate_last(self, c: int, lo: int, hi: int, strategy: str) -> Optional[int]:
        if strategy == "rank":
            return self.last_interval_with_char(c, lo, hi)
        return self._last_with_char_scan(c, lo, hi)

    # -- backward search ----------------------------------------------------

    def empty_interval(self) -> SaIntervalSimple:
        """The sa-interval of the empty string: all of [1, n]."""
        return SaIntervalSimple(
            b=1, e=self.n, i=1, k=self.f_lf.k, sa_b=self.n, sa_e=self.sa_last,
            v=self.phi_iv_of_n, y=self.phiinv_iv_of_sa_last)

    def _sentinel_interval(self) -> SaIntervalSimple:
        # Only the final suffix starts with the sentinel: row 1, SA value n.
        return SaIntervalSimple(b=1, e=1, i=1, k=1, sa_b=self.n, sa_e=self.n,
                                v=self.phi_iv_of_n, y=self.phiinv_iv_of_n)

    def initial_interval(self, c: int, stats: Optional[QueryStats] = None) -> Optional[SaIntervalSimple]:
        """The sa-interval of the single-symbol string c."""
        if c == SENTINEL:
            return self._sentinel_interval()
        return self.extend_simple(self.empty_interval(), c, stats=stats)

    def extend_simple(self, t: SaIntervalSimple, c: int, strategy: str = "rank",
                      stats: Optional[QueryStats] = None) -> Optional[SaIntervalSimple]:
        """The sa-interval of cP given the sa-interval of a nonempty P,
        or None when cP does not occur.

        Extending a nonempty string by the sentinel never matches (nothing
        precedes the final text position), so it returns None; the
        legitimate single-symbol sentinel interval is produced by
        initial_interval instead.
        """
        if c == SENTINEL or c >= self.sigma:
            return None
        lf = self.l_first
        if lf[t.i] == c:
            b2, i2 = self.lf_step(t.b, t.i, stats)
            sa_b2 = t.sa_b - 1
            v2 = t.v - 1 if t.sa_b == self.f_phi.start(t.v) else t.v
        else:
            ih = self.locate_first(c, t.i, t.k, strategy)
            if ih is None:
                return None
            # ih starts a run (its predecessor differs), so its top SA
            # sample is a run-top suffix, hence a phi interval start.
            b2, i2 = self.lf_step(self.f_lf.start(ih), ih, stats)
            sa_b2 = int(self.sa_top[ih]) - 1
            v2 = int(self.sa_top_phi[ih]) - 1
        if lf[t.k] == c:
            e2, k2 = self.lf_step(t.e, t.k, stats)
            sa_e2 = t.sa_e - 1
            y2 = t.y - 1 if t.sa_e == self.f_phi_inv.start(t.y) else t.y
        else:
            kh = self.locate_last(c, t.i, t.k, strategy)
            assert kh is not None  # top rule already found a c interval
            # kh ends a run (its successor differs), so its bottom SA
            # sample is a run-bottom suffix, hence a phi-inverse start.
            e2, k2 = self.lf_step(int(self.f_lf.p[kh + 1]) - 1, kh, stats)
            sa_e2 = int(self.sa_bot[kh]) - 1
            y2 = int(self.sa_bot_idx[kh]) - 1
        return SaIntervalSimple(b=b2, e=e2, i=i2, k=k2, sa_b=sa_b2, sa_e=sa_e2, v=v2, y=y2)

    def backward_search(self, pattern: bytes, stats: Optional[QueryStats] = None
                        ) -> Optional[SaIntervalSimple]:
        if len(pattern) == 0:
            raise PatternError("empty pattern")
        pat = self.encode_pattern(pattern)
        m = len(pattern)
        t = self.initial_interval(int(pat[m]), stats)
        for idx in range(m - 1, 0, -1):
            if t is None:
                return None
            t = self.extend_simple(t, int(pat[idx]), stats=stats)
        return t

    def count(self, pattern: bytes, stats: Optional[QueryStats] = None) -> int:
        """Number of occurrences of the pattern in the text."""
        t = self.backward_search(pattern, stats)
        return 0 if t is None else t.width

    def locate(self, pattern: bytes, stats: Optional[QueryStats] = None) -> list[int]:
        """All occurrence start positions, in suffix-array order."""
        t = self.backward_search(pattern, stats)
        if t is None:
            return []
        out = [t.sa_b]
        remaining = t.e - t.b
        if remaining:
            walked = np.empty(remaining, dtype=np.int64)
            x0 = self.f_phi_inv.interval_of(t.sa_b)
            self.f_phi_inv.walk(t.sa_b, x0, remaining, walked, stats)
            out.extend(int(v) for v in walked)
        return out

    # -- plumbing ------------------------------------------------------------

    def encode_pattern(self, raw: bytes) -> np.ndarray:
        out = np.empty(len(raw) + 1, dtype=np.uint8)
        out[0] = 0
        out[1:] = self._byte_to_sym[np.frombuffer(raw, dtype=np.uint8)]
        return out

    def __post_init__(self):
        self._byte_to_sym = np.full(256, ABSENT, dtype=np.uint8)
        for sym, byte in enumerate(self.alphabet):
            self._byte_to_sym[byte] = sym

    def stored_integers(self) -> int:
        """Total integers held across all index arrays (the space
        accounting used by the O(r)-space check)."""
        total = self.f_lf.stored_integers()
        total += self.f_phi.stored_integers()
        total += self.f_phi_inv.stored_integers()
        total += self.f_lf.k  # l_first
        total += sum(len(a) for a in self.char_positions)
        total += 6 * self.f_lf.k  # SA samples and their interval pointers
        total += 2 * self.f_lf.k  # nd, pd
        total += len(self.alphabet)
        total += 8  # scalars and seeds
        return total

    def summary(self) -> dict:
        return {
            "n": self.n,
            "r": self.r,
            "sigma": self.sigma,
            "d": self.d,
            "lf_intervals": self.f_lf.k,
            "phi_intervals": self.f_phi.k,
            "phi_inv_intervals": self.f_phi_inv.k,
            "n_over_r": self.n / self.r,
            "stored_integers": self.stored_integers(),
        }

    def __eq__(self, other) -> bool:
        if not isinstance(other, Optbwtrl):
            return NotImplemented
        scalars = ("n", "r", "sigma", "d", "sa_last", "phi_iv_of_n",
                   "phiinv_iv_of_n", "phiinv_iv_of_sa_last")
        if any(getattr(self, f) != getattr(other, f) for f in scalars):
            return False
        if not (self.f_lf == other.f_lf and self.f_phi == other.f_phi
                and self.f_phi_inv == other.f_phi_inv):
            return False
        arrays = ("l_first", "sa_top", "sa_bot", "sa_top_phi",
                  "sa_top_idx", "sa_bot_idx", "sa_bot_phi", "nd", "pd", "alphabet")
        if any(not np.array_equal(getattr(self, f), getattr(other, f)) for f in arrays):
            return False
        return (len(self.char_positions) == len(other.char_positions)
                and all(np.array_equal(a, b)
                        for a, b in zip(self.char_positions, other.char_positions)))


def build_optbwtrl(s: SuffixStructures, rl: Rlbwt, d: int = 2,
                   validate: bool = True) -> Optbwtrl:
    """Assemble the index from the uncompressed suffix structures and the
    run-length BWT; with ``validate`` every derived structural invariant
    is checked and a violation aborts naming the failed check."""
    n = s.n
    r = rl.r
    run_starts = [int(rl.starts[i]) for i in range(1, r + 1)]

    i_lf = IntervalSequence([(row, int(s.lf[row])) for row in run_starts], n)
    p_plus = sorted(int(s.sa[row]) for row in run_starts)
    i_phi = IntervalSequence([(p, int(s.phi[p])) for p in p_plus], n)
    lcp_plus = [int(s.plcp[p]) for p in p_plus]
    bottom_rows = [start - 1 for start in run_starts[1:]] + [n]
    p_minus = sorted(int(s.sa[row]) for row in bottom_rows)
    i_phi_inv = IntervalSequence([(p, int(s.phi_inv[p])) for p in p_minus], n)
    lcp_minus = [int(s.plcp[s.phi_inv[p]]) for p in p_minus]

    if validate:
        for seq, name in ((i_lf, "LF"), (i_phi, "phi"), (i_phi_inv, "phi-inverse")):
            report = disjoint_violation(seq)
            if report is not None:
                raise BuildValidationError(f"{name} interval sequence: {report}")
        if p_plus[0] != 1:
            raise BuildValidationError("smallest run-top suffix position is not 1")
        if p_minus[0] != 1:
            raise BuildValidationError("smallest run-bottom suffix position is not 1")

    f_lf = build_move_structure(i_lf, d)
    f_phi = build_move_structure(i_phi, d, payload=lcp_plus)
    f_phi_inv = build_move_structure(i_phi_inv, d, payload=lcp_minus)

    k = f_lf.k
    l_first = np.zeros(k + 1, dtype=np.uint8)
    l_first[1:] = s.bwt[f_lf.p[1 : k + 1]]
    sigma = int(s.text.sigma)
    char_positions = [np.nonzero(l_first[1:] == c)[0].astype(np.int64) + 1
                      for c in range(sigma)]

    sa_top = np.zeros(k + 1, dtype=np.int64)
    sa_top[1:] = s.sa[f_lf.p[1 : k + 1]]
    sa_bot = np.zeros(k + 1, dtype=np.int64)
    sa_bot[1:] = s.sa[f_lf.p[2 : k + 2] - 1]
    sa_top_phi = np.zeros(k + 1, dtype=np.int64)
    sa_top_idx = np.zeros(k + 1, dtype=np.int64)
    sa_bot_idx = np.zeros(k + 1, dtype=np.int64)
    sa_bot_phi = np.zeros(k + 1, dtype=np.int64)
    for x in range(1, k + 1):
        sa_top_phi[x] = f_phi.interval_of(int(sa_top[x]))
        sa_top_idx[x] = f_phi_inv.interval_of(int(sa_top[x]))
        sa_bot_idx[x] = f_phi_inv.interval_of(int(sa_bot[x]))
        sa_bot_phi[x] = f_phi.interval_of(int(sa_bot[x]))

    nd = np.zeros(k + 1, dtype=np.int64)
    pd = np.zeros(k + 1, dtype=np.int64)
    nd[k] = k + 1
    for x in range(k - 1, 0, -1):
        nd[x] = x + 1 if l_first[x + 1] != l_first[x] else nd[x + 1]
    pd[1] = 0
    for x in range(2, k + 1):
        pd[x] = x - 1 if l_first[x - 1] != l_first[x] else pd[x - 1]

    ix = Optbwtrl(
        n=n, r=r, sigma=sigma, d=d,
        f_lf=f_lf, f_phi=f_phi, f_phi_inv=f_phi_inv,
        l_first=l_first, char_positions=char_positions,
        sa_top=sa_top, sa_bot=sa_bot, sa_top_phi=sa_top_phi,
        sa_top_idx=sa_top_idx, sa_bot_idx=sa_bot_idx, sa_bot_phi=sa_bot_phi,
        nd=nd, pd=pd, alphabet=s.text.alphabet.copy(),
        sa_last=int(s.sa[n]),
        phi_iv_of_n=f_phi.interval_of(n),
        phiinv_iv_of_n=f_phi_inv.interval_of(n),
        phiinv_iv_of_sa_last=f_phi_inv.interval_of(int(s.sa[n])),
    )
    if validate:
        _validate_against_structures(ix, s)
    return ix


def _eval_sequence(ms: MoveStructure) -> np.ndarray:
    """Pointwise evaluation of the represented bijection (1-based)."""
    starts = ms.p[1 : ms.k + 1]
    pos = np.arange(1, ms.n + 1)
    idx = np.searchsorted(starts, pos, side="right") - 1
    out = np.zeros(ms.n + 1, dtype=np.int64)
    out[1:] = ms.q[1 : ms.k + 1][idx] + (pos - starts[idx])
    return out


def _validate_against_structures(ix: Optbwtrl, s: SuffixStructures) -> None:
    n = ix.n
    checks = ((ix.f_lf, s.lf, "LF"), (ix.f_phi, s.phi, "phi"),
              (ix.f_phi_inv, s.phi_inv, "phi-inverse"))
    for ms, truth, name in checks:
        if not np.array_equal(_eval_sequence(ms)[1:], truth[1:]):
            raise BuildValidationError(f"balanced {name} structure does not match the permutation")
    k = ix.f_lf.k
    if ix.f_lf.pre_k != ix.r:
        raise BuildValidationError("LF pre-balance interval count differs from the run count")
    starts = ix.f_lf.p[1 : k + 1]
    pos_interval = np.searchsorted(starts, np.arange(1, n + 1), side="right")
    if not np.array_equal(s.bwt[1:], ix.l_first[pos_interval]):
        raise BuildValidationError("BWT symbol differs inside an LF interval")
    phi_starts = ix.f_phi.p[1 : ix.f_phi.k + 1]
    if not np.array_equal(ix.f_phi.payload[1:], s.plcp[phi_starts]):
        raise BuildValidationError("phi payload differs from PLCP at an interval start")
    pinv_starts = ix.f_phi_inv.p[1 : ix.f_phi_inv.k + 1]
    if not np.array_equal(ix.f_phi_inv.payload[1:], s.plcp[s.phi_inv[pinv_starts]]):
        raise BuildValidationError(
            "phi-inverse payload differs from PLCP below an interval start")
    if not np.array_equal(ix.sa_top[1:], s.sa[starts]):
        raise BuildValidationError("top SA sample differs from the suffix array")
    if not np.array_equal(ix.sa_bot[1:], s.sa[ix.f_lf.p[2 : k + 2] - 1]):
        raise BuildValidationError("bottom SA sample differs from the suffix array")
    for x in range(1, k + 1):
        for arr, target, structure in ((ix.sa_top_phi, ix.sa_top, ix.f_phi),
                                       (ix.sa_top_idx, ix.sa_top, ix.f_phi_inv),
                                       (ix.sa_bot_idx, ix.sa_bot, ix.f_phi_inv),
                                       (ix.sa_bot_phi, ix.sa_bot, ix.f_phi)):
            iv = int(arr[x])
            val = int(target[x])
            if not structure.p[iv] <= val < structure.p[iv + 1]:
                raise BuildValidationError("sample interval pointer outside its interval")


# -- serialization ------------------------------------------------------------


class _Writer:
    def __init__(self, sink: BinaryIO):
        self.sink = sink
        self.crc = 0

    def raw(self, data: bytes) -> None:
        self.crc = zlib.crc32(data, self.crc)
        self.sink.write(data)

    def u64(self, value: int) -> None:
        self.raw(struct.pack("<Q", value))

    def array(self, arr: np.ndarray, skip_pad: bool = True) -> None:
        body = arr[1:] if skip_pad else arr
        self.u64(len(body))
        self.raw(np.ascontiguousarray(body, dtype="<u8").tobytes())


class _Reader:
    def __init__(self, data: bytes):
        self.data = data
        self.at = 0

    def raw(self, size: int) -> bytes:
        if self.at + size > len(self.data):
            raise TruncationError("index stream ended early")
        chunk = self.data[self.at : self.at + size]
        self.at += size
        return chunk

    def u64(self) -> int:
        return struct.unpack("<Q", self.raw(8))[0]

    def array(self, pad: bool = True, extra: int = 0) -> np.ndarray:
        count = self.u64()
        if count > (len(self.data) - self.at) // 8:
            raise TruncationError("array length exceeds the remaining stream")
        body = np.frombuffer(self.raw(8 * count), dtype="<u8").astype(np.int64)
        if not pad:
            return body
        arr = np.zeros(count + 1 + extra, dtype=np.int64)
        arr[1 : count + 1] = body
        return arr


def _write_move(w: _Writer, ms: MoveStructure) -> None:
    w.u64(ms.k)
    w.u64(ms.pre_k)
    w.array(ms.p[: ms.k + 1])  # sentinel slot recomputed on load
    w.array(ms.q)
    w.array(ms.dest)
    if ms.payload is None:
        w.u64(0)
    else:
        w.u64(1)
        w.array(ms.payload)


def _read_move(rd: _Reader, n: int, d: int) -> MoveStructure:
    k = rd.u64()
    pre_k = rd.u64()
    p = rd.array(extra=1)
    q = rd.array()
    dest = rd.array()
    payload = rd.array() if rd.u64() else None
    if len(p) != k + 2 or len(q) != k + 1 or len(dest) != k + 1:
        raise IndexFormatError("move structure arrays disagree with the interval count")
    p[k + 1] = n + 1
    return MoveStructure(n=n, d=d, k=k, pre_k=pre_k, p=p, q=q, dest=dest, payload=payload)


def serialize(ix: Optbwtrl, sink: BinaryIO) -> None:
    """Write the index; byte-exact round trip with :func:`deserialize`."""
    w = _Writer(sink)
    w.raw(MAGIC)
    w.raw(struct.pack("<I", FORMAT_VERSION))
    for value in (ix.n, ix.r, ix.sigma, ix.d):
        w.u64(value)
    for ms in (ix.f_lf, ix.f_phi, ix.f_phi_inv):
        _write_move(w, ms)
    w.array(ix.l_first.astype(np.int64))
    w.u64(len(ix.char_positions))
    for arr in ix.char_positions:
        w.array(arr, skip_pad=False)
    for name in ("sa_top", "sa_bot", "sa_top_phi", "sa_top_idx", "sa_bot_idx",
                 "sa_bot_phi", "nd", "pd"):
        w.array(getattr(ix, name))
    w.array(ix.alphabet.astype(np.int64), skip_pad=False)
    for value in (ix.sa_last, ix.phi_iv_of_n, ix.phiinv_iv_of_n, ix.phiinv_iv_of_sa_last):
        w.u64(value)
    sink.write(struct.pack("<I", w.crc & 0xFFFFFFFF))


def deserialize(source) -> Optbwtrl:
    """Read an index written by :func:`serialize`.

    Raises MagicError, VersionError, TruncationError, or ChecksumError,
    each for its own failure mode.
    """
    data = source.read() if hasattr(source, "read") else bytes(source)
    if len(data) < 4:
        raise TruncationError("stream shorter than the magic")
    if data[:4] != MAGIC:
        raise MagicError("bad index magic")
    if len(data) < 8:
        raise TruncationError("stream ended inside the header")
    version = struct.unpack("<I", data[4:8])[0]
    if version != FORMAT_VERSION:
        raise VersionError(f"unsupported index format version {version}")
    if len(data) < 12:
        raise TruncationError("stream ended inside the header")
    rd = _Reader(data[:-4])
    rd.at = 8
    n, r, sigma, d = (rd.u64() for _ in range(4))
    f_lf = _read_move(rd, n, d)
    f_phi = _read_move(rd, n, d)
    f_phi_inv = _read_move(rd, n, d)
    l_first = rd.array().astype(np.uint8)
    n_symbols = rd.u64()
    if n_symbols != sigma:
        raise IndexFormatError("symbol table size disagrees with sigma")
    char_positions = [rd.array(pad=False) for _ in range(sigma)]
    named = {name: rd.array() for name in
             ("sa_top", "sa_bot", "sa_top_phi", "sa_top_idx", "sa_bot_idx",
              "sa_bot_phi", "nd", "pd")}
    alphabet = rd.array(pad=False).astype(np.uint8)
    sa_last, phi_iv_of_n, phiinv_iv_of_n, phiinv_iv_of_sa_last = (rd.u64() for _ in range(4))
    if rd.at != len(rd.data):
        raise IndexFormatError("trailing bytes after the index body")
    crc = struct.unpack("<I", data[-4:])[0]
    if zlib.crc32(data[:-4]) & 0xFFFFFFFF != crc:
        raise ChecksumError("index checksum mismatch")
    return Optbwtrl(
        n=n, r=r, sigma=sigma, d=d, f_lf=f_lf, f_phi=f_phi, f_phi_inv=f_phi_inv,
        l_first=l_first, char_positions=char_positions,
        alphabet=alphabet, sa_last=sa_last, phi_iv_of_n=phi_iv_of_n,
        phiinv_iv_of_n=phiinv_iv_of_n, phiinv_iv_of_sa_last=phiinv_iv_of_sa_last,
        **named)


def save_index(ix: Optbwtrl, path: str) -> None:
    with open(path, "wb") as fh:
        serialize(ix, fh)


def load_index(path: str) -> Optbwtrl:
    with open(path, "rb") as fh:
        return deserialize(fh)
