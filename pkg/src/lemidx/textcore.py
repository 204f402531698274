"""Text validation and desk-scale construction of the uncompressed suffix
structures (SA, ISA, LCP, PLCP, LF, phi, phi-inverse, BWT) and the
run-length encoded BWT.

All positions are 1-based.  Arrays indexed by position are stored with a
padding slot at index 0 so that code can follow the 1-based formulas
directly; the slot is never read.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import TextError

SENTINEL_BYTE = ord("$")

#: dense symbol value of the sentinel (always the minimum symbol)
SENTINEL = 0

#: dense symbol value of the record separator in multi-record inputs
SEPARATOR = 1

#: byte rendered for the record separator; reserved in multi-record mode
SEPARATOR_BYTE = 0x01

#: dense code assigned to pattern bytes that do not occur in the text.
#: It never compares equal to a text symbol (if all 256 byte values occur
#: in the text, no byte can be absent in the first place).
ABSENT = 255


@dataclass
class Text:
    """A validated text over a dense 8-bit alphabet, sentinel-terminated.

    ``symbols[1..n]`` holds the dense symbols; ``symbols[n]`` is the
    sentinel (value 0), which occurs exactly once.  ``alphabet[s]`` is the
    original byte rendered for dense symbol ``s``.
    """

    symbols: np.ndarray  # uint8, length n+1, slot 0 unused
    n: int
    sigma: int
    alphabet: np.ndarray  # uint8, length sigma
    _byte_to_sym: np.ndarray = field(repr=False)  # uint8, length 256, ABSENT where unmapped

    def symbol_at(self, i: int) -> int:
        return int(self.symbols[i])

    def dense_bytes(self) -> bytes:
        """The dense symbol sequence as a bytes object (0-based)."""
        return self.symbols[1:].tobytes()

    def encode_pattern(self, raw: bytes) -> np.ndarray:
        """Map pattern bytes through the text alphabet (1-based array).

        Bytes absent from the text map to :data:`ABSENT` and never match.
        """
        out = np.empty(len(raw) + 1, dtype=np.uint8)
        out[0] = 0
        out[1:] = self._byte_to_sym[np.frombuffer(raw, dtype=np.uint8)]
        return out

    def render(self, start: int, length: int) -> bytes:
        """Original-byte rendering of ``symbols[start .. start+length-1]``."""
        return self.alphabet[self.symbols[start : start + length]].tobytes()


def _dense_map(present: np.ndarray, reserve_separator: bool) -> tuple[np.ndarray, np.ndarray]:
    """Dense alphabet for the given distinct non-sentinel byte values.

    Returns ``(alphabet, byte_to_sym)``.  Byte order is preserved; the
    sentinel takes dense value 0 and, when reserved, the separator takes
    dense value 1.
    """
    head = [SENTINEL_BYTE] + ([SEPARATOR_BYTE] if reserve_separator else [])
    alphabet = np.array(head + sorted(int(b) for b in present), dtype=np.uint8)
    byte_to_sym = np.full(256, ABSENT, dtype=np.uint8)
    for sym, byte in enumerate(alphabet):
        byte_to_sym[byte] = sym
    return alphabet, byte_to_sym


def validate_text(raw: bytes) -> Text:
    """Validate a raw byte string and produce a sentinel-terminated Text.

    A trailing ``$`` is accepted as the sentinel; one is appended when
    absent.  A ``$`` anywhere else is rejected.
    """
    if len(raw) == 0:
        raise TextError("empty input text")
    body = raw[:-1] if raw.endswith(b"$") else raw
    if SENTINEL_BYTE in body:
        raise TextError("sentinel '$' occurs before the final position")
    arr = np.frombuffer(body, dtype=np.uint8)
    alphabet, byte_to_sym = _dense_map(np.unique(arr), reserve_separator=False)
    n = len(body) + 1
    symbols = np.zeros(n + 1, dtype=np.uint8)
    symbols[1:n] = byte_to_sym[arr]
    symbols[n] = SENTINEL
    return Text(symbols, n, len(alphabet), alphabet, byte_to_sym)


def text_from_records(records: list[bytes]) -> Text:
    """Concatenate records with a separator symbol and one final sentinel.

    Empty records are dropped.  Record bytes may not contain ``$`` or the
    reserved separator byte 0x01.
    """
    records = [rec for rec in records if rec]
    if not records:
        raise TextError("no non-empty records")
    joined = b"".join(records)
    if SENTINEL_BYTE in joined:
        raise TextError("sentinel '$' occurs inside a record")
    if len(records) == 1:
        return validate_text(records[0])
    if SEPARATOR_BYTE in joined:
        raise TextError("record contains the reserved separator byte 0x01")
    arr = np.frombuffer(joined, dtype=np.uint8)
    alphabet, byte_to_sym = _dense_map(np.unique(arr), reserve_separator=True)
    n = len(joined) + (len(records) - 1) + 1
    symbols = np.zeros(n + 1, dtype=np.uint8)
    pos = 1
    for idx, rec in enumerate(records):
        if idx:
            symbols[pos] = SEPARATOR
            pos += 1
        symbols[pos : pos + len(rec)] = byte_to_sym[np.frombuffer(rec, dtype=np.uint8)]
        pos += len(rec)
    symbols[n] = SENTINEL
    return Text(symbols, n, len(alphabet), alphabet, byte_to_sym)


def load_text_file(path: str, fasta: bool = False) -> Text:
    """Read a raw byte file (trailing newline stripped) or a FASTA-like
    file ('>' header lines skipped, records separated by headers)."""
    with open(path, "rb") as fh:
        data = fh.read()
    if not fasta:
        return validate_text(data.rstrip(b"\r\n"))
    records: list[bytes] = []
    chunks: list[bytes] = []
    for line in data.splitlines():
        if line.startswith(b">"):
            if chunks:
                records.append(b"".join(chunks))
                chunks = []
        else:
            chunks.append(line.strip())
    if chunks:
        records.append(b"".join(chunks))
    return text_from_records(records)


@dataclass
class SuffixStructures:
    """All uncompressed suffix structures of a text (1-based, padded)."""

    text: Text
    n: int
    sa: np.ndarray
    isa: np.ndarray
    lcp: np.ndarray
    plcp: np.ndarray
    lf: np.ndarray
    phi: np.ndarray
    phi_inv: np.ndarray
    bwt: np.ndarray  # uint8, length n+1


def _suffix_array_doubling(sym: np.ndarray) -> np.ndarray:
    """Suffix array by prefix doubling (0-based result)."""
    n = len(sym)
    if n == 1:
        return np.zeros(1, dtype=np.int64)
    rank = sym.astype(np.int64)
    k = 1
    while True:
        second = np.full(n, -1, dtype=np.int64)
        second[: n - k] = rank[k:]
        sa = np.lexsort((second, rank))
        new = np.empty(n, dtype=np.int64)
        new[sa[0]] = 0
        changed = (rank[sa[1:]] != rank[sa[:-1]]) | (second[sa[1:]] != second[sa[:-1]])
        new[sa[1:]] = np.cumsum(changed)
        rank = new
        if rank[sa[-1]] == n - 1:
            return sa
        k *= 2


def build_suffix_structures(t: Text) -> SuffixStructures:
    """Construct SA/ISA/LCP/PLCP/LF/phi/phi_inv/BWT for a validated text.

    The LCP array is produced by the text-order h-scan (which computes
    PLCP directly) followed by a permute back into SA order.
    """
    n = t.n
    sa = np.zeros(n + 1, dtype=np.int64)
    sa[1:] = _suffix_array_doubling(t.symbols[1:]) + 1
    isa = np.zeros(n + 1, dtype=np.int64)
    isa[sa[1:]] = np.arange(1, n + 1)

    text_b = t.dense_bytes()  # 0-based view for fast char compares
    plcp = np.zeros(n + 1, dtype=np.int64)
    h = 0
    for j in range(1, n + 1):
        i = isa[j]
        if i == 1:
            h = 0
            continue
        prev = int(sa[i - 1])
        while j + h <= n and prev + h <= n and text_b[j + h - 1] == text_b[prev + h - 1]:
            h += 1
        plcp[j] = h
        if h:
            h -= 1

    lcp = np.zeros(n + 1, dtype=np.int64)
    lcp[1:] = plcp[sa[1:]]

    prev_pos = sa[1:] - 1
    prev_pos[prev_pos == 0] = n
    lf = np.zeros(n + 1, dtype=np.int64)
    lf[1:] = isa[prev_pos]
    bwt = np.zeros(n + 1, dtype=np.uint8)
    bwt[1:] = t.symbols[prev_pos]

    phi = np.zeros(n + 1, dtype=np.int64)
    phi[sa[2:]] = sa[1:n]
    phi[sa[1]] = sa[n]
    phi_inv = np.zeros(n + 1, dtype=np.int64)
    phi_inv[sa[1:n]] = sa[2:]
    phi_inv[sa[n]] = sa[1]

    return SuffixStructures(t, n, sa, isa, lcp, plcp, lf, phi, phi_inv, bwt)


@dataclass
class Rlbwt:
    """Run-length encoded BWT: r pairs (run character, run start)."""

    chars: np.ndarray  # uint8, 1-based, length r+1
    starts: np.ndarray  # int64, 1-based, length r+1
    n: int

    @property
    def r(self) -> int:
        return len(self.starts) - 1

    def run_end(self, i: int) -> int:
        """Last BWT position of run i."""
        return int(self.starts[i + 1]) - 1 if i < self.r else self.n

    def expand(self) -> np.ndarray:
        """Reproduce the full BWT (1-based, padded)."""
        out = np.zeros(self.n + 1, dtype=np.uint8)
        for i in range(1, self.r + 1):
            out[self.starts[i] : self.run_end(i) + 1] = self.chars[i]
        return out


def build_rlbwt(s: SuffixStructures) -> Rlbwt:
    """Maximal-run encoding of the BWT."""
    bwt = s.bwt[1:]
    boundaries = np.nonzero(bwt[1:] != bwt[:-1])[0] + 2  # 1-based run starts after the first
    starts = np.zeros(len(boundaries) + 2, dtype=np.int64)
    starts[1] = 1
    starts[2:] = boundaries
    chars = np.zeros(len(starts), dtype=np.uint8)
    chars[1:] = s.bwt[starts[1:]]
    return Rlbwt(chars, starts, s.n)
