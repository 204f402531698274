"""Brute-force reference implementations of every query.

These are deliberately independent of the index code paths (they share
only the Text type and the output triple type) so that equivalence tests
against them are meaningful.  All are quadratic-ish by design.
"""

from __future__ import annotations

import numpy as np

from .matching import AugmentedMs, Lem
from .textcore import Text


def brute_suffix_sort(text: Text) -> np.ndarray:
    """Suffix array by direct comparison sort of suffix byte slices
    (1-based, padded); the independent oracle for SA construction."""
    tb = text.dense_bytes()
    order = sorted(range(1, text.n + 1), key=lambda i: tb[i - 1 :])
    sa = np.zeros(text.n + 1, dtype=np.int64)
    sa[1:] = order
    return sa


def _match_matrix(pattern: np.ndarray, text: Text) -> np.ndarray:
    """M[f, u] = length of the maximal run of equal symbols starting at
    pattern position f and text position u (both 1-based)."""
    m = len(pattern) - 1
    n = text.n
    sym = text.symbols[1:].astype(np.int16)  # 0-based
    mat = np.zeros((m + 2, n + 2), dtype=np.int64)
    for f in range(m, 0, -1):
        eq = sym == np.int16(pattern[f])
        mat[f, 1 : n + 1] = eq * (1 + mat[f + 1, 2 : n + 2])
    return mat


def naive_lems(pattern: bytes, text: Text, min_len: int) -> set[Lem]:
    """All matches of length >= min_len that cannot be simultaneously
    extended in the pattern and the text, by full enumeration."""
    pat = text.encode_pattern(pattern)
    m = len(pattern)
    mat = _match_matrix(pat, text)
    sym = text.symbols
    out: set[Lem] = set()
    for f in range(1, m + 1):
        row = mat[f]
        for u in np.nonzero(row[1 : text.n + 1] >= min_len)[0] + 1:
            if f == 1 or u == 1 or pat[f - 1] != sym[u - 1]:
                out.add(Lem(f, int(u), int(row[u])))
    return out


def naive_mems(pattern: bytes, text: Text) -> set[Lem]:
    """All maximal exact matches (not extendable left or right in the
    pattern), one triple per text occurrence."""
    pat = text.encode_pattern(pattern)
    m = len(pattern)
    mat = _match_matrix(pat, text)
    best = mat[1 : m + 1, 1 : text.n + 1].max(axis=1, initial=0)
    out: set[Lem] = set()
    for f in range(1, m + 1):
        ln = int(best[f - 1])
        if ln == 0:
            continue
        if f > 1 and best[f - 2] >= ln + 1:
            continue  # extendable left in the pattern
        for u in np.nonzero(mat[f, 1 : text.n + 1] == ln)[0] + 1:
            out.add(Lem(f, int(u), ln))
    return out


def naive_matching_statistics(pattern: bytes, text: Text) -> AugmentedMs:
    """Direct per-position matching statistics; ties broken to the
    smallest SA row.  Interval fields are left at 0."""
    pat = text.encode_pattern(pattern)
    m = len(pattern)
    mat = _match_matrix(pat, text)
    sa = brute_suffix_sort(text)
    zeros = np.zeros(m + 1, dtype=np.int64)
    ms = AugmentedMs(m, zeros.copy(), zeros.copy(), zeros.copy(),
                     zeros.copy(), zeros.copy(), zeros.copy())
    for f in range(1, m + 1):
        best_len = 0
        best_row = 0
        for row in range(1, text.n + 1):
            ln = int(mat[f, sa[row]])
            if ln > best_len:
                best_len = ln
                best_row = row
        if best_len:
            ms.len_[f] = best_len
            ms.row[f] = best_row
            ms.suff[f] = sa[best_row]
    return ms


def naive_occurrences(pattern: bytes, text: Text) -> list[int]:
    """Sorted 1-based start positions of all occurrences of the pattern."""
    pat = text.encode_pattern(pattern).tobytes()[1:]
    if not pat:
        return []
    tb = text.dense_bytes()
    out = []
    at = tb.find(pat)
    while at != -1:
        out.append(at + 1)
        at = tb.find(pat, at + 1)
    return out
