"""Pure-Python move-query kernels; same contracts as the compiled ones.

Arrays are 1-based with ``p[k+1] = n+1`` so the forward scan needs no
bounds check.  Lists are preferred for scalar calls (faster indexing than
numpy scalars); the batch entry points accept numpy arrays.
"""

from __future__ import annotations


def move_scan(p, q, dest, i, x):
    """One move query: returns (mapped position, containing interval,
    scan steps taken from the destination pointer)."""
    pos = q[x] + (i - p[x])
    y = dest[x]
    steps = 0
    while p[y + 1] <= pos:
        y += 1
        steps += 1
    return pos, y, steps


def walk_moves(p, q, dest, pos, x, count, out):
    """Apply the bijection ``count`` times, recording each successive
    position in ``out``; returns (final pos, final interval, max steps)."""
    max_steps = 0
    for t in range(count):
        pos = q[x] + (pos - p[x])
        y = dest[x]
        steps = 0
        while p[y + 1] <= pos:
            y += 1
            steps += 1
        if steps > max_steps:
            max_steps = steps
        x = y
        out[t] = pos
    return pos, x, max_steps


def batch_move(p, q, dest, ii, xx, out_pos, out_iv, out_steps):
    """Independent move queries for every (ii[t], xx[t]) pair."""
    pl = p.tolist() if hasattr(p, "tolist") else p
    ql = q.tolist() if hasattr(q, "tolist") else q
    dl = dest.tolist() if hasattr(dest, "tolist") else dest
    for t, (i, x) in enumerate(zip(ii.tolist(), xx.tolist())):
        pos = ql[x] + (i - pl[x])
        y = dl[x]
        steps = 0
        while pl[y + 1] <= pos:
            y += 1
            steps += 1
        out_pos[t] = pos
        out_iv[t] = y
        out_steps[t] = steps
