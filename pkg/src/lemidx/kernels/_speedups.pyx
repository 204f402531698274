# cython: language_level=3, boundscheck=False, wraparound=False, initializedcheck=False
"""Compiled move-query kernels; drop-in replacements for ``_pure``."""


def move_scan(long long[::1] p, long long[::1] q, long long[::1] dest,
              long long i, long long x):
    cdef long long pos = q[x] + (i - p[x])
    cdef long long y = dest[x]
    cdef long long steps = 0
    while p[y + 1] <= pos:
        y += 1
        steps += 1
    return pos, y, steps


def walk_moves(long long[::1] p, long long[::1] q, long long[::1] dest,
               long long pos, long long x, long long count, long long[::1] out):
    cdef long long max_steps = 0
    cdef long long steps, y, t
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


def batch_move(long long[::1] p, long long[::1] q, long long[::1] dest,
               long long[::1] ii, long long[::1] xx,
               long long[::1] out_pos, long long[::1] out_iv, long long[::1] out_steps):
    cdef Py_ssize_t t
    cdef long long i, x, pos, y, steps
    for t in range(ii.shape[0]):
        i = ii[t]
        x = xx[t]
        pos = q[x] + (i - p[x])
        y = dest[x]
        steps = 0
        while p[y + 1] <= pos:
            y += 1
            steps += 1
        out_pos[t] = pos
        out_iv[t] = y
        out_steps[t] = steps
