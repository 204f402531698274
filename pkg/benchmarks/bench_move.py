#!/usr/bin/env python3
"""Benchmark the move-query kernels: compiled extension vs pure Python.

Builds an index over a synthetic repetitive text, then times raw kernel
batches for every available backend, plus index-level queries with the
backend selected for this process (set LEMIDX_PURE_PYTHON=1 to force the
fallback and compare full-query numbers across two runs).
"""

import argparse
import random
import time

import numpy as np

from lemidx import kernels
from lemidx.matching import long_lem_query_direct
from lemidx.optbwtrl import build_optbwtrl
from lemidx.textcore import build_rlbwt, build_suffix_structures, validate_text


def synthetic_text(n: int, seed: int, mutation: float = 0.002) -> bytes:
    rng = random.Random(seed)
    base = bytes(rng.choice(b"acgt") for _ in range(500))
    rep = (base * (n // len(base) + 1))[:n]
    return bytes(b if rng.random() > mutation else rng.choice(b"acgt") for b in rep)


def time_it(fn, repeat: int = 3) -> float:
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("-n", type=int, default=1 << 17, help="text length (default 131072)")
    ap.add_argument("--queries", type=int, default=1_000_000)
    ap.add_argument("--seed", type=int, default=42)
    args = ap.parse_args()

    raw = synthetic_text(args.n, args.seed)
    t0 = time.perf_counter()
    text = validate_text(raw)
    s = build_suffix_structures(text)
    rl = build_rlbwt(s)
    ix = build_optbwtrl(s, rl, d=2, validate=False)
    build_secs = time.perf_counter() - t0
    print(f"text n={text.n}  runs r={ix.r}  n/r={text.n / ix.r:.1f}  "
          f"build {build_secs:.2f}s  process backend: {kernels.BACKEND}")

    ms = ix.f_lf
    rng = np.random.default_rng(args.seed)
    ii = rng.integers(1, ms.n + 1, args.queries).astype(np.int64)
    xx = np.searchsorted(ms.p[1 : ms.k + 1], ii, side="right").astype(np.int64)
    out_pos = np.empty(args.queries, dtype=np.int64)
    out_iv = np.empty(args.queries, dtype=np.int64)
    out_steps = np.empty(args.queries, dtype=np.int64)

    print(f"\n{args.queries} random LF move queries (batch kernel):")
    results = {}
    for name, mod in kernels.available_backends().items():
        secs = time_it(lambda m=mod: m.batch_move(
            ms.p, ms.q, ms.dest, ii, xx, out_pos, out_iv, out_steps))
        results[name] = secs
        print(f"  {name:>9}: {secs:8.3f}s  ({args.queries / secs / 1e6:6.2f} Mq/s)"
              f"  max scan steps {int(out_steps.max())}")
    if len(results) == 2:
        print(f"  speedup compiled vs pure: {results['pure'] / results['compiled']:.1f}x")

    walk_len = min(text.n - 1, 200_000)
    out = np.empty(walk_len, dtype=np.int64)
    start = int(s.sa[1])
    x0 = ix.f_phi_inv.interval_of(start)
    print(f"\n{walk_len}-step phi-inverse walk (locate-style enumeration):")
    for name, mod in kernels.available_backends().items():
        secs = time_it(lambda m=mod: m.walk_moves(
            ix.f_phi_inv.p, ix.f_phi_inv.q, ix.f_phi_inv.dest, start, x0, walk_len, out))
        print(f"  {name:>9}: {secs:8.3f}s  ({walk_len / secs / 1e6:6.2f} Msteps/s)")

    pat = raw[1000:1200]
    occ = ix.count(pat)
    secs = time_it(lambda: ix.locate(pat))
    print(f"\nindex-level queries with the {kernels.BACKEND} backend:")
    print(f"  locate ({occ} occurrences): {secs * 1e3:8.2f} ms")
    prng = random.Random(args.seed + 1)
    lems_pat = bytes(b if prng.random() > 0.01 else prng.choice(b"acgt")
                     for b in raw[5000:7000])
    t0 = time.perf_counter()
    found = long_lem_query_direct(ix, lems_pat, 50)
    secs = time.perf_counter() - t0
    print(f"  long_lem_query_direct (m=2000, L=50, {len(found)} matches): {secs * 1e3:8.2f} ms")


if __name__ == "__main__":
    main()
