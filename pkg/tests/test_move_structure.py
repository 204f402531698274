import math
import random

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import build_all, random_text
from lemidx.errors import IntervalSequenceError, LemIndexError
from lemidx.move_structure import (IntervalSequence, balance,
                                   build_move_structure, disjoint_violation,
                                   validate_disjoint)

FIG1_IPHI = [(1, 10), (2, 13), (6, 4), (8, 12), (9, 1), (12, 6), (15, 17),
             (16, 19), (17, 18), (18, 9), (19, 20), (20, 11)]


@st.composite
def interval_sequences(draw):
    """A valid disjoint interval sequence: the conserved-interval
    decomposition of a random permutation."""
    n = draw(st.integers(1, 64))
    perm = draw(st.permutations(range(1, n + 1)))
    pairs = []
    start = 0
    for i in range(1, n):
        if perm[i] != perm[i - 1] + 1:
            pairs.append((start + 1, perm[start]))
            start = i
    pairs.append((start + 1, perm[start]))
    return IntervalSequence(pairs, n), perm


class TestValidate:
    def test_two_block_swap_ok(self):
        assert disjoint_violation(IntervalSequence([(1, 3), (3, 1)], 4)) is None

    def test_overlap_reported(self):
        report = disjoint_violation(IntervalSequence([(1, 2), (3, 1)], 4))
        assert report is not None and "overlap" in report

    def test_fig1_phi_sequence_ok(self):
        validate_disjoint(IntervalSequence(FIG1_IPHI, 20))

    def test_first_start_not_one(self):
        assert "not 1" in disjoint_violation(IntervalSequence([(2, 1)], 4))

    def test_not_increasing(self):
        report = disjoint_violation(IntervalSequence([(1, 3), (1, 1)], 4))
        assert "increasing" in report

    def test_gap_reported(self):
        report = disjoint_violation(IntervalSequence([(1, 4), (4, 2)], 6))
        assert report is not None

    def test_validate_raises(self):
        with pytest.raises(IntervalSequenceError):
            validate_disjoint(IntervalSequence([(1, 2), (3, 1)], 4))


class TestBalance:
    @pytest.mark.parametrize("d", [2, 3, 5])
    def test_identity_unchanged(self, d):
        seq = IntervalSequence([(1, 1)], 6)
        assert balance(seq, d).pairs == [(1, 1)]

    def test_symmetric_swap_unchanged(self):
        seq = IntervalSequence([(1, 5), (5, 1)], 8)
        assert balance(seq, 2).pairs == [(1, 5), (5, 1)]

    def test_forced_split(self):
        # output [4,7] of the first pair holds input starts 5, 6, 7; the
        # first split adds start 4, which re-violates the shrunk output
        seq = IntervalSequence([(1, 4), (5, 1), (6, 2), (7, 3)], 7)
        bal = balance(seq, 2)
        assert (3, 6) in bal.pairs and (4, 7) in bal.pairs
        assert bal.k == 6 <= 2 * seq.k
        validate_disjoint(bal)
        assert [bal.apply(i) for i in range(1, 8)] == [seq.apply(i) for i in range(1, 8)]

    def test_rejects_invalid(self):
        with pytest.raises(IntervalSequenceError):
            balance(IntervalSequence([(1, 2), (3, 1)], 4), 2)

    def test_rejects_bad_d(self):
        with pytest.raises(ValueError):
            balance(IntervalSequence([(1, 1)], 4), 1)

    @settings(max_examples=150, deadline=None)
    @given(data=interval_sequences(), d=st.integers(2, 4))
    def test_bijection_preserved_and_bounded(self, data, d):
        seq, perm = data
        bal = balance(seq, d)
        validate_disjoint(bal)
        assert bal.k <= math.ceil(seq.k * d / (d - 1))
        starts = [p for p, _ in bal.pairs]
        for x, (p, q) in enumerate(bal.pairs, start=1):
            length = (bal.pairs[x][0] if x < bal.k else bal.n + 1) - p
            inside = sum(1 for s in starts if q <= s <= q + length - 1)
            assert inside <= d
        for i in range(1, seq.n + 1):
            assert bal.apply(i) == perm[i - 1] == seq.apply(i)


class TestBuildMoveStructure:
    def test_payload_resampled_at_split(self):
        # the forced split at offset 2 resamples start value 4 to 2
        seq = IntervalSequence([(1, 4), (5, 1), (6, 2), (7, 3)], 7)
        ms = build_move_structure(seq, 2, payload=[4, 3, 2, 1])
        x = ms.interval_of(3)
        assert ms.start(x) == 3
        assert ms.payload[x] == 2

    def test_payload_length_mismatch(self):
        with pytest.raises(LemIndexError):
            build_move_structure(IntervalSequence([(1, 1)], 4), 2, payload=[1, 2])

    def test_payload_absent_rejected(self):
        ms = build_move_structure(IntervalSequence([(1, 1)], 4), 2)
        with pytest.raises(LemIndexError):
            ms.payload_query(1, 1)

    def test_size_bound_d2_on_lf(self, fig1_index):
        for ms in (fig1_index.f_lf, fig1_index.f_phi, fig1_index.f_phi_inv):
            assert ms.k <= 2 * ms.pre_k


class TestQueries:
    def test_fig1_lf_move(self, fig1_index):
        ms = fig1_index.f_lf
        x = ms.interval_of(4)
        res = ms.move_query(4, x)
        assert res.pos == 14
        assert ms.start(res.interval) <= 14 < ms.p[res.interval + 1]

    def test_fig1_sentinel_row(self, fig1_index):
        ms = fig1_index.f_lf
        assert ms.move_query(9, ms.interval_of(9)).pos == 1

    def test_interval_start_maps_to_q(self, fig1_index):
        ms = fig1_index.f_lf
        for x in range(1, ms.k + 1):
            assert ms.move_query(ms.start(x), x).pos == ms.q[x]

    def test_fig1_plcp_payload(self, fig1_index):
        ms = fig1_index.f_phi
        x = ms.interval_of(2)
        assert ms.start(x) == 2 and ms.payload[x] == 4  # PLCP[2]
        assert ms.payload_query(4, ms.interval_of(4)) == 2
        assert ms.payload_query(5, ms.interval_of(5)) == 1
        assert ms.payload_query(2, x) == 4

    def test_payload_linearity(self, fig1_index):
        ms = fig1_index.f_phi
        for x in range(1, ms.k + 1):
            for i in range(int(ms.p[x]), int(ms.p[x + 1]) - 1):
                assert ms.payload_query(i + 1, x) == ms.payload_query(i, x) - 1

    def test_interval_of_bounds(self, fig1_index):
        ms = fig1_index.f_lf
        assert ms.interval_of(1) == 1
        assert ms.interval_of(ms.n) == ms.k
        assert ms.start(ms.interval_of(5)) == 3
        with pytest.raises(LemIndexError):
            ms.interval_of(0)
        with pytest.raises(LemIndexError):
            ms.interval_of(ms.n + 1)

    @pytest.mark.parametrize("d", [2, 3, 4])
    def test_scan_bound_random_stress(self, d):
        rng = random.Random(d * 17)
        _, _, _, ix = build_all(random_text(rng, 600), d=d)
        for ms in (ix.f_lf, ix.f_phi, ix.f_phi_inv):
            nq = 4000
            gen = np.random.default_rng(d)
            ii = gen.integers(1, ms.n + 1, nq).astype(np.int64)
            xx = np.searchsorted(ms.p[1 : ms.k + 1], ii, side="right").astype(np.int64)
            from lemidx import kernels
            out = [np.empty(nq, dtype=np.int64) for _ in range(3)]
            kernels.batch_move(ms.p, ms.q, ms.dest, ii, xx, *out)
            assert out[2].max() <= d  # <= d+1 intervals visited per query
