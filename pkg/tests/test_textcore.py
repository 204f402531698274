import random

import numpy as np
import pytest

from conftest import FIG1, build_all, random_text
from lemidx.errors import TextError
from lemidx.oracles import brute_suffix_sort
from lemidx.textcore import (SENTINEL, SEPARATOR, text_from_records,
                             validate_text)


class TestValidateText:
    def test_fig1(self, fig1_text):
        assert fig1_text.n == 20
        assert fig1_text.sigma == 5  # $, i, m, p, s
        assert fig1_text.symbols[20] == SENTINEL
        assert fig1_text.alphabet.tobytes() == b"$imps"

    def test_sentinel_appended(self):
        t = validate_text(b"a")
        assert t.n == 2
        assert t.symbols[2] == SENTINEL

    def test_trailing_sentinel_kept(self):
        assert validate_text(b"ab$").n == 3

    def test_embedded_sentinel_rejected(self):
        with pytest.raises(TextError):
            validate_text(b"ab$c")

    def test_empty_rejected(self):
        with pytest.raises(TextError):
            validate_text(b"")

    def test_dense_remap_preserves_order(self):
        t = validate_text(b"ca!b")
        # '!' < 'a' < 'b' < 'c' in byte order, sentinel is 0
        assert t.symbols[1:5].tolist() == [4, 2, 1, 3]

    def test_encode_pattern_absent_bytes_never_match(self, fig1_text):
        pat = fig1_text.encode_pattern(b"izq")
        assert pat[1] == fig1_text.symbols[2]  # 'i'
        assert pat[2] not in fig1_text.symbols[1:]
        assert pat[3] not in fig1_text.symbols[1:]


class TestRecords:
    def test_separator_between_records(self):
        t = text_from_records([b"ac", b"gg"])
        assert t.n == 6  # ac | gg $
        assert t.symbols[3] == SEPARATOR
        assert t.symbols[6] == SENTINEL

    def test_single_record_reserves_no_separator(self):
        t = text_from_records([b"acgt"])
        assert t.alphabet[SEPARATOR] == ord("a")  # dense 1 is a real letter
        assert t.n == 5

    def test_empty_records_dropped(self):
        assert text_from_records([b"", b"ac", b""]).n == 3

    def test_records_with_sentinel_rejected(self):
        with pytest.raises(TextError):
            text_from_records([b"a$b", b"c"])


class TestSuffixStructures:
    def test_fig1_spot_values(self, fig1_structs):
        s = fig1_structs
        assert s.sa[10] == 9 and s.lcp[10] == 6 and s.plcp[9] == 6
        assert s.phi[9] == 1 and s.phi_inv[1] == 9 and s.lf[9] == 1
        assert s.sa[1] == 20 and s.lcp[1] == 0

    def test_matches_brute_force_sort(self, fig1_text, fig1_structs):
        assert np.array_equal(fig1_structs.sa, brute_suffix_sort(fig1_text))

    def test_type_invariants_fig1(self, fig1_structs):
        s = fig1_structs
        n = s.n
        assert np.array_equal(s.isa[s.sa[1:]], np.arange(1, n + 1))
        assert np.array_equal(s.phi[s.phi_inv[1:]], np.arange(1, n + 1))
        assert np.array_equal(s.plcp[s.sa[1:]], s.lcp[1:])

    @pytest.mark.parametrize("seed,max_n", [(0, 300), (1, 300), (2, 300), (3, 300),
                                            (4, 300), (5, 300), (6, 2000), (7, 2000)])
    def test_random_texts_match_brute_force(self, seed, max_n):
        rng = random.Random(seed)
        letters = rng.choice([b"ab", b"acgt", b"abcdefghijklmnop"])
        text, s, _, _ = build_all(random_text(rng, max_n, letters))
        n = text.n
        sa = brute_suffix_sort(text)
        assert np.array_equal(s.sa, sa)
        tb = text.dense_bytes()

        def lcp_pair(a, b):
            x, y = tb[a - 1 :], tb[b - 1 :]
            k = 0
            while k < min(len(x), len(y)) and x[k] == y[k]:
                k += 1
            return k

        for i in range(2, n + 1):
            assert s.lcp[i] == lcp_pair(int(sa[i]), int(sa[i - 1]))
            assert s.phi[sa[i]] == sa[i - 1]
        for i in range(1, n + 1):
            assert s.plcp[sa[i]] == s.lcp[i]
            prev = sa[i] - 1 if sa[i] > 1 else n
            assert s.lf[i] == s.isa[prev]

    def test_bwt_definition(self, fig1_text, fig1_structs):
        s = fig1_structs
        for i in range(1, 21):
            prev = s.sa[i] - 1 if s.sa[i] > 1 else 20
            assert s.bwt[i] == fig1_text.symbols[prev]


class TestRlbwt:
    def test_fig1_runs(self, fig1_text, fig1_structs, fig1_rlbwt):
        rl = fig1_rlbwt
        bwt = fig1_text.alphabet[fig1_structs.bwt[1:]].tobytes()
        assert bwt == b"ipssssmm$spissisiiii"
        assert rl.r == 12
        assert rl.starts[1:].tolist() == [1, 2, 3, 7, 9, 10, 11, 12, 13, 15, 16, 17]

    def test_aaaa(self):
        _, s, rl, _ = build_all(b"aaaa")
        bwt = s.bwt[1:].tolist()
        runs = 1 + sum(1 for i in range(1, len(bwt)) if bwt[i] != bwt[i - 1])
        assert rl.r == runs == 2  # "a...a$" sorts to bwt "a$aaaa"-style with 2 runs

    def test_single_symbol_text(self):
        _, _, rl, _ = build_all(b"a")
        assert rl.r == 2  # bwt is "a$"

    def test_expand_reproduces_bwt(self, fig1_structs, fig1_rlbwt):
        assert np.array_equal(fig1_rlbwt.expand(), fig1_structs.bwt)

    @pytest.mark.parametrize("seed", range(5))
    def test_expand_random(self, seed):
        rng = random.Random(100 + seed)
        _, s, rl, _ = build_all(random_text(rng, 400))
        assert np.array_equal(rl.expand(), s.bwt)
        chars = rl.chars[1:]
        assert all(chars[i] != chars[i - 1] for i in range(1, len(chars)))


class TestRoundTrip:
    @pytest.mark.parametrize("raw", [FIG1, b"a", b"abcabc", b"banana"])
    def test_lf_inversion_reconstructs_text(self, raw):
        text, s, _, _ = build_all(raw)
        n = text.n
        # walk LF from the sentinel row, reading the text right to left
        row = 1
        rebuilt = bytearray()
        for _ in range(n):
            rebuilt.append(int(s.bwt[row]))
            row = int(s.lf[row])
        rebuilt.reverse()
        dense = text.dense_bytes()
        assert bytes(rebuilt) == dense[-1:] + dense[:-1]
