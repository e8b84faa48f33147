import random

import numpy as np
import pytest

from sagp.core import AugmentedText, Text
from sagp.text_index import (
    RmqTable,
    build_aug_index,
    build_index,
    build_plv_nlv,
    build_rmq,
    op_map,
    range_lcp,
)

from conftest import prep, random_string


def naive_lcp(seq, i, j):
    m = len(seq)
    l = 0
    while i + l < m and j + l < m and seq[i + l] == seq[j + l]:
        l += 1
    return l


class TestBuildIndex:
    def test_paper_isa(self):
        p = prep("acacabaabca")
        assert p.idx.isa[10] == 19

    def test_single_char_sentinel(self):
        idx = build_index([2, 0])
        assert idx.sa[1:].tolist() == [2, 1]

    def test_lcp_matches_bruteforce(self):
        rng = random.Random(3)
        for _ in range(40):
            s = random_string(rng, 60, 3)
            idx = build_aug_index(AugmentedText(Text(s)))
            seq = idx.subject[1:].tolist()
            for r in range(2, idx.m + 1):
                want = naive_lcp(seq, idx.sa[r - 1] - 1, idx.sa[r] - 1)
                assert idx.lcp[r] == want

    def test_sa_is_sorted_permutation(self):
        rng = random.Random(4)
        cases = [random_string(rng, 200, 4) for _ in range(10)]
        cases += ["a" * 300, "ab" * 150, "abc" * 100]
        for s in cases:
            idx = build_aug_index(AugmentedText(Text(s)))
            assert sorted(idx.sa[1:].tolist()) == list(range(1, idx.m + 1))
            seq = idx.subject
            for r in range(2, idx.m + 1):
                a, b = idx.sa[r - 1], idx.sa[r]
                assert tuple(seq[a : idx.m + 1]) < tuple(seq[b : idx.m + 1])
            assert all(idx.isa[idx.sa[r]] == r for r in range(1, idx.m + 1))

    def test_rejects_bad_input(self):
        with pytest.raises(ValueError):
            build_index([])
        with pytest.raises(ValueError):
            build_index([2, 0, 0])  # terminal not unique
        with pytest.raises(ValueError):
            build_index([0, 2])  # terminal not minimal


class TestRangeLcp:
    def test_paper_value(self):
        p = prep("acacabaabca")
        # pivot 7: query suffix rank 19, active neighbour above at rank 20
        assert range_lcp(p.idx, p.rmq, 19, 20) == 2

    def test_identity(self):
        p = prep("abracadabra")
        for r in (1, 5, p.idx.m):
            assert range_lcp(p.idx, p.rmq, r, r) == p.idx.m - p.idx.sa[r] + 1

    def test_symmetry_and_bruteforce(self):
        rng = random.Random(5)
        for _ in range(20):
            s = random_string(rng, 40, 3)
            p = prep(s)
            seq = p.idx.subject[1:].tolist()
            m = p.idx.m
            for _ in range(60):
                a, b = rng.randint(1, m), rng.randint(1, m)
                got = range_lcp(p.idx, p.rmq, a, b)
                assert got == range_lcp(p.idx, p.rmq, b, a)
                if a != b:
                    assert got == naive_lcp(seq, p.idx.sa[a] - 1, p.idx.sa[b] - 1)

    def test_monotone_prefix_property(self):
        rng = random.Random(6)
        p = prep(random_string(rng, 50, 2))
        m = p.idx.m
        for _ in range(200):
            a, b, c = sorted(rng.randint(1, m) for _ in range(3))
            lab = range_lcp(p.idx, p.rmq, a, b)
            lbc = range_lcp(p.idx, p.rmq, b, c)
            lac = range_lcp(p.idx, p.rmq, a, c)
            assert lac >= min(lab, lbc)

    def test_rank_out_of_range(self):
        p = prep("abc")
        with pytest.raises(IndexError):
            range_lcp(p.idx, p.rmq, 0, 1)
        with pytest.raises(IndexError):
            range_lcp(p.idx, p.rmq, 1, p.idx.m + 1)


class TestRmqTable:
    def test_returns_an_argmin(self):
        rng = random.Random(7)
        for _ in range(30):
            m = rng.randint(1, 300)
            vals = np.zeros(m + 1, np.int32)
            vals[1:] = [rng.randint(0, 9) for _ in range(m)]
            table = RmqTable(vals, m)
            for _ in range(50):
                i = rng.randint(1, m)
                j = rng.randint(i, m)
                k = table.query(i, j)
                assert i <= k <= j
                assert vals[k] == vals[i : j + 1].min()

    def test_bad_range(self):
        table = RmqTable(np.zeros(5, np.int32), 4)
        with pytest.raises(IndexError):
            table.query(3, 2)


class TestOpMap:
    def test_edges(self):
        assert op_map(11, 13) == 11
        assert op_map(11, 23) == 1

    def test_outside_reversed_segment(self):
        with pytest.raises(ValueError):
            op_map(11, 12)  # $ position
        with pytest.raises(ValueError):
            op_map(11, 24)  # '#' position
        with pytest.raises(ValueError):
            op_map(11, 5)  # forward copy


class TestPlvNlv:
    def test_paper_example(self):
        p = prep("ccabaabc")
        pn = build_plv_nlv(p.rev_idx)
        j = int(p.rev_idx.isa[4])
        assert j == 3
        assert p.rev_idx.sa[pn.plv[j]] == 9
        assert p.rev_idx.sa[pn.nlv[j]] == 6

    def test_global_max_has_no_neighbours(self):
        rng = random.Random(8)
        for _ in range(30):
            p = prep(random_string(rng, 40, 3))
            pn = build_plv_nlv(p.rev_idx)
            m = p.rev_idx.m
            for j in range(1, m + 1):
                missing_both = pn.plv[j] == 0 and pn.nlv[j] == m + 1
                assert missing_both == (p.rev_idx.sa[j] == m)

    def test_matches_quadratic_scan(self):
        rng = random.Random(9)
        for _ in range(60):
            p = prep(random_string(rng, 50, 3))
            idx = p.rev_idx
            pn = build_plv_nlv(idx)
            m = idx.m
            for j in range(1, m + 1):
                want_p = 0
                for jj in range(j - 1, 0, -1):
                    if idx.sa[jj] > idx.sa[j]:
                        want_p = jj
                        break
                want_n = m + 1
                for jj in range(j + 1, m + 1):
                    if idx.sa[jj] > idx.sa[j]:
                        want_n = jj
                        break
                assert pn.plv[j] == want_p and pn.nlv[j] == want_n
