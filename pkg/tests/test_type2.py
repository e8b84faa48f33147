import random

import numpy as np

from sagp.core import Text
from sagp.oracle import brute_force_findr, brute_force_sagps
from sagp.type2 import build_findr, find_type2

from conftest import prep, quads, random_string


class TestFindR:
    def test_table_example(self):
        p = prep("dbbaacbcbad")
        assert p.findr.findr[1:].tolist() == [3, 3, 3, 5, 5, 7, 7, 8, 9, 10, 11]

    def test_all_distinct(self):
        p = prep("abcde")
        assert p.findr.findr[1:].tolist() == [6] * 5  # n+1 encodes +inf

    def test_matches_definitional_oracle(self):
        rng = random.Random(0)
        for _ in range(200):
            s = random_string(rng, 64, rng.choice((1, 2, 3, 4)))
            p = prep(s)
            assert np.array_equal(p.findr.findr, brute_force_findr(p.text)), s


class TestFindType2:
    def test_pivot6(self):
        p = prep("baaabaabaacbaabaabac")
        got = find_type2(p.text, p.pals, p.tables, p.findr)
        assert (6, 1, 1, 3) in quads(got)

    def test_gap_siblings(self):
        p = prep("ccabcabbace")
        got = [s for s in find_type2(p.text, p.pals, p.tables, p.findr) if s.pivot == 7]
        assert quads(got) == {(7, 1, 4, 2), (7, 1, 3, 2)}

    def test_forced_single(self):
        p = prep("aaaaa")
        got = [s for s in find_type2(p.text, p.pals, p.tables, p.findr) if s.pivot == 3]
        assert quads(got) == {(3, 1, 1, 1)}

    def test_oracle_equivalence_and_invariants(self):
        rng = random.Random(1)
        for _ in range(150):
            s = random_string(rng, 64, rng.choice((1, 2, 3, 4)))
            p = prep(s)
            got = find_type2(p.text, p.pals, p.tables, p.findr)
            rep = brute_force_sagps(p.text)
            want = {q for q in quads(rep.all_sagps()) if rep.kinds[q[0]] == 2}
            assert quads(got) == want, s
            per_pivot = {}
            for item in got:
                assert item.w_len == 1
                assert item.u_len < p.pals[item.pivot]
                per_pivot.setdefault(item.pivot, []).append(item)
            for pivot, items in per_pivot.items():
                # widest gap reaches back to the leftmost occurrence
                r = pivot - items[0].u_len
                c = p.text.ranks[r]
                lm = int(p.tables.lmost[c])
                assert max(x.gap_len for x in items) == r - lm
