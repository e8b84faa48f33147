import itertools
import random

import numpy as np

from sagp.core import Text
from sagp.oracle import brute_force_pals
from sagp.palindromes import compute_buckets, compute_pals

from conftest import random_string


class TestComputePals:
    def test_examples(self):
        assert compute_pals(Text("acacabaabca"))[7] == 2
        p = compute_pals(Text("baaabaabaacbaabaabac"))
        assert p[13] == 2
        assert p[6] == 4
        assert compute_pals(Text("abcd")).pals[1:].tolist() == [0, 0, 0, 0]

    def test_last_position_zero(self):
        rng = random.Random(0)
        for _ in range(20):
            t = Text(random_string(rng, 30, 2))
            assert compute_pals(t)[t.n] == 0

    def test_matches_expansion_oracle_exhaustive(self):
        for n in range(1, 11):
            for tup in itertools.product("abc", repeat=n):
                t = Text("".join(tup))
                assert np.array_equal(compute_pals(t).pals, brute_force_pals(t))

    def test_matches_expansion_oracle_random(self):
        rng = random.Random(1)
        for _ in range(100):
            t = Text(random_string(rng, 256, rng.choice((1, 2, 3, 4))))
            assert np.array_equal(compute_pals(t).pals, brute_force_pals(t))

    def test_radius_properties(self):
        rng = random.Random(2)
        for _ in range(50):
            t = Text(random_string(rng, 60, 2))
            pals = compute_pals(t)
            r = t.ranks
            for i in range(1, t.n + 1):
                k = pals[i]
                for j in range(1, k + 1):
                    assert r[i - j + 1] == r[i + j]
                if k >= 0:
                    blocked = i - k == 0 or i + k == t.n or r[i - k] != r[i + k + 1]
                    assert blocked


class TestBuckets:
    def test_example(self):
        pals = compute_pals(Text("acacabaabca"))
        u = compute_buckets(pals)
        assert u[6] == [2]
        assert all(not u[b] for b in range(1, 12) if b != 6)

    def test_all_zero(self):
        pals = compute_pals(Text("abcd"))
        u = compute_buckets(pals)
        assert all(not u[b] for b in range(1, 5))

    def test_roundtrip_and_count(self):
        rng = random.Random(3)
        for _ in range(80):
            t = Text(random_string(rng, 60, 3))
            pals = compute_pals(t)
            u = compute_buckets(pals)
            rebuilt = set()
            for b in range(1, t.n + 1):
                for r in u[b]:
                    assert r >= 1
                    assert pals[b + r - 1] == r
                    rebuilt.add((b + r - 1, r))
            want = {(i, pals[i]) for i in range(1, t.n + 1) if pals[i] > 0}
            assert rebuilt == want
            assert len(u.radii) == len(want)
