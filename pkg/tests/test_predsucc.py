import bisect
import random

import pytest

from sagp.predsucc import BACKENDS, OrderedSetBaseline, VebTree, YFastTrie, make_backend


def model_pred(sl, x):
    i = bisect.bisect_left(sl, x)
    return sl[i - 1] if i > 0 else None


def model_succ(sl, x):
    i = bisect.bisect_right(sl, x)
    return sl[i] if i < len(sl) else None


@pytest.mark.parametrize("name", sorted(BACKENDS))
class TestContract:
    def test_basic_queries(self, name):
        s = make_backend(name, 20, capacity=8)
        for v in (3, 9, 14):
            s.insert(v)
        assert s.predecessor(10) == 9
        assert s.successor(10) == 14
        assert s.predecessor(3) is None
        assert s.successor(14) is None
        assert s.predecessor(4) == 3
        assert s.successor(1) == 3

    def test_strictness(self, name):
        s = make_backend(name, 10, capacity=4)
        s.insert(3)
        assert s.predecessor(3) is None
        assert s.successor(3) is None

    def test_insert_idempotent(self, name):
        s = make_backend(name, 100, capacity=16)
        for _ in range(5):
            s.insert(42)
        assert s.predecessor(43) == 42
        assert s.successor(41) == 42
        assert s.predecessor(42) is None

    def test_universe_errors(self, name):
        s = make_backend(name, 16, capacity=4)
        for bad in (0, -3, 17):
            with pytest.raises(ValueError):
                s.insert(bad)
            with pytest.raises(ValueError):
                s.predecessor(bad)
            with pytest.raises(ValueError):
                s.successor(bad)

    def test_empty(self, name):
        s = make_backend(name, 8, capacity=4)
        assert s.predecessor(5) is None
        assert s.successor(5) is None

    def test_model_equivalence(self, name):
        rng = random.Random(hash(name) & 0xFFFF)
        for universe in (1, 2, 7, 64, 1 << 10, 1 << 16):
            s = make_backend(name, universe, capacity=300)
            sl = []
            for _ in range(400):
                x = rng.randint(1, universe)
                op = rng.random()
                if op < 0.4:
                    s.insert(x)
                    if x not in sl:
                        bisect.insort(sl, x)
                elif op < 0.7:
                    assert s.predecessor(x) == model_pred(sl, x)
                else:
                    assert s.successor(x) == model_succ(sl, x)


class TestSpace:
    def test_veb_space_tracks_universe(self):
        small = VebTree(1 << 10)
        big = VebTree(1 << 16)
        assert big.node_count() > small.node_count()
        # O(U): node count within a small constant of the universe
        assert big.node_count() <= 4 * (1 << 16)

    def test_yfast_space_tracks_elements(self):
        rng = random.Random(3)
        t = YFastTrie(1 << 20, capacity=2000)
        xs = rng.sample(range(1, 1 << 20), 1000)
        for x in xs:
            t.insert(x)
        # elements + trie-over-representatives stay near-linear in |S|
        k = t.k
        assert t.structural_size() <= 4 * len(xs) + 8 * k

    def test_baseline_nodes_equal_elements(self):
        s = OrderedSetBaseline(100, capacity=50)
        for x in (5, 1, 9, 5, 1):
            s.insert(x)
        assert s.node_count() == 3


class TestObservationalEquivalence:
    def test_backends_agree(self):
        rng = random.Random(11)
        for _ in range(20):
            universe = rng.choice((3, 50, 1 << 12, 1 << 18))
            sets = [make_backend(n, universe, capacity=200) for n in sorted(BACKENDS)]
            for _ in range(200):
                x = rng.randint(1, universe)
                op = rng.random()
                if op < 0.4:
                    for s in sets:
                        s.insert(x)
                else:
                    preds = {s.predecessor(x) for s in sets}
                    succs = {s.successor(x) for s in sets}
                    assert len(preds) == 1 and len(succs) == 1
