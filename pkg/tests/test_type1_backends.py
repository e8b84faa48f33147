import random

import pytest

from sagp.core import Text
from sagp.oracle import brute_force_sagps
from sagp.pipeline import BACKEND_CHOICES, Prepared, run_type1
from sagp.predsucc import make_backend
from sagp.type1_naive import find_type1_naive
from sagp.type1_predsucc import find_type1_predsucc, type1_predsucc_rows
from sagp.type1_traverse import find_type1_traverse

from conftest import prep, quads, random_string

TYPE1_BACKENDS = [b for b in BACKEND_CHOICES if b != "naive"] + ["naive"]


def run_backend(p, backend):
    if backend == "naive":
        return find_type1_naive(p.text, p.aug, p.idx, p.rmq, p.pals, p.tables)
    if backend == "traverse":
        return find_type1_traverse(p.text, p.aug, p.idx, p.pals, p.tables)[0]
    if backend.startswith("predsucc:"):
        return find_type1_predsucc(
            p.text, p.aug, p.idx, p.rmq, p.pals, p.buckets, p.tables,
            backend.split(":")[1],
        )
    from sagp.type1_stree import find_type1_stree

    return find_type1_stree(
        p.text, p.aug, p.idx, p.pals, p.buckets, p.tables, p.rev_idx
    )


@pytest.mark.parametrize("backend", TYPE1_BACKENDS)
class TestGolden:
    def test_acacabaabca(self, backend):
        p = prep("acacabaabca")
        assert quads(run_backend(p, backend)) == {(7, 2, 3, 2), (7, 2, 1, 2)}

    def test_worked_example(self, backend):
        p = prep("baaabaabaacbaabaabac")
        got = [s for s in run_backend(p, backend) if s.pivot == 13]
        assert quads(got) == {(13, 4, 4, 2), (13, 4, 1, 2)}

    def test_abab_empty(self, backend):
        p = prep("abab")
        assert run_backend(p, backend) == []

    def test_unary_vs_oracle(self, backend):
        for n in (5, 6, 12):
            p = prep("a" * n)
            rep = brute_force_sagps(p.text)
            want = {q for q in quads(rep.all_sagps()) if rep.kinds[q[0]] == 1}
            assert quads(run_backend(p, backend)) == want

    def test_results_sorted_canonically(self, backend):
        p = prep("baacabaacabadaab")
        got = run_backend(p, backend)
        keys = [(s.pivot, s.gap_len, s.w_len, s.u_len) for s in got]
        assert keys == sorted(keys)


class TestCrossBackend:
    def test_fuzz_equality_with_oracle(self, small_fuzz):
        for s in small_fuzz:
            p = prep(s)
            rep = brute_force_sagps(p.text)
            want = {q for q in quads(rep.all_sagps()) if rep.kinds[q[0]] == 1}
            for backend in TYPE1_BACKENDS:
                assert quads(run_backend(p, backend)) == want, (backend, s)

    def test_prepared_dispatch_matches(self):
        rng = random.Random(2)
        for _ in range(10):
            t = Text(random_string(rng, 60, 3))
            baseline = None
            for backend in BACKEND_CHOICES:
                rows, _ = run_type1(Prepared(t), backend)
                rows = [tuple(int(x) for x in r) for r in rows]
                if baseline is None:
                    baseline = rows
                else:
                    assert rows == baseline, backend


class TestTraverseDetails:
    def test_stats_fields(self):
        p = prep("acacabaabca")
        sagps, stats = find_type1_traverse(p.text, p.aug, p.idx, p.pals, p.tables)
        assert stats.pivots_processed == 1
        assert stats.outputs == len(sagps) == 2
        assert stats.entries_scanned >= stats.pivots_processed
        assert stats.entries_scanned <= 2 * (p.idx.m + 1) * stats.pivots_processed
        assert stats.entries_per_pivot > 0
        assert stats.entries_per_output > 0

    def test_empty_stats(self):
        p = prep("abab")
        _, stats = find_type1_traverse(p.text, p.aug, p.idx, p.pals, p.tables)
        assert stats.pivots_processed == 0
        assert stats.entries_per_pivot == 0.0

    def test_gap_positivity(self, small_fuzz):
        for s in small_fuzz[:60]:
            p = prep(s)
            for item in find_type1_traverse(p.text, p.aug, p.idx, p.pals, p.tables)[0]:
                assert item.gap_len >= 1


class TestPredSuccDetails:
    def test_paper_active_set_queries(self):
        # Active(6) for T=acacabaabca holds the reversed-half ranks with
        # end <= 4; the pivot suffix sits at rank 19 between ranks 10, 20.
        p = prep("acacabaabca")
        n = p.text.n
        s = make_backend("veb", 2 * n + 2)
        for e in range(1, 5):
            s.insert(int(p.idx.isa[2 * n - e + 2]))
        assert s.predecessor(19) == 10
        assert s.successor(19) == 20

    def test_query_count_bound(self, small_fuzz):
        for s in small_fuzz[:60]:
            p = prep(s)
            for sub in ("baseline", "veb", "yfast"):
                rows, qs = type1_predsucc_rows(
                    p.text.n, p.idx, p.rmq, p.pals, p.buckets, p.tables, sub
                )
                assert qs.queries <= 4 * (p.text.n + len(rows)), (s, sub, qs)
                assert qs.inserts <= p.text.n

    def test_unknown_backend(self):
        p = prep("abcabc")
        with pytest.raises(ValueError):
            type1_predsucc_rows(
                p.text.n, p.idx, p.rmq, p.pals, p.buckets, p.tables, "nope"
            )
