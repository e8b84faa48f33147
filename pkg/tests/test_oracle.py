import numpy as np
import pytest

from sagp.core import Text
from sagp.oracle import (
    brute_force_findr,
    brute_force_pals,
    brute_force_sagps,
)

from conftest import quads


class TestBruteForceSagps:
    def test_canonical_choice(self):
        rep = brute_force_sagps(Text("ccabcabbace"))
        group = rep.by_pivot[7]
        assert {(s.w_len, s.u_len) for s in group} == {(1, 2)}

    def test_empty(self):
        rep = brute_force_sagps(Text("abcd"))
        assert not rep.by_pivot

    def test_worked_example(self):
        rep = brute_force_sagps(Text("baaabaabaacbaabaabac"))
        assert quads(rep.by_pivot[13]) == {(13, 4, 4, 2), (13, 4, 1, 2)}
        assert (6, 1, 1, 3) in quads(rep.by_pivot[6])

    def test_size_guard(self):
        with pytest.raises(ValueError):
            brute_force_sagps(Text("a" * 10), max_n=5)


class TestComponentOracles:
    def test_findr_table(self):
        got = brute_force_findr(Text("dbbaacbcbad"))
        assert got[1:].tolist() == [3, 3, 3, 5, 5, 7, 7, 8, 9, 10, 11]

    def test_pals_trivial(self):
        assert brute_force_pals(Text("abcd"))[1:].tolist() == [0, 0, 0, 0]

    def test_guards(self):
        with pytest.raises(ValueError):
            brute_force_pals(Text("a" * 10), max_n=5)
        with pytest.raises(ValueError):
            brute_force_findr(Text("a" * 10), max_n=5)
