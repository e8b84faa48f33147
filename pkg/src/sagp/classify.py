"""LMost / NextPos tables and the type-1 / type-2 pivot partition.

A pivot i is type-1 when its maximal even palindrome can be wrapped into a
SAGP: the symbol right after the palindrome must occur strictly before the
palindrome with room for a non-empty gap, i.e.
LMost[T[i+P+1]] < i - P with P = pals[i].  Everything else is type-2.
"""

from __future__ import annotations

import numpy as np

from ._jit import jit
from .core import PivotType, Text
from .palindromes import PalsArray

INF = 0  # missing-position sentinel inside lmost (position 0 never occurs)


@jit
def _tables(ranks, n, sigma):
    lmost = np.zeros(sigma + 2, np.int32)
    nextpos = np.zeros(n + 1, np.int32)
    for i in range(n, 0, -1):
        c = ranks[i]
        prev = lmost[c]
        nextpos[i] = prev if prev != 0 else n + 1
        lmost[c] = i
    return lmost, nextpos


@jit
def _ptype(ranks, pals, lmost, n):
    ptype = np.zeros(n + 1, np.int8)
    for i in range(1, n + 1):
        p = pals[i]
        t = 2
        if p >= 1 and i + p + 1 <= n:
            lm = lmost[ranks[i + p + 1]]
            if lm != 0 and lm < i - p:
                t = 1
        ptype[i] = t
    return ptype


class ClassifyTables:
    """lmost: rank -> leftmost position (0 = absent); nextpos: next equal
    symbol to the right (n+1 = none); ptype/pos1/pos2 filled by
    :func:`classify_pivots`."""

    __slots__ = ("lmost", "nextpos", "ptype", "pos1", "pos2", "n")

    def __init__(self, lmost: np.ndarray, nextpos: np.ndarray, n: int):
        self.lmost = lmost
        self.nextpos = nextpos
        self.n = n
        self.ptype = None
        self.pos1 = None
        self.pos2 = None

    def lmost_by_symbol(self, text: Text) -> dict:
        """Leftmost occurrence keyed by original symbol (for inspection)."""
        out = {}
        for rank in range(2, text.sigma + 2):
            pos = int(self.lmost[rank])
            if pos:
                out[text.symbol_of_rank(rank)] = pos
        return out


def build_tables(text: Text) -> ClassifyTables:
    lmost, nextpos = _tables(text.ranks, text.n, text.sigma)
    return ClassifyTables(lmost, nextpos, text.n)


def classify_pivots(text: Text, pals: PalsArray, tables: ClassifyTables):
    """Partition pivots into (pos1, pos2); also stored on ``tables``.

    A maximal palindrome that runs to the end of T leaves no room for
    rev(w), so such pivots land in pos2.
    """
    ptype = _ptype(text.ranks, pals.pals, tables.lmost, text.n)
    tables.ptype = ptype
    pos1 = np.flatnonzero(ptype == 1).astype(np.int32)
    pos2 = np.flatnonzero(ptype == 2).astype(np.int32)
    pos2 = pos2[pos2 >= 1]
    tables.pos1 = pos1
    tables.pos2 = pos2
    return pos1, pos2


def pivot_kind(tables: ClassifyTables, i: int) -> PivotType:
    return PivotType(int(tables.ptype[i]))
