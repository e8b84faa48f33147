"""Type-2 search: FindR construction and gap enumeration.

For a type-2 pivot i the canonical longest SAGPs all have |w| = 1: the
inner palindrome is a proper suffix u rev(u) of the maximal one, chosen so
that the symbol c just left of u reoccurs earlier, and every earlier
occurrence of c yields one SAGP c g u rev(u) c.  FindR[t] is the smallest
position r >= t whose symbol occurs somewhere before r.
"""

from __future__ import annotations

import numpy as np

from ._jit import jit
from .core import PivotType, Sagp, Text, sort_rows_canonical
from .classify import ClassifyTables
from .palindromes import PalsArray


@jit
def _findr(ranks, lmost, n, sigma):
    inf = n + 1
    occ1 = np.full(sigma + 2, inf, np.int32)
    occ2 = np.full(sigma + 2, inf, np.int32)
    findr = np.zeros(n + 1, np.int32)
    stack = np.zeros(n + 1, np.int32)
    top = 0
    min_in = inf
    for i in range(n, 0, -1):
        c = ranks[i]
        occ2[c] = occ1[c]
        occ1[c] = i
        if occ2[c] < min_in:
            min_in = occ2[c]
        top += 1
        stack[top] = i
        while top > 0 and lmost[ranks[stack[top]]] >= i:
            top -= 1
        min_out = stack[top] if top > 0 else inf
        findr[i] = min_in if min_in < min_out else min_out
    return findr


@jit
def _type2_emit(ranks, pals, ptype, findr, lmost, nextpos, n, cap, out):
    cnt = 0
    for i in range(1, n + 1):
        if ptype[i] != 2:
            continue
        p = pals[i]
        if p < 1:
            continue
        r = findr[i - p + 1]
        if r >= i:
            continue
        u = i - r
        l = lmost[ranks[r]]
        while l < r:
            if cnt < cap:
                out[cnt, 0] = i
                out[cnt, 1] = 1
                out[cnt, 2] = r - l
                out[cnt, 3] = u
            cnt += 1
            l = nextpos[l]
    return cnt


class FindRTable:
    """findr[t] = min{ r >= t : T[r] occurs before r }, with n+1 as +inf."""

    __slots__ = ("findr", "n")

    def __init__(self, findr: np.ndarray, n: int):
        self.findr = findr
        self.n = n

    def __getitem__(self, t: int) -> int:
        return int(self.findr[t])


def build_findr(text: Text, tables: ClassifyTables) -> FindRTable:
    """Right-to-left stack scan; O(n)."""
    return FindRTable(_findr(text.ranks, tables.lmost, text.n, text.sigma), text.n)


def type2_rows(
    text: Text, pals: PalsArray, tables: ClassifyTables, findr: FindRTable
) -> np.ndarray:
    """Raw (pivot, w, gap, u) rows for all type-2 SAGPs, canonically sorted."""
    cap = 2 * text.n + 16
    out = np.empty((cap, 4), np.int32)
    cnt = _type2_emit(
        text.ranks, pals.pals, tables.ptype, findr.findr,
        tables.lmost, tables.nextpos, text.n, cap, out,
    )
    if cnt > cap:
        out = np.empty((cnt, 4), np.int32)
        _type2_emit(
            text.ranks, pals.pals, tables.ptype, findr.findr,
            tables.lmost, tables.nextpos, text.n, cnt, out,
        )
    return sort_rows_canonical(out[:cnt], 2)


def find_type2(
    text: Text, pals: PalsArray, tables: ClassifyTables, findr: FindRTable
) -> list[Sagp]:
    rows = type2_rows(text, pals, tables, findr)
    return [
        Sagp(int(p), int(w), int(g), int(u), PivotType.TYPE2)
        for p, w, g, u in rows
    ]
