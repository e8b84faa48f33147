"""Baseline type-1 search: try every gap size, one RMQ per gap.

For a type-1 pivot i with radius P, the arm length W for gap G is the lcp
of rev(T[1..i-P-G]) and T[i+P+1..n]; both live in T' = T $ rev(T) #, so one
range-minimum over the LCP array answers each G.  Quadratic overall.
"""

from __future__ import annotations

import numpy as np

from ._jit import jit
from .core import AugmentedText, PivotType, Sagp, Text, sort_rows_canonical
from .classify import ClassifyTables
from .palindromes import PalsArray
from .text_index import RmqTable, SuffixArrayIndex, _range_lcp


@jit
def _naive_emit(n, isa, lcp, st, nb, pals, ptype, cap, out):
    cnt = 0
    for i in range(1, n + 1):
        if ptype[i] != 1:
            continue
        p = pals[i]
        k = isa[i + p + 1]
        best = 0
        for g in range(1, i - p):
            j = isa[2 * n - (i - p - g) + 2]
            w = _range_lcp(lcp, st, nb, j, k)
            if w > best:
                best = w
        if best < 1:
            continue
        for g in range(1, i - p):
            j = isa[2 * n - (i - p - g) + 2]
            if _range_lcp(lcp, st, nb, j, k) == best:
                if cnt < cap:
                    out[cnt, 0] = i
                    out[cnt, 1] = best
                    out[cnt, 2] = g
                    out[cnt, 3] = p
                cnt += 1
    return cnt


def type1_naive_rows(
    n: int, idx: SuffixArrayIndex, rmq: RmqTable, pals: PalsArray, tables: ClassifyTables
) -> np.ndarray:
    cap = 2 * n + 16
    out = np.empty((cap, 4), np.int32)
    args = (n, idx.isa, idx.lcp, rmq.st, rmq.nb, pals.pals, tables.ptype)
    cnt = _naive_emit(*args, cap, out)
    if cnt > cap:
        out = np.empty((cnt, 4), np.int32)
        _naive_emit(*args, cnt, out)
    return sort_rows_canonical(out[:cnt], 2)


def find_type1_naive(
    text: Text,
    aug: AugmentedText,
    idx: SuffixArrayIndex,
    rmq: RmqTable,
    pals: PalsArray,
    tables: ClassifyTables,
) -> list[Sagp]:
    rows = type1_naive_rows(text.n, idx, rmq, pals, tables)
    return [
        Sagp(int(p), int(w), int(g), int(u), PivotType.TYPE1)
        for p, w, g, u in rows
    ]
