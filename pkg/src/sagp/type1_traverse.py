"""Type-1 search by scanning the suffix array around each pivot's suffix.

From the SA slot of T[i+P+1..n] walk outward until the nearest entries
whose suffixes lie in the reversed half of T' and end early enough to
leave a gap; running LCP minima give the arm length W, and continuing the
walk while the minimum stays at W enumerates every occurrence.  Worst-case
quadratic but close to linear in practice; the walk lengths are the
traversal statistics reported by the benchmark harness.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ._jit import jit
from .core import AugmentedText, PivotType, Sagp, Text, sort_rows_canonical
from .classify import ClassifyTables
from .palindromes import PalsArray
from .text_index import SuffixArrayIndex

_BIG = np.int32(1 << 30)


@jit
def _traverse_emit(n, m, sa, isa, lcp, pals, ptype, cap, out, stats):
    cnt = 0
    scanned = 0
    pivots = 0
    for i in range(1, n + 1):
        if ptype[i] != 1:
            continue
        pivots += 1
        p = pals[i]
        b = i - p + 1
        k = isa[i + p + 1]

        wl = _BIG
        pe = 0
        t = k - 1
        while t >= 1:
            scanned += 1
            if lcp[t + 1] < wl:
                wl = lcp[t + 1]
            v = sa[t]
            if v >= n + 2 and v <= 2 * n + 1 and 2 * n - v + 2 <= b - 2:
                pe = t
                break
            t -= 1
        wr = _BIG
        qe = 0
        t = k + 1
        while t <= m:
            scanned += 1
            if lcp[t] < wr:
                wr = lcp[t]
            v = sa[t]
            if v >= n + 2 and v <= 2 * n + 1 and 2 * n - v + 2 <= b - 2:
                qe = t
                break
            t += 1
        if pe == 0:
            wl = -1
        if qe == 0:
            wr = -1
        w = wl if wl > wr else wr
        if w < 1:
            continue

        if wl == w:
            e = 2 * n - sa[pe] + 2
            if cnt < cap:
                out[cnt, 0] = i
                out[cnt, 1] = w
                out[cnt, 2] = b - e - 1
                out[cnt, 3] = p
            cnt += 1
            run = wl
            t = pe - 1
            while t >= 1:
                scanned += 1
                if lcp[t + 1] < run:
                    run = lcp[t + 1]
                if run < w:
                    break
                v = sa[t]
                if v >= n + 2 and v <= 2 * n + 1:
                    e = 2 * n - v + 2
                    if e <= b - 2:
                        if cnt < cap:
                            out[cnt, 0] = i
                            out[cnt, 1] = w
                            out[cnt, 2] = b - e - 1
                            out[cnt, 3] = p
                        cnt += 1
                t -= 1
        if wr == w:
            e = 2 * n - sa[qe] + 2
            if cnt < cap:
                out[cnt, 0] = i
                out[cnt, 1] = w
                out[cnt, 2] = b - e - 1
                out[cnt, 3] = p
            cnt += 1
            run = wr
            t = qe + 1
            while t <= m:
                scanned += 1
                if lcp[t] < run:
                    run = lcp[t]
                if run < w:
                    break
                v = sa[t]
                if v >= n + 2 and v <= 2 * n + 1:
                    e = 2 * n - v + 2
                    if e <= b - 2:
                        if cnt < cap:
                            out[cnt, 0] = i
                            out[cnt, 1] = w
                            out[cnt, 2] = b - e - 1
                            out[cnt, 3] = p
                        cnt += 1
                t += 1
    stats[0] = scanned
    stats[1] = pivots
    return cnt


@dataclass(frozen=True, slots=True)
class TraversalStats:
    entries_scanned: int
    pivots_processed: int
    outputs: int

    @property
    def entries_per_pivot(self) -> float:
        return self.entries_scanned / self.pivots_processed if self.pivots_processed else 0.0

    @property
    def entries_per_output(self) -> float:
        return self.entries_scanned / self.outputs if self.outputs else 0.0


def type1_traverse_rows(
    n: int, idx: SuffixArrayIndex, pals: PalsArray, tables: ClassifyTables
):
    cap = 2 * n + 16
    out = np.empty((cap, 4), np.int32)
    stats = np.zeros(2, np.int64)
    args = (n, idx.m, idx.sa, idx.isa, idx.lcp, pals.pals, tables.ptype)
    cnt = _traverse_emit(*args, cap, out, stats)
    if cnt > cap:
        out = np.empty((cnt, 4), np.int32)
        _traverse_emit(*args, cnt, out, stats)
    rows = sort_rows_canonical(out[:cnt], 2)
    return rows, TraversalStats(int(stats[0]), int(stats[1]), cnt)


def find_type1_traverse(
    text: Text,
    aug: AugmentedText,
    idx: SuffixArrayIndex,
    pals: PalsArray,
    tables: ClassifyTables,
) -> tuple[list[Sagp], TraversalStats]:
    rows, stats = type1_traverse_rows(text.n, idx, pals, tables)
    sagps = [
        Sagp(int(p), int(w), int(g), int(u), PivotType.TYPE1)
        for p, w, g, u in rows
    ]
    return sagps, stats
