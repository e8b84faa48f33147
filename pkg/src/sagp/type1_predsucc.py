"""Type-1 search driven by a predecessor/successor structure.

Sweep begin positions b = 1..n.  The active set holds the SA ranks of
reversed-half suffixes whose occurrence of w ends at most at b-2 (room for
a non-empty gap); advancing the frontier inserts exactly one rank.  For
each maximal palindrome starting at b the nearest active ranks around the
pivot's suffix rank give the arm length, and repeated predecessor /
successor calls walk out every occurrence that still attains it.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ._jit import njit
from .core import AugmentedText, PivotType, Sagp, Text, sort_rows_canonical
from .classify import ClassifyTables
from .palindromes import PalBuckets, PalsArray
from .predsucc import (
    _avl_insert,
    _avl_pred,
    _avl_succ,
    _veb_insert,
    _veb_pred,
    _veb_succ,
    _yf_insert,
    _yf_pred,
    _yf_succ,
    make_backend,
)
from .text_index import RmqTable, SuffixArrayIndex, _range_lcp


@dataclass(frozen=True, slots=True)
class QueryStats:
    queries: int
    inserts: int


def _make_driver(ins, pred, succ):
    @njit
    def drive(state, n, m, sa, isa, lcp, st, nb, bstart, bradii, pals, ptype,
              cap, out, counters):
        cnt = 0
        queries = 0
        inserts = 0
        for b in range(1, n + 1):
            if b >= 3:
                ins(*state, isa[2 * n - (b - 2) + 2])
                inserts += 1
            for bi in range(bstart[b], bstart[b + 1]):
                p = bradii[bi]
                i = b + p - 1
                if ptype[i] != 1:
                    continue
                k = isa[i + p + 1]
                pq = pred(*state, k)
                qq = succ(*state, k)
                queries += 2
                wl = _range_lcp(lcp, st, nb, pq, k) if pq >= 1 else -1
                wr = _range_lcp(lcp, st, nb, k, qq) if qq >= 1 else -1
                w = wl if wl > wr else wr
                if w < 1:
                    continue
                if wl == w:
                    t = pq
                    while True:
                        e = 2 * n - sa[t] + 2
                        if cnt < cap:
                            out[cnt, 0] = i
                            out[cnt, 1] = w
                            out[cnt, 2] = b - e - 1
                            out[cnt, 3] = p
                        cnt += 1
                        t2 = pred(*state, t)
                        queries += 1
                        if t2 < 1 or _range_lcp(lcp, st, nb, t2, k) < w:
                            break
                        t = t2
                if wr == w:
                    t = qq
                    while True:
                        e = 2 * n - sa[t] + 2
                        if cnt < cap:
                            out[cnt, 0] = i
                            out[cnt, 1] = w
                            out[cnt, 2] = b - e - 1
                            out[cnt, 3] = p
                        cnt += 1
                        t2 = succ(*state, t)
                        queries += 1
                        if t2 < 1 or _range_lcp(lcp, st, nb, k, t2) < w:
                            break
                        t = t2
        counters[0] = queries
        counters[1] = inserts
        return cnt

    return drive


_DRIVERS = {}


def _driver_for(name: str):
    if name not in _DRIVERS:
        if name == "baseline":
            _DRIVERS[name] = _make_driver(_avl_insert, _avl_pred, _avl_succ)
        elif name == "veb":
            _DRIVERS[name] = _make_driver(_veb_insert, _veb_pred, _veb_succ)
        elif name == "yfast":
            _DRIVERS[name] = _make_driver(_yf_insert, _yf_pred, _yf_succ)
        else:
            raise ValueError(f"unknown predecessor backend {name!r}")
    return _DRIVERS[name]


def type1_predsucc_rows(
    n: int,
    idx: SuffixArrayIndex,
    rmq: RmqTable,
    pals: PalsArray,
    buckets: PalBuckets,
    tables: ClassifyTables,
    backend: str,
):
    universe = 2 * n + 2
    structure = make_backend(backend, universe, capacity=n + 2)
    drive = _driver_for(backend)
    counters = np.zeros(2, np.int64)
    cap = 2 * n + 16
    out = np.empty((cap, 4), np.int32)
    args = (n, idx.m, idx.sa, idx.isa, idx.lcp, rmq.st, rmq.nb,
            buckets.start, buckets.radii, pals.pals, tables.ptype)
    cnt = drive(structure._state, *args, cap, out, counters)
    if cnt > cap:
        structure = make_backend(backend, universe, capacity=n + 2)
        out = np.empty((cnt, 4), np.int32)
        drive(structure._state, *args, cnt, out, counters)
    rows = sort_rows_canonical(out[:cnt], 2)
    return rows, QueryStats(int(counters[0]), int(counters[1]))


def find_type1_predsucc(
    text: Text,
    aug: AugmentedText,
    idx: SuffixArrayIndex,
    rmq: RmqTable,
    pals: PalsArray,
    buckets: PalBuckets,
    tables: ClassifyTables,
    backend: str = "baseline",
) -> list[Sagp]:
    rows, _ = type1_predsucc_rows(text.n, idx, rmq, pals, buckets, tables, backend)
    return [
        Sagp(int(p), int(w), int(g), int(u), PivotType.TYPE1)
        for p, w, g, u in rows
    ]
