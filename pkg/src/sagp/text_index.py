"""Suffix array, LCP array, range-minimum queries and PLV/NLV arrays.

Everything here is 1-based: ``sa``, ``isa`` and ``lcp`` have an unused
slot 0 and ``lcp[1] = -1``.  Construction is an O(m log m) radix-doubling
sort plus Kasai's linear LCP scan; both are compiled kernels.
"""

from __future__ import annotations

from typing import Sequence

import numpy as np

from ._jit import jit

RMQ_BLOCK = 16


@jit
def _sa_doubling(s, m):
    """Suffix array of s[1..m] (values >= 0, s[m] unique minimum)."""
    size = 2 * m + 2
    rank = np.zeros(size, np.int32)
    tmp = np.zeros(size, np.int32)
    sa = np.zeros(m + 1, np.int32)
    order = np.zeros(m + 1, np.int32)
    maxv = 0
    for i in range(1, m + 1):
        rank[i] = s[i] + 1
        if rank[i] > maxv:
            maxv = rank[i]
    kmax = maxv if maxv > m else m
    cnt = np.zeros(kmax + 3, np.int64)

    for i in range(1, m + 1):
        cnt[rank[i]] += 1
    total = 0
    for v in range(kmax + 3):
        c = cnt[v]
        cnt[v] = total
        total += c
    for i in range(1, m + 1):
        cnt[rank[i]] += 1
        sa[cnt[rank[i]]] = i

    r = 1
    tmp[sa[1]] = 1
    for j in range(2, m + 1):
        if rank[sa[j]] != rank[sa[j - 1]]:
            r += 1
        tmp[sa[j]] = r
    for i in range(1, m + 1):
        rank[i] = tmp[i]

    k = 1
    while r < m:
        # order by second key for free: suffixes with i+k > m first, then
        # the previous round's sa shifted by k; then one stable counting
        # sort by rank[i] finishes the (rank[i], rank[i+k]) order
        p = 1
        for i in range(m - k + 1, m + 1):
            order[p] = i
            p += 1
        for j in range(1, m + 1):
            i = sa[j] - k
            if i >= 1:
                order[p] = i
                p += 1
        for v in range(r + 2):
            cnt[v] = 0
        for i in range(1, m + 1):
            cnt[rank[i]] += 1
        total = 0
        for v in range(r + 2):
            c = cnt[v]
            cnt[v] = total
            total += c
        for j in range(1, m + 1):
            i = order[j]
            cnt[rank[i]] += 1
            sa[cnt[rank[i]]] = i

        r = 1
        tmp[sa[1]] = 1
        for j in range(2, m + 1):
            a, b = sa[j], sa[j - 1]
            if rank[a] != rank[b] or rank[a + k] != rank[b + k]:
                r += 1
            tmp[sa[j]] = r
        for i in range(1, m + 1):
            rank[i] = tmp[i]
        k <<= 1
    return sa


@jit
def _inverse(sa, m):
    isa = np.zeros(m + 1, np.int32)
    for j in range(1, m + 1):
        isa[sa[j]] = j
    return isa


@jit
def _kasai(s, sa, isa, m):
    lcp = np.zeros(m + 1, np.int32)
    lcp[1] = -1
    h = 0
    for i in range(1, m + 1):
        r = isa[i]
        if r > 1:
            j = sa[r - 1]
            while i + h <= m and j + h <= m and s[i + h] == s[j + h]:
                h += 1
            lcp[r] = h
            if h > 0:
                h -= 1
        else:
            lcp[r] = -1
            h = 0
    return lcp


@jit
def _rmq_build(vals, m):
    """Blocked sparse table over vals[1..m]; returns (block argmins, table).

    Table level l stores the argmin over runs of 2**l blocks; queries scan
    at most two partial blocks, so space stays O(m) for O(1)-ish queries.
    """
    nb = (m + RMQ_BLOCK - 1) // RMQ_BLOCK
    if nb < 1:
        nb = 1
    bidx = np.zeros(nb, np.int32)
    for b in range(nb):
        lo = 1 + b * RMQ_BLOCK
        hi = lo + RMQ_BLOCK - 1
        if hi > m:
            hi = m
        best = lo
        for i in range(lo + 1, hi + 1):
            if vals[i] < vals[best]:
                best = i
        bidx[b] = best
    levels = 1
    while (1 << levels) <= nb:
        levels += 1
    st = np.zeros(levels * nb, np.int32)
    for b in range(nb):
        st[b] = bidx[b]
    for l in range(1, levels):
        span = 1 << l
        half = span >> 1
        for b in range(nb - span + 1):
            x = st[(l - 1) * nb + b]
            y = st[(l - 1) * nb + b + half]
            st[l * nb + b] = x if vals[x] <= vals[y] else y
    return bidx, st


@jit
def _rmq_query(vals, st, nb, a, b):
    """Index of the leftmost minimum of vals[a..b] (1-based, a <= b)."""
    ba = (a - 1) // RMQ_BLOCK
    bb = (b - 1) // RMQ_BLOCK
    if ba == bb:
        best = a
        for i in range(a + 1, b + 1):
            if vals[i] < vals[best]:
                best = i
        return best
    enda = (ba + 1) * RMQ_BLOCK
    best = a
    for i in range(a + 1, enda + 1):
        if vals[i] < vals[best]:
            best = i
    startb = bb * RMQ_BLOCK + 1
    cb = startb
    for i in range(startb + 1, b + 1):
        if vals[i] < vals[cb]:
            cb = i
    if vals[cb] < vals[best]:
        best = cb
    if bb - ba >= 2:
        lo, hi = ba + 1, bb - 1
        l = 0
        while (1 << (l + 1)) <= hi - lo + 1:
            l += 1
        x = st[l * nb + lo]
        y = st[l * nb + hi - (1 << l) + 1]
        mid = x if vals[x] <= vals[y] else y
        if vals[mid] < vals[best]:
            best = mid
    return best


@jit
def _range_lcp(lcp, st, nb, a, b):
    """lcp of the suffixes ranked a and b (a != b) via RMQ on the LCP array."""
    if a > b:
        a, b = b, a
    return lcp[_rmq_query(lcp, st, nb, a + 1, b)]


@jit
def _plv_nlv(sa, m):
    """Nearest SA neighbours with a larger suffix start, by stack scan."""
    plv = np.zeros(m + 1, np.int32)
    nlv = np.zeros(m + 1, np.int32)
    stack = np.zeros(m + 1, np.int32)
    top = 0
    for j in range(1, m + 1):
        while top > 0 and sa[stack[top]] < sa[j]:
            top -= 1
        plv[j] = stack[top] if top > 0 else 0
        top += 1
        stack[top] = j
    top = 0
    for j in range(m, 0, -1):
        while top > 0 and sa[stack[top]] < sa[j]:
            top -= 1
        nlv[j] = stack[top] if top > 0 else m + 1
        top += 1
        stack[top] = j
    return plv, nlv


class SuffixArrayIndex:
    """SA + inverse + LCP over a 1-based integer sequence."""

    __slots__ = ("subject", "m", "sa", "isa", "lcp")

    def __init__(self, subject: np.ndarray, m: int):
        self.subject = subject
        self.m = m
        self.sa = _sa_doubling(subject, m)
        self.isa = _inverse(self.sa, m)
        self.lcp = _kasai(subject, self.sa, self.isa, m)

    def suffix_length(self, rank: int) -> int:
        return self.m - int(self.sa[rank]) + 1


class RmqTable:
    """Sparse-table RMQ (argmin) over a 1-based integer array."""

    __slots__ = ("values", "m", "nb", "bidx", "st")

    def __init__(self, values: np.ndarray, m: int):
        self.values = values
        self.m = m
        self.bidx, self.st = _rmq_build(values, m)
        self.nb = (m + RMQ_BLOCK - 1) // RMQ_BLOCK or 1

    def query(self, i: int, j: int) -> int:
        if not (1 <= i <= j <= self.m):
            raise IndexError(f"rmq range [{i}, {j}] out of [1, {self.m}]")
        return int(_rmq_query(self.values, self.st, self.nb, i, j))


class PlvNlv:
    """Previous/next larger suffix-start per SA rank; 0 and m+1 encode the
    missing-neighbour sentinels."""

    __slots__ = ("plv", "nlv", "m")

    def __init__(self, plv: np.ndarray, nlv: np.ndarray, m: int):
        self.plv = plv
        self.nlv = nlv
        self.m = m


def build_index(seq: Sequence[int] | np.ndarray) -> SuffixArrayIndex:
    """Index an integer sequence whose final symbol is the unique minimum."""
    arr = np.asarray(seq, dtype=np.int64)
    m = int(arr.size)
    if m == 0:
        raise ValueError("cannot index an empty sequence")
    last = arr[-1]
    if m > 1 and int(arr[:-1].min()) <= int(last):
        raise ValueError("terminal symbol must be the unique minimum")
    if int(arr.max()) > max(2 * m, 1 << 16):
        # keep counting-sort buckets small (order-preserving remap)
        _, inv = np.unique(arr, return_inverse=True)
        arr = inv.astype(np.int64)
    subject = np.zeros(m + 1, dtype=np.int32)
    subject[1:] = arr
    return SuffixArrayIndex(subject, m)


def build_aug_index(aug) -> SuffixArrayIndex:
    """Index T' = T $ rev(T) #.

    Not routed through :func:`build_index`: T' terminates in # but carries
    the strictly smaller $ inside, which is fine for the doubling sort
    (both sentinels are unique, so no suffix is a prefix of another).
    """
    return SuffixArrayIndex(aug.tprime, aug.m)


def build_rmq(idx: SuffixArrayIndex) -> RmqTable:
    return RmqTable(idx.lcp, idx.m)


def range_lcp(idx: SuffixArrayIndex, rmq: RmqTable, a: int, b: int) -> int:
    """lcp of the suffixes with SA ranks a and b; full length when a == b."""
    if not (1 <= a <= idx.m and 1 <= b <= idx.m):
        raise IndexError(f"sa rank out of range: {a}, {b}")
    if a == b:
        return idx.suffix_length(a)
    return int(_range_lcp(idx.lcp, rmq.st, rmq.nb, a, b))


def op_map(n: int, j: int) -> int:
    """Original end position in T of the reversed-prefix occurrence at T'[j..]."""
    if not (n + 2 <= j <= 2 * n + 1):
        raise ValueError(f"position {j} is not in the reversed segment of T'")
    return 2 * n - j + 2


def build_plv_nlv(idx: SuffixArrayIndex) -> PlvNlv:
    plv, nlv = _plv_nlv(idx.sa, idx.m)
    return PlvNlv(plv, nlv, idx.m)
