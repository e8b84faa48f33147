"""Dynamic integer sets over [1, U] with insert / predecessor / successor.

Three interchangeable backends, all insert-only (the sweep that uses them
never deletes):

* :class:`OrderedSetBaseline` - AVL tree in flat arrays, O(log m) per op.
* :class:`VebTree` - van Emde Boas tree: recursive sqrt-universe clusters
  plus summary, base case universe 2, laid out once in arrays for the
  whole (power-of-two rounded) universe.  O(log log U) worst case, O(U)
  space.
* :class:`YFastTrie` - bitwise top trie over bucket representatives with
  one hash level per prefix length, plus sorted buckets that split at
  2*log2(U).  Expected O(log log U), O(m) space.

Queries are strict: predecessor(x) < x, successor(x) > x; both return None
at the boundary.  The compiled kernels return -1 / U+1 instead so that the
sweep drivers can stay in nopython code.
"""

from __future__ import annotations

import numpy as np

from ._jit import HAVE_NUMBA, jit

if HAVE_NUMBA:
    from numba import types
    from numba.typed import Dict as _TypedDict

    def _make_dict():
        return _TypedDict.empty(key_type=types.int64, value_type=types.int64)

else:  # pragma: no cover

    def _make_dict():
        return {}


# ---------------------------------------------------------------------------
# AVL baseline


@jit
def _avl_rot_left(left, right, height, v):
    c = right[v]
    right[v] = left[c]
    left[c] = v
    hl, hr = height[left[v]], height[right[v]]
    height[v] = (hl if hl > hr else hr) + 1
    hl, hr = height[left[c]], height[right[c]]
    height[c] = (hl if hl > hr else hr) + 1
    return c


@jit
def _avl_rot_right(left, right, height, v):
    c = left[v]
    left[v] = right[c]
    right[c] = v
    hl, hr = height[left[v]], height[right[v]]
    height[v] = (hl if hl > hr else hr) + 1
    hl, hr = height[left[c]], height[right[c]]
    height[c] = (hl if hl > hr else hr) + 1
    return c


@jit
def _avl_insert(key, left, right, height, meta, x):
    root = meta[0]
    if root == 0:
        nn = meta[1] + 1
        meta[1] = nn
        key[nn] = x
        height[nn] = 1
        meta[0] = nn
        return
    path = np.empty(64, np.int64)
    dirs = np.empty(64, np.int8)
    d = 0
    v = root
    while True:
        if x == key[v]:
            return
        path[d] = v
        if x < key[v]:
            dirs[d] = 0
            nxt = left[v]
        else:
            dirs[d] = 1
            nxt = right[v]
        d += 1
        if nxt == 0:
            break
        v = nxt
    nn = meta[1] + 1
    meta[1] = nn
    key[nn] = x
    height[nn] = 1
    if dirs[d - 1] == 0:
        left[path[d - 1]] = nn
    else:
        right[path[d - 1]] = nn
    for j in range(d - 1, -1, -1):
        v = path[j]
        hl, hr = height[left[v]], height[right[v]]
        bal = hl - hr
        sub = v
        if bal > 1:
            c = left[v]
            if height[left[c]] < height[right[c]]:
                left[v] = _avl_rot_left(left, right, height, c)
            sub = _avl_rot_right(left, right, height, v)
        elif bal < -1:
            c = right[v]
            if height[right[c]] < height[left[c]]:
                right[v] = _avl_rot_right(left, right, height, c)
            sub = _avl_rot_left(left, right, height, v)
        else:
            nh = (hl if hl > hr else hr) + 1
            if height[v] == nh:
                return
            height[v] = nh
        if sub != v:
            if j == 0:
                meta[0] = sub
            elif dirs[j - 1] == 0:
                left[path[j - 1]] = sub
            else:
                right[path[j - 1]] = sub
            return


@jit
def _avl_pred(key, left, right, height, meta, x):
    v = meta[0]
    best = -1
    while v != 0:
        if key[v] < x:
            best = key[v]
            v = right[v]
        else:
            v = left[v]
    return best


@jit
def _avl_succ(key, left, right, height, meta, x):
    v = meta[0]
    best = -1
    while v != 0:
        if key[v] > x:
            best = key[v]
            v = left[v]
        else:
            v = right[v]
    return best


# ---------------------------------------------------------------------------
# van Emde Boas


def _veb_sizes(k: int):
    """Node and cluster-pointer counts of the full recursive decomposition."""
    g = [1] * (k + 1)
    f = [0] * (k + 1)
    for kk in range(2, k + 1):
        h = (kk + 1) // 2
        l = kk // 2
        g[kk] = 1 + (1 << h) * g[l] + g[h]
        f[kk] = (1 << h) * (1 + f[l]) + f[h]
    return g[k], f[k]


@jit
def _veb_layout(k, g_total, f_total):
    kbits = np.zeros(g_total + 1, np.int8)
    lowb = np.zeros(g_total + 1, np.int8)
    summary = np.zeros(g_total + 1, np.int32)
    slab = np.full(g_total + 1, -1, np.int64)
    childid = np.zeros(f_total, np.int32)
    kbits[1] = k
    nxt = 2
    nslab = 0
    for v in range(1, g_total + 1):
        kk = kbits[v]
        if kk <= 1:
            continue
        h = (kk + 1) >> 1
        l = kk >> 1
        lowb[v] = l
        summary[v] = nxt
        kbits[nxt] = h
        nxt += 1
        slab[v] = nslab
        for c in range(1 << h):
            childid[nslab + c] = nxt
            kbits[nxt] = l
            nxt += 1
        nslab += 1 << h
    return kbits, lowb, summary, slab, childid


@jit
def _veb_insert(kbits, lowb, summary, slab, childid, vmin, vmax, x):
    v = 1
    while True:
        if vmin[v] < 0:
            vmin[v] = x
            vmax[v] = x
            return
        if x == vmin[v] or x == vmax[v]:
            return
        if x < vmin[v]:
            t = vmin[v]
            vmin[v] = x
            x = t
        if x > vmax[v]:
            vmax[v] = x
        if kbits[v] <= 1:
            return
        lb = lowb[v]
        c = x >> lb
        lo = x & ((1 << lb) - 1)
        ch = childid[slab[v] + c]
        if vmin[ch] < 0:
            vmin[ch] = lo
            vmax[ch] = lo
            v = summary[v]
            x = c
        else:
            v = ch
            x = lo


@jit
def _veb_succ(kbits, lowb, summary, slab, childid, vmin, vmax, x):
    fnode = np.empty(12, np.int64)
    fbase = np.empty(12, np.int64)
    sp = 0
    v = 1
    base = 0
    while True:
        res = -1
        descend = False
        if vmin[v] < 0:
            res = -1
        elif x < vmin[v]:
            res = vmin[v]
        elif kbits[v] <= 1:
            res = 1 if (x == 0 and vmax[v] == 1) else -1
        elif x >= vmax[v]:
            res = -1
        else:
            lb = lowb[v]
            c = x >> lb
            lo = x & ((1 << lb) - 1)
            ch = childid[slab[v] + c]
            if vmin[ch] >= 0 and lo < vmax[ch]:
                base += c << lb
                v = ch
                x = lo
                descend = True
            else:
                fnode[sp] = v
                fbase[sp] = base
                sp += 1
                base = 0
                v = summary[v]
                x = c
                descend = True
        if descend:
            continue
        while sp > 0 and res >= 0:
            sp -= 1
            v0 = fnode[sp]
            c2 = base + res
            ch = childid[slab[v0] + c2]
            res = (c2 << lowb[v0]) + vmin[ch]
            base = fbase[sp]
        return base + res if res >= 0 else -1


@jit
def _veb_pred(kbits, lowb, summary, slab, childid, vmin, vmax, x):
    fnode = np.empty(12, np.int64)
    fbase = np.empty(12, np.int64)
    ffall = np.empty(12, np.int64)
    sp = 0
    v = 1
    base = 0
    while True:
        res = -1
        descend = False
        if vmin[v] < 0:
            res = -1
        elif x > vmax[v]:
            res = vmax[v]
        elif kbits[v] <= 1:
            res = 0 if (x == 1 and vmin[v] == 0) else -1
        elif x <= vmin[v]:
            res = -1
        else:
            lb = lowb[v]
            c = x >> lb
            lo = x & ((1 << lb) - 1)
            ch = childid[slab[v] + c]
            if vmin[ch] >= 0 and lo > vmin[ch]:
                base += c << lb
                v = ch
                x = lo
                descend = True
            else:
                fnode[sp] = v
                fbase[sp] = base
                ffall[sp] = vmin[v]
                sp += 1
                base = 0
                v = summary[v]
                x = c
                descend = True
        if descend:
            continue
        while sp > 0:
            sp -= 1
            v0 = fnode[sp]
            if res >= 0:
                c2 = base + res
                ch = childid[slab[v0] + c2]
                res = (c2 << lowb[v0]) + vmax[ch]
            else:
                res = ffall[sp]
            base = fbase[sp]
        return base + res if res >= 0 else -1


# ---------------------------------------------------------------------------
# Y-fast trie

_MASK32 = (1 << 32) - 1


@jit
def _yf_trie_add(trie, kk, r):
    for l in range(kk + 1):
        lkey = (l << 48) | (r >> (kk - l))
        if lkey in trie:
            v = trie[lkey]
            mn = v >> 32
            mx = v & _MASK32
            if r < mn:
                mn = r
            if r > mx:
                mx = r
            trie[lkey] = (mn << 32) | mx
        else:
            trie[lkey] = (r << 32) | r


@jit
def _yf_pred_rep(trie, links, meta, x):
    """Largest representative <= x (the sentinel rep 0 floors everything)."""
    kk = meta[1]
    lo = 0
    hi = kk
    while lo < hi:
        mid = (lo + hi + 1) >> 1
        if ((mid << 48) | (x >> (kk - mid))) in trie:
            lo = mid
        else:
            hi = mid - 1
    if lo == kk:
        return x
    bit = (x >> (kk - lo - 1)) & 1
    if bit == 1:
        left = ((lo + 1) << 48) | ((x >> (kk - lo)) << 1)
        return trie[left] & _MASK32
    right = ((lo + 1) << 48) | (((x >> (kk - lo)) << 1) | 1)
    succ_rep = trie[right] >> 32
    return (links[succ_rep] >> 32) - 1


@jit
def _yf_insert(trie, links, bucket_of, buckets, bsize, meta, x):
    if meta[0] == 0:
        # sentinel representative 0 owns the unbounded first bucket
        meta[0] = 1
        bucket_of[0] = 0
        _yf_trie_add(trie, meta[1], 0)
        links[0] = 0
    rep = _yf_pred_rep(trie, links, meta, x)
    slot = bucket_of[rep]
    sz = bsize[slot]
    lo = 0
    hi = sz
    while lo < hi:
        mid = (lo + hi) >> 1
        if buckets[slot, mid] < x:
            lo = mid + 1
        else:
            hi = mid
    if lo < sz and buckets[slot, lo] == x:
        return
    j = sz
    while j > lo:
        buckets[slot, j] = buckets[slot, j - 1]
        j -= 1
    buckets[slot, lo] = x
    bsize[slot] = sz + 1
    if sz + 1 > 2 * meta[2]:
        total = sz + 1
        half = total >> 1
        newslot = meta[0]
        meta[0] += 1
        for j in range(total - half):
            buckets[newslot, j] = buckets[slot, half + j]
        bsize[newslot] = total - half
        bsize[slot] = half
        r2 = np.int64(buckets[newslot, 0])
        bucket_of[r2] = newslot
        _yf_trie_add(trie, meta[1], r2)
        nxt = (links[rep] & _MASK32) - 1
        links[r2] = ((rep + 1) << 32) | (nxt + 1)
        links[rep] = ((links[rep] >> 32) << 32) | (r2 + 1)
        if nxt >= 0:
            links[nxt] = ((r2 + 1) << 32) | (links[nxt] & _MASK32)


@jit
def _yf_pred(trie, links, bucket_of, buckets, bsize, meta, x):
    if meta[0] == 0:
        return -1
    rep = _yf_pred_rep(trie, links, meta, x)
    slot = bucket_of[rep]
    sz = bsize[slot]
    lo = 0
    hi = sz
    while lo < hi:
        mid = (lo + hi) >> 1
        if buckets[slot, mid] < x:
            lo = mid + 1
        else:
            hi = mid
    if lo > 0:
        return buckets[slot, lo - 1]
    prev = (links[rep] >> 32) - 1
    while prev >= 0:
        pslot = bucket_of[prev]
        if bsize[pslot] > 0:
            return buckets[pslot, bsize[pslot] - 1]
        prev = (links[prev] >> 32) - 1
    return -1


@jit
def _yf_succ(trie, links, bucket_of, buckets, bsize, meta, x):
    if meta[0] == 0:
        return -1
    rep = _yf_pred_rep(trie, links, meta, x)
    slot = bucket_of[rep]
    sz = bsize[slot]
    lo = 0
    hi = sz
    while lo < hi:
        mid = (lo + hi) >> 1
        if buckets[slot, mid] <= x:
            lo = mid + 1
        else:
            hi = mid
    if lo < sz:
        return buckets[slot, lo]
    nxt = (links[rep] & _MASK32) - 1
    while nxt >= 0:
        nslot = bucket_of[nxt]
        if bsize[nslot] > 0:
            return buckets[nslot, 0]
        nxt = (links[nxt] & _MASK32) - 1
    return -1


# ---------------------------------------------------------------------------
# wrappers


class PredSuccSet:
    """Common surface of the three backends."""

    name = "abstract"

    def __init__(self, universe_size: int):
        if universe_size < 1:
            raise ValueError("universe must contain at least one value")
        self.universe_size = universe_size

    def _check(self, x: int):
        if not (1 <= x <= self.universe_size):
            raise ValueError(f"{x} outside universe [1, {self.universe_size}]")

    def insert(self, x: int) -> None:
        raise NotImplementedError

    def predecessor(self, x: int):
        raise NotImplementedError

    def successor(self, x: int):
        raise NotImplementedError


class OrderedSetBaseline(PredSuccSet):
    """Balanced (AVL) search tree over the inserted values."""

    name = "baseline"

    def __init__(self, universe_size: int, capacity: int | None = None):
        super().__init__(universe_size)
        cap = (capacity if capacity is not None else universe_size) + 2
        self._key = np.zeros(cap, np.int64)
        self._left = np.zeros(cap, np.int32)
        self._right = np.zeros(cap, np.int32)
        self._height = np.zeros(cap, np.int32)
        self._meta = np.zeros(2, np.int64)  # root, node count
        self._state = (self._key, self._left, self._right, self._height, self._meta)

    def insert(self, x: int) -> None:
        self._check(x)
        _avl_insert(*self._state, x)

    def predecessor(self, x: int):
        self._check(x)
        r = _avl_pred(*self._state, x)
        return None if r < 0 else int(r)

    def successor(self, x: int):
        self._check(x)
        r = _avl_succ(*self._state, x)
        return None if r < 0 else int(r)

    def node_count(self) -> int:
        return int(self._meta[1])


class VebTree(PredSuccSet):
    """van Emde Boas tree over the universe rounded up to a power of two."""

    name = "veb"

    def __init__(self, universe_size: int):
        super().__init__(universe_size)
        k = max(1, int(universe_size).bit_length())
        g_total, f_total = _veb_sizes(k)
        kbits, lowb, summary, slab, childid = _veb_layout(k, g_total, f_total)
        vmin = np.full(g_total + 1, -1, np.int64)
        vmax = np.full(g_total + 1, -1, np.int64)
        self.k = k
        self._state = (kbits, lowb, summary, slab, childid, vmin, vmax)

    def insert(self, x: int) -> None:
        self._check(x)
        _veb_insert(*self._state, x)

    def predecessor(self, x: int):
        self._check(x)
        r = _veb_pred(*self._state, x)
        return None if r < 0 else int(r)

    def successor(self, x: int):
        self._check(x)
        r = _veb_succ(*self._state, x)
        return None if r < 0 else int(r)

    def node_count(self) -> int:
        return len(self._state[0]) - 1


class YFastTrie(PredSuccSet):
    """X-fast trie over bucket representatives + sorted split buckets.

    A permanent representative 0 (below the universe) owns the leftmost
    bucket, so every query has a floor representative and representatives
    never need replacing.
    """

    name = "yfast"

    def __init__(self, universe_size: int, capacity: int | None = None):
        super().__init__(universe_size)
        m = capacity if capacity is not None else universe_size
        k = max(1, int(universe_size).bit_length())
        thr = 2 * k
        max_buckets = m // max(1, k) + 3
        self.k = k
        self._trie = _make_dict()
        self._links = _make_dict()
        self._bucket_of = _make_dict()
        self._buckets = np.zeros((max_buckets, 2 * thr + 2), np.int64)
        self._bsize = np.zeros(max_buckets, np.int64)
        self._meta = np.array([0, k, thr], np.int64)  # buckets, bits, threshold
        self._state = (
            self._trie,
            self._links,
            self._bucket_of,
            self._buckets,
            self._bsize,
            self._meta,
        )

    def insert(self, x: int) -> None:
        self._check(x)
        _yf_insert(*self._state, x)

    def predecessor(self, x: int):
        self._check(x)
        r = _yf_pred(*self._state, x)
        return None if r < 0 else int(r)

    def successor(self, x: int):
        self._check(x)
        r = _yf_succ(*self._state, x)
        return None if r < 0 else int(r)

    def structural_size(self) -> int:
        """Trie entries + linked reps + stored elements (space ~ O(m))."""
        return len(self._trie) + len(self._links) + int(self._bsize.sum())


BACKENDS = {
    "baseline": OrderedSetBaseline,
    "veb": VebTree,
    "yfast": YFastTrie,
}


def make_backend(name: str, universe_size: int, capacity: int | None = None):
    try:
        cls = BACKENDS[name]
    except KeyError:
        raise ValueError(f"unknown predecessor backend {name!r}") from None
    if cls is VebTree:
        return cls(universe_size)
    return cls(universe_size, capacity)
