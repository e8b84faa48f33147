"""Suffix-tree based type-1 search with output-sensitive enumeration.

Three trees cooperate:

* the suffix tree of T' = T $ rev(T) # answers "longest prefix of the
  right arm that reoccurs early enough" as a nearest-marked-ancestor query
  (a node is marked once some reversed-half leaf below it ends early
  enough to leave a gap);
* the static suffix tree of rev(T)# provides constant-time LCAs for
  neighbour lcp values;
* a growing suffix tree over the suffixes of rev(T)# inserted so far
  holds exactly the admissible occurrences, so listing a subtree
  enumerates the gaps of one pivot in output time.

Marked-ancestor queries are answered offline: each node's mark time is
fixed up front, queries run through decreasing frontiers, and a
disjoint-set forest merges a region into its parent's the moment it
"unmarks", giving near-constant amortized finds.
"""

from __future__ import annotations

import numpy as np

from ._jit import jit
from .core import AugmentedText, PivotType, Sagp, Text, sort_rows_canonical
from .classify import ClassifyTables
from .palindromes import PalBuckets, PalsArray
from .text_index import (
    PlvNlv,
    RmqTable,
    SuffixArrayIndex,
    _inverse,
    _kasai,
    _plv_nlv,
    _rmq_build,
    _rmq_query,
    _sa_doubling,
    build_plv_nlv,
)

# ---------------------------------------------------------------------------
# static suffix tree from SA + LCP


@jit
def _tree_from_sa(sa, lcp, m):
    maxn = 2 * m + 2
    parent = np.zeros(maxn, np.int32)
    sdepth = np.zeros(maxn, np.int32)
    first_child = np.zeros(maxn, np.int32)
    last_child = np.zeros(maxn, np.int32)
    next_sib = np.zeros(maxn, np.int32)
    prev_sib = np.zeros(maxn, np.int32)
    suffix_of = np.zeros(maxn, np.int32)
    leaf_of = np.zeros(m + 2, np.int32)

    nn = 2  # 1 = root, 2 = first leaf
    parent[2] = 1
    sdepth[2] = m - sa[1] + 1
    suffix_of[2] = sa[1]
    leaf_of[sa[1]] = 2
    first_child[1] = 2
    last_child[1] = 2
    last = 2
    for r in range(2, m + 1):
        h = lcp[r]
        v = last
        while parent[v] != 0 and sdepth[parent[v]] >= h:
            v = parent[v]
        if sdepth[v] == h:
            ap = v
        else:
            nn += 1
            u = nn
            p = parent[v]
            parent[u] = p
            sdepth[u] = h
            pv = prev_sib[v]
            nx = next_sib[v]
            if pv != 0:
                next_sib[pv] = u
            else:
                first_child[p] = u
            if nx != 0:
                prev_sib[nx] = u
            else:
                last_child[p] = u
            prev_sib[u] = pv
            next_sib[u] = nx
            parent[v] = u
            first_child[u] = v
            last_child[u] = v
            prev_sib[v] = 0
            next_sib[v] = 0
            ap = u
        nn += 1
        leaf = nn
        parent[leaf] = ap
        sdepth[leaf] = m - sa[r] + 1
        suffix_of[leaf] = sa[r]
        leaf_of[sa[r]] = leaf
        lc = last_child[ap]
        if lc == 0:
            first_child[ap] = leaf
        else:
            next_sib[lc] = leaf
            prev_sib[leaf] = lc
        last_child[ap] = leaf
        last = leaf
    return parent, sdepth, first_child, next_sib, prev_sib, suffix_of, leaf_of, nn


@jit
def _euler_tour(first_child, next_sib, sdepth, nn):
    et_node = np.zeros(2 * nn + 1, np.int32)
    et_depth = np.zeros(2 * nn + 1, np.int32)
    first_occ = np.zeros(nn + 1, np.int64)
    stackn = np.zeros(nn + 2, np.int32)
    stackc = np.zeros(nn + 2, np.int32)
    top = 0
    stackn[0] = 1
    stackc[0] = first_child[1]
    pos = 1
    et_node[pos] = 1
    et_depth[pos] = sdepth[1]
    first_occ[1] = pos
    pos += 1
    while top >= 0:
        v = stackn[top]
        c = stackc[top]
        if c == 0:
            top -= 1
            if top >= 0:
                p = stackn[top]
                et_node[pos] = p
                et_depth[pos] = sdepth[p]
                pos += 1
            continue
        stackc[top] = next_sib[c]
        top += 1
        stackn[top] = c
        stackc[top] = first_child[c]
        et_node[pos] = c
        et_depth[pos] = sdepth[c]
        first_occ[c] = pos
        pos += 1
    return et_node, et_depth, first_occ, pos - 1


@jit
def _lca(et_node, et_depth, first_occ, etst, etnb, u, v):
    a = first_occ[u]
    b = first_occ[v]
    if a > b:
        a, b = b, a
    return et_node[_rmq_query(et_depth, etst, etnb, a, b)]


# ---------------------------------------------------------------------------
# mark times and offline nearest-marked-ancestor


@jit
def _mark_times(parent, sdepth, leaf_of, nn, n, m):
    inf = m + 10
    mt = np.full(nn + 1, inf, np.int32)
    for j in range(n + 2, 2 * n + 2):
        v = leaf_of[j]
        t = (2 * n - j + 2) + 2
        if t < mt[v]:
            mt[v] = t
    # children before parents: order nodes by decreasing string depth
    cnt = np.zeros(m + 3, np.int64)
    for v in range(1, nn + 1):
        cnt[sdepth[v]] += 1
    total = 0
    for d in range(m + 2, -1, -1):
        c = cnt[d]
        cnt[d] = total
        total += c
    order = np.zeros(nn, np.int32)
    for v in range(1, nn + 1):
        order[cnt[sdepth[v]]] = v
        cnt[sdepth[v]] += 1
    for i in range(nn):
        v = order[i]
        p = parent[v]
        if p != 0 and mt[v] < mt[p]:
            mt[p] = mt[v]
    return mt


@jit
def _dsu_find(dsu, x):
    while dsu[x] != x:
        dsu[x] = dsu[dsu[x]]
        x = dsu[x]
    return x


@jit
def _nma_offline(parent, sdepth, mt, nn, qleaf, qb, nq, maxmt):
    """Answer (depth, witness mark time) per query; queries sorted by
    decreasing frontier b."""
    dsu = np.zeros(nn + 1, np.int32)
    for v in range(nn + 1):
        dsu[v] = v
    # nodes by decreasing mark time
    cnt = np.zeros(maxmt + 2, np.int64)
    for v in range(1, nn + 1):
        cnt[mt[v]] += 1
    total = 0
    for d in range(maxmt + 1, -1, -1):
        c = cnt[d]
        cnt[d] = total
        total += c
    order = np.zeros(nn, np.int32)
    for v in range(1, nn + 1):
        order[cnt[mt[v]]] = v
        cnt[mt[v]] += 1
    answ = np.zeros(nq, np.int32)
    anse = np.zeros(nq, np.int32)
    ptr = 0
    for qi in range(nq):
        b = qb[qi]
        while ptr < nn and mt[order[ptr]] > b:
            v = order[ptr]
            p = parent[v]
            if p != 0:
                rv = _dsu_find(dsu, v)
                rp = _dsu_find(dsu, p)
                dsu[rv] = rp
            ptr += 1
        a = _dsu_find(dsu, qleaf[qi])
        answ[qi] = sdepth[a]
        anse[qi] = mt[a] - 2
    return answ, anse


# ---------------------------------------------------------------------------
# growing suffix tree of rev(T)# suffixes


@jit
def _neighbor_lcps(sa2, lcp2, m2):
    """For every SA rank j: lcp with the nearest rank to the left / right
    whose suffix start is larger (-1 when absent).  One stack pass each."""
    big = np.int32(1 << 30)
    lall = np.full(m2 + 1, -1, np.int32)
    rall = np.full(m2 + 2, -1, np.int32)
    sidx = np.zeros(m2 + 1, np.int32)
    sval = np.zeros(m2 + 1, np.int32)
    top = 0
    for j in range(1, m2 + 1):
        cur = lcp2[j] if j > 1 else big
        while top > 0 and sa2[sidx[top]] < sa2[j]:
            if sval[top] < cur:
                cur = sval[top]
            top -= 1
        if top > 0:
            lall[j] = cur
        top += 1
        sidx[top] = j
        sval[top] = cur
    top = 0
    for j in range(m2, 0, -1):
        cur = lcp2[j + 1] if j < m2 else big
        while top > 0 and sa2[sidx[top]] < sa2[j]:
            if sval[top] < cur:
                cur = sval[top]
            top -= 1
        if top > 0:
            rall[j] = cur
        top += 1
        sidx[top] = j
        sval[top] = cur
    return lall, rall


@jit
def _grow_attach(gp, gd, gf, gn, gv, gsuf, gleaf, gmeta, n2, k, target, d):
    """Insert the leaf for suffix k branching at depth d on the path to
    the present leaf ``target``."""
    node = target
    while gp[node] != 0 and gd[gp[node]] >= d:
        node = gp[node]
    if gd[node] == d:
        ap = node
    else:
        u = gmeta[0] + 1
        gmeta[0] = u
        p = gp[node]
        gp[u] = p
        gd[u] = d
        pv = gv[node]
        nx = gn[node]
        if pv != 0:
            gn[pv] = u
        else:
            gf[p] = u
        if nx != 0:
            gv[nx] = u
        gv[u] = pv
        gn[u] = nx
        gp[node] = u
        gf[u] = node
        gv[node] = 0
        gn[node] = 0
        ap = u
    leaf = gmeta[0] + 1
    gmeta[0] = leaf
    gp[leaf] = ap
    gd[leaf] = n2 - k + 1
    gsuf[leaf] = k
    gleaf[k] = leaf
    f = gf[ap]
    gn[leaf] = f
    if f != 0:
        gv[f] = leaf
    gf[ap] = leaf
    gv[leaf] = 0
    gmeta[1] = k
    return leaf


@jit
def _climb_enumerate(gp, gd, gf, gn, gsuf, gleaf, n, witness_end, w, b,
                     pivot, pal, stack, cap, out, cnt):
    node = gleaf[n - witness_end + 1]
    while gp[node] != 0 and gd[gp[node]] >= w:
        node = gp[node]
    top = 0
    stack[0] = node
    while top >= 0:
        v = stack[top]
        top -= 1
        c = gf[v]
        if c == 0:
            e = n - gsuf[v] + 1
            if cnt < cap:
                out[cnt, 0] = pivot
                out[cnt, 1] = w
                out[cnt, 2] = b - e - 1
                out[cnt, 3] = pal
            cnt += 1
        else:
            while c != 0:
                top += 1
                stack[top] = c
                c = gn[c]
    return cnt


@jit
def _grow_enumerate_all(gp, gd, gf, gn, gv, gsuf, gleaf, gmeta, n, n2,
                        isa2, ins_info,
                        qb, qpivot, qpal, qw, qe, nq, cap, out):
    stack = np.zeros(n2 + 4, np.int32)
    cnt = 0
    qi = 0
    nexte = 1
    for b in range(1, n + 1):
        while nexte <= b - 2:
            k = n - nexte + 1
            info = ins_info[isa2[k]]
            _grow_attach(gp, gd, gf, gn, gv, gsuf, gleaf, gmeta, n2,
                         k, gleaf[info >> 32], info & 0x7FFFFFFF)
            nexte += 1
        while qi < nq and qb[qi] == b:
            if qw[qi] >= 1:
                cnt = _climb_enumerate(gp, gd, gf, gn, gsuf, gleaf, n,
                                       qe[qi], qw[qi], b, qpivot[qi],
                                       qpal[qi], stack, cap, out, cnt)
            qi += 1
    return cnt


# ---------------------------------------------------------------------------
# wrappers


class SuffixTree:
    """Array-backed suffix tree; node 1 is the root, children keep
    suffix-array order."""

    __slots__ = ("parent", "sdepth", "first_child", "next_sib", "prev_sib",
                 "suffix_of", "leaf_of", "n_nodes", "subject", "m")

    def __init__(self, idx: SuffixArrayIndex):
        (self.parent, self.sdepth, self.first_child, self.next_sib,
         self.prev_sib, self.suffix_of, self.leaf_of, self.n_nodes) = \
            _tree_from_sa(idx.sa, idx.lcp, idx.m)
        self.subject = idx.subject
        self.m = idx.m

    root = 1

    def children(self, v: int) -> list[int]:
        out = []
        c = int(self.first_child[v])
        while c:
            out.append(c)
            c = int(self.next_sib[c])
        return out

    def is_leaf(self, v: int) -> bool:
        return self.first_child[v] == 0

    def edge_label(self, v: int) -> tuple[int, ...]:
        """Symbols on the incoming edge of v."""
        if v == self.root:
            return ()
        start = self._rep_start(v)
        lo = start + int(self.sdepth[self.parent[v]])
        hi = start + int(self.sdepth[v])
        return tuple(int(x) for x in self.subject[lo:hi])

    def str_of(self, v: int) -> tuple[int, ...]:
        start = self._rep_start(v)
        return tuple(int(x) for x in self.subject[start : start + int(self.sdepth[v])])

    def _rep_start(self, v: int) -> int:
        while self.first_child[v]:
            v = int(self.first_child[v])
        return int(self.suffix_of[v])

    def leaves_in_order(self) -> list[int]:
        out = []
        stack = [self.root]
        while stack:
            v = stack.pop()
            if self.first_child[v] == 0:
                out.append(int(self.suffix_of[v]))
            else:
                stack.extend(reversed(self.children(v)))
        return out

    def canonical(self, v: int | None = None):
        """Shape + edge labels as nested sorted tuples (isomorphism key)."""
        if v is None:
            v = self.root
        subs = tuple(sorted(
            (self.edge_label(c), self.canonical(c)) for c in self.children(v)
        ))
        return subs


class TreeLca:
    """Euler tour + sparse-table RMQ over a SuffixTree."""

    __slots__ = ("et_node", "et_depth", "first_occ", "st", "nb", "tour_len")

    def __init__(self, tree: SuffixTree):
        self.et_node, self.et_depth, self.first_occ, self.tour_len = _euler_tour(
            tree.first_child, tree.next_sib, tree.sdepth, tree.n_nodes
        )
        bidx, self.st = _rmq_build(self.et_depth, self.tour_len)
        from .text_index import RMQ_BLOCK

        self.nb = (self.tour_len + RMQ_BLOCK - 1) // RMQ_BLOCK or 1

    def query(self, u: int, v: int) -> int:
        return int(_lca(self.et_node, self.et_depth, self.first_occ,
                        self.st, self.nb, u, v))


class MarkState:
    """Per-node earliest frontier at which the node is marked."""

    __slots__ = ("mark_time", "n", "maxmt")

    def __init__(self, tree: SuffixTree, n: int):
        self.mark_time = _mark_times(tree.parent, tree.sdepth, tree.leaf_of,
                                     tree.n_nodes, n, tree.m)
        self.n = n
        self.maxmt = tree.m + 10


def build_tree_from_index(idx: SuffixArrayIndex) -> SuffixTree:
    """O(m) stack construction; leaves appear in suffix-array order."""
    return SuffixTree(idx)


def build_mark_state(tree: SuffixTree, n: int) -> MarkState:
    return MarkState(tree, n)


def nma_query(tree: SuffixTree, marks: MarkState, leaf_pos: int, b: int):
    """Deepest marked ancestor of the leaf for suffix ``leaf_pos`` at
    frontier ``b``; returns (node, string depth)."""
    v = int(tree.leaf_of[leaf_pos])
    mt = marks.mark_time
    while v != 0 and mt[v] > b:
        v = int(tree.parent[v])
    if v == 0:
        return 0, 0
    return v, int(tree.sdepth[v])


class GrowingTree:
    """Suffix tree of rev(T)[k..n]# maintained under decreasing k.

    Starts holding only the "#" suffix; :meth:`insert` adds suffix k and
    expects k = current smallest - 1.  The insertion point comes from the
    suffix-array neighbours among already-present suffixes (PLV/NLV) and
    two LCA queries on the full tree of rev(T)#.
    """

    def __init__(self, text: Text, rev_idx: SuffixArrayIndex,
                 rev_tree: SuffixTree | None = None,
                 rev_lca: TreeLca | None = None,
                 plvnlv: PlvNlv | None = None):
        n2 = rev_idx.m
        maxn = 2 * n2 + 4
        self.n = text.n
        self.n2 = n2
        self.rev_idx = rev_idx
        self.rev_tree = rev_tree
        self.rev_lca = rev_lca
        self.plvnlv = plvnlv
        self.gp = np.zeros(maxn, np.int32)
        self.gd = np.zeros(maxn, np.int32)
        self.gf = np.zeros(maxn, np.int32)
        self.gn = np.zeros(maxn, np.int32)
        self.gv = np.zeros(maxn, np.int32)
        self.gsuf = np.zeros(maxn, np.int32)
        self.gleaf = np.zeros(n2 + 2, np.int32)
        self.gmeta = np.zeros(2, np.int64)
        # seed with the root and the "#" leaf
        self.gmeta[0] = 2
        self.gmeta[1] = n2
        self.gp[2] = 1
        self.gd[2] = 1
        self.gsuf[2] = n2
        self.gleaf[n2] = 2
        self.gf[1] = 2

    @property
    def _state(self):
        return (self.gp, self.gd, self.gf, self.gn, self.gv, self.gsuf,
                self.gleaf, self.gmeta)

    @property
    def low_k(self) -> int:
        return int(self.gmeta[1])

    def _ensure_full_tree(self):
        if self.rev_tree is None:
            self.rev_tree = build_tree_from_index(self.rev_idx)
        if self.rev_lca is None:
            self.rev_lca = TreeLca(self.rev_tree)
        if self.plvnlv is None:
            self.plvnlv = build_plv_nlv(self.rev_idx)

    def insert(self, k: int) -> int:
        if k != self.low_k - 1 or k < 1:
            raise ValueError(
                f"growing tree holds suffixes {self.low_k}..{self.n2}; "
                f"cannot insert {k}"
            )
        self._ensure_full_tree()
        idx, tree, lca = self.rev_idx, self.rev_tree, self.rev_lca
        j = int(idx.isa[k])
        pl = int(self.plvnlv.plv[j])
        nl = int(self.plvnlv.nlv[j])
        lval = rval = -1
        kl = kr = 0
        if pl >= 1:
            kl = int(idx.sa[pl])
            a = lca.query(int(tree.leaf_of[kl]), int(tree.leaf_of[k]))
            lval = int(tree.sdepth[a])
        if nl <= self.n2:
            kr = int(idx.sa[nl])
            a = lca.query(int(tree.leaf_of[k]), int(tree.leaf_of[kr]))
            rval = int(tree.sdepth[a])
        if lval >= rval:
            target, d = int(self.gleaf[kl]), lval
        else:
            target, d = int(self.gleaf[kr]), rval
        return int(_grow_attach(*self._state, self.n2, k, target, d))

    # test/inspection helpers mirroring SuffixTree
    def children(self, v: int) -> list[int]:
        out = []
        c = int(self.gf[v])
        while c:
            out.append(c)
            c = int(self.gn[c])
        return out

    def edge_label(self, v: int) -> tuple[int, ...]:
        if v == 1:
            return ()
        start = self._rep_start(v)
        lo = start + int(self.gd[self.gp[v]])
        hi = start + int(self.gd[v])
        return tuple(int(x) for x in self.rev_idx.subject[lo:hi])

    def _rep_start(self, v: int) -> int:
        while self.gf[v]:
            v = int(self.gf[v])
        return int(self.gsuf[v])

    def canonical(self, v: int = 1):
        subs = tuple(sorted(
            (self.edge_label(c), self.canonical(c)) for c in self.children(v)
        ))
        return subs


def grow_insert_leaf(g: GrowingTree, k: int) -> GrowingTree:
    """Insert the leaf for rev(T)#[k..]; mutates and returns ``g``."""
    g.insert(k)
    return g


def enumerate_occurrences(g: GrowingTree, witness_end: int, w: int, b: int,
                          pivot: int, pal: int) -> list[Sagp]:
    """All admissible occurrences sharing the witness's length-w prefix."""
    cap = 4 * g.n + 16
    out = np.empty((cap, 4), np.int32)
    stack = np.zeros(g.n2 + 4, np.int32)
    cnt = _climb_enumerate(
        g.gp, g.gd, g.gf, g.gn, g.gsuf, g.gleaf, g.n,
        witness_end, w, b, pivot, pal, stack, cap, out, 0,
    )
    rows = out[:cnt]
    return [
        Sagp(int(p), int(ww), int(gg), int(u), PivotType.TYPE1)
        for p, ww, gg, u in rows
    ]


def find_type1_stree_rows(
    text: Text,
    aug: AugmentedText,
    idx: SuffixArrayIndex,
    pals: PalsArray,
    buckets: PalBuckets,
    tables: ClassifyTables,
    rev_idx: SuffixArrayIndex,
):
    n = text.n
    tree1 = build_tree_from_index(idx)
    marks = MarkState(tree1, n)

    # queries: one per type-1 pivot
    ptype = tables.ptype
    pv = np.flatnonzero(ptype == 1).astype(np.int64)
    pal = pals.pals[pv].astype(np.int64)
    qb = (pv - pal + 1).astype(np.int32)
    qleaf = tree1.leaf_of[(pv + pal + 1)].astype(np.int32)
    nq = pv.size

    order_desc = np.argsort(-qb, kind="stable")
    answ = np.zeros(nq, np.int32)
    anse = np.zeros(nq, np.int32)
    if nq:
        w_desc, e_desc = _nma_offline(
            tree1.parent, tree1.sdepth, marks.mark_time, tree1.n_nodes,
            qleaf[order_desc], qb[order_desc], nq, marks.maxmt,
        )
        answ[order_desc] = w_desc
        anse[order_desc] = e_desc

    # insertion point per SA rank: deeper-lcp neighbour among the suffixes
    # with larger start, packed as (neighbour start << 32) | branch depth
    plvnlv = build_plv_nlv(rev_idx)
    m2 = rev_idx.m
    lall, rall = _neighbor_lcps(rev_idx.sa, rev_idx.lcp, m2)
    rall = rall[: m2 + 1]
    kl = rev_idx.sa[plvnlv.plv].astype(np.int64)
    kr = rev_idx.sa[np.minimum(plvnlv.nlv, m2)].astype(np.int64)
    tgt = np.where(lall >= rall, kl, kr)
    ins_info = (tgt << 32) | np.maximum(lall, rall).astype(np.int64)
    g = GrowingTree(text, rev_idx)

    order_asc = np.argsort(qb, kind="stable")
    cap = 2 * n + 16
    out = np.empty((cap, 4), np.int32)
    args = (g.n, g.n2, rev_idx.isa, ins_info,
            qb[order_asc], pv[order_asc].astype(np.int32),
            pal[order_asc].astype(np.int32),
            answ[order_asc], anse[order_asc], nq)
    cnt = _grow_enumerate_all(*g._state, *args, cap, out)
    if cnt > cap:
        g = GrowingTree(text, rev_idx)
        out = np.empty((cnt, 4), np.int32)
        _grow_enumerate_all(*g._state, *args, cnt, out)
    return sort_rows_canonical(out[:cnt], 2)


def find_type1_stree(
    text: Text,
    aug: AugmentedText,
    idx: SuffixArrayIndex,
    pals: PalsArray,
    buckets: PalBuckets,
    tables: ClassifyTables,
    rev_idx: SuffixArrayIndex,
) -> list[Sagp]:
    rows = find_type1_stree_rows(text, aug, idx, pals, buckets, tables, rev_idx)
    return [
        Sagp(int(p), int(w), int(g), int(u), PivotType.TYPE1)
        for p, w, g, u in rows
    ]


def build_rev_index(text: Text) -> SuffixArrayIndex:
    """Suffix array index of rev(T)# (ranks, # = 1 terminal)."""
    n = text.n
    subject = np.zeros(n + 2, np.int32)
    subject[1 : n + 1] = text.ranks[1:][::-1]
    subject[n + 1] = 1
    return SuffixArrayIndex(subject, n + 1)


# ---------------------------------------------------------------------------
# self-check: growing tree vs rebuilt-from-scratch, every prefix


@jit
def _rep_starts(parent, first_child, suffix_of, nn):
    rep = np.zeros(nn + 1, np.int32)
    for v in range(1, nn + 1):
        if first_child[v] == 0 and suffix_of[v] != 0:
            s = suffix_of[v]
            u = v
            while u != 0 and rep[u] == 0:
                rep[u] = s
                u = parent[u]
    return rep


@jit
def _canon_equal(pa, da, fa, nxa, repa, suba,
                 pb, db, fb, nxb, repb, subb, maxn):
    """Isomorphism of two compacted tries with labelled edges; children are
    matched by their (distinct) first edge symbols."""
    sta = np.empty(maxn, np.int32)
    stb = np.empty(maxn, np.int32)
    cha = np.empty(maxn, np.int32)
    chb = np.empty(maxn, np.int32)
    top = 0
    sta[0] = 1
    stb[0] = 1
    while top >= 0:
        a = sta[top]
        b = stb[top]
        top -= 1
        if da[a] != db[b]:
            return False
        if pa[a] != 0:
            if pb[b] == 0:
                return False
            la = da[a] - da[pa[a]]
            if la != db[b] - db[pb[b]]:
                return False
            oa = repa[a] + da[pa[a]]
            ob = repb[b] + db[pb[b]]
            for t in range(la):
                if suba[oa + t] != subb[ob + t]:
                    return False
        elif pb[b] != 0:
            return False
        ca = 0
        c = fa[a]
        while c != 0:
            cha[ca] = c
            ca += 1
            c = nxa[c]
        cb = 0
        c = fb[b]
        while c != 0:
            chb[cb] = c
            cb += 1
            c = nxb[c]
        if ca != cb:
            return False
        for i in range(1, ca):
            x = cha[i]
            key = suba[repa[x] + da[a]]
            j = i - 1
            while j >= 0 and suba[repa[cha[j]] + da[a]] > key:
                cha[j + 1] = cha[j]
                j -= 1
            cha[j + 1] = x
        for i in range(1, cb):
            x = chb[i]
            key = subb[repb[x] + db[b]]
            j = i - 1
            while j >= 0 and subb[repb[chb[j]] + db[b]] > key:
                chb[j + 1] = chb[j]
                j -= 1
            chb[j + 1] = x
        for i in range(ca):
            top += 1
            sta[top] = cha[i]
            stb[top] = chb[i]
    return True


@jit
def _growing_iso_all(revsub, n2):
    """Insert suffixes of rev(T)# in decreasing start order and compare the
    growing tree against a freshly built one after every step; returns the
    first failing start position, 0 if all match."""
    sa2 = _sa_doubling(revsub, n2)
    isa2 = _inverse(sa2, n2)
    lcp2 = _kasai(revsub, sa2, isa2, n2)
    plv, nlv = _plv_nlv(sa2, n2)
    lall, rall = _neighbor_lcps(sa2, lcp2, n2)
    maxn = 2 * n2 + 4
    gp = np.zeros(maxn, np.int32)
    gd = np.zeros(maxn, np.int32)
    gf = np.zeros(maxn, np.int32)
    gn = np.zeros(maxn, np.int32)
    gv = np.zeros(maxn, np.int32)
    gsuf = np.zeros(maxn, np.int32)
    gleaf = np.zeros(n2 + 2, np.int32)
    gmeta = np.zeros(2, np.int64)
    gmeta[0] = 2
    gmeta[1] = n2
    gp[2] = 1
    gd[2] = 1
    gsuf[2] = n2
    gleaf[n2] = 2
    gf[1] = 2
    for k in range(n2 - 1, 0, -1):
        j = isa2[k]
        if lall[j] >= rall[j]:
            tgt = sa2[plv[j]]
            d = lall[j]
        else:
            tgt = sa2[nlv[j]]
            d = rall[j]
        if d < 0:
            d = 0
        _grow_attach(gp, gd, gf, gn, gv, gsuf, gleaf, gmeta, n2,
                     k, gleaf[tgt], d)
        ln = n2 - k + 1
        sub2 = np.zeros(ln + 1, np.int32)
        for t in range(ln):
            sub2[1 + t] = revsub[k + t]
        sab = _sa_doubling(sub2, ln)
        isab = _inverse(sab, ln)
        lcpb = _kasai(sub2, sab, isab, ln)
        pb, db, fb, nxb, pvb, sufb, lfb, nnb = _tree_from_sa(sab, lcpb, ln)
        repa = _rep_starts(gp, gf, gsuf, gmeta[0])
        repb = _rep_starts(pb, fb, sufb, nnb)
        # fresh-tree leaf starts are slice-local; shift to global for labels
        for v in range(1, nnb + 1):
            if repb[v] != 0:
                repb[v] += k - 1
        cap = int(gmeta[0] + nnb + 4)
        if not _canon_equal(gp, gd, gf, gn, repa, revsub,
                            pb, db, fb, nxb, repb, revsub, cap):
            return k
    return 0


def growing_tree_iso_failure(text: Text) -> int:
    """0 when the growing tree matches a fresh rebuild after every insert."""
    n = text.n
    revsub = np.zeros(n + 2, np.int32)
    revsub[1 : n + 1] = text.ranks[1:][::-1]
    revsub[n + 1] = 1
    return int(_growing_iso_all(revsub, n + 1))
