"""Brute-force reference implementations.

These are the ground truth for every equivalence test and for the CLI
``verify`` command.  They share nothing with the fast paths except the
Text type: quadruples are enumerated straight from the definitions with
character-by-character comparisons.
"""

from __future__ import annotations

import numpy as np

from ._jit import jit
from .core import PivotType, Sagp, SagpReport, Text, build_report

DEFAULT_ORACLE_BOUND = 2000


@jit
def _oracle_scan(ranks, n, cap, out, ptype):
    """Enumerate all valid quadruples per pivot, keep the longest-arm /
    longest-u survivors, and classify pivots by whether the full-radius
    palindrome admits any SAGP."""
    cnt = 0
    for i in range(1, n + 1):
        ptype[i] = 2
        rmax = 0
        while i - rmax >= 1 and i + rmax + 1 <= n and ranks[i - rmax] == ranks[i + rmax + 1]:
            rmax += 1
        if rmax == 0:
            continue
        best_arm = 0
        best_u = 0
        for u in range(1, rmax + 1):
            maxw_u = 0
            for g in range(1, i - u):
                e = i - u - g
                w = 0
                while e - w >= 1 and i + u + w + 1 <= n and ranks[e - w] == ranks[i + u + w + 1]:
                    w += 1
                if w > maxw_u:
                    maxw_u = w
                if w >= 1:
                    arm = w + u
                    if arm > best_arm or (arm == best_arm and u > best_u):
                        best_arm = arm
                        best_u = u
            if u == rmax and maxw_u >= 1:
                ptype[i] = 1
        if best_arm == 0:
            continue
        u = best_u
        wstar = best_arm - u
        for g in range(1, i - u):
            e = i - u - g
            w = 0
            while e - w >= 1 and i + u + w + 1 <= n and ranks[e - w] == ranks[i + u + w + 1]:
                w += 1
            if w == wstar:
                if cnt < cap:
                    out[cnt, 0] = i
                    out[cnt, 1] = wstar
                    out[cnt, 2] = g
                    out[cnt, 3] = u
                cnt += 1
    return cnt


def brute_force_rows(text: Text):
    """(rows, ptype) arrays; rows are canonically sorted by construction."""
    n = text.n
    cap = 4 * n + 16
    out = np.empty((cap, 4), np.int32)
    ptype = np.zeros(n + 1, np.int8)
    cnt = _oracle_scan(text.ranks, n, cap, out, ptype)
    if cnt > cap:
        out = np.empty((cnt, 4), np.int32)
        cnt = _oracle_scan(text.ranks, n, cnt, out, ptype)
    return out[:cnt], ptype


def brute_force_sagps(text: Text, max_n: int = DEFAULT_ORACLE_BOUND) -> SagpReport:
    if text.n > max_n:
        raise ValueError(f"oracle input of length {text.n} exceeds bound {max_n}")
    rows, ptype = brute_force_rows(text)
    sagps = [
        Sagp(int(p), int(w), int(g), int(u), PivotType(int(ptype[p])))
        for p, w, g, u in rows
    ]
    return build_report(text.n, ptype, sagps)


def brute_force_pals(text: Text, max_n: int = DEFAULT_ORACLE_BOUND) -> np.ndarray:
    """Expansion-around-every-center oracle for even palindrome radii."""
    if text.n > max_n:
        raise ValueError(f"oracle input of length {text.n} exceeds bound {max_n}")
    n, r = text.n, text.ranks
    pals = np.zeros(n + 1, np.int32)
    for i in range(1, n + 1):
        k = 0
        while i - k >= 1 and i + k + 1 <= n and r[i - k] == r[i + k + 1]:
            k += 1
        pals[i] = k
    return pals


def brute_force_findr(text: Text, max_n: int = DEFAULT_ORACLE_BOUND) -> np.ndarray:
    """Definitional FindR: double-loop repeat test plus suffix minimum."""
    if text.n > max_n:
        raise ValueError(f"oracle input of length {text.n} exceeds bound {max_n}")
    n, r = text.n, text.ranks
    repeats = np.zeros(n + 1, dtype=bool)
    for pos in range(1, n + 1):
        for l in range(1, pos):
            if r[l] == r[pos]:
                repeats[pos] = True
                break
    findr = np.zeros(n + 1, np.int32)
    best = n + 1
    for t in range(n, 0, -1):
        if repeats[t]:
            best = t
        findr[t] = best
    return findr
