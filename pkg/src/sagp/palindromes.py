"""Maximal even-palindrome radii and their begin-position buckets.

Only even palindromes matter here: the inner palindrome of every SAGP we
search for is u rev(u) with an empty middle.  ``pals[i]`` is the radius of
the maximal even palindrome whose left half ends at i (i.e. T[i-r+1..i+r]);
``pals[n] = 0`` by convention.
"""

from __future__ import annotations

import numpy as np

from ._jit import jit
from .core import Text


@jit
def _manacher_even(ranks, n):
    pals = np.zeros(n + 1, np.int32)
    l, r = 1, 0
    for i in range(1, n):
        k = 0
        if i < r:
            mirror = pals[l + r - 1 - i]
            k = r - i
            if mirror < k:
                k = mirror
        while i - k >= 1 and i + k + 1 <= n and ranks[i - k] == ranks[i + k + 1]:
            k += 1
        pals[i] = k
        if i + k > r:
            l = i - k + 1
            r = i + k
    return pals


@jit
def _bucket_csr(pals, n):
    """CSR layout of begin-position buckets: radii of palindromes starting
    at b live in radii[start[b] : start[b+1]]."""
    count = np.zeros(n + 2, np.int64)
    total = 0
    for i in range(1, n + 1):
        if pals[i] >= 1:
            count[i - pals[i] + 1] += 1
            total += 1
    start = np.zeros(n + 2, np.int64)
    acc = 0
    for b in range(1, n + 2):
        start[b] = acc
        acc += count[b]
    fill = start.copy()
    radii = np.zeros(total, np.int32)
    for i in range(1, n + 1):
        if pals[i] >= 1:
            b = i - pals[i] + 1
            radii[fill[b]] = pals[i]
            fill[b] += 1
    return start, radii


class PalsArray:
    """Radii of maximal even palindromes, one per left-center position."""

    __slots__ = ("pals", "n")

    def __init__(self, pals: np.ndarray, n: int):
        self.pals = pals
        self.n = n

    def __getitem__(self, i: int) -> int:
        return int(self.pals[i])


class PalBuckets:
    """u[b]: radii of maximal even palindromes beginning at position b."""

    __slots__ = ("start", "radii", "n")

    def __init__(self, start: np.ndarray, radii: np.ndarray, n: int):
        self.start = start
        self.radii = radii
        self.n = n

    def __getitem__(self, b: int) -> list[int]:
        if not (1 <= b <= self.n):
            return []
        return [int(r) for r in self.radii[self.start[b] : self.start[b + 1]]]


def compute_pals(text: Text) -> PalsArray:
    """Maximal even palindrome radius per left-center, O(n) Manacher-style."""
    if text.n == 0:
        return PalsArray(np.zeros(1, np.int32), 0)
    return PalsArray(_manacher_even(text.ranks, text.n), text.n)


def compute_buckets(pals: PalsArray) -> PalBuckets:
    start, radii = _bucket_csr(pals.pals, pals.n)
    return PalBuckets(start, radii, pals.n)
