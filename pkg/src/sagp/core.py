"""Shared domain types for gapped-palindrome search.

A single-arm-gapped palindrome (SAGP) is a substring w g u rev(u) rev(w)
with non-empty w, g, u.  The pivot is the position where the inner
palindrome u rev(u) is centered; an occurrence is identified by the
quadruple (pivot, |w|, |g|, |u|).

All positions in this package are 1-based, matching the usual stringology
convention.  Arrays indexed by text position therefore carry an unused
slot 0.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import IntEnum
from typing import Iterable, Mapping, Sequence, Union

import numpy as np

RawInput = Union[str, bytes, bytearray, Sequence[int]]


class PivotType(IntEnum):
    """Pivot classification: TYPE1 admits a SAGP whose inner palindrome is
    the maximal even palindrome at the pivot, TYPE2 does not."""

    TYPE1 = 1
    TYPE2 = 2


class Text:
    """Validated input string with an order-preserving integer-rank alphabet.

    ``ranks`` is a 1-based int32 array (slot 0 unused) with values in
    [2, sigma+1]; ranks 0 and 1 are reserved for the ``$`` and ``#``
    sentinels appended by :class:`AugmentedText`.
    """

    __slots__ = ("raw", "ranks", "n", "sigma", "_symbols")

    def __init__(self, raw: RawInput):
        if isinstance(raw, str):
            codes = np.frombuffer(raw.encode("utf-32-le"), dtype=np.uint32).astype(
                np.int64
            )
        elif isinstance(raw, (bytes, bytearray)):
            codes = np.frombuffer(bytes(raw), dtype=np.uint8).astype(np.int64)
        else:
            codes = np.asarray(list(raw), dtype=np.int64)
            if codes.size and codes.min() < 0:
                raise ValueError("integer symbols must be non-negative")
        n = int(codes.size)
        symbols, inverse = np.unique(codes, return_inverse=True)
        ranks = np.zeros(n + 1, dtype=np.int32)
        if n:
            ranks[1:] = inverse.astype(np.int32) + 2
        self.raw = raw
        self.ranks = ranks
        self.n = n
        self.sigma = int(symbols.size)
        self._symbols = symbols

    def symbol_of_rank(self, rank: int):
        """Original symbol for an internal rank (2 .. sigma+1)."""
        sym = self._symbols[rank - 2]
        if isinstance(self.raw, str):
            return chr(int(sym))
        return int(sym)

    def __len__(self) -> int:
        return self.n

    def __repr__(self) -> str:
        return f"Text(n={self.n}, sigma={self.sigma})"


class AugmentedText:
    """T' = T $ rev(T) #, as ranks with $ = 0 and # = 1.

    ``tprime`` is 1-based of logical length 2n+2: tprime[n+1] = 0,
    tprime[2n+2] = 1, and tprime[j] = ranks[2n-j+2] for the reversed half.
    ($ ranks below #; this is the ordering under which the suffix-array
    worked examples of the underlying method come out, e.g. the rank of
    the T-suffix vs its reversed-copy neighbours.)
    """

    __slots__ = ("tprime", "n", "m")

    def __init__(self, text: Text):
        n = text.n
        m = 2 * n + 2
        tprime = np.zeros(m + 1, dtype=np.int32)
        tprime[1 : n + 1] = text.ranks[1:]
        tprime[n + 1] = 0
        tprime[n + 2 : 2 * n + 2] = text.ranks[1:][::-1]
        tprime[2 * n + 2] = 1
        self.tprime = tprime
        self.n = n
        self.m = m


@dataclass(frozen=True, slots=True)
class Sagp:
    """One canonical longest SAGP occurrence, as (pivot, |w|, |g|, |u|)."""

    pivot: int
    w_len: int
    gap_len: int
    u_len: int
    kind: PivotType

    @property
    def start(self) -> int:
        return self.pivot - self.u_len - self.gap_len - self.w_len + 1

    @property
    def end(self) -> int:
        return self.pivot + self.u_len + self.w_len

    @property
    def arm_len(self) -> int:
        return self.w_len + self.u_len


def canonical_key(s: Sagp):
    """Sort key: pivot, then gap, then |w|, then |u| (all ascending)."""
    return (s.pivot, s.gap_len, s.w_len, s.u_len)


def canonical_order(a: Sagp, b: Sagp) -> int:
    """Total order over quadruples; -1, 0 or 1."""
    ka, kb = canonical_key(a), canonical_key(b)
    if ka < kb:
        return -1
    if ka > kb:
        return 1
    return 0


def validate_sagp(text: Text, s: Sagp) -> bool:
    """Check that ``s`` denotes a well-formed SAGP occurrence in ``text``.

    Never raises on out-of-range quadruples; they are simply invalid.
    """
    if s.w_len < 1 or s.gap_len < 1 or s.u_len < 1:
        return False
    i, w, u = s.pivot, s.w_len, s.u_len
    if s.start < 1 or s.end > text.n:
        return False
    r = text.ranks
    for j in range(1, u + 1):
        if r[i - j + 1] != r[i + j]:
            return False
    for j in range(w):
        if r[s.start + j] != r[i + u + w - j]:
            return False
    return True


@dataclass
class SagpReport:
    """Per-pivot canonical longest SAGPs plus the pivot classification.

    ``kinds`` is a 1-based int8 array over pivots (PivotType values);
    ``by_pivot`` only has entries for pivots with at least one SAGP,
    each sorted by ascending gap.
    """

    n: int
    kinds: np.ndarray
    by_pivot: Mapping[int, tuple[Sagp, ...]]
    occ1: int = field(init=False)
    occ2: int = field(init=False)

    def __post_init__(self):
        occ1 = occ2 = 0
        for sagps in self.by_pivot.values():
            for s in sagps:
                if s.kind == PivotType.TYPE1:
                    occ1 += 1
                else:
                    occ2 += 1
        self.occ1 = occ1
        self.occ2 = occ2

    def all_sagps(self) -> list[Sagp]:
        out: list[Sagp] = []
        for pivot in sorted(self.by_pivot):
            out.extend(self.by_pivot[pivot])
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, SagpReport):
            return NotImplemented
        return (
            self.n == other.n
            and np.array_equal(self.kinds, other.kinds)
            and dict(self.by_pivot) == dict(other.by_pivot)
        )


def sort_rows_canonical(rows: np.ndarray, gap_col: int) -> np.ndarray:
    """Canonical order for quadruple row arrays.

    Within one text, (pivot, gap) is unique across all emitted SAGPs (the
    per-pivot w and u are fixed), so a single packed key suffices.
    """
    if len(rows) == 0:
        return rows
    key = (rows[:, 0].astype(np.int64) << 32) | rows[:, gap_col].astype(np.int64)
    return rows[np.argsort(key)]


def build_report(n: int, kinds: np.ndarray, sagps: Iterable[Sagp]) -> SagpReport:
    """Group SAGPs by pivot (canonically sorted) into a report."""
    by_pivot: dict[int, list[Sagp]] = {}
    for s in sagps:
        by_pivot.setdefault(s.pivot, []).append(s)
    grouped = {
        pivot: tuple(sorted(group, key=canonical_key))
        for pivot, group in by_pivot.items()
    }
    return SagpReport(n=n, kinds=kinds, by_pivot=grouped)
