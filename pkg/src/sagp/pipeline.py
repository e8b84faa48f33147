"""Shared orchestration: lazy index preparation and backend dispatch."""

from __future__ import annotations

from functools import cached_property

import numpy as np

from .classify import build_tables, classify_pivots
from .core import (PivotType, RawInput, Sagp, SagpReport, Text, build_report,
                   sort_rows_canonical)
from .oracle import brute_force_rows
from .palindromes import compute_buckets, compute_pals
from .text_index import build_aug_index, build_plv_nlv, build_rmq
from .type1_naive import type1_naive_rows
from .type1_predsucc import type1_predsucc_rows
from .type1_stree import build_rev_index, find_type1_stree_rows
from .type1_traverse import type1_traverse_rows
from .type2 import build_findr, type2_rows
from .core import AugmentedText

BACKEND_CHOICES = (
    "naive",
    "traverse",
    "predsucc:baseline",
    "predsucc:veb",
    "predsucc:yfast",
    "stree",
)


def as_text(data: RawInput | Text) -> Text:
    return data if isinstance(data, Text) else Text(data)


class Prepared:
    """Lazily built indexes over one text; each backend touches only what
    it needs, so timing a backend through here charges it for exactly its
    own index construction."""

    def __init__(self, text: Text):
        self.text = text

    @cached_property
    def aug(self) -> AugmentedText:
        return AugmentedText(self.text)

    @cached_property
    def idx(self):
        return build_aug_index(self.aug)

    @cached_property
    def rmq(self):
        return build_rmq(self.idx)

    @cached_property
    def pals(self):
        return compute_pals(self.text)

    @cached_property
    def buckets(self):
        return compute_buckets(self.pals)

    @cached_property
    def tables(self):
        tables = build_tables(self.text)
        classify_pivots(self.text, self.pals, tables)
        return tables

    @cached_property
    def findr(self):
        return build_findr(self.text, self.tables)

    @cached_property
    def rev_idx(self):
        return build_rev_index(self.text)

    @cached_property
    def plvnlv(self):
        return build_plv_nlv(self.rev_idx)


def run_type1(prep: Prepared, backend: str):
    """(rows, stats) for the chosen type-1 backend; rows canonically sorted.

    stats is a TraversalStats for "traverse", a QueryStats for the
    predecessor backends, None otherwise.
    """
    text = prep.text
    if backend == "naive":
        rows = type1_naive_rows(text.n, prep.idx, prep.rmq, prep.pals, prep.tables)
        return rows, None
    if backend == "traverse":
        return type1_traverse_rows(text.n, prep.idx, prep.pals, prep.tables)
    if backend.startswith("predsucc:"):
        sub = backend.split(":", 1)[1]
        return type1_predsucc_rows(
            text.n, prep.idx, prep.rmq, prep.pals, prep.buckets, prep.tables, sub
        )
    if backend == "stree":
        rows = find_type1_stree_rows(
            text, prep.aug, prep.idx, prep.pals, prep.buckets, prep.tables,
            prep.rev_idx,
        )
        return rows, None
    raise ValueError(f"unknown backend {backend!r}")


def run_type2(prep: Prepared) -> np.ndarray:
    return type2_rows(prep.text, prep.pals, prep.tables, prep.findr)


def combined_rows(prep: Prepared, backend: str) -> np.ndarray:
    """All SAGPs as (pivot, type, w, gap, u) rows in canonical order."""
    rows1, _ = run_type1(prep, backend)
    rows2 = run_type2(prep)
    total = len(rows1) + len(rows2)
    merged = np.empty((total, 5), np.int32)
    if len(rows1):
        merged[: len(rows1), 0] = rows1[:, 0]
        merged[: len(rows1), 1] = 1
        merged[: len(rows1), 2:] = rows1[:, 1:]
    if len(rows2):
        merged[len(rows1) :, 0] = rows2[:, 0]
        merged[len(rows1) :, 1] = 2
        merged[len(rows1) :, 2:] = rows2[:, 1:]
    return sort_rows_canonical(merged, 3)


def find_sagps(data: RawInput | Text, backend: str = "traverse") -> SagpReport:
    """Full report: pivot classification plus all canonical longest SAGPs."""
    text = as_text(data)
    prep = Prepared(text)
    rows = combined_rows(prep, backend)
    sagps = [
        Sagp(int(p), int(w), int(g), int(u), PivotType(int(k)))
        for p, k, w, g, u in rows
    ]
    return build_report(text.n, prep.tables.ptype, sagps)


def oracle_report_rows(text: Text):
    """(rows, ptype) from the brute-force oracle in the combined format."""
    rows, ptype = brute_force_rows(text)
    merged = np.empty((len(rows), 5), np.int32)
    if len(rows):
        merged[:, 0] = rows[:, 0]
        merged[:, 1] = ptype[rows[:, 0]]
        merged[:, 2:] = rows[:, 1:]
    return merged, ptype
