"""Cross-backend and oracle equivalence checking."""

from __future__ import annotations

import numpy as np

from .core import RawInput, Text
from .oracle import DEFAULT_ORACLE_BOUND
from .pipeline import BACKEND_CHOICES, Prepared, as_text, combined_rows, oracle_report_rows


def _diff_rows(name: str, got: np.ndarray, want: np.ndarray) -> list[str]:
    gset = {tuple(int(x) for x in r) for r in got}
    wset = {tuple(int(x) for x in r) for r in want}
    lines = []
    for r in sorted(wset - gset):
        lines.append(f"{name}: missing {r}")
    for r in sorted(gset - wset):
        lines.append(f"{name}: spurious {r}")
    return lines


def verify_text(
    data: RawInput | Text,
    max_oracle_n: int = DEFAULT_ORACLE_BOUND,
    backends=BACKEND_CHOICES,
) -> tuple[bool, list[str]]:
    """Run every backend plus the brute-force oracle; list any differences.

    Returns (all_agree, diff_lines).  Raises ValueError when the input
    exceeds the oracle bound.
    """
    text = as_text(data)
    if text.n > max_oracle_n:
        raise ValueError(
            f"input of length {text.n} exceeds oracle bound {max_oracle_n}"
        )
    want, ptype_want = oracle_report_rows(text)
    prep = Prepared(text)
    diffs: list[str] = []
    for backend in backends:
        got = combined_rows(prep, backend)
        if got.shape != want.shape or not np.array_equal(got, want):
            diffs.extend(_diff_rows(backend, got, want))
    if prep.tables.ptype is not None and not np.array_equal(
        prep.tables.ptype[1:], ptype_want[1:]
    ):
        bad = np.flatnonzero(prep.tables.ptype[1:] != ptype_want[1:]) + 1
        diffs.append(f"classification: pivots {bad.tolist()} disagree with oracle")
    return not diffs, diffs
