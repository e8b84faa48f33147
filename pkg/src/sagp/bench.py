"""Benchmark harness: timed type-1 runs over generated strings.

Each timed run covers everything the backend needs, index construction
included, starting from the already-ranked text.  Rows come out in a fixed
CSV schema; per-(backend, length) averages are appended as ``run=avg``
summary rows.  Optionally the same rows are rendered as PNG charts.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

from .core import Text
from .generate import random_symbols
from .pipeline import BACKEND_CHOICES, Prepared, run_type1
from .type1_traverse import TraversalStats

CSV_HEADER = "backend,n,sigma,seed,run,millis,occ1,entries_per_pivot,entries_per_output"


@dataclass(frozen=True, slots=True)
class BenchRow:
    backend: str
    n: int
    sigma: int
    seed: int
    run: str
    millis: float
    occ1: float
    entries_per_pivot: float | None
    entries_per_output: float | None

    def to_csv(self) -> str:
        epp = "" if self.entries_per_pivot is None else f"{self.entries_per_pivot:.4f}"
        epo = "" if self.entries_per_output is None else f"{self.entries_per_output:.4f}"
        occ = f"{self.occ1:.1f}" if self.run == "avg" else f"{int(self.occ1)}"
        return (
            f"{self.backend},{self.n},{self.sigma},{self.seed},{self.run},"
            f"{self.millis:.3f},{occ},{epp},{epo}"
        )


def time_backend(text: Text, backend: str):
    """(millis, occ1, stats) for one full type-1 run on a prepared-free text."""
    t0 = time.perf_counter()
    prep = Prepared(text)
    rows, stats = run_type1(prep, backend)
    millis = (time.perf_counter() - t0) * 1000.0
    return millis, len(rows), stats


def warmup(backends=BACKEND_CHOICES) -> None:
    """Trigger kernel compilation outside the timed region."""
    text = Text(random_symbols(64, 4, 12345))
    for backend in backends:
        time_backend(text, backend)


def run_benchmark(lengths, sigma, repeats, backends, seed=1) -> list[BenchRow]:
    warmup(backends)
    out: list[BenchRow] = []
    for n in lengths:
        per_backend: dict[str, list[BenchRow]] = {b: [] for b in backends}
        for run in range(1, repeats + 1):
            run_seed = seed + run - 1
            text = Text(random_symbols(n, sigma, run_seed))
            for backend in backends:
                millis, occ1, stats = time_backend(text, backend)
                epp = epo = None
                if isinstance(stats, TraversalStats):
                    epp = stats.entries_per_pivot
                    epo = stats.entries_per_output
                row = BenchRow(backend, n, sigma, run_seed, str(run),
                               millis, occ1, epp, epo)
                per_backend[backend].append(row)
                out.append(row)
        for backend in backends:
            rows = per_backend[backend]
            k = len(rows)
            epp = [r.entries_per_pivot for r in rows if r.entries_per_pivot is not None]
            epo = [r.entries_per_output for r in rows if r.entries_per_output is not None]
            out.append(BenchRow(
                backend, n, sigma, seed, "avg",
                sum(r.millis for r in rows) / k,
                sum(r.occ1 for r in rows) / k,
                sum(epp) / len(epp) if epp else None,
                sum(epo) / len(epo) if epo else None,
            ))
    return out


def rows_to_csv(rows) -> str:
    return "\n".join([CSV_HEADER] + [r.to_csv() for r in rows]) + "\n"


def render_plots(rows, outdir) -> list[str]:
    """Runtime and traversal-metric charts from the avg rows; returns the
    written file paths."""
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
    from pathlib import Path

    outdir = Path(outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    written = []

    avg = [r for r in rows if r.run == "avg"]
    backends = sorted({r.backend for r in avg})

    fig, ax = plt.subplots(figsize=(7, 4.5))
    for backend in backends:
        pts = sorted((r.n, r.millis) for r in avg if r.backend == backend)
        if pts:
            ax.plot([p[0] for p in pts], [p[1] for p in pts], marker="o", label=backend)
    ax.set_xlabel("n")
    ax.set_ylabel("avg time (ms)")
    ax.set_xscale("log")
    ax.set_yscale("log")
    ax.grid(True, which="both", alpha=0.3)
    ax.legend()
    ax.set_title("type-1 search: running time")
    path = outdir / "bench_times.png"
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    written.append(str(path))

    trav = [r for r in avg if r.entries_per_pivot is not None]
    if trav:
        fig, ax = plt.subplots(figsize=(7, 4.5))
        pts = sorted((r.n, r.entries_per_pivot, r.entries_per_output) for r in trav)
        ax.plot([p[0] for p in pts], [p[1] for p in pts], marker="o",
                label="entries / pivot")
        ax.plot([p[0] for p in pts], [p[2] for p in pts], marker="s",
                label="entries / output")
        ax.set_xlabel("n")
        ax.set_ylabel("avg SA entries traversed")
        ax.set_xscale("log")
        ax.grid(True, which="both", alpha=0.3)
        ax.legend()
        ax.set_title("suffix-array traversal per pivot and per output")
        path = outdir / "bench_traversal.png"
        fig.tight_layout()
        fig.savefig(path, dpi=120)
        plt.close(fig)
        written.append(str(path))
    return written
