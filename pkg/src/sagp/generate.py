"""Deterministic random text generation (splitmix64 stream)."""

from __future__ import annotations

import numpy as np

_GOLDEN = np.uint64(0x9E3779B97F4A7C15)
_MIX1 = np.uint64(0xBF58476D1CE4E5B9)
_MIX2 = np.uint64(0x94D049BB133111EB)
_MASK = np.uint64(0xFFFFFFFFFFFFFFFF)


def splitmix64_stream(seed: int, count: int) -> np.ndarray:
    """The splitmix64 outputs for states seed+gamma, seed+2*gamma, ..."""
    idx = np.arange(1, count + 1, dtype=np.uint64)
    z = (np.uint64(seed & 0xFFFFFFFFFFFFFFFF) + idx * _GOLDEN) & _MASK
    z = (z ^ (z >> np.uint64(30))) * _MIX1 & _MASK
    z = (z ^ (z >> np.uint64(27))) * _MIX2 & _MASK
    z = z ^ (z >> np.uint64(31))
    return z


def random_symbols(length: int, sigma: int, seed: int) -> np.ndarray:
    """length symbols in [0, sigma), deterministic in (length, sigma, seed)."""
    if sigma < 1:
        raise ValueError("alphabet size must be at least 1")
    if length < 0:
        raise ValueError("length must be non-negative")
    z = splitmix64_stream(seed, length)
    return (z % np.uint64(sigma)).astype(np.int64)


def render_symbols(symbols: np.ndarray, sigma: int) -> str:
    """Letters a, b, ... for sigma <= 26, space-separated integers beyond."""
    if sigma <= 26:
        return (symbols.astype(np.uint8) + np.uint8(97)).tobytes().decode("ascii")
    return " ".join(str(int(v)) for v in symbols)


def random_text(length: int, sigma: int, seed: int) -> str:
    return render_symbols(random_symbols(length, sigma, seed), sigma)
