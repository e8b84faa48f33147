import random
from types import SimpleNamespace

import pytest

from sagp.classify import build_tables, classify_pivots
from sagp.core import AugmentedText, Text
from sagp.palindromes import compute_buckets, compute_pals
from sagp.text_index import build_aug_index, build_rmq
from sagp.type1_stree import build_rev_index
from sagp.type2 import build_findr

ALPHABET = "abcdefghijklmnopqrstuvwxyz"


def prep(s):
    """All indexes for one input string, as a namespace."""
    text = s if isinstance(s, Text) else Text(s)
    aug = AugmentedText(text)
    idx = build_aug_index(aug)
    rmq = build_rmq(idx)
    pals = compute_pals(text)
    buckets = compute_buckets(pals)
    tables = build_tables(text)
    classify_pivots(text, pals, tables)
    findr = build_findr(text, tables)
    rev_idx = build_rev_index(text)
    return SimpleNamespace(
        text=text, aug=aug, idx=idx, rmq=rmq, pals=pals,
        buckets=buckets, tables=tables, findr=findr, rev_idx=rev_idx,
    )


def quads(sagps):
    return {(s.pivot, s.w_len, s.gap_len, s.u_len) for s in sagps}


def random_string(rng: random.Random, nmax: int, sigma: int, nmin: int = 1) -> str:
    n = rng.randint(nmin, nmax)
    return "".join(rng.choice(ALPHABET[:sigma]) for _ in range(n))


def rgs_strings(max_n: int, max_sigma: int):
    """Every string (lengths 1..max_n) over at most max_sigma symbols, one
    representative per alphabet-relabelling class (first occurrences appear
    in alphabet order)."""
    buf = []

    def rec(used):
        if buf:
            yield "".join(buf)
        if len(buf) == max_n:
            return
        for c in range(min(used + 1, max_sigma)):
            buf.append(ALPHABET[c])
            yield from rec(max(used, c + 1))
            buf.pop()

    yield from rec(0)


def structured_families(max_n: int):
    for n in range(1, max_n + 1):
        yield "a" * n
    for n in range(2, max_n + 1, 2):
        yield "ab" * (n // 2)
    for n in range(3, max_n + 1, 3):
        yield "abc" * (n // 3)


def fuzz_corpus(count: int = 1000, nmax: int = 64, seed: int = 20240817):
    """Seeded random strings over sigma in {1, 2, 3, 4, 8}."""
    rng = random.Random(seed)
    sigmas = [1, 2, 3, 4, 8]
    out = []
    for i in range(count):
        sigma = sigmas[i % len(sigmas)]
        out.append(random_string(rng, nmax, sigma))
    return out


@pytest.fixture(scope="session")
def small_fuzz():
    return fuzz_corpus(count=200, nmax=48, seed=7)
