"""Shared generators for randomized suites.

Seeded ``random.Random`` generators drive the fixed-size corpora; the
hypothesis strategies drive the law tests.
"""

from __future__ import annotations

import random

from hypothesis import strategies as st

from dirpoly import DirPoly, LabelledBundle

# Canonical polynomials with small bases and coefficients.
polys = st.dictionaries(st.integers(0, 8), st.integers(1, 8), max_size=5).map(DirPoly)
nonempty_polys = polys.filter(lambda d: d.num_draws >= 1)

# Bundles in arbitrary fibre order, possibly with empty fibres.
bundles = st.lists(st.integers(0, 6), min_size=1, max_size=5).map(
    LabelledBundle.from_sizes
)
nonempty_bundles = bundles.filter(lambda b: b.num_draws >= 1)


def random_poly(
    rng: random.Random,
    max_base: int = 8,
    max_coeff: int = 8,
    max_terms: int = 5,
    min_draws: int = 0,
) -> DirPoly:
    while True:
        terms = {
            rng.randint(0, max_base): rng.randint(1, max_coeff)
            for _ in range(rng.randint(0, max_terms))
        }
        d = DirPoly(terms)
        if d.num_draws >= min_draws:
            return d


def random_bundle(
    rng: random.Random,
    max_outcomes: int = 4,
    max_size: int = 4,
    min_size: int = 0,
    max_draws: int | None = None,
) -> LabelledBundle:
    while True:
        k = rng.randint(1, max_outcomes)
        sizes = [rng.randint(min_size, max_size) for _ in range(k)]
        if max_draws is None or sum(sizes) <= max_draws:
            return LabelledBundle.from_sizes(sizes)


def random_aligned_pair(
    rng: random.Random,
    max_outcomes: int = 6,
    max_size: int = 6,
    min_model_size: int = 1,
) -> tuple[LabelledBundle, LabelledBundle]:
    """Two bundles over one label set, the model's fibres listed shuffled."""
    k = rng.randint(1, max_outcomes)
    labels = [f"o{i}" for i in range(1, k + 1)]
    bd = LabelledBundle(tuple((l, rng.randint(1, max_size)) for l in labels))
    shuffled = labels[:]
    rng.shuffle(shuffled)
    be = LabelledBundle(tuple((l, rng.randint(min_model_size, max_size)) for l in shuffled))
    return bd, be
