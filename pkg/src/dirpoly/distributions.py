"""Exact rational distributions and their realisation as bundles.

Any finite distribution whose probabilities are rational arises from a
bundle: clear denominators by the least common multiple N of the reduced
denominators, and give outcome x a fibre of prob(x) * N draws.  That bundle
is the smallest one inducing the distribution, and dividing fibre sizes by
the draw count recovers the probabilities exactly.  Probabilities are
``fractions.Fraction`` end to end; nothing here touches floats.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .core import LabelledBundle


@dataclass(frozen=True)
class RationalDistribution:
    """Ordered (label, probability) pairs with exact probabilities summing to 1."""

    entries: tuple[tuple[str, Fraction], ...]

    def __post_init__(self):
        entries = tuple((label, Fraction(p)) for label, p in self.entries)
        object.__setattr__(self, "entries", entries)
        seen = set()
        for label, p in entries:
            if not isinstance(label, str):
                raise TypeError("labels must be strings")
            if p < 0:
                raise ValueError(f"negative probability {p} for {label!r}")
            if label in seen:
                raise ValueError(f"duplicate outcome label {label!r}")
            seen.add(label)
        total = sum((p for _, p in entries), start=Fraction(0))
        if total != 1:
            raise ValueError(f"probabilities must sum to 1 exactly, got {total}")

    @property
    def labels(self) -> tuple[str, ...]:
        return tuple(label for label, _ in self.entries)

    @property
    def probabilities(self) -> tuple[Fraction, ...]:
        return tuple(p for _, p in self.entries)


def from_rational_distribution(dist: RationalDistribution) -> LabelledBundle:
    """The minimal bundle realising the distribution.

    The draw count is the lcm of the reduced denominators, so every fibre
    size prob(x) * N is an exact integer.
    """
    n = math.lcm(*(p.denominator for _, p in dist.entries))
    fibres = tuple((label, int(p * n)) for label, p in dist.entries)
    return LabelledBundle(fibres)


def to_distribution(bundle: LabelledBundle) -> RationalDistribution:
    """The empirical distribution of a bundle, as exact reduced fractions."""
    total = bundle.num_draws
    if total == 0:
        raise ValueError("a bundle with no draws has no distribution")
    return RationalDistribution(
        tuple((label, Fraction(size, total)) for label, size in bundle.fibres)
    )


def product_bundle(b1: LabelledBundle, b2: LabelledBundle) -> LabelledBundle:
    """The product bundle: paired labels, multiplied fibre sizes.

    Its empirical distribution is the independent product of the two
    marginals, and its polynomial is the product of theirs.
    """
    fibres = tuple(
        (f"({l1},{l2})", s1 * s2)
        for l1, s1 in b1.fibres
        for l2, s2 in b2.fibres
    )
    return LabelledBundle(fibres)
