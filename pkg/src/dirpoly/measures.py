"""Entropy, length, and the rectangle-area identity, plus the cross versions.

A bundle with at least one draw is an empirical distribution: outcome i has
probability |d[i]| / |d(1)|.  Its entropy H is the base-2 Shannon entropy of
that distribution, and its length L = 2**H is the perplexity.  Together with
the area A (total draws) and width W from the rectangle rig, these satisfy

    A = L * W

exactly, which ``check_rectangle_area`` verifies two ways: as a float
identity and in exact-logarithmic form 2**(A*H) * P == A**A, where P is the
integer W**A.

The cross versions compare a data bundle d against a model bundle e over
the same outcome labels.  H(d, e) is the expected surprisal of the model
under the data; it is +inf as soon as the model gives an impossible outcome
positive data mass, in which case the cross width is 0 and the cross
rectangle-area check is reported as degenerate rather than pass/fail.
Kullback-Leibler divergence falls out as H(d, e) - H(d).

Fibre sizes of 0 follow the limit convention 0 * log 0 == 0 throughout.
All floats are computed from exact integers at the last step.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .core import DirPoly, LabelledBundle
from .homs import hom_count_over_base
from .rect import rect_of

#: Default relative tolerance of the rectangle-area checks.
DEFAULT_TOL = 1e-9


@dataclass(frozen=True)
class Measures:
    """Area, power product, width, entropy (bits), and length of one polynomial."""

    area: int
    power_product: int
    width: float
    entropy: float
    length: float


@dataclass(frozen=True)
class CrossMeasures:
    """Cross entropy/area/width/length and KL divergence; +inf is math.inf."""

    cross_entropy: float
    cross_area: int
    cross_width: float
    cross_length: float
    kl: float


def entropy(bundle: LabelledBundle) -> float:
    """Base-2 Shannon entropy of the bundle's empirical distribution."""
    total = bundle.num_draws
    if total == 0:
        raise ValueError("entropy is undefined for a bundle with no draws")
    log_total = math.log2(total)
    h = 0.0
    for _, size in bundle.fibres:
        if size:
            h += size / total * (log_total - math.log2(size))
    return h


def measures(d: DirPoly) -> Measures:
    """All five measures of a polynomial with at least one draw."""
    r = rect_of(d)
    if r.area == 0:
        raise ValueError("measures are undefined for a polynomial with no draws")
    h = entropy(d.to_bundle())
    return Measures(
        area=r.area,
        power_product=r.power_product,
        width=r.width().value,
        entropy=h,
        length=2.0**h,
    )


@dataclass(frozen=True)
class AreaCheck:
    """Result of the rectangle-area verification for one polynomial.

    ``float_error`` is |A - L*W| against the bound tol*A; ``log_error`` is
    |A*H + log2(P) - A*log2(A)| against tol*A*log2(A), the exact-log form.
    """

    measures: Measures
    product: float
    float_error: float
    float_bound: float
    log_error: float
    log_bound: float
    tol: float
    passed: bool


def check_rectangle_area(d: DirPoly, tol: float = DEFAULT_TOL) -> AreaCheck:
    """Verify A == L*W for one polynomial, both in floats and in log form."""
    m = measures(d)
    product = m.length * m.width
    float_error = abs(m.area - product)
    float_bound = tol * m.area
    log_area = math.log2(m.area)
    log_error = abs(m.area * m.entropy + math.log2(m.power_product) - m.area * log_area)
    log_bound = tol * m.area * log_area
    return AreaCheck(
        measures=m,
        product=product,
        float_error=float_error,
        float_bound=float_bound,
        log_error=log_error,
        log_bound=log_bound,
        tol=tol,
        passed=float_error <= float_bound and log_error <= log_bound,
    )


def cross_measures(bd: LabelledBundle, be: LabelledBundle) -> CrossMeasures:
    """Cross measures of data bundle bd against model bundle be.

    The bundles must carry identical label sets; fibres are matched by
    label.  The cross width is the |d(1)|-th root of the exact integer
    product of |e[i]|**|d[i]|.
    """
    d_total = bd.num_draws
    e_total = be.num_draws
    if set(bd.labels) != set(be.labels):
        raise ValueError("bundles must have identical label sets")
    if d_total == 0 or e_total == 0:
        raise ValueError("cross measures are undefined for a bundle with no draws")

    e_sizes = be.sizes_by_label
    log_e_total = math.log2(e_total)
    h = 0.0
    for label, d_size in bd.fibres:
        if d_size == 0:
            continue
        e_size = e_sizes[label]
        if e_size == 0:
            h = math.inf
            break
        h += d_size / d_total * (log_e_total - math.log2(e_size))

    power = hom_count_over_base(bd, be)
    width = 0.0 if power == 0 else 2.0 ** (math.log2(power) / d_total)
    if math.isinf(h):
        length = math.inf
        kl = math.inf
    else:
        length = 2.0**h
        kl = h - entropy(bd)
    return CrossMeasures(
        cross_entropy=h,
        cross_area=e_total,
        cross_width=width,
        cross_length=length,
        kl=kl,
    )


@dataclass(frozen=True)
class CrossAreaCheck:
    """Result of the cross rectangle-area verification.

    ``status`` is "pass", "fail", or "degenerate"; the latter means some
    outcome has positive data mass but an empty model fibre, where inf * 0
    leaves the identity undefined and no verdict is given.
    """

    status: str
    cross: CrossMeasures
    product: float | None
    float_error: float | None
    float_bound: float | None
    tol: float


def check_cross_rectangle_area(
    bd: LabelledBundle, be: LabelledBundle, tol: float = DEFAULT_TOL
) -> CrossAreaCheck:
    """Verify A(d,e) == L(d,e) * W(d,e), or report the pair as degenerate."""
    cm = cross_measures(bd, be)
    if math.isinf(cm.cross_entropy):
        return CrossAreaCheck(
            status="degenerate", cross=cm, product=None,
            float_error=None, float_bound=None, tol=tol,
        )
    product = cm.cross_length * cm.cross_width
    float_error = abs(cm.cross_area - product)
    float_bound = tol * cm.cross_area
    status = "pass" if float_error <= float_bound else "fail"
    return CrossAreaCheck(
        status=status, cross=cm, product=product,
        float_error=float_error, float_bound=float_bound, tol=tol,
    )
