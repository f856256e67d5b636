"""Exact Dirichlet-polynomial arithmetic, bundles, entropy, and the rectangle rig."""

from .core import DirPoly, LabelledBundle
from .distributions import (
    RationalDistribution,
    from_rational_distribution,
    product_bundle,
    to_distribution,
)
from .expr import ParseError, format_poly, parse
from .homs import (
    BundleMorphism,
    enumerate_bundle_morphisms,
    hom_count,
    hom_count_over_base,
    morphism_is_valid,
)
from .measures import (
    AreaCheck,
    CrossAreaCheck,
    CrossMeasures,
    Measures,
    check_cross_rectangle_area,
    check_rectangle_area,
    cross_measures,
    entropy,
    measures,
)
from .rect import ONE, ZERO, RectValue, WidthApprox, rect_of

__version__ = "0.1.0"

__all__ = [
    "AreaCheck",
    "BundleMorphism",
    "CrossAreaCheck",
    "CrossMeasures",
    "DirPoly",
    "LabelledBundle",
    "Measures",
    "ONE",
    "ParseError",
    "RationalDistribution",
    "RectValue",
    "WidthApprox",
    "ZERO",
    "check_cross_rectangle_area",
    "check_rectangle_area",
    "cross_measures",
    "entropy",
    "enumerate_bundle_morphisms",
    "format_poly",
    "from_rational_distribution",
    "hom_count",
    "hom_count_over_base",
    "measures",
    "morphism_is_valid",
    "parse",
    "product_bundle",
    "rect_of",
    "to_distribution",
]
