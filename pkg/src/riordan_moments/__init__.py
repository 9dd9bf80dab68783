"""Exact arithmetic for Riordan moment sequences and the transformation
``T = (1/x) Rev(x S(1/E))`` taking exponential to ordinary moment series."""

from .cf import (
    JFraction,
    ScalingSequence,
    SQUARES,
    TRIANGULAR,
    bareiss_det,
    cf_map,
    hankel_from_beta,
    hankel_oracle,
    jfraction_to_series,
    series_to_jfraction,
)
from .errors import RiordanError
from .eulerian import (
    EulerianParams,
    G_series,
    eulerian_egf,
    symmetric_eulerian_egf,
    symmetric_image_series,
    triangle_from_bivariate,
)
from .fixtures import load_fixture, load_triangle, oeis_fetch, parse_bfile, verify_sequence
from .gfspec import GfSpec
from .kernel import Poly, RatFunc, Y
from .riordan import (
    LowerTriangular,
    OrthoPolyParams,
    RiordanPair,
    moments_ordinary,
    production_matrix,
    riordan_inverse,
    riordan_matrix,
    riordan_multiply,
)
from .series import (
    Series,
    lagrange_invert,
    series_compose,
    series_recip,
    series_revert,
    trig_pair_scaled,
)
from .transforms import (
    EgfSeries,
    OgfSeries,
    invert_transform,
    sumudu,
    sumudu_inv,
    transform_T,
    transform_T_inv,
)

__version__ = "0.1.0"
