"""Exact enumeration of standard fillings and plane partitions of truncated
Young diagrams."""
from .errors import TableauxError
from .formulas import (
    CountResult,
    Method,
    count_rect_minus_almost_square,
    count_rect_minus_staircase,
    count_staircase_minus_box,
    gf_rect_minus_almost_square,
    gf_rect_minus_staircase,
    gf_staircase_minus_box,
)
from .hooks import catalan, f_straight, g_shifted, g_staircase
from .oracle import count_syt_oracle, pp_series_oracle
from .phi import SkewSSYT, phi_shifted, phi_shifted_inverse, phi_straight, phi_straight_inverse
from .qseries import QPoly, QRationalFn, QSeries, count_from_gf, expand, limit_at_one, qbinom
from .shapes import (
    Kind,
    Partition,
    TruncatedShape,
    make_shape,
    poset_of,
    rect_minus_almost_square,
    rect_minus_staircase,
    shifted_staircase_minus_staircase,
)
from .symfunc import rsk, rsk_inverse, schur_eval, skew_schur_eval

__version__ = "0.1.0"
