"""Exact certification of local nilpotent-cone computations for parabolic Hitchin systems."""

from .series import AtLeast, Exact, TruncatedLaurentSeries, Valuation, series_make, series_valuation
from .partitions import Partition, dual_partition, n_of
from .linalg import RationalMatrix, SeriesMatrix, charpoly_coeffs, jordan_type, rational_rank

__version__ = "0.1.0"
