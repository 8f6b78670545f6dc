"""Exact truncated q-series toolkit for mock theta function identities."""

from .ring import (ComparisonReport, InsufficientAccuracy, LaurentPoly, Mismatch, Monomial,
                   NotInvertible, QSeries, mono, series_compare, series_invert, series_mul)
from .instance import Citation, IdentityInstance

__all__ = [
    "Citation", "ComparisonReport", "IdentityInstance", "InsufficientAccuracy", "LaurentPoly",
    "Mismatch", "Monomial", "NotInvertible", "QSeries", "mono", "series_compare",
    "series_invert", "series_mul",
]
