from __future__ import annotations

from dataclasses import dataclass, field

from .ring import QSeries, series_compare, ComparisonReport


@dataclass(frozen=True)
class Citation:
    anchor: str
    quote: str
    note: str = ""


@dataclass
class IdentityInstance:
    """A named pair of series expected to agree coefficientwise."""

    id: str
    lhs: QSeries
    rhs: QSeries
    citation: Citation
    default_acc: int = 30
    expected: str = "pass"
    params: dict = field(default_factory=dict)

    def compare(self, through: int | None = None) -> ComparisonReport:
        if through is None:
            through = min(self.lhs.acc, self.rhs.acc)
        return series_compare(self.lhs, self.rhs, through)
