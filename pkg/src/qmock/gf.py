"""Generating functions of the partition families, built from the series code."""

from __future__ import annotations

from .mock import mock
from .qkit import Factors, QBase, sum_terms
from .ring import Monomial, QSeries, mono, series_scale

_B = QBase()
q = _B.pow


def qomega(acc: int) -> QSeries:
    return series_scale(q(1), mock("omega", acc=acc - 1))


def nu_neg(acc: int) -> QSeries:
    return mock("nu", qsign=-1, acc=acc)


def overpartition_gf(acc: int) -> QSeries:
    return Factors(num=(_B.poch(-q(1), None),), den=(_B.poch(q(1), None),)).build(acc)


def p_star_gf(acc: int) -> QSeries:
    return sum_terms(lambda n: Factors(q(n), (_B.poch(-q(n + 1), None),),
                                       (_B.poch(q(2 * n + 1), None, 2),)), acc)


def p_substar_gf(acc: int) -> QSeries:
    return sum_terms(lambda n: Factors(q(2 * n + 1), (), (_B.poch(q(1), n + 1, 2),) * 2), acc)


def p_prime_gf(acc: int) -> QSeries:
    return sum_terms(lambda n: Factors(q(n), (_B.poch(-q(n), n), _B.poch(-q(2 * n + 1), None, 2))), acc)


GF = {
    "p_omega": qomega, "p_nu": nu_neg, "p_star": p_star_gf, "p_substar": p_substar_gf,
    "p_prime": p_prime_gf, "overpartitions": overpartition_gf,
}
