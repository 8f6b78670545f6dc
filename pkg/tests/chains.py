"""The two alpha=1 specialization chains, each link checked on its own."""

from __future__ import annotations

from qmock import registry as R
from qmock.mock import mock
from qmock.qkit import Factors
from qmock.ring import ONE, Monomial, QSeries, series_compare, series_mul, series_q_power, series_scale

P = Monomial.parse


def _agree(a: QSeries, b: QSeries, acc: int) -> bool:
    return series_compare(a, b, acc).passed


def first_chain(acc: int = 30) -> list[tuple[str, bool]]:
    """Generalized first identity at alpha=1 down to the two-variable omega identity."""
    g = mock("G_def", ONE, P("z"), acc=acc)
    omega_sq = series_q_power(mock("omega_bi", P("z^2"), acc=acc // 2), 2)
    return [
        ("theorem at alpha=1", R.verify("THM3_A1", acc).ok),
        ("lemma (1psi1 special case)", R.verify("LEM_1PSI1", acc).ok),
        ("correction term vanishes", R.verify("F_ZERO", acc).ok),
        ("H prefactor cancels", _agree(mock("H_def", ONE, P("z"), acc=acc),
                                       series_scale(P("q^2"), mock("omega1", ONE, P("z"), acc=acc)), acc)),
        ("omega1(1,z;q) = omega(z^2;q^2)", R.verify("OMEGA1_OMEGA", acc).ok),
        ("G(1,z;q) is the two-variable sum at (z^2,q^2)",
         _agree(g, series_q_power(R.ay_omega_lhs(P("z^2"), acc // 2), 2), acc)),
        ("endpoint AY_OMEGA", R.verify("AY_OMEGA", acc).ok),
        ("end to end", _agree(g, series_scale(P("q^2"), omega_sq), acc)),
    ]


def second_chain(acc: int = 30) -> list[tuple[str, bool]]:
    """Generalized second identity at alpha=1 down to the two-variable nu identity."""
    pre = Factors(num=((P("-z*q^2"), P("q^2"), None),)).build(acc)
    combined = series_scale(P("-z^-1"), R.spab_rhs(acc)) + series_mul(pre, R.spac_rhs(acc))
    return [
        ("theorem at alpha=1", R.verify("THM4_A1", acc).ok),
        ("reciprocity link", R.verify("NU_RECIP", acc).ok),
        ("first special value", R.verify("SPAB", acc).ok),
        ("q-Gauss special value", R.verify("SPAC", acc).ok),
        ("right side via the links", _agree(R.thm4_rhs(ONE, P("z"), acc), combined, acc)),
        ("links collapse to nu1(z;-q)", _agree(combined, mock("nu1", P("z"), qsign=-1, acc=acc), acc)),
        ("left sides coincide", _agree(R.thm4_lhs(ONE, P("z"), acc), R.ay_nu_lhs(P("z"), acc), acc)),
        ("endpoint AY_NU", R.verify("AY_NU", acc).ok),
    ]
