"""Catalog of identities as closed recipes, plus the verification harness."""

from __future__ import annotations

import json
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable

from . import partitions
from .gf import GF
from .instance import Citation, IdentityInstance
from .mock import andrews_alt_forms, equivalence_choi, mock
from .qkit import (Factors, QBase, TermFamily, classical, converge, partial_theta, sum_family,
                   sum_terms, theta_bilateral)
from .ring import (ONE, InsufficientAccuracy, Mismatch, Monomial, QSeries, series_compare,
                   series_mul, series_q_power, series_scale)

SCHEMA = "qmock/1"


class UnknownId(KeyError):
    pass


class AccuracyTooLow(ValueError):
    pass


P = Monomial.parse


def q(k: int, c: int = 1) -> Monomial:
    return Monomial(c, 0, 0, k)


def inf(a, step: int = 1) -> tuple:
    return (P(a) if isinstance(a, str) else a, q(step), None)


def fin(a, n: int, step: int = 1) -> tuple:
    return (P(a) if isinstance(a, str) else a, q(step), n)


def prod(acc: int, num=(), den=(), coef: Monomial | str = ONE) -> QSeries:
    """coef * prod(num) / prod(den) of Pochhammer factors, truncated at acc."""
    c = P(coef) if isinstance(coef, str) else coef
    return Factors(c, tuple(num), tuple(den)).build(acc)


def scale(m: Monomial | str, build: Callable[[int], QSeries], acc: int) -> QSeries:
    """m * build(...) with the inner accuracy raised to absorb m's q-exponent."""
    m = P(m) if isinstance(m, str) else m
    return converge(lambda n: series_scale(m, build(n - m.eq)), acc)


def mul(acc: int, *builds: Callable[[int], QSeries]) -> QSeries:
    def go(n):
        out = builds[0](n)
        for b in builds[1:]:
            out = series_mul(out, b(n))
        return out
    return converge(go, acc)


def terms(fn: Callable[[int], Factors], acc: int, start: int = 0) -> QSeries:
    return sum_terms(fn, acc, start)


def poly(acc: int, *ms: str) -> QSeries:
    return QSeries.from_terms([P(m) for m in ms], acc)


# shorthand for the ubiquitous special values
def nu_zz(acc: int) -> QSeries:
    """nu(z,-z;-q) = sum z^n q^(n^2+n) / (-zq;q^2)_{n+1}."""
    return mock("nu_tri", P("z"), P("-z"), qsign=-1, acc=acc)


def om_zz(acc: int) -> QSeries:
    """omega1(z,-z;-q) = sum q^(2n) / ((-zq;q^2)_{n+1} (q;q^2)_{n+1})."""
    return mock("omega1", P("z"), P("-z"), qsign=-1, acc=acc)


def theta_z(acc: int) -> QSeries:
    return partial_theta(P("z"), 2, 2, acc)


def sum_qn_prod(acc: int, sign: int, zden: str) -> QSeries:
    """sum (sign*q^{n+1};q)_oo q^n / (zden*q^{2n+1};q^2)_oo."""
    return terms(lambda n: Factors(q(n), (inf(q(n + 1, sign)),), (inf(P(zden) * q(2 * n + 1), 2),)), acc)


# -- entries -------------------------------------------------------------------------


@dataclass(frozen=True)
class Entry:
    id: str
    anchor: str
    quote: str
    sides: Callable[[int], tuple[QSeries, QSeries]]
    default_acc: int = 30
    expected: str = "pass"
    min_acc: int = 0
    note: str = ""


ENTRIES: list[Entry] = []


def entry(id: str, anchor: str, quote: str = "", default_acc: int = 30, expected: str = "pass",
          min_acc: int = 0, note: str = ""):
    def deco(fn):
        ENTRIES.append(Entry(id, anchor, quote, fn, default_acc, expected, min_acc, note))
        return fn
    return deco


def classical_entry(id: str, anchor: str, quote: str, name: str, params: dict[str, str],
                    step: int = 1, default_acc: int = 30, note: str = "") -> None:
    ps = {k: P(v) for k, v in params.items()}

    def sides(acc):
        inst = classical(name, ps, acc, step)
        return inst.lhs, inst.rhs

    ENTRIES.append(Entry(id, anchor, quote, sides, default_acc, note=note or
                         f"{name} at {', '.join(f'{k}={v}' for k, v in params.items())}, base q^{step}"))


# Andrews-Yee identities and their two-variable versions

@entry("PW", "Eq. (pwn)", "the number of partitions of", 40)
def _pw(acc):
    lhs = terms(lambda n: Factors(q(n), (), (fin(q(n), n + 1), inf(q(2 * n + 2), 2))), acc, 1)
    return lhs, scale(q(1), lambda n: mock("omega", acc=n), acc)


@entry("PN", "Eq. (pnn)", "", 40)
def _pn(acc):
    lhs = terms(lambda n: Factors(q(n), (fin(q(n + 1, -1), n), inf(q(2 * n + 2, -1), 2))), acc)
    return lhs, mock("nu", qsign=-1, acc=acc)


@entry("EPNT1", "Eq. (epnt1)", "new analogues of Euler's pentagonal number theorem", 40)
def _epnt1(acc):
    lhs = terms(lambda n: Factors(q(n), (), (fin(q(n, -1), n + 1), inf(q(2 * n + 2, -1), 2))), acc, 1)
    out, j = [], 0
    while 6 * j * j + 4 * j + 1 <= acc:
        e = 6 * j * j + 4 * j + 1
        out += [q(e, (-1) ** j), q(e + 4 * j + 2, (-1) ** j)]
        j += 1
    return lhs, QSeries.from_terms(out, acc)


@entry("EPNT2", "Eq. (epnt2)", "new analogues of Euler's pentagonal number theorem", 40)
def _epnt2(acc):
    lhs = terms(lambda n: Factors(q(n), (fin(q(n + 1), n), inf(q(2 * n + 2), 2))), acc)
    out, j = [], 0
    while j * (3 * j + 2) <= acc:
        e = j * (3 * j + 2)
        out += [q(e, (-1) ** j), q(e + 2 * j + 1, (-1) ** j)]
        j += 1
    return lhs, QSeries.from_terms(out, acc)


def ay_omega_lhs(z: Monomial, acc: int) -> QSeries:
    return terms(lambda n: Factors(q(n), (), (fin(z * q(n), n + 1), inf(z * q(2 * n + 2), 2))), acc, 1)


def ay_nu_lhs(z: Monomial, acc: int) -> QSeries:
    return terms(lambda n: Factors(q(n), (fin(-(z * q(n + 1)), n), inf(-(z * q(2 * n + 2)), 2))), acc)


@entry("AY_OMEGA", "Eq. (pwnz)", "beautiful two-variable generalizations")
def _ay_omega(acc):
    return ay_omega_lhs(P("z"), acc), scale(q(1), lambda n: mock("omega_bi", P("z"), acc=n), acc)


@entry("AY_NU", "Eq. (pnnz)", "beautiful two-variable generalizations")
def _ay_nu(acc):
    return ay_nu_lhs(P("z"), acc), mock("nu1", P("z"), qsign=-1, acc=acc)


def func_rel_rhs(a: Monomial, z: Monomial, acc: int) -> QSeries:
    def go(n):
        pt = partial_theta(a, 2, 2, n)
        first = Factors(den=(inf(-(z * q(1)), 2), inf(z * q(1) / a, 2))).apply(pt)
        return first - series_scale(z * q(1) / a, mock("omega1", a, z, acc=n))
    return converge(go, acc)


@entry("FUNC_REL", "Theorem 1.1", "linked by a nice functional relation")
def _func_rel(acc):
    return mock("nu_tri", P("a"), P("z"), acc=acc), func_rel_rhs(P("a"), P("z"), acc)


@entry("RAM_Z", "Eq. (ramanujanomeganuz)", "functional relation obtained by Andrews")
def _ram_z(acc):
    first = prod(acc, [inf("q^2", 2), inf("-q^2", 2), inf("-q^2", 2)], [inf("z^2*q^2", 4)])
    second = scale("z*q", lambda n: series_q_power(mock("omega_bi", P("z^2"), acc=n // 2), 2).truncate(n), acc)
    return mock("nu_bi", P("z"), acc=acc), first - second


@entry("RAM", "Eq. (ramanujanomeganu)", "Ramanujan's relation between", 40)
def _ram(acc):
    first = prod(acc, [inf("q^2", 2)] + [inf("-q^2", 2)] * 3)
    second = scale("q", lambda n: series_q_power(mock("omega", acc=n // 2), 2).truncate(n), acc)
    return mock("nu", acc=acc), first - second


def thm3_sides(a: Monomial, z: Monomial, acc: int) -> tuple[QSeries, QSeries]:
    lhs = mock("G_def", a, z, acc=acc)
    rhs = converge(lambda n: mock("H_def", a, z, acc=n) + mock("F_func", a, z, acc=n), acc)
    return lhs, rhs


@entry("THM3", "Theorem 1.2, Eqs. (result1)+(F)", "Let ω₁(α,z;q) be defined", min_acc=10)
def _thm3(acc):
    return thm3_sides(P("a"), P("z"), acc)


def thm4_lhs(a: Monomial, z: Monomial, acc: int) -> QSeries:
    return terms(lambda n: Factors(q(n), (fin(-(z * q(1)), 2 * n), inf(-(z * q(2 * n + 2)), 2)),
                                   (fin(-(z * q(1) / a), n),)), acc)


def thm4_rhs(a: Monomial, z: Monomial, acc: int) -> QSeries:
    x = a * a / z

    def go(n):
        nu = mock("nu_tri", x, -x, qsign=-1, acc=n)
        first = Factors(-(a / z), (inf(-(z * q(1))),), (inf(-(z * q(1) / a)),)).apply(nu)
        s = terms(lambda m: Factors((a ** m) * q(m * (m + 1) // 2), (fin(-(a / z), m + 1),),
                                    (fin(-(x * q(1)), m + 1, 2),)), n)
        second = Factors(num=(inf(-(z * q(2)), 2),)).apply(s)
        return first + second
    return converge(go, acc)


@entry("THM4", "Theorem 1.3, Eq. (gsayeqn1)", "Let ν(α, z; q) be defined")
def _thm4(acc):
    return thm4_lhs(P("a"), P("z"), acc), thm4_rhs(P("a"), P("z"), acc)


# classical ingredients

@entry("SUM_THETA", "Sec. 1 display", "easy consequence of the Jacobi triple product", 40)
def _sum_theta(acc):
    return partial_theta(ONE, 2, 2, acc), prod(acc, [inf("q^2", 2), inf("-q^2", 2), inf("-q^2", 2)])


@entry("JTP", "Eq. (jtpi) standard form", "the Jacobi triple product identity",
       note="standard form with (q^2;q^2)_oo")
def _jtp(acc):
    inst = classical("jacobi_triple", {"x": P("z")}, acc)
    return inst.lhs, inst.rhs


@entry("JTP_PRINTED", "Eq. (jtpi) printed form", "the Jacobi triple product identity",
       expected="fail", note="printed form with (-q^2;q^2)_oo; first mismatch at q^2")
def _jtp_printed(acc):
    return theta_bilateral(P("z"), acc), prod(acc, [inf("-z*q", 2), inf("-q*z^-1", 2), inf("-q^2", 2)])


classical_entry("GEA90", "Eq. (gea90_thm1)", "a deep identity of Andrews", "andrews_deep",
                {"B": "z^2*q^2*a^-1", "a": "z*q*a^-1", "b": "-z*q", "A": "a"}, step=2)
classical_entry("GAUSS2", "Eq. (gauss)", "", "gauss_second", {"a": "q", "b": "-q*z^-1"})
classical_entry("FINE", "Eq. (nfine)", "a corrected version of a formula", "fine_corrected",
                {"b": "-z*q", "u": "-z*q*a^-1"}, step=2)


@entry("LEM_1PSI1", "Lemma 4.1, Eq. (1psi1spleqn)", "For |zq|<1 and |q|<1")
def _lem(acc):
    lhs = terms(lambda m: Factors(P("z*q") ** m, (fin("-q*z^-1", m, 2),), (fin("-z*q^3", m, 2),)), acc)
    rhs = prod(acc + 1, [inf("z^2*q^4", 4), inf("q^2", 2), inf("-q^2", 2), inf("-q^2", 2)],
               [inf("z^2*q^2", 4)]).mul_binomial(P("z*q"))
    return lhs, rhs.truncate(acc)


classical_entry("HEINE_INST", "Sec. 4.1", "", "heine",
                {"b": "q", "c": "-z*q^2", "a": "-z^-1", "x": "z*q"},
                note="heine at b=q, c=-yq, a=-q/y, x=y with y=zq")
classical_entry("QBINOM", "Eq. (6a)", "we apply the q-binomial theorem", "q_binomial",
                {"a": "z^2", "x": "q"}, step=2)
classical_entry("ONE_PSI_ONE", "Eq. (1psi1)", "", "one_psi_one",
                {"a": "-q*z^-1", "b": "-z*q^3", "t": "z*q"})


# symmetry and reciprocity

@entry("F_SYM", "Corollary 4.2, Eq. (frel)", "For F(α,z;q) defined by", min_acc=10)
def _f_sym(acc):
    return mock("F_func", P("a"), P("z"), acc=acc), mock("F_func", P("a^-1"), P("-z*a^-1"), acc=acc)


@entry("GH_SYM", "Eq. (relgh)", "It is straightforward to see")
def _gh_sym(acc):
    return mock("G_def", P("a"), P("z"), acc=acc), mock("G_def", P("a^-1"), P("-z*a^-1"), acc=acc)


@entry("GH_SYM_H", "Eq. (relgh)", "It is straightforward to see")
def _gh_sym_h(acc):
    return mock("H_def", P("a"), P("z"), acc=acc), mock("H_def", P("a^-1"), P("-z*a^-1"), acc=acc)


classical_entry("RAM_RECIP", "Theorem 4.3, Eq. (reciprocitytheorem)", "his reciprocity theorem",
                "ramanujan_reciprocity", {"a": "z*q", "b": "-z*q*a^-1"}, step=2)
classical_entry("KANG_SPECIAL", "Eq. (3varrt) at a=zq, b=-zq/α, c=z²q²/α", "special case a=zq",
                "kang_reciprocity", {"a": "z*q", "b": "-z*q*a^-1", "c": "z^2*q^2*a^-1"}, step=2)


@entry("RHO3_LHS", "Eq. (app1)", "where ρ₃(a, b, c)")
def _rho3_lhs(acc):
    lhs = terms(lambda m: Factors(P("z*q") ** m, (fin("-a*q*z^-1", m, 2),), (fin("-z*q^3", m, 2),)), acc)
    rhs = converge(lambda n: mock("rho3", P("z*q"), P("-z*q*a^-1"), P("z^2*q^2*a^-1"), step=2, acc=n)
                   .div_binomial(P("-a*z^-1*q^-1")), acc)
    return lhs, rhs


@entry("RHO3_RHS", "Eq. (app2)", "where ρ₃(a, b, c)")
def _rho3_rhs(acc):
    lhs = terms(lambda m: Factors(P("-z*q*a^-1") ** m, (fin("q*z^-1", m, 2),), (fin("z*q^3*a^-1", m, 2),)),
                acc)
    rhs = converge(lambda n: mock("rho3", P("-z*q*a^-1"), P("z*q"), P("z^2*q^2*a^-1"), step=2, acc=n)
                   .div_binomial(P("z^-1*q^-1")), acc)
    return lhs, rhs


@entry("COV", "Eq. (cov)", "Replace n by −n−1")
def _cov(acc):
    lhs = series_scale(P("a"), partial_theta(P("a"), 2, 2, acc))
    fam = TermFamily.of(lambda n: Factors(P("a") ** (-n) * q(n * n + n)), -1, -1, -1)
    return lhs, sum_family(fam, acc)


@entry("JAC", "Eq. (jac)", "")
def _jac(acc):
    return theta_bilateral(P("a*q^-1"), acc), prod(acc, [inf("-a", 2), inf("-q^2*a^-1", 2), inf("q^2", 2)])


classical_entry("PFAFF", "Eq. (kum)", "q-analogue of Pfaff's transformation", "jackson_pfaff",
                {"a": "q^2", "c": "-z*q^3", "b": "z^2*q^2*a^-1", "x": "z*q"}, step=2)
classical_entry("EQ41", "Eq. (eq41)", "From [Equation (41)]", "eq41", {"x": "a*q*z^-1"})


@entry("EX6", "display after p. 29, Exercise 6", "p. 29, Exercise 6")
def _ex6(acc):
    lhs = terms(lambda m: Factors(P("-q*a^2*z^-1") ** m, (fin("q", m, 2),)), acc)
    return lhs, mock("nu_tri", P("a^2*z^-1"), P("-a^2*z^-1"), qsign=-1, acc=acc)


def nu_recip_sides(a: Monomial, z: Monomial, qsign: int, acc: int) -> tuple[QSeries, QSeries]:
    Q = QBase(1, qsign)
    lhs = converge(lambda n: mock("nu_tri", a, z, qsign=qsign, acc=n)
                   + series_scale(a.inverse(), mock("nu_tri", a.inverse(), -(z / a), qsign=qsign, acc=n)), acc)
    rhs = Factors(num=(Q.poch(-(a * Q.pow(2)), None, 2), Q.poch(-a.inverse(), None, 2),
                       Q.poch(Q.pow(2), None, 2)),
                  den=(Q.poch(-(z * Q.pow(1)), None, 2), Q.poch(z * Q.pow(1) / a, None, 2))).build(acc)
    return lhs, rhs


@entry("NU_RECIP", "Eq. (fromreciprocity)", "Let ν(α, z; q) be defined in")
def _nu_recip(acc):
    return nu_recip_sides(P("a"), P("z"), 1, acc)


# the chain ending at the two-variable nu identity

@entry("COR52", "Corollary 5.2, Eq. (newprrof1)", "z symbolic (stated for z ∈ ℤ); proof uses Theorem 1.3",
       note="stated for integer z, holds for symbolic z; proof text cites Theorem 1.2 but uses Theorem 1.3")
def _cor52(acc):
    rhs = terms(lambda n: Factors(P("z") ** n * q(n * n + n), (), (fin("q", n + 1, 2),)), acc)
    return ay_nu_lhs(P("z"), acc), rhs


def spab_rhs(acc: int) -> QSeries:
    first = prod(acc, [inf("-z", 2), inf("-q^2*z^-1", 2), inf("q^2", 2)], [inf("q", 2), inf("-q*z^-1", 2)])
    return first - series_scale(P("z"), mock("nu1", P("z"), qsign=-1, acc=acc))


@entry("SPAB", "Eq. (spab)", "")
def _spab(acc):
    return mock("nu_tri", P("z^-1"), P("-z^-1"), qsign=-1, acc=acc), spab_rhs(acc)


def spac_lhs(acc: int) -> QSeries:
    return terms(lambda n: Factors(q(n * (n + 1) // 2), (fin("-z^-1", n + 1),), (fin("-q*z^-1", n + 1, 2),)),
                 acc)


def spac_rhs(acc: int) -> QSeries:
    return prod(acc, [inf("q^2", 2), inf("-z^-1", 2)], [inf("q", 2), inf("-q*z^-1", 2)])


@entry("SPAC", "Eq. (spac)", "")
def _spac(acc):
    return spac_lhs(acc), spac_rhs(acc)


# the case alpha = z

@entry("THM_AZ", "Theorem 6.1, Eq. (a=zfunctionaleqn)", "")
def _thm_az(acc):
    lhs = nu_zz(acc) + scale("2*q", om_zz, acc)
    return lhs, sum_qn_prod(acc, -1, "-z")


@entry("P25", "Sec. 6.1 display", "use the identity")
def _p25(acc):
    inst = classical("andrews_p25", {"a": P("z*q^-1")}, acc)
    return inst.lhs, inst.rhs


@entry("P24", "Sec. 1 display", "using Andrews' identity")
def _p24(acc):
    inst = classical("andrews_p24", {"a": P("z"), "b": P("a")}, acc)
    return inst.lhs, inst.rhs


def rel_mz_rhs(acc: int) -> QSeries:
    pre = Factors(num=(inf("-z*q", 2), inf("q", 2)))
    return converge(lambda n: pre.apply(nu_zz(n) + scale("q", om_zz, n)), acc)


@entry("REL_MZ", "Eq. (relation-z)", "")
def _rel_mz(acc):
    return theta_z(acc), rel_mz_rhs(acc)


def sos_lhs(acc: int) -> QSeries:
    return terms(lambda n: Factors(q(n), (fin("-z*q", n, 2),), (fin("-q", n),)), acc)


@entry("SOS_A", "Eq. (6.3.5)", "found in Ramanujan's lost notebook")
def _sos_a(acc):
    pre = Factors(num=(inf("q", 2), inf("-z*q", 2)))
    return sos_lhs(acc), series_scale(Monomial(2), theta_z(acc)) - pre.apply(nu_zz(acc))


@entry("SOS_B", "Eq. (10.4b)", "")
def _sos_b(acc):
    pre = Factors(num=(inf("q", 2), inf("-z*q", 2)))
    return sos_lhs(acc), theta_z(acc) + converge(lambda n: pre.apply(scale("q", om_zz, n)), acc)


classical_entry("RF2", "Eq. (rogers-fine2)", "special case of the Rogers–Fine identity", "rogers_fine_61",
                {"a": "q^-1", "t": "-z*q"}, step=2)
classical_entry("RF", "Eq. (rogers-fine)", "special case of the Rogers–Fine identity", "rogers_fine_133",
                {"a": "q^-1", "t": "-z*q"}, step=2)


def rf4_rhs(acc: int) -> QSeries:
    return terms(lambda n: Factors(P("-z^2") ** n * q(3 * n * n + 2 * n),
                                   (fin("q", n, 2), fin(P("-z") * q(4 * n + 2), 1)),
                                   (fin("-z*q", n + 1, 2),)), acc)


@entry("RF4", "Eq. (rogers-fine4)", "")
def _rf4(acc):
    return nu_zz(acc), rf4_rhs(acc)


@entry("COR_AZ", "Eq. (a=zfunctionalcoro1eqn)", "")
def _cor_az(acc):
    return sum_qn_prod(acc, -1, "-z") - scale("2*q", om_zz, acc), rf4_rhs(acc)


@entry("AZ_NEG1", "Eq. (alphaagain)", "", 40)
def _az_neg1(acc):
    second = terms(lambda n: Factors(q(2 * n + 1), (), (fin("q", n + 1, 2),) * 2), acc)
    out, j = [], 0
    while 3 * j * j + 2 * j <= acc:
        e = 3 * j * j + 2 * j
        out += [q(e, (-1) ** j), q(e + 2 * j + 1, (-1) ** j)]
        j += 1
    lhs = sum_qn_prod(acc, -1, "1") - series_scale(Monomial(2), second)
    return lhs, QSeries.from_terms(out, acc)


@entry("EULER_DISG", "Sec. 6.1 displays", "disguised form of Euler's theorem", 40)
def _euler_disg(acc):
    lhs = terms(lambda n: Factors(q(n), (inf(q(n + 1, -1)),)), acc)
    rhs = QSeries.one(acc) + series_scale(Monomial(2), terms(
        lambda n: Factors(q(2 * n + 1), (), (fin("q", n + 1, 2),)), acc))
    return lhs, rhs


def _gf_entry(id: str, anchor: str, family: str, quote: str = "") -> None:
    def sides(acc):
        return partitions.count_series(family, acc), GF[family](acc)
    ENTRIES.append(Entry(id, anchor, quote, sides, 25, note=f"enumerated {family} counts vs generating function"))


_gf_entry("PSTAR_GF", "Eq. (p^*n)", "p_star")
_gf_entry("PSUBSTAR_GF", "Eq. (p_*n)", "p_substar")


# the cases z = -1/q, alpha = -z, alpha = q

@entry("Z_NEG_QINV", "Sec. 6.2 corollary", "See also Kang's paper")
def _z_neg_qinv(acc):
    lhs = terms(lambda n: Factors(P("a") ** n * q(n * (n + 1) // 2), (), (fin("-a*q", n + 1),)), acc)
    return lhs, QSeries.one(acc)


@entry("ALPHA_NEG_Z", "Eq. (alpha=-zeqn)", "")
def _alpha_neg_z(acc):
    return nu_zz(acc), sum_qn_prod(acc, 1, "-z")


@entry("OMEGA_DIFF", "Sec. 6.3 second corollary", "ω(z,−z;−q) read as ω₁(z,−z;−q)",
       note="printed with two-argument omega; omega1 is meant; both sides multiplied by 2q")
def _omega_diff(acc):
    return scale("2*q", om_zz, acc), sum_qn_prod(acc, -1, "-z") - sum_qn_prod(acc, 1, "-z")


@entry("EULER_AT", "Eq. (aplha=-z=-qeqn)", "", 40)
def _euler_at(acc):
    lhs = terms(lambda n: Factors(q(n), (), (inf(q(n, -1)),)), acc, 1)
    return lhs, QSeries.one(acc) - prod(acc, [inf("q", 2)])


@entry("EULER_THM", "Sec. 6.3 display", "Recall Euler's theorem")
def _euler_thm(acc):
    inst = classical("euler", {"x": P("z")}, acc)
    return inst.lhs, inst.rhs


@entry("CORA", "Eq. (cora)", "", 40)
def _cora(acc):
    lhs = prod(acc, [inf("q", 2)]) - QSeries.one(acc)
    return lhs, scale("-q", lambda n: mock("nu_tri", P("-q"), P("q"), qsign=-1, acc=n), acc)


def aq_lhs(z: Monomial, acc: int) -> QSeries:
    return terms(lambda n: Factors(q(n), (fin(-(z * q(n)), n + 1), inf(-(z * q(2 * n + 2)), 2))), acc)


@entry("THM_AQ", "Theorem 6.9, Eq. (alpha=qeqn)", "For z ∈ ℂ and |q|<1")
def _thm_aq(acc):
    def go(n):
        first = scale("-q*z^-1", lambda k: mock("nu_tri", P("q^2*z^-1"), P("-q^2*z^-1"), qsign=-1, acc=k), n)
        ratio = prod(n + 1, [inf("-q"), inf("q^2", 2), inf("-q^2*z^-1", 2)], [inf("-q^3*z^-1", 2)])
        inner = ratio - QSeries.one(n + 1)
        second = series_scale(P("q^-1"), Factors(num=(inf("-z", 2),)).apply(inner))
        return first + second
    return aq_lhs(P("z"), acc), converge(go, acc)


def phi_lhs(acc: int) -> QSeries:
    return terms(lambda n: Factors(q(n), (fin(q(n, -1), n), inf(q(2 * n + 1, -1), 2))), acc)


@entry("PHI_COR", "Eq. (phiqa)", "the corrected version of", 40)
def _phi_cor(acc):
    rhs = QSeries.one(acc) - mock("phi", acc=acc) + prod(acc, [inf("q^2", 2)] + [inf("-q", 2)] * 3)
    return phi_lhs(acc), rhs


def nu_q_m1(acc: int) -> QSeries:
    """nu(q,-1;q) = sum q^(n^2+2n) / (q;q^2)_{n+1}."""
    return mock("nu_tri", P("q"), P("-1"), acc=acc)


@entry("COR_ZQ", "Eq. (eqnz=qTh10.12)", "", 40)
def _cor_zq(acc):
    return phi_lhs(acc), QSeries.one(acc) + scale("2*q", nu_q_m1, acc)


@entry("PPRIME_GF", "Eq. (gfeven)", "", 25, note="enumerated p_prime counts vs generating function")
def _pprime_gf(acc):
    return partitions.count_series("p_prime", acc), phi_lhs(acc)


@entry("CORC", "Corollary display ν(1/q,1;−q)", "", 40)
def _corc(acc):
    return mock("nu_tri", P("q^-1"), P("1"), qsign=-1, acc=acc), QSeries.one(acc) + scale("2*q", nu_q_m1, acc)


@entry("AQ_ZNEG1", "Eq. (alpha=q, z=-1)", "", 40,
       note="denominator (q^3;q^2)_n as obtained from Theorem 6.9 at z=-1; printed with (-q^3;q^2)_n")
def _aq_zneg1(acc):
    s = terms(lambda n: Factors(P("-1") ** n * q(n * n + n), (), (fin("q^3", n, 2),)), acc + 1, 1)
    return aq_lhs(P("-1"), acc), series_scale(P("-q^-1"), s)


@entry("FINAL_COR", "last Sec. 6 corollary", "", 40)
def _final_cor(acc):
    lhs = terms(lambda n: Factors(q(n), (fin(q(n + 2), n + 1), inf(q(2 * n + 4), 2))), acc)
    s = terms(lambda n: Factors(P("-1") ** n * q(n * n + n), (), (fin("q", n + 1, 2),)), acc + 1)
    return lhs, series_scale(P("q^-1"), s - prod(acc + 1, [inf("q^2", 2)]))


# definitions and cross-links

def _choi(i: int):
    def sides(acc):
        inst = equivalence_choi(acc)[i]
        return inst.lhs, inst.rhs
    return sides


ENTRIES.append(Entry("EQUIV", "Eq. (equivalence)", "at the same level of generality", _choi(0), min_acc=10,
                     note="omega part; arguments carry negative q-exponents"))
ENTRIES.append(Entry("EQUIV_NU", "Eq. (equivalence)", "at the same level of generality", _choi(1),
                     min_acc=10, note="nu part"))


@entry("NU0_REL", "Sec. 1 display", "")
def _nu0_rel(acc):
    return mock("nu_tri", P("a"), P("z"), acc=acc), mock("nu0", P("-z"), P("-a*z^-1"), acc=acc)


@entry("G_OMEGA", "Eq. (omegaG)", "written in terms of the function")
def _g_omega(acc):
    rhs = mock("bigG", P("a*q"), P("z*q"), step=2, acc=acc).div_binomial(P("-a*q")).div_binomial(P("-z*q"))
    return mock("omega0", P("a"), P("z"), acc=acc), rhs


@entry("G_G3", "Sec. 1 display (at x=z)", "universal mock theta function defined by",
       note="g3 compared in the normalized form (1-x)(1-q/x) g3(x;q)")
def _g_g3(acc):
    return mock("bigG", P("z"), P("q*z^-1"), acc=acc), mock("g3", P("z"), acc=acc)


def _alt(which: str):
    def sides(acc):
        inst = andrews_alt_forms(which, P("z"), acc)
        return inst.lhs, inst.rhs
    return sides


ENTRIES.append(Entry("ANDREWS_ALT", "Sec. 1", "Andrews proved that", _alt("omega_bi"), 40))
ENTRIES.append(Entry("ANDREWS_ALT_NU", "Sec. 1", "Andrews proved that", _alt("nu_bi"), 40))


@entry("OMEGA1_OMEGA", "Eq. (omega1omega)", "")
def _omega1_omega(acc):
    rhs = series_q_power(mock("omega_bi", P("z^2"), acc=acc // 2), 2).truncate(acc)
    return mock("omega1", ONE, P("z"), acc=acc), rhs


@entry("THM3_A1", "Theorem 1.2 at α=1", "Let α=1 in Theorem")
def _thm3_a1(acc):
    return thm3_sides(ONE, P("z"), acc)


@entry("F_ZERO", "Sec. 4.1, F(1,z;q)=0", "By Lemma")
def _f_zero(acc):
    return mock("F_func", ONE, P("z"), acc=acc), QSeries.zero(acc)


@entry("THM4_A1", "Theorem 1.3 at α=1", "")
def _thm4_a1(acc):
    return thm4_lhs(ONE, P("z"), acc), thm4_rhs(ONE, P("z"), acc)


# -- public API -------------------------------------------------------------------------

_BY_ID = {e.id: e for e in ENTRIES}
assert len(_BY_ID) == len(ENTRIES), "duplicate catalog ids"


@dataclass
class VerifyReport:
    id: str
    anchor: str
    quote: str
    order: int
    status: str
    first_mismatch: Mismatch | None = None
    elapsed_ms: float = 0.0
    expected: str = "pass"
    error: str | None = None

    @property
    def ok(self) -> bool:
        return self.status in ("pass", "pass-as-expected")

    def to_dict(self, timings: bool = True) -> dict:
        d = {"id": self.id, "anchor": self.anchor, "quote": self.quote, "order": self.order,
             "status": self.status,
             "first_mismatch": self.first_mismatch.to_dict() if self.first_mismatch else None}
        if timings:
            d["elapsed_ms"] = round(self.elapsed_ms, 3)
        if self.error:
            d["error"] = self.error
        return d


def catalog() -> list[tuple[str, str, str]]:
    return [(e.id, e.anchor, e.quote) for e in ENTRIES]


def catalog_json() -> list[dict]:
    return [{"id": e.id, "anchor": e.anchor, "quote": e.quote, "default_acc": e.default_acc,
             "expected": e.expected, "note": e.note} for e in ENTRIES]


def get_entry(id: str) -> Entry:
    try:
        return _BY_ID[id]
    except KeyError:
        raise UnknownId(id) from None


def instantiate(id: str, acc: int | None = None) -> IdentityInstance:
    e = get_entry(id)
    acc = e.default_acc if acc is None else acc
    if acc < e.min_acc:
        raise AccuracyTooLow(f"{id} needs accuracy >= {e.min_acc}")
    lhs, rhs = e.sides(acc)
    return IdentityInstance(e.id, lhs, rhs, Citation(e.anchor, e.quote, e.note), default_acc=acc,
                            expected=e.expected)


Perturb = Callable[[str, QSeries], QSeries]


def verify(id: str, acc: int | None = None, perturb: Perturb | None = None) -> VerifyReport:
    e = get_entry(id)
    acc = e.default_acc if acc is None else acc
    t0 = time.perf_counter()
    inst = instantiate(id, acc)
    rhs = perturb(id, inst.rhs) if perturb else inst.rhs
    report = series_compare(inst.lhs, rhs, acc)
    if e.expected == "fail":
        status = "pass-as-expected" if not report.passed else "unexpected-pass"
    else:
        status = report.status
    return VerifyReport(e.id, e.anchor, e.quote, acc, status, report.first_mismatch,
                        (time.perf_counter() - t0) * 1000, e.expected)


def _safe_verify(id: str, acc: int, perturb: Perturb | None) -> VerifyReport:
    try:
        return verify(id, acc, perturb)
    except (InsufficientAccuracy, AccuracyTooLow) as ex:
        e = get_entry(id)
        return VerifyReport(id, e.anchor, e.quote, acc, "accuracy-error", error=str(ex))
    except Exception as ex:  # reported per entry; the batch carries on
        e = get_entry(id)
        return VerifyReport(id, e.anchor, e.quote, acc, "error", error=f"{type(ex).__name__}: {ex}")


def verify_all(acc: int, workers: int = 1, ids: list[str] | None = None,
               perturb: Perturb | None = None) -> list[VerifyReport]:
    """Verify every catalog entry; reports come back in catalog order."""
    if workers < 1:
        raise ValueError("workers must be positive")
    ids = [e.id for e in ENTRIES] if ids is None else ids
    if workers == 1:
        return [_safe_verify(i, acc, perturb) for i in ids]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(lambda i: _safe_verify(i, acc, perturb), ids))


def perturbation(target: str, k: int, m: Monomial = Monomial(1, 1, 0, 0)) -> Perturb:
    """A perturbation adding ``m * q**k`` to the right side of ``target`` only."""
    def apply(id: str, rhs: QSeries) -> QSeries:
        if id != target:
            return rhs
        return rhs + QSeries.from_monomial(m.qshift(k), rhs.acc)
    return apply


def reports_json(reports: list[VerifyReport], timings: bool = True) -> str:
    return json.dumps({"schema": SCHEMA, "reports": [r.to_dict(timings) for r in reports]},
                      ensure_ascii=False, indent=2)
