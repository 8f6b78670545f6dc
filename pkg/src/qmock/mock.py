"""Builders for the third-order mock theta family and its generalizations.

Every builder takes its arguments as monomials in the outer ``q`` and a
q-sign; the sign is folded into each summand through the base ``Q = +-q``,
so ``build(MockSpec(f, args, -1))`` is the defining series with ``q -> -q``
applied to the powers of ``q`` inside the definition while the arguments
stay as given.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Sequence

from .instance import Citation, IdentityInstance
from .qkit import (BadParams, Factors, NonTerminating, QBase, converge, partial_theta,
                   sum_terms)
from .ring import ONE, Monomial, NotInvertible, QSeries, series_mul, series_scale


class IllegalSpec(ValueError):
    pass


ARITY: dict[str, int] = {
    "omega": 0, "nu": 0, "phi": 0,
    "omega_bi": 1, "nu_bi": 1, "nu1": 1, "g3": 1,
    "omega0": 2, "nu0": 2, "omega1": 2, "nu_tri": 2, "omega_star": 2, "nu_star": 2,
    "F_func": 2, "G_def": 2, "H_def": 2, "bigG": 2,
    "rho3": 3,
}

ARG_NAMES: dict[str, tuple[str, ...]] = {
    "omega": (), "nu": (), "phi": (),
    "omega_bi": ("z",), "nu_bi": ("z",), "nu1": ("z",), "g3": ("x",),
    "omega0": ("y", "z"), "nu0": ("y", "z"), "omega1": ("a", "z"), "nu_tri": ("a", "z"),
    "omega_star": ("a", "z"), "nu_star": ("a", "z"), "F_func": ("a", "z"),
    "G_def": ("a", "z"), "H_def": ("a", "z"), "bigG": ("a", "b"),
    "rho3": ("a", "b", "c"),
}

DESCRIPTIONS: dict[str, str] = {
    "omega": "sum q^(2n^2+2n) / (q;q^2)_{n+1}^2",
    "nu": "sum q^(n^2+n) / (-q;q^2)_{n+1}",
    "phi": "sum q^(n^2) / (-q^2;q^2)_n",
    "omega_bi": "sum z^n q^(2n^2+2n) / ((q;q^2)_{n+1} (zq;q^2)_{n+1})",
    "nu_bi": "sum q^(n^2+n) / (-zq;q^2)_{n+1}",
    "nu1": "sum z^n q^(n^2+n) / (-q;q^2)_{n+1}",
    "g3": "(1-x)(1-q/x) g3(x;q) = sum q^(n^2+n) / ((xq;q)_n (q^2/x;q)_n)",
    "omega0": "sum y^n z^n q^(2n^2+2n) / ((yq;q^2)_{n+1} (zq;q^2)_{n+1})",
    "nu0": "sum y^n z^n q^(n^2+n) / (yq;q^2)_{n+1}",
    "omega1": "sum q^(2n) / ((-zq;q^2)_{n+1} (zq/a;q^2)_{n+1})",
    "nu_tri": "sum a^n q^(n^2+n) / (-zq;q^2)_{n+1}",
    "omega_star": "sum q^(2(n-1)^2-6) a^(2n) z^(4n+4) / ((z^2/q;q^2)_{n+1} (a^2 z^2/q^3;q^2)_{n+1})",
    "nu_star": "sum q^(n^2-n) z^(2n) / (-a^2 z^2/q^3;q^2)_{n+1}",
    "F_func": "the correction term F(a,z;q)",
    "G_def": "sum_{m>=1} (z^2q^2/a;q^2)_{m-1} q^(2m) / ((-zq/a;q)_{2m} (zq;q)_{2m} (-zq^(2m+2)/a;q^2)_oo (zq^(2m+2);q^2)_oo)",
    "H_def": "q^2 (z^2q^2/a;q^2)_oo / ((zq;q)_oo (-zq/a;q)_oo) * omega1(a,z;q)",
    "bigG": "sum a^n b^n Q^(n^2) / ((aQ;Q)_n (bQ;Q)_n) with Q = q^step",
    "rho3": "(1+1/b) sum (c;Q)_n (-1)^n Q^(n(n+1)/2) (a/b)^n / ((-aQ;Q)_n (-c/b;Q)_{n+1}) with Q = q^step",
}


@dataclass(frozen=True)
class MockSpec:
    family: str
    args: tuple[Monomial, ...] = ()
    qsign: int = 1
    step: int = 1

    def __post_init__(self):
        if self.family not in ARITY:
            raise IllegalSpec(f"unknown family {self.family!r}")
        object.__setattr__(self, "args", tuple(self.args))
        if len(self.args) != ARITY[self.family]:
            raise IllegalSpec(f"{self.family} takes {ARITY[self.family]} arguments, got {len(self.args)}")
        if self.qsign not in (1, -1):
            raise IllegalSpec("qsign must be +1 or -1")
        if self.step < 1:
            raise IllegalSpec("step must be a positive integer")
        if self.step != 1 and self.family not in ("bigG", "rho3"):
            raise IllegalSpec(f"{self.family} does not take a step")


# -- family builders; each gets (args, Q, acc) --------------------------------


def _omega(args, Q, acc):
    return sum_terms(lambda n: Factors(Q.pow(2 * n * n + 2 * n), (),
                                       (Q.poch(Q.pow(1), n + 1, 2),) * 2), acc)


def _nu(args, Q, acc):
    return sum_terms(lambda n: Factors(Q.pow(n * n + n), (), (Q.poch(-Q.pow(1), n + 1, 2),)), acc)


def _phi(args, Q, acc):
    return sum_terms(lambda n: Factors(Q.pow(n * n), (), (Q.poch(-Q.pow(2), n, 2),)), acc)


def _omega_bi(args, Q, acc):
    z, = args
    return sum_terms(lambda n: Factors((z ** n) * Q.pow(2 * n * n + 2 * n), (),
                                       (Q.poch(Q.pow(1), n + 1, 2), Q.poch(z * Q.pow(1), n + 1, 2))), acc)


def _nu_bi(args, Q, acc):
    z, = args
    return sum_terms(lambda n: Factors(Q.pow(n * n + n), (), (Q.poch(-(z * Q.pow(1)), n + 1, 2),)), acc)


def _nu1(args, Q, acc):
    z, = args
    return sum_terms(lambda n: Factors((z ** n) * Q.pow(n * n + n), (),
                                       (Q.poch(-Q.pow(1), n + 1, 2),)), acc)


def _g3(args, Q, acc):
    x, = args
    return sum_terms(lambda n: Factors(Q.pow(n * n + n), (),
                                       (Q.poch(x * Q.pow(1), n), Q.poch(Q.pow(2) / x, n))), acc)


def _omega0(args, Q, acc):
    y, z = args
    return sum_terms(lambda n: Factors(((y * z) ** n) * Q.pow(2 * n * n + 2 * n), (),
                                       (Q.poch(y * Q.pow(1), n + 1, 2), Q.poch(z * Q.pow(1), n + 1, 2))),
                     acc)


def _nu0(args, Q, acc):
    y, z = args
    return sum_terms(lambda n: Factors(((y * z) ** n) * Q.pow(n * n + n), (),
                                       (Q.poch(y * Q.pow(1), n + 1, 2),)), acc)


def _omega1(args, Q, acc):
    a, z = args
    return sum_terms(lambda n: Factors(Q.pow(2 * n), (),
                                       (Q.poch(-(z * Q.pow(1)), n + 1, 2),
                                        Q.poch(z * Q.pow(1) / a, n + 1, 2))), acc)


def _nu_tri(args, Q, acc):
    a, z = args
    return sum_terms(lambda n: Factors((a ** n) * Q.pow(n * n + n), (),
                                       (Q.poch(-(z * Q.pow(1)), n + 1, 2),)), acc)


def _omega_star(args, Q, acc):
    a, z = args
    return sum_terms(lambda n: Factors(Q.pow(2 * (n - 1) ** 2 - 6) * (a ** (2 * n)) * (z ** (4 * n + 4)), (),
                                       (Q.poch((z ** 2) / Q.pow(1), n + 1, 2),
                                        Q.poch((a * z) ** 2 / Q.pow(3), n + 1, 2))), acc)


def _nu_star(args, Q, acc):
    a, z = args
    return sum_terms(lambda n: Factors(Q.pow(n * n - n) * (z ** (2 * n)), (),
                                       (Q.poch(-((a * z) ** 2 / Q.pow(3)), n + 1, 2),)), acc)


def _bigG(args, Q, acc):
    a, b = args
    return sum_terms(lambda n: Factors(((a * b) ** n) * Q.pow(n * n), (),
                                       (Q.poch(a * Q.pow(1), n), Q.poch(b * Q.pow(1), n))), acc)


def _rho3(args, Q, acc):
    from .qkit import rho3
    return rho3(*args, acc, Q)


def _F_func(args, Q, acc):
    A, Z = args
    q1, q2 = Q.pow(1), Q.pow(2)
    ZQ = Z * q1

    def build(N):
        s1 = sum_terms(lambda m: Factors(ZQ ** m, (Q.poch(-(A / ZQ), m + 1, 2),),
                                         (Q.poch(-ZQ, m + 1, 2),)), N + 2)
        t1 = series_scale(q2, s1).div_binomial(ZQ / A)
        pt = partial_theta(A, 2, 2, N + 2, Q)
        t2 = Factors(A * q1 / Z, (Q.poch(Z * Z * q2 / A, None, 2),),
                     (Q.poch(Z * Z * q2, None, 4), Q.poch(Z * Z * q2 / (A * A), None, 4))).apply(pt)
        return Factors(ONE, (), (Q.poch(-(Z * q2 / A), None, 2), Q.poch(Z * q2, None, 2))).apply(t1 - t2)

    return converge(build, acc)


def _G_def(args, Q, acc):
    A, Z = args
    q1, q2 = Q.pow(1), Q.pow(2)
    return sum_terms(lambda m: Factors(Q.pow(2 * m), (Q.poch(Z * Z * q2 / A, m - 1, 2),),
                                       (Q.poch(-(Z * q1 / A), 2 * m), Q.poch(Z * q1, 2 * m),
                                        Q.poch(-(Z * Q.pow(2 * m + 2) / A), None, 2),
                                        Q.poch(Z * Q.pow(2 * m + 2), None, 2))), acc, start=1)


def _H_def(args, Q, acc):
    A, Z = args
    q1, q2 = Q.pow(1), Q.pow(2)
    pre = Factors(q2, (Q.poch(Z * Z * q2 / A, None, 2),),
                  (Q.poch(Z * q1, None), Q.poch(-(Z * q1 / A), None)))
    return converge(lambda N: pre.apply(_omega1(args, Q, N + 2)), acc)


BUILDERS: dict[str, Callable] = {
    "omega": _omega, "nu": _nu, "phi": _phi, "omega_bi": _omega_bi, "nu_bi": _nu_bi,
    "nu1": _nu1, "g3": _g3, "omega0": _omega0, "nu0": _nu0, "omega1": _omega1,
    "nu_tri": _nu_tri, "omega_star": _omega_star, "nu_star": _nu_star, "bigG": _bigG,
    "rho3": _rho3, "F_func": _F_func, "G_def": _G_def, "H_def": _H_def,
}


def build(spec: MockSpec, acc: int) -> QSeries:
    """Expand the defining series of ``spec`` through ``q**acc``."""
    Q = QBase(spec.step, spec.qsign)
    try:
        return BUILDERS[spec.family](spec.args, Q, acc)
    except (NotInvertible, NonTerminating, BadParams) as e:
        raise IllegalSpec(f"{spec.family}{tuple(str(a) for a in spec.args)}: {e}") from e


def mock(family: str, *args: Monomial, qsign: int = 1, step: int = 1, acc: int = 30) -> QSeries:
    return build(MockSpec(family, args, qsign, step), acc)


def andrews_alt_forms(which: str, arg: Monomial, acc: int) -> IdentityInstance:
    """Defining form against the alternative single-sum form."""
    q1 = QBase()
    if which == "omega_bi":
        lhs = mock("omega_bi", arg, acc=acc)
        rhs = sum_terms(lambda n: Factors((arg * q1.pow(1)) ** (n - 1), (),
                                          (q1.poch(q1.pow(1), n, 2),)), acc, start=1)
        cit = Citation("Sec. 1 display", "Andrews proved that", "omega(z;q) alternative form")
    elif which == "nu_bi":
        lhs = mock("nu_bi", arg, acc=acc)
        rhs = sum_terms(lambda n: Factors((-(arg * q1.pow(1))) ** n,
                                          (q1.poch(q1.pow(1) / arg, n, 2),)), acc)
        cit = Citation("Sec. 1 display", "Andrews proved that", "nu(z;q) alternative form")
    else:
        raise IllegalSpec(f"no alternative form for {which!r}")
    return IdentityInstance(f"ANDREWS_ALT_{which.upper()}", lhs, rhs, cit, default_acc=acc,
                            params={"arg": str(arg)})


def equivalence_choi(acc: int) -> list[IdentityInstance]:
    """Both three-variable normalizations matched against each other."""
    P = Monomial.parse
    z4 = P("z^4*q^-4")
    cit = Citation("Eq. (equivalence)", "at the same level of generality")
    om = IdentityInstance(
        "EQUIV", mock("omega0", P("z^2*q^-2"), P("a^2*z^2*q^-4"), acc=acc),
        converge(lambda n: series_scale(z4.inverse(), mock("omega_star", P("a"), P("z"), acc=n)), acc),
        cit, default_acc=acc)
    nu = IdentityInstance(
        "EQUIV_NU", mock("nu0", P("-a^2*z^2*q^-4"), P("-q^2*a^-2"), acc=acc),
        mock("nu_star", P("a"), P("z"), acc=acc), cit, default_acc=acc)
    return [om, nu]


def catalog() -> list[dict]:
    return [{"name": f, "arity": ARITY[f], "args": list(ARG_NAMES[f]),
             "step": f in ("bigG", "rho3"), "definition": DESCRIPTIONS[f]} for f in ARITY]
