"""q-Pochhammer products, theta series, the summation engine and the
classical identities used as proof ingredients.

Everything here works over a *base* ``Q = sign * q**t``: ``t`` realizes the
``q -> q^t`` replacements and ``sign = -1`` realizes ``q -> -q``.  Arguments
of Pochhammer symbols are monomials in the outer ``q``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Sequence

from .instance import Citation, IdentityInstance
from .ring import (ONE, Monomial, NotInvertible, QSeries, mono, series_mul,
                   series_scale)


class NonTerminating(RuntimeError):
    """A term family's valuation bound never exceeded the target accuracy."""


class ParityViolation(ValueError):
    pass


class UnknownName(KeyError):
    pass


class BadParams(ValueError):
    pass


@dataclass(frozen=True)
class QStep:
    t: int = 1

    def __post_init__(self):
        if self.t < 1:
            raise ValueError("q-step must be a positive integer")


@dataclass(frozen=True)
class QBase:
    """The base variable ``Q = sign * q**t``."""

    t: int = 1
    sign: int = 1

    def __post_init__(self):
        if self.t < 1 or self.sign not in (1, -1):
            raise ValueError(f"bad base t={self.t} sign={self.sign}")

    def pow(self, k: int, c: int = 1) -> Monomial:
        """``c * Q**k`` as a monomial in q."""
        return Monomial(c * self.sign ** (k % 2), 0, 0, self.t * k)

    def m(self, c: int = 1, ez: int = 0, ea: int = 0, k: int = 0) -> Monomial:
        return self.pow(k, c) * Monomial(1, ez, ea, 0)

    def poch(self, a: Monomial, n: int | None, step: int = 1) -> tuple:
        """Factor record for ``(a; Q**step)_n``; ``n=None`` means infinite."""
        return (a, self.pow(step), n)


def _as_step(step) -> int:
    return step.t if isinstance(step, QStep) else int(step)


def _factor_exps(a: Monomial, ratio: Monomial, n: int | None, limit: int | None = None):
    """Exponents a.eq + j*ratio.eq for the factors of (a; ratio)_n."""
    j = 0
    while n is None or j < n:
        e = a.eq + j * ratio.eq
        if n is None and e >= 0 and (limit is None or e > limit):
            return
        yield j, e
        j += 1


def num_val(a: Monomial, ratio: Monomial, n: int | None) -> int:
    """Lower bound on the q-valuation of (a; ratio)_n."""
    return sum(min(0, e) for _, e in _factor_exps(a, ratio, n, 0))


def den_val(a: Monomial, ratio: Monomial, n: int | None) -> int:
    """Exact q-valuation of 1/(a; ratio)_n when it is invertible."""
    return sum(max(0, -e) for _, e in _factor_exps(a, ratio, n, 0))


def _check_ratio(ratio: Monomial) -> None:
    if ratio.eq < 1 or ratio.ez or ratio.ea:
        raise ValueError(f"Pochhammer ratio must be a positive power of q, got {ratio}")


def mul_poch(s: QSeries, a: Monomial, ratio: Monomial, n: int | None) -> QSeries:
    """Multiply ``s`` by (a; ratio)_n."""
    _check_ratio(ratio)
    j = 0
    am = -a
    while n is None or j < n:
        f = am * (ratio ** j)
        if n is None and f.eq >= 0 and f.eq > s.acc - s.val:
            break
        s = s.mul_binomial(f)
        j += 1
    return s


def div_poch(s: QSeries, a: Monomial, ratio: Monomial, n: int | None) -> QSeries:
    """Divide ``s`` by (a; ratio)_n."""
    _check_ratio(ratio)
    j = 0
    am = -a
    while n is None or j < n:
        f = am * (ratio ** j)
        if f.eq > s.acc - s.val and f.eq > 0:
            if n is None:
                break
            j += 1
            continue
        s = s.div_binomial(f)
        j += 1
    return s


@dataclass(frozen=True)
class Factors:
    """``coef * prod(num) / prod(den)`` with Pochhammer factors.

    Each factor is ``(a, ratio, n)`` standing for ``(a; ratio)_n`` (``n=None``
    for the infinite product).  The valuation bound is derived from the
    factor exponents, never from the expanded series.
    """

    coef: Monomial = ONE
    num: tuple = ()
    den: tuple = ()

    def vbound(self) -> int:
        return (self.coef.eq + sum(num_val(*f) for f in self.num)
                + sum(den_val(*f) for f in self.den))

    def _shift(self) -> int:
        # accuracy lost (negative) or gained (positive) by the factor list
        lost = sum(min(0, e) for f in self.num for _, e in _factor_exps(*f, 0))
        gained = sum(max(0, -e) for f in self.den for _, e in _factor_exps(*f, 0))
        return lost + gained

    def apply(self, s: QSeries) -> QSeries:
        if self.coef != ONE:
            s = series_scale(self.coef, s)
        for f in self.den:
            s = div_poch(s, *f)
        for f in self.num:
            s = mul_poch(s, *f)
        return s

    def build(self, acc: int) -> QSeries:
        start = acc - self.coef.eq - self._shift()
        s = Factors(ONE, self.num, self.den).apply(QSeries.one(start))
        s = series_scale(self.coef, s)
        if s.acc < acc:
            raise AssertionError(f"accuracy bookkeeping failed: {s.acc} < {acc}")
        return s.truncate(acc)


def poch_finite(a: Monomial, step, n: int, acc: int, base: QBase = QBase()) -> QSeries:
    """(a; Q**step)_n truncated to ``acc``."""
    if n < 0:
        raise ValueError("n must be non-negative")
    return Factors(num=(base.poch(a, n, _as_step(step)),)).build(acc)


def poch_inf(a: Monomial, step, acc: int, base: QBase = QBase()) -> QSeries:
    """(a; Q**step)_oo truncated to ``acc``."""
    return Factors(num=(base.poch(a, None, _as_step(step)),)).build(acc)


@dataclass
class TermFamily:
    """Summands ``term(n, acc)`` with a proven valuation bound ``vbound(n)``.

    ``direction=-1`` walks ``n = start, start-1, ...`` (the negative half of a
    bilateral sum).  ``vbound`` must be nondecreasing in ``|n|`` from
    ``monotone_from`` onward; earlier indices are always visited.
    """

    term: Callable[[int, int], QSeries]
    vbound: Callable[[int], int]
    start: int = 0
    direction: int = 1
    monotone_from: int | None = None

    @classmethod
    def of(cls, factors: Callable[[int], Factors], start: int = 0, direction: int = 1,
           monotone_from: int | None = None) -> "TermFamily":
        return cls(lambda n, acc: factors(n).build(acc), lambda n: factors(n).vbound(),
                   start, direction, monotone_from)


def sum_family(f: TermFamily, acc: int, cap: int | None = None) -> QSeries:
    """Sum every term whose valuation bound is at most ``acc``."""
    cap = 10 * (abs(acc) + 5) if cap is None else cap
    mono_from = f.start if f.monotone_from is None else f.monotone_from
    total = QSeries.zero(acc)
    n = f.start
    for _ in range(cap):
        vb = f.vbound(n)
        beyond = (n - mono_from) * f.direction >= 0
        if vb > acc:
            if beyond:
                return total
        else:
            t = f.term(n, acc)
            if t.val < vb:
                raise AssertionError(f"valuation bound {vb} exceeds actual {t.val} at n={n}")
            total = total + t
        n += f.direction
    raise NonTerminating(f"valuation bound did not exceed {acc} within {cap} terms")


def monotone_start(factors: Callable[[int], Factors], start: int = 0) -> int:
    """An index past which ``factors(n).vbound()`` is nondecreasing.

    The monomial prefactor's q-exponent is quadratic in ``n``; finite
    Pochhammer denominators only add valuation as ``n`` grows, and the
    factors with negative exponents are finitely many, so allowing for
    all of them past the vertex of the quadratic is enough.
    """
    c0, c1, c2 = (factors(start + i).coef.eq for i in range(3))
    A2 = c2 - 2 * c1 + c0  # twice the quadratic coefficient
    B = c1 - c0  # first difference at start
    if A2 < 0:
        raise ValueError("term exponents decrease quadratically")
    # first difference at start+k is B + A2*k
    k = 0 if B >= 0 else (-(B // A2) if A2 else 0)
    f = factors(start)
    neg = sum(1 for fac in f.num + f.den for _, e in _factor_exps(*fac, 0) if e < 0)
    return start + k + neg + 1


def sum_terms(factors: Callable[[int], Factors], acc: int, start: int = 0,
              monotone_from: int | None = None) -> QSeries:
    if monotone_from is None:
        monotone_from = monotone_start(factors, start)
    return sum_family(TermFamily.of(factors, start, 1, monotone_from), acc)


def converge(build: Callable[[int], QSeries], acc: int, max_pad: int = 200) -> QSeries:
    """Call ``build`` at growing internal accuracy until the result reaches ``acc``."""
    pad = 0
    while True:
        s = build(acc + pad)
        if s.acc >= acc:
            return s.truncate(acc)
        if pad > max_pad:
            raise NonTerminating(f"could not reach accuracy {acc} (got {s.acc})")
        pad += acc - s.acc


def partial_theta(m: Monomial, P: int, Q: int, acc: int, base: QBase = QBase()) -> QSeries:
    """sum_{n>=0} m**n * Q**((P n^2 + Q n)/2)."""
    if (P - Q) % 2:
        raise ParityViolation(f"P={P} and Q={Q} must have the same parity")
    if P <= 0:
        raise ValueError("P must be positive")
    # the exponent n*m.eq + t*(P n^2 + Q n)/2 increases once n passes its vertex
    lin = 2 * m.eq + base.t * Q
    vertex = max(0, -lin // (2 * base.t * P) + 1)
    fam = TermFamily.of(lambda n: Factors((m ** n) * base.pow((P * n * n + Q * n) // 2)),
                        monotone_from=vertex)
    return sum_family(fam, acc)


def theta_bilateral(m: Monomial, acc: int, base: QBase = QBase()) -> QSeries:
    """sum_{n in Z} m**n * Q**(n^2)."""
    if not m.is_unit():
        raise BadParams(f"bilateral theta needs a unit monomial, got {m}")
    fac = lambda n: Factors((m ** n) * base.pow(n * n))
    vert = abs(m.eq) // (2 * base.t) + 1
    pos = sum_family(TermFamily.of(fac, 0, 1, vert), acc)
    neg = sum_family(TermFamily.of(fac, -1, -1, -vert), acc)
    return pos + neg


# -- classical identities ---------------------------------------------------------

def _need_unit(name: str, m: Monomial) -> None:
    if not m.is_unit():
        raise BadParams(f"{name}={m} must be a unit monomial")


def _need_pos(name: str, m: Monomial, lo: int = 1) -> None:
    if m.eq < lo:
        raise BadParams(f"{name}={m} must carry q-exponent >= {lo}")


def _lin(*terms: Monomial, acc: int) -> QSeries:
    return QSeries.from_terms(terms, acc)


def _q_binomial(p, Q, acc):
    a, x = p["a"], p["x"]
    _need_pos("x", x)
    lhs = sum_terms(lambda m: Factors(x ** m, (Q.poch(a, m),), (Q.poch(Q.pow(1), m),)), acc)
    rhs = Factors(num=(Q.poch(a * x, None),), den=(Q.poch(x, None),)).build(acc)
    return lhs, rhs


def _phi21(a, b, c, x, Q, acc):
    return sum_terms(lambda n: Factors(x ** n, (Q.poch(a, n), Q.poch(b, n)),
                                       (Q.poch(c, n), Q.poch(Q.pow(1), n))), acc)


def _heine(p, Q, acc):
    a, b, c, x = p["a"], p["b"], p["c"], p["x"]
    _need_pos("x", x)
    _need_pos("b", b)
    _need_unit("b", b)
    _need_pos("a*x", a * x, 0)
    lhs = _phi21(a, b, c, x, Q, acc)

    def build(n):
        pre = Factors(num=(Q.poch(b, None), Q.poch(a * x, None)),
                      den=(Q.poch(c, None), Q.poch(x, None)))
        return pre.apply(_phi21(c / b, x, a * x, b, Q, n))

    return lhs, converge(build, acc)


def _gauss_second(p, Q, acc):
    a, b = p["a"], p["b"]
    qab = Q.pow(1) * a * b
    _need_pos("q*a*b", qab)
    lhs = sum_terms(lambda n: Factors(Q.pow(n * (n + 1) // 2), (Q.poch(a, n), Q.poch(b, n)),
                                      (Q.poch(Q.pow(1), n), Q.poch(qab, n, 2))), acc)
    rhs = Factors(num=(Q.poch(-Q.pow(1), None), Q.poch(a * Q.pow(1), None, 2),
                       Q.poch(b * Q.pow(1), None, 2)),
                  den=(Q.poch(qab, None, 2),)).build(acc)
    return lhs, rhs


def _one_psi_one(p, Q, acc):
    a, b, t = p["a"], p["b"], p["t"]
    for k in ("a", "b", "t"):
        _need_unit(k, p[k])
    _need_pos("t", t)
    w = b / (a * t)
    _need_pos("b/(a*t)", w)
    q2 = Q.pow(2)

    def build(n):
        s1 = sum_terms(lambda m: Factors(t ** m, (Q.poch(a, m, 2),), (Q.poch(b, m, 2),)), n)
        s2 = sum_terms(lambda m: Factors(w ** m, (Q.poch(q2 / b, m, 2),), (Q.poch(q2 / a, m, 2),)), n,
                       start=1)
        return s1 + s2

    lhs = converge(build, acc)
    rhs = converge(lambda n: Factors(
        num=(Q.poch(q2, None, 2), Q.poch(b / a, None, 2), Q.poch(a * t, None, 2),
             Q.poch(q2 / (a * t), None, 2)),
        den=(Q.poch(b, None, 2), Q.poch(q2 / a, None, 2), Q.poch(t, None, 2),
             Q.poch(w, None, 2))).apply(QSeries.one(n)), acc)
    return lhs, rhs


def _jackson_pfaff(p, Q, acc):
    a, b, c, x = p["a"], p["b"], p["c"], p["x"]
    _need_unit("b", b)
    _need_pos("x", x)
    q1 = Q.pow(1)
    lhs = sum_terms(lambda n: Factors(x ** n, (Q.poch(c / b, n), Q.poch(a, n)),
                                      (Q.poch(q1, n), Q.poch(c, n))), acc)
    y = -(x * c / b)

    def build(N):
        s = sum_terms(lambda n: Factors((y ** n) * Q.pow(n * (n - 1) // 2),
                                        (Q.poch(a, n), Q.poch(b, n)),
                                        (Q.poch(q1, n), Q.poch(c, n), Q.poch(a * x, n))), N)
        return Factors(num=(Q.poch(a * x, None),), den=(Q.poch(x, None),)).apply(s)

    return lhs, converge(build, acc)


def _andrews_deep(p, Q, acc):
    A, B, a, b = p["A"], p["B"], p["a"], p["b"]
    _need_unit("a", a)
    _need_unit("A", A)
    _need_pos("b", b)
    q1 = Q.pow(1)
    Abq_a = A * b * q1 / a
    _need_pos("A*b*q/a", Abq_a)
    _need_pos("B/a", B / a)
    lhs = sum_terms(lambda n: Factors(Q.pow(n), (Q.poch(B, n), Q.poch(-(A * b * q1), n)),
                                      (Q.poch(-(a * q1), n), Q.poch(-(b * q1), n))), acc)

    def build(N):
        s1 = sum_terms(lambda m: Factors(Abq_a ** m, (Q.poch(A.inverse(), m),),
                                         (Q.poch(-(B / a), m + 1),)), N)
        t1 = Factors(-(a.inverse()), (Q.poch(B, None), Q.poch(-(A * b * q1), None)),
                     (Q.poch(-(b * q1), None), Q.poch(-(a * q1), None))).apply(s1)
        s2 = sum_terms(lambda m: Factors((-b) ** m,
                                         (Q.poch(-(a.inverse()), m + 1), Q.poch(-(A * B * q1 / a), m)),
                                         (Q.poch(-(B / a), m + 1), Q.poch(Abq_a, m + 1))), N)
        return t1 + s2.mul_binomial(b)

    return lhs, converge(build, acc)


def _fine_corrected(p, Q, acc):
    b, u = p["b"], p["u"]
    _need_unit("u", u)
    if u.eq == 0:
        raise BadParams("u must carry a nonzero q-exponent")
    bu = b / u
    q1 = Q.pow(1)

    def pt(n, dens=()):
        return lambda k: Factors((bu ** k) * Q.pow((k * k + k) // 2), (), tuple(d(k) for d in dens))

    def build(N):
        s1 = sum_terms(pt(N, (lambda k: Q.poch(b * q1, k),)), N, monotone_from=_mono_guess(bu))
        s2 = sum_terms(lambda k: Factors(Q.pow(k), (), (Q.poch(b * q1, k), Q.poch(-(u * q1), k))), N)
        s2 = series_scale(u, s2).div_binomial(u)
        return s1 - s2

    lhs = converge(build, acc)

    def build_r(N):
        s = sum_terms(pt(N), N, monotone_from=_mono_guess(bu))
        return Factors(den=(Q.poch(b * q1, None), Q.poch(-u, None))).apply(s)

    return lhs, converge(build_r, acc)


def _mono_guess(m: Monomial) -> int:
    # k*m.eq + t*(k^2+k)/2 increases once k exceeds -m.eq
    return max(0, -m.eq) + 1


def _rf_left(a, t, Q, acc):
    s = sum_terms(lambda n: Factors(t ** n, (Q.poch(a * Q.pow(1), n),)), acc)
    return s.mul_binomial(-t)


def _rogers_fine_61(p, Q, acc):
    a, t = p["a"], p["t"]
    _need_pos("t", t)
    rhs = sum_terms(lambda n: Factors((-(a * t)) ** n * Q.pow(n * (n + 1) // 2), (),
                                      (Q.poch(t * Q.pow(1), n),)), acc, monotone_from=_mono_guess(a * t))
    return _rf_left(a, t, Q, acc), rhs


def _rogers_fine_133(p, Q, acc):
    a, t = p["a"], p["t"]
    _need_pos("t", t)
    c = -(a * t * t)
    rhs = sum_terms(lambda n: Factors((c ** n) * Q.pow((3 * n * n + n) // 2),
                                      (Q.poch(a * Q.pow(1), n), Q.poch(a * t * Q.pow(2 * n + 1), 1)),
                                      (Q.poch(t * Q.pow(1), n),)), acc,
                    monotone_from=max(0, -c.eq) + 1)
    return _rf_left(a, t, Q, acc), rhs


def _eq41(p, Q, acc):
    x = p["x"]
    _need_pos("x", x)
    lhs = sum_terms(lambda m: Factors(x ** m, (), (Q.poch(-x, m + 1),)), acc)
    rhs = sum_terms(lambda m: Factors(x ** (2 * m), (Q.poch(Q.pow(1), m, 2),)), acc)
    return lhs, rhs


def _exercise6(p, Q, acc):
    x, y = p["x"], p["y"]
    _need_pos("y", y)
    _need_unit("y", y)
    lhs = sum_terms(lambda m: Factors(y ** m, (Q.poch(-(x * Q.pow(1) / y), m, 2),)), acc)
    rhs = sum_terms(lambda m: Factors(Q.pow(m * m) * (x ** m), (), (Q.poch(y, m + 1, 2),)), acc,
                    monotone_from=max(0, -x.eq) + 1)
    return lhs, rhs


def _andrews_p24(p, Q, acc):
    a, b = p["a"], p["b"]
    _need_pos("a", a, 0)
    q1 = Q.pow(1)
    lhs = sum_terms(lambda n: Factors((a * b) ** n * Q.pow(n * n + 2 * n), (),
                                      (Q.poch(a * q1, n + 1), Q.poch(b * q1, n + 1))), acc,
                    monotone_from=max(0, -(a * b).eq) + 1)
    rhs = sum_terms(lambda n: Factors((a * q1) ** n, (), (Q.poch(b * q1, n + 1),)), acc)
    return lhs, rhs


def _andrews_p25(p, Q, acc):
    a = p["a"]
    lhs = partial_theta(a, 2, 4, acc, Q)
    rhs = sum_terms(lambda n: Factors((a ** n) * Q.pow(n * (n + 3) // 2), (Q.poch(-Q.pow(1), n),),
                                      (Q.poch(-(a * Q.pow(2)), n + 1, 2),)), acc,
                    monotone_from=_mono_guess(a) + 2)
    return lhs, rhs


def _jacobi_triple(p, Q, acc):
    x = p["x"]
    lhs = theta_bilateral(x, acc, Q)
    rhs = Factors(num=(Q.poch(Q.pow(2), None, 2), Q.poch(-(x * Q.pow(1)), None, 2),
                       Q.poch(-(Q.pow(1) / x), None, 2))).build(acc)
    return lhs, rhs


def _ramanujan_reciprocity(p, Q, acc):
    a, b = p["a"], p["b"]
    _need_unit("a", a)
    _need_unit("b", b)
    q1 = Q.pow(1)

    def side(x, y):
        # (1 + 1/y) sum (-1)^n Q^{n(n+1)/2} (x/y)^n / (-xQ)_n
        s = sum_terms(lambda n: Factors((-(x / y)) ** n * Q.pow(n * (n + 1) // 2), (),
                                        (Q.poch(-(x * q1), n),)), acc + 4,
                      monotone_from=_mono_guess(x / y))
        return s.mul_binomial(y.inverse())

    def build(N):
        rs = _lin(b.inverse(), -(a.inverse()), acc=N)
        prod = Factors(num=(Q.poch(a * q1 / b, None), Q.poch(b * q1 / a, None), Q.poch(q1, None)),
                       den=(Q.poch(-(a * q1), None), Q.poch(-(b * q1), None))).build(N + 4)
        return series_mul(rs, prod)

    return converge(lambda N: side(a, b) - side(b, a), acc), converge(build, acc)


def rho3(a: Monomial, b: Monomial, c: Monomial, acc: int, base: QBase = QBase()) -> QSeries:
    """(1 + 1/b) sum (c)_n (-1)^n Q^{n(n+1)/2} (a/b)^n / ((-aQ)_n (-c/b)_{n+1})."""
    _need_unit("b", b)
    q1 = base.pow(1)

    def build(N):
        s = sum_terms(lambda n: Factors((-(a / b)) ** n * base.pow(n * (n + 1) // 2),
                                        (base.poch(c, n),),
                                        (base.poch(-(a * q1), n), base.poch(-(c / b), n + 1))), N,
                      monotone_from=_mono_guess(a / b))
        return s.mul_binomial(b.inverse())

    return converge(build, acc)


def _kang_reciprocity(p, Q, acc):
    a, b, c = p["a"], p["b"], p["c"]
    _need_unit("a", a)
    _need_unit("b", b)
    q1 = Q.pow(1)
    lhs = converge(lambda N: rho3(a, b, c, N, Q) - rho3(b, a, c, N, Q), acc)

    def build(N):
        rs = _lin(b.inverse(), -(a.inverse()), acc=N + 4)
        prod = Factors(num=(Q.poch(c, None), Q.poch(a * q1 / b, None), Q.poch(b * q1 / a, None),
                            Q.poch(q1, None)),
                       den=(Q.poch(-(c / a), None), Q.poch(-(c / b), None), Q.poch(-(a * q1), None),
                            Q.poch(-(b * q1), None))).build(N + 4)
        return series_mul(rs, prod)

    return lhs, converge(build, acc)


def _euler(p, Q, acc):
    x = p["x"]
    _need_pos("x", x, 0)
    lhs = sum_terms(lambda n: Factors((-x) ** n * Q.pow(n * n - n), (), (Q.poch(Q.pow(2), n, 2),)), acc,
                    monotone_from=1)
    rhs = Factors(num=(Q.poch(x, None, 2),)).build(acc)
    return lhs, rhs


@dataclass(frozen=True)
class Classical:
    name: str
    params: tuple[str, ...]
    builder: Callable
    anchor: str
    quote: str
    conditions: str
    note: str = ""


CLASSICAL: dict[str, Classical] = {c.name: c for c in [
    Classical("q_binomial", ("a", "x"), _q_binomial, "Eq. (6a)", "we apply the q-binomial theorem",
              "x has q-exponent >= 1"),
    Classical("heine", ("a", "b", "c", "x"), _heine, "Sec. 4.1", "Heine's transformation",
              "x, b have q-exponent >= 1; b is a unit; a*x has q-exponent >= 0"),
    Classical("gauss_second", ("a", "b"), _gauss_second, "Eq. (gauss)",
              "q-analogue of Gauss's second theorem", "q*a*b has q-exponent >= 1"),
    Classical("one_psi_one", ("a", "b", "t"), _one_psi_one, "Eq. (1psi1)",
              "Ramanujan's 1psi1 summation",
              "a, b, t units; t and b/(a t) have q-exponent >= 1 (formal replacement of |b/a|<|t|<1)"),
    Classical("jackson_pfaff", ("a", "b", "c", "x"), _jackson_pfaff, "Eq. (kum)",
              "q-analogue of Pfaff's transformation", "b unit; x has q-exponent >= 1"),
    Classical("andrews_deep", ("A", "B", "a", "b"), _andrews_deep, "Eq. (gea90_thm1)",
              "a deep identity of Andrews",
              "a, A units; b, A*b*q/a, B/a have q-exponent >= 1"),
    Classical("fine_corrected", ("b", "u"), _fine_corrected, "Eq. (nfine)",
              "a corrected version of a formula", "u unit with nonzero q-exponent"),
    Classical("rogers_fine_61", ("a", "t"), _rogers_fine_61, "Eq. (rogers-fine2)",
              "special case of the Rogers-Fine identity", "t has q-exponent >= 1"),
    Classical("rogers_fine_133", ("a", "t"), _rogers_fine_133, "Eq. (rogers-fine)",
              "special case of the Rogers-Fine identity", "t has q-exponent >= 1"),
    Classical("eq41", ("x",), _eq41, "Eq. (eq41)", "From [Equation (41)]",
              "x (playing B/z) has q-exponent >= 1"),
    Classical("exercise6", ("x", "y"), _exercise6, "display after p. 29, Exercise 6",
              "p. 29, Exercise 6", "y unit with q-exponent >= 1"),
    Classical("andrews_p24", ("a", "b"), _andrews_p24, "Sec. 1 display", "using Andrews' identity",
              "a has q-exponent >= 0"),
    Classical("andrews_p25", ("a",), _andrews_p25, "Sec. 6.1 display", "use the identity",
              "none"),
    Classical("jacobi_triple", ("x",), _jacobi_triple, "Eq. (jtpi)", "the Jacobi triple product identity",
              "x unit", "standard form with (q^2;q^2)_oo"),
    Classical("ramanujan_reciprocity", ("a", "b"), _ramanujan_reciprocity, "Eq. (reciprocitytheorem)",
              "his reciprocity theorem", "a, b units"),
    Classical("kang_reciprocity", ("a", "b", "c"), _kang_reciprocity, "Eq. (3varrt)",
              "special case a=zq", "a, b units; only monomial specializations"),
    Classical("euler", ("x",), _euler, "Sec. 6.3 display", "Recall Euler's theorem",
              "x has q-exponent >= 0"),
]}


def classical(name: str, params: dict[str, Monomial], acc: int, step: int = 1,
              id: str | None = None) -> IdentityInstance:
    """Instantiate a classical identity with monomial parameters over base q**step."""
    try:
        spec = CLASSICAL[name]
    except KeyError:
        raise UnknownName(name) from None
    missing = [k for k in spec.params if k not in params]
    extra = [k for k in params if k not in spec.params]
    if missing or extra:
        raise BadParams(f"{name} takes {spec.params}; missing {missing}, unexpected {extra}")
    try:
        lhs, rhs = spec.builder(dict(params), QBase(_as_step(step)), acc)
    except NotInvertible as e:
        raise BadParams(f"{name}: {e}") from e
    note = f"formal side condition: {spec.conditions}"
    if spec.note:
        note += f"; {spec.note}"
    return IdentityInstance(id or name.upper(), lhs, rhs, Citation(spec.anchor, spec.quote, note),
                            default_acc=acc, params={k: str(v) for k, v in params.items()} | {"step": step})


def classical_catalog() -> list[dict]:
    return [{"name": c.name, "params": list(c.params), "step": "positive integer (default 1)",
             "anchor": c.anchor, "conditions": c.conditions} for c in CLASSICAL.values()]
