"""Exact Laurent polynomials in (z, a) and truncated Laurent series in q.

Coefficients are Python ints.  Internally a (z, a) exponent pair is packed
into one int key ``ez * 2**32 + ea`` so that multiplying monomials is a
single integer addition; the packing is linear, so sums of keys decode to
sums of exponents as long as |ea| stays below 2**31.

Every :class:`QSeries` carries ``acc``: all coefficients at q-exponents
``<= acc`` are known exactly.  Arithmetic propagates accuracy with the usual
rules, and comparisons refuse to look past it.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from typing import Iterable, Mapping

_SHIFT = 32
_HALF = 1 << (_SHIFT - 1)
_MASK = (1 << _SHIFT) - 1


class NotInvertible(ArithmeticError):
    """The lowest coefficient of a series is not a unit monomial."""


class InsufficientAccuracy(ValueError):
    """A requested exponent lies beyond the accuracy of a series."""


def _key(ez: int, ea: int) -> int:
    return (ez << _SHIFT) + ea


def _unkey(k: int) -> tuple[int, int]:
    ea = ((k + _HALF) & _MASK) - _HALF
    return (k - ea) >> _SHIFT, ea


# -- raw polynomial helpers (dict[int, int], no zero values) -----------------

def _padd(d1: dict, d2: dict, sign: int = 1) -> dict:
    out = dict(d1)
    for k, c in d2.items():
        v = out.get(k, 0) + sign * c
        if v:
            out[k] = v
        else:
            out.pop(k, None)
    return out


def _padd_into(out: dict, d: dict, scale: int = 1, shift: int = 0) -> None:
    get = out.get
    for k, c in d.items():
        k += shift
        out[k] = get(k, 0) + scale * c


def _pmul(d1: dict, d2: dict) -> dict:
    if len(d1) < len(d2):
        d1, d2 = d2, d1
    out: dict = {}
    get = out.get
    for k2, c2 in d2.items():
        for k1, c1 in d1.items():
            k = k1 + k2
            out[k] = get(k, 0) + c1 * c2
    return {k: c for k, c in out.items() if c}


def _clean(d: dict) -> dict:
    return {k: c for k, c in d.items() if c}


class LaurentPoly:
    """Immutable Laurent polynomial in z and a over the integers."""

    __slots__ = ("_d",)

    def __init__(self, terms: Mapping[tuple[int, int], int] | None = None):
        d: dict = {}
        for (ez, ea), c in (terms or {}).items():
            k = _key(ez, ea)
            d[k] = d.get(k, 0) + int(c)
        self._d = _clean(d)

    @classmethod
    def _wrap(cls, d: dict) -> "LaurentPoly":
        p = cls.__new__(cls)
        p._d = d
        return p

    @classmethod
    def monomial(cls, c: int, ez: int = 0, ea: int = 0) -> "LaurentPoly":
        return cls._wrap({_key(ez, ea): c} if c else {})

    @classmethod
    def const(cls, c: int) -> "LaurentPoly":
        return cls.monomial(c)

    @property
    def terms(self) -> dict[tuple[int, int], int]:
        return {_unkey(k): c for k, c in self._d.items()}

    def sorted_terms(self) -> list[tuple[tuple[int, int], int]]:
        return sorted(self.terms.items())

    def __len__(self) -> int:
        return len(self._d)

    def __bool__(self) -> bool:
        return bool(self._d)

    def is_unit(self) -> bool:
        return len(self._d) == 1 and abs(next(iter(self._d.values()))) == 1

    def __add__(self, other):
        other = _as_poly(other)
        return LaurentPoly._wrap(_padd(self._d, other._d))

    __radd__ = __add__

    def __sub__(self, other):
        other = _as_poly(other)
        return LaurentPoly._wrap(_padd(self._d, other._d, -1))

    def __rsub__(self, other):
        return _as_poly(other) - self

    def __neg__(self):
        return LaurentPoly._wrap({k: -c for k, c in self._d.items()})

    def __mul__(self, other):
        if isinstance(other, int):
            return LaurentPoly._wrap({k: c * other for k, c in self._d.items()} if other else {})
        return LaurentPoly._wrap(_pmul(self._d, _as_poly(other)._d))

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._d == other._d

    def __hash__(self) -> int:
        return hash(frozenset(self._d.items()))

    def __repr__(self) -> str:
        return f"LaurentPoly({str(self)!r})"

    def __str__(self) -> str:
        if not self._d:
            return "0"
        return " + ".join(_term_str(c, ez, ea) for (ez, ea), c in self.sorted_terms())

    @classmethod
    def parse(cls, text: str) -> "LaurentPoly":
        text = text.strip()
        if text == "0":
            return cls()
        out: dict = {}
        for chunk in text.split(" + "):
            m = Monomial.parse(chunk)
            if m.eq:
                raise ValueError(f"q is not a coefficient variable: {chunk!r}")
            k = _key(m.ez, m.ea)
            out[k] = out.get(k, 0) + m.c
        return cls._wrap(_clean(out))


def _term_str(c: int, ez: int, ea: int, eq: int = 0) -> str:
    parts = [str(c)]
    for name, e in (("z", ez), ("a", ea), ("q", eq)):
        if e == 1:
            parts.append(name)
        elif e:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


def _as_poly(x) -> LaurentPoly:
    if isinstance(x, LaurentPoly):
        return x
    if isinstance(x, int):
        return LaurentPoly.const(x)
    raise TypeError(f"cannot use {type(x).__name__} as a LaurentPoly")


class _MonoParser:
    """Recursive descent over

        monomial := sign? factor ('*' factor)*
        factor   := INT | VAR ('^' sign? INT)?
        VAR      := 'z' | 'a' | 'q'
    """

    def __init__(self, text: str):
        self.text = text
        self.s = text.replace(" ", "").replace("α", "a")
        self.i = 0

    def fail(self, why: str):
        raise ValueError(f"{why} at position {self.i} in monomial {self.text!r}")

    def peek(self) -> str:
        return self.s[self.i] if self.i < len(self.s) else ""

    def sign(self) -> int:
        if self.peek() in ("+", "-"):
            self.i += 1
            return -1 if self.s[self.i - 1] == "-" else 1
        return 1

    def integer(self) -> int:
        j = self.i
        while self.peek().isdigit():
            self.i += 1
        if j == self.i:
            self.fail("expected an integer")
        return int(self.s[j:self.i])

    def factor(self, acc: dict) -> None:
        ch = self.peek()
        if ch.isdigit():
            if acc["int"]:
                self.fail("second integer factor")
            acc["c"], acc["int"] = self.integer(), True
        elif ch in ("z", "a", "q"):
            self.i += 1
            e = 1
            if self.peek() == "^":
                self.i += 1
                e = self.sign() * self.integer()
            acc[ch] += e
        else:
            self.fail("expected an integer or one of z, a, q")

    def monomial(self) -> tuple[int, int, int, int]:
        if not self.s:
            raise ValueError("empty monomial")
        sg = self.sign()
        acc = {"c": 1, "int": False, "z": 0, "a": 0, "q": 0}
        self.factor(acc)
        while self.peek() == "*":
            self.i += 1
            self.factor(acc)
        if self.i != len(self.s):
            self.fail("unexpected character")
        return sg * acc["c"], acc["z"], acc["a"], acc["q"]



@dataclass(frozen=True)
class Monomial:
    """A signed monomial ``c * z**ez * a**ea * q**eq``."""

    c: int
    ez: int = 0
    ea: int = 0
    eq: int = 0

    def __post_init__(self):
        if self.c == 0:
            raise ValueError("monomial coefficient must be nonzero")

    def __mul__(self, other: "Monomial | int") -> "Monomial":
        if isinstance(other, int):
            return Monomial(self.c * other, self.ez, self.ea, self.eq)
        return Monomial(self.c * other.c, self.ez + other.ez,
                        self.ea + other.ea, self.eq + other.eq)

    __rmul__ = __mul__

    def __neg__(self) -> "Monomial":
        return Monomial(-self.c, self.ez, self.ea, self.eq)

    def is_unit(self) -> bool:
        return abs(self.c) == 1

    def inverse(self) -> "Monomial":
        if not self.is_unit():
            raise NotInvertible(f"{self} has a non-unit coefficient")
        return Monomial(self.c, -self.ez, -self.ea, -self.eq)

    def __truediv__(self, other: "Monomial") -> "Monomial":
        return self * other.inverse()

    def __pow__(self, n: int) -> "Monomial":
        if n < 0:
            return self.inverse() ** (-n)
        return Monomial(self.c ** n, self.ez * n, self.ea * n, self.eq * n)

    def qshift(self, k: int) -> "Monomial":
        return Monomial(self.c, self.ez, self.ea, self.eq + k)

    def qsign(self, s: int) -> "Monomial":
        """Substitute q -> s*q (s = +-1)."""
        if s == 1 or self.eq % 2 == 0:
            return self
        return Monomial(-self.c, self.ez, self.ea, self.eq)

    def __str__(self) -> str:
        return _term_str(self.c, self.ez, self.ea, self.eq)

    @classmethod
    def parse(cls, text: str) -> "Monomial":
        """Parse ``[-]<int>[*z^i][*a^j][*q^k]``.

        Factors may come in any order; the integer may be omitted (``-z^2*q``)
        and a bare variable means exponent 1.  ``α`` is accepted for ``a``.
        """
        c, ez, ea, eq = _MonoParser(text).monomial()
        return cls(c, ez, ea, eq)


def mono(c: int = 1, ez: int = 0, ea: int = 0, eq: int = 0) -> Monomial:
    return Monomial(c, ez, ea, eq)


ONE = Monomial(1)


@dataclass(frozen=True)
class Mismatch:
    q_exp: int
    lhs: LaurentPoly
    rhs: LaurentPoly

    def to_dict(self) -> dict:
        return {"q_exp": self.q_exp, "lhs": str(self.lhs), "rhs": str(self.rhs)}


@dataclass(frozen=True)
class ComparisonReport:
    status: str
    compared_through: int
    first_mismatch: Mismatch | None = None

    @property
    def passed(self) -> bool:
        return self.status == "pass"


class QSeries:
    """Truncated Laurent series in q with LaurentPoly coefficients.

    ``val`` is the true valuation when some coefficient through ``acc`` is
    nonzero and ``acc + 1`` otherwise.
    """

    __slots__ = ("val", "acc", "_c")

    def __init__(self, coeffs: Mapping[int, object] | None = None, acc: int = 0):
        c: dict = {}
        for k, p in (coeffs or {}).items():
            if k > acc:
                continue
            if isinstance(p, int):
                p = LaurentPoly.const(p)
            elif isinstance(p, Monomial):
                p = LaurentPoly.monomial(p.c, p.ez, p.ea)
            if p:
                c[k] = p._d
        self._set(c, acc)

    def _set(self, c: dict, acc: int) -> None:
        self._c = c
        self.acc = acc
        self.val = min(c) if c else acc + 1

    @classmethod
    def _raw(cls, c: dict, acc: int) -> "QSeries":
        s = cls.__new__(cls)
        s._set({k: d for k, d in c.items() if d and k <= acc}, acc)
        return s

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, acc: int) -> "QSeries":
        return cls._raw({}, acc)

    @classmethod
    def one(cls, acc: int) -> "QSeries":
        return cls.from_monomial(ONE, acc)

    @classmethod
    def from_monomial(cls, m: Monomial, acc: int) -> "QSeries":
        return cls._raw({m.eq: {_key(m.ez, m.ea): m.c}}, acc)

    @classmethod
    def from_terms(cls, terms: Iterable[Monomial], acc: int) -> "QSeries":
        c: dict = {}
        for m in terms:
            if m.eq <= acc:
                _padd_into(c.setdefault(m.eq, {}), {_key(m.ez, m.ea): m.c})
        return cls._raw({k: _clean(d) for k, d in c.items()}, acc)

    # -- access -------------------------------------------------------------

    def coeff(self, k: int) -> LaurentPoly:
        if k > self.acc:
            raise InsufficientAccuracy(f"q^{k} is beyond accuracy {self.acc}")
        return LaurentPoly._wrap(self._c.get(k, {}))

    def __getitem__(self, k: int) -> LaurentPoly:
        return self.coeff(k)

    def exponents(self) -> list[int]:
        return sorted(self._c)

    def items(self) -> list[tuple[int, LaurentPoly]]:
        return [(k, LaurentPoly._wrap(self._c[k])) for k in sorted(self._c)]

    def is_zero(self) -> bool:
        return not self._c

    def nterms(self) -> int:
        return sum(len(d) for d in self._c.values())

    def restrict(self, ez: int = 0, ea: int = 0) -> "QSeries":
        """Keep only the z^ez a^ea part of each coefficient."""
        k0 = _key(ez, ea)
        return QSeries._raw({k: {k0: d[k0]} for k, d in self._c.items() if k0 in d}, self.acc)

    def int_coeffs(self, upto: int | None = None) -> list[int]:
        """Coefficients q^0..q^upto of a series with constant coefficients."""
        upto = self.acc if upto is None else upto
        if upto > self.acc:
            raise InsufficientAccuracy(f"q^{upto} is beyond accuracy {self.acc}")
        out = []
        for k in range(0, upto + 1):
            d = self._c.get(k, {})
            if any(key != 0 for key in d):
                raise ValueError(f"coefficient of q^{k} is not a constant")
            out.append(d.get(0, 0))
        return out

    # -- arithmetic ---------------------------------------------------------

    def truncate(self, acc: int) -> "QSeries":
        if acc > self.acc:
            raise InsufficientAccuracy(f"cannot raise accuracy {self.acc} to {acc}")
        return QSeries._raw(self._c, acc)

    def __add__(self, other: "QSeries") -> "QSeries":
        return _addsub(self, other, 1)

    def __sub__(self, other: "QSeries") -> "QSeries":
        return _addsub(self, other, -1)

    def __neg__(self) -> "QSeries":
        return QSeries._raw({k: {kk: -c for kk, c in d.items()} for k, d in self._c.items()}, self.acc)

    def __mul__(self, other):
        if isinstance(other, QSeries):
            return series_mul(self, other)
        if isinstance(other, Monomial):
            return series_scale(other, self)
        if isinstance(other, int):
            if other == 0:
                return QSeries.zero(self.acc)
            return QSeries._raw({k: {kk: c * other for kk, c in d.items()} for k, d in self._c.items()}, self.acc)
        return NotImplemented

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, QSeries):
            return NotImplemented
        return self.acc == other.acc and self._c == other._c

    __hash__ = None

    def mul_binomial(self, m: Monomial) -> "QSeries":
        """Multiply by the exact polynomial (1 + m)."""
        k0 = _key(m.ez, m.ea)
        e = m.eq
        acc = self.acc + min(0, e)
        out: dict = {k: dict(d) for k, d in self._c.items()}
        for k, d in self._c.items():
            t = k + e
            if t > acc:
                continue
            _padd_into(out.setdefault(t, {}), d, m.c, k0)
        return QSeries._raw({k: _clean(d) for k, d in out.items()}, acc)

    def div_binomial(self, m: Monomial) -> "QSeries":
        """Divide by (1 + m); the constant term 1 must dominate or m be a unit."""
        e = m.eq
        if e == 0:
            if m.ez == 0 and m.ea == 0 and m.c == -2:
                return -self
            raise NotInvertible(f"1 + {m} has a non-unit lowest coefficient")
        if e < 0:
            # 1/(1+m) = m^-1 / (1 + m^-1)
            mi = m.inverse()
            return series_scale(mi, self).div_binomial(mi)
        k0 = _key(m.ez, m.ea)
        c = -m.c
        acc = self.acc
        out: dict = {}
        if self._c:
            lo = min(self._c)
            for k in range(lo, acc + 1):
                d = dict(self._c.get(k, {}))
                prev = out.get(k - e)
                if prev:
                    _padd_into(d, prev, c, k0)
                    d = _clean(d)
                if d:
                    out[k] = d
        return QSeries._raw(out, acc)

    # -- serialization ------------------------------------------------------

    def to_json(self) -> dict:
        return {"val": self.val, "acc": self.acc,
                "coeffs": {str(k): str(LaurentPoly._wrap(self._c[k])) for k in sorted(self._c)}}

    @classmethod
    def from_json(cls, obj: dict | str) -> "QSeries":
        if isinstance(obj, str):
            obj = json.loads(obj)
        s = cls({int(k): LaurentPoly.parse(v) for k, v in obj["coeffs"].items()}, obj["acc"])
        if s._c and s.val != obj["val"]:
            raise ValueError("val does not match the stored coefficients")
        return s

    def to_text(self) -> str:
        lines = [f"({LaurentPoly._wrap(self._c[k])})*q^{k}" for k in sorted(self._c)]
        lines.append(f"O(q^{self.acc + 1})")
        return "\n".join(lines)

    @classmethod
    def parse_text(cls, text: str) -> "QSeries":
        coeffs: dict = {}
        acc = None
        for line in text.strip().splitlines():
            line = line.strip()
            if not line:
                continue
            m = re.fullmatch(r"O\(q\^(-?\d+)\)", line)
            if m:
                acc = int(m.group(1)) - 1
                continue
            m = re.fullmatch(r"\((.*)\)\*q\^(-?\d+)", line)
            if not m:
                raise ValueError(f"malformed series line {line!r}")
            coeffs[int(m.group(2))] = LaurentPoly.parse(m.group(1))
        if acc is None:
            raise ValueError("missing O(q^n) accuracy line")
        return cls(coeffs, acc)

    def __str__(self) -> str:
        terms = [f"({LaurentPoly._wrap(self._c[k])})*q^{k}" for k in sorted(self._c)]
        return " + ".join(terms + [f"O(q^{self.acc + 1})"])

    def __repr__(self) -> str:
        return f"QSeries(val={self.val}, acc={self.acc}, terms={self.nterms()})"


def _addsub(a: QSeries, b: QSeries, sign: int) -> QSeries:
    acc = min(a.acc, b.acc)
    out = {k: d for k, d in a._c.items() if k <= acc}
    for k, d in b._c.items():
        if k > acc:
            continue
        out[k] = _padd(out[k], d, sign) if k in out else ({kk: sign * c for kk, c in d.items()} if sign < 0 else d)
    return QSeries._raw(out, acc)


def series_add(a: QSeries, b: QSeries) -> QSeries:
    return _addsub(a, b, 1)


def series_mul(a: QSeries, b: QSeries) -> QSeries:
    acc = min(a.acc + b.val, b.acc + a.val)
    if not a._c or not b._c:
        return QSeries.zero(acc)
    if len(b._c) == 1:
        a, b = b, a
    out: dict = {}
    bitems = sorted(b._c.items())
    for i, da in a._c.items():
        lim = acc - i
        for j, db in bitems:
            if j > lim:
                break
            k = i + j
            prod = _pmul(da, db)
            if k in out:
                _padd_into(out[k], prod)
            else:
                out[k] = prod
    return QSeries._raw({k: _clean(d) for k, d in out.items()}, acc)


def series_scale(m: Monomial, s: QSeries) -> QSeries:
    k0 = _key(m.ez, m.ea)
    c = m.c
    return QSeries._raw({k + m.eq: {kk + k0: v * c for kk, v in d.items()} for k, d in s._c.items()},
                        s.acc + m.eq)


def series_invert(s: QSeries) -> QSeries:
    """Multiplicative inverse; the lowest coefficient must be a unit monomial."""
    if not s._c:
        raise NotInvertible("series is zero through its accuracy")
    v = s.val
    lead = s._c[v]
    if len(lead) != 1 or abs(next(iter(lead.values()))) != 1:
        raise NotInvertible(f"lowest coefficient {LaurentPoly._wrap(lead)} is not a unit")
    (lk, lc), = lead.items()
    acc = s.acc - 2 * v
    n = s.acc - v  # accuracy of the normalized series 1 + r
    # r_i = s_{v+i} / lead, for i >= 1
    r = {}
    for k, d in s._c.items():
        i = k - v
        if 1 <= i <= n:
            r[i] = {kk - lk: c * lc for kk, c in d.items()}
    ritems = sorted(r.items())
    t: dict = {0: {0: 1}}
    for k in range(1, n + 1):
        acc_d: dict = {}
        for i, ri in ritems:
            if i > k:
                break
            tk = t.get(k - i)
            if tk:
                _padd_into(acc_d, _pmul(ri, tk), -1)
        acc_d = _clean(acc_d)
        if acc_d:
            t[k] = acc_d
    # 1/s = lead^-1 q^-v * t
    return QSeries._raw({k - v: {kk - lk: c * lc for kk, c in d.items()} for k, d in t.items()}, acc)


def series_q_negate(s: QSeries) -> QSeries:
    return QSeries._raw({k: (d if k % 2 == 0 else {kk: -c for kk, c in d.items()}) for k, d in s._c.items()},
                        s.acc)


def series_q_power(s: QSeries, t: int) -> QSeries:
    if t < 1:
        raise ValueError("q-power must be a positive integer")
    return QSeries._raw({t * k: d for k, d in s._c.items()}, t * s.acc + (t - 1))


def series_compare(a: QSeries, b: QSeries, through: int) -> ComparisonReport:
    if through > a.acc or through > b.acc:
        raise InsufficientAccuracy(
            f"cannot compare through q^{through}: accuracies are {a.acc} and {b.acc}")
    for k in sorted(set(a._c) | set(b._c)):
        if k > through:
            break
        da, db = a._c.get(k, {}), b._c.get(k, {})
        if da != db:
            return ComparisonReport("fail", through,
                                    Mismatch(k, LaurentPoly._wrap(da), LaurentPoly._wrap(db)))
    return ComparisonReport("pass", through)
