"""Brute-force partition enumerators and their generating-function checks.

The enumerators work directly from the combinatorial definitions and never
touch the series code, so they serve as independent oracles for it.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Callable, Iterator, Sequence

Part = tuple[int, bool]  # (value, overlined)


@dataclass(frozen=True)
class EnumResult:
    n: int
    count: int
    items: tuple | None = None

    def __post_init__(self):
        if self.items is not None and len(self.items) != self.count:
            raise ValueError("count does not match the item list")


def _check(n: int, lo: int) -> None:
    if not isinstance(n, int) or n < lo:
        raise ValueError(f"n must be an integer >= {lo}, got {n!r}")


def partitions(n: int, max_part: int | None = None, min_part: int = 1,
               allowed: Callable[[int], bool] | None = None) -> Iterator[tuple[int, ...]]:
    """Weakly decreasing tuples of positive parts in [min_part, max_part] summing to n."""
    top = n if max_part is None else min(n, max_part)
    if n == 0:
        yield ()
        return
    for p in range(top, min_part - 1, -1):
        if allowed is not None and not allowed(p):
            continue
        for rest in partitions(n - p, p, min_part, allowed):
            yield (p,) + rest


def distinct_partitions(n: int, max_part: int | None = None, min_part: int = 1,
                        allowed: Callable[[int], bool] | None = None) -> Iterator[tuple[int, ...]]:
    """Strictly decreasing tuples of parts in [min_part, max_part] summing to n."""
    top = n if max_part is None else min(n, max_part)
    if n == 0:
        yield ()
        return
    for p in range(top, min_part - 1, -1):
        if allowed is not None and not allowed(p):
            continue
        for rest in distinct_partitions(n - p, p - 1, min_part, allowed):
            yield (p,) + rest


def overline_choices(parts: Sequence[int]) -> Iterator[tuple[Part, ...]]:
    """Every way of overlining the first occurrence of each distinct value."""
    values = sorted(set(parts), reverse=True)
    for marks in product((True, False), repeat=len(values)):
        over = dict(zip(values, marks))
        out, seen = [], set()
        for p in parts:
            first = p not in seen
            seen.add(p)
            out.append((p, first and over[p]))
        yield tuple(out)


def _odd_ok(parts: Sequence[int], smallest: int) -> bool:
    return all(p % 2 == 0 or p < 2 * smallest for p in parts)


def _sort_over(parts: Sequence[Part]) -> tuple[Part, ...]:
    # decreasing value; within a value the overlined copy comes first
    return tuple(sorted(parts, key=lambda x: (-x[0], not x[1])))


def p_omega(n: int, items: bool = False) -> EnumResult:
    """Partitions of n whose odd parts are all less than twice the smallest part."""
    _check(n, 1)
    found = [p for p in partitions(n) if _odd_ok(p, p[-1])]
    return EnumResult(n, len(found), tuple(found) if items else None)


def p_nu(n: int, items: bool = False) -> EnumResult:
    """Partitions into distinct non-negative parts (0 at most once) with odd parts < 2*smallest."""
    _check(n, 0)
    found = []
    for p in distinct_partitions(n):
        for q in ((p, p + (0,)) if p else ((0,),)):
            if _odd_ok(q, q[-1]):
                found.append(q)
    return EnumResult(n, len(found), tuple(found) if items else None)


def overpartitions(n: int, items: bool = False) -> EnumResult:
    _check(n, 1)
    found = [o for p in partitions(n) for o in overline_choices(p)]
    return EnumResult(n, len(found), tuple(_sort_over(o) for o in found) if items else None)


def overpartition_count(n: int) -> EnumResult:
    return overpartitions(n)


def _p_star_items(n: int) -> Iterator[tuple[Part, ...]]:
    for k in range(n + 1):
        rest = n - k
        # block A: distinct parts from (k, 2k] or even and >= 2k+2, always overlined
        in_a = lambda p, k=k: k < p <= 2 * k or (p % 2 == 0 and p >= 2 * k + 2)
        # block B: odd parts >= 2k+1, first occurrence optionally overlined
        in_b = lambda p, k=k: p % 2 == 1
        for ra in range(rest + 1):
            for a in distinct_partitions(ra, min_part=k + 1, allowed=in_a):
                for b in partitions(rest - ra, min_part=2 * k + 1, allowed=in_b):
                    for ob in overline_choices(b):
                        yield _sort_over(((k, True),) + tuple((p, True) for p in a) + ob)


def p_star(n: int, items: bool = False) -> EnumResult:
    """Overpartitions counted by the smallest-part model.

    The smallest part k (possibly 0) occurs once and is overlined; the other
    overlined-only parts are distinct and lie in (k, 2k] or are even and at
    least 2k+2; the remaining parts are odd, at least 2k+1, and may have
    their first occurrence overlined.
    """
    _check(n, 1)
    found = list(_p_star_items(n))
    return EnumResult(n, len(found), tuple(found) if items else None)


def odd_weight(parts: Sequence[int]) -> int:
    """Product weight: multiplicity+1 for non-largest distinct parts, multiplicity for the largest."""
    mult: dict[int, int] = {}
    for p in parts:
        mult[p] = mult.get(p, 0) + 1
    top = max(mult)
    w = 1
    for v, m in mult.items():
        w *= m if v == top else m + 1
    return w


def p_substar(n: int) -> int:
    _check(n, 1)
    return sum(odd_weight(p) for p in partitions(n, allowed=lambda p: p % 2 == 1))


def p_prime(n: int, items: bool = False) -> EnumResult:
    """Non-negative parts; the smallest occurs at most twice (0 at most once),
    the others are distinct, and every even part other than the smallest is
    below twice the smallest."""
    _check(n, 0)
    found: list[tuple[int, ...]] = []
    if n == 0:
        found.append((0,))
    else:
        for rest in distinct_partitions(n, allowed=lambda p: p % 2 == 1):
            found.append(rest + (0,))
        for s in range(1, n + 1):
            ok = lambda p, s=s: p % 2 == 1 or p < 2 * s
            for r in (1, 2):
                if r * s > n:
                    break
                for rest in distinct_partitions(n - r * s, min_part=s + 1, allowed=ok):
                    found.append(rest + (s,) * r)
    found.sort(reverse=True)
    return EnumResult(n, len(found), tuple(found) if items else None)


def pentagonal_sign(n: int) -> int:
    """(-1)^j when n = 3j^2+2j or 3j^2+4j+1 for some j >= 0, else 0."""
    j = 0
    while 3 * j * j + 2 * j <= n:
        if n in (3 * j * j + 2 * j, 3 * j * j + 4 * j + 1):
            return (-1) ** j
        j += 1
    return 0


def pnt_check(up_to: int) -> list[tuple[int, int]]:
    _check(up_to, 1)
    return [(n, p_star(n).count - 2 * p_substar(n)) for n in range(1, up_to + 1)]


def parity_check(up_to: int) -> dict:
    """Parity statements for p' (even past 0) and p* (odd exactly on the pentagonal pattern)."""
    _check(up_to, 1)
    pp = [p_prime(n).count for n in range(up_to + 1)]
    prime_ok = pp[0] == 1 and all(c % 2 == 0 for c in pp[1:])
    bad_star = [n for n in range(1, up_to + 1)
                if (p_star(n).count % 2 == 1) != (pentagonal_sign(n) != 0)]
    return {"up_to": up_to, "p_prime_even": prime_ok, "p_star_parity": not bad_star,
            "p_star_exceptions": bad_star, "ok": prime_ok and not bad_star}


# -- rendering ----------------------------------------------------------------------


def render(item: Sequence) -> str:
    """``4~+1+0~`` style text; plain partitions are tuples of ints."""
    if not item:
        return ""
    if isinstance(item[0], tuple):
        return "+".join(f"{v}~" if o else str(v) for v, o in item)
    return "+".join(str(v) for v in item)


def to_json_item(item: Sequence) -> list:
    if item and isinstance(item[0], tuple):
        return [{"value": v, "over": o} for v, o in item]
    return [{"value": v, "over": False} for v in item]


FAMILIES: dict[str, Callable[..., EnumResult | int]] = {
    "p_omega": p_omega, "p_nu": p_nu, "p_star": p_star, "p_substar": p_substar,
    "p_prime": p_prime, "overpartitions": overpartitions,
}

MIN_N = {"p_omega": 1, "p_nu": 0, "p_star": 1, "p_substar": 1, "p_prime": 0, "overpartitions": 1}


def count(family: str, n: int) -> int:
    r = FAMILIES[family](n)
    return r if isinstance(r, int) else r.count


@lru_cache(maxsize=None)
def _counts(family: str, up_to: int) -> tuple[int, ...]:
    # at n = 0 the generating functions count the empty overpartition and the
    # lone overlined zero of the p* model
    zero = {"overpartitions": 1, "p_star": sum(1 for _ in _p_star_items(0))}
    return tuple(count(family, n) if n >= MIN_N[family] else zero.get(family, 0)
                 for n in range(up_to + 1))


def count_series(family: str, up_to: int):
    """The enumerator counts as a q-series with integer coefficients."""
    from .ring import QSeries
    return QSeries(dict(enumerate(_counts(family, up_to))), up_to)


def generating_function(family: str, up_to: int):
    """The generating function of ``family`` built from the series code."""
    from . import gf
    return gf.GF[family](up_to)


def crosscheck(family: str, max_n: int):
    """Compare enumerator counts against the generating function through q^max_n."""
    from .ring import series_compare
    if family not in FAMILIES:
        raise KeyError(family)
    return series_compare(count_series(family, max_n), generating_function(family, max_n), max_n)
