import pytest
from hypothesis import assume, given, settings, strategies as st

from qmock import qkit
from qmock.qkit import (
    BadParams, Factors, NonTerminating, ParityViolation, QBase, TermFamily, UnknownName, classical,
    partial_theta, poch_finite, poch_inf, sum_family, sum_terms, theta_bilateral,
)
from qmock.ring import Monomial, NotInvertible, QSeries, series_compare, series_mul

P = Monomial.parse
Q1 = QBase()

# (q;q)_oo through q^12, from the brute-force product in tests/oracles.py
EULER_12 = [1, -1, -1, 0, 0, 1, 0, 1, 0, 0, 0, 0, -1]
# nu(q) through q^20 from the naive rational oracle
NU_20 = [1, -1, 2, -2, 2, -3, 4, -4, 5, -6, 6, -8, 10, -10, 12, -14, 15, -18, 20, -22, 26]


def agree(a: QSeries, b: QSeries, through: int | None = None) -> bool:
    through = min(a.acc, b.acc) if through is None else through
    return series_compare(a, b, through).passed


def lit(acc, *terms):
    return QSeries.from_terms([P(t) for t in terms], acc)


# -- Pochhammer symbols ----------------------------------------------------------


def test_poch_empty_product():
    for a in ("z", "-a*q^-3", "2*q"):
        for step in (1, 2, 4):
            assert poch_finite(P(a), step, 0, 8) == QSeries.one(8)


def test_poch_finite_example():
    got = poch_finite(P("z*q"), 2, 2, 10)
    assert agree(got, lit(10, "1", "-z*q", "-z*q^3", "z^2*q^4"))


@given(st.sampled_from(["z", "-z*q", "a*q^2", "-q", "z^-1*a", "q^-1*z"]),
       st.integers(0, 8), st.sampled_from([1, 2]))
@settings(max_examples=40, deadline=None)
def test_poch_recurrence(a, n, step):
    m = P(a)
    left = poch_finite(m, step, n + 1, 15)
    right = poch_finite(m, step, n, 15 + 40).mul_binomial(-(m * Monomial(1, 0, 0, step * n)))
    assert agree(left, right, 15)


def test_euler_product():
    assert poch_inf(P("q"), 1, 12).int_coeffs(12) == EULER_12


@given(st.sampled_from(["z*q", "-q", "a*q^2", "-z^-1*q", "q^3*a*z"]), st.integers(0, 6),
       st.sampled_from([1, 2, 4]))
@settings(max_examples=20, deadline=None)
def test_poch_splitting(a, n, step):
    m = P(a)
    whole = poch_inf(m, step, 20)
    parts = series_mul(poch_finite(m, step, n, 20), poch_inf(m * Monomial(1, 0, 0, step * n), step, 20))
    assert agree(whole, parts, 20)


def test_euler_odd_distinct():
    prod = series_mul(poch_inf(P("-q"), 1, 25), poch_inf(P("q"), 2, 25))
    assert prod.restrict(0, 0).int_coeffs(25) == [1] + [0] * 25


# -- summation engine -------------------------------------------------------------


def test_geometric_family():
    f = TermFamily(lambda n, acc: QSeries.from_monomial(Monomial(1, 0, 0, n), acc), lambda n: n)
    assert sum_family(f, 5).int_coeffs(5) == [1] * 6


def test_nu_from_family():
    s = sum_terms(lambda n: Factors(Q1.pow(n * n + n), (), (Q1.poch(P("-q"), n + 1, 2),)), 20)
    assert s.int_coeffs(20) == NU_20


def test_bilateral_window():
    seen = []

    def term(n, acc):
        seen.append(n)
        return QSeries.from_monomial(Monomial(1, n, 0, n * n), acc)

    f_pos = TermFamily(term, lambda n: n * n, 0, 1, 0)
    f_neg = TermFamily(term, lambda n: n * n, -1, -1, 0)
    total = sum_family(f_pos, 4) + sum_family(f_neg, 4)
    assert sorted(seen) == [-2, -1, 0, 1, 2]
    assert total.nterms() == 5


def test_sum_independent_of_order_and_cap():
    fac = lambda n: Factors(P("z") ** n * Q1.pow(n * n), (), (Q1.poch(P("-a*q"), n, 1),))
    ref = sum_terms(fac, 25)
    by_hand = QSeries.zero(25)
    for n in reversed(range(6)):
        by_hand = by_hand + fac(n).build(25)
    assert by_hand == ref
    assert sum_family(TermFamily.of(fac, 0, 1, 1), 25, cap=10_000) == ref


def test_wrong_bound_is_caught():
    # a bound that never exceeds acc
    f = TermFamily(lambda n, acc: QSeries.zero(acc), lambda n: 0)
    with pytest.raises(NonTerminating):
        sum_family(f, 5)
    # a bound above the actual valuation
    g = TermFamily(lambda n, acc: QSeries.from_monomial(Monomial(1, 0, 0, n), acc), lambda n: n + 1)
    with pytest.raises(AssertionError):
        sum_family(g, 5)


FACTOR_CASES = [
    lambda n: Factors(Q1.pow(2 * n * n + 2 * n), (), (Q1.poch(P("q"), n + 1, 2),) * 2),
    lambda n: Factors(P("a") ** n * Q1.pow(n * n + n), (), (Q1.poch(P("-z*q"), n + 1, 2),)),
    lambda n: Factors(Q1.pow(n), (Q1.poch(P("-a*z^-1*q^-1"), n, 2),), (Q1.poch(P("z*q"), n + 1, 2),)),
    lambda n: Factors(P("z*q") ** n, (Q1.poch(P("-q*z^-1"), n, 2),), (Q1.poch(P("-z*q^3"), n, 2),)),
    lambda n: Factors(Q1.pow(n), (), (Q1.poch(P("q^-3"), n, 2), Q1.poch(P("q^2"), None, 2))),
]


@pytest.mark.parametrize("idx", range(len(FACTOR_CASES)))
def test_vbound_audit(idx):
    fac = FACTOR_CASES[idx]
    for n in range(11):
        f = fac(n)
        s = f.build(max(30, f.vbound() + 5))
        assert s.val >= f.vbound(), (n, s.val, f.vbound())


@given(st.integers(-3, 3), st.integers(-2, 2), st.integers(0, 4),
       st.lists(st.tuples(st.sampled_from([1, -1]), st.integers(-3, 3), st.integers(1, 2),
                          st.one_of(st.none(), st.integers(0, 4))), max_size=3),
       st.integers(0, 8))
@settings(max_examples=100, deadline=None)
def test_vbound_random_audit(ceq, cez, nidx, facs, acc):
    """Randomized factor lists: the declared bound never exceeds the valuation."""
    num, den = [], []
    for i, (c, e, step, n) in enumerate(facs):
        rec = (Monomial(c, 1, 0, e), Monomial(1, 0, 0, step), n)
        (num if i < nidx % (len(facs) + 1) else den).append(rec)
    f = Factors(Monomial(1, cez, 0, ceq), tuple(num), tuple(den))
    try:
        s = f.build(max(acc, f.vbound() + 3))
    except NotInvertible:
        assume(False)
    assert s.val >= f.vbound()


# -- theta functions ---------------------------------------------------------------


def test_partial_theta_example():
    s = partial_theta(P("1"), 2, 2, 12)
    assert s.int_coeffs(12) == [1, 0, 1, 0, 0, 0, 1, 0, 0, 0, 0, 0, 1]


def test_partial_theta_parity():
    with pytest.raises(ParityViolation):
        partial_theta(P("1"), 2, 1, 5)


def test_partial_theta_product():
    lhs = partial_theta(P("1"), 2, 2, 40)
    rhs = series_mul(poch_inf(P("q^2"), 2, 40), series_mul(poch_inf(P("-q^2"), 2, 40),
                                                           poch_inf(P("-q^2"), 2, 40)))
    assert agree(lhs, rhs, 40)


def test_partial_theta_negated_argument():
    m = P("a*z")
    neg = partial_theta(-m, 2, 2, 30)
    by_terms = sum_terms(lambda n: Factors(Monomial((-1) ** n) * m ** n * Q1.pow(n * n + n)), 30)
    assert neg == by_terms


def test_partial_theta_is_bilateral_tail():
    acc = 30
    tail = sum_family(TermFamily.of(lambda n: Factors(P("a^-1") ** n * Q1.pow(n * n + n)), -1, -1, -1), acc)
    shifted = partial_theta(P("a"), 2, 2, acc) * P("a")
    assert agree(tail, shifted)


def test_theta_bilateral_examples():
    s = theta_bilateral(P("z"), 4)
    assert s.restrict(0, 0).int_coeffs(4) == [1, 0, 0, 0, 0]
    jac = theta_bilateral(P("a*q^-1"), 30)
    rhs = series_mul(series_mul(poch_inf(P("-a"), 2, 40), poch_inf(P("-q^2*a^-1"), 2, 40)),
                     poch_inf(P("q^2"), 2, 40))
    assert agree(jac, rhs, 30)
    std = series_mul(series_mul(poch_inf(P("q^2"), 2, 30), poch_inf(P("-z*q"), 2, 30)),
                     poch_inf(P("-q*z^-1"), 2, 30))
    assert agree(theta_bilateral(P("z"), 30), std, 30)


def test_theta_needs_unit():
    with pytest.raises(BadParams):
        theta_bilateral(P("2*z"), 5)


def test_omega_q_squared_two_ways():
    from qmock.mock import mock
    from qmock.ring import series_q_power
    direct = sum_terms(lambda n: Factors(Q1.pow(4 * n * n + 4 * n), (), (Q1.poch(P("q^2"), n + 1, 4),) * 2), 41)
    assert agree(series_q_power(mock("omega", acc=20), 2), direct, 41)


# -- classical identities ------------------------------------------------------------

CATALOG_PARAMS = {
    "q_binomial": ({"a": "z^2", "x": "q"}, 2),
    "heine": ({"b": "q", "c": "-z*q^2", "a": "-z^-1", "x": "z*q"}, 1),
    "gauss_second": ({"a": "q", "b": "-q*z^-1"}, 1),
    "one_psi_one": ({"a": "-q*z^-1", "b": "-z*q^3", "t": "z*q"}, 1),
    "jackson_pfaff": ({"a": "q^2", "c": "-z*q^3", "b": "z^2*q^2*a^-1", "x": "z*q"}, 2),
    "andrews_deep": ({"B": "z^2*q^2*a^-1", "a": "z*q*a^-1", "b": "-z*q", "A": "a"}, 2),
    "fine_corrected": ({"b": "-z*q", "u": "-z*q*a^-1"}, 2),
    "rogers_fine_61": ({"a": "q^-1", "t": "-z*q"}, 2),
    "rogers_fine_133": ({"a": "q^-1", "t": "-z*q"}, 2),
    "eq41": ({"x": "a*q*z^-1"}, 1),
    "exercise6": ({"x": "z", "y": "q"}, 1),
    "andrews_p24": ({"a": "z", "b": "a"}, 1),
    "andrews_p25": ({"a": "z*q^-1"}, 1),
    "jacobi_triple": ({"x": "z"}, 1),
    "ramanujan_reciprocity": ({"a": "z*q", "b": "-z*q*a^-1"}, 2),
    "kang_reciprocity": ({"a": "z*q", "b": "-z*q*a^-1", "c": "z^2*q^2*a^-1"}, 2),
    "euler": ({"x": "z"}, 1),
}

GENERIC_PARAMS = {
    "exercise6": {"x": "z", "y": "a*q"}, "heine": {"a": "z", "b": "q", "c": "a*q", "x": "z*q"},
    "one_psi_one": {"a": "z", "b": "a*q^2", "t": "q"}, "gauss_second": {"a": "z", "b": "a"},
    "jackson_pfaff": {"a": "z", "b": "a", "c": "-q", "x": "q"}, "rogers_fine_61": {"a": "z", "t": "a*q"},
    "rogers_fine_133": {"a": "z", "t": "a*q"}, "fine_corrected": {"b": "z", "u": "a*q"},
    "andrews_deep": {"A": "z", "B": "a*q", "a": "-1", "b": "q"},
    "ramanujan_reciprocity": {"a": "z", "b": "a"}, "kang_reciprocity": {"a": "z", "b": "a", "c": "q"},
    "q_binomial": {"a": "z", "x": "a*q"}, "euler": {"x": "z*q"}, "andrews_p24": {"a": "z*q", "b": "a"},
    "andrews_p25": {"a": "z"}, "jacobi_triple": {"x": "z*q"}, "eq41": {"x": "z*q"},
}


def test_every_classical_name_covered():
    assert set(CATALOG_PARAMS) == set(qkit.CLASSICAL) == set(GENERIC_PARAMS)


@pytest.mark.parametrize("name", sorted(CATALOG_PARAMS))
def test_classical_catalog_params(name):
    params, step = CATALOG_PARAMS[name]
    inst = classical(name, {k: P(v) for k, v in params.items()}, 40, step)
    assert inst.compare(40).passed
    assert "formal side condition" in inst.citation.note


@pytest.mark.parametrize("name", sorted(GENERIC_PARAMS))
@pytest.mark.parametrize("step", [1, 2])
def test_classical_generic_params(name, step):
    inst = classical(name, {k: P(v) for k, v in GENERIC_PARAMS[name].items()}, 20, step)
    assert inst.compare(20).passed


def test_classical_errors():
    with pytest.raises(UnknownName):
        classical("nope", {}, 5)
    with pytest.raises(BadParams):
        classical("q_binomial", {"a": P("z")}, 5)
    with pytest.raises(BadParams):
        classical("q_binomial", {"a": P("z"), "x": P("z")}, 5)
    with pytest.raises(BadParams):
        classical("jacobi_triple", {"x": P("2*z")}, 5)


def test_catalog_lists_conditions():
    cat = qkit.classical_catalog()
    assert {c["name"] for c in cat} == set(qkit.CLASSICAL)
    assert all(c["conditions"] and c["anchor"] for c in cat)
