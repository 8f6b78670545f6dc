import pytest
from hypothesis import given, settings, strategies as st

from qmock import mock as M
from qmock.mock import IllegalSpec, MockSpec, andrews_alt_forms, build, equivalence_choi, mock
from qmock.ring import Monomial, QSeries, series_compare, series_q_negate, series_q_power

P = Monomial.parse

# naive oracle values (tests/oracles.py)
OMEGA_20 = [1, 2, 3, 4, 6, 8, 10, 14, 18, 22, 29, 36, 44, 56, 68, 82, 101, 122, 146, 176, 210]
PHI_20 = [1, 1, 0, -1, 1, 1, -1, -1, 0, 2, 0, -2, 1, 1, -1, -2, 1, 3, -1, -2, 1]
# nu_tri at a=3, z=2, through q^6
NU_TRI_3_2 = [1, -2, 7, -14, 28, -62, 133]


def agree(a: QSeries, b: QSeries, through: int) -> bool:
    return series_compare(a, b, through).passed


def evaluate(s: QSeries, z: int, a: int, upto: int) -> list:
    from fractions import Fraction
    out = []
    for k in range(upto + 1):
        out.append(sum(Fraction(z) ** ez * Fraction(a) ** ea * c for (ez, ea), c in s.coeff(k).terms.items()))
    return out


def test_oracle_values():
    assert mock("omega", acc=20).int_coeffs(20) == OMEGA_20
    assert mock("phi", acc=20).int_coeffs(20) == PHI_20
    assert mock("phi", acc=4).int_coeffs(4) == [1, 1, 0, -1, 1]
    assert evaluate(mock("nu_tri", P("a"), P("z"), acc=6), 2, 3, 6) == NU_TRI_3_2


def test_specializations():
    acc = 30
    o1 = mock("omega1", P("1"), P("z"), acc=acc)
    assert agree(o1, series_q_power(mock("omega_bi", P("z^2"), acc=acc), 2), acc)
    assert agree(mock("nu_tri", P("z"), P("1"), acc=acc), mock("nu1", P("z"), acc=acc), acc)
    assert agree(mock("nu_tri", P("1"), P("z"), acc=acc), mock("nu_bi", P("z"), acc=acc), acc)
    assert agree(mock("omega_bi", P("1"), acc=acc), mock("omega", acc=acc), acc)
    assert agree(mock("nu_bi", P("1"), acc=acc), mock("nu", acc=acc), acc)


@pytest.mark.parametrize("which", ["omega_bi", "nu_bi"])
def test_andrews_alt_forms(which):
    assert andrews_alt_forms(which, P("z"), 40).compare(40).passed
    inst = andrews_alt_forms(which, P("1"), 25)
    assert inst.compare(25).passed
    assert agree(inst.lhs, mock(which.split("_")[0], acc=25), 25)


def test_equivalence_choi():
    insts = equivalence_choi(30)
    assert len(insts) == 2
    for inst in insts:
        assert inst.compare(30).passed
        assert inst.lhs.val > -100


def test_negative_exponent_argument_is_legal():
    s = mock("nu_tri", P("a"), P("-a^2*z^-1"), qsign=-1, acc=20)
    assert s.acc == 20


@given(st.sampled_from(["z", "a", "-z", "z*a^-1", "-a*q", "z^2*q^2"]),
       st.sampled_from(["a", "z^-1", "-z*q", "a*z", "q"]))
@settings(max_examples=20, deadline=None)
def test_omega0_symmetry(m1, m2):
    x, y = P(m1), P(m2)
    assert agree(mock("omega0", x, y, acc=20), mock("omega0", y, x, acc=20), 20)


def test_g_links():
    acc = 40
    from qmock import registry
    assert registry.verify("G_OMEGA", acc).ok
    assert registry.verify("G_G3", acc).ok


@pytest.mark.parametrize("family,args", [
    ("nu", ()), ("omega", ()), ("phi", ()), ("nu_tri", ("a", "z")), ("omega1", ("a", "z")),
    ("F_func", ("a", "z")), ("nu_bi", ("z",)), ("omega0", ("z", "a")), ("nu_star", ("a", "z")),
])
def test_qsign_cross_check(family, args):
    """Folding q -> -q into the terms agrees with negating the finished series."""
    acc = 18
    ms = [P(x) for x in args]
    folded = build(MockSpec(family, tuple(ms), qsign=-1), acc)
    post = series_q_negate(build(MockSpec(family, tuple(m.qsign(-1) for m in ms)), acc))
    assert agree(folded, post, acc)


@pytest.mark.parametrize("family", sorted(M.ARITY))
def test_deterministic_and_extending(family):
    names = M.ARG_NAMES[family]
    defaults = {"a": "a", "z": "z", "y": "a", "x": "z", "b": "-z*q*a^-1", "c": "z^2*q^2*a^-1"}
    args = tuple(P(defaults[n]) for n in names)
    if family == "rho3":
        args = (P("z*q"), P("-z*q*a^-1"), P("z^2*q^2*a^-1"))
    if family == "bigG":
        args = (P("z*q"), P("a*q"))
    step = 2 if family == "rho3" else 1
    lo = build(MockSpec(family, args, step=step), 10)
    assert build(MockSpec(family, args, step=step), 10) == lo
    hi = build(MockSpec(family, args, step=step), 16)
    assert hi.truncate(10) == lo


def test_illegal_specs():
    with pytest.raises(IllegalSpec):
        MockSpec("bogus")
    with pytest.raises(IllegalSpec):
        MockSpec("omega_bi", ())
    with pytest.raises(IllegalSpec):
        MockSpec("omega", (), qsign=2)
    with pytest.raises(IllegalSpec):
        MockSpec("omega", (), step=2)
    with pytest.raises(IllegalSpec):
        mock("nu_bi", P("2*z*q^-1"), acc=5)


def test_catalog_entries():
    cat = M.catalog()
    assert {c["name"] for c in cat} == set(M.ARITY)
    for c in cat:
        assert c["arity"] == len(c["args"]) == M.ARITY[c["name"]]
