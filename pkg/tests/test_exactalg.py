from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from circquot.exactalg import (
    CyclotomicElement,
    PowerSeries,
    RationalFunction,
    ReconstructionFailed,
    ReconstructionUnverified,
    cyclotomic_arith,
    laurent_at_one,
    reconstruct_rational,
    taylor_coefficients,
)
from circquot.exactalg import poly as P

F = Fraction


def _series(vals):
    return [F(v) for v in vals]


# ---- rationals and series ---------------------------------------------------


def test_power_series_truncates_to_min_order():
    a = PowerSeries([1, 2, 3, 4])
    b = PowerSeries([1, 1])
    assert (a + b).order == 1
    assert (a * b).coefficients == (F(1), F(3))


def test_power_series_division_needs_unit():
    with pytest.raises(ZeroDivisionError):
        PowerSeries([1, 1]) / PowerSeries([0, 1])


def test_power_series_inverse_of_geometric():
    s = PowerSeries([1, -1], 5)
    assert s.inverse().coefficients == (F(1),) * 6


# ---- rational functions -----------------------------------------------------


def test_rational_function_canonical_form():
    f = RationalFunction((2, -2), (2, -4, 2))  # 2(1 - x) / 2(1 - x)^2
    assert f == RationalFunction((1,), (1, -1))
    assert f.denominator[-1] > 0


def test_rational_function_rejects_pole_at_zero():
    with pytest.raises(ValueError):
        RationalFunction((1,), (0, 1))


def test_taylor_geometric():
    assert list(taylor_coefficients(RationalFunction((1,), (1, -1)), 3)) == [1, 1, 1, 1]


def test_taylor_squares():
    f = RationalFunction((1, 1), P.power((1, -1), 3))
    assert list(taylor_coefficients(f, 2)) == [1, 4, 9]


# ---- Laurent expansion at 1 -------------------------------------------------


def test_laurent_square_geometric():
    lc = laurent_at_one(RationalFunction((1,), P.power((1, -1), 2)), 1)
    assert lc.pole_order == 2
    assert lc.coefficients == (F(1), F(0))


def test_laurent_simple_pole():
    # (1 + x) / (1 - x) = (2 - t) / t at x = 1 - t
    lc = laurent_at_one(RationalFunction((1, 1), (1, -1)), 1)
    assert lc.pole_order == 1
    assert lc.coefficients == (F(2), F(-1))


def test_laurent_no_pole_reports_taylor_at_one():
    lc = laurent_at_one(RationalFunction((3, 1)), 1)
    assert lc.pole_order == 0
    assert lc.coefficients[0] == 4


def test_laurent_negative_kmax():
    with pytest.raises(ValueError):
        laurent_at_one(RationalFunction((1,), (1, -1)), -1)


_small = st.integers(-4, 4)


@st.composite
def rational_with_pole(draw):
    num = draw(st.lists(_small, min_size=1, max_size=4))
    if not any(num) or sum(num) == 0:
        num[0] += 1
        if sum(num) == 0:
            num.append(1)
    exps = draw(st.lists(st.integers(1, 3), min_size=1, max_size=3))
    den = (1,)
    for e in exps:
        den = P.mul(den, P.one_minus_x_pow(e))
    return RationalFunction(tuple(num), den)


def _pole_order(f):
    return laurent_at_one(f, 0).pole_order


@settings(max_examples=60, deadline=None)
@given(rational_with_pole(), st.integers(0, 3))
def test_laurent_remainder_has_lower_pole(f, k):
    lc = laurent_at_one(f, k)
    d = lc.pole_order
    rest = f - lc.principal_part()
    if rest.numerator:
        assert _pole_order(rest) <= max(d - k - 1, 0)


@settings(max_examples=40, deadline=None)
@given(rational_with_pole(), rational_with_pole(), st.integers(-3, 3))
def test_laurent_and_taylor_are_linear(f, g, c):
    k = 3
    lf, lg = laurent_at_one(f, k), laurent_at_one(g, k)
    h = f + g * c
    lh = laurent_at_one(h, k)
    # align both expansions to the common pole order d
    d = max(lf.pole_order, lg.pole_order)

    def padded(lc):
        return [F(0)] * (d - lc.pole_order) + list(lc.coefficients)

    want = [a + c * b for a, b in zip(padded(lf), padded(lg))]
    got = [F(0)] * (d - lh.pole_order) + list(lh.coefficients)
    n = min(len(want), len(got))
    assert got[:n] == want[:n]
    tf, tg, th = (taylor_coefficients(x, 6) for x in (f, g, h))
    assert th == tf + tg * c


# ---- reconstruction ---------------------------------------------------------


def test_reconstruct_geometric():
    s = PowerSeries([1] * 11)
    assert reconstruct_rational(s, 0, 1) == RationalFunction((1,), (1, -1))


def test_reconstruct_even_squares():
    vals = []
    for k in range(13):
        vals.append((k // 2 + 1) ** 2 if k % 2 == 0 else 0)
    f = reconstruct_rational(PowerSeries(vals), 2, 6)
    assert f == RationalFunction((1, 0, 1), P.power((1, 0, -1), 3))


def test_reconstruct_fails_within_small_bounds():
    # squares 1, 4, 9, ... have denominator (1 - x)^3 and do not fit den_bound 1
    s = PowerSeries([(k + 1) ** 2 for k in range(12)])
    with pytest.raises((ReconstructionFailed, ReconstructionUnverified)):
        reconstruct_rational(s, 1, 1)


def test_reconstruct_detects_margin_mismatch():
    vals = [1] * 11
    vals[-1] = 2
    with pytest.raises(ReconstructionUnverified):
        reconstruct_rational(PowerSeries(vals), 0, 1)


@st.composite
def small_rational(draw):
    num = draw(st.lists(_small, min_size=1, max_size=4))
    den = [1] + draw(st.lists(_small, min_size=0, max_size=3))
    return RationalFunction(tuple(num), tuple(den))


@settings(max_examples=100, deadline=None)
@given(small_rational())
def test_reconstruct_round_trip(f):
    nb, db = 3, 3
    s = taylor_coefficients(f, nb + 2 * db)
    assert reconstruct_rational(s, nb, db) == f


# ---- cyclotomic fields ------------------------------------------------------


def test_zeta4_squared():
    z = CyclotomicElement.zeta(4)
    assert z * z == CyclotomicElement.rational(4, -1)


def test_conj_zeta3():
    assert cyclotomic_arith(CyclotomicElement.zeta(3), None, "conj") == CyclotomicElement.zeta(3, 2)


def test_sqrt2_in_q_zeta8():
    z = CyclotomicElement.zeta(8)
    s = z + z.conj()
    # oracle: expand (z + z^7)^2 = z^2 + 2 + z^14 = z^2 + 2 + z^6 = z^2 + 2 - z^2 = 2 by hand in powers of z
    z2 = CyclotomicElement.zeta(8, 2)
    z6 = CyclotomicElement.zeta(8, 6)
    assert z6 == -z2
    assert s * s == CyclotomicElement.rational(8, 2)


def test_inverse_of_zero():
    with pytest.raises(ZeroDivisionError):
        CyclotomicElement.zero(5).inv()


def test_mixed_conductors_merge():
    a = CyclotomicElement.zeta(3)
    b = CyclotomicElement.zeta(4)
    c = cyclotomic_arith(a, b, "mul")
    assert c.conductor == 12
    assert c == CyclotomicElement.zeta(12, 4 + 3)


def test_root_of_unity_order():
    assert CyclotomicElement.zeta(12, 8).root_of_unity_order() == 3
    assert (CyclotomicElement.zeta(8) + 1).root_of_unity_order() is None


_conductors = st.sampled_from([3, 4, 5, 8, 12])


@st.composite
def cyclo(draw, N):
    from circquot.exactalg import euler_phi

    coords = draw(st.lists(st.fractions(min_value=-3, max_value=3, max_denominator=4),
                           min_size=euler_phi(N), max_size=euler_phi(N)))
    return CyclotomicElement(N, coords)


@settings(max_examples=60, deadline=None)
@given(st.data())
def test_cyclotomic_ring_axioms(data):
    N = data.draw(_conductors)
    a, b, c = (data.draw(cyclo(N)) for _ in range(3))
    assert a + b == b + a
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a.conj().conj() == a
    assert (a * b).conj() == a.conj() * b.conj()
    if not a.is_zero():
        assert (a * a.inv()).is_one()
