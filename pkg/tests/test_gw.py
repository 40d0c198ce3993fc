from itertools import combinations_with_replacement

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import MODELS, elements, models
from motivic_chi.gw import (
    Coefficient,
    Exactness,
    FieldModel,
    GwValue,
    gw_add,
    gw_from_json,
    gw_from_text,
    gw_inverse,
    gw_make,
    gw_mul,
    gw_pow_twist,
    is_unit,
    normal_form,
    rank,
    reduce_mod_fundamental,
    signature,
)
from motivic_chi.oracles import DiagonalForm, classify_form_fp

G = FieldModel.generic()
S = FieldModel.sqrt_minus_one()
R = FieldModel.real_closed()
F3, F5, F7 = FieldModel.finite(3), FieldModel.finite(5), FieldModel.finite(7)


def pair(x):
    return (x.unit_coeff, x.twist_coeff)


def classify(p, ones, twists):
    return classify_form_fp(DiagonalForm(p, (1,) * ones + (-1,) * twists))


# --- coefficients -----------------------------------------------------------


def test_coefficient_reduction():
    c = Coefficient(10, 2, 5)
    assert (c.numerator, c.p_exponent) == (2, 1)
    assert Coefficient(0, 3, 5).p_exponent == 0


def test_coefficient_char_zero_rejects_denominator():
    with pytest.raises(ValueError):
        Coefficient(1, 1, 1)


def test_coefficient_units():
    assert Coefficient(5, 0, 5).is_unit()
    assert Coefficient(-1, 3, 5).is_unit()
    assert not Coefficient(3, 0, 5).is_unit()
    assert not Coefficient(2).is_unit()
    assert Coefficient(-1).is_unit()


def test_coefficient_arithmetic():
    a, b = Coefficient(1, 1, 5), Coefficient(3, 2, 5)  # 1/5, 3/25
    assert a + b == Coefficient(8, 2, 5)
    assert a * b == Coefficient(3, 3, 5)
    assert (a * 5) == 1


# --- gw_make / normal_form -------------------------------------------------


def test_make_generic():
    x = gw_make(1, -1, G)
    assert pair(x) == (1, -1)
    assert str(x) == "1<1> - 1<-1>"


def test_make_sqrt_minus_one():
    assert pair(gw_make(0, 1, S)) == (1, 0)


def test_make_f7_against_oracle():
    # <-1> + <-1> and <1> + <1> classify identically over F_7
    assert classify(7, 0, 2) == classify(7, 2, 0)
    assert pair(gw_make(0, 2, F7)) == (2, 0)


def test_make_rejects_denominator_in_char_zero():
    with pytest.raises(ValueError):
        gw_make(Coefficient(1, 1, 5), 0, G)


def test_make_rejects_wrong_prime():
    with pytest.raises(ValueError):
        gw_make(Coefficient(1, 1, 3), 0, F5)


def test_normal_form_examples():
    assert pair(normal_form(1, 2, S)) == (3, 0)
    assert classify(7, 0, 3) == classify(7, 2, 1)
    assert pair(normal_form(0, 3, F7)) == (2, 1)
    assert pair(normal_form(1, -1, R)) == (1, -1)


def test_normal_form_p_denominators_f3():
    # b = 1/3 has odd numerator: 1/3<-1> = (1/3 - 1)<1> + <-1>
    x = normal_form(0, Coefficient(1, 1, 3), F3)
    assert x.twist_coeff == 1
    assert x.unit_coeff == Coefficient(-2, 1, 3)


def test_normal_form_p1mod4_like_sqrt():
    assert pair(normal_form(4, -7, F5)) == (-3, 0)
    assert pair(normal_form(4, -7, FieldModel.finite(13))) == (-3, 0)


# --- ring operations ------------------------------------------------------------


def test_add_examples():
    assert gw_add(gw_make(1, -1, G), gw_make(0, 1, G), G) == gw_make(1, 0, G)
    x = gw_make(3, -2, G)
    assert gw_add(x, gw_make(0, 0, G), G) == x
    q = gw_make(1, -1, F3)
    # rank 0 and trivial discriminant: 2(1 - <-1>) is zero over F_3
    assert classify(3, 2, 0) == classify(3, 0, 2)
    assert gw_add(q, q, F3).is_zero()


def test_mul_examples():
    e = gw_make(0, 1, G)
    assert gw_mul(e, e, G) == gw_make(1, 0, G)
    q = gw_make(1, -1, G)
    # (1 - e)^2 = 1 - 2e + e^2 = 2 - 2e
    assert q * q == gw_make(2, -2, G)
    q3 = gw_make(1, -1, F3)
    assert (q3 * q3).is_zero()


def test_mixing_models_fails():
    with pytest.raises(ValueError):
        gw_make(1, 0, G) + gw_make(1, 0, R)
    with pytest.raises(ValueError):
        gw_add(gw_make(1, 0, G), gw_make(1, 0, G), R)


def test_pow_twist():
    assert gw_pow_twist(0, G) == gw_make(1, 0, G)
    assert gw_pow_twist(1, G) == gw_make(0, 1, G)
    assert gw_pow_twist(3, S) == gw_make(1, 0, S)
    assert gw_pow_twist(10**18 + 1, G) == gw_make(0, 1, G)
    with pytest.raises(ValueError):
        gw_pow_twist(-1, G)


# --- rank / signature / reduction / units ------------------------------------


def test_rank_examples():
    assert rank(gw_make(1, -1, G)) == 0
    assert rank(gw_make(1, 1, G)) == 2
    assert rank(gw_make(1, 0, G)) == 1


def test_signature_examples():
    assert signature(gw_make(0, 1, R)) == -1
    assert signature(gw_make(1, 1, R)) == 0
    # chi(P^2) = 1 + <-1> + <-1>^2 = 2 + <-1>
    p2 = gw_make(1, 0, R) + gw_pow_twist(1, R) + gw_pow_twist(2, R)
    assert p2 == gw_make(2, 1, R)
    assert signature(p2, R) == 1


@pytest.mark.parametrize("m", [G, S, F3, F5])
def test_signature_needs_real_closed(m):
    with pytest.raises(ValueError):
        signature(gw_make(1, 0, m), m)


def test_reduce_mod_fundamental():
    q = gw_make(1, -1, G)
    assert reduce_mod_fundamental(q) == 0
    assert reduce_mod_fundamental(q * q) == 0
    assert reduce_mod_fundamental(q * q * q) == 0
    assert reduce_mod_fundamental(gw_make(1, 0, G)) == 1


def test_is_unit_examples():
    q = gw_make(1, -1, F3)
    assert is_unit(gw_make(1, 0, F3) + q, F3)
    for m in (G, R, F3, F7):
        assert not is_unit(gw_make(1, -1, m), m)
    assert not is_unit(gw_make(1, 1, R), R)
    assert is_unit(gw_make(0, 1, G), G)
    assert is_unit(gw_make(5, 0, F5), F5)
    assert not is_unit(gw_make(2, 0, S), S)


# --- properties ---------------------------------------------------------------


@given(st.data())
def test_ring_axioms(data):
    m = data.draw(models)
    x, y, z = (data.draw(elements(m)) for _ in range(3))
    zero, one = normal_form(0, 0, m), normal_form(1, 0, m)
    assert x + y == y + x
    assert x * y == y * x
    assert (x + y) + z == x + (y + z)
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert x + zero == x
    assert x * one == x
    assert x - x == zero


@pytest.mark.parametrize("m", MODELS, ids=str)
def test_twist_squares_to_one(m):
    e = gw_make(0, 1, m)
    assert e * e == gw_make(1, 0, m)


@given(st.data())
def test_rank_is_ring_hom(data):
    m = data.draw(models)
    x, y = data.draw(elements(m)), data.draw(elements(m))
    assert rank(x + y) == rank(x) + rank(y)
    assert rank(x * y) == rank(x) * rank(y)
    assert reduce_mod_fundamental(x) == rank(x)
    assert reduce_mod_fundamental(x * y) == reduce_mod_fundamental(x) * reduce_mod_fundamental(y)


@given(elements(R), elements(R))
def test_signature_is_ring_hom(x, y):
    assert signature(x + y) == signature(x) + signature(y)
    assert signature(x * y) == signature(x) * signature(y)


@given(elements(R), elements(R))
def test_rank_signature_injective(x, y):
    if rank(x) == rank(y) and signature(x) == signature(y):
        assert x == y


@pytest.mark.parametrize("p", [3, 5, 7, 13])
def test_normal_form_matches_oracle(p):
    m = FieldModel.finite(p)
    forms = [
        (e.count(1), e.count(-1))
        for r in range(5)
        for e in combinations_with_replacement((1, -1), r)
    ]
    for a, b in forms:
        for c, d in forms:
            same_gw = normal_form(a, b, m) == normal_form(c, d, m)
            assert same_gw == (classify(p, a, b) == classify(p, c, d)), (p, a, b, c, d)


@given(st.data())
def test_units_have_inverses(data):
    m = data.draw(models)
    x = data.draw(elements(m))
    if is_unit(x, m):
        inv = gw_inverse(x)
        assert x * inv == normal_form(1, 0, m)
        # the two characters e -> 1 and e -> -1 are inverted too where they are ring maps
        assert rank(inv) * rank(x) == 1
        if m.kind.value in ("generic", "real-closed"):
            assert (inv.unit_coeff - inv.twist_coeff) * (x.unit_coeff - x.twist_coeff) == 1
    else:
        with pytest.raises(ZeroDivisionError):
            gw_inverse(x)


@given(elements(G))
def test_sqrt_factors_through_generic(x):
    direct = normal_form(x.unit_coeff, x.twist_coeff, S)
    assert direct == normal_form(rank(x), 0, S)


@given(st.data())
def test_text_and_json_round_trip(data):
    m = data.draw(models)
    x = data.draw(elements(m))
    assert gw_from_text(str(x), m) == x
    assert str(gw_from_text(str(x), m)) == str(x)
    assert gw_from_json(x.to_json()) == x


def test_text_rendering():
    assert str(gw_make(2, -2, G)) == "2<1> - 2<-1>"
    assert str(gw_make(0, 0, G)) == "0"
    assert str(gw_make(0, -3, G)) == "-3<-1>"
    assert str(gw_make(Coefficient(1, 2, 5), 0, F5)) == "1/5^2<1>"
    assert gw_from_text("1/5<1>", F5) == gw_make(Coefficient(1, 1, 5), 0, F5)
    with pytest.raises(ValueError):
        gw_from_text("1/3<1>", F5)
    with pytest.raises(ValueError):
        gw_from_text("1<1> 2<-1>", G)


def test_json_shape():
    assert gw_make(1, -1, G).to_json() == {
        "unit": {"numerator": 1, "p_exponent": 0},
        "twist": {"numerator": -1, "p_exponent": 0},
        "model": "generic",
    }


# --- models and values ----------------------------------------------------------


@pytest.mark.parametrize(
    "s, expected",
    [("generic", G), ("sqrt-minus-one", S), ("real-closed", R), ("finite:7", F7), ("finite:5:invert-char", F5)],
)
def test_model_parse(s, expected):
    assert FieldModel.parse(s) == expected
    assert FieldModel.parse(expected.selector) == expected


@pytest.mark.parametrize("s", ["finite:2", "finite:9", "finite", "complex", "finite:x"])
def test_model_parse_rejects(s):
    with pytest.raises(ValueError):
        FieldModel.parse(s)


def test_model_flags():
    assert F5.has_sqrt_minus_one and FieldModel.finite(13).has_sqrt_minus_one
    assert not F3.has_sqrt_minus_one and not F7.has_sqrt_minus_one
    assert F7.char_exponent == 7 and G.char_exponent == 1


def test_congruence_only_without_sqrt():
    with pytest.raises(ValueError):
        GwValue(gw_make(1, 0, S), Exactness.MODULO_FUNDAMENTAL_IDEAL)
    v = GwValue.congruence(gw_make(1, 0, S))
    assert v.exact


def test_congruence_absorbs():
    exact = GwValue(gw_make(1, -1, F3))
    cong = GwValue.congruence(gw_make(1, 0, F3))
    s = exact + cong
    assert not s.exact and s.unit_known
    assert not (exact * cong).exact
    assert (exact + exact).exact
    assert GwValue.from_json(s.to_json()) == s
