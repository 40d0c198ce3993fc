import pytest

from motivic_chi import oracles
from motivic_chi.dsl import CartanType
from motivic_chi.engine import eval_chi
from motivic_chi.dsl import Projective
from motivic_chi.gw import Exactness, FieldModel, gw_make, rank
from motivic_chi.roots import (
    SUPPORTED_TYPES,
    UnsupportedCartanType,
    build_root_system,
    chi_flag,
    chi_g_mod_normalizer,
    chi_g_mod_t,
    weyl_enumerate,
)

A1, A2, B2, G2 = (CartanType(*t) for t in (("A", 1), ("A", 2), ("B", 2), ("G", 2)))
G = FieldModel.generic()
S = FieldModel.sqrt_minus_one()
R = FieldModel.real_closed()


def test_root_counts_examples():
    assert build_root_system(A1).positive_root_count == 1
    assert build_root_system(B2).positive_root_count == 4
    assert build_root_system(G2).positive_root_count == 6


@pytest.mark.parametrize("ct", SUPPORTED_TYPES, ids=str)
def test_root_count_closed_form(ct):
    rs = build_root_system(ct)
    assert rs.positive_root_count == oracles.positive_root_count_closed_form(ct)
    assert rs.dimension_flag == rs.positive_root_count


def test_cartan_matrix_g2():
    cm = build_root_system(G2).cartan_matrix
    assert sorted(cm[0, 1:].tolist() + cm[1, :1].tolist()) == [-3, -1]


def test_weyl_examples():
    assert weyl_enumerate(build_root_system(A1)).length_counts == (1, 1)
    wd = weyl_enumerate(A2)
    assert (wd.order, wd.length_counts) == (6, (1, 2, 2, 1))
    assert list(wd.length_counts) == oracles.poincare_coefficients(A2)
    wd = weyl_enumerate(G2)
    assert wd.order == 12
    assert list(wd.length_counts) == oracles.poincare_coefficients(G2)
    assert wd.to_json() == [1, 2, 2, 2, 2, 2, 1]


@pytest.mark.parametrize("ct", SUPPORTED_TYPES, ids=str)
def test_weyl_against_product_formula(ct):
    wd = weyl_enumerate(ct)
    assert wd.order == oracles.weyl_order_closed_form(ct)
    assert list(wd.length_counts) == oracles.poincare_coefficients(ct)
    c = wd.length_counts
    assert sum(c) == wd.order
    assert c[0] == 1 and c[-1] == 1
    assert c == c[::-1]
    assert wd.longest_length == build_root_system(ct).positive_root_count


@pytest.mark.parametrize("ct", [("A", 8), ("B", 7), ("D", 7), ("E", 7), ("E", 8), ("G", 3)])
def test_cap(ct):
    with pytest.raises(UnsupportedCartanType):
        weyl_enumerate(CartanType(*ct))
    with pytest.raises(UnsupportedCartanType):
        chi_g_mod_normalizer(CartanType(*ct), S)


def test_chi_flag_examples():
    assert chi_flag(A1, G).representative == gw_make(1, 1, G)
    assert chi_flag(A2, S).representative == gw_make(6, 0, S)
    f3 = FieldModel.finite(3)
    assert chi_flag(A1, f3).representative == gw_make(1, 1, f3)
    assert chi_flag(A1, G).exact


def test_chi_flag_a2_generic_by_hand():
    # lengths 0,1,1,2,2,3 with N = 3: e^3 + 2e^2 + 2e + 1 = 3 + 3e
    assert chi_flag(A2, G).representative == gw_make(3, 3, G)


def test_chi_g_mod_t_examples():
    assert chi_g_mod_t(A1, G).representative == gw_make(1, 1, G)
    assert chi_g_mod_t(B2, S).representative == gw_make(8, 0, S)
    assert chi_g_mod_t(A1, R).representative == gw_make(1, 1, R)


def test_chi_g_mod_normalizer_examples():
    v = chi_g_mod_normalizer(A1, S)
    assert v.exact and v.representative == gw_make(1, 0, S)
    f5 = FieldModel.finite(5)
    v = chi_g_mod_normalizer(G2, f5)
    assert v.exact and v.representative == gw_make(1, 0, f5)
    assert v.representative.unit_coeff.prime == 5
    v = chi_g_mod_normalizer(A2, R)
    assert v.exactness is Exactness.MODULO_FUNDAMENTAL_IDEAL
    assert v.unit_known and v.representative == gw_make(1, 0, R)


@pytest.mark.parametrize("m", [G, S, R, FieldModel.finite(3), FieldModel.finite(5)], ids=str)
@pytest.mark.parametrize("ct", SUPPORTED_TYPES, ids=str)
def test_flag_rank_is_weyl_order(ct, m):
    assert rank(chi_flag(ct, m).representative) == oracles.weyl_order_closed_form(ct)
    assert rank(chi_g_mod_normalizer(ct, m).representative) == 1


@pytest.mark.parametrize("m", [G, S, R, FieldModel.finite(3), FieldModel.finite(7)], ids=str)
def test_flag_a1_is_p1(m):
    assert chi_flag(A1, m) == eval_chi(Projective(1), m)[0]
