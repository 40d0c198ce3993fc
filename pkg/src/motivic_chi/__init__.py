"""Motivic Euler characteristics of combinatorially described spaces, valued in GW(k)."""

from .dsl import CartanType, parse, pretty_print, validate
from .engine import Derivation, eval_chi, evaluate, replay, verify_derivation
from .gw import (
    Coefficient,
    Exactness,
    FieldModel,
    GwElement,
    GwValue,
    gw_add,
    gw_make,
    gw_mul,
    gw_pow_twist,
    is_unit,
    normal_form,
    rank,
    reduce_mod_fundamental,
    signature,
)
from .roots import build_root_system, chi_flag, chi_g_mod_normalizer, chi_g_mod_t, weyl_enumerate

__version__ = "0.1.0"
