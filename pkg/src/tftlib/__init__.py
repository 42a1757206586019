"""Truncated Fourier transform and its inverse over prime fields."""

from .invtft import butterfly_solve, inv_tft, inverse_tft, self_contained_push_up
from .plan import TransformPlan, bit_reverse, make_plan
from .polymul import Polynomial, multiply_dft, multiply_schoolbook, multiply_tft
from .ring import DEFAULT_MODULUS, PrimeField, RootOfUnityError
from .tft import tft, tft_cost_bound, tft_forward
from .transform import OpCounter, dft_inplace, dft_naive, idft_inplace

__all__ = [
    "DEFAULT_MODULUS",
    "OpCounter",
    "Polynomial",
    "PrimeField",
    "RootOfUnityError",
    "TransformPlan",
    "bit_reverse",
    "butterfly_solve",
    "dft_inplace",
    "dft_naive",
    "idft_inplace",
    "inv_tft",
    "inverse_tft",
    "make_plan",
    "multiply_dft",
    "multiply_schoolbook",
    "multiply_tft",
    "self_contained_push_up",
    "tft",
    "tft_cost_bound",
    "tft_forward",
]
