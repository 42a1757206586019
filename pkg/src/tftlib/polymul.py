"""Dense polynomials over Z/PZ and their product via the truncated transform."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .invtft import inv_tft
from .plan import make_plan
from .ring import PrimeField
from .tft import tft_forward
from .transform import OpCounter, dft_inplace, idft_inplace


@dataclass(frozen=True, eq=False)
class Polynomial:
    """Coefficients low degree first.  Trailing zeros are allowed and ignored."""

    field: PrimeField
    coeffs: tuple[int, ...]

    def __init__(self, field: PrimeField, coeffs: Iterable[int] = ()):
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "coeffs", tuple(field(c) for c in coeffs))

    @property
    def degree(self) -> int:
        """Index of the last nonzero coefficient; -1 for the zero polynomial."""
        for k in range(len(self.coeffs) - 1, -1, -1):
            if self.coeffs[k]:
                return k
        return -1

    def normalized(self) -> tuple[int, ...]:
        return self.coeffs[: self.degree + 1]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.field == other.field and self.normalized() == other.normalized()

    def __hash__(self) -> int:
        return hash((self.field.modulus, self.normalized()))

    def __add__(self, other: Polynomial) -> Polynomial:
        _same_field(self, other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return Polynomial(self.field, [x + (b[k] if k < len(b) else 0) for k, x in enumerate(a)])

    def __mul__(self, other: Polynomial) -> Polynomial:
        return multiply_tft(self, other)

    def __call__(self, x: int) -> int:
        r = 0
        for c in reversed(self.coeffs):
            r = (r * x + c) % self.field.modulus
        return r


def _same_field(f: Polynomial, g: Polynomial) -> None:
    if f.field != g.field:
        raise ValueError(f"polynomials over Z/{f.field.modulus} and Z/{g.field.modulus}")


def multiply_schoolbook(f: Polynomial, g: Polynomial) -> Polynomial:
    _same_field(f, g)
    a, b = f.normalized(), g.normalized()
    if not a or not b:
        return Polynomial(f.field)
    P = f.field.modulus
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return Polynomial(f.field, [c % P for c in out])


def multiply_tft(f: Polynomial, g: Polynomial, ctr: OpCounter | None = None) -> Polynomial:
    """Exact product f*g computed with two forward TFTs and one inverse.

    With ell = deg f + deg g + 1 and n the next power of two, the product is
    determined by its first ell bit-reversed evaluations, which are the
    pointwise products of the operands' truncated transforms.
    """
    _same_field(f, g)
    field = f.field
    a, b = f.normalized(), g.normalized()
    if not a or not b:
        return Polynomial(field)
    ell = len(a) + len(b) - 1
    n = max(2, 1 << (ell - 1).bit_length())
    if n.bit_length() - 1 > field.max_two_adicity:
        raise ValueError(f"product needs length {n}, beyond what Z/{field.modulus} supports")
    plan = make_plan(field, n)
    P = field.modulus
    x = list(a) + [0] * (n - len(a))
    y = list(b) + [0] * (n - len(b))
    tft_forward(x, ell, plan, ctr)
    tft_forward(y, ell, plan, ctr)
    for k in range(ell):
        x[k] = x[k] * y[k] % P
    if ctr is not None:
        ctr.multiplications += ell
    x[ell:] = [0] * (n - ell)
    inv_tft(x, ell, plan, ctr)
    return Polynomial(field, x[:ell])


def multiply_dft(f: Polynomial, g: Polynomial, ctr: OpCounter | None = None) -> Polynomial:
    """Same product through full zero-padded length-n transforms, for comparison."""
    _same_field(f, g)
    field = f.field
    a, b = f.normalized(), g.normalized()
    if not a or not b:
        return Polynomial(field)
    ell = len(a) + len(b) - 1
    n = max(2, 1 << (ell - 1).bit_length())
    plan = make_plan(field, n)
    P = field.modulus
    x = list(a) + [0] * (n - len(a))
    y = list(b) + [0] * (n - len(b))
    dft_inplace(x, plan, ctr)
    dft_inplace(y, plan, ctr)
    x = [u * v % P for u, v in zip(x, y)]
    if ctr is not None:
        ctr.multiplications += n
    idft_inplace(x, plan, ctr)
    return Polynomial(field, x[:ell])
