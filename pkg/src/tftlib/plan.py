"""Bit reversal and the precomputed twiddle context shared by all transforms."""

from __future__ import annotations

from dataclasses import dataclass

from .ring import PrimeField


def bit_reverse(i: int, bits: int) -> int:
    """Reverse the low ``bits`` binary digits of ``i`` (0 <= i < 2**bits)."""
    if bits < 0:
        raise ValueError("bit count must be nonnegative")
    if not 0 <= i < (1 << bits):
        raise ValueError(f"{i} does not fit in {bits} bits")
    r = 0
    for _ in range(bits):
        r = (r << 1) | (i & 1)
        i >>= 1
    return r


def log2_exact(n: int) -> int:
    if n < 1 or n & (n - 1):
        raise ValueError(f"{n} is not a power of two")
    return n.bit_length() - 1


@dataclass(frozen=True)
class TransformPlan:
    """Everything a length-n transform over ``field`` needs, computed once.

    ``twiddles[k]`` holds omega**bitrev(k, p-1).  The factor used by the
    butterfly on blocks (i, i+1) at stage s is omega**(bitrev(i, s) * m_s)
    with m_s = 2**(p-s).  For even i = 2k, bitrev(i, s) = bitrev(k, s-1), and
    shifting an (s-1)-bit reversal left by p-s bits gives the (p-1)-bit
    reversal, so that factor is ``twiddles[i // 2]`` whatever the stage.
    """

    field: PrimeField
    n: int
    p: int
    omega: int
    omega_inv: int
    twiddles: tuple[int, ...]
    twiddles_inv: tuple[int, ...]

    def width(self, s: int) -> int:
        """Butterfly span m_s at stage s."""
        return self.n >> s

    def stage_twiddle(self, s: int, i: int, inverse: bool = False) -> int:
        """omega**(bitrev(i, s) * m_s) for an even block index i at stage s."""
        if not 1 <= s <= self.p:
            raise ValueError(f"stage {s} outside 1..{self.p}")
        if i & 1 or not 0 <= i < (1 << s):
            raise ValueError(f"block index {i} invalid at stage {s}")
        table = self.twiddles_inv if inverse else self.twiddles
        return table[i >> 1]


def make_plan(field: PrimeField, n: int, omega: int | None = None) -> TransformPlan:
    """Build the plan for length ``n``.

    By default omega is the field's smallest primitive n-th root; an explicit
    ``omega`` is accepted if it has exact order n.
    """
    p = log2_exact(n)
    if p < 1:
        raise ValueError("transform length must be at least 2")
    if omega is None:
        omega = field.find_primitive_root(n)
    else:
        omega = field(omega)
        if field.pow(omega, n // 2) != field.modulus - 1:
            raise ValueError(f"{omega} is not a primitive {n}-th root of unity mod {field.modulus}")
    omega_inv = field.inv(omega)

    half = n // 2
    powers = [1] * half
    powers_inv = [1] * half
    for k in range(1, half):
        powers[k] = field.mul(powers[k - 1], omega)
        powers_inv[k] = field.mul(powers_inv[k - 1], omega_inv)
    rev = [bit_reverse(k, p - 1) for k in range(half)]
    return TransformPlan(
        field=field,
        n=n,
        p=p,
        omega=omega,
        omega_inv=omega_inv,
        twiddles=tuple(powers[r] for r in rev),
        twiddles_inv=tuple(powers_inv[r] for r in rev),
    )
