"""In-place radix-2 DFT with bit-reversed output, its naive oracle and inverse.

Buffers are plain ``list[int]`` of length ``plan.n``; row s of the butterfly
grid overwrites row s-1 in place.  Stage s pairs positions ``i*m + j`` and
``(i+1)*m + j`` for even block index i, where m = n >> s.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import MutableSequence, Sequence

from .plan import TransformPlan
from .ring import PrimeField


@dataclass
class OpCounter:
    """Ring operation tallies.

    ``additions`` counts additions and subtractions; ``multiplications``
    counts products with a twiddle.  Negation and halving are shifts rather
    than multiplications, so halvings are tracked separately and never enter
    the complexity bound.
    """

    additions: int = 0
    multiplications: int = 0
    halvings: int = 0

    def reset(self) -> None:
        self.additions = self.multiplications = self.halvings = 0

    def __iadd__(self, other: OpCounter) -> OpCounter:
        self.additions += other.additions
        self.multiplications += other.multiplications
        self.halvings += other.halvings
        return self


def check_buffer(buf: Sequence[int], plan: TransformPlan) -> None:
    if len(buf) != plan.n:
        raise ValueError(f"buffer has length {len(buf)}, plan expects {plan.n}")


def butterfly_forward(
    buf: MutableSequence[int],
    lo: int,
    hi: int,
    w: int,
    field: PrimeField,
    ctr: OpCounter | None = None,
) -> None:
    """(u, v) <- (u + w*v, u - w*v) on slots ``lo`` and ``hi``."""
    P = field.modulus
    t = w * buf[hi] % P
    u = buf[lo]
    buf[lo] = (u + t) % P
    buf[hi] = (u - t) % P
    if ctr is not None:
        ctr.additions += 2
        ctr.multiplications += 1


def butterfly_inverse(
    buf: MutableSequence[int],
    lo: int,
    hi: int,
    w_inv: int,
    field: PrimeField,
    ctr: OpCounter | None = None,
) -> None:
    """Undo :func:`butterfly_forward`: (u, v) <- ((u+v)/2, (u-v)/(2w))."""
    P = field.modulus
    u, v = buf[lo], buf[hi]
    buf[lo] = field.half((u + v) % P)
    buf[hi] = field.half((u - v) % P) * w_inv % P
    if ctr is not None:
        ctr.additions += 2
        ctr.multiplications += 1
        ctr.halvings += 2


def forward_stage(
    buf: MutableSequence[int],
    plan: TransformPlan,
    s: int,
    ell: int,
    ctr: OpCounter | None = None,
) -> None:
    """Run stage s on the prefix of rows that a length-``ell`` input needs.

    Positions up to ceil(ell/m)*m - 1 are produced; a butterfly whose lower
    slot is in range writes both slots.  The stage-(s-1) value at ``hi`` is
    a structural zero when ``hi mod 2m >= ell`` (all input coefficients
    beyond ell are zero), in which case both outputs equal ``buf[lo]`` and
    no arithmetic is spent.  With ell == n this is the plain DFT stage.
    """
    n = plan.n
    P = plan.field.modulus
    tw = plan.twiddles
    m = n >> s
    bound = -(-ell // m) * m  # exclusive
    live = min(m, max(0, ell - m))  # j < live has a nonzero partner
    adds = muls = 0
    for base in range(0, bound, 2 * m):
        w = tw[base // (2 * m)]
        for lo in range(base, base + live):
            hi = lo + m
            t = w * buf[hi] % P
            u = buf[lo]
            buf[lo] = (u + t) % P
            buf[hi] = (u - t) % P
        for lo in range(base + live, base + m):
            buf[lo + m] = buf[lo]
        adds += 2 * live
        muls += live
    if ctr is not None:
        ctr.additions += adds
        ctr.multiplications += muls


def dft_inplace(buf: MutableSequence[int], plan: TransformPlan, ctr: OpCounter | None = None) -> None:
    """Overwrite coefficients with evaluations: buf[i] = A(omega**bitrev(i, p))."""
    check_buffer(buf, plan)
    for s in range(1, plan.p + 1):
        forward_stage(buf, plan, s, plan.n, ctr)


def idft_inplace(buf: MutableSequence[int], plan: TransformPlan, ctr: OpCounter | None = None) -> None:
    """Inverse of :func:`dft_inplace`; the 1/n factor comes from per-butterfly halving."""
    check_buffer(buf, plan)
    n = plan.n
    P = plan.field.modulus
    half = plan.field.half
    tw_inv = plan.twiddles_inv
    for s in range(plan.p, 0, -1):
        m = n >> s
        for base in range(0, n, 2 * m):
            w_inv = tw_inv[base // (2 * m)]
            for lo in range(base, base + m):
                hi = lo + m
                u, v = buf[lo], buf[hi]
                buf[lo] = half((u + v) % P)
                buf[hi] = half((u - v) % P) * w_inv % P
    if ctr is not None:
        butterflies = n // 2 * plan.p
        ctr.additions += 2 * butterflies
        ctr.multiplications += butterflies
        ctr.halvings += 2 * butterflies


def dft_naive(a: Sequence[int], plan: TransformPlan, inverse: bool = False) -> list[int]:
    """O(n^2) evaluation sum_j a_j * w**(i*j) in natural order.

    ``w`` is omega, or omega**-1 when ``inverse``; no 1/n scaling is applied.
    """
    n = plan.n
    if len(a) > n:
        raise ValueError(f"{len(a)} coefficients exceed transform length {n}")
    P = plan.field.modulus
    w = plan.omega_inv if inverse else plan.omega
    powers = [1] * n
    for k in range(1, n):
        powers[k] = powers[k - 1] * w % P
    return [sum(c * powers[i * j % n] for j, c in enumerate(a)) % P for i in range(n)]
