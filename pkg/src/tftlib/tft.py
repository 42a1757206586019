"""Forward truncated Fourier transform.

Only the first ``ell`` bit-reversed evaluations of a length-``ell`` input are
wanted, so stage s stops at ceil(ell/m_s)*m_s - 1 instead of n - 1.
"""

from __future__ import annotations

from typing import MutableSequence, Sequence

from .plan import TransformPlan, log2_exact
from .transform import OpCounter, check_buffer, forward_stage


def check_ell(ell: int, n: int) -> None:
    if not 1 <= ell <= n:
        raise ValueError(f"truncation length {ell} outside 1..{n}")


def check_zero_tail(buf: Sequence[int], ell: int) -> None:
    for k in range(ell, len(buf)):
        if buf[k]:
            raise ValueError(f"position {k} >= ell={ell} holds {buf[k]}, expected 0")


def tft_forward(
    buf: MutableSequence[int],
    ell: int,
    plan: TransformPlan,
    ctr: OpCounter | None = None,
) -> None:
    """In place: buf[i] <- A(omega**bitrev(i, p)) for i < ell.

    ``buf`` must hold a_0..a_{ell-1} followed by zeros.  Slots from ``ell``
    on are left with whatever grid values the truncated schedule wrote there
    and should be treated as scratch.
    """
    check_buffer(buf, plan)
    check_ell(ell, plan.n)
    check_zero_tail(buf, ell)
    for s in range(1, plan.p + 1):
        forward_stage(buf, plan, s, ell, ctr)


def tft(coeffs: Sequence[int], plan: TransformPlan, ctr: OpCounter | None = None) -> list[int]:
    """Return the length-len(coeffs) TFT of ``coeffs`` as a new list."""
    ell = len(coeffs)
    buf = [plan.field(c) for c in coeffs] + [0] * (plan.n - ell)
    tft_forward(buf, ell, plan, ctr)
    return buf[:ell]


def tft_cost_bound(n: int, ell: int) -> tuple[int, int]:
    """Worst-case (additions, multiplications) for a length-ell TFT of size n."""
    p = log2_exact(n)
    check_ell(ell, n)
    adds = ell * p + n
    return adds, adds // 2


def executed_butterflies(n: int, ell: int) -> list[list[int]]:
    """Lower slots of the butterflies that do arithmetic, per stage 1..p.

    Mirrors the pruning in the forward stage loop without touching data;
    used to draw schedules.
    """
    p = log2_exact(n)
    check_ell(ell, n)
    stages = []
    for s in range(1, p + 1):
        m = n >> s
        bound = -(-ell // m) * m
        live = min(m, max(0, ell - m))
        stages.append([lo for base in range(0, bound, 2 * m) for lo in range(base, base + live)])
    return stages
