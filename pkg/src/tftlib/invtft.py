"""Inverse truncated Fourier transform.

A butterfly ties two stage-(s-1) values (u, v) to two stage-s values
(u + w v, u - w v).  Any two of the four determine the other two, so the
inverse can walk the grid up and down, using the zero tail of the original
input as the extra known values the truncated output lacks.

The recursion works on aligned regions [head, last] of size m_{s-1}.  On
entry positions head..tail hold stage-p values and tail+1..last hold
stage-(s-1) values; on return the whole region holds stage-(s-1) values.
"""

from __future__ import annotations

from typing import Callable, MutableSequence, NamedTuple

from .plan import TransformPlan, log2_exact
from .ring import PrimeField
from .tft import check_ell, check_zero_tail
from .transform import OpCounter, check_buffer

SLOTS = ("u0", "v0", "u1", "v1")


def push_down_left(u: int, v: int, w: int, field: PrimeField) -> int:
    return (u + w * v) % field.modulus


def push_down_right(u: int, v: int, w: int, field: PrimeField) -> int:
    return (u - w * v) % field.modulus


def push_up_pair(u1: int, v1: int, w_inv: int, field: PrimeField) -> tuple[int, int]:
    P = field.modulus
    return field.half((u1 + v1) % P), field.half((u1 - v1) % P) * w_inv % P


def solve_left_mixed(u1: int, v0: int, w: int, field: PrimeField) -> tuple[int, int]:
    """Known stage-s left and stage-(s-1) right; return (u0, v1)."""
    P = field.modulus
    t = w * v0 % P
    u0 = (u1 - t) % P
    return u0, (u0 - t) % P


def solve_right_mixed(v1: int, u0: int, w_inv: int, field: PrimeField) -> tuple[int, int]:
    """Known stage-s right and stage-(s-1) left; return (v0, u1)."""
    P = field.modulus
    v0 = (u0 - v1) * w_inv % P
    return v0, (2 * u0 - v1) % P


def butterfly_solve(w: int, field: PrimeField, **known: int) -> dict[str, int]:
    """Complete a butterfly from any two of its four values.

    Slots are ``u0``/``v0`` (stage s-1, left/right) and ``u1``/``v1``
    (stage s).  Returns all four.
    """
    if len(known) != 2 or not set(known) <= set(SLOTS):
        raise ValueError(f"need exactly two of {SLOTS}, got {sorted(known)}")
    P = field.modulus
    w %= P
    if w == 0:
        raise ValueError("twiddle must be a unit")
    w_inv = field.inv(w)
    k = {name: value % P for name, value in known.items()}
    keys = frozenset(k)
    if keys == {"u0", "v0"}:
        u0, v0 = k["u0"], k["v0"]
    elif keys == {"u1", "v1"}:
        u0, v0 = push_up_pair(k["u1"], k["v1"], w_inv, field)
    elif keys == {"u1", "v0"}:
        v0 = k["v0"]
        u0, _ = solve_left_mixed(k["u1"], v0, w, field)
    elif keys == {"v1", "u0"}:
        u0 = k["u0"]
        v0, _ = solve_right_mixed(k["v1"], u0, w_inv, field)
    elif keys == {"u0", "u1"}:
        u0 = k["u0"]
        v0 = (k["u1"] - u0) * w_inv % P
    else:  # v0, v1
        v0 = k["v0"]
        u0 = (k["v1"] + w * v0) % P
    return {
        "u0": u0,
        "v0": v0,
        "u1": push_down_left(u0, v0, w, field),
        "v1": push_down_right(u0, v0, w, field),
    }


class PushEvent(NamedTuple):
    """Emitted after each push: ``positions`` now hold row ``stage`` of the grid."""

    op: str
    stage: int
    positions: tuple[int, ...]
    depth: int


Observer = Callable[[PushEvent], None]


def _check_stage(plan: TransformPlan, s: int) -> int:
    if not 1 <= s <= plan.p:
        raise ValueError(f"stage {s} outside 1..{plan.p}")
    return plan.n >> s


def push_down_range(
    buf: MutableSequence[int],
    first: int,
    last: int,
    s: int,
    plan: TransformPlan,
    ctr: OpCounter | None = None,
    ell: int | None = None,
) -> None:
    """Bring positions first..last (inclusive) from stage s-1 to stage s.

    A left slot k (even block k // m) is pushed down with its stage-(s-1)
    partner k+m.  A right slot k is solved from the stage-s value already
    at k-m and its own stage-(s-1) value.  When ``ell`` is given, a
    stage-(s-1) right operand at r with r mod 2m >= ell is known to be zero
    and costs nothing.
    """
    if first > last:
        return
    m = _check_stage(plan, s)
    if first < 0 or last >= plan.n:
        raise ValueError(f"range {first}..{last} outside buffer")
    if ell is None:
        ell = plan.n
    P = plan.field.modulus
    tw = plan.twiddles
    adds = muls = 0
    for k in range(first, last + 1):
        w = tw[k // (2 * m)]
        if (k // m) & 1 == 0:
            if (k + m) % (2 * m) >= ell:
                continue
            buf[k] = (buf[k] + w * buf[k + m]) % P
            adds += 1
        else:
            if k % (2 * m) >= ell:
                buf[k] = buf[k - m]
                continue
            t = w * buf[k] % P
            buf[k] = (buf[k - m] - t - t) % P
            adds += 2
        muls += 1
    if ctr is not None:
        ctr.additions += adds
        ctr.multiplications += muls


def push_up_range(
    buf: MutableSequence[int],
    first: int,
    last: int,
    s: int,
    plan: TransformPlan,
    ctr: OpCounter | None = None,
    paired: bool = False,
    ell: int | None = None,
) -> None:
    """Bring left slots first..last (inclusive) from stage s to stage s-1.

    Unpaired, each k is solved from its stage-s value and the stage-(s-1)
    value at k+m.  Paired, (k, k+m) both hold stage s and both are lifted.
    """
    if first > last:
        return
    m = _check_stage(plan, s)
    if first < 0 or last + m >= plan.n:
        raise ValueError(f"range {first}..{last} outside buffer")
    if any((k // m) & 1 for k in (first, last)) or last - first >= m:
        raise ValueError(f"{first}..{last} is not a run of left slots at stage {s}")
    if ell is None:
        ell = plan.n
    P = plan.field.modulus
    half = plan.field.half
    tw = plan.twiddles
    tw_inv = plan.twiddles_inv
    adds = muls = halvings = 0
    for k in range(first, last + 1):
        hi = k + m
        zero_partner = hi % (2 * m) >= ell
        if paired:
            if zero_partner:
                buf[hi] = 0
                continue
            u, v = buf[k], buf[hi]
            buf[k] = half((u + v) % P)
            buf[hi] = half((u - v) % P) * tw_inv[k // (2 * m)] % P
            adds += 2
            halvings += 2
        else:
            if zero_partner:
                continue
            buf[k] = (buf[k] - tw[k // (2 * m)] * buf[hi]) % P
            adds += 1
        muls += 1
    if ctr is not None:
        ctr.additions += adds
        ctr.multiplications += muls
        ctr.halvings += halvings


def self_contained_push_up(
    buf: MutableSequence[int],
    start: int,
    length: int,
    plan: TransformPlan,
    ctr: OpCounter | None = None,
    observer: Observer | None = None,
    depth: int = 0,
) -> None:
    """Lift an aligned block from stage p to stage p - log2(length).

    Every butterfly at stages p, p-1, ... whose span is below ``length``
    pairs two slots inside the block, so the block inverts on its own.
    """
    k = log2_exact(length)
    if start % length or start + length > plan.n:
        raise ValueError(f"block {start}+{length} is not aligned inside length {plan.n}")
    for s in range(plan.p, plan.p - k, -1):
        m = plan.n >> s
        for base in range(start, start + length, 2 * m):
            push_up_range(buf, base, base + m - 1, s, plan, ctr, paired=True)
        if observer is not None:
            observer(PushEvent("self_contained", s - 1, tuple(range(start, start + length)), depth))


def inv_tft(
    buf: MutableSequence[int],
    ell: int,
    plan: TransformPlan,
    ctr: OpCounter | None = None,
    observer: Observer | None = None,
) -> None:
    """In place: recover a_0..a_{ell-1} from the length-ell TFT.

    ``buf`` must hold the TFT output in positions 0..ell-1 and zeros after;
    on return it holds the coefficients followed by the same zeros.
    """
    check_buffer(buf, plan)
    check_ell(ell, plan.n)
    check_zero_tail(buf, ell)
    p = plan.p

    def emit(op: str, stage: int, first: int, last: int, depth: int) -> None:
        if observer is not None and first <= last:
            observer(PushEvent(op, stage, tuple(range(first, last + 1)), depth))

    def recurse(head: int, tail: int, last: int, s: int, depth: int) -> None:
        if head > tail:
            return
        if head == last:
            # one slot: stage p is already stage s-1 (only reached when ell == n)
            return
        assert last - head + 1 == plan.n >> (s - 1)
        left_mid = head + (last - head) // 2
        right_mid = left_mid + 1
        if tail >= left_mid:
            self_contained_push_up(buf, head, left_mid - head + 1, plan, ctr, observer, depth)
            push_down_range(buf, tail + 1, last, s, plan, ctr, ell)
            emit("push_down", s, tail + 1, last, depth)
            recurse(right_mid, tail, last, s + 1, depth + 1)
            s = p - log2_exact(left_mid - head + 1)
            push_up_range(buf, head, left_mid, s, plan, ctr, paired=True, ell=ell)
            emit("push_up_pair", s - 1, head, last, depth)
        else:
            push_down_range(buf, tail + 1, left_mid, s, plan, ctr, ell)
            emit("push_down", s, tail + 1, left_mid, depth)
            recurse(head, tail, left_mid, s + 1, depth + 1)
            push_up_range(buf, head, left_mid, s, plan, ctr, ell=ell)
            emit("push_up", s - 1, head, left_mid, depth)

    recurse(0, ell - 1, plan.n - 1, 1, 0)


def inverse_tft(values, plan: TransformPlan, ctr: OpCounter | None = None) -> list[int]:
    """Return the coefficients whose length-len(values) TFT is ``values``."""
    ell = len(values)
    buf = [plan.field(v) for v in values] + [0] * (plan.n - ell)
    inv_tft(buf, ell, plan, ctr)
    return buf[:ell]
