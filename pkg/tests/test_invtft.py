import itertools
import random

import pytest
from hypothesis import given, strategies as st

from oracles import butterfly_grid
from tftlib.invtft import (
    SLOTS,
    butterfly_solve,
    inv_tft,
    inverse_tft,
    push_down_left,
    push_down_range,
    push_up_pair,
    push_up_range,
    self_contained_push_up,
    solve_left_mixed,
    solve_right_mixed,
)
from tftlib.plan import make_plan
from tftlib.ring import PrimeField
from tftlib.tft import tft, tft_forward
from tftlib.transform import OpCounter, dft_inplace, idft_inplace

F = PrimeField()


def test_solve_examples(f13):
    a, b = 9, 4
    assert push_up_pair((a + b) % 13, (a - b) % 13, 1, f13) == (a, b)
    assert push_down_left(2, 3, 5, f13) == 4
    assert solve_left_mixed(4, 3, 5, f13) == (2, 0)
    assert solve_right_mixed(0, 2, 8, f13) == (3, 4)


@given(
    st.integers(0, F.modulus - 1),
    st.integers(0, F.modulus - 1),
    st.integers(1, F.modulus - 1),
)
def test_butterfly_solve_any_pair(u0, v0, w):
    full = {"u0": u0, "v0": v0, "u1": (u0 + w * v0) % F.modulus, "v1": (u0 - w * v0) % F.modulus}
    for pair in itertools.combinations(SLOTS, 2):
        assert butterfly_solve(w, F, **{k: full[k] for k in pair}) == full


def test_butterfly_solve_degenerate(f13):
    with pytest.raises(ValueError):
        butterfly_solve(5, f13, u0=1)
    with pytest.raises(ValueError):
        butterfly_solve(5, f13, u0=1, v0=2, u1=3)
    with pytest.raises(ValueError):
        butterfly_solve(5, f13, u0=1, x=2)
    with pytest.raises(ValueError):
        butterfly_solve(0, f13, u0=1, v0=2)


@pytest.fixture(scope="module")
def grid16():
    rng = random.Random(16)
    plan = make_plan(F, 16)
    a = [rng.randrange(F.modulus) for _ in range(11)]
    return plan, butterfly_grid(a, plan.omega, 16, F.modulus)


def test_self_contained_noop(grid16):
    plan, grid = grid16
    buf = list(grid[4])
    self_contained_push_up(buf, 5, 1, plan)
    assert buf == grid[4]


def test_self_contained_first_half(grid16):
    plan, grid = grid16
    buf = list(grid[4])
    self_contained_push_up(buf, 0, 8, plan)
    assert buf[:8] == grid[1][:8]
    assert buf[8:] == grid[4][8:]


def test_self_contained_small_block(grid16):
    plan, grid = grid16
    buf = list(grid[4])
    self_contained_push_up(buf, 8, 2, plan)
    assert buf[8:10] == grid[3][8:10]
    with pytest.raises(ValueError):
        self_contained_push_up(buf, 4, 8, plan)


def test_push_ranges_against_grid(grid16):
    plan, grid = grid16
    buf = list(grid[4])
    push_down_range(buf, 3, 2, 1, plan)
    push_up_range(buf, 3, 2, 1, plan)
    assert buf == grid[4]

    # left half lifted to row 1, tail still row 0: push the tail down
    buf = grid[1][:8] + grid[4][8:11] + grid[0][11:]
    push_down_range(buf, 11, 15, 1, plan)
    assert buf[11:] == grid[1][11:]

    buf = list(grid[1])
    push_up_range(buf, 0, 7, 1, plan, paired=True)
    assert buf == grid[0]

    # unpaired lift needs the stage-(s-1) partner
    buf = grid[2][:2] + grid[1][2:]
    push_up_range(buf, 0, 1, 2, plan)
    assert buf[:2] == grid[1][:2]


def test_push_range_misuse(grid16):
    plan, grid = grid16
    buf = list(grid[4])
    with pytest.raises(ValueError):
        push_up_range(buf, 4, 7, 2, plan)  # right slots at stage 2
    with pytest.raises(ValueError):
        push_down_range(buf, 0, 3, 5, plan)
    with pytest.raises(ValueError):
        push_up_range(buf, 0, 8, 1, plan, paired=True)


def test_worked_example_round_trip(f13, plan13):
    for a in itertools.product(range(13), repeat=3):
        a = list(a)
        a0, a1, a2 = a
        buf = [(a0 + a1 + a2) % 13, (a0 - a1 + a2) % 13, (a0 + 5 * a1 - a2) % 13, 0]
        inv_tft(buf, 3, plan13)
        assert buf == a + [0]


@pytest.mark.parametrize("n", [2, 4, 16, 256])
def test_full_length_matches_idft(n):
    rng = random.Random(n)
    plan = make_plan(F, n)
    values = [rng.randrange(F.modulus) for _ in range(n)]
    expected = list(values)
    idft_inplace(expected, plan)
    buf = list(values)
    inv_tft(buf, n, plan)
    assert buf == expected


def test_n16_ell11_round_trip():
    rng = random.Random(7)
    plan = make_plan(F, 16)
    for _ in range(20):
        a = [rng.randrange(F.modulus) for _ in range(11)]
        assert inverse_tft(tft(a, plan), plan) == a


@pytest.mark.parametrize("p", range(1, 9))
def test_round_trip_sweep(p):
    n = 1 << p
    plan = make_plan(F, n)
    rng = random.Random(p)
    for ell in range(1, n + 1):
        a = [rng.randrange(F.modulus) for _ in range(ell)]
        buf = a + [0] * (n - ell)
        tft_forward(buf, ell, plan)
        buf[ell:] = [0] * (n - ell)
        inv_tft(buf, ell, plan)
        assert buf == a + [0] * (n - ell)


def test_zero_vector():
    plan = make_plan(F, 32)
    for ell in (1, 7, 32):
        buf = [0] * 32
        inv_tft(buf, ell, plan)
        assert buf == [0] * 32


@pytest.mark.parametrize("n", [2, 4, 8, 16, 32])
def test_row_snapshots_and_depth(n):
    plan = make_plan(F, n)
    rng = random.Random(n)
    for ell in range(1, n + 1):
        a = [rng.randrange(F.modulus) for _ in range(ell)]
        grid = butterfly_grid(a, plan.omega, n, F.modulus)
        buf = grid[-1][:ell] + [0] * (n - ell)
        events = []

        def check(event):
            events.append(event)
            for k in event.positions:
                assert buf[k] == grid[event.stage][k], (ell, event, k)

        inv_tft(buf, ell, plan, observer=check)
        assert buf == grid[0]
        assert max((e.depth for e in events), default=0) <= plan.p


@pytest.mark.parametrize("p", range(2, 10))
def test_cost_relations(p):
    n = 1 << p
    plan = make_plan(F, n)
    full_inverse = n * p // 2
    for ell in range(1, n + 1):
        buf = [1] * ell + [0] * (n - ell)
        fwd = OpCounter()
        tft_forward(buf, ell, plan, fwd)
        buf[ell:] = [0] * (n - ell)
        inv = OpCounter()
        inv_tft(buf, ell, plan, inv)
        assert inv.multiplications <= 2 * fwd.multiplications
        if ell <= n // 2:
            assert inv.multiplications < full_inverse
            assert inv.additions < 2 * full_inverse


def test_naive_retransform_is_not_inverse(f13):
    # the truncated transform at omega^-1 is not a rescaled inverse
    plan_inv = make_plan(f13, 4, omega=8)
    plan = make_plan(f13, 4)
    rng = random.Random(3)
    for _ in range(20):
        a = [rng.randrange(13) for _ in range(3)]
        if not any(a):
            continue
        c = tft(tft(a, plan), plan_inv)
        assert all(c != [k * x % 13 for x in a] for k in range(13))


def test_input_checks(plan13):
    with pytest.raises(ValueError):
        inv_tft([1, 2, 3, 4], 3, plan13)
    with pytest.raises(ValueError):
        inv_tft([1, 0, 0, 0], 0, plan13)
    with pytest.raises(ValueError):
        inv_tft([1, 0, 0], 1, plan13)


def test_dft_then_inverse_tft_at_full_length():
    plan = make_plan(F, 64)
    rng = random.Random(64)
    a = [rng.randrange(F.modulus) for _ in range(64)]
    buf = list(a)
    dft_inplace(buf, plan)
    inv_tft(buf, 64, plan)
    assert buf == a
