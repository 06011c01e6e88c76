import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rigtrop.boxball import (
    asymptotic_solitons,
    ball_count,
    ball_move_K,
    energy_Ers,
    evolve_T1inf,
    evolve_Trs,
    pad,
    parse_state,
    path_to_state,
    render,
    state_to_path,
)
from rigtrop.errors import NonConvergence
from rigtrop.reference_data import BOXBALL_SOLITONS, BOXBALL_STATES


def test_golden_evolution():
    state = parse_state(BOXBALL_STATES[0])
    for line in BOXBALL_STATES:
        assert render(state) == line
        state = evolve_T1inf(state, 4)


def test_ball_move_extends_the_tail():
    assert ball_move_K([2, 1], 2) == [1, 2]
    assert ball_move_K([2, 2], 2) == [1, 1, 2, 2]


def test_render_and_parse_round_trip():
    assert render([1, 3, 1, 2]) == ".3.2"
    assert parse_state(".3.2") == [1, 3, 1, 2]


def test_T1inf_is_T1s_for_large_s():
    state = parse_state(BOXBALL_STATES[0])
    p = state_to_path(state) + ((1,),) * 10
    q, _ = evolve_Trs(p, 1, 20, 4)
    assert render(path_to_state(q)).rstrip(".") == BOXBALL_STATES[1].rstrip(".")


def test_T11_is_a_shift():
    p = ((2,), (1,), (3,), (1,))
    q, carriers = evolve_Trs(p, 1, 1, 3)
    assert q == ((1,), (2,), (1,), (3,))
    assert carriers[-1] == ((1,),)


def test_golden_solitons():
    sol = asymptotic_solitons(state_to_path(parse_state(BOXBALL_STATES[0])), 4)
    assert tuple(sol) == BOXBALL_SOLITONS


def test_equal_speed_solitons_stay_separate():
    assert asymptotic_solitons(((2,), (3,)), 3) == [(2,), (3,)]


def test_no_balls():
    assert asymptotic_solitons(((1,), (1,)), 3) == []


def test_nonconvergence():
    with pytest.raises(NonConvergence):
        asymptotic_solitons(((3,), (2,), (1,), (3,)), 3, max_steps=0)


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(1, 4), min_size=1, max_size=12))
def test_T1inf_conserves_balls(state):
    after = evolve_T1inf(state, 4)
    assert sorted(x for x in after if x != 1) == sorted(x for x in state if x != 1)
    assert ball_count(state_to_path(after)) == ball_count(state_to_path(state))


@settings(max_examples=40, deadline=None)
@given(st.lists(st.lists(st.integers(1, 3), min_size=1, max_size=2), min_size=1, max_size=4), st.integers(1, 3))
def test_energy_is_nonnegative_and_grows_with_s(raw, s):
    p = tuple(tuple(sorted(w)) for w in raw)
    assert 0 <= energy_Ers(p, 1, s, 3) <= energy_Ers(p, 1, s + 1, 3)


def test_pad():
    assert pad(((2,),), 2) == ((2,), (1,), (1,))
